"""Explicit graded minimal free resolutions of k over S = k[x,y]/M.

The main-case resolution is assembled from three column templates
(the maps into a rank-1 target, an {e_x,e_y} pair, and a full
{e_f_1..e_f_{r+1}} stage-two module).  From stage four on, every module
is a direct sum of copies of F1, F2 and F3 and the next differential is
block diagonal in instantiated templates.  The five degenerate ideal
types get their own closed-form constructions.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classify import IdealClass, classify
from .monomials import Monomial, MonomialIdeal, X, Y


class WrongClass(ValueError):
    """Construction applied to an ideal outside its regime."""


class StageTooSmall(ValueError):
    pass


class ShapeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorLabel:
    """Structured generator name: template kind, indices, creation path."""

    kind: str
    index: tuple[int, ...] = ()
    stage: int = 0
    block: int = 0
    text: Optional[str] = None  # set on JSON reload

    def __str__(self) -> str:
        if self.text is not None:
            return self.text
        base = {
            "e1": "e1",
            "ex": "e_x",
            "ey": "e_y",
            "f": f"f{self.index[0] if self.index else ''}",
            "c_x": f"c{self.index[0]}^x" if self.index else "c^x",
            "c_y": f"c{self.index[0]}^y" if self.index else "c^y",
            "d": f"d{self.index[0]}" if self.index else "d",
            "h_x": f"h{self.index[0]}^x" if self.index else "h^x",
            "h_y": f"h{self.index[0]}^y" if self.index else "h^y",
            "k": f"k{self.index[0]},{self.index[1]}" if len(self.index) == 2 else "k",
        }.get(self.kind, self.kind)
        if self.stage >= 5:
            return f"{base}@{self.stage}.{self.block}"
        return base


@dataclass(frozen=True)
class GradedFreeModule:
    """Ordered labeled generators, each with a bidegree twist."""

    generators: tuple[tuple[GeneratorLabel, tuple[int, int]], ...]

    @property
    def rank(self) -> int:
        return len(self.generators)

    def bidegree(self, i: int) -> tuple[int, int]:
        return self.generators[i][1]

    def twist(self, i: int) -> int:
        dx, dy = self.generators[i][1]
        return dx + dy


@dataclass(frozen=True)
class Differential:
    """Sparse matrix of signed monomials between graded free modules."""

    source: GradedFreeModule
    target: GradedFreeModule
    entries: tuple[tuple[int, int, int, Monomial], ...]  # (row, col, sign, mono)
    ring: MonomialIdeal

    def columns(self) -> list[list[tuple[int, int, Monomial]]]:
        cols: list[list[tuple[int, int, Monomial]]] = [[] for _ in range(self.source.rank)]
        for row, col, sign, mono in self.entries:
            cols[col].append((row, sign, mono))
        return cols

    def is_homogeneous(self) -> bool:
        for row, col, _sign, mono in self.entries:
            sx, sy = self.source.bidegree(col)
            tx, ty = self.target.bidegree(row)
            if (sx, sy) != (tx + mono.xdeg, ty + mono.ydeg):
                return False
        return True

    def is_minimal(self) -> bool:
        """No unit entries and every entry survives in S."""
        return all(
            mono.degree >= 1 and not self.ring.contains(mono)
            for _r, _c, _s, mono in self.entries
        )

    def dense_strings(self) -> list[list[str]]:
        grid = [["0"] * self.source.rank for _ in range(self.target.rank)]
        for row, col, sign, mono in self.entries:
            grid[row][col] = ("-" if sign < 0 else "") + str(mono)
        return grid


@dataclass(frozen=True)
class ComposeProduct:
    """Matrix of residue terms from composing two differentials."""

    shape: tuple[int, int]
    entries: dict[tuple[int, int], tuple[tuple[int, Monomial], ...]]

    @property
    def is_zero(self) -> bool:
        return not self.entries


def compose_check(d_hi: Differential, d_lo: Differential) -> ComposeProduct:
    """Reduce d_lo o d_hi over S; the complex property holds iff zero."""
    if d_lo.source is not d_hi.target and d_lo.source != d_hi.target:
        raise ShapeMismatch("source of lower map must equal target of higher map")
    lo_cols = d_lo.columns()
    ring = d_lo.ring
    out: dict[tuple[int, int], tuple[tuple[int, Monomial], ...]] = {}
    hi_cols = d_hi.columns()
    for col, entries in enumerate(hi_cols):
        acc: dict[tuple[int, Monomial], int] = {}
        for mid, sign, mono in entries:
            for row, sign2, mono2 in lo_cols[mid]:
                prod = mono * mono2
                if ring.contains(prod):
                    continue
                key = (row, prod)
                acc[key] = acc.get(key, 0) + sign * sign2
        by_cell: dict[int, list[tuple[int, Monomial]]] = {}
        for (row, prod), coeff in acc.items():
            if coeff:
                by_cell.setdefault(row, []).append((coeff, prod))
        for row, terms in by_cell.items():
            out[(row, col)] = tuple(sorted(terms, key=lambda t: (t[1].xdeg, t[1].ydeg)))
    return ComposeProduct((d_lo.target.rank, d_hi.source.rank), out)


@dataclass(frozen=True)
class Block:
    kind: str  # "F0", "F1", "F2", "F3"
    base: tuple[int, int]
    start: int
    size: int


@dataclass(frozen=True)
class InductiveCoeffs:
    """Type V only: per-stage coefficient sequences for the complete
    intersection resolution.  fs[i][j-1] and gs[i][j] are signed monomials."""

    fs: dict[int, list[tuple[int, Monomial]]]
    gs: dict[int, dict[int, tuple[int, Monomial]]]


@dataclass
class Resolution:
    ring: MonomialIdeal
    ideal_class: IdealClass
    modules: list[GradedFreeModule]
    differentials: list[Differential]
    decomposition: list[tuple[int, int, int, int]]  # (stage, u, v, w)
    blocks: Optional[list[tuple[Block, ...]]] = None
    coeffs: Optional[InductiveCoeffs] = None

    @property
    def stages(self) -> int:
        return len(self.modules) - 1

    def total_betti_numbers(self) -> list[int]:
        return [m.rank for m in self.modules]


def _main_data(ideal: MonomialIdeal) -> tuple[int, list[int], list[int], int]:
    gens = ideal.generators
    r = len(gens)
    a = [g.xdeg for g in gens]
    b = [g.ydeg for g in gens]
    case = 1 if a[-1] >= 1 else 2
    return r, a, b, case


def syzygy_generators_Mx(ideal: MonomialIdeal) -> list[list[tuple[int, int, Monomial]]]:
    """Generators of the first syzygy module of the colon ideal 0:(x),
    as columns over the basis {e_f_1, ..., e_f_r}: multiplication-by-x
    columns followed by the y-gap columns."""
    if not classify(ideal).is_main:
        raise WrongClass(f"{ideal} is degenerate")
    r, a, b, case = _main_data(ideal)
    cols: list[list[tuple[int, int, Monomial]]] = []
    top = r if case == 1 else r - 1
    for i in range(top):
        cols.append([(i, 1, X)])
    for i in range(r - 1):
        cols.append([(i, 1, Monomial(0, b[i + 1] - b[i]))])
    return cols


class _MainBuilder:
    """Stage-by-stage fold assembling the main-case resolution."""

    def __init__(self, ideal: MonomialIdeal, ideal_class: IdealClass):
        self.ideal = ideal
        self.ideal_class = ideal_class
        self.r, self.a, self.b, self.case = _main_data(ideal)
        e1 = (GeneratorLabel("e1"), (0, 0))
        self.modules = [GradedFreeModule((e1,))]
        self.differentials: list[Differential] = []
        self.blocks: list[tuple[Block, ...]] = [(Block("F0", (0, 0), 0, 1),)]
        self.decomposition: list[tuple[int, int, int, int]] = []

    # template emitters; each appends generators + columns and returns a Block
    def _emit_f1(self, gens, cols, target: int, base, stage, blk, idx):
        start = len(gens)
        kx, ky = ("ex", "ey") if stage == 1 else ("h_x", "h_y")
        gens.append((GeneratorLabel(kx, idx, stage, blk), (base[0] + 1, base[1])))
        cols.append([(target, 1, X)])
        gens.append((GeneratorLabel(ky, idx, stage, blk), (base[0], base[1] + 1)))
        cols.append([(target, 1, Y)])
        return Block("F1", base, start, 2)

    def _emit_f2(self, gens, cols, px: int, py: int, base, stage, blk, jdx):
        r, a, b, case = self.r, self.a, self.b, self.case
        start = len(gens)
        kind = "f" if stage == 2 else "k"
        for i in range(1, r + 1):
            idx = (i,) if stage == 2 else (i, *jdx)
            gens.append(
                (GeneratorLabel(kind, idx, stage, blk), (base[0] + a[i - 1], base[1] + b[i - 1]))
            )
            if case == 1 or i < r:
                cols.append([(px, 1, Monomial(a[i - 1] - 1, b[i - 1]))])
            else:
                cols.append([(py, 1, Monomial(0, b[r - 1] - 1))])
        idx = (r + 1,) if stage == 2 else (r + 1, *jdx)
        gens.append((GeneratorLabel(kind, idx, stage, blk), (base[0] + 1, base[1] + 1)))
        cols.append([(px, -1, Y), (py, 1, X)])
        return Block("F2", base, start, r + 1)

    def _emit_f3(self, gens, cols, f: list[int], base, stage, blk):
        r, a, b, case = self.r, self.a, self.b, self.case
        start = len(gens)
        for i in range(1, r + 1):
            gens.append(
                (GeneratorLabel("c_x", (i,), stage, blk), (base[0] + a[i - 1] + 1, base[1] + b[i - 1]))
            )
            col = [(f[i - 1], 1, X)]
            if case == 2 and i == r:
                col.append((f[r], -1, Monomial(0, b[r - 1] - 1)))
            cols.append(col)
        for i in range(1, r + 1):
            gens.append(
                (GeneratorLabel("c_y", (i,), stage, blk), (base[0] + a[i - 1], base[1] + b[i - 1] + 1))
            )
            if case == 2 and i == r:
                cols.append([(f[r - 1], 1, Y)])
            else:
                cols.append([(f[i - 1], 1, Y), (f[r], 1, Monomial(a[i - 1] - 1, b[i - 1]))])
        for i in range(1, r):
            gens.append(
                (GeneratorLabel("d", (i,), stage, blk), (base[0] + a[i - 1], base[1] + b[i]))
            )
            cols.append([(f[r], 1, Monomial(a[i - 1] - 1, b[i] - 1))])
        return Block("F3", base, start, 3 * r - 1)

    def step(self) -> None:
        r, a, b = self.r, self.a, self.b
        stage = len(self.modules)
        prev_blocks = self.blocks[-1]
        gens: list[tuple[GeneratorLabel, tuple[int, int]]] = []
        cols: list[list[tuple[int, int, Monomial]]] = []
        new_blocks: list[Block] = []
        prev = self.modules[-1]
        blk = 0
        u = v = w = 0
        f1_count = 0
        # F1 template instances first
        for pb in prev_blocks:
            if pb.kind == "F0":
                new_blocks.append(self._emit_f1(gens, cols, pb.start, pb.base, stage, blk, ()))
                blk += 1
                u += 1
            elif pb.kind == "F3":
                for j in range(1, r):
                    tgt = pb.start + 2 * r + (j - 1)
                    base = prev.bidegree(tgt)
                    f1_count += 1
                    idx = (j,) if stage == 4 else (f1_count,)
                    new_blocks.append(self._emit_f1(gens, cols, tgt, base, stage, blk, idx))
                    blk += 1
                    u += 1
        # then F2 template instances
        f2_count = 0
        for pb in prev_blocks:
            if pb.kind == "F1":
                f2_count += 1
                jdx = () if stage == 2 else (f2_count,)
                new_blocks.append(
                    self._emit_f2(gens, cols, pb.start, pb.start + 1, pb.base, stage, blk, jdx)
                )
                blk += 1
                v += 1
            elif pb.kind == "F3":
                for j in range(1, r + 1):
                    px = pb.start + (j - 1)
                    py = pb.start + r + (j - 1)
                    base = (pb.base[0] + a[j - 1], pb.base[1] + b[j - 1])
                    f2_count += 1
                    jdx = (j,) if stage == 4 else (f2_count,)
                    new_blocks.append(self._emit_f2(gens, cols, px, py, base, stage, blk, jdx))
                    blk += 1
                    v += 1
        # then F3 template instances
        for pb in prev_blocks:
            if pb.kind == "F2":
                f = list(range(pb.start, pb.start + r + 1))
                new_blocks.append(self._emit_f3(gens, cols, f, pb.base, stage, blk))
                blk += 1
                w += 1
        module = GradedFreeModule(tuple(gens))
        entries = tuple(
            (row, col, sign, mono)
            for col, column in enumerate(cols)
            for row, sign, mono in column
        )
        self.differentials.append(Differential(module, prev, entries, self.ideal))
        self.modules.append(module)
        self.blocks.append(tuple(new_blocks))
        if stage >= 4:
            self.decomposition.append((stage, u, v, w))

    def resolution(self) -> Resolution:
        return Resolution(
            self.ideal,
            self.ideal_class,
            self.modules,
            self.differentials,
            self.decomposition,
            self.blocks,
        )


def _build_main(ideal: MonomialIdeal, ideal_class: IdealClass, stages: int) -> Resolution:
    builder = _MainBuilder(ideal, ideal_class)
    for _ in range(stages):
        builder.step()
    return builder.resolution()


def _require_main(ideal: MonomialIdeal) -> IdealClass:
    cls = classify(ideal)
    if not cls.is_main:
        raise WrongClass(f"{ideal} is degenerate ({cls.slug})")
    return cls


def build_d1(ideal: MonomialIdeal) -> Differential:
    cls = _require_main(ideal)
    return _build_main(ideal, cls, 1).differentials[0]


def build_d2(ideal: MonomialIdeal) -> Differential:
    cls = _require_main(ideal)
    return _build_main(ideal, cls, 2).differentials[1]


def build_d3(ideal: MonomialIdeal) -> Differential:
    cls = _require_main(ideal)
    return _build_main(ideal, cls, 3).differentials[2]


def build_d4(ideal: MonomialIdeal) -> tuple[Differential, tuple[int, int, int]]:
    cls = _require_main(ideal)
    res = _build_main(ideal, cls, 4)
    stage, u, v, w = res.decomposition[0]
    assert stage == 4
    return res.differentials[3], (u, v, w)


def extend_resolution(res: Resolution, n: int) -> Resolution:
    """Continue a main-case resolution through stage n."""
    if not res.ideal_class.is_main:
        raise WrongClass("extend_resolution only applies to main-case resolutions")
    if n < 4:
        raise StageTooSmall("extension starts at stage 4")
    if res.blocks is None:
        raise ValueError("resolution lacks block structure (loaded from JSON?)")
    if res.stages < 4:
        raise StageTooSmall("resolution must be built through stage 4 first")
    builder = _MainBuilder(res.ring, res.ideal_class)
    builder.modules = list(res.modules)
    builder.differentials = list(res.differentials)
    builder.blocks = list(res.blocks)
    builder.decomposition = list(res.decomposition)
    while len(builder.modules) - 1 < n:
        builder.step()
    return builder.resolution()


def _mk(swap: bool):
    def make(p: int, q: int) -> Monomial:
        return Monomial(q, p) if swap else Monomial(p, q)

    return make


def build_degenerate(ideal: MonomialIdeal, n: int) -> Resolution:
    """The appendix resolution of a degenerate ideal through stage n."""
    cls = classify(ideal)
    if cls.is_main:
        raise WrongClass(f"{ideal} is in the main case")
    if n < 0:
        raise StageTooSmall("need n >= 0")
    gens = ideal.generators
    e1 = (GeneratorLabel("e1"), (0, 0))
    modules = [GradedFreeModule((e1,))]
    diffs: list[Differential] = []
    coeffs: Optional[InductiveCoeffs] = None

    def add_stage(labels_bidegs, columns):
        prev = modules[-1]
        module = GradedFreeModule(tuple(labels_bidegs))
        entries = tuple(
            (row, col, sign, mono)
            for col, column in enumerate(columns)
            for row, sign, mono in column
        )
        diffs.append(Differential(module, prev, entries, ideal))
        modules.append(module)

    def add_zero_stages():
        while len(modules) - 1 < n:
            add_stage([], [])

    def lab(name: str, stage: int) -> GeneratorLabel:
        return GeneratorLabel(name, (), stage, 0, text=f"{name}({stage})" if stage >= 2 else None)

    if cls is IdealClass.TYPE_III:
        add_zero_stages()
    elif cls is IdealClass.TYPE_I:
        # S is a polynomial ring in the surviving variable
        var = Y if gens[0] == X else X
        if n >= 1:
            add_stage(
                [(GeneratorLabel("ex" if var == X else "ey"), (var.xdeg, var.ydeg))],
                [[(0, 1, var)]],
            )
        add_zero_stages()
    elif cls is IdealClass.TYPE_IV:
        # S = k[v]/(v^e): 1x1 matrices alternating (v), (v^{e-1})
        if gens[0].xdeg >= 2:
            v, e = X, gens[0].xdeg
        else:
            v, e = Y, gens[1].ydeg
        vbar = Monomial(v.xdeg * (e - 1), v.ydeg * (e - 1))
        bideg = (0, 0)
        for i in range(1, n + 1):
            m = v if i % 2 == 1 else vbar
            bideg = (bideg[0] + m.xdeg, bideg[1] + m.ydeg)
            add_stage([(lab("g", i), bideg)], [[(0, 1, m)]])
    elif cls is IdealClass.TYPE_II:
        g = gens[0]
        swap = g.xdeg == 0
        mk = _mk(swap)
        a, b = (g.ydeg, g.xdeg) if swap else (g.xdeg, g.ydeg)
        x_, y_, m_ = mk(1, 0), mk(0, 1), mk(a - 1, b)
        if n >= 1:
            add_stage(
                [(GeneratorLabel("ex"), (x_.xdeg, x_.ydeg)), (GeneratorLabel("ey"), (y_.xdeg, y_.ydeg))],
                [[(0, 1, x_)], [(0, 1, y_)]],
            )
        # column patterns for stages 2,3,4; stages >= 5 repeat with period 2.
        # The second basis element of F4 carries a minus sign so that both
        # composites with the period-2 neighbors vanish in all characteristics.
        patterns = {
            2: [[(0, -1, y_), (1, 1, x_)], [(0, 1, m_)]],
            3: [[(0, 1, m_), (1, 1, y_)], [(1, 1, x_)]],
            4: [[(0, -1, x_), (1, 1, y_)], [(1, -1, m_)]],
        }
        for i in range(2, n + 1):
            pat = patterns[i] if i <= 4 else patterns[3 if i % 2 == 1 else 4]
            prev = modules[-1]
            labels = []
            columns = []
            for j, col in enumerate(pat):
                row0, _s, mono0 = col[0]
                tb = prev.bidegree(row0)
                labels.append((lab(f"g{j + 1}", i), (tb[0] + mono0.xdeg, tb[1] + mono0.ydeg)))
                columns.append(col)
            add_stage(labels, columns)
    else:  # TYPE_V
        a, b = gens[0].xdeg, gens[1].ydeg
        xa, yb = Monomial(a, 0), Monomial(0, b)
        if n >= 1:
            add_stage(
                [(GeneratorLabel("ex"), (1, 0)), (GeneratorLabel("ey"), (0, 1))],
                [[(0, 1, X)], [(0, 1, Y)]],
            )
        fs: dict[int, list[tuple[int, Monomial]]] = {}
        gs: dict[int, dict[int, tuple[int, Monomial]]] = {}
        fs[2] = [(1, Monomial(a - 1, 0)), (1, Monomial(0, b - 1)), (1, X)]
        gs[2] = {3: (-1, Y)}
        for i in range(3, n + 1):
            pf, pg = fs[i - 1], gs[i - 1]
            f: list[tuple[int, Monomial]] = [
                (1, xa / pf[0][1]),
                (1, yb / pf[1][1]),
            ]
            g: dict[int, tuple[int, Monomial]] = {}
            for j in range(3, i + 1):
                g[j] = pg[j]
                sgn, mono = pf[j - 3]
                f.append((-sgn, mono))
            g[i + 1] = pf[i - 1]
            sgn, mono = pf[i - 2]
            f.append((-sgn, mono))
            fs[i], gs[i] = f, g
        for i in range(2, n + 1):
            prev = modules[-1]
            labels = []
            columns = []
            for j in range(1, i + 2):
                fsgn, fmono = fs[i][j - 1]
                if j <= 2:
                    col = [(j - 1, fsgn, fmono)]
                    tb = prev.bidegree(j - 1)
                    bideg = (tb[0] + fmono.xdeg, tb[1] + fmono.ydeg)
                elif j <= i:
                    gsgn, gmono = gs[i][j]
                    col = [(j - 3, gsgn, gmono), (j - 1, fsgn, fmono)]
                    tb = prev.bidegree(j - 3)
                    bideg = (tb[0] + gmono.xdeg, tb[1] + gmono.ydeg)
                else:  # j == i + 1
                    gsgn, gmono = gs[i][j]
                    col = [(i - 2, gsgn, gmono), (i - 1, fsgn, fmono)]
                    tb = prev.bidegree(i - 2)
                    bideg = (tb[0] + gmono.xdeg, tb[1] + gmono.ydeg)
                labels.append((lab(f"e{j}", i), bideg))
                columns.append(col)
            add_stage(labels, columns)
        coeffs = InductiveCoeffs(fs, gs)
    return Resolution(ideal, cls, modules, diffs, [], None, coeffs)


def build_resolution(ideal: MonomialIdeal, stages: int) -> Resolution:
    """Resolution of k over k[x,y]/M through the requested stage."""
    cls = classify(ideal)
    if cls.is_main:
        return _build_main(ideal, cls, stages)
    return build_degenerate(ideal, stages)


def resolution_to_json(res: Resolution) -> dict:
    return {
        "ideal": [[g.xdeg, g.ydeg] for g in res.ring.generators],
        "class": res.ideal_class.slug,
        "modules": [
            {
                "rank": m.rank,
                "generators": [
                    {"label": str(label), "bidegree": [dx, dy]}
                    for label, (dx, dy) in m.generators
                ],
            }
            for m in res.modules
        ],
        "differentials": [
            {
                "entries": [
                    {"row": row, "col": col, "sign": sign, "monomial": [mono.xdeg, mono.ydeg]}
                    for row, col, sign, mono in d.entries
                ]
            }
            for d in res.differentials
        ],
        "decomposition": [
            {"stage": stage, "u": u, "v": v, "w": w}
            for stage, u, v, w in res.decomposition
        ],
    }


def resolution_from_json(data: dict) -> Resolution:
    from .monomials import normalize_ideal

    ideal = normalize_ideal([Monomial(a, b) for a, b in data["ideal"]])
    cls = IdealClass.from_slug(data["class"])
    modules = [
        GradedFreeModule(
            tuple(
                (GeneratorLabel("loaded", text=g["label"]), tuple(g["bidegree"]))
                for g in m["generators"]
            )
        )
        for m in data["modules"]
    ]
    diffs = []
    for i, d in enumerate(data["differentials"]):
        entries = tuple(
            (e["row"], e["col"], e["sign"], Monomial(*e["monomial"]))
            for e in d["entries"]
        )
        diffs.append(Differential(modules[i + 1], modules[i], entries, ideal))
    decomposition = [
        (d["stage"], d["u"], d["v"], d["w"]) for d in data.get("decomposition", [])
    ]
    return Resolution(ideal, cls, modules, diffs, decomposition, None)
