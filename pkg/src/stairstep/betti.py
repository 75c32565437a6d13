"""Betti sequences, graded Betti tables and Poincare-Betti series."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classify import IdealClass
from .resolution import Resolution


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{i,d}, nonzero entries only.

    ``max_degree`` is the window the table is complete on; None means
    complete in all internal degrees for stages up to ``max_stage``.
    """

    entries: dict[tuple[int, int], int]
    max_stage: int
    max_degree: Optional[int] = None

    def total(self, i: int) -> int:
        return sum(v for (j, _d), v in self.entries.items() if j == i)

    def totals(self) -> list[int]:
        return [self.total(i) for i in range(self.max_stage + 1)]


@dataclass(frozen=True)
class PoincareSeries:
    """Rational generating function, coefficients low degree first."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __str__(self) -> str:
        num, den = _poly_str(self.numerator), _poly_str(self.denominator)
        if den == "1":
            return num
        if len([c for c in self.numerator if c]) > 1:
            num = f"({num})"
        return f"{num}/({den})"


def _poly_str(coeffs: tuple[int, ...]) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "1" if k == 0 else ("z" if k == 1 else f"z^{k}")
        mag = abs(c)
        body = mono if (mag == 1 and k > 0) else (str(mag) if k == 0 else f"{mag}{mono}")
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+" if c > 0 else "-") + body)
    return "".join(parts) if parts else "0"


def total_betti(ideal_class: IdealClass, r: int, n: int) -> list[int]:
    """Total Betti numbers beta_0..beta_n of k over S."""
    if n < 0:
        raise ValueError("need n >= 0")
    if ideal_class.is_main:
        if r < 2:
            raise ValueError("main case needs r >= 2")
        seq = [1, 2]
        while len(seq) < n + 1:
            seq.append(seq[-1] + (r - 1) * seq[-2])
        return seq[: n + 1]
    if ideal_class is IdealClass.TYPE_I:
        return ([1, 1] + [0] * n)[: n + 1]
    if ideal_class is IdealClass.TYPE_II:
        return ([1] + [2] * n)[: n + 1]
    if ideal_class is IdealClass.TYPE_III:
        return ([1] + [0] * n)[: n + 1]
    if ideal_class is IdealClass.TYPE_IV:
        return [1] * (n + 1)
    return list(range(1, n + 2))  # TYPE_V


def poincare_series(ideal_class: IdealClass, r: int = 0) -> PoincareSeries:
    if ideal_class.is_main:
        if r < 2:
            raise ValueError("main case needs r >= 2")
        return PoincareSeries((1, 1), (1, -1, 1 - r))
    return {
        IdealClass.TYPE_I: PoincareSeries((1, 1), (1,)),
        IdealClass.TYPE_II: PoincareSeries((1, 1), (1, -1)),
        IdealClass.TYPE_III: PoincareSeries((1,), (1,)),
        IdealClass.TYPE_IV: PoincareSeries((1,), (1, -1)),
        IdealClass.TYPE_V: PoincareSeries((1,), (1, -2, 1)),
    }[ideal_class]


def series_expand(series: PoincareSeries, n: int) -> list[int]:
    """First n+1 power-series coefficients, exact integer arithmetic."""
    den = series.denominator
    if not den or den[0] != 1:
        raise ValueError("denominator must have constant term 1")
    num = series.numerator
    out: list[int] = []
    for k in range(n + 1):
        c = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            c -= den[j] * out[k - j]
        out.append(c)
    return out


def graded_betti(res: Resolution) -> BettiTable:
    entries: dict[tuple[int, int], int] = {}
    for i, module in enumerate(res.modules):
        for _label, (dx, dy) in module.generators:
            key = (i, dx + dy)
            entries[key] = entries.get(key, 0) + 1
    return BettiTable(entries, max_stage=len(res.modules) - 1, max_degree=None)


def render_betti_table(table: BettiTable) -> str:
    """Macaulay2-style text layout: row j, column i holds beta_{i, i+j}."""
    cols = range(table.max_stage + 1)
    max_row = max((d - i for (i, d) in table.entries), default=0)
    lines = ["      " + " ".join(str(i) for i in cols)]
    lines.append("total: " + " ".join(str(table.total(i)) for i in cols))
    for j in range(max_row + 1):
        cells = [
            str(table.entries[(i, i + j)]) if (i, i + j) in table.entries else "."
            for i in cols
        ]
        lines.append(f"{j}: " + " ".join(cells))
    return "\n".join(lines)


def betti_csv(table: BettiTable) -> str:
    lines = ["i,d,beta"]
    for (i, d), v in sorted(table.entries.items()):
        lines.append(f"{i},{d},{v}")
    return "\n".join(lines)


def betti_json(table: BettiTable) -> dict:
    return {
        "entries": [
            {"i": i, "d": d, "beta": v} for (i, d), v in sorted(table.entries.items())
        ]
    }
