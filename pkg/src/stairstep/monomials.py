"""Exact arithmetic for monomials in two variables and monomial ideals.

Everything here is immutable and pure: monomials are exponent pairs,
ideals are minimal generating sets kept in staircase order
(x-exponents strictly decreasing, y-exponents strictly increasing).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional


class EmptyIdeal(ValueError):
    """No generators were supplied (the zero ideal is rejected)."""


class UnitIdeal(ValueError):
    """The unit monomial 1 appeared among the generators."""


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


@dataclass(frozen=True, order=True)
class Monomial:
    """x^xdeg * y^ydeg with nonnegative exponents."""

    xdeg: int
    ydeg: int

    def __post_init__(self) -> None:
        if self.xdeg < 0 or self.ydeg < 0:
            raise ValueError(f"negative exponent in {(self.xdeg, self.ydeg)}")

    @property
    def degree(self) -> int:
        return self.xdeg + self.ydeg

    @property
    def is_unit(self) -> bool:
        return self.xdeg == 0 and self.ydeg == 0

    def divides(self, other: "Monomial") -> bool:
        return self.xdeg <= other.xdeg and self.ydeg <= other.ydeg

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.xdeg + other.xdeg, self.ydeg + other.ydeg)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(self.xdeg - other.xdeg, self.ydeg - other.ydeg)

    def swapped(self) -> "Monomial":
        return Monomial(self.ydeg, self.xdeg)

    def __str__(self) -> str:
        if self.is_unit:
            return "1"
        parts = []
        if self.xdeg == 1:
            parts.append("x")
        elif self.xdeg > 1:
            parts.append(f"x^{self.xdeg}")
        if self.ydeg == 1:
            parts.append("y")
        elif self.ydeg > 1:
            parts.append(f"y^{self.ydeg}")
        return "*".join(parts)


ONE = Monomial(0, 0)
X = Monomial(1, 0)
Y = Monomial(0, 1)

# The image of a monomial in S = k[x,y]/M: either a standard monomial
# or zero (represented as None).
ResidueElement = Optional[Monomial]


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal of k[x,y] given by its minimal generating set.

    Generators are ordered a_1 > a_2 > ... > a_r >= 0 with
    0 <= b_1 < b_2 < ... < b_r.  The public constructor
    :func:`normalize_ideal` rejects the zero and unit ideals; colon
    ideals may carry them via the internal ``_raw`` constructor.
    """

    generators: tuple[Monomial, ...]

    @staticmethod
    def _raw(generators: Iterable[Monomial]) -> "MonomialIdeal":
        return MonomialIdeal(tuple(generators))

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_unit

    @property
    def max_generator_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def normal_form(self, m: Monomial) -> ResidueElement:
        return None if self.contains(m) else m

    def swapped(self) -> "MonomialIdeal":
        return MonomialIdeal._raw(
            sorted((g.swapped() for g in self.generators), key=lambda g: -g.xdeg)
        )

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def _minimalize(raw: Iterable[Monomial]) -> tuple[Monomial, ...]:
    gens = sorted(set(raw), key=lambda m: (m.xdeg, m.ydeg))
    kept: list[Monomial] = []
    for m in gens:
        if not any(g.divides(m) for g in kept if g != m):
            kept = [g for g in kept if not m.divides(g)]
            kept.append(m)
    kept.sort(key=lambda m: -m.xdeg)
    return tuple(kept)


def normalize_ideal(raw: Iterable[Monomial]) -> MonomialIdeal:
    """Minimal generating set, in staircase order."""
    gens = list(raw)
    if not gens:
        raise EmptyIdeal("an ideal needs at least one generator")
    if any(m.is_unit for m in gens):
        raise UnitIdeal("the unit ideal is not a proper ideal")
    return MonomialIdeal._raw(_minimalize(gens))


def is_in_ideal(m: Monomial, ideal: MonomialIdeal) -> bool:
    return ideal.contains(m)


def normal_form(m: Monomial, ideal: MonomialIdeal) -> ResidueElement:
    return ideal.normal_form(m)


def colon_x(ideal: MonomialIdeal) -> MonomialIdeal:
    """Minimal generating set of the annihilator 0:(x) in S = k[x,y]/M.

    May be the zero ideal (for M = (y^b)) or the unit ideal (for M = (x)).
    """
    gens = [Monomial(g.xdeg - 1, g.ydeg) for g in ideal.generators if g.xdeg > 0]
    return MonomialIdeal._raw(_minimalize(gens)) if gens else MonomialIdeal._raw(())


def colon_y(ideal: MonomialIdeal) -> MonomialIdeal:
    """Minimal generating set of 0:(y) in S; mirror of :func:`colon_x`."""
    gens = [Monomial(g.xdeg, g.ydeg - 1) for g in ideal.generators if g.ydeg > 0]
    return MonomialIdeal._raw(_minimalize(gens)) if gens else MonomialIdeal._raw(())


@lru_cache(maxsize=None)
def standard_monomials(ideal: MonomialIdeal, d: int) -> tuple[Monomial, ...]:
    """k-basis of the degree-d graded piece of S, highest x-power first."""
    if d < 0:
        return ()
    out = []
    for i in range(d, -1, -1):
        m = Monomial(i, d - i)
        if not ideal.contains(m):
            out.append(m)
    return tuple(out)


@dataclass(frozen=True)
class StaircaseOutline:
    """Inner corners of the staircase plus the boundary polyline."""

    corners: tuple[tuple[int, int], ...]
    outline: tuple[tuple[int, int], ...]
    xmax: int
    ymax: int


def staircase_outline(ideal: MonomialIdeal) -> StaircaseOutline:
    gens = ideal.generators
    corners = tuple((g.xdeg, g.ydeg) for g in gens)
    xmax = gens[0].xdeg + 2
    ymax = gens[-1].ydeg + 2
    path: list[tuple[int, int]] = [(xmax, gens[0].ydeg)]
    for i, g in enumerate(gens):
        path.append((g.xdeg, g.ydeg))
        if i + 1 < len(gens):
            path.append((g.xdeg, gens[i + 1].ydeg))
    path.append((gens[-1].xdeg, ymax))
    return StaircaseOutline(corners, tuple(path), xmax, ymax)


def parse_monomial(text: str, base_offset: int = 0) -> Monomial:
    """Parse ``x^3*y``, ``x3y``, ``y^4``, ``1`` and friends."""
    xd = yd = 0
    i = 0
    n = len(text)
    saw_factor = False
    while i < n:
        ch = text[i]
        if ch in " \t*":
            i += 1
            continue
        if ch == "1" and not saw_factor and xd == yd == 0:
            # the unit monomial; only valid standing alone
            rest = text[i + 1 :].strip(" \t*")
            if rest:
                raise ParseError("unexpected input after '1'", base_offset + i + 1)
            return ONE
        if ch in "xy":
            i += 1
            if i < n and text[i] == "^":
                i += 1
                if i >= n or not text[i].isdigit():
                    raise ParseError("expected digits after '^'", base_offset + i)
            j = i
            while j < n and text[j].isdigit():
                j += 1
            exp = int(text[i:j]) if j > i else 1
            if ch == "x":
                xd += exp
            else:
                yd += exp
            i = j
            saw_factor = True
            continue
        raise ParseError(f"unexpected character {ch!r}", base_offset + i)
    if not saw_factor:
        raise ParseError("empty monomial", base_offset)
    return Monomial(xd, yd)


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse a comma-separated generator list and normalize it."""
    gens = []
    offset = 0
    for part in text.split(","):
        if not part.strip():
            raise ParseError("empty generator", offset)
        gens.append(parse_monomial(part, offset))
        offset += len(part) + 1
    return normalize_ideal(gens)
