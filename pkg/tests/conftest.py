"""Shared corpus helpers for the test suite."""
from __future__ import annotations

import itertools
import random

from stairstep import Monomial, MonomialIdeal, normalize_ideal


def exhaustive_corpus(max_exp: int) -> list[MonomialIdeal]:
    """Every normalized proper nonzero ideal with exponents <= max_exp.

    A staircase pairs strictly decreasing x-exponents with strictly
    increasing y-exponents, so enumerating those pairings hits each
    normalized ideal exactly once.
    """
    vals = range(max_exp + 1)
    out = []
    for r in range(1, max_exp + 2):
        for a_set in itertools.combinations(vals, r):
            for b_set in itertools.combinations(vals, r):
                gens = [
                    Monomial(a, b)
                    for a, b in zip(sorted(a_set, reverse=True), sorted(b_set))
                ]
                if gens == [Monomial(0, 0)]:
                    continue
                out.append(normalize_ideal(gens))
    return out


def random_corpus(count: int, seed: int, max_r: int = 6, max_exp: int = 10) -> list[MonomialIdeal]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        r = rng.randint(1, max_r)
        a_vals = rng.sample(range(max_exp + 1), r)
        b_vals = rng.sample(range(max_exp + 1), r)
        gens = [
            Monomial(a, b)
            for a, b in zip(sorted(a_vals, reverse=True), sorted(b_vals))
        ]
        if gens == [Monomial(0, 0)]:
            continue
        out.append(normalize_ideal(gens))
    return out
