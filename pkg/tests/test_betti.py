from __future__ import annotations

import pytest

from conftest import exhaustive_corpus
from stairstep import (
    IdealClass,
    Monomial,
    PoincareSeries,
    betti_csv,
    betti_json,
    build_resolution,
    classify,
    graded_betti,
    normalize_ideal,
    poincare_series,
    render_betti_table,
    series_expand,
    total_betti,
)


def M(*pairs):
    return normalize_ideal([Monomial(a, b) for a, b in pairs])


GOLDEN_LEFT = """\
      0 1 2 3 4 5 6
total: 1 2 3 5 8 13 21
0: 1 2 1 . . . .
1: . . 1 2 1 . .
2: . . 1 3 4 3 1
3: . . . . 2 6 7
4: . . . . 1 4 9
5: . . . . . . 3
6: . . . . . . 1"""

GOLDEN_RIGHT = """\
      0 1 2 3 4 5 6
total: 1 2 3 5 8 13 21
0: 1 2 1 . . . .
1: . . 2 5 4 1 .
2: . . . . 4 12 13
3: . . . . . . 8"""


class TestTotalBetti:
    def test_main_fibonacci(self):
        assert total_betti(IdealClass.MAIN_CASE_1, 2, 6) == [1, 2, 3, 5, 8, 13, 21]

    def test_main_r3(self):
        assert total_betti(IdealClass.MAIN_CASE_2, 3, 5) == [1, 2, 4, 8, 16, 32]

    def test_degenerate_sequences(self):
        assert total_betti(IdealClass.TYPE_I, 1, 4) == [1, 1, 0, 0, 0]
        assert total_betti(IdealClass.TYPE_II, 1, 4) == [1, 2, 2, 2, 2]
        assert total_betti(IdealClass.TYPE_III, 2, 3) == [1, 0, 0, 0]
        assert total_betti(IdealClass.TYPE_IV, 2, 4) == [1, 1, 1, 1, 1]
        assert total_betti(IdealClass.TYPE_V, 2, 4) == [1, 2, 3, 4, 5]


class TestPoincareSeries:
    def test_main_r2_display(self):
        assert str(poincare_series(IdealClass.MAIN_CASE_1, 2)) == "(1+z)/(1-z-z^2)"

    def test_degenerate_displays(self):
        assert str(poincare_series(IdealClass.TYPE_I)) == "1+z"
        assert str(poincare_series(IdealClass.TYPE_II)) == "(1+z)/(1-z)"
        assert str(poincare_series(IdealClass.TYPE_III)) == "1"
        assert str(poincare_series(IdealClass.TYPE_IV)) == "1/(1-z)"
        assert str(poincare_series(IdealClass.TYPE_V)) == "1/(1-2z+z^2)"

    def test_expand_examples(self):
        assert series_expand(poincare_series(IdealClass.MAIN_CASE_1, 2), 6) == [
            1, 2, 3, 5, 8, 13, 21,
        ]
        assert series_expand(PoincareSeries((1,), (1, -1)), 4) == [1, 1, 1, 1, 1]
        assert series_expand(poincare_series(IdealClass.TYPE_V), 4) == [1, 2, 3, 4, 5]

    def test_expand_requires_unit_constant_term(self):
        with pytest.raises(ValueError):
            series_expand(PoincareSeries((1,), (2, 1)), 3)

    @pytest.mark.parametrize("r", range(2, 9))
    def test_alternate_form_agrees(self, r):
        main = PoincareSeries((1, 1), (1, -1, 1 - r))
        alternate = PoincareSeries((1, 2, 1), (1, 0, -r, 1 - r))
        assert series_expand(main, 30) == series_expand(alternate, 30)

    def test_expand_matches_total_betti_all_classes(self):
        for cls in IdealClass:
            rs = range(2, 9) if cls.is_main else [1 if cls is IdealClass.TYPE_I else 2]
            for r in rs:
                assert series_expand(poincare_series(cls, r), 30) == total_betti(cls, r, 30)


class TestGradedBetti:
    def test_golden_tables(self):
        left = graded_betti(build_resolution(M((1, 2), (0, 4)), 6))
        right = graded_betti(build_resolution(M((2, 1), (1, 2)), 6))
        assert render_betti_table(left) == GOLDEN_LEFT
        assert render_betti_table(right) == GOLDEN_RIGHT

    def test_spot_entries(self):
        left = graded_betti(build_resolution(M((1, 2), (0, 4)), 6))
        assert left.entries[(2, 2)] == 1
        assert left.entries[(2, 3)] == 1
        assert left.entries[(2, 4)] == 1
        assert left.entries[(4, 8)] == 1
        right = graded_betti(build_resolution(M((2, 1), (1, 2)), 6))
        assert right.entries[(3, 4)] == 5
        assert right.entries[(6, 9)] == 8

    def test_type_iii_single_entry(self):
        table = graded_betti(build_resolution(M((1, 0), (0, 1)), 4))
        assert table.entries == {(0, 0): 1}

    def test_row_sums_equal_ranks(self):
        for ideal in exhaustive_corpus(3):
            res = build_resolution(ideal, 7)
            table = graded_betti(res)
            assert table.totals() == res.total_betti_numbers()

    def test_totals_depend_only_on_r(self):
        by_r: dict[int, list[int]] = {}
        for ideal in exhaustive_corpus(4):
            if not classify(ideal).is_main:
                continue
            totals = graded_betti(build_resolution(ideal, 6)).totals()
            expected = by_r.setdefault(ideal.num_generators, totals)
            assert totals == expected

    def test_beta0_normalization(self):
        for ideal in exhaustive_corpus(2):
            table = graded_betti(build_resolution(ideal, 5))
            assert table.entries[(0, 0)] == 1
            assert all(d == 0 for (i, d) in table.entries if i == 0 and d > 0)


class TestSerialization:
    def test_csv(self):
        table = graded_betti(build_resolution(M((1, 0), (0, 1)), 2))
        assert betti_csv(table) == "i,d,beta\n0,0,1"

    def test_json(self):
        table = graded_betti(build_resolution(M((1, 0)), 2))
        assert betti_json(table) == {
            "entries": [{"i": 0, "d": 0, "beta": 1}, {"i": 1, "d": 1, "beta": 1}]
        }
