from __future__ import annotations

import json

import pytest

from conftest import exhaustive_corpus
from stairstep import (
    IdealClass,
    Monomial,
    StageTooSmall,
    WrongClass,
    build_d1,
    build_d2,
    build_d3,
    build_d4,
    build_degenerate,
    build_resolution,
    compose_check,
    extend_resolution,
    normalize_ideal,
    resolution_from_json,
    resolution_to_json,
    syzygy_generators_Mx,
)


def M(*pairs):
    return normalize_ideal([Monomial(a, b) for a, b in pairs])


M_LEFT = M((1, 2), (0, 4))   # (xy^2, y^4), case 2
M_RIGHT = M((2, 1), (1, 2))  # (x^2y, xy^2), case 1


class TestLowStages:
    def test_d1(self):
        for ideal in (M_LEFT, M_RIGHT):
            assert build_d1(ideal).dense_strings() == [["x", "y"]]

    def test_d1_wrong_class(self):
        with pytest.raises(WrongClass):
            build_d1(M((3, 0), (0, 7)))

    def test_d2_case1(self):
        assert build_d2(M_RIGHT).dense_strings() == [
            ["x*y", "y^2", "-y"],
            ["0", "0", "x"],
        ]

    def test_d2_case2(self):
        assert build_d2(M_LEFT).dense_strings() == [
            ["y^2", "0", "-y"],
            ["0", "y^3", "x"],
        ]

    def test_d2_twists(self):
        d2 = build_d2(M_RIGHT)
        assert [d2.source.bidegree(i) for i in range(3)] == [(2, 1), (1, 2), (1, 1)]

    def test_d3_case1(self):
        assert build_d3(M_RIGHT).dense_strings() == [
            ["x", "0", "y", "0", "0"],
            ["0", "x", "0", "y", "0"],
            ["0", "0", "x*y", "y^2", "x*y"],
        ]

    def test_d3_case2(self):
        assert build_d3(M_LEFT).dense_strings() == [
            ["x", "0", "y", "0", "0"],
            ["0", "x", "0", "y", "0"],
            ["0", "-y^3", "y^2", "0", "y^3"],
        ]

    def test_d3_twists(self):
        d3 = build_d3(M_RIGHT)
        # S(-a_i-b_i-1)^2 for each generator plus S(-a_i-b_{i+1})
        assert sorted(d3.source.twist(i) for i in range(5)) == [4, 4, 4, 4, 4]
        d3 = build_d3(M_LEFT)
        assert sorted(d3.source.twist(i) for i in range(5)) == [4, 4, 5, 5, 5]

    def test_d4_case1(self):
        d4, (u, v, w) = build_d4(M_RIGHT)
        assert (u, v, w) == (1, 2, 0)
        # F1 block on d_1, then the two k-blocks over (c_j^x, c_j^y)
        assert d4.dense_strings() == [
            ["0", "0", "x*y", "y^2", "-y", "0", "0", "0"],
            ["0", "0", "0", "0", "0", "x*y", "y^2", "-y"],
            ["0", "0", "0", "0", "x", "0", "0", "0"],
            ["0", "0", "0", "0", "0", "0", "0", "x"],
            ["x", "y", "0", "0", "0", "0", "0", "0"],
        ]

    def test_d4_case2_column(self):
        d4, _ = build_d4(M_LEFT)
        grid = d4.dense_strings()
        # k-block for j=1: column i=r is y^{b_r-1} * e_{c_1^y}
        assert grid[2][3] == "y^3"
        assert grid[0][3] == "0"

    def test_rank_formulas(self):
        for ideal in exhaustive_corpus(3):
            from stairstep import classify

            if not classify(ideal).is_main:
                continue
            r = ideal.num_generators
            assert build_d2(ideal).source.rank == r + 1
            assert build_d3(ideal).source.rank == 3 * r - 1
            d4, (u, v, w) = build_d4(ideal)
            assert (u, v, w) == (r - 1, r, 0)
            assert d4.source.rank == 2 * (r - 1) + (r + 1) * r


class TestSyzygyGeneratorsMx:
    def test_case1(self):
        cols = syzygy_generators_Mx(M_RIGHT)
        assert cols == [
            [(0, 1, Monomial(1, 0))],
            [(1, 1, Monomial(1, 0))],
            [(0, 1, Monomial(0, 1))],
        ]

    def test_case2(self):
        cols = syzygy_generators_Mx(M_LEFT)
        assert cols == [
            [(0, 1, Monomial(1, 0))],
            [(0, 1, Monomial(0, 2))],
        ]

    def test_columns_are_syzygies(self):
        for ideal in exhaustive_corpus(3):
            from stairstep import classify, colon_x

            if not classify(ideal).is_main:
                continue
            mx = colon_x(ideal)
            for col in syzygy_generators_Mx(ideal):
                for i, _sign, mono in col:
                    assert ideal.contains(mono * mx.generators[i])


class TestMainRecursion:
    def test_fibonacci_ranks(self):
        for ideal in (M_LEFT, M_RIGHT):
            res = build_resolution(ideal, 6)
            assert res.total_betti_numbers() == [1, 2, 3, 5, 8, 13, 21]

    def test_r3_ranks(self):
        res = build_resolution(M((2, 0), (1, 1), (0, 2)), 5)
        assert res.total_betti_numbers() == [1, 2, 4, 8, 16, 32]

    def test_decomposition_recursion(self):
        res = build_resolution(M_RIGHT, 8)
        dec = {stage: (u, v, w) for stage, u, v, w in res.decomposition}
        assert dec[4] == (1, 2, 0)
        assert dec[5] == (0, 1, 2)
        r = 2
        for stage in range(5, 9):
            u, v, w = dec[stage - 1]
            assert dec[stage] == ((r - 1) * w, u + r * w, v)

    def test_rank_matches_decomposition(self):
        for ideal in (M_LEFT, M((3, 0), (2, 2), (1, 3))):
            res = build_resolution(ideal, 9)
            r = ideal.num_generators
            for stage, u, v, w in res.decomposition:
                assert res.modules[stage].rank == 2 * u + (r + 1) * v + (3 * r - 1) * w

    def test_rank_recursions(self):
        for ideal in exhaustive_corpus(3):
            from stairstep import classify

            if not classify(ideal).is_main:
                continue
            res = build_resolution(ideal, 8)
            ranks = res.total_betti_numbers()
            r = ideal.num_generators
            for i in range(2, 9):
                assert ranks[i] == ranks[i - 1] + (r - 1) * ranks[i - 2]
            for i in range(4, 9):
                assert ranks[i] == r * ranks[i - 2] + (r - 1) * ranks[i - 3]

    def test_extend_matches_fresh_build(self):
        res4 = build_resolution(M_RIGHT, 4)
        res8 = extend_resolution(res4, 8)
        fresh = build_resolution(M_RIGHT, 8)
        assert res8.total_betti_numbers() == fresh.total_betti_numbers()
        for a, b in zip(res8.differentials, fresh.differentials):
            assert a.entries == b.entries

    def test_extend_guards(self):
        with pytest.raises(StageTooSmall):
            extend_resolution(build_resolution(M_RIGHT, 4), 3)
        with pytest.raises(WrongClass):
            extend_resolution(build_degenerate(M((3, 0), (0, 7)), 4), 6)


class TestStructuralInvariants:
    @pytest.mark.parametrize("ideal", exhaustive_corpus(3), ids=str)
    def test_complex_homogeneous_minimal(self, ideal):
        res = build_resolution(ideal, 7)
        assert res.modules[0].rank == 1
        assert res.modules[0].bidegree(0) == (0, 0)
        for diff in res.differentials:
            assert diff.is_homogeneous()
            assert diff.is_minimal()
        for hi, lo in zip(res.differentials[1:], res.differentials):
            assert compose_check(hi, lo).is_zero

    @pytest.mark.parametrize("ideal", [M_LEFT, M_RIGHT, M((4, 0), (2, 1), (1, 3), (0, 4))], ids=str)
    def test_labels_unique(self, ideal):
        res = build_resolution(ideal, 9)
        for module in res.modules:
            labels = [str(lbl) for lbl, _ in module.generators]
            assert len(labels) == len(set(labels))


class TestDegenerate:
    def test_type_iii_terminates(self):
        res = build_degenerate(M((1, 0), (0, 1)), 5)
        assert res.total_betti_numbers() == [1, 0, 0, 0, 0, 0]

    def test_type_i(self):
        res = build_degenerate(M((1, 0)), 4)
        assert res.total_betti_numbers() == [1, 1, 0, 0, 0]
        # x is zero in S = k[x,y]/(x); the map must use the surviving variable
        assert res.differentials[0].dense_strings() == [["y"]]
        res = build_degenerate(M((0, 1)), 2)
        assert res.differentials[0].dense_strings() == [["x"]]

    def test_type_iv_alternation(self):
        res = build_degenerate(M((3, 0), (0, 1)), 6)
        grids = [d.dense_strings() for d in res.differentials]
        assert grids[0] == [["x"]]
        assert grids[1] == [["x^2"]]
        for i in range(2, 6):
            assert grids[i] == grids[i - 2]

    def test_type_iv_a2_both_maps_x(self):
        res = build_degenerate(M((2, 0), (0, 1)), 4)
        for d in res.differentials:
            assert d.dense_strings() == [["x"]]

    def test_type_ii_matrices(self):
        res = build_degenerate(M((2, 3)), 8)
        grids = [d.dense_strings() for d in res.differentials]
        assert grids[0] == [["x", "y"]]
        assert grids[1] == [["-y", "x*y^3"], ["x", "0"]]
        assert grids[2] == [["x*y^3", "0"], ["y", "x"]]
        assert grids[3] == [["-x", "0"], ["y", "-x*y^3"]]
        for i in range(4, 8):
            assert grids[i] == grids[i - 2]

    def test_type_ii_pure_power_swaps(self):
        res = build_degenerate(M((0, 3)), 4)
        grids = [d.dense_strings() for d in res.differentials]
        assert grids[1] == [["-x", "y^2"], ["y", "0"]]

    def test_type_v_printed_matrices(self):
        res = build_degenerate(M((3, 0), (0, 7)), 4)
        grids = [d.dense_strings() for d in res.differentials]
        assert grids[0] == [["x", "y"]]
        assert grids[1] == [["x^2", "0", "-y"], ["0", "y^6", "x"]]
        assert grids[2] == [
            ["x", "0", "-y", "0"],
            ["0", "y", "0", "x"],
            ["0", "0", "-x^2", "-y^6"],
        ]

    def test_type_v_ranks(self):
        res = build_degenerate(M((2, 0), (0, 2)), 10)
        assert res.total_betti_numbers() == list(range(1, 12))

    def test_type_v_coefficient_identity(self):
        res = build_degenerate(M((3, 0), (0, 7)), 10)
        fs = res.coeffs.fs
        for i in range(3, 11):
            assert fs[i][0][1] * fs[i - 1][0][1] == Monomial(3, 0)
            assert fs[i][1][1] * fs[i - 1][1][1] == Monomial(0, 7)

    def test_type_v_complex(self):
        res = build_degenerate(M((3, 0), (0, 7)), 8)
        for hi, lo in zip(res.differentials[1:], res.differentials):
            assert compose_check(hi, lo).is_zero

    def test_wrong_class(self):
        with pytest.raises(WrongClass):
            build_degenerate(M_RIGHT, 4)


class TestDispatchAndJson:
    def test_build_resolution_dispatch(self):
        assert build_resolution(M_RIGHT, 3).ideal_class is IdealClass.MAIN_CASE_1
        assert build_resolution(M((3, 0), (0, 7)), 3).ideal_class is IdealClass.TYPE_V

    def test_json_round_trip(self):
        for ideal in (M_RIGHT, M((3, 0), (0, 7)), M((1, 0))):
            res = build_resolution(ideal, 6)
            data = json.loads(json.dumps(resolution_to_json(res)))
            res2 = resolution_from_json(data)
            assert res2.ring == res.ring
            assert res2.ideal_class is res.ideal_class
            assert [m.rank for m in res2.modules] == [m.rank for m in res.modules]
            for a, b in zip(res2.differentials, res.differentials):
                assert a.entries == b.entries

    def test_json_schema_fields(self):
        data = resolution_to_json(build_resolution(M_RIGHT, 5))
        assert data["ideal"] == [[2, 1], [1, 2]]
        assert data["class"] == "main-case-1"
        assert data["modules"][0] == {
            "rank": 1,
            "generators": [{"label": "e1", "bidegree": [0, 0]}],
        }
        entry = data["differentials"][0]["entries"][0]
        assert set(entry) == {"row", "col", "sign", "monomial"}
        assert data["decomposition"][0] == {"stage": 4, "u": 1, "v": 2, "w": 0}
