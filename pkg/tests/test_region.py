from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hexatile.exactnum import DomainError
from hexatile.oracle import count_tilings
from hexatile.region import (
    Region,
    RegionSpec,
    TriCell,
    axis_cells,
    build_h_double_prime,
    build_h_prime,
    build_hexagon,
    build_intruded,
    build_R,
    build_Rbar,
    region_from_json,
    remove_forced_lozenges,
    split_factorization,
)

small = st.integers(0, 4)


def shared_vertices(c1, c2):
    return set(c1.vertices()) & set(c2.vertices())


class TestTriCell:
    def test_neighbors_are_symmetric(self):
        for lv in range(-4, 4):
            c = TriCell(2, lv)
            for n in c.neighbors():
                assert c in n.neighbors()
                assert len(shared_vertices(c, n)) == 2

    def test_orientation_from_level(self):
        assert TriCell.R(0, 0).orientation.value == "R"
        assert TriCell.L(0, 0).orientation.value == "L"


class TestHexagon:
    @pytest.mark.parametrize("abc, n", [((1, 1, 1), 6), ((2, 3, 4), 52), ((0, 3, 5), 30)])
    def test_cell_counts(self, abc, n):
        r = build_hexagon(*abc)
        assert len(r) == n
        assert r.imbalance() == 0
        assert not r.half_weight

    @given(small, small, small)
    def test_balanced(self, a, b, c):
        r = build_hexagon(a, b, c)
        assert len(r) == 2 * (a * b + b * c + c * a)
        assert r.imbalance() == 0


class TestIntruded:
    def test_figure_region_cell_count(self):
        assert len(build_intruded(6, 5, 8, 3)) == 230

    def test_zero_holes_is_hexagon(self):
        assert build_intruded(4, 2, 3, 0).cells == build_hexagon(4, 2, 3).cells

    def test_smallest(self):
        assert len(build_intruded(1, 1, 1, 1)) == 4

    @pytest.mark.parametrize("m", [2, 4, 6])
    def test_even_holes_are_lozenges(self, m):
        hexagon = build_hexagon(m, 4, 5)
        holes = sorted(hexagon.cells - build_intruded(m, 4, 5, 3).cells)
        axis = axis_cells(hexagon.cells, m)
        assert holes == sorted(axis[:6])
        for i in range(0, 6, 2):
            assert axis[i + 1] in axis[i].neighbors()

    @pytest.mark.parametrize("m", [1, 3, 5])
    def test_odd_holes_are_bowties(self, m):
        hexagon = build_hexagon(m, 4, 5)
        axis = axis_cells(hexagon.cells, m)
        for i in range(0, 6, 2):
            assert axis[i + 1] not in axis[i].neighbors()
            assert len(shared_vertices(axis[i], axis[i + 1])) == 1

    @given(st.integers(0, 6), small, small, small)
    def test_cell_count_and_balance(self, m, b, c, d):
        if d > min(b, c):
            return
        r = build_intruded(m, b, c, d)
        assert len(r) == 2 * (m * b + b * c + c * m) - 2 * d
        assert r.imbalance() == 0

    def test_more_holes_than_short_side_still_fit(self):
        # the region exists; it simply has no tilings
        r = build_intruded(4, 5, 8, 6)
        assert len(r) == 2 * (20 + 40 + 32) - 12

    def test_holes_must_fit(self):
        with pytest.raises(DomainError):
            build_intruded(1, 1, 1, 2)

    def test_negative(self):
        with pytest.raises(DomainError):
            build_intruded(2, -1, 1, 0)

    @given(st.integers(0, 5), st.integers(0, 3), st.integers(0, 3))
    def test_mirror_symmetry(self, m, b, c):
        d = min(b, c)
        assert count_tilings(build_intruded(m, b, c, d)) == count_tilings(build_intruded(m, c, b, d))


class TestPrimed:
    @pytest.mark.parametrize("a, b, c, k", [(2, 3, 6, 2), (0, 1, 1, 0), (1, 2, 3, 1)])
    def test_shapes(self, a, b, c, k):
        base = len(build_h_double_prime(a, b, c, 0))
        p, q = build_h_prime(a, b, c, k), build_h_double_prime(a, b, c, k)
        assert len(p) == base - (2 * k + 1)
        assert len(q) == base - 2 * k
        assert p.imbalance() == 0
        assert abs(q.imbalance()) == 1
        assert dict(p.marks).keys() == dict(q.marks).keys() == {"x", "y", "z", "w"}

    @pytest.mark.parametrize("fn", [build_h_prime, build_h_double_prime])
    @pytest.mark.parametrize("a, b, c, k", [(2, 3, 6, 2), (0, 1, 1, 0), (1, 2, 2, 1)])
    def test_marks_lie_on_the_outer_face(self, fn, a, b, c, k):
        r = fn(a, b, c, k)
        outer = set(r.outer_face_cells())
        assert all(c in outer for _, c in r.marks)

    def test_enclosed_hole_is_not_outer_face(self):
        h = build_hexagon(3, 3, 3)
        corners = {}
        for c in h.cells:
            for v in c.vertices():
                corners[v] = corners.get(v, 0) + 1
        inner = next(c for c in sorted(h.cells) if all(corners[v] == 6 for v in c.vertices()))
        holed = h.remove([inner])
        # an enclosed hole starts a new face and leaves the outer one alone
        assert holed.outer_face_cells() == h.outer_face_cells()
        assert set(h.boundary_cells()) <= set(h.outer_face_cells())

    def test_double_prime_mark_classes(self):
        # three marks from the larger colour class, one from the smaller
        r = build_h_double_prime(1, 2, 3, 1)
        bigger = "L" if r.imbalance() < 0 else "R"
        kinds = {k: c.orientation.value for k, c in r.marks}
        assert [k for k, v in kinds.items() if v != bigger] == ["w"]

    def test_prime_mark_classes_alternate(self):
        r = build_h_prime(1, 2, 3, 1)
        kinds = {k: c.orientation.value for k, c in r.marks}
        assert kinds["x"] == kinds["z"] != kinds["y"] == kinds["w"]

    def test_double_prime_k0_removes_nothing(self):
        a, b, c = 1, 2, 2
        sides = (2 * a, b + 1, c, 2 * a + 1, b, c + 1)
        p, q, r, s, t, u = sides
        # area of a hexagon with these sides, in unit triangles
        area = (p + q + r) ** 2 - p**2 - r**2 - t**2
        assert len(build_h_double_prime(a, b, c, 0)) == area

    def test_domain(self):
        with pytest.raises(DomainError):
            build_h_prime(1, 0, 2, 0)
        with pytest.raises(DomainError):
            build_h_double_prime(1, 2, 2, 3)


class TestCiucuRegions:
    def test_rbar_without_weights(self):
        assert not build_Rbar(6, 0, 3).half_weight

    def test_weighted_pairs_along_the_line(self):
        assert len(build_Rbar(4, 2, 3).half_weight) == 2
        assert len(build_R(0, 6, 3).half_weight) == 6
        assert len(build_R(4, 2, 3).half_weight) == 2

    def test_balanced(self):
        for m in range(4):
            for n in range(4):
                assert build_R(m, n, 2).imbalance() == 0
                assert build_Rbar(m, n, 2).imbalance() == 0

    def test_edge_case_allowed(self):
        assert build_R(0, 3, -1).cells

    @pytest.mark.parametrize("args", [(1, 1, -1), (0, 1, -2), (-1, 0, 0)])
    def test_domain_R(self, args):
        with pytest.raises(DomainError):
            build_R(*args)

    def test_domain_Rbar(self):
        with pytest.raises(DomainError):
            build_Rbar(0, 0, -1)


class TestSplit:
    def test_partition(self):
        for c in range(7):
            for d in range(c + 1):
                for m in (2 * (c % 3), 2 * (c % 3) + 1):
                    plus, minus = split_factorization(m, c, d)
                    whole = build_intruded(m, c, c, d).cells
                    assert plus.cells | minus.cells == whole
                    assert not plus.cells & minus.cells

    def test_weights_only_on_plus(self):
        plus, minus = split_factorization(6, 8, 3)
        assert len(plus.half_weight) == 8 - 3
        assert not minus.half_weight

    def test_disconnected_case_has_no_axis_weights(self):
        plus, _ = split_factorization(2, 2, 2)
        assert not plus.half_weight

    def test_domain(self):
        with pytest.raises(DomainError):
            split_factorization(2, 2, 3)


class TestForcedLozenges:
    def test_hexagon_unchanged(self):
        h = build_hexagon(2, 2, 3)
        reduced, factor = remove_forced_lozenges(h)
        assert reduced.cells == h.cells and factor == 1

    def test_minus_half_reduces_to_rbar(self):
        _, minus = split_factorization(6, 8, 3)
        reduced, factor = remove_forced_lozenges(minus)
        assert reduced.congruent(build_Rbar(7, 0, 3))
        assert factor == 1

    @pytest.mark.parametrize("a, c", [(1, 2), (2, 3), (1, 4)])
    def test_halves_match_ciucu_regions(self, a, c):
        for d in range(c + 1):
            plus, minus = split_factorization(2 * a, c, d)
            want_plus = build_R(0, c, a - 1) if d == 0 else build_Rbar(d - 1, c - d, a)
            assert remove_forced_lozenges(minus)[0].congruent(build_Rbar(c - 1, 0, a))
            assert remove_forced_lozenges(plus)[0].congruent(want_plus)
            plus, minus = split_factorization(2 * a + 1, c, d)
            want_plus = build_R(d, c - d - 1, a) if d < c else build_Rbar(c, 0, a)
            assert remove_forced_lozenges(minus)[0].congruent(build_Rbar(c, 0, a))
            assert remove_forced_lozenges(plus)[0].congruent(want_plus)

    def test_untileable_marker(self):
        lone = Region(frozenset([TriCell.R(0, 0)]))
        reduced, _ = remove_forced_lozenges(lone)
        assert reduced.untileable
        assert count_tilings(reduced) == 0

    @given(st.integers(0, 3), st.integers(1, 3), st.integers(0, 3))
    def test_count_preserved(self, m, n, x):
        r = build_Rbar(m, n, x)
        reduced, factor = remove_forced_lozenges(r)
        assert Fraction(count_tilings(r)) == factor * count_tilings(reduced)


class TestTransformsAndSerialization:
    @given(st.integers(0, 4), st.integers(0, 3), st.integers(0, 3))
    def test_reflections_preserve_counts(self, m, b, c):
        d = min(b, c) // 2
        r = build_intruded(m, b, c, d)
        n = count_tilings(r)
        assert count_tilings(r.reflect_horizontal()) == n
        assert count_tilings(r.reflect_vertical()) == n
        assert count_tilings(r.translate(3, -2)) == n

    def test_json_roundtrip(self):
        r = build_h_prime(1, 2, 3, 1)
        back = region_from_json(r.to_json())
        assert back == r
        w = build_R(2, 2, 1)
        assert region_from_json(w.to_json()).half_weight == w.half_weight

    def test_invalid_half_weight_rejected(self):
        with pytest.raises(ValueError):
            Region(frozenset([TriCell.R(0, 0), TriCell.R(5, 5)]), frozenset([frozenset([TriCell.R(0, 0), TriCell.R(5, 5)])]))

    def test_marks_must_be_cells(self):
        with pytest.raises(ValueError):
            Region(frozenset([TriCell.R(0, 0)]), marks=(("x", TriCell.L(3, 3)),))

    def test_spec_family_checked(self):
        with pytest.raises(ValueError):
            RegionSpec.make("Triangle", n=3)
