import math
import random

import pytest
from hypothesis import given

from tests.strategies import (
    close_mod_boundary,
    points_in_t,
    random_generic_in_t,
    random_in_t,
    random_right_point,
    random_similarity,
    random_upper_half,
    upper_half_points,
)
from triangle_moduli.exceptions import (
    CollinearBasisError,
    DegenerateInputError,
    InvalidParallelogramError,
    NegativeOrientationError,
    NotInClosureOfTError,
    NotInTError,
    ObtuseInputError,
)
from triangle_moduli.elliptic_map import (
    EdgeChoice,
    LatticeBasis,
    Parallelogram,
    construct_curve,
    curve_of_triangle,
    curves_isomorphic,
    double_across,
    fiber_in_T,
    lattice_tau,
    mirror_is_isomorphic,
    p_map,
    p_section,
    parallelogram_basis,
    point_parallelogram,
    same_lattice,
)
from triangle_moduli.geometry import LabeledTriangle, in_closure_of_t, triangle_from_point
from triangle_moduli.modular_group import act, equivalent_sl2z, reduce_sl2z

RHO_BAR = complex(-0.5, math.sqrt(3) / 2)


class TestLatticeBasis:
    def test_collinear(self):
        with pytest.raises(CollinearBasisError):
            LatticeBasis(1, 2)
        with pytest.raises(CollinearBasisError):
            LatticeBasis(0, 1j)

    def test_negative_orientation(self):
        with pytest.raises(NegativeOrientationError):
            LatticeBasis(1, -1j)

    def test_oriented_flips_second_vector(self):
        basis = LatticeBasis.oriented(1, -1j)
        assert basis.w2 == 1j

    def test_same_lattice(self):
        assert same_lattice((2, 1 + 2j), (1 - 2j, 1 + 2j))
        assert same_lattice((1, 1j), (1 + 1j, 1j))
        assert not same_lattice((2, 1 + 2j), (1, 1j))
        assert not same_lattice((1, 1j), (2, 1j))


class TestParallelogram:
    def test_rejects_non_parallelogram(self):
        with pytest.raises(InvalidParallelogramError):
            Parallelogram(0, 1, 2 + 1j, 1j)

    def test_point_parallelogram_basis(self):
        z = 0.3 + 1.2j
        basis = parallelogram_basis(point_parallelogram(z))
        assert basis.w1 == 1
        assert basis.w2 == z

    @given(upper_half_points())
    def test_point_parallelogram_recovers_curve(self, z):
        tau = lattice_tau(parallelogram_basis(point_parallelogram(z)))
        assert equivalent_sl2z(tau, z)


class TestDoubling:
    def test_double_across_first_edge(self):
        doubled = double_across(LabeledTriangle(1 + 1j, 3 + 1j, 2 + 3j), EdgeChoice.E12)
        assert doubled.parallelogram.vertices == (2 + 3j, 1 + 1j, 2 - 1j, 3 + 1j)
        assert doubled.basis.w1 == 1 - 2j
        assert doubled.basis.w2 == 1 + 2j
        assert same_lattice(doubled.basis, (2, 1 + 2j))
        assert doubled.edge is EdgeChoice.E12

    def test_obtuse_needs_force(self):
        tri = triangle_from_point(2 + 1j)
        with pytest.raises(ObtuseInputError):
            double_across(tri)
        assert double_across(tri, force=True).basis is not None

    def test_degenerate(self):
        with pytest.raises(DegenerateInputError):
            double_across(LabeledTriangle(0, 1, 2))

    def test_lattice_tau(self):
        assert lattice_tau((2, 1 + 2j)) == pytest.approx(0.5 + 1j)
        assert equivalent_sl2z(lattice_tau((1 + 2j, -2)), 0.5 + 1j)

    @given(upper_half_points(), upper_half_points())
    def test_lattice_tau_ignores_common_scaling(self, z, factor):
        basis = (1, z)
        scaled = (factor, factor * z)
        assert abs(lattice_tau(basis) - lattice_tau(scaled)) <= 1e-9 * (1 + abs(z))

    def test_equilateral_curve(self):
        construction = construct_curve(triangle_from_point(complex(0.5, math.sqrt(3) / 2)))
        assert abs(construction.modulus - RHO_BAR) < 1e-9
        assert abs(act(construction.witness, construction.tau) - construction.modulus) < 1e-9

    def test_right_isosceles_curve(self):
        assert curve_of_triangle(triangle_from_point(0.5 + 0.5j)) == pytest.approx(1j)

    def test_edge_choices_agree(self):
        rng = random.Random(23)
        for _ in range(1_000):
            tri = triangle_from_point(random_in_t(rng))
            moduli = [curve_of_triangle(tri, edge) for edge in EdgeChoice]
            assert close_mod_boundary(moduli[1], moduli[0], 1e-6)
            assert close_mod_boundary(moduli[2], moduli[0], 1e-6)

    def test_curve_survives_similarities_for_every_edge(self):
        rng = random.Random(53)
        for trial in range(1_000):
            z = random_right_point(rng) if trial % 4 == 0 else random_in_t(rng)
            tri = triangle_from_point(z)
            expected = curve_of_triangle(tri)
            moved = tri.transformed(random_similarity(rng))
            for edge in EdgeChoice:
                assert close_mod_boundary(curve_of_triangle(moved, edge), expected, 1e-6)

    def test_doubled_triangle_shares_the_edge(self):
        rng = random.Random(59)
        for trial in range(1_000):
            z = random_right_point(rng) if trial % 4 == 0 else random_in_t(rng)
            tri = triangle_from_point(z).transformed(random_similarity(rng))
            v1, v2, v3 = tri.vertices
            area = abs(((v2 - v1).conjugate() * (v3 - v1)).imag) / 2
            for edge in EdgeChoice:
                doubled = double_across(tri, edge)
                q1, q2, q3, q4 = doubled.parallelogram.vertices
                i, j = edge.value
                assert (q2, q4) == (tri.vertices[i - 1], tri.vertices[j - 1])
                assert abs((q1 + q3) - (q2 + q4)) <= 1e-9 * (1 + abs(q2) + abs(q4))
                basis = doubled.basis
                covolume = (basis.w1.conjugate() * basis.w2).imag
                assert covolume == pytest.approx(2 * area, rel=1e-6)

    def test_curve_of_normalized_triangle_is_p(self):
        rng = random.Random(29)
        for _ in range(1_000):
            z = random_in_t(rng)
            assert close_mod_boundary(curve_of_triangle(triangle_from_point(z)), p_map(z), 1e-9)

    def test_curves_isomorphic(self):
        assert curves_isomorphic((1, 1j), (1j, -1))
        assert not curves_isomorphic((1, 1j), (1, 2j))


class TestPMap:
    def test_outside_closure(self):
        with pytest.raises(NotInClosureOfTError):
            p_map(2 + 1j)

    def test_right_triangle_boundary_is_allowed(self):
        assert p_map(1j) == 1j

    def test_reflection_sensitivity(self):
        rng = random.Random(31)
        distinct = 0
        trials = 1_000
        for _ in range(trials):
            z = random_generic_in_t(rng)
            if not equivalent_sl2z(p_map(z), p_map(1 - z.conjugate())):
                distinct += 1
        assert distinct >= 0.99 * trials

    def test_mirror_is_isomorphic(self):
        assert mirror_is_isomorphic(1j)
        assert mirror_is_isomorphic(0.5 + 1j)
        assert not mirror_is_isomorphic(0.3 + 1.2j)


class TestFiber:
    def test_generic_fiber_has_three_points(self):
        rng = random.Random(37)
        for _ in range(1_000):
            z = random_generic_in_t(rng)
            fiber = fiber_in_T(z)
            assert len(fiber) == 3
            for w in fiber[1:]:
                assert equivalent_sl2z(fiber[0], w)

    def test_equilateral_fiber_is_a_point(self):
        assert len(fiber_in_T(complex(0.5, math.sqrt(3) / 2))) == 1

    def test_not_in_t(self):
        with pytest.raises(NotInTError):
            fiber_in_T(0.5 + 0.5j)

    @given(points_in_t())
    def test_fiber_contains_the_point(self, z):
        assert fiber_in_T(z)[0] == z


class TestSection:
    def test_section_is_a_right_inverse(self):
        rng = random.Random(41)
        for _ in range(1_000):
            w = reduce_sl2z(random_upper_half(rng)).point
            z = p_section(w)
            assert in_closure_of_t(z)
            assert close_mod_boundary(p_map(z), w, 1e-9)

    def test_left_half_is_shifted(self):
        assert p_section(-0.3 + 1.2j) == pytest.approx(0.7 + 1.2j)
