from fractions import Fraction

import pytest

from permutoehr.ehrhart import (
    EhrhartResult,
    coefficient_transfer_check,
    compute_ehrhart,
    ehrhart_closed,
    ehrhart_egf,
    ehrhart_egf_tree,
    ehrhart_graphsum,
    ehrhart_postnikov,
    ehrhart_recurrence,
    f_polynomial,
    f_polynomial_stable,
    tree_function,
    volume_closed,
)
from permutoehr.polynomials import Poly, rising_binomial
from permutoehr.polytope import PartialPermutohedron

T = Poly([0, 1])

ENGINES = (
    ehrhart_closed,
    ehrhart_postnikov,
    ehrhart_graphsum,
    ehrhart_egf,
    ehrhart_egf_tree,
    ehrhart_recurrence,
)


def pentagon_family(n):
    """The explicit quadratic for m = 2: (n^2 - 1/2) t^2 + (2n - 1/2) t + 1."""
    return Poly([1, 2 * n - Fraction(1, 2), n * n - Fraction(1, 2)])


def lagrange_interpolate(points):
    """Exact Lagrange interpolation oracle: points are (x, y) pairs."""
    total = Poly()
    for i, (xi, yi) in enumerate(points):
        basis = Poly([1])
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = basis * Poly([-xj, 1]) * Fraction(1, xi - xj)
        total = total + basis * yi
    return total


class TestClosedForm:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_segment(self, n):
        assert ehrhart_closed(1, n) == Poly([1, n])

    @pytest.mark.parametrize("n", range(1, 5))
    def test_pentagon_family(self, n):
        assert ehrhart_closed(2, n) == pentagon_family(n)

    def test_matches_count_at_triangle(self):
        assert ehrhart_closed(2, 1)(1) == PartialPermutohedron(2, 1).count_lattice_points(1)

    def test_rejects_out_of_domain(self):
        with pytest.raises(ValueError):
            ehrhart_closed(3, 1)
        with pytest.raises(ValueError):
            ehrhart_closed(0, 1)
        with pytest.raises(ValueError):
            ehrhart_closed(2, 0)


class TestPostnikovSum:
    def test_m2_n2(self):
        assert ehrhart_postnikov(2, 2) == Poly([1, Fraction(7, 2), Fraction(7, 2)])

    def test_m1_n1_two_terms(self):
        # a = (0) contributes 1, a = (1) contributes (n - m + 1) t = t
        assert ehrhart_postnikov(1, 1) == Poly([1, 1])

    def test_m2_n1_loop_terms_vanish(self):
        # only the loop-free sequences survive: 1 + t + t(t+1)/2
        expected = Poly([1]) + T + rising_binomial(T, 2)
        assert ehrhart_postnikov(2, 1) == expected


class TestGraphSum:
    def test_m1_n3(self):
        # edgeless graph weighs 1, the loop graph weighs (n - m + 1) t = 3t
        assert ehrhart_graphsum(1, 3) == Poly([1, 3])

    def test_m3_n2_matches_closed(self):
        assert ehrhart_graphsum(3, 2) == ehrhart_closed(3, 2)

    def test_weight_bijection_with_postnikov(self):
        assert ehrhart_graphsum(2, 2) == ehrhart_postnikov(2, 2)


class TestTreeFunction:
    def test_first_coefficients(self):
        tree = tree_function(5)
        assert tree.coefficient(0) == 0
        assert tree.coefficient(1) == 1
        assert tree.coefficient(2) == 1
        assert tree.coefficient(3) == Fraction(3, 2)
        assert tree.coefficient(4) == Fraction(8, 3)

    def test_functional_equation(self):
        # T = z exp(T) to order 10
        order = 10
        tree = tree_function(order)
        z = Poly([0, 1])
        from permutoehr.series import TruncatedSeries

        z_series = TruncatedSeries.from_poly(z, order)
        assert tree == z_series * tree.exp()

    def test_rejects_zero_order(self):
        with pytest.raises(ValueError):
            tree_function(0)


class TestEgf:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_segment(self, n):
        assert ehrhart_egf(1, n) == Poly([1, n])

    def test_m2_n2(self):
        assert ehrhart_egf(2, 2) == Poly([1, Fraction(7, 2), Fraction(7, 2)])

    @pytest.mark.parametrize("m", range(1, 6))
    def test_tree_route_agrees(self, m):
        for n in (m - 1, m, m + 2):
            if n < 1:
                continue
            assert ehrhart_egf_tree(m, n) == ehrhart_egf(m, n)


class TestRecurrence:
    def test_seed_values(self):
        assert ehrhart_recurrence(3, 2) == ehrhart_closed(3, 2)
        assert ehrhart_recurrence(1, 4) == ehrhart_closed(1, 4)

    def test_m4_n3(self):
        assert ehrhart_recurrence(4, 3) == ehrhart_closed(4, 3)

    def test_m5_n5(self):
        assert ehrhart_recurrence(5, 5) == ehrhart_closed(5, 5)


class TestVolume:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_segment_length(self, n):
        assert volume_closed(1, n) == n

    def test_unit_right_triangle(self):
        assert volume_closed(2, 1) == Fraction(1, 2)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_pentagon_area(self, n):
        assert volume_closed(2, n) == n * n - Fraction(1, 2)

    @pytest.mark.parametrize("m", range(1, 6))
    def test_leading_coefficient(self, m):
        for n in (m - 1, m, m + 1):
            if n < 1:
                continue
            assert ehrhart_closed(m, n).leading_coefficient == volume_closed(m, n)

    def test_rejects_out_of_domain(self):
        with pytest.raises(ValueError):
            volume_closed(3, 1)


class TestFPolynomial:
    def test_triangle(self):
        assert f_polynomial(2, 1) == Poly([3, 3, 1])

    def test_pentagon(self):
        assert f_polynomial(2, 2) == Poly([5, 5, 1])

    def test_stable_matches(self):
        assert f_polynomial_stable(2) == Poly([5, 5, 1])
        assert f_polynomial_stable(1) == Poly([2, 1])

    @pytest.mark.parametrize("m", range(1, 4))
    def test_constant_term_counts_vertices(self, m):
        for n in range(1, m + 3):
            assert f_polynomial(m, n).coefficient(0) == PartialPermutohedron(
                m, n
            ).vertex_count()

    @pytest.mark.parametrize("m", range(1, 5))
    def test_n_independence_above_m(self, m):
        stable = f_polynomial_stable(m)
        for n in range(m, m + 4):
            assert f_polynomial(m, n) == stable
            assert f_polynomial_stable(m, n) == stable

    def test_below_m_differs_and_stable_rejects(self):
        assert f_polynomial(2, 1) != f_polynomial_stable(2)
        with pytest.raises(ValueError):
            f_polynomial_stable(2, 1)

    def test_top_coefficient_is_one(self):
        for m, n in ((1, 1), (2, 3), (3, 2), (4, 4)):
            assert f_polynomial(m, n).leading_coefficient == 1
            assert f_polynomial(m, n).degree == m


class TestCoefficientTransfer:
    def test_identity_function_at_k3(self):
        lhs, rhs = coefficient_transfer_check(T, 3)
        assert lhs == rhs == Fraction(3, 2)

    def test_constant_at_k0(self):
        assert coefficient_transfer_check(Poly([1]), 0) == (1, 1)

    def test_square_at_k2(self):
        lhs, rhs = coefficient_transfer_check(Poly([0, 0, 1]), 2)
        assert lhs == rhs == 1


class TestShape:
    @pytest.mark.parametrize("m", range(1, 7))
    def test_degree_constant_positivity(self, m):
        for n in range(max(1, m - 1), m + 3):
            poly = ehrhart_closed(m, n)
            assert poly.degree == m
            assert poly.coefficient(0) == 1
            assert all(c > 0 for c in poly.coeffs)

    @pytest.mark.parametrize("m", range(1, 5))
    @pytest.mark.parametrize("t", (1, 2, 3))
    def test_polynomial_in_dilation_scaled_offset(self, m, t):
        # for fixed m and t, the value at n = m - 1 + p is a degree-m
        # polynomial in x = p*t with positive integer coefficients;
        # n = m - 1 + p must stay >= 1, so the m = 1 window starts at p = 1
        base = 0 if m >= 2 else 1
        points = [
            (p * t, ehrhart_postnikov(m, m - 1 + p)(t))
            for p in range(base, base + m + 1)
        ]
        fitted = lagrange_interpolate(points)
        assert fitted.degree == m
        for c in fitted.coeffs:
            assert c > 0 and c.denominator == 1
        # extrapolation makes the degree claim meaningful
        for p in (base + m + 1, base + m + 2):
            assert fitted(p * t) == ehrhart_postnikov(m, m - 1 + p)(t)


class TestDispatch:
    def test_compute(self):
        result = compute_ehrhart(2, 2, "egf")
        assert isinstance(result, EhrhartResult)
        assert result.polynomial == ehrhart_closed(2, 2)
        assert result.method == "egf"

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            compute_ehrhart(2, 2, "montecarlo")

    @pytest.mark.parametrize("m", range(1, 5))
    def test_all_engines_agree(self, m):
        for n in range(max(1, m - 1), m + 3):
            values = {engine(m, n) for engine in ENGINES}
            assert len(values) == 1
