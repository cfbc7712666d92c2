from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given
from hypothesis import strategies as st

from ph_curves.exceptions import (
    BothZero, CenterMismatch, DivisionByZero, InputError, NotARoot,
)
from ph_curves.functions.exactnum import QuadExtScalar
from ph_curves.functions.hodograph import field_at
from ph_curves.functions.polycore import (
    LaurentSeries, RationalPHCurve, ScalarPoly, Vec3Poly,
    certificate_residual, laurent_expand, merge_factors, poly_gcd,
    series_quotient, taylor_shift, vec,
)
from ph_curves.tests.data import preimage_A, field_F

I = QuadExtScalar(0, 1)
small_polys = st.lists(st.integers(-20, 20), max_size=7).map(ScalarPoly)


def t_over_t_minus_one():
    """r(t) = t / (t - 1) along the x axis."""
    return RationalPHCurve(
        Vec3Poly.from_coefficients([vec(0, 0, 0), vec(Fraction(-1, 2), 0, 0)]),
        [(1, 1)],
    )


class ScalarPolyTest(SimpleTestCase):

    def test_taylor_shift_of_square(self):
        self.assertEqual(taylor_shift(ScalarPoly([0, 0, 1]), 1), [1, 2, 1])

    @given(small_polys, st.integers(-5, 5))
    def test_shift_recenters(self, p, beta):
        self.assertEqual(
            ScalarPoly.from_shifted(p.taylor_coefficients(beta), beta), p)

    @given(small_polys, small_polys.filter(lambda q: not q.is_zero()))
    def test_division_identity(self, p, q):
        quotient, remainder = p.divmod(q)
        self.assertEqual(quotient * q + remainder, p)
        self.assertLess(remainder.degree, q.degree)

    def test_gcd_is_monic(self):
        p = ScalarPoly([4, -6, 2])       # 2 (t - 1)(t - 2)
        q = ScalarPoly([-3, 2, 1])       # (t - 1)(t + 3)
        self.assertEqual(poly_gcd(p, q), ScalarPoly([-1, 1]))
        self.assertEqual(poly_gcd(p, ScalarPoly()), ScalarPoly([2, -3, 1]))

    def test_gcd_of_zeros(self):
        with self.assertRaises(BothZero):
            poly_gcd(ScalarPoly(), ScalarPoly())

    def test_division_by_zero(self):
        with self.assertRaises(DivisionByZero):
            ScalarPoly([1]).divmod(ScalarPoly())

    def test_negative_power_rejected(self):
        with self.assertRaises(InputError):
            ScalarPoly([1, 1]) ** -1
        self.assertEqual(ScalarPoly([1, 1]) ** 0, ScalarPoly([1]))

    def test_integral_inverts_derivative(self):
        p = ScalarPoly([0, 3, Fraction(1, 2), -7])
        self.assertEqual(p.derivative().integral(), p)

    def test_series_quotient(self):
        self.assertEqual(
            series_quotient([QuadExtScalar(1)], [QuadExtScalar(1), QuadExtScalar(-1)], 4),
            [1, 1, 1, 1],
        )
        with self.assertRaises(DivisionByZero):
            series_quotient([QuadExtScalar(1)], [QuadExtScalar(0)], 2)


class Vec3PolyTest(SimpleTestCase):

    def test_field_taylor_coefficient_at_center_is_value(self):
        F = field_F()
        f = F.taylor_coefficients(-10)
        self.assertEqual(f[0], F(-10))
        self.assertEqual(f[0], field_at(preimage_A(), -10))
        self.assertEqual(len(f), 5)

    def test_cross_is_orthogonal(self):
        F = field_F()
        G = F.derivative()
        self.assertTrue(F.dot(F.cross(G)).is_zero())


class LaurentExpansionTest(SimpleTestCase):

    def test_simple_pole(self):
        series = laurent_expand(t_over_t_minus_one(), 1, 2)
        self.assertEqual(series.support(), [-1, 0])
        self.assertEqual(series.coefficient(-1), vec(1, 0, 0))
        self.assertEqual(series.coefficient(0), vec(1, 0, 0))

    def test_lowest_coefficient(self):
        b = Vec3Poly(ScalarPoly([1]), ScalarPoly([0, 1]), ScalarPoly([0, 0, 1]))
        curve = RationalPHCurve(b, [(1, 2), (-1, 1)])
        series = laurent_expand(curve, 1, 0)
        self.assertEqual(series.lo, -2)
        # -2 b(1) / (1 + 1)
        self.assertEqual(series.lowest, vec(-1, -1, -1))

    def test_regular_point_gives_taylor_coefficients(self):
        p = Vec3Poly.from_coefficients([vec(1, 2, 3), vec(0, 1, 0), vec(4, 0, 0)])
        series = laurent_expand(RationalPHCurve.polynomial(p), 2, 5)
        self.assertEqual(
            [series.coefficient(i) for i in range(3)], p.taylor_coefficients(2))
        self.assertEqual(series.hi, 2)

    def test_linearity(self):
        r1 = t_over_t_minus_one()
        r2 = RationalPHCurve(
            Vec3Poly(ScalarPoly([1]), ScalarPoly([0, 2]), ScalarPoly()),
            [(1, 2)],
        )
        self.assertEqual(
            laurent_expand(r1 + r2, 1, 3),
            laurent_expand(r1, 1, 3) + laurent_expand(r2, 1, 3),
        )
        self.assertEqual(
            laurent_expand(r2.scale(3), 1, 3), laurent_expand(r2, 1, 3).scale(3))

    def test_to_curve_reproduces_series(self):
        series = LaurentSeries(3, {-2: vec(1, 0, 0), 1: vec(0, 1, 0)})
        self.assertEqual(laurent_expand(series.to_curve(), 3, 1), series)

    def test_center_outside_coefficient_field(self):
        curve = RationalPHCurve(
            Vec3Poly(ScalarPoly([I]), ScalarPoly(), ScalarPoly()), [(0, 1)])
        with self.assertRaises(CenterMismatch):
            laurent_expand(curve, QuadExtScalar(0, 1, -2), 0)

    def test_series_helpers(self):
        series = LaurentSeries(0, {-3: vec(1, 0, 0), 0: vec(0, 0, 1)})
        self.assertEqual(series.without(0).support(), [-3])
        self.assertEqual(series.lowest, vec(1, 0, 0))
        shifted = LaurentSeries(I, {-1: vec(I, 0, 0)}).conj()
        self.assertEqual(shifted.center, -I)
        self.assertEqual(shifted.coefficient(-1), vec(-I, 0, 0))
        with self.assertRaises(CenterMismatch):
            series + LaurentSeries(1, {0: vec(1, 0, 0)})


class RationalPHCurveTest(SimpleTestCase):

    def test_repeated_root_rejected(self):
        with self.assertRaises(InputError):
            RationalPHCurve(Vec3Poly(), [(1, 1), (1, 2)])

    def test_zero_unit_rejected(self):
        with self.assertRaises(DivisionByZero):
            RationalPHCurve(Vec3Poly(), [], unit=0)

    def test_evaluation(self):
        curve = t_over_t_minus_one()
        self.assertEqual(curve(3), vec(Fraction(3, 2), 0, 0))
        with self.assertRaises(DivisionByZero):
            curve(1)

    def test_equality_ignores_unit(self):
        curve = t_over_t_minus_one()
        doubled = RationalPHCurve(curve.numerator * QuadExtScalar(2),
                                  curve.factors, unit=2)
        self.assertTrue(doubled.equals(curve))
        self.assertEqual(doubled.normalized().numerator, curve.numerator)

    def test_over_requires_every_root(self):
        curve = t_over_t_minus_one()
        with self.assertRaises(NotARoot):
            curve.over([(2, 1)])
        self.assertEqual(curve.over([(1, 1), (2, 1)]).degree, 2)

    def test_conjugate_pair_is_real(self):
        b = Vec3Poly(ScalarPoly([1]), ScalarPoly([0, 1]), ScalarPoly())
        self.assertTrue(RationalPHCurve(b, [(I, 1), (-I, 1)]).is_real())
        self.assertFalse(RationalPHCurve(b, [(I, 1)]).is_real())
        self.assertEqual(
            RationalPHCurve(b, [(I, 1), (-I, 1)]).alpha(), ScalarPoly([1, 0, 1]))

    def test_pairs_from_two_quadratic_fields(self):
        root2 = QuadExtScalar(0, 1, -2)
        b = Vec3Poly(ScalarPoly([1]), ScalarPoly([0, 1]), ScalarPoly())
        curve = RationalPHCurve(b, [(I, 1), (-I, 1), (root2, 2), (-root2, 2)])
        self.assertEqual(curve.alpha(), ScalarPoly([1, 0, 1]) * ScalarPoly([2, 0, 1]) ** 2)
        self.assertEqual(
            curve.alpha_hat(I), ScalarPoly([I, 1]) * ScalarPoly([2, 0, 1]) ** 2)
        self.assertTrue(curve.is_real())
        self.assertEqual(laurent_expand(curve, I, 0).lo, -1)
        self.assertEqual(laurent_expand(curve, root2, 0).lo, -2)
        doubled = curve + curve
        self.assertTrue(doubled.equals(
            RationalPHCurve(b * QuadExtScalar(2), curve.factors)))

    def test_radicand_with_square_factor(self):
        two_i = QuadExtScalar(0, 1, -4)
        self.assertEqual(two_i, QuadExtScalar(0, 2))
        b = Vec3Poly(ScalarPoly([1]), ScalarPoly(), ScalarPoly())
        curve = RationalPHCurve(b, [(two_i, 1), (-two_i, 1), (I, 1), (-I, 1)])
        self.assertEqual(
            curve.alpha(), ScalarPoly([4, 0, 1]) * ScalarPoly([1, 0, 1]))

    def test_as_polynomial(self):
        with self.assertRaises(NotARoot):
            t_over_t_minus_one().as_polynomial()
        p = Vec3Poly.from_coefficients([vec(1, 0, 0), vec(0, 1, 0)])
        self.assertEqual(RationalPHCurve.polynomial(p).as_polynomial(), p)

    def test_merge_factors_keeps_maximal_multiplicity(self):
        merged = merge_factors([[(1, 2), (I, 1)], [(1, 3), (-I, 1)]])
        self.assertEqual(merged, ((1, 3), (I, 1), (-I, 1)))

    def test_integral_of_field_is_certified(self):
        F = field_F()
        curve = RationalPHCurve.polynomial(F.integral())
        mu = ScalarPoly([Fraction(1, 2)])
        self.assertTrue(certificate_residual(curve, F, mu).is_zero())
        self.assertFalse(certificate_residual(curve, F, mu * 2).is_zero())
