from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given
from hypothesis import strategies as st

from ph_curves.exceptions import DivisionByZero, InputError, MixedRadicand
from ph_curves.functions.exactnum import (
    QuadExtScalar, conj, field_add, field_inv, field_mul, parse_rational,
    rational_to_decimal, scalar_to_decimal,
)

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)


@st.composite
def gaussian(draw):
    return QuadExtScalar(draw(rationals), draw(rationals))


class ParseRationalTest(SimpleTestCase):

    def test_accepts_fraction_integer_and_decimal_text(self):
        self.assertEqual(parse_rational("3/4"), Fraction(3, 4))
        self.assertEqual(parse_rational(-7), Fraction(-7))
        self.assertEqual(parse_rational("-0.051"), Fraction(-51, 1000))

    def test_rejects_garbage(self):
        for value in ("x", "1/0", True, 0.5, None):
            with self.assertRaises(InputError):
                parse_rational(value)


class QuadExtScalarTest(SimpleTestCase):

    def test_gaussian_unit_squares_to_minus_one(self):
        i = QuadExtScalar.sqrt_of(-1)
        self.assertEqual(i * i, -1)

    def test_other_radicand(self):
        root = QuadExtScalar.sqrt_of(Fraction(-3, 4))
        self.assertEqual(root * root, Fraction(-3, 4))
        self.assertEqual((1 + root).norm(), Fraction(7, 4))

    def test_inverse_of_zero(self):
        with self.assertRaises(DivisionByZero):
            QuadExtScalar(0).inverse()
        with self.assertRaises(ZeroDivisionError):
            QuadExtScalar(1, 1) / 0

    def test_mixed_radicands_rejected(self):
        with self.assertRaises(MixedRadicand):
            QuadExtScalar(0, 1, -1) + QuadExtScalar(0, 1, -2)

    def test_rationals_mix_with_any_field(self):
        value = QuadExtScalar(2) * QuadExtScalar(0, 1, -5)
        self.assertEqual(value, QuadExtScalar(0, 2, -5))

    def test_positive_radicand_rejected(self):
        with self.assertRaises(InputError):
            QuadExtScalar(1, 1, 2)

    def test_json_forms(self):
        self.assertEqual(QuadExtScalar("6/4").to_json(), "3/2")
        value = QuadExtScalar(1, -2, -3)
        self.assertEqual(value.to_json(), {"re": "1", "im": "-2", "d": "-3"})
        self.assertEqual(QuadExtScalar.from_json(value.to_json()), value)
        with self.assertRaises(InputError):
            QuadExtScalar.from_json({"re": 1, "j": 2})

    @given(gaussian(), gaussian(), gaussian())
    def test_ring_axioms(self, x, y, z):
        self.assertEqual(x + y, y + x)
        self.assertEqual(x * y, y * x)
        self.assertEqual((x * y) * z, x * (y * z))
        self.assertEqual(x * (y + z), x * y + x * z)

    @given(gaussian())
    def test_inverse_and_conjugate(self, x):
        if x:
            self.assertEqual(x * x.inverse(), 1)
        self.assertEqual(x * x.conj(), x.norm())
        self.assertEqual(x.conj().conj(), x)

    @given(gaussian(), gaussian())
    def test_conjugation_is_a_field_automorphism(self, x, y):
        self.assertEqual((x * y).conj(), x.conj() * y.conj())
        self.assertEqual((x + y).conj(), x.conj() + y.conj())

    def test_radicand_reduced_to_squarefree_part(self):
        self.assertEqual(QuadExtScalar(0, 1, -4), QuadExtScalar(0, 2, -1))
        self.assertEqual(QuadExtScalar(0, 1, -8).d, -2)
        self.assertEqual(QuadExtScalar(0, 1, -8), QuadExtScalar(0, 2, -2))
        self.assertEqual(QuadExtScalar(0, 2) + QuadExtScalar(1, 1, -4),
                         QuadExtScalar(1, 4))
        self.assertEqual(QuadExtScalar.sqrt_of(Fraction(-3, 4)).d, -3)

    def test_field_operations(self):
        one_plus, one_minus = QuadExtScalar(1, 1), QuadExtScalar(1, -1)
        self.assertEqual(field_mul(one_plus, one_minus), 2)
        self.assertEqual(field_add(one_plus, one_minus), 2)
        self.assertEqual(field_inv(QuadExtScalar(2)), Fraction(1, 2))
        self.assertEqual(field_mul(QuadExtScalar(0, 1), QuadExtScalar(0, 1)), -1)
        self.assertEqual(field_inv(one_plus), QuadExtScalar("1/2", "-1/2"))
        self.assertEqual(conj(one_plus), one_minus)
        with self.assertRaises(DivisionByZero):
            field_inv(QuadExtScalar(0))


class DecimalRenderingTest(SimpleTestCase):

    def test_round_half_even(self):
        self.assertEqual(rational_to_decimal(Fraction(1, 8), 2), "0.12")
        self.assertEqual(rational_to_decimal(Fraction(3, 8), 2), "0.38")
        self.assertEqual(rational_to_decimal(Fraction(-5, 2), 0), "-2")

    def test_trailing_zeros_stripped(self):
        self.assertEqual(rational_to_decimal(Fraction(1, 2), 6), "0.5")
        self.assertEqual(rational_to_decimal(Fraction(440, 3), 3), "146.667")
        self.assertEqual(rational_to_decimal(Fraction(-1, 10**9), 3), "0")

    def test_complex_scalar(self):
        value = QuadExtScalar(Fraction(1, 3), 1, -2)
        self.assertEqual(scalar_to_decimal(value, 4),
                         {"re": "0.3333", "im": "1.4142"})
