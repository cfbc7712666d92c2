"""Exact coefficient fields.

Rationals are ``fractions.Fraction`` values (always reduced, positive
denominator). Roots of real polynomials that are not rational live in an
imaginary quadratic field Q(sqrt d), represented by ``QuadExtScalar``. The
radicand is stored as a squarefree negative integer, so sqrt(-4) is kept as
2 sqrt(-1) and sqrt(-3/4) as (1/2) sqrt(-3). A scalar with zero imaginary
part is rational and mixes freely with scalars of any field; two scalars
with non-zero imaginary parts must share their radicand.
"""
from __future__ import annotations

from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

import sympy

from ph_curves.exceptions import DivisionByZero, InputError, MixedRadicand

GAUSSIAN = Fraction(-1)


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"``, integer, or decimal text (``"-0.051"``) exactly."""
    if isinstance(value, bool):
        raise InputError(f"not a rational number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational number: {value!r}") from exc
    raise InputError(f"not a rational number: {value!r}")


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@lru_cache(maxsize=None)
def reduce_radicand(d: Fraction):
    """Write sqrt(d) as s * sqrt(d0), d0 a squarefree negative integer.

    Returns:
        (d0, s) with both values ``Fraction``.
    """
    d = Fraction(d)
    if d >= 0:
        raise InputError(f"radicand must be negative, got {d}")
    square, free = 1, -1
    for prime, power in sympy.factorint(-d.numerator * d.denominator).items():
        square *= prime ** (power // 2)
        if power % 2:
            free *= prime
    return Fraction(free), Fraction(square, d.denominator)


class QuadExtScalar:
    """The number ``re + im * sqrt(d)`` of Q(sqrt d).

    Args:
        re: rational part.
        im: coefficient of ``sqrt(d)``.
        d: the radicand, a negative rational. ``-1`` (Gaussian rationals)
            unless stated otherwise. It is reduced to its squarefree part
            and the excess square moves into ``im``.
    """

    __slots__ = ("_re", "_im", "_d")

    def __init__(self, re=0, im=0, d=GAUSSIAN):
        self._re = parse_rational(re)
        self._im = parse_rational(im)
        d = parse_rational(d)
        if d != GAUSSIAN:
            d, scale = reduce_radicand(d)
            self._im *= scale
        self._d = d

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @property
    def d(self) -> Fraction:
        return self._d

    @classmethod
    def sqrt_of(cls, d) -> QuadExtScalar:
        """The generator ``sqrt(d)`` of Q(sqrt d)."""
        return cls(0, 1, d)

    @property
    def is_rational(self) -> bool:
        return self._im == 0

    def _join(self, other: QuadExtScalar) -> Fraction:
        if self._im == 0:
            return other._d
        if other._im == 0 or other._d == self._d:
            return self._d
        raise MixedRadicand(
            f"cannot combine elements of Q(sqrt {self._d}) and "
            f"Q(sqrt {other._d})"
        )

    def _coerce(self, other):
        if isinstance(other, QuadExtScalar):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadExtScalar(other, 0, self._d)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExtScalar(
            self._re + other._re, self._im + other._im, self._join(other)
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadExtScalar(-self._re, -self._im, self._d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self._join(other)
        return QuadExtScalar(
            self._re * other._re + self._im * other._im * d,
            self._re * other._im + self._im * other._re,
            d,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm ``re^2 - d im^2``; positive for every non-zero element."""
        return self._re * self._re - self._d * self._im * self._im

    def inverse(self) -> QuadExtScalar:
        if not self:
            raise DivisionByZero("inverse of zero")
        norm = self.norm()
        return QuadExtScalar(self._re / norm, -self._im / norm, self._d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadExtScalar(1, 0, self._d)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self) -> QuadExtScalar:
        return QuadExtScalar(self._re, -self._im, self._d)

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __eq__(self, other):
        if isinstance(other, QuadExtScalar):
            return (
                self._re == other._re
                and self._im == other._im
                and (self._im == 0 or self._d == other._d)
            )
        if isinstance(other, (int, Fraction)):
            return self._im == 0 and self._re == other
        return NotImplemented

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im, self._d))

    def __repr__(self):
        return f"QuadExtScalar({self._re!s}, {self._im!s}, {self._d!s})"

    def __str__(self):
        if self._im == 0:
            return format_rational(self._re)
        root = f"√{format_rational(self._d)}"
        if self._re == 0:
            return f"{format_rational(self._im)}*{root}"
        sign = "-" if self._im < 0 else "+"
        return (
            f"{format_rational(self._re)}{sign}"
            f"{format_rational(abs(self._im))}*{root}"
        )

    def to_json(self):
        """``"p/q"`` for rationals, ``{"re", "im", "d"}`` otherwise."""
        if self._im == 0:
            return format_rational(self._re)
        return {
            "re": format_rational(self._re),
            "im": format_rational(self._im),
            "d": format_rational(self._d),
        }

    @classmethod
    def from_json(cls, value) -> QuadExtScalar:
        if isinstance(value, dict):
            unknown = set(value) - {"re", "im", "d"}
            if unknown:
                raise InputError(f"unknown scalar keys: {sorted(unknown)}")
            return cls(
                value.get("re", 0), value.get("im", 0),
                value.get("d", GAUSSIAN)
            )
        return cls(parse_rational(value))


ZERO = QuadExtScalar(0)
ONE = QuadExtScalar(1)


def as_scalar(value) -> QuadExtScalar:
    if isinstance(value, QuadExtScalar):
        return value
    return QuadExtScalar(parse_rational(value))


def field_add(x: QuadExtScalar, y: QuadExtScalar) -> QuadExtScalar:
    return as_scalar(x) + as_scalar(y)


def field_mul(x: QuadExtScalar, y: QuadExtScalar) -> QuadExtScalar:
    return as_scalar(x) * as_scalar(y)


def field_inv(x: QuadExtScalar) -> QuadExtScalar:
    return as_scalar(x).inverse()


def conj(x: QuadExtScalar) -> QuadExtScalar:
    return as_scalar(x).conj()


def _decimal_text(value: Decimal, digits: int) -> str:
    text = format(
        value.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN),
        "f",
    )
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    if text in ("-0", ""):
        text = "0"
    return text


def rational_to_decimal(value: Fraction, digits: int) -> str:
    """Round half-to-even at ``digits`` fractional digits, trailing zeros cut."""
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = digits + len(str(abs(value.numerator))) + 30
        exact = Decimal(value.numerator) / Decimal(value.denominator)
        return _decimal_text(exact, digits)


def scalar_to_decimal(value: QuadExtScalar, digits: int):
    """Decimal rendering: a string for rationals, ``{"re", "im"}`` otherwise.

    ``im`` is the coefficient of the imaginary unit, ``im * sqrt(-d)``.
    """
    value = as_scalar(value)
    if value.is_rational:
        return rational_to_decimal(value.re, digits)
    with localcontext() as ctx:
        ctx.prec = digits + len(str(abs(value.im.numerator))) + 60
        radicand = -value.d
        root = (
            Decimal(radicand.numerator) / Decimal(radicand.denominator)
        ).sqrt()
        imag = Decimal(value.im.numerator) / Decimal(value.im.denominator)
        return {
            "re": rational_to_decimal(value.re, digits),
            "im": _decimal_text(imag * root, digits),
        }
