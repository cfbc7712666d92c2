"""Conversion between real monomial denominators and factored root form."""
from __future__ import annotations

import logging
from fractions import Fraction

import sympy

from ph_curves.exceptions import DivisionByZero, UnsupportedFactor
from ph_curves.functions.exactnum import QuadExtScalar, parse_rational

logger = logging.getLogger(__name__)

_t = sympy.Symbol("t")


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def factor_real_denominator(coefficients):
    """Factor a rational polynomial (ascending coefficients) over Q.

    Linear factors give rational roots; irreducible quadratics
    ``t^2 + p t + q`` with negative discriminant give the conjugate pair
    ``-p/2 +- sqrt(d)``, ``d = p^2/4 - q``.

    Returns:
        (factors, unit) with ``factors`` a list of ``(root, multiplicity)``.

    Raises:
        UnsupportedFactor: an irreducible factor has degree three or more, or
            a quadratic factor has real irrational roots.
    """
    values = [parse_rational(c) for c in coefficients]
    while values and values[-1] == 0:
        values.pop()
    if not values:
        raise DivisionByZero("denominator polynomial is zero")
    poly = sympy.Poly(
        [sympy.Rational(v.numerator, v.denominator) for v in reversed(values)],
        _t, domain=sympy.QQ,
    )
    _, parts = poly.factor_list()
    factors = []
    for part, mult in parts:
        monic = part.monic()
        coeffs = [_to_fraction(c) for c in monic.all_coeffs()]
        if monic.degree() == 1:
            factors.append((QuadExtScalar(-coeffs[1]), mult))
        elif monic.degree() == 2:
            p, q = coeffs[1], coeffs[2]
            d = p * p / 4 - q
            if d >= 0:
                raise UnsupportedFactor(
                    f"factor {monic.as_expr()} has real irrational roots"
                )
            factors.append((QuadExtScalar(-p / 2, 1, d), mult))
            factors.append((QuadExtScalar(-p / 2, -1, d), mult))
        else:
            raise UnsupportedFactor(
                f"irreducible factor {monic.as_expr()} of degree "
                f"{monic.degree()} is not supported"
            )
    logger.debug("factored denominator into %d roots", len(factors))
    return factors, QuadExtScalar(values[-1])

