"""Quaternion polynomials and the tangent field F = A i conj(A)."""
from __future__ import annotations

import logging
from dataclasses import dataclass

from ph_curves.exceptions import InputError, ZeroInput
from ph_curves.functions.exactnum import ONE, ZERO, QuadExtScalar, as_scalar
from ph_curves.functions.polycore import (
    BasisElement, ScalarPoly, SpaceBasis, RationalPHCurve, Vec3Poly,
    ZERO_VEC, poly_gcd, vadd,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Quaternion:
    """``w + x i + y j + z k``."""
    w: QuadExtScalar = ZERO
    x: QuadExtScalar = ZERO
    y: QuadExtScalar = ZERO
    z: QuadExtScalar = ZERO

    @classmethod
    def of(cls, w=0, x=0, y=0, z=0):
        return cls(as_scalar(w), as_scalar(x), as_scalar(y), as_scalar(z))

    def __iter__(self):
        return iter((self.w, self.x, self.y, self.z))

    def __bool__(self):
        return any(self)

    def __add__(self, other):
        return Quaternion(*(a + b for a, b in zip(self, other)))

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            c = as_scalar(other)
            return Quaternion(*(c * a for a in self))
        w1, x1, y1, z1 = self
        w2, x2, y2, z2 = other
        return Quaternion(
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )

    def conj(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self):
        """``Q conj(Q) = w^2 + x^2 + y^2 + z^2``."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def vector(self):
        return (self.x, self.y, self.z)

    def to_json(self):
        return [c.to_json() for c in self]


UNIT_I = Quaternion(ZERO, ONE, ZERO, ZERO)


def _spread(p: Quaternion, q: Quaternion):
    """Symmetric bilinear form with ``_spread(q, q) = q i conj(q)``."""
    return (
        p.w * q.w + p.x * q.x - p.y * q.y - p.z * q.z,
        p.x * q.y + p.y * q.x + p.w * q.z + p.z * q.w,
        p.x * q.z + p.z * q.x - p.w * q.y - p.y * q.w,
    )


class QuaternionPoly:
    """Polynomial with quaternion coefficients, ascending powers of t."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        values = [
            c if isinstance(c, Quaternion) else Quaternion.of(*c)
            for c in coeffs
        ]
        while values and not values[-1]:
            values.pop()
        self.coeffs = tuple(values)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    a = degree

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Quaternion:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Quaternion()

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return QuaternionPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return QuaternionPoly()
        out = [Quaternion()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, p in enumerate(self.coeffs):
            for j, q in enumerate(other.coeffs):
                out[i + j] = out[i + j] + p * q
        return QuaternionPoly(out)

    def conj(self):
        return QuaternionPoly([c.conj() for c in self.coeffs])

    def __call__(self, t) -> Quaternion:
        t = as_scalar(t)
        result = Quaternion()
        for c in reversed(self.coeffs):
            result = result * t + c
        return result

    def __eq__(self, other):
        if isinstance(other, QuaternionPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QuaternionPoly({[c.to_json() for c in self.coeffs]})"

    def to_json(self):
        return [c.to_json() for c in self.coeffs]


def hodograph_field(A: QuaternionPoly) -> Vec3Poly:
    """F = A i conj(A), coefficient-wise via the symmetric form of q i conj(q).

    Raises:
        ZeroInput: A is the zero polynomial.
    """
    if A.is_zero():
        raise ZeroInput("quaternion polynomial A is zero")
    coefficients = []
    for k in range(2 * A.degree + 1):
        acc = ZERO_VEC
        for i in range(max(0, k - A.degree), k // 2 + 1):
            j = k - i
            term = _spread(A.coeffs[i], A.coeffs[j])
            acc = vadd(acc, term)
            if i != j:
                acc = vadd(acc, term)
        coefficients.append(acc)
    F = Vec3Poly.from_coefficients(coefficients)
    logger.debug("hodograph field of degree %d from deg A = %d",
                 F.degree, A.degree)
    return F


def hodograph_field_by_product(A: QuaternionPoly) -> Vec3Poly:
    """F through the full quaternion product A * i * conj(A).

    Raises:
        ZeroInput: A is zero.
        RuntimeError: the product has a non-vanishing scalar part.
    """
    if A.is_zero():
        raise ZeroInput("quaternion polynomial A is zero")
    product = (A * UNIT_I) * A.conj()
    if any(c.w for c in product.coeffs):
        raise RuntimeError("A i conj(A) has a non-zero scalar part")
    return Vec3Poly.from_coefficients([c.vector() for c in product.coeffs])


def field_at(A: QuaternionPoly, t):
    """Pointwise A(t) i conj(A(t))."""
    q = A(t)
    return ((q * UNIT_I) * q.conj()).vector()


def as_field(source) -> Vec3Poly:
    """Accept either a quaternion preimage A or a tangent field F."""
    if isinstance(source, QuaternionPoly):
        return hodograph_field(source)
    if isinstance(source, Vec3Poly):
        if source.is_zero():
            raise ZeroInput("tangent field F is zero")
        return source
    raise InputError(f"expected A or F, got {type(source).__name__}")


def is_primitive(F: Vec3Poly) -> bool:
    """True iff the three components of F have a constant gcd."""
    if F.is_zero():
        raise ZeroInput("tangent field F is zero")
    gcd = ScalarPoly()
    for component in F.components:
        if not component.is_zero():
            gcd = poly_gcd(gcd, component) if not gcd.is_zero() else component.monic()
    return gcd.degree == 0


def determinant_polynomial(F: Vec3Poly) -> ScalarPoly:
    """det[F, F', F''] as a polynomial in t."""
    d1 = F.derivative()
    return F.dot(d1.cross(d1.derivative()))


def determinant_identity_check(F: Vec3Poly) -> bool:
    """Compare det[u, u', u''] with det[F, F', F'']^2 for u = F x F'."""
    u = F.cross(F.derivative())
    u1 = u.derivative()
    lhs = u.dot(u1.cross(u1.derivative()))
    rhs = determinant_polynomial(F) ** 2
    return lhs == rhs


_AXES = (("x", (ONE, ZERO, ZERO)), ("y", (ZERO, ONE, ZERO)),
         ("z", (ZERO, ZERO, ONE)))


def constant_elements():
    """The three translations, each with certificate zero."""
    return [
        BasisElement(name, RationalPHCurve.polynomial(Vec3Poly.constant(v)),
                     ScalarPoly())
        for name, v in _AXES
    ]


def integrated_curve(F: Vec3Poly, k: int) -> BasisElement:
    """(k+1) * integral of t^k F, zero at t = 0; certificate (k+1) t^k / 2."""
    weight = ScalarPoly.monomial(k, k + 1)
    p = (F * weight).integral()
    return BasisElement(
        f"p{p.degree}", RationalPHCurve.polynomial(p),
        weight * (QuadExtScalar(1) / 2),
    )


def polynomial_ph_basis(source, M: int) -> SpaceBasis:
    """Basis of the polynomial solution curves of degree at most M.

    Three translations plus ``(k+1) * integral t^k F`` for k = 0..M-2a-1.
    ``M < 0`` gives the empty basis.
    """
    F = as_field(source)
    basis = SpaceBasis("P", None, None, M)
    if M < 0:
        logger.info("P^%d is the zero space", M)
        return basis
    basis.elements.extend(constant_elements())
    for k in range(M - F.degree):
        basis.elements.append(integrated_curve(F, k))
    logger.debug("P^%d has dimension %d", M, basis.dimension)
    return basis
