"""Polynomials, Taylor re-centering and finite Laurent series over Q(sqrt d).

All objects are immutable values. Polynomials store dense ascending
coefficients with trailing zeros trimmed; the zero polynomial has no
coefficients and degree -1.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ph_curves.exceptions import (
    BothZero, CenterMismatch, DivisionByZero, InputError, NotARoot,
)
from ph_curves.functions.exactnum import ONE, ZERO, QuadExtScalar, as_scalar

logger = logging.getLogger(__name__)


# 3-vectors are plain tuples of scalars.

def vec(x, y, z):
    return (as_scalar(x), as_scalar(y), as_scalar(z))


ZERO_VEC = (ZERO, ZERO, ZERO)


def vadd(u, v):
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def vsub(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def vscale(c, v):
    return (c * v[0], c * v[1], c * v[2])


def vconj(v):
    return (v[0].conj(), v[1].conj(), v[2].conj())


def is_zero_vec(v):
    return not (v[0] or v[1] or v[2])


def det3(u, v, w):
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )


def vec_multiple(u, v):
    """Return c with u == c * v, or None if u is not a multiple of v."""
    pivot = next(i for i in range(3) if v[i])
    c = u[pivot] / v[pivot]
    if vsub(u, vscale(c, v)) == ZERO_VEC:
        return c
    return None


class ScalarPoly:
    """Polynomial in t with ``QuadExtScalar`` coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        values = [as_scalar(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        self.coeffs = tuple(values)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, k, c=1):
        return cls([ZERO] * k + [as_scalar(c)])

    @classmethod
    def linear_factor(cls, beta):
        """The polynomial ``t - beta``."""
        return cls([-as_scalar(beta), ONE])

    @classmethod
    def from_shifted(cls, coeffs, beta):
        """Expand ``sum c_i (t - beta)^i`` into monomial form (Horner)."""
        result = cls()
        shift = cls.linear_factor(beta)
        for c in reversed(list(coeffs)):
            result = result * shift + cls([c])
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> QuadExtScalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coefficient(self, i: int) -> QuadExtScalar:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return ZERO

    def __add__(self, other):
        if not isinstance(other, ScalarPoly):
            other = ScalarPoly([other])
        size = max(len(self.coeffs), len(other.coeffs))
        return ScalarPoly(
            [self.coefficient(i) + other.coefficient(i) for i in range(size)]
        )

    __radd__ = __add__

    def __neg__(self):
        return ScalarPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, ScalarPoly):
            other = ScalarPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return ScalarPoly([other]) - self

    def __mul__(self, other):
        if isinstance(other, (ScalarPoly, Vec3Poly)):
            if isinstance(other, Vec3Poly):
                return other * self
            if not self.coeffs or not other.coeffs:
                return ScalarPoly()
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return ScalarPoly(out)
        c = as_scalar(other)
        return ScalarPoly([c * a for a in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise InputError(f"negative polynomial power {exponent}")
        result = ScalarPoly([ONE])
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, ScalarPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        x = as_scalar(x)
        result = ZERO
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __repr__(self):
        return f"ScalarPoly([{', '.join(str(c) for c in self.coeffs)}])"

    def derivative(self):
        return ScalarPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def integral(self):
        """Antiderivative with zero constant term."""
        return ScalarPoly(
            [ZERO] + [c / (i + 1) for i, c in enumerate(self.coeffs)]
        )

    def conj(self):
        return ScalarPoly([c.conj() for c in self.coeffs])

    def monic(self):
        if not self.coeffs:
            return self
        return self * self.leading.inverse()

    def divmod(self, divisor: ScalarPoly):
        """Euclidean division; returns (quotient, remainder)."""
        if divisor.is_zero():
            raise DivisionByZero("polynomial division by zero")
        remainder = list(self.coeffs)
        dd = divisor.degree
        inv = divisor.leading.inverse()
        quotient = [ZERO] * max(len(remainder) - dd, 0)
        for k in range(len(remainder) - dd - 1, -1, -1):
            c = remainder[k + dd] * inv
            quotient[k] = c
            if c:
                for j, b in enumerate(divisor.coeffs):
                    remainder[k + j] = remainder[k + j] - c * b
        return ScalarPoly(quotient), ScalarPoly(remainder[:dd])

    def taylor_coefficients(self, beta):
        """Coefficients c_i with ``p = sum c_i (t - beta)^i``."""
        return _taylor_shift_list(list(self.coeffs), as_scalar(beta))

    def scalars(self):
        return list(self.coeffs)

    def to_json(self):
        return [c.to_json() for c in self.coeffs]


def _taylor_shift_list(work, beta):
    n = len(work)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            work[j] = work[j] + beta * work[j + 1]
    return work


class Vec3Poly:
    """Vector valued polynomial with components x, y, z."""

    __slots__ = ("components",)

    def __init__(self, x=None, y=None, z=None):
        self.components = tuple(
            c if isinstance(c, ScalarPoly) else ScalarPoly(c or ())
            for c in (x, y, z)
        )

    @classmethod
    def from_coefficients(cls, coefficients):
        """Build from ascending 3-vector coefficients."""
        coefficients = list(coefficients)
        return cls(*(
            ScalarPoly([v[k] for v in coefficients]) for k in range(3)
        ))

    @classmethod
    def constant(cls, v):
        return cls.from_coefficients([v])

    @classmethod
    def from_shifted(cls, coefficients, beta):
        coefficients = list(coefficients)
        return cls(*(
            ScalarPoly.from_shifted([v[k] for v in coefficients], beta)
            for k in range(3)
        ))

    @property
    def x(self):
        return self.components[0]

    @property
    def y(self):
        return self.components[1]

    @property
    def z(self):
        return self.components[2]

    @property
    def degree(self) -> int:
        return max(c.degree for c in self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def coefficient(self, i: int):
        return tuple(c.coefficient(i) for c in self.components)

    def coefficients(self):
        return [self.coefficient(i) for i in range(self.degree + 1)]

    @property
    def leading(self):
        return self.coefficient(self.degree)

    def __add__(self, other):
        return Vec3Poly(*(a + b for a, b in
                          zip(self.components, other.components)))

    def __neg__(self):
        return Vec3Poly(*(-a for a in self.components))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Multiply by a scalar or a ScalarPoly."""
        return Vec3Poly(*(a * other for a in self.components))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Vec3Poly):
            return self.components == other.components
        return NotImplemented

    def __hash__(self):
        return hash(self.components)

    def __call__(self, t):
        return tuple(c(t) for c in self.components)

    def __repr__(self):
        return f"Vec3Poly({self.coefficients()!r})"

    def derivative(self):
        return Vec3Poly(*(c.derivative() for c in self.components))

    def integral(self):
        return Vec3Poly(*(c.integral() for c in self.components))

    def conj(self):
        return Vec3Poly(*(c.conj() for c in self.components))

    def cross(self, other):
        a, b = self.components, other.components
        return Vec3Poly(
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        )

    def dot(self, other):
        a, b = self.components, other.components
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]

    def divmod(self, divisor: ScalarPoly):
        parts = [c.divmod(divisor) for c in self.components]
        return (Vec3Poly(*(q for q, _ in parts)),
                Vec3Poly(*(r for _, r in parts)))

    def taylor_coefficients(self, beta):
        """3-vectors c_i with ``p = sum c_i (t - beta)^i``."""
        shifted = [c.taylor_coefficients(beta) for c in self.components]
        size = self.degree + 1
        return [
            tuple(
                shifted[k][i] if i < len(shifted[k]) else ZERO
                for k in range(3)
            )
            for i in range(size)
        ]

    def scalars(self):
        return [s for c in self.components for s in c.coeffs]

    def to_json(self):
        return [[c.to_json() for c in v] for v in self.coefficients()]


def conjugate_pair_quadratic(root) -> ScalarPoly:
    """The real monic quadratic ``(t - root)(t - conj(root))``."""
    root = as_scalar(root)
    return ScalarPoly([root.norm(), -2 * root.re, 1])


def factor_product(factors) -> ScalarPoly:
    """prod (t - root)^e over ``(root, e)`` pairs.

    A root and its conjugate with equal exponents enter as one real
    quadratic, so pairs from different quadratic fields never meet.
    """
    factors = [(as_scalar(root), e) for root, e in factors if e]
    result = ScalarPoly([ONE])
    used = set()
    for i, (root, e) in enumerate(factors):
        if i in used:
            continue
        if not root.is_rational:
            partner = next(
                (j for j, (other, f) in enumerate(factors)
                 if j > i and j not in used and f == e
                 and other == root.conj()),
                None,
            )
            if partner is not None:
                used.add(partner)
                result = result * conjugate_pair_quadratic(root) ** e
                continue
        result = result * ScalarPoly.linear_factor(root) ** e
    return result


def taylor_shift(p, beta):
    """Taylor coefficients of a scalar or vector polynomial at ``beta``."""
    return p.taylor_coefficients(beta)


def poly_gcd(p: ScalarPoly, q: ScalarPoly) -> ScalarPoly:
    """Monic greatest common divisor (Euclid)."""
    if p.is_zero() and q.is_zero():
        raise BothZero("gcd of two zero polynomials")
    while not q.is_zero():
        p, q = q, p.divmod(q)[1]
    return p.monic()


def series_quotient(numerator, denominator, count, vector=None):
    """First ``count`` coefficients of the power series numerator/denominator.

    ``numerator`` is a list of 3-vectors or scalars, ``denominator`` a list of
    scalars with non-zero constant term.
    """
    if not denominator or not denominator[0]:
        raise DivisionByZero("series division by a series without unit term")
    if vector is None:
        vector = bool(numerator) and isinstance(numerator[0], tuple)
    inv = denominator[0].inverse()
    out = []
    for k in range(count):
        acc = numerator[k] if k < len(numerator) else (
            ZERO_VEC if vector else ZERO)
        for j in range(1, min(k, len(denominator) - 1) + 1):
            term = out[k - j]
            if vector:
                acc = vsub(acc, vscale(denominator[j], term))
            else:
                acc = acc - denominator[j] * term
        out.append(vscale(inv, acc) if vector else acc * inv)
    return out


class LaurentSeries:
    """Finite Laurent expansion ``sum_{i=lo..hi} r_i (t - center)^i``."""

    __slots__ = ("center", "coeffs", "lo", "hi")

    def __init__(self, center, coeffs):
        self.center = as_scalar(center)
        self.coeffs = {
            int(i): tuple(as_scalar(c) for c in v)
            for i, v in sorted(coeffs.items()) if not is_zero_vec(v)
        }
        indices = list(self.coeffs)
        self.lo = indices[0] if indices else 0
        self.hi = indices[-1] if indices else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int):
        return self.coeffs.get(i, ZERO_VEC)

    def support(self):
        return list(self.coeffs)

    @property
    def lowest(self):
        return self.coefficient(self.lo)

    def _check_center(self, other):
        if self.center != other.center and not (
                self.is_zero() or other.is_zero()):
            raise CenterMismatch("Laurent series have different centers")

    def __add__(self, other):
        self._check_center(other)
        keys = set(self.coeffs) | set(other.coeffs)
        return LaurentSeries(
            self.center if self.coeffs else other.center,
            {i: vadd(self.coefficient(i), other.coefficient(i))
             for i in keys},
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        return LaurentSeries(
            self.center, {i: vscale(c, v) for i, v in self.coeffs.items()}
        )

    def conj(self):
        return LaurentSeries(
            self.center.conj(),
            {i: vconj(v) for i, v in self.coeffs.items()},
        )

    def without(self, index: int):
        return LaurentSeries(
            self.center,
            {i: v for i, v in self.coeffs.items() if i != index},
        )

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.coeffs == other.coeffs and (
            self.center == other.center or not self.coeffs)

    def __hash__(self):
        return hash((self.center, tuple(self.coeffs.items())))

    def __repr__(self):
        return f"LaurentSeries({self.center}, {self.coeffs!r})"

    def to_curve(self) -> RationalPHCurve:
        """The rational curve -2b/(t - center)^n with this expansion."""
        n = max(0, -self.lo) if self.coeffs else 0
        shifted = [ZERO_VEC] * (self.hi + n + 1 if self.coeffs else 0)
        half = QuadExtScalar(-1, 0) / 2
        for i, v in self.coeffs.items():
            shifted[i + n] = vscale(half, v)
        numerator = Vec3Poly.from_shifted(shifted, self.center)
        factors = ((self.center, n),) if n else ()
        return RationalPHCurve(numerator, factors)


def _radicands(scalars):
    return {s.d for s in scalars if not s.is_rational}


class RationalPHCurve:
    """The curve ``r = -2 b / alpha`` with ``alpha`` kept factored.

    Args:
        numerator: the vector polynomial b.
        factors: sequence of ``(root, multiplicity)`` pairs with distinct roots.
        unit: the constant factor of alpha.
    """

    __slots__ = ("numerator", "factors", "unit")

    def __init__(self, numerator: Vec3Poly, factors=(), unit=ONE):
        cleaned = []
        for root, mult in factors:
            root = as_scalar(root)
            mult = int(mult)
            if mult < 1:
                raise InputError(f"multiplicity must be positive: {mult}")
            if any(root == r for r, _ in cleaned):
                raise InputError(f"repeated denominator root {root}")
            cleaned.append((root, mult))
        self.numerator = numerator
        self.factors = tuple(cleaned)
        self.unit = as_scalar(unit)
        if not self.unit:
            raise DivisionByZero("denominator unit is zero")

    @classmethod
    def polynomial(cls, p: Vec3Poly) -> RationalPHCurve:
        """The polynomial curve p, i.e. b = -p/2 over alpha = 1."""
        return cls(p * (QuadExtScalar(-1) / 2))

    @property
    def roots(self):
        return [r for r, _ in self.factors]

    def multiplicity(self, beta) -> int:
        beta = as_scalar(beta)
        for root, mult in self.factors:
            if root == beta:
                return mult
        return 0

    @property
    def denominator_degree(self) -> int:
        return sum(mult for _, mult in self.factors)

    def alpha(self) -> ScalarPoly:
        return factor_product(self.factors) * self.unit

    def alpha_hat(self, beta) -> ScalarPoly:
        """alpha with the factor (t - beta)^n removed, unit included."""
        beta = as_scalar(beta)
        return factor_product(
            [(root, mult) for root, mult in self.factors if root != beta]
        ) * self.unit

    def is_polynomial_form(self) -> bool:
        return not self.factors

    def __call__(self, t):
        denominator = self.alpha()(t)
        if not denominator:
            raise DivisionByZero(f"curve evaluated at a pole t = {t}")
        scale = QuadExtScalar(-2, 0) / denominator
        return vscale(scale, self.numerator(t))

    def scalars(self):
        return self.numerator.scalars() + self.roots + [self.unit]

    def coefficient_radicands(self):
        return _radicands(self.scalars())

    def normalized(self) -> RationalPHCurve:
        """Same curve with unit one."""
        if self.unit == ONE:
            return self
        return RationalPHCurve(
            self.numerator * self.unit.inverse(), self.factors
        )

    def over(self, factors) -> Vec3Poly:
        """Numerator b' with r = -2 b' / prod (t - root)^mult over ``factors``.

        ``factors`` must contain every root of this curve with at least its
        multiplicity.
        """
        extra = []
        for root, mult in factors:
            own = self.multiplicity(root)
            if own > mult:
                raise NotARoot(
                    f"denominator factor (t - {root})^{own} not covered"
                )
            extra.append((root, mult - own))
        covered = [as_scalar(r) for r, _ in factors]
        for root in self.roots:
            if not any(root == r for r in covered):
                raise NotARoot(f"denominator root {root} not covered")
        return self.numerator * (
            factor_product(extra) * self.unit.inverse())

    def __add__(self, other):
        factors = merge_factors([self.factors, other.factors])
        return RationalPHCurve(
            self.over(factors) + other.over(factors), factors
        )

    def __neg__(self):
        return RationalPHCurve(-self.numerator, self.factors, self.unit)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> RationalPHCurve:
        return RationalPHCurve(
            self.numerator * as_scalar(c), self.factors, self.unit
        )

    def conj(self) -> RationalPHCurve:
        return RationalPHCurve(
            self.numerator.conj(),
            [(r.conj(), m) for r, m in self.factors],
            self.unit.conj(),
        )

    def equals(self, other) -> bool:
        """Equality of the represented curves (cross-multiplied)."""
        return (self - other).numerator.is_zero()

    def is_real(self) -> bool:
        if not all(s.is_rational for s in self.numerator.scalars()):
            return False
        if not self.unit.is_rational:
            return False
        return all(
            self.multiplicity(root.conj()) == mult
            for root, mult in self.factors
        )

    def as_polynomial(self) -> Vec3Poly:
        """The polynomial -2b/alpha; raises if alpha does not divide b."""
        quotient, remainder = (
            self.numerator * QuadExtScalar(-2, 0)).divmod(self.alpha())
        if not remainder.is_zero():
            raise NotARoot("curve has poles; it is not polynomial")
        return quotient

    def __repr__(self):
        return (f"RationalPHCurve({self.numerator!r}, "
                f"{[(str(r), m) for r, m in self.factors]}, {self.unit})")


def merge_factors(factor_lists):
    """Union of factorizations with maximal multiplicities, first-seen order."""
    merged = []
    for factors in factor_lists:
        for root, mult in factors:
            root = as_scalar(root)
            for k, (r, m) in enumerate(merged):
                if r == root:
                    merged[k] = (r, max(m, mult))
                    break
            else:
                merged.append((root, mult))
    return tuple(merged)


def laurent_expand(r: RationalPHCurve, beta, hi: int) -> LaurentSeries:
    """Laurent expansion of r at beta with coefficients up to index ``hi``.

    Raises:
        CenterMismatch: beta and the curve's coefficients live in different
            quadratic fields.
    """
    beta = as_scalar(beta)
    alpha_hat = r.alpha_hat(beta)
    radicands = _radicands(r.numerator.scalars() + alpha_hat.scalars())
    if not beta.is_rational and radicands - {beta.d}:
        raise CenterMismatch(
            f"center {beta} is not in the coefficient field of the curve"
        )
    n = r.multiplicity(beta)
    count = hi + n + 1
    if count <= 0:
        return LaurentSeries(beta, {})
    numerator = (r.numerator * QuadExtScalar(-2, 0)).taylor_coefficients(beta)
    denominator = alpha_hat.taylor_coefficients(beta)
    terms = series_quotient(numerator, denominator, count, vector=True)
    logger.debug("Laurent expansion at %s: order %d, %d terms", beta, n, count)
    return LaurentSeries(beta, {k - n: v for k, v in enumerate(terms)})


def certificate_residual(curve: RationalPHCurve, F: Vec3Poly,
                         mu: ScalarPoly) -> Vec3Poly:
    """alpha' b - alpha b' - mu F; zero exactly when mu certifies the curve."""
    alpha = curve.alpha()
    b = curve.numerator
    return b * alpha.derivative() - b.derivative() * alpha - F * mu


@dataclass
class BasisElement:
    """One canonical basis curve with its certificate.

    ``label`` is the Laurent index m of q^m, or a name such as ``"x"`` or
    ``"p5"`` for constant and integrated polynomial curves.
    """
    label: object
    curve: RationalPHCurve
    mu: ScalarPoly
    laurent: LaurentSeries | None = None
    upper: int | None = None


@dataclass
class SpaceBasis:
    """Ordered basis of one of the spaces Q, R, X (at ``beta``) or P."""
    kind: str
    beta: QuadExtScalar | None
    m: int | None
    M: int
    elements: list = field(default_factory=list)
    conjugate_pair: bool = False

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def curves(self):
        return [e.curve for e in self.elements]
