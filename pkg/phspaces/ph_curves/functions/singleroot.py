"""Solution curves with a single denominator root.

A curve r = -2 b / (t - beta)^n solves the tangent condition exactly when
``alpha' b - alpha b' = mu F`` for a scalar polynomial mu. Writing b, mu and F
in powers of s = t - beta turns this into the structured system

    (k - 2n) b_{k-n} = sum_i mu_i f_{k-1-i},    k >= 1,

stored here with this sign of mu. The certificate of the identity above is
therefore ``-mu``; every public function returns certificates in that sign.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import sympy
from sympy.polys.matrices import DomainMatrix

from ph_curves.exceptions import (
    DegenerateIndex, InputError, LeadingCoefficientZero,
)
from ph_curves.functions import linalg
from ph_curves.functions.exactnum import ONE, ZERO, QuadExtScalar, as_scalar
from ph_curves.functions.hodograph import as_field, constant_elements
from ph_curves.functions.polycore import (
    ZERO_VEC, BasisElement, LaurentSeries, RationalPHCurve, ScalarPoly,
    SpaceBasis, Vec3Poly, certificate_residual, det3, is_zero_vec, vadd,
    vscale,
)

logger = logging.getLogger(__name__)

SPACE_KINDS = ("Q", "R", "X")
DEGENERATE_INDICES = (-2, -1, 0)


@dataclass(frozen=True)
class SingleRootSystem:
    """The linear system for denominator (t - beta)^n and deg b <= N.

    ``f`` holds the Taylor coefficients f_0..f_{2a} of F at beta.
    """
    n: int
    N: int
    f: tuple

    @classmethod
    def build(cls, F: Vec3Poly, beta, n: int, N: int) -> SingleRootSystem:
        return cls(n, N, tuple(F.taylor_coefficients(as_scalar(beta))))

    @property
    def field_degree(self) -> int:
        return len(self.f) - 1

    def coefficient(self, i: int):
        if 0 <= i < len(self.f):
            return self.f[i]
        return ZERO_VEC

    @property
    def mu_count(self) -> int:
        return self.n + self.N

    @property
    def free_mu(self) -> range:
        """Indices of the mu variables not forced to zero."""
        return range(self.n - 1, self.n + self.N - self.field_degree)

    @property
    def has_critical(self) -> bool:
        return self.n <= self.N

    def critical_rows(self):
        """The 2n-th equation as three rows over the free mu variables."""
        if not self.has_critical:
            return []
        top = 2 * self.n - 1
        return [
            [self.coefficient(top - i)[c] for i in self.free_mu]
            for c in range(3)
        ]

    def b_from_mu(self, mu, b_n=ZERO_VEC):
        """b_0..b_N determined by a full mu vector (system sign)."""
        b = []
        for j in range(self.N + 1):
            if j == self.n:
                b.append(b_n)
                continue
            acc = ZERO_VEC
            for i in range(self.n - 1, min(j + self.n, len(mu))):
                if mu[i]:
                    acc = vadd(acc, vscale(mu[i], self.coefficient(j + self.n - 1 - i)))
            b.append(vscale(QuadExtScalar(1) / (j - self.n), acc))
        return b

    def expand_mu(self, free_values):
        mu = [ZERO] * self.mu_count
        for i, value in zip(self.free_mu, free_values):
            mu[i] = as_scalar(value)
        return mu


@dataclass(frozen=True)
class KernelVector:
    """One solution (b, mu) of a ``SingleRootSystem``; mu in system sign."""
    b: tuple
    mu: tuple

    def flat(self):
        """Unknowns in the order b_0 (x,y,z), ..., b_N, mu_0, ..., mu_{n+N-1}."""
        return [c for v in self.b for c in v] + list(self.mu)


def _require_regular(f0, beta):
    if is_zero_vec(f0):
        raise LeadingCoefficientZero(
            f"F vanishes at beta = {beta}; the data are not primitive there"
        )


def mu_kernel(system: SingleRootSystem):
    """Nullspace of the critical equation over the free mu variables.

    Returns full mu vectors (system sign); each spans one normalized
    solution curve.
    """
    count = len(system.free_mu)
    if count <= 0:
        return []
    rows = system.critical_rows()
    return [system.expand_mu(v) for v in linalg.nullspace(rows, count)]


def solve_system(system: SingleRootSystem):
    """Kernel basis of the system, computed structurally.

    The first vectors have b_n = 0 and span the normalized solutions; when
    n <= N three more vectors carry b_n = unit vector and mu = 0.

    Raises:
        LeadingCoefficientZero: f_0 = 0.
    """
    _require_regular(system.coefficient(0), "the expansion center")
    kernel = [
        KernelVector(tuple(system.b_from_mu(mu)), tuple(mu))
        for mu in mu_kernel(system)
    ]
    if system.has_critical:
        zero_mu = [ZERO] * system.mu_count
        for axis in ((ONE, ZERO, ZERO), (ZERO, ONE, ZERO), (ZERO, ZERO, ONE)):
            kernel.append(KernelVector(
                tuple(system.b_from_mu(zero_mu, b_n=axis)), tuple(zero_mu)
            ))
    logger.debug("system n=%d N=%d: kernel dimension %d",
                 system.n, system.N, len(kernel))
    return kernel


def genericity(source, beta) -> bool:
    """Every three consecutive Taylor coefficients of F at beta independent."""
    F = as_field(source)
    f = F.taylor_coefficients(as_scalar(beta))
    if len(f) < 3:
        logger.warning("F of degree %d has no coefficient triples; "
                       "reported as non-generic", F.degree)
        return False
    return all(det3(f[i - 1], f[i], f[i + 1]) for i in range(1, len(f) - 1))


def closed_form_m0(field_degree: int, m: int) -> int:
    """M0(m) for generic data."""
    base = field_degree + m
    if m < -field_degree:
        return base
    if m <= -2:
        return base + 3
    if m == -1:
        return base + 2
    if m == 0:
        return base + 1
    return base


def _polynomial_dimension(field_degree, m, M):
    return max(0, M - field_degree - max(m, 1) + 1)


def compute_M0(source, beta, m: int, headroom: int = 8) -> int:
    """Smallest M with a non-zero normalized solution of support in [m, M].

    Found by sweeping N = M - m upward; the closed form is never consulted.

    Raises:
        LeadingCoefficientZero: F(beta) = 0.
    """
    F = as_field(source)
    beta = as_scalar(beta)
    f = tuple(F.taylor_coefficients(beta))
    _require_regular(f[0], beta)
    if m >= 0:
        return F.degree + max(m, 1)
    n = -m
    for N in range(0, n + F.degree + 2 + headroom):
        if mu_kernel(SingleRootSystem(n, N, f)):
            logger.debug("M0(%d) = %d at beta = %s", m, N + m, beta)
            return N + m
    raise RuntimeError(f"no normalized solution found for m = {m}")


def space_dimension(source, beta, m: int, M: int) -> int:
    """dim Q^{m,M}: normalized solutions with Laurent support in [m, M]."""
    F = as_field(source)
    if m > M:
        return 0
    if m >= 0:
        return _polynomial_dimension(F.degree, m, M)
    f = tuple(F.taylor_coefficients(as_scalar(beta)))
    _require_regular(f[0], beta)
    return len(mu_kernel(SingleRootSystem(-m, M - m, f)))


def normalized_space(source, beta, m: int, M: int):
    """Curves spanning Q^{m,M} (from the kernel, not the canonical basis)."""
    F = as_field(source)
    beta = as_scalar(beta)
    if m > M:
        return []
    if m >= 0:
        return [
            _polynomial_element(F, beta, ell).curve
            for ell in range(max(m, 1), M - F.degree + 1)
        ]
    n = -m
    system = SingleRootSystem.build(F, beta, n, M - m)
    _require_regular(system.coefficient(0), beta)
    return [
        RationalPHCurve(
            Vec3Poly.from_shifted(system.b_from_mu(mu), beta), ((beta, n),)
        )
        for mu in mu_kernel(system)
    ]


def _certificate(mu, beta) -> ScalarPoly:
    return ScalarPoly.from_shifted([-c for c in mu], beta)


def _polynomial_element(F, beta, m) -> BasisElement:
    """q^m = m * integral_beta^t (s - beta)^{m-1} F(s) ds for m >= 1."""
    f = F.taylor_coefficients(beta)
    shifted = [ZERO_VEC] * m + [vscale(QuadExtScalar(m) / (i + m), v)
                                for i, v in enumerate(f)]
    curve = RationalPHCurve.polynomial(Vec3Poly.from_shifted(shifted, beta))
    laurent = LaurentSeries(beta, dict(enumerate(shifted)))
    mu = ScalarPoly.from_shifted(
        [ZERO] * (m - 1) + [QuadExtScalar(m) / 2], beta)
    return BasisElement(m, curve, mu, laurent, F.degree + m)


def _rational_element(F, f, beta, m, start, stop=None) -> BasisElement:
    n = -m
    if stop is None:
        stop = max(start, n + F.degree)
    for N in range(start, stop + 1):
        system = SingleRootSystem(n, N, f)
        for mu in mu_kernel(system):
            lead = mu[n - 1]
            if not lead:
                continue
            mu = [c * (QuadExtScalar(n) / 2) / lead for c in mu]
            b = system.b_from_mu(mu)
            laurent = LaurentSeries(
                beta, {j - n: vscale(-2, v) for j, v in enumerate(b)}
            )
            curve = RationalPHCurve(
                Vec3Poly.from_shifted(b, beta), ((beta, n),))
            certificate = _certificate(mu, beta)
            if laurent.lowest != f[0] or laurent.lo != m:
                raise RuntimeError(f"q^{m} is not normalized to F(beta)")
            if not certificate_residual(curve, F, certificate).is_zero():
                raise RuntimeError(f"q^{m} fails its certificate")
            return BasisElement(m, curve, certificate, laurent, N + m)
    raise DegenerateIndex(
        f"no normalized solution curve starts at index {m} at beta = {beta}"
    )


def basis_curve(source, beta, m: int, *, generic: bool | None = None,
                M0: int | None = None, limit: int | None = None,
                headroom: int = 8) -> BasisElement:
    """The canonical curve q^m, lowest Laurent coefficient equal to F(beta).

    ``generic`` and ``M0`` skip recomputing values the caller already has;
    ``limit`` bounds the highest Laurent index searched.

    Raises:
        DegenerateIndex: m = 0, or m in {-2, -1} with generic data, or no
            normalized solution starts at m.
        LeadingCoefficientZero: F(beta) = 0.
    """
    F = as_field(source)
    beta = as_scalar(beta)
    f = tuple(F.taylor_coefficients(beta))
    _require_regular(f[0], beta)
    if m >= 1:
        return _polynomial_element(F, beta, m)
    if m == 0:
        raise DegenerateIndex("normalized curves have no index 0 coefficient")
    if generic is None:
        generic = genericity(F, beta)
    if generic and m in DEGENERATE_INDICES:
        raise DegenerateIndex(
            f"index {m} is degenerate for generic data at beta = {beta}"
        )
    if not generic:
        logger.warning("non-generic data at beta = %s; constructing q^%d "
                       "by kernel sweep", beta, m)
    if M0 is None:
        M0 = compute_M0(F, beta, m, headroom=headroom)
    stop = None if limit is None else limit - m
    return _rational_element(F, f, beta, m, M0 - m, stop)


def space_basis(source, beta, kind: str, m: int, M: int, *,
                headroom: int = 8) -> SpaceBasis:
    """Canonical basis of Q^{m,M}, R^{m,M} or X^{m,M} at beta.

    Q collects q^l for m <= l with M0(l) <= M, skipping degenerate indices;
    R adds the translations when m <= 0 <= M; X keeps only l <= -3.
    """
    if kind not in SPACE_KINDS:
        raise InputError(f"unknown space kind {kind!r}")
    if m > M:
        raise InputError(f"empty index range m = {m} > M = {M}")
    F = as_field(source)
    beta = as_scalar(beta)
    f = tuple(F.taylor_coefficients(beta))
    _require_regular(f[0], beta)
    generic = genericity(F, beta)
    basis = SpaceBasis(kind, beta, m, M)
    top = -3 if kind == "X" else M
    for ell in range(m, min(M, top) + 1):
        if ell == 0 or (generic and ell in DEGENERATE_INDICES):
            continue
        M0 = compute_M0(F, beta, ell, headroom=headroom)
        if M0 > M:
            continue
        try:
            element = basis_curve(F, beta, ell, generic=generic, M0=M0,
                                  limit=M, headroom=headroom)
        except DegenerateIndex:
            logger.info("index %d has no normalized curve at beta = %s",
                        ell, beta)
            continue
        basis.elements.append(element)
    if kind == "R" and m <= 0 <= M:
        for element in constant_elements():
            constant = element.curve(beta)
            element.laurent = LaurentSeries(beta, {0: constant})
            basis.elements.append(element)
    logger.debug("%s^{%d,%d} at %s has dimension %d",
                 kind, m, M, beta, basis.dimension)
    return basis


def _sympy_rational(value):
    return sympy.Rational(value.numerator, value.denominator)


def _sympy_scalar(value):
    value = as_scalar(value)
    if value.is_rational:
        return _sympy_rational(value.re)
    return (_sympy_rational(value.re)
            + _sympy_rational(value.im) * sympy.sqrt(_sympy_rational(value.d)))


def _oracle_domain(system: SingleRootSystem):
    """QQ, or QQ<sqrt d> when the Taylor data leave the rationals."""
    radicands = {c.d for v in system.f for c in v if not c.is_rational}
    if not radicands:
        return sympy.QQ
    return sympy.QQ.algebraic_field(sympy.sqrt(_sympy_rational(radicands.pop())))


def _domain_rows(rows, ncols, domain):
    return DomainMatrix(
        [[domain.from_sympy(_sympy_scalar(x)) for x in row] for row in rows],
        (len(rows), ncols), domain,
    )


def dense_system_matrix(system: SingleRootSystem) -> DomainMatrix:
    """Full coefficient matrix of all equations, unknowns as in ``KernelVector.flat``."""
    n, N = system.n, system.N
    columns = 3 * (N + 1) + system.mu_count
    rows = []
    for k in range(1, n + N + system.field_degree + 1):
        for c in range(3):
            row = [ZERO] * columns
            j = k - n
            if 0 <= j <= N:
                row[3 * j + c] = QuadExtScalar(k - 2 * n)
            for i in range(min(k, system.mu_count)):
                row[3 * (N + 1) + i] = -system.coefficient(k - 1 - i)[c]
            rows.append(row)
    return _domain_rows(rows, columns, _oracle_domain(system))


def dense_system_kernel(source, beta, n: int, N: int):
    """Nullspace of the dense system by sympy elimination; one row per vector."""
    system = SingleRootSystem.build(as_field(source), beta, n, N)
    kernel = dense_system_matrix(system).nullspace().to_Matrix()
    return [kernel.row(i) for i in range(kernel.rows)]


def kernels_agree(source, beta, n: int, N: int) -> bool:
    """Structural and dense kernels have equal dimension and the same span."""
    system = SingleRootSystem.build(as_field(source), beta, n, N)
    matrix = dense_system_matrix(system)
    dense = matrix.nullspace()
    structural = [v.flat() for v in solve_system(system)]
    if dense.shape[0] != len(structural):
        return False
    if not structural:
        return True
    stacked = dense.vstack(
        _domain_rows(structural, matrix.shape[1], matrix.domain))
    return stacked.rank() == len(structural)
