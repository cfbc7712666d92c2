"""Decomposition of rational solution curves with several denominator roots.

Each root beta of multiplicity n contributes a curve of X^{-n,2a} at beta whose
Laurent data at beta agree with the input's below index 0; what remains is a
polynomial solution curve.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ph_curves.exceptions import (
    CertificateMissing, NotARoot, NotConjugatePair, NotInSpan, NotPHCurve,
    RedundantBasis,
)
from ph_curves.functions import linalg
from ph_curves.functions.exactnum import ZERO, QuadExtScalar, as_scalar
from ph_curves.functions.hodograph import as_field, polynomial_ph_basis
from ph_curves.functions.polycore import (
    ZERO_VEC, BasisElement, LaurentSeries, RationalPHCurve, ScalarPoly,
    SpaceBasis, Vec3Poly, certificate_residual, conjugate_pair_quadratic,
    merge_factors, series_quotient, vadd, vscale,
)
from ph_curves.functions.singleroot import space_basis

logger = logging.getLogger(__name__)


@dataclass
class Component:
    """The X-space part of a curve at one denominator root."""
    beta: QuadExtScalar
    n: int
    curve: RationalPHCurve
    mu: ScalarPoly


@dataclass
class Decomposition:
    """r = polynomial_part + sum of the component curves."""
    components: list
    polynomial_part: Vec3Poly
    sigma: list | None = None
    bases: list = field(default_factory=list)

    def reconstruct(self) -> RationalPHCurve:
        return sum_by_pairs(
            [c.curve for c in self.components],
            [(c.beta, c.n) for c in self.components],
            RationalPHCurve.polynomial(self.polynomial_part),
        )


@dataclass
class PartialFraction:
    """``numerator / denominator ** mult``.

    ``denominator`` is ``t - root`` or, after merging a conjugate root pair,
    the real quadratic ``t^2 + p t + q``.
    """
    roots: tuple
    mult: int
    numerator: Vec3Poly
    denominator: ScalarPoly

    @property
    def merged(self) -> bool:
        return len(self.roots) == 2

    def curve(self) -> RationalPHCurve:
        return RationalPHCurve(
            self.numerator * (QuadExtScalar(-1) / 2),
            [(r, self.mult) for r in self.roots],
        )


@dataclass
class PartialFractions:
    fractions: list
    polynomial_part: Vec3Poly

    def reconstruct(self) -> RationalPHCurve:
        return sum_by_pairs(
            [f.curve() for f in self.fractions],
            [None if f.merged else (f.roots[0], f.mult)
             for f in self.fractions],
            RationalPHCurve.polynomial(self.polynomial_part),
        )


@dataclass
class LeastSquaresFit:
    sigma: list
    residual: object


def recover_certificate(curve: RationalPHCurve, source) -> ScalarPoly:
    """mu with alpha' b - alpha b' = mu F.

    Raises:
        NotPHCurve: (alpha' b - alpha b') x F is not zero; the residual is
            attached to the exception.
        CertificateMissing: the quotient is not a polynomial (F not primitive).
    """
    F = as_field(source)
    curve = curve.normalized()
    alpha = curve.alpha()
    b = curve.numerator
    w = b * alpha.derivative() - b.derivative() * alpha
    residual = w.cross(F)
    if not residual.is_zero():
        raise NotPHCurve("curve does not satisfy r' x F = 0", residual=residual)
    if w.is_zero():
        return ScalarPoly()
    k = next(i for i in range(3) if not F.components[i].is_zero())
    mu, remainder = w.components[k].divmod(F.components[k])
    if not remainder.is_zero() or not (w - F * mu).is_zero():
        raise CertificateMissing(
            "alpha' b - alpha b' is not a polynomial multiple of F")
    return mu


def _shifted_numerator(r, beta, F, mu):
    """Numerator coefficients b~_0..b~_{n+2a} of the truncation at beta."""
    n = r.multiplicity(beta)
    alpha_hat = r.alpha_hat(beta).taylor_coefficients(beta)
    head = series_quotient(
        r.numerator.taylor_coefficients(beta), alpha_hat, n + 1, vector=True)
    square = (ScalarPoly(alpha_hat) ** 2).coeffs
    mu_tilde = series_quotient(
        mu.taylor_coefficients(beta), list(square), 2 * n, vector=False)
    f = F.taylor_coefficients(beta)
    b = list(head)
    for j in range(n + 1, n + F.degree + 1):
        acc = ZERO_VEC
        for i, m_i in enumerate(mu_tilde):
            k = j + n - 1 - i
            if m_i and 0 <= k < len(f):
                acc = vadd(acc, vscale(m_i, f[k]))
        b.append(vscale(QuadExtScalar(1) / (n - j), acc))
    return b, mu_tilde


def truncate_at_root(r: RationalPHCurve, beta, source,
                     mu: ScalarPoly | None = None):
    """Single-root curve agreeing with r at beta on Laurent indices <= 0.

    The numerator over (t - beta)^n is the Taylor part of b / alpha_hat up to
    order n, continued to order n + deg F by the certificate equations with
    the degree 2n-1 Taylor polynomial of mu / alpha_hat^2.

    Returns:
        (curve, certificate).

    Raises:
        NotARoot: beta is not a root of the denominator.
        NotPHCurve, CertificateMissing: no certificate for r.
    """
    F = as_field(source)
    beta = as_scalar(beta)
    n = r.multiplicity(beta)
    if n == 0:
        raise NotARoot(f"{beta} is not a root of the denominator")
    if mu is None:
        mu = recover_certificate(r, F)
    b, mu_tilde = _shifted_numerator(r.normalized(), beta, F, mu)
    curve = RationalPHCurve(Vec3Poly.from_shifted(b, beta), ((beta, n),))
    certificate = ScalarPoly.from_shifted(mu_tilde, beta)
    if not certificate_residual(curve, F, certificate).is_zero():
        raise RuntimeError(f"truncation at {beta} fails its certificate")
    return curve, certificate


def _conjugate_groups(keys):
    """Index groups: a conjugate pair of roots with equal order, or one item.

    ``keys`` holds ``(root, order)`` per item, or None for a real item.
    Summing a pair first keeps running totals real, so roots from
    different quadratic fields are never combined.
    """
    groups, used = [], set()
    for i, key in enumerate(keys):
        if i in used:
            continue
        used.add(i)
        group = [i]
        if key is not None and not key[0].is_rational:
            partner = (key[0].conj(), key[1])
            for j in range(i + 1, len(keys)):
                if j not in used and keys[j] == partner:
                    used.add(j)
                    group.append(j)
                    break
        groups.append(group)
    return groups


def sum_by_pairs(curves, keys, total: RationalPHCurve) -> RationalPHCurve:
    """``total`` plus the curves, conjugate pairs added to each other first."""
    for group in _conjugate_groups(keys):
        piece = curves[group[0]]
        for index in group[1:]:
            piece = piece + curves[index]
        total = total + piece
    return total


def decompose_curve(r: RationalPHCurve, source, *, with_sigma=False,
                    headroom: int = 8) -> Decomposition:
    """Split r into X-space components at every root plus a polynomial.

    With ``with_sigma`` the coordinates in ``canonical_bases`` are attached.

    Raises:
        NotPHCurve: r is not a solution curve for F.
    """
    F = as_field(source)
    r = r.normalized()
    mu = recover_certificate(r, F)
    components = []
    for beta, n in r.factors:
        b, mu_tilde = _shifted_numerator(r, beta, F, mu)
        b[n] = ZERO_VEC
        curve = RationalPHCurve(Vec3Poly.from_shifted(b, beta), ((beta, n),))
        certificate = ScalarPoly.from_shifted(mu_tilde, beta)
        if not certificate_residual(curve, F, certificate).is_zero():
            raise RuntimeError(f"component at {beta} fails its certificate")
        components.append(Component(beta, n, curve, certificate))
    rest = sum_by_pairs(
        [-c.curve for c in components], [(c.beta, c.n) for c in components],
        r,
    )
    try:
        polynomial = rest.as_polynomial()
    except NotARoot as exc:
        raise RuntimeError("remainder of the decomposition has poles") from exc
    logger.debug("decomposed curve into %d components, polynomial degree %d",
                 len(components), polynomial.degree)
    decomposition = Decomposition(components, polynomial)
    if with_sigma:
        decomposition.bases = canonical_bases(r, F, headroom=headroom)
        decomposition.sigma = project_on_basis(r, decomposition.bases)
    return decomposition


def _basis_curves(bases):
    curves = []
    for basis in bases:
        if isinstance(basis, SpaceBasis):
            curves.extend(basis.curves())
        elif isinstance(basis, BasisElement):
            curves.append(basis.curve)
        else:
            curves.append(basis)
    return curves


def _coefficient_system(r, bases):
    curves = _basis_curves(bases)
    factors = merge_factors([r.factors] + [c.factors for c in curves])
    columns = [c.over(factors) for c in curves]
    target = r.over(factors)
    degree = max([target.degree] + [c.degree for c in columns])
    rows, rhs = [], []
    for k in range(3):
        for power in range(degree + 1):
            rows.append([c.components[k].coefficient(power) for c in columns])
            rhs.append(target.components[k].coefficient(power))
    return rows, rhs, len(columns)


def project_on_basis(r: RationalPHCurve, bases) -> list:
    """Exact coordinates of r in the concatenated bases.

    Numerators are matched over the common denominator of r and every basis
    curve.

    Raises:
        RedundantBasis: the basis curves are linearly dependent.
        NotInSpan: r is not a combination of the basis curves.
    """
    rows, rhs, count = _coefficient_system(r, bases)
    if linalg.rank(rows, count) < count:
        raise RedundantBasis("basis curves are linearly dependent")
    result = linalg.solve(rows, rhs, count)
    if not result.consistent:
        raise NotInSpan("curve is not in the span of the basis")
    return result.solution


def project_least_squares(r: RationalPHCurve, bases) -> LeastSquaresFit:
    """Coordinates minimizing the numerator residual (exact normal equations).

    The residual is the sum of squared moduli of the numerator coefficients
    of r - sum sigma_i basis_i over the common denominator.
    """
    rows, rhs, count = _coefficient_system(r, bases)
    if linalg.rank(rows, count) < count:
        raise RedundantBasis("basis curves are linearly dependent")
    gram = [
        [sum((row[i].conj() * row[j] for row in rows), ZERO)
         for j in range(count)]
        for i in range(count)
    ]
    moment = [
        sum((row[i].conj() * y for row, y in zip(rows, rhs)), ZERO)
        for i in range(count)
    ]
    sigma = linalg.solve(gram, moment, count).solution
    residual = ZERO
    for row, y in zip(rows, rhs):
        error = sum((c * s for c, s in zip(row, sigma)), ZERO) - y
        residual = residual + (error.conj() * error)
    return LeastSquaresFit(sigma, residual)


def realify_pair(q_plus: LaurentSeries, q_minus: LaurentSeries):
    """Real curves a = (q+ + q-)/2 and b = (q+ - q-)/(2 sqrt d).

    Raises:
        NotConjugatePair: q_minus is not the conjugate of q_plus.
    """
    if q_minus.center != q_plus.center.conj() or q_minus != q_plus.conj():
        raise NotConjugatePair("series are not complex conjugates")
    plus, minus = q_plus.to_curve(), q_minus.to_curve()
    radicands = plus.coefficient_radicands()
    if not radicands:
        return plus, RationalPHCurve(Vec3Poly())
    root = QuadExtScalar.sqrt_of(radicands.pop())
    a = (plus + minus).scale(QuadExtScalar(1) / 2)
    b = (plus - minus).scale((2 * root).inverse())
    return a, b


def realify_basis(basis: SpaceBasis, source) -> SpaceBasis:
    """Replace the basis at beta and its conjugate at conj(beta) by real curves."""
    F = as_field(source)
    real = SpaceBasis(basis.kind, basis.beta, basis.m, basis.M,
                      conjugate_pair=True)
    for element in basis.elements:
        a, b = realify_pair(element.laurent, element.laurent.conj())
        for tag, curve in (("re", a), ("im", b)):
            real.elements.append(BasisElement(
                f"{tag}{element.label}", curve,
                recover_certificate(curve, F), None, element.upper,
            ))
    return real


def _is_real_field(F: Vec3Poly) -> bool:
    return all(s.is_rational for s in F.scalars())


def canonical_bases(r: RationalPHCurve, source, *, headroom: int = 8) -> list:
    """X-bases at every root (conjugate pairs realified) and the P-basis.

    The P-basis has degree max(deg b - deg alpha, 0).
    """
    F = as_field(source)
    r = r.normalized()
    bases = []
    done = []
    for root, n in r.factors:
        if any(root == seen for seen in done):
            continue
        basis = space_basis(F, root, "X", -n, F.degree, headroom=headroom)
        partner = root.conj()
        if (not root.is_rational and r.multiplicity(partner) == n
                and _is_real_field(F)):
            bases.append(realify_basis(basis, F))
            done.extend([root, partner])
        else:
            bases.append(basis)
            done.append(root)
    degree = max(r.numerator.degree - r.denominator_degree, 0)
    bases.append(polynomial_ph_basis(F, degree))
    return bases


def partial_fractions(r: RationalPHCurve, source, *, real_merge=False,
                      headroom: int = 8) -> PartialFractions:
    """r = p + sum p_i / (t - beta_i)^{n_i}, deg p_i <= n_i + deg F.

    With ``real_merge`` conjugate components are combined over
    (t^2 + p t + q)^n.
    """
    F = as_field(source)
    decomposition = decompose_curve(r, F, headroom=headroom)
    components = decomposition.components
    fractions = []
    used = set()
    minus_two = QuadExtScalar(-2)
    for index, component in enumerate(components):
        if index in used:
            continue
        numerator = component.curve.numerator * minus_two
        beta, n = component.beta, component.n
        if real_merge and not beta.is_rational:
            partner = next(
                (j for j, other in enumerate(components)
                 if j not in used and j != index
                 and other.beta == beta.conj() and other.n == n
                 and other.curve.numerator == component.curve.numerator.conj()),
                None,
            )
            if partner is not None:
                used.add(partner)
                merged = (
                    numerator * ScalarPoly.linear_factor(beta.conj()) ** n
                    + components[partner].curve.numerator * minus_two
                    * ScalarPoly.linear_factor(beta) ** n
                )
                fractions.append(PartialFraction(
                    (beta, beta.conj()), n, merged,
                    conjugate_pair_quadratic(beta),
                ))
                continue
            logger.warning("no conjugate partner for root %s; kept complex",
                           beta)
        fractions.append(PartialFraction(
            (beta,), n, numerator, ScalarPoly.linear_factor(beta)))
    return PartialFractions(fractions, decomposition.polynomial_part)


def degree_bound_check(r: RationalPHCurve, N: int, source) -> bool:
    """deg b <= n_1 + ... + n_k + max(N, deg F)."""
    F = as_field(source)
    r = r.normalized()
    return r.numerator.degree <= r.denominator_degree + max(N, F.degree)
