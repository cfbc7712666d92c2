"""Command implementations shared by the management commands and the API.

Each ``run_*`` function takes validated serializer data and returns a
JSON-ready payload (``run_sample`` returns rows). Scalars are rendered exactly
unless ``digits`` is given.
"""
import logging

from django.conf import settings

from ph_curves.api import serializers
from ph_curves.exceptions import (
    EmptyRange, InputError, MathDomainError, NotPHCurve,
)
from ph_curves.functions.decompose import (
    decompose_curve, degree_bound_check, partial_fractions,
    recover_certificate,
)
from ph_curves.functions.exactnum import rational_to_decimal
from ph_curves.functions.hodograph import (
    as_field, determinant_identity_check, is_primitive, polynomial_ph_basis,
)
from ph_curves.functions.singleroot import (
    closed_form_m0, compute_M0, genericity, kernels_agree, space_basis,
)

logger = logging.getLogger(__name__)


def _context(digits):
    return {"digits": digits}


def _headroom():
    return getattr(settings, "PH_M0_SWEEP_LIMIT", 8)


def run_basis(data, digits=None):
    if data["kind"] == "P":
        basis = polynomial_ph_basis(data["source"], data["M"])
    else:
        basis = space_basis(
            data["source"], data["beta"], data["kind"], data["m"], data["M"],
            headroom=_headroom(),
        )
    return serializers.SpaceBasisSerializer(
        basis, context=_context(digits)).data


def run_poly_basis(data, digits=None):
    basis = polynomial_ph_basis(data["source"], data["M"])
    return serializers.SpaceBasisSerializer(
        basis, context=_context(digits)).data


def run_m0(data, digits=None):
    F = as_field(data["source"])
    beta = data["beta"]
    generic = genericity(F, beta)
    table, closed = {}, {}
    for m in range(data["m_from"], data["m_to"] + 1):
        table[str(m)] = compute_M0(F, beta, m, headroom=_headroom())
        closed[str(m)] = closed_form_m0(F.degree, m)
    if not generic:
        logger.warning("data are not generic at beta = %s", beta)
    return {
        "beta": serializers.render_scalar(beta, digits),
        "field_degree": F.degree,
        "generic": generic,
        "M0": table,
        "closed_form": closed,
        "matches_closed_form": table == closed,
    }


def _reconstruction_exact(result, curve):
    return result.reconstruct().equals(curve)


def run_decompose(data, digits=None):
    curve = data["curve"]
    decomposition = decompose_curve(
        curve, data["source"], with_sigma=True, headroom=_headroom())
    payload = dict(serializers.DecompositionSerializer(
        decomposition, context=_context(digits)).data)
    payload["verification"] = {
        "reconstruction_exact": _reconstruction_exact(decomposition, curve),
    }
    return payload


def run_pfd(data, digits=None):
    curve = data["curve"]
    F = as_field(data["source"])
    result = partial_fractions(
        curve, F, real_merge=data["real_merge"], headroom=_headroom())
    payload = dict(serializers.PartialFractionsSerializer(
        result, context=_context(digits)).data)
    certified = True
    for fraction in result.fractions:
        try:
            recover_certificate(fraction.curve(), F)
        except (MathDomainError, NotPHCurve):
            certified = False
    payload["verification"] = {
        "reconstruction_exact": _reconstruction_exact(result, curve),
        "fractions_certified": certified,
        "numerator_degrees_bounded": all(
            f.numerator.degree <= f.mult * f.denominator.degree + F.degree
            for f in result.fractions
        ),
    }
    return payload


def sample_parameters(t0, t1, count):
    if count == 1:
        return [t0]
    step = (t1 - t0) / (count - 1)
    return [t0 + step * i for i in range(count)]


def run_sample(data, digits=None):
    """Rows (t, x, y, z) as decimal strings; poles are skipped."""
    if digits is None:
        digits = getattr(settings, "PH_DECIMAL_DIGITS", 6)
    curve = data["curve"]
    alpha = curve.alpha()
    rows, skipped = [], []
    for t in sample_parameters(data["t0"].re, data["t1"].re, data["count"]):
        if not alpha(t):
            skipped.append(t)
            continue
        point = curve(t)
        if not all(c.is_rational for c in point):
            raise InputError("curve takes non-real values; sample a real curve")
        rows.append([rational_to_decimal(t, digits)]
                    + [rational_to_decimal(c.re, digits) for c in point])
    for t in skipped:
        logger.warning("skipped sample at pole t = %s", t)
    if not rows:
        raise EmptyRange("no sample parameter avoids the denominator roots")
    return rows


def run_verify(data, digits=None):
    F = as_field(data["source"])
    curve = data.get("curve")
    report = {
        "field_degree": F.degree,
        "primitive": is_primitive(F),
        "determinant_identity": determinant_identity_check(F),
    }
    roots = list(curve.factors) if curve is not None else []
    if "beta" in data and not any(data["beta"] == r for r, _ in roots):
        roots.append((data["beta"], 0))
    oracle_limit = getattr(settings, "PH_DENSE_ORACLE_MAX_N", 6)
    report["roots"] = []
    for root, mult in roots:
        entry = {
            "root": serializers.render_scalar(root, digits),
            "mult": mult,
            "regular": any(F(root)),
            "generic": genericity(F, root),
        }
        if entry["regular"] and 0 < mult <= oracle_limit:
            entry["structural_solver_agrees"] = kernels_agree(
                F, root, mult, mult + F.degree)
        report["roots"].append(entry)
    if curve is not None:
        try:
            mu = recover_certificate(curve, F)
            report["certificate"] = {
                "ok": True,
                "mu": serializers.render_scalar_poly(mu, digits),
            }
        except NotPHCurve as exc:
            report["certificate"] = {
                "ok": False,
                "residual": serializers.render_vec3poly(exc.residual, digits),
            }
        except MathDomainError as exc:
            report["certificate"] = {"ok": False, "error": str(exc)}
        N = data.get("N", max(
            curve.numerator.degree - curve.denominator_degree, 0))
        report["degree_bound"] = {
            "N": N,
            "numerator_degree": curve.normalized().numerator.degree,
            "bound": curve.denominator_degree + max(N, F.degree),
            "ok": degree_bound_check(curve, N, F),
        }
    return report
