import logging

from django.conf import settings
from django.http import JsonResponse
from rest_framework import status
from rest_framework.decorators import api_view

from ph_curves import jobs
from ph_curves.api.serializers import (
    BasisJobSerializer, CurveJobSerializer, M0JobSerializer,
    PolyBasisJobSerializer, SampleJobSerializer, VerifyJobSerializer,
    render_vec3poly,
)
from ph_curves.exceptions import InputError, NotPHCurve, PHError

logger = logging.getLogger(__name__)


def _digits(request):
    """Decimal digits requested by the job's "digits" key (null = exact)."""
    digits = request.data.get("digits") if isinstance(request.data, dict) else None
    if digits is True:
        return settings.PH_DECIMAL_DIGITS
    if isinstance(digits, int) and digits >= 0:
        return digits
    return None


def _run(request, serializer_class, runner):
    """
    Validate the posted job, run it and translate domain errors.

    Returns:
        200 OK: the command's JSON result.
        400 Bad Request: the job failed validation or is malformed.
        422 Unprocessable Entity: a mathematical precondition is violated,
        or the curve is not a PH solution curve (residual included).
    """
    serializer = serializer_class(data=request.data)
    if not serializer.is_valid():
        return JsonResponse(
            data=serializer.errors, status=status.HTTP_400_BAD_REQUEST
        )
    digits = _digits(request)
    try:
        result = runner(serializer.validated_data, digits)
    except NotPHCurve as e:
        return JsonResponse(
            {
                "error": str(e),
                "residual": render_vec3poly(e.residual, digits),
            },
            status=status.HTTP_422_UNPROCESSABLE_ENTITY
        )
    except InputError as e:
        return JsonResponse(
            {"error": str(e)}, status=status.HTTP_400_BAD_REQUEST
        )
    except PHError as e:
        logger.info("job rejected: %s", e)
        return JsonResponse(
            {"error": str(e)},
            status=status.HTTP_422_UNPROCESSABLE_ENTITY
        )
    return JsonResponse(data=result, safe=False, status=status.HTTP_200_OK)


@api_view(["POST"])
def basis_view(request):
    """Canonical basis of Q, R or X at beta, or of P^M."""
    return _run(request, BasisJobSerializer, jobs.run_basis)


@api_view(["POST"])
def poly_basis_view(request):
    """Basis of the polynomial solution curves of degree at most M."""
    return _run(request, PolyBasisJobSerializer, jobs.run_poly_basis)


@api_view(["POST"])
def m0_view(request):
    """M0(m) table over [m_from, m_to]."""
    return _run(request, M0JobSerializer, jobs.run_m0)


@api_view(["POST"])
def decompose_view(request):
    return _run(request, CurveJobSerializer, jobs.run_decompose)


@api_view(["POST"])
def pfd_view(request):
    return _run(request, CurveJobSerializer, jobs.run_pfd)


@api_view(["POST"])
def verify_view(request):
    return _run(request, VerifyJobSerializer, jobs.run_verify)


@api_view(["POST"])
def sample_view(request):
    """Sample rows as {"header": [...], "rows": [[t, x, y, z], ...]}."""
    def runner(data, digits):
        return {
            "header": ["t", "x", "y", "z"],
            "rows": jobs.run_sample(data, digits),
        }
    return _run(request, SampleJobSerializer, runner)
