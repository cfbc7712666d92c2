from django.urls import path
from .views import (
    basis_view, decompose_view, m0_view, pfd_view, poly_basis_view,
    sample_view, verify_view,
)

urlpatterns = [

    # Canonical bases of Q, R, X at a root and of P^M
    path("basis/", basis_view),
    path("poly-basis/", poly_basis_view),

    # M0 table at a root
    path("m0/", m0_view),

    # Decomposition and partial fractions of a curve
    path("decompose/", decompose_view),
    path("pfd/", pfd_view),

    # Verification report and CSV-style sampling
    path("verify/", verify_view),
    path("sample/", sample_view),
]
