"""Shared fixtures: a quadratic quaternion preimage, its quartic tangent
field and a curve with several denominator roots built from the canonical bases."""
from functools import cache

from ph_curves.functions.decompose import realify_basis
from ph_curves.functions.exactnum import QuadExtScalar
from ph_curves.functions.hodograph import QuaternionPoly, polynomial_ph_basis
from ph_curves.functions.polycore import RationalPHCurve, Vec3Poly
from ph_curves.functions.singleroot import space_basis

PREIMAGE_ROWS = [
    [10, 0, 0, 0],
    [-22, 14, 16, 12],
    [7, -19, -26, -2],
]

FIELD_ROWS = [
    [100, 0, 0],
    [-440, 240, -320],
    [420, -120, 1560],
    [40, -1080, -1880],
    [-270, 960, 440],
]

CURVE_SIGMA = [3, -2, 1, 5, 2, -1, 4, 1, -3]


def preimage_A():
    return QuaternionPoly(PREIMAGE_ROWS)


def field_F():
    return Vec3Poly.from_coefficients(FIELD_ROWS)


def random_preimage(rng, degree):
    """Integer quaternion polynomial of the given degree."""
    return QuaternionPoly([
        [rng.randint(-9, 9) for _ in range(4)] for _ in range(degree)
    ] + [[rng.randint(1, 9)] + [rng.randint(-9, 9) for _ in range(3)]])


@cache
def decomposition_data():
    """Poles at -1 (order 4) and +-i (order 3) plus a polynomial of degree 6.

    Returns:
        (curve, bases, sigma) with the bases in ``canonical_bases`` order:
        X at -1, the realified X at +-i, then P^6.
    """
    F = field_F()
    bases = [
        space_basis(F, -1, "X", -4, 4),
        realify_basis(space_basis(F, QuadExtScalar(0, 1), "X", -3, 4), F),
        polynomial_ph_basis(F, 6),
    ]
    curve = RationalPHCurve(Vec3Poly())
    basis_curves = [c for basis in bases for c in basis.curves()]
    for coordinate, basis_curve in zip(CURVE_SIGMA, basis_curves):
        curve = curve + basis_curve.scale(coordinate)
    return curve, bases, list(CURVE_SIGMA)


@cache
def two_pair_curve():
    """Real curve with poles of order 3 at +-i and at +-2i."""
    F = field_F()
    curve = RationalPHCurve(Vec3Poly())
    coordinate = 2
    for root in (QuadExtScalar(0, 1), QuadExtScalar(0, 2)):
        basis = realify_basis(space_basis(F, root, "X", -3, F.degree), F)
        for basis_curve in basis.curves():
            curve = curve + basis_curve.scale(coordinate)
            coordinate += 1
    return curve
