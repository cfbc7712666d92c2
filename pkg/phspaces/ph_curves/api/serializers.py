from rest_framework import serializers

from ph_curves.exceptions import InputError, PHError
from ph_curves.functions.exactnum import QuadExtScalar, scalar_to_decimal
from ph_curves.functions.hodograph import Quaternion, QuaternionPoly
from ph_curves.functions.polycore import RationalPHCurve, Vec3Poly
from ph_curves.functions.realforms import factor_real_denominator

SPACE_KINDS = ["Q", "R", "X", "P"]


def render_scalar(value, digits=None):
    """Exact JSON form, or a decimal string when ``digits`` is set."""
    if digits is None:
        return value.to_json()
    return scalar_to_decimal(value, digits)


def render_vector(vector, digits=None):
    return [render_scalar(c, digits) for c in vector]


def render_vec3poly(poly, digits=None):
    return [render_vector(v, digits) for v in poly.coefficients()]


def render_scalar_poly(poly, digits=None):
    return [render_scalar(c, digits) for c in poly.coeffs]


def render_laurent(series, digits=None):
    return {
        str(index): render_vector(vector, digits)
        for index, vector in series.coeffs.items()
    }


def render_factors(factors, digits=None):
    return [
        {"root": render_scalar(root, digits), "mult": mult}
        for root, mult in factors
    ]


def render_curve(curve, digits=None):
    return {
        "numerator": render_vec3poly(curve.numerator, digits),
        "denominator": render_factors(curve.factors, digits),
        "unit": render_scalar(curve.unit, digits),
    }


class ScalarField(serializers.Field):
    """Exact scalar: integer, "p/q" or decimal text, or {"re", "im", "d"}."""

    default_error_messages = {
        "invalid": "Not an exact scalar: {value}.",
    }

    def to_internal_value(self, data):
        try:
            return QuadExtScalar.from_json(data)
        except (InputError, TypeError):
            self.fail("invalid", value=repr(data))

    def to_representation(self, value):
        return render_scalar(value, self.context.get("digits"))


class QuaternionPolyField(serializers.ListField):
    """A(t) as [[w, x, y, z], ...] in ascending powers."""

    child = serializers.ListField(
        child=ScalarField(), min_length=4, max_length=4
    )

    def to_internal_value(self, data):
        rows = super().to_internal_value(data)
        poly = QuaternionPoly([Quaternion(*row) for row in rows])
        if poly.is_zero():
            raise serializers.ValidationError("A must not be zero.")
        return poly

    def to_representation(self, value):
        digits = self.context.get("digits")
        return [[render_scalar(c, digits) for c in q] for q in value.coeffs]


class VectorPolyField(serializers.ListField):
    """Vector polynomial as [[x, y, z], ...] in ascending powers."""

    child = serializers.ListField(
        child=ScalarField(), min_length=3, max_length=3
    )

    def to_internal_value(self, data):
        return Vec3Poly.from_coefficients(super().to_internal_value(data))

    def to_representation(self, value):
        return render_vec3poly(value, self.context.get("digits"))


class ScalarPolyField(serializers.ListField):
    child = ScalarField()

    def to_representation(self, value):
        return render_scalar_poly(value, self.context.get("digits"))


class FactorSerializer(serializers.Serializer):
    root = ScalarField()
    mult = serializers.IntegerField(min_value=1)


class DenominatorField(serializers.ListField):
    """Factored denominator [{"root": ..., "mult": n}, ...]."""

    child = FactorSerializer()

    def to_internal_value(self, data):
        factors = super().to_internal_value(data)
        return [(f["root"], f["mult"]) for f in factors]


class FieldSourceSerializer(serializers.Serializer):
    """Tangent field input: a quaternion preimage A or F itself."""

    A = QuaternionPolyField(required=False)
    F = VectorPolyField(required=False)

    def validate(self, attrs):
        attrs = super().validate(attrs)
        if ("A" in attrs) == ("F" in attrs):
            raise serializers.ValidationError(
                "Exactly one of 'A' and 'F' must be given."
            )
        if "F" in attrs and attrs["F"].is_zero():
            raise serializers.ValidationError({"F": "F must not be zero."})
        attrs["source"] = attrs.get("A") or attrs.get("F")
        return attrs


class BasisJobSerializer(FieldSourceSerializer):
    kind = serializers.ChoiceField(choices=SPACE_KINDS, default="R")
    beta = ScalarField(required=False)
    m = serializers.IntegerField(required=False)
    M = serializers.IntegerField()

    def validate(self, attrs):
        attrs = super().validate(attrs)
        if attrs["kind"] != "P":
            if "beta" not in attrs:
                raise serializers.ValidationError(
                    {"beta": "Required for spaces at a root."})
            if "m" not in attrs:
                raise serializers.ValidationError(
                    {"m": "Required for spaces at a root."})
            if attrs["m"] > attrs["M"]:
                raise serializers.ValidationError("m must not exceed M.")
        return attrs


class PolyBasisJobSerializer(FieldSourceSerializer):
    M = serializers.IntegerField()


class M0JobSerializer(FieldSourceSerializer):
    beta = ScalarField()
    m_from = serializers.IntegerField()
    m_to = serializers.IntegerField()

    def validate(self, attrs):
        attrs = super().validate(attrs)
        if attrs["m_from"] > attrs["m_to"]:
            raise serializers.ValidationError("m_from must not exceed m_to.")
        return attrs


class CurveInputSerializer(serializers.Serializer):
    """A curve r = -2 b / alpha, or a polynomial curve given directly.

    ``denominator`` lists roots; ``alpha`` is a real monomial coefficient list
    that gets factored.
    """

    numerator = VectorPolyField(required=False)
    denominator = DenominatorField(required=False)
    alpha = serializers.ListField(child=ScalarField(), required=False)
    unit = ScalarField(required=False)
    polynomial = VectorPolyField(required=False)

    curve_required = True

    def validate(self, attrs):
        attrs = super().validate(attrs)
        if "polynomial" in attrs:
            if {"numerator", "denominator", "alpha"} & set(attrs):
                raise serializers.ValidationError(
                    "'polynomial' excludes 'numerator', 'denominator' "
                    "and 'alpha'.")
            attrs["curve"] = RationalPHCurve.polynomial(attrs["polynomial"])
            return attrs
        if "numerator" not in attrs:
            if self.curve_required:
                raise serializers.ValidationError(
                    {"numerator": "A curve numerator is required."})
            attrs["curve"] = None
            return attrs
        if "denominator" in attrs and "alpha" in attrs:
            raise serializers.ValidationError(
                "Give either 'denominator' or 'alpha', not both.")
        factors = attrs.get("denominator", [])
        unit = attrs.get("unit", QuadExtScalar(1))
        try:
            if "alpha" in attrs:
                factors, leading = factor_real_denominator(
                    [c.re if c.is_rational else c for c in attrs["alpha"]])
                unit = unit * leading
            attrs["curve"] = RationalPHCurve(attrs["numerator"], factors, unit)
        except PHError as exc:
            raise serializers.ValidationError(str(exc)) from exc
        return attrs


class CurveJobSerializer(CurveInputSerializer, FieldSourceSerializer):
    real_merge = serializers.BooleanField(default=False)
    N = serializers.IntegerField(required=False, min_value=0)


class VerifyJobSerializer(CurveJobSerializer):
    beta = ScalarField(required=False)

    curve_required = False


class SampleJobSerializer(CurveInputSerializer):
    t0 = ScalarField()
    t1 = ScalarField()
    count = serializers.IntegerField(min_value=1)

    def validate(self, attrs):
        attrs = super().validate(attrs)
        for key in ("t0", "t1"):
            if not attrs[key].is_rational:
                raise serializers.ValidationError(
                    {key: "Sample parameters must be rational."})
        if attrs["t0"].re > attrs["t1"].re:
            raise serializers.ValidationError("t0 must not exceed t1.")
        return attrs


class LaurentField(serializers.Field):
    def to_representation(self, value):
        return render_laurent(value, self.context.get("digits"))


class CurveField(serializers.Field):
    def to_representation(self, value):
        return render_curve(value, self.context.get("digits"))


class BasisElementSerializer(serializers.Serializer):
    m = serializers.SerializerMethodField()
    M0 = serializers.IntegerField(source="upper", allow_null=True)
    laurent = LaurentField(allow_null=True)
    mu = ScalarPolyField()
    curve = CurveField()

    def get_m(self, element):
        return element.label


class SpaceBasisSerializer(serializers.Serializer):
    kind = serializers.CharField()
    beta = ScalarField(allow_null=True)
    m = serializers.IntegerField(allow_null=True)
    M = serializers.IntegerField()
    dimension = serializers.IntegerField()
    conjugate_pair = serializers.BooleanField()
    elements = BasisElementSerializer(many=True)


class ComponentSerializer(serializers.Serializer):
    root = ScalarField(source="beta")
    mult = serializers.IntegerField(source="n")
    numerator = serializers.SerializerMethodField()
    mu = ScalarPolyField()

    def get_numerator(self, component):
        return render_vec3poly(
            component.curve.numerator * QuadExtScalar(-2),
            self.context.get("digits"),
        )


class DecompositionSerializer(serializers.Serializer):
    polynomial = VectorPolyField(source="polynomial_part")
    components = ComponentSerializer(many=True)
    sigma = serializers.ListField(child=ScalarField(), allow_null=True)
    basis_labels = serializers.SerializerMethodField()

    def get_basis_labels(self, decomposition):
        return [
            str(element.label)
            for basis in decomposition.bases
            for element in basis.elements
        ]


class PartialFractionSerializer(serializers.Serializer):
    root = serializers.SerializerMethodField()
    conjugate_root = serializers.SerializerMethodField()
    mult = serializers.IntegerField()
    denominator = ScalarPolyField()
    numerator = VectorPolyField()

    def get_root(self, fraction):
        return render_scalar(fraction.roots[0], self.context.get("digits"))

    def get_conjugate_root(self, fraction):
        if not fraction.merged:
            return None
        return render_scalar(fraction.roots[1], self.context.get("digits"))


class PartialFractionsSerializer(serializers.Serializer):
    polynomial = VectorPolyField(source="polynomial_part")
    fractions = PartialFractionSerializer(many=True)
