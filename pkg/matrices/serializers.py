from fractions import Fraction

from rest_framework import serializers

from .combined import render_matrix, row_col_sums, scale_header
from .exact import RMatrix, to_rational
from .exceptions import MatrixParseError


class RationalField(serializers.Field):
    """
    Exact rational rendered as a string ("3", "-19/4"). Accepts integers and
    strings on input; floats are refused.
    """

    default_error_messages = {
        "invalid": "{value!r} is not an exact rational.",
        "float": "Floats are not accepted; write {value!r} as a string.",
    }

    def to_representation(self, value):
        return str(Fraction(value))

    def to_internal_value(self, data):
        if isinstance(data, float):
            self.fail("float", value=data)
        if isinstance(data, bool) or not isinstance(data, (int, str)):
            self.fail("invalid", value=data)
        try:
            return to_rational(data)
        except (MatrixParseError, TypeError, ValueError):
            self.fail("invalid", value=data)


class EnumValueField(serializers.Field):
    def to_representation(self, value):
        return value.value


class SignatureField(serializers.Field):
    """Signature as a list of +1/-1 with null for undetermined orders."""

    def to_representation(self, value):
        return list(value.entries)


class MatrixFileSerializer(serializers.Serializer):
    """
    Serializer for the JSON matrix file ``{"n": 3, "rows": [[...], ...]}``.
    """

    n = serializers.IntegerField(min_value=1)
    rows = serializers.ListField(
        child=serializers.ListField(child=RationalField(), allow_empty=False),
        allow_empty=False,
    )

    def validate(self, attrs):
        n = attrs["n"]
        if len(attrs["rows"]) != n or any(len(row) != n for row in attrs["rows"]):
            raise serializers.ValidationError(
                {"rows": f"Expected {n} rows of {n} entries."}
            )
        return attrs

    def create(self, validated_data):
        return RMatrix(validated_data["rows"])


class MinorWitnessSerializer(serializers.Serializer):
    order = serializers.IntegerField()
    rows = serializers.ListField(child=serializers.IntegerField())
    cols = serializers.ListField(child=serializers.IntegerField())
    value = RationalField()
    reason = serializers.CharField()
    partner = serializers.SerializerMethodField()

    def get_partner(self, obj):
        if obj.partner is None:
            return None
        return MinorWitnessSerializer(obj.partner).data


class ClassificationSerializer(serializers.Serializer):
    """
    Serializer for a full classification. Flags that were not evaluated are null.
    """

    order = serializers.IntegerField()
    is_sr = serializers.BooleanField(allow_null=True)
    is_ssr = serializers.BooleanField(allow_null=True)
    is_assr = serializers.BooleanField(allow_null=True)
    signature = SignatureField(allow_null=True)
    staircase = EnumValueField(allow_null=True)
    rule = EnumValueField(allow_null=True)
    irreducible = serializers.BooleanField(allow_null=True)
    nonsingular = serializers.BooleanField(allow_null=True)
    sr_witness = MinorWitnessSerializer(allow_null=True)
    ssr_witness = MinorWitnessSerializer(allow_null=True)
    assr_witness = MinorWitnessSerializer(allow_null=True)


class CombinedSerializer(serializers.Serializer):
    """
    Serializer for a combined matrix: exact entries, their decimal rendering
    and the row and column sums. ``digits`` and ``scale_exponent`` come from
    the serializer context.
    """

    route = EnumValueField()
    det = RationalField(source="det_a")
    exact = serializers.SerializerMethodField()
    scale = serializers.SerializerMethodField()
    decimal = serializers.SerializerMethodField()
    row_sums = serializers.SerializerMethodField()
    col_sums = serializers.SerializerMethodField()
    sums_are_one = serializers.SerializerMethodField()

    def get_exact(self, obj):
        return [[str(x) for x in row] for row in obj.matrix.rows]

    def get_scale(self, obj):
        return scale_header(self.context.get("scale_exponent")) or None

    def get_decimal(self, obj):
        return render_matrix(
            obj.matrix,
            digits=self.context.get("digits"),
            scale_exponent=self.context.get("scale_exponent"),
        )

    def get_row_sums(self, obj):
        return [str(s) for s in row_col_sums(obj.matrix)[0]]

    def get_col_sums(self, obj):
        return [str(s) for s in row_col_sums(obj.matrix)[1]]

    def get_sums_are_one(self, obj):
        rows, cols = row_col_sums(obj.matrix)
        return all(s == 1 for s in rows + cols)


class VerdictSerializer(serializers.Serializer):
    status = EnumValueField()
    note = serializers.CharField(allow_blank=True)
    witness = serializers.JSONField(allow_null=True)


class CheckReportSerializer(serializers.Serializer):
    check_id = serializers.CharField()
    verdict = VerdictSerializer()
    facts = serializers.JSONField()
    seed = serializers.IntegerField(allow_null=True)


class ReportSerializer(serializers.Serializer):
    """
    Serializer for a command report. Sections a command did not produce are
    null; ``timing`` is left out entirely unless it was measured.
    """

    tool_version = serializers.CharField()
    schema_version = serializers.CharField()
    input_digest = serializers.CharField()
    input_name = serializers.CharField()
    matrix = MatrixFileSerializer()
    classification = ClassificationSerializer(allow_null=True)
    combined = CombinedSerializer(allow_null=True)
    checks = CheckReportSerializer(many=True, allow_null=True)
    timing = serializers.DictField(child=serializers.FloatField(), allow_null=True)

    def to_representation(self, instance):
        data = super().to_representation(instance)
        if data.get("timing") is None:
            data.pop("timing", None)
        return data


class ExpectedFactsSerializer(serializers.Serializer):
    is_sr = serializers.BooleanField()
    is_assr = serializers.BooleanField()
    staircase = EnumValueField()
    signature = SignatureField()
    irreducible = serializers.BooleanField()
    combined_checkerboard = EnumValueField()
    combined_is_assr = serializers.BooleanField(allow_null=True)
    combined_doubly_stochastic = serializers.BooleanField(allow_null=True)


class FixtureSerializer(serializers.Serializer):
    """
    Serializer for the expected-facts sidecar written next to each fixture matrix.
    """

    id = serializers.CharField()
    expected = ExpectedFactsSerializer()
    combined_exact = MatrixFileSerializer(allow_null=True)
    combined_table = serializers.ListField(
        child=serializers.ListField(child=serializers.CharField()), allow_null=True
    )
    table_scale_exponent = serializers.IntegerField()
    table_tolerance = RationalField()
    note = serializers.CharField(allow_blank=True)
