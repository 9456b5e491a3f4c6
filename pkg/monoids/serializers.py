from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from .exceptions import PartitionSpecError, TransformationError
from .partitions import Partition, parse_partition
from .transformations import Transformation


class PartitionField(serializers.Field):
    """Partition spec such as '3+2+1'"""

    def to_representation(self, value):
        if isinstance(value, Partition):
            return value.render()
        return parse_partition(value).render()

    def to_internal_value(self, data):
        try:
            return parse_partition(data)
        except PartitionSpecError as exc:
            raise serializers.ValidationError(str(exc))


class TransformationField(serializers.Field):
    """Image list such as [1, 0, 2]; the comma format is accepted on input"""

    def to_representation(self, value):
        return list(value.images)

    def to_internal_value(self, data):
        try:
            if isinstance(data, str):
                return Transformation.parse(data)
            if not isinstance(data, (list, tuple)):
                raise TransformationError(f'expected a list of images, got {data!r}')
            return Transformation(tuple(data))
        except TransformationError as exc:
            raise serializers.ValidationError(str(exc))


class RankParametersSerializer(serializers.Serializer):
    p = serializers.IntegerField(min_value=0)
    q = serializers.IntegerField(min_value=0)
    t = serializers.IntegerField(min_value=0)
    s = serializers.IntegerField(min_value=1)
    r_rep = serializers.IntegerField(min_value=0)
    l = serializers.IntegerField(min_value=0)
    g = serializers.IntegerField(min_value=0, max_value=1)
    g_prime = serializers.IntegerField(min_value=0, max_value=1)
    h = serializers.IntegerField(min_value=0)


class RankBreakdownSerializer(serializers.Serializer):
    """Rank of T(X,P) split into its three components"""
    partition = PartitionField()
    rank_units = serializers.IntegerField(min_value=1)
    relrank_t_over_sigma = serializers.IntegerField(min_value=0)
    relrank_sigma_over_s = serializers.IntegerField(min_value=0)
    total = serializers.IntegerField(min_value=1)
    params = RankParametersSerializer()
    special_case = serializers.CharField(allow_null=True, required=False)

    def validate(self, attrs):
        parts = attrs['rank_units'] + attrs['relrank_t_over_sigma'] + attrs['relrank_sigma_over_s']
        if parts != attrs['total']:
            raise serializers.ValidationError('rank components do not add up to the total')
        return attrs


class SizesSerializer(serializers.Serializer):
    partition = PartitionField()
    order_t = serializers.IntegerField(min_value=1)
    order_sigma = serializers.IntegerField(min_value=1)
    order_s = serializers.IntegerField(min_value=1)
    enumerated = serializers.ListField(child=serializers.IntegerField(), allow_null=True, required=False)


class GeneratedElementSerializer(serializers.Serializer):
    tag = serializers.CharField()
    note = serializers.CharField(allow_blank=True)
    transformation = TransformationField()


class GeneratingSetSerializer(serializers.Serializer):
    """Generating set with the class of every element"""
    partition = PartitionField()
    size = serializers.IntegerField(min_value=0)
    elements = GeneratedElementSerializer(many=True)
    generates = serializers.BooleanField(allow_null=True, required=False)

    def validate(self, attrs):
        if attrs['size'] != len(attrs['elements']):
            raise serializers.ValidationError('size does not match the number of elements')
        return attrs


class ClosureReportSerializer(serializers.Serializer):
    partition = PartitionField()
    order = serializers.IntegerField(min_value=0)
    expected_order = serializers.IntegerField(min_value=1)
    passed = serializers.BooleanField()
    generator_count = serializers.IntegerField(min_value=0)
    multiplications = serializers.IntegerField(min_value=0)
    depth = serializers.IntegerField(min_value=0)
    seconds = serializers.FloatField(min_value=0)


class ObligationSerializer(serializers.Serializer):
    requirement = serializers.CharField()
    kind = serializers.CharField()
    satisfied_by = serializers.IntegerField(allow_null=True, min_value=0)


class CertificateSerializer(serializers.Serializer):
    """Obligation table of a necessity certificate"""
    partition = PartitionField()
    verdict = serializers.ChoiceField(choices=['pass', 'fail'])
    element_count = serializers.IntegerField(min_value=0)
    parity_rank = serializers.IntegerField(min_value=0)
    parity_dimension = serializers.IntegerField(min_value=0)
    obligations = ObligationSerializer(many=True)
    notes = serializers.ListField(child=serializers.CharField())


class SearchResultSerializer(serializers.Serializer):
    partition = PartitionField()
    rank = serializers.IntegerField(min_value=1)
    witness = serializers.ListField(child=TransformationField())
    layer_ranks = serializers.DictField(child=serializers.IntegerField(min_value=0))
    closures_run = serializers.IntegerField(min_value=0)
    insufficient = serializers.DictField(child=serializers.ListField(child=serializers.IntegerField()))


class AuditRowSerializer(serializers.Serializer):
    partition = PartitionField()
    degree = serializers.IntegerField(min_value=1)
    rank = serializers.IntegerField(min_value=1)
    published_rank = serializers.IntegerField(allow_null=True)
    rank_matches = serializers.BooleanField()
    order_t = serializers.IntegerField(min_value=1)
    published_order = serializers.IntegerField(allow_null=True)
    order_matches = serializers.BooleanField()
    note = serializers.CharField(allow_blank=True)


class JInvariantEntrySerializer(serializers.Serializer):
    source_size = serializers.IntegerField(min_value=1)
    target_size = serializers.IntegerField(min_value=1)
    kernel_types = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField(min_value=1)))


class JInvariantSerializer(serializers.Serializer):
    partition = PartitionField()
    transformation = TransformationField()
    label = serializers.CharField()
    entries = JInvariantEntrySerializer(many=True)


def render_json(data):
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode()
