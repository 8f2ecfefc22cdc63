import random

import pytest

from apps.bigroups.models import u, v
from apps.coloring.models import Partition, canonicalize, discrete_partition, trivial_partition
from apps.coloring.schemas import PartitionSchema
from core.exceptions import ValidationException


def test_canonicalize_examples():
    assert canonicalize([5, 5, 9, 5]).colors == (0, 0, 1, 0)
    assert canonicalize([0, 0, 1, 0]).colors == (0, 0, 1, 0)
    assert canonicalize([2, 1, 1, 0]).colors == (0, 1, 1, 2)


def test_canonicalize_rejects_wrong_length():
    with pytest.raises(ValidationException):
        canonicalize([0, 1, 2], 2)
    with pytest.raises(ValidationException):
        canonicalize([0, 1, 2])


def test_canonicalize_is_idempotent_and_keeps_the_set_partition():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 6)
        raw = [rng.randint(0, 9) for _ in range(2 * n)]
        once = canonicalize(raw, n)
        assert canonicalize(once.colors, n) == once
        for i in range(2 * n):
            for j in range(2 * n):
                assert (raw[i] == raw[j]) == (once.colors[i] == once.colors[j])


def test_classes_follow_vertex_order():
    part = Partition.from_classes([[u(1), v(2)], [v(1), u(2)]], 2)
    assert part.colors == (0, 1, 1, 0)
    assert part.classes() == [[v(1), u(2)], [v(2), u(1)]]
    assert part.num_colors == 2
    assert part.rgs() == "0,1,1,0"
    assert str(part) == "{v1, u2} | {v2, u1}"


def test_from_classes_rejects_non_partitions():
    with pytest.raises(ValidationException, match="two classes"):
        Partition.from_classes([[v(1), u(1)], [v(1), v(2), u(2)]], 2)
    with pytest.raises(ValidationException, match="not covered"):
        Partition.from_classes([[v(1), u(1)], [v(2)]], 2)


def test_json_form():
    part = Partition.from_classes([[v(1), v(2), u(1)], [v(3), u(2), u(3)]], 3)
    schema = part.to_schema()
    assert schema.model_dump() == {"n": 3, "classes": [["v1", "v2", "u1"], ["v3", "u2", "u3"]]}
    parsed = PartitionSchema.model_validate_json(schema.model_dump_json())
    assert Partition.from_schema(parsed) == part


def test_rgs_string():
    assert Partition.parse_rgs("0,0,1,0", 2) == Partition(n=2, colors=(0, 0, 1, 0))
    with pytest.raises(ValidationException, match="restricted-growth"):
        Partition.parse_rgs("1,0,0,0", 2)


def test_trivial_and_discrete():
    assert trivial_partition(3).num_colors == 1
    assert discrete_partition(3).num_colors == 6
