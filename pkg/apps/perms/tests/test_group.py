import random

from apps.perms.models import GenSet, Perm, compose, cycle, identity, inverse
from apps.perms.services import (
    EnumerationOverflow,
    alternating_group,
    contains,
    enumerate_elements,
    group_order,
    orbit,
    symmetric_group,
)


def test_orbit_examples():
    assert orbit(GenSet.of([identity(5)]), 3) == {3}
    assert orbit(GenSet.of([cycle(1, 2, 3, degree=5)]), 1) == {1, 2, 3}
    assert orbit(symmetric_group(4), 2) == {1, 2, 3, 4}


def test_enumerate_small_groups():
    elements = enumerate_elements(GenSet.of([cycle(1, 2)]), 10)
    assert set(elements) == {identity(2), cycle(1, 2)}
    assert len(enumerate_elements(alternating_group(4), 100)) == 12
    assert enumerate_elements(symmetric_group(8), 1000) == EnumerationOverflow(cap=1000)


def test_enumeration_is_closed_and_duplicate_free():
    elements = enumerate_elements(alternating_group(5), 1000)
    as_set = set(elements)
    assert len(as_set) == len(elements) == 60
    for a in elements[:15]:
        assert inverse(a) in as_set
        for b in elements[:15]:
            assert compose(a, b) in as_set


def test_group_order_examples():
    assert group_order(GenSet.of([identity(3)])) == 1
    assert group_order(symmetric_group(5)) == 120
    assert group_order(alternating_group(6)) == 360


def test_group_order_falls_back_to_stabilizer_chain():
    assert group_order(symmetric_group(9), cap=100) == 362880
    assert group_order(alternating_group(10), cap=100) == 1814400


def test_contains_examples():
    assert not contains(alternating_group(4), cycle(1, 2, degree=4))
    rng = random.Random(7)
    images = [1, 2, 3, 4]
    rng.shuffle(images)
    assert contains(symmetric_group(4), Perm(images))
    assert contains(alternating_group(5), cycle(1, 2, 3, degree=5))


def test_contains_by_sifting_for_large_groups():
    sym8 = symmetric_group(8)
    left = GenSet.of([Perm(list(g.images) + list(range(9, 17))) for g in sym8.generators], degree=16)
    right = GenSet.of([Perm(list(range(1, 9)) + [i + 8 for i in g.images]) for g in sym8.generators], degree=16)
    product = GenSet.of(left.generators + right.generators)
    assert group_order(product, cap=1000) == 40320 ** 2
    assert contains(product, cycle(1, 2, degree=16) * cycle(9, 10, 11, degree=16))
    assert not contains(product, cycle(8, 9, degree=16))


def test_orbit_size_divides_order():
    gens = GenSet.of([cycle(1, 2, 3, degree=7), cycle(4, 5, degree=7)])
    order = group_order(gens)
    for point in range(1, 8):
        assert order % len(orbit(gens, point)) == 0
