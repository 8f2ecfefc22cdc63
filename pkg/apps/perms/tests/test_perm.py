import random

import pytest

from apps.perms.models import Parity, Perm, compose, cycle, identity, inverse, parity, parse_perm
from core.exceptions import DegreeMismatchException, ValidationException


def _random_perm(rng: random.Random, degree: int) -> Perm:
    images = list(range(1, degree + 1))
    rng.shuffle(images)
    return Perm(images)


def test_compose_applies_left_operand_first():
    assert compose(cycle(1, 2, degree=3), cycle(2, 3)) == cycle(1, 3, 2)
    assert cycle(1, 2, degree=3) * cycle(2, 3) == cycle(1, 3, 2)


def test_compose_identity_and_inverse():
    p = Perm([3, 1, 2, 5, 4])
    assert compose(identity(5), p) == p
    assert compose(p, inverse(p)) == identity(5)


def test_compose_rejects_degree_mismatch():
    with pytest.raises(DegreeMismatchException):
        compose(identity(3), identity(4))


def test_inverse_examples():
    assert inverse(identity(4)) == identity(4)
    assert inverse(cycle(1, 2, 3)) == cycle(1, 3, 2)
    assert inverse(cycle(1, 2)) == cycle(1, 2)


def test_parity_examples():
    assert parity(identity(6)) is Parity.EVEN
    assert parity(cycle(1, 2)) is Parity.ODD
    assert parity(cycle(1, 2, 3)) is Parity.EVEN


def test_group_axioms_and_parity_homomorphism():
    rng = random.Random(20240601)
    for _ in range(200):
        degree = rng.randint(1, 12)
        a, b, c = (_random_perm(rng, degree) for _ in range(3))
        product = a * b
        assert sorted(product.images) == list(range(1, degree + 1))
        assert (a * b) * c == a * (b * c)
        assert a * inverse(a) == identity(degree) == inverse(a) * a
        assert parity(product) is (parity(a) ^ parity(b))
        for j in range(1, degree + 1):
            assert product(j) == b(a(j))


def test_invalid_images_rejected():
    with pytest.raises(ValidationException):
        Perm([1, 1, 2])


def test_cycle_notation_round_trip():
    p = parse_perm("(1,2)(3,4,5)", 6)
    assert str(p) == "(1,2)(3,4,5)"
    assert p(6) == 6
    assert str(identity(3)) == "()"
    assert parse_perm("()", 4) == identity(4)


@pytest.mark.parametrize("text", ["(1,2", "(1,2)(2,3)", "(1,x)", "1,2"])
def test_malformed_cycle_notation(text):
    with pytest.raises(ValidationException):
        parse_perm(text, 4)


def test_cycle_type_and_support():
    p = parse_perm("(1,2)(3,4)(5,6)", 6)
    assert p.cycle_type() == (2, 2, 2)
    assert p.support() == frozenset(range(1, 7))
