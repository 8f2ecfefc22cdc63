import random

import pytest

from apps.bigroups.models import BiElement, u, v
from apps.bigroups.schemas import GroupCase, valid_cases
from apps.bigroups.services import case_structure, from_vertex_perm, vertex_genset
from apps.coloring.models import Partition, canonicalize, discrete_partition, trivial_partition
from apps.coloring.services import (
    BacktrackEngine,
    EnumerationEngine,
    is_distinguishing,
    preserves_classes,
    preserving_witness,
)
from apps.perms.models import cycle, identity
from apps.perms.services import enumerate_elements
from core.exceptions import OracleUnavailableException, ValidationException

THREE_CLASS_K44 = [[v(1), v(2), u(1)], [v(3), u(2), u(3)], [v(4), u(4)]]


def _random_partition(rng: random.Random, n: int) -> Partition:
    k = rng.choice([1, 2, 2, 3, 3, 3, 4, 5, 2 * n])
    return canonicalize([rng.randrange(k) for _ in range(2 * n)], n)


def test_three_class_partition_distinguishes_alternating_product():
    part = Partition.from_classes(THREE_CLASS_K44, 4)
    assert not preserving_witness(GroupCase.of("b", 4), part).found
    assert is_distinguishing(GroupCase.of("b", 4), part)


def test_one_class_is_never_distinguishing():
    for n in range(2, 6):
        for case in valid_cases(n):
            witness = preserving_witness(case, trivial_partition(n))
            assert witness.found
            assert not witness.element.is_identity()


def test_discrete_partition_distinguishes_every_case():
    for n in range(2, 7):
        for case in valid_cases(n):
            assert is_distinguishing(case, discrete_partition(n)), case.label


def test_bipart_classes_are_preserved_in_full_wreath_product():
    part = Partition.from_classes([[v(1), v(2), v(3)], [u(1), u(2), u(3)]], 3)
    witness = preserving_witness(GroupCase.of("a", 3), part)
    assert witness.found
    assert witness.element.eps == 0
    assert preserves_classes(witness.element, part)


def test_no_two_coloring_distinguishes_k33():
    case = GroupCase.of("a", 3)
    for mask in range(32):
        colors = [0] + [(mask >> bit) & 1 for bit in range(5)]
        assert not is_distinguishing(case, canonicalize(colors, 3))


def test_partition_size_must_match():
    with pytest.raises(ValidationException):
        preserving_witness(GroupCase.of("a", 3), trivial_partition(4))


ORACLE_CASES = [case for n in range(2, 5) for case in valid_cases(n)] + \
    [GroupCase.of("f", 6), GroupCase.of("g", 6), GroupCase.of("g", 6, line=2)]


@pytest.mark.parametrize("case", ORACLE_CASES, ids=lambda c: c.label)
def test_engines_agree_and_witnesses_are_sound(case):
    group = case_structure(case)
    rng = random.Random(f"oracle-{case.label}")
    backtrack, oracle = BacktrackEngine(), EnumerationEngine()
    for _ in range(200):
        part = _random_partition(rng, case.n)
        fast = backtrack.witness(group, part)
        slow = oracle.witness(group, part)
        assert fast.found == slow.found, f"{case.label} {part.rgs()}"
        for witness in (fast, slow):
            if witness.found:
                assert not witness.element.is_identity()
                assert group.member(witness.element)
                assert preserves_classes(witness.element, part)
        if fast.found and slow.found:
            assert (fast.element.eps == 0) == (slow.element.eps == 0)


@pytest.mark.parametrize("case", [case for n in (3, 4) for case in valid_cases(n)], ids=lambda c: c.label)
def test_bipart_preserving_witness_is_lexicographically_first(case):
    group = case_structure(case)
    elements = enumerate_elements(vertex_genset(group.generators(), case.n), 10 ** 5)
    plus = [e for e in (from_vertex_perm(p, case.n) for p in elements) if e.eps == 0 and not e.is_identity()]
    rng = random.Random(f"lex-{case.label}")
    engine = BacktrackEngine()
    for _ in range(50):
        part = _random_partition(rng, case.n)
        expected = min(
            (e for e in plus if preserves_classes(e, part)),
            key=lambda e: (e.g.images, e.gprime.images),
            default=None,
        )
        assert engine.plus_witness(group, part).element == expected, part.rgs()


def test_bipart_witness_in_full_wreath_product_is_first_in_image_order():
    part = Partition.from_classes([[v(1), v(2), v(3)], [u(1), u(2), u(3)]], 3)
    witness = BacktrackEngine().plus_witness(case_structure(GroupCase.of("a", 3)), part)
    assert witness.element == BiElement(identity(3), cycle(2, 3), 0)
    assert preserves_classes(BiElement(cycle(1, 2, degree=3), identity(3), 0), part)


def test_oracle_refuses_large_groups():
    part = trivial_partition(6)
    with pytest.raises(OracleUnavailableException):
        EnumerationEngine(cap=1000).witness(case_structure(GroupCase.of("a", 6)), part)


def test_relabeling_colors_does_not_matter():
    rng = random.Random(21)
    for _ in range(100):
        n = rng.randint(3, 6)
        case = rng.choice(valid_cases(n))
        raw = [rng.randrange(4) for _ in range(2 * n)]
        relabel = list(range(4))
        rng.shuffle(relabel)
        shuffled = [relabel[c] for c in raw]
        assert is_distinguishing(case, canonicalize(raw, n)) == is_distinguishing(case, canonicalize(shuffled, n))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_distinguishing_is_monotone_in_the_group(n):
    rng = random.Random(n)
    a, b, c = GroupCase.of("a", n), GroupCase.of("b", n), GroupCase.of("c", n)
    for _ in range(200):
        part = _random_partition(rng, n)
        if is_distinguishing(a, part):
            assert is_distinguishing(c, part)
        if is_distinguishing(c, part):
            assert is_distinguishing(b, part)


def test_three_points_of_a_class_give_a_three_cycle():
    n = 5
    classes = [[v(1), v(2), v(3)]] + [[v(i)] for i in (4, 5)] + [[u(i)] for i in range(1, 6)]
    witness = preserving_witness(GroupCase.of("b", n), Partition.from_classes(classes, n))
    assert witness.found
    assert witness.element.g.support() == frozenset({1, 2, 3})
    assert witness.element.g.cycle_type() == (3,)
    assert witness.element.gprime.is_identity()


def test_two_matched_pairs_give_a_diagonal_transposition():
    n = 5
    classes = [[v(1), v(2)], [u(1), u(2)]] + [[v(i)] for i in (3, 4, 5)] + [[u(i)] for i in (3, 4, 5)]
    witness = preserving_witness(GroupCase.of("d", n), Partition.from_classes(classes, n))
    swap = cycle(1, 2, degree=n)
    assert witness.element == BiElement(swap, swap, 0)


def test_oracle_keeps_few_element_lists():
    from apps.coloring.services.witness import _group_elements

    assert _group_elements.cache_info().maxsize <= 4
    engine = EnumerationEngine()
    part = trivial_partition(3)
    for case in valid_cases(3):
        engine.witness(case_structure(case), part)
    assert _group_elements.cache_info().currsize <= 4
