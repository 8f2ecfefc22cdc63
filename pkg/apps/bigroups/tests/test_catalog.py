import random

import pytest

from apps.bigroups.models import BiElement, tau
from apps.bigroups.schemas import GraphFamily, GroupCase, valid_cases
from apps.bigroups.services import (
    bi_multiply,
    build_case,
    case_structure,
    from_vertex_perm,
    member,
    transitivity_report,
    vertex_genset,
)
from apps.perms.models import Perm, cycle, identity
from apps.perms.services import enumerate_elements, group_order
from core.exceptions import ValidationException

NOT_EDGE_TRANSITIVE = {("c", 1, 2), ("e", 2, 3)}


def _cases_up_to(n_max: int):
    return [case for n in range(2, n_max + 1) for case in valid_cases(n)]


def _random_element(rng: random.Random, n: int) -> BiElement:
    def perm():
        images = list(range(1, n + 1))
        rng.shuffle(images)
        return Perm(images)
    return BiElement(perm(), perm(), rng.randint(0, 1))


def test_build_case_orders():
    for case, expected in [(GroupCase.of("a", 3), 72), (GroupCase.of("e", 5), 120), (GroupCase.of("f", 6), 1440)]:
        _, gens, _ = build_case(case)
        assert group_order(vertex_genset(gens, case.n)) == expected


def test_build_case_graph_family():
    assert build_case(GroupCase.of("d", 4))[0].family is GraphFamily.CROWN
    assert build_case(GroupCase.of("e", 4, line=2))[0].family is GraphFamily.CROWN
    assert build_case(GroupCase.of("h", 4))[0].family is GraphFamily.COMPLETE_BIPARTITE


@pytest.mark.parametrize(
    "case_id, n, line, message",
    [
        ("f", 5, 1, "case f requires n=6"),
        ("h", 5, 1, "case h requires n=4"),
        ("b", 2, 1, "case b requires n>=3"),
        ("d", 2, 1, "case d requires n>=3"),
        ("a", 4, 2, "case a has a single line"),
        ("z", 4, 1, "unknown case"),
    ],
)
def test_invalid_cases_name_the_constraint(case_id, n, line, message):
    with pytest.raises(ValidationException, match=message):
        GroupCase.of(case_id, n, line=line)


def test_member_examples():
    d4 = GroupCase.of("d", 4)
    assert member(d4, BiElement(cycle(1, 2, degree=4), cycle(1, 2, degree=4)))
    assert not member(d4, BiElement(cycle(1, 2, degree=4), cycle(1, 3, degree=4)))
    e4 = GroupCase.of("e", 4)
    assert not member(e4, BiElement(cycle(1, 2, degree=4), cycle(1, 2, degree=4)))
    assert member(e4, tau(4))


def test_plus_generators_preserve_biparts_and_index_is_two():
    for case in _cases_up_to(6):
        group = case_structure(case)
        plus_gens = group.plus.generators()
        assert all(e.eps == 0 for e in plus_gens)
        assert group.representative.eps == 1
        order = group_order(vertex_genset(group.generators(), case.n), cap=5000)
        plus_order = group_order(vertex_genset(plus_gens, case.n), cap=5000)
        assert order == group.order() == 2 * plus_order, case.label


SMALL_CASES = _cases_up_to(4) + [c for c in valid_cases(5) + valid_cases(6) if c.case_id in "defg"]


@pytest.mark.parametrize("case", SMALL_CASES, ids=lambda c: c.label)
def test_member_agrees_with_enumeration(case):
    group = case_structure(case)
    elements = enumerate_elements(vertex_genset(group.generators(), case.n), 10 ** 5)
    assert isinstance(elements, list)
    as_elements = {from_vertex_perm(p, case.n) for p in elements}
    for e in as_elements:
        assert group.member(e)
    rng = random.Random(case.label)
    for _ in range(300):
        e = _random_element(rng, case.n)
        assert group.member(e) == (e in as_elements)


def test_transitivity_of_every_listed_pair():
    for case in _cases_up_to(6):
        spec, gens, _ = build_case(case)
        report = transitivity_report(spec, gens)
        assert report.vertex_transitive and report.connected, case.label
        expected = (case.case_id, case.line, case.n) not in NOT_EDGE_TRANSITIVE
        assert report.edge_transitive is expected, case.label


def test_second_line_representatives_square_into_plus_group():
    for case in [GroupCase.of("c", 4, 2), GroupCase.of("e", 5, 2), GroupCase.of("g", 6, 2), GroupCase.of("i", 4, 2)]:
        group = case_structure(case)
        square = bi_multiply(group.representative, group.representative)
        assert square.eps == 0
        assert group.plus.contains(square.g, square.gprime)


def test_klein_four_cases():
    h = case_structure(GroupCase.of("h", 4))
    i = case_structure(GroupCase.of("i", 4))
    assert h.order() == 192
    assert i.order() == 96
    w = BiElement(identity(4), cycle(1, 2, degree=4) * cycle(3, 4, degree=4))
    assert h.member(w) and i.member(w)
    odd = BiElement(cycle(1, 2, degree=4), cycle(1, 2, degree=4))
    assert h.member(odd) and not i.member(odd)
