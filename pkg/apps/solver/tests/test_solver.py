import pytest

from apps.bigroups.schemas import GroupCase, valid_cases
from apps.coloring.models import Partition
from apps.coloring.services import is_distinguishing
from apps.solver.schemas import Budget, DnResult, Evidence
from apps.solver.services import DistinguishingSolver
from core.exceptions import ValidationException


@pytest.fixture
def solver():
    return DistinguishingSolver()


def test_exists_examples(solver):
    d4 = GroupCase.of("d", 4)
    refuted = solver.exists_distinguishing(d4, 2)
    assert refuted.status == "refuted"
    assert refuted.nodes == 2 ** 7
    found = solver.exists_distinguishing(d4, 3)
    assert found.status == "found"
    assert is_distinguishing(d4, Partition.parse_rgs(found.rgs, 4))


def test_enough_colors_always_distinguish(solver):
    for n in (2, 3):
        for case in valid_cases(n):
            assert solver.exists_distinguishing(case, 2 * n).status == "found"


def test_exists_rejects_k_below_one(solver):
    with pytest.raises(ValidationException):
        solver.exists_distinguishing(GroupCase.of("a", 3), 0)


def test_found_is_monotone_in_k(solver):
    for case in [GroupCase.of("c", 3), GroupCase.of("e", 4, line=2), GroupCase.of("b", 4)]:
        statuses = [solver.exists_distinguishing(case, k).status for k in range(1, 2 * case.n + 1)]
        first = statuses.index("found")
        assert all(status == "refuted" for status in statuses[:first])
        assert all(status == "found" for status in statuses[first:])


@pytest.mark.parametrize(
    "case, expected",
    [(GroupCase.of("b", 4), 3), (GroupCase.of("e", 3), 2), (GroupCase.of("f", 6), 3)],
    ids=lambda x: x.label if isinstance(x, GroupCase) else str(x),
)
def test_distinguishing_number_examples(solver, case, expected):
    result = solver.distinguishing_number(case)
    assert result.value == result.lo == result.hi == expected
    assert result.evidence is Evidence.EXHAUSTIVE
    assert is_distinguishing(case, Partition.parse_rgs(result.rgs, case.n))


def test_results_are_deterministic(solver):
    case = GroupCase.of("c", 4, line=2)
    first, second = solver.distinguishing_number(case), solver.distinguishing_number(case)
    assert (first.value, first.rgs, first.nodes) == (second.value, second.rgs, second.nodes)


def test_theory_shortcut_agrees(solver):
    for case in [GroupCase.of("d", 5), GroupCase.of("c", 3), GroupCase.of("i", 4)]:
        plain = solver.distinguishing_number(case)
        shortcut = solver.distinguishing_number(case, use_theory=True)
        assert shortcut.value == plain.value
        assert shortcut.evidence is Evidence.EXHAUSTIVE


def test_budget_exhaustion_falls_back_to_the_construction():
    solver = DistinguishingSolver(budget=Budget(nodes=5, ms=60_000))
    result = solver.distinguishing_number(GroupCase.of("a", 4))
    assert result.evidence is Evidence.CONSTRUCTION_ONLY
    assert result.value is None
    assert (result.lo, result.hi) == (2, 5)
    assert is_distinguishing(GroupCase.of("a", 4), Partition.parse_rgs(result.rgs, 4))


def test_result_json_round_trip(solver):
    result = solver.distinguishing_number(GroupCase.of("d", 4))
    parsed = DnResult.model_validate_json(result.model_dump_json())
    assert parsed == result
    assert parsed.model_dump(mode="json")["evidence"] == "exhaustive"
