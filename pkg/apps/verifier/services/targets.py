from apps.bigroups.models import BiElement, tau
from apps.bigroups.schemas import GroupCase
from apps.bigroups.services import (
    BiGroup,
    ComposedAutomorphism,
    Conjugation,
    Coupling,
    ParityRule,
    PlusGroup,
    case_structure,
    outer_phi_s6,
)
from apps.perms.models import compose, cycle, identity
from core.exceptions import ValidationException

REMARK_CASES = ("e", "g", "i")


def remark_conjugator(n: int) -> BiElement:
    """(id, (1,2)), which moves the second-line groups into H wr Sym(2)."""
    return BiElement(identity(n), cycle(1, 2, degree=n), 0)


def remark_target(case: GroupCase) -> BiGroup:
    """The second-line group after conjugation, described with the same structure as a catalog case."""
    if case.case_id not in REMARK_CASES or case.line != 2:
        raise ValidationException(detail=f"no conjugated form for case {case.case_id} line {case.line}")
    n = case.n
    swap = cycle(1, 2, degree=n)
    mu = Conjugation(swap)
    graph = case_structure(case).graph
    if case.case_id == "e":
        return BiGroup(graph, PlusGroup(n, Coupling.DIAGONAL, ParityRule.EVEN, mu), tau(n))
    if case.case_id == "i":
        return BiGroup(graph, PlusGroup(n, Coupling.KLEIN, ParityRule.EVEN, mu), tau(n))
    phi = outer_phi_s6()
    representative = BiElement(identity(n), compose(swap, phi(swap)), 1)
    return BiGroup(graph, PlusGroup(n, Coupling.DIAGONAL, ParityRule.EVEN, ComposedAutomorphism(phi, mu)),
                   representative)


def in_alternating_wreath(e: BiElement) -> bool:
    return e.g.is_even() and e.gprime.is_even()
