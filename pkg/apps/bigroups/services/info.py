from apps.perms.models import GenSet
from apps.perms.services import group_order
from ..schemas import GroupCase, GroupInfo
from .algebra import vertex_genset
from .catalog import case_structure
from .graph import transitivity_report


def group_info(case: GroupCase) -> GroupInfo:
    """Orders, transitivity and generators of a catalog case, as computed from its generators."""
    group = case_structure(case)
    n = case.n
    generators = group.generators()
    plus_generators = group.plus.generators()
    return GroupInfo(
        case=case.case_id,
        line=case.line,
        n=n,
        graph=str(group.graph),
        order=group_order(vertex_genset(generators, n)),
        plus_order=group_order(vertex_genset(plus_generators, n)),
        induced_order=group_order(GenSet.of([e.g for e in plus_generators], degree=n)),
        transitivity=transitivity_report(group.graph, generators),
        generators=[str(e) for e in generators],
        plus_generators=[str(e) for e in plus_generators],
    )
