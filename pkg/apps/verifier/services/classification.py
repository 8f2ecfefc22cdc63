from itertools import combinations_with_replacement
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from apps.bigroups.schemas import GroupCase, valid_cases
from apps.bigroups.services import (
    case_structure,
    edge_orbit,
    from_vertex_perm,
    transitivity_report,
    vertex_genset,
)
from apps.perms.models import GenSet, Perm, conjugate
from apps.perms.services import alternating_group, enumerate_elements, group_order, orbit

# Listed pairs whose graph is not edge-transitive under the group
DEGENERATE_PAIRS = frozenset({("c", 1, 2), ("e", 2, 3)})

ElementSet = FrozenSet[Perm]


def forward_check(case: GroupCase) -> Dict[str, object]:
    """Transitivity, index two, and the order of the group induced on one bipart."""
    group = case_structure(case)
    n = case.n
    gens = group.generators()
    plus_gens = group.plus.generators()
    report = transitivity_report(group.graph, gens)
    order = group_order(vertex_genset(gens, n), cap=5000)
    plus_order = group_order(vertex_genset(plus_gens, n), cap=5000)
    induced = group_order(GenSet.of([e.g for e in plus_gens], degree=n), cap=5000)
    expect_edge_transitive = (case.case_id, case.line, n) not in DEGENERATE_PAIRS
    passed = (
        report.vertex_transitive
        and report.connected
        and report.edge_transitive is expect_edge_transitive
        and order == 2 * plus_order
        and induced == group.plus.h_order()
    )
    return {
        "passed": passed,
        "order": order,
        "plus_order": plus_order,
        "induced_order": induced,
        "expected_induced_order": group.plus.h_order(),
        "transitivity": report.model_dump(),
        "expected_edge_transitive": expect_edge_transitive,
    }


def converse_probe(n: int) -> Tuple[bool, Dict[str, object]]:
    """
    Every subgroup of Sym(n) wr Sym(2) generated by at most two elements that
    induces at least Alt(n) on a bipart and is vertex- and edge-transitive on a
    connected bipartite graph must be conjugate under Sym(n) x Sym(n) to a listed group.
    """
    wreath = enumerate_elements(vertex_genset(case_structure(GroupCase.of("a", n)).generators(), n), 10 ** 5)
    listed = {case.label: _element_set(case) for case in valid_cases(n)}
    conjugators = [p for p in wreath if p(1) <= n]
    alternating = frozenset(enumerate_elements(alternating_group(n), 10 ** 5))

    seen: set = set()
    matched: Dict[str, int] = {}
    unmatched: List[str] = []
    for x, y in combinations_with_replacement(wreath, 2):
        elements = frozenset(enumerate_elements(GenSet.of([x, y]), 10 ** 5))
        if elements in seen:
            continue
        seen.add(elements)
        if not _satisfies_hypotheses(elements, n, alternating):
            continue
        label = _conjugate_to_listed(elements, listed, conjugators)
        if label is None:
            unmatched.append(", ".join(str(from_vertex_perm(p, n)) for p in (x, y)))
        else:
            matched[label] = matched.get(label, 0) + 1
    return not unmatched, {"subgroups": len(seen), "matched": matched, "unmatched": unmatched}


def _satisfies_hypotheses(elements: ElementSet, n: int, alternating: ElementSet) -> bool:
    gens = GenSet.of(sorted(elements), degree=2 * n)
    if len(orbit(gens, 1)) != 2 * n:
        return False
    induced = {from_vertex_perm(p, n).g for p in elements if p(1) <= n}
    if not alternating <= induced:
        return False
    bi_gens = [from_vertex_perm(p, n) for p in elements]
    return any(_connected(edge_orbit(bi_gens, frozenset((1, n + j))), 2 * n) for j in range(1, n + 1))


def _connected(edge_set, size: int) -> bool:
    graph = nx.Graph()
    graph.add_nodes_from(range(1, size + 1))
    graph.add_edges_from(tuple(edge) for edge in edge_set)
    return nx.is_connected(graph)


def _conjugate_to_listed(elements: ElementSet, listed: Dict[str, ElementSet],
                         conjugators: List[Perm]) -> Optional[str]:
    for label, target in listed.items():
        if len(target) != len(elements):
            continue
        for c in conjugators:
            if all(conjugate(p, c) in target for p in elements):
                return label
    return None


def _element_set(case: GroupCase) -> ElementSet:
    group = case_structure(case)
    return frozenset(enumerate_elements(vertex_genset(group.generators(), case.n), 10 ** 5))
