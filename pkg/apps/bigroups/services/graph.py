from collections import deque
from typing import FrozenSet, List, Set

import networkx as nx

from apps.perms.services import orbit
from ..models.element import BiElement, Vertex, u, v
from ..schemas.case import GraphFamily, GraphSpec, TransitivityReport
from .algebra import to_vertex_perm, vertex_genset

Edge = FrozenSet[int]


def vertices(spec: GraphSpec) -> List[Vertex]:
    """All 2n vertices in the fixed order v1..vn, u1..un."""
    return [v(i) for i in range(1, spec.n + 1)] + [u(i) for i in range(1, spec.n + 1)]


def adjacency(spec: GraphSpec, a: Vertex, b: Vertex) -> bool:
    if a.side is b.side:
        return False
    if spec.family is GraphFamily.CROWN:
        return a.index != b.index
    return True


def edges(spec: GraphSpec) -> List[Edge]:
    """Edges as unordered pairs of vertex positions."""
    n = spec.n
    return [
        frozenset((i, n + j))
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if adjacency(spec, v(i), u(j))
    ]


def to_networkx(spec: GraphSpec) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(str(x) for x in vertices(spec))
    n = spec.n
    for edge in edges(spec):
        i, j = sorted(edge)
        graph.add_edge(str(v(i)), str(u(j - n)))
    return graph


def edge_orbit(gens: List[BiElement], start: Edge) -> Set[Edge]:
    """Orbit of one edge under the induced action on unordered vertex pairs."""
    perms = [to_vertex_perm(e) for e in gens]
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for p in perms:
            image = frozenset(p(x) for x in current)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return seen


def transitivity_report(spec: GraphSpec, gens: List[BiElement]) -> TransitivityReport:
    n = spec.n
    vertex_orbit = orbit(vertex_genset(gens, n), 1)
    all_edges = edges(spec)
    start = frozenset((1, n + 2)) if spec.family is GraphFamily.CROWN else frozenset((1, n + 1))
    return TransitivityReport(
        vertex_transitive=len(vertex_orbit) == 2 * n,
        edge_transitive=len(edge_orbit(gens, start)) == len(all_edges),
        connected=nx.is_connected(to_networkx(spec)),
    )
