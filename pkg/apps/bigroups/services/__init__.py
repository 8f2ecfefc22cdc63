from .algebra import (
    act,
    bi_conjugate,
    bi_inverse,
    bi_multiply,
    bi_product,
    from_vertex_perm,
    to_vertex_perm,
    vertex_genset,
)
from .catalog import (
    KLEIN_FOUR,
    KLEIN_FOUR_GENERATORS,
    BiGroup,
    Coupling,
    ParityRule,
    PlusGroup,
    build_case,
    case_structure,
    coset_representative,
    member,
    plus_group,
)
from .graph import adjacency, edge_orbit, edges, to_networkx, transitivity_report, vertices
from .outer import ComposedAutomorphism, Conjugation, OuterAutomorphism, outer_phi_s6
from .info import group_info
