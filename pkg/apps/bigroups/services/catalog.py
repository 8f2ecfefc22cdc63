from enum import Enum
from math import factorial
from typing import Callable, List, NamedTuple, Optional, Tuple

from apps.perms.models import Perm, compose, cycle, from_cycles, identity, inverse
from apps.perms.services import alt_generators, sym_generators
from core.exceptions import DegreeMismatchException, ValidationException
from ..models.element import BiElement, bi_identity, tau
from ..schemas.case import GraphSpec, GroupCase
from .algebra import bi_inverse, bi_multiply
from .outer import outer_phi_s6

Twist = Callable[[Perm], Perm]

KLEIN_FOUR_GENERATORS = (
    from_cycles([(1, 2), (3, 4)], 4),
    from_cycles([(1, 3), (2, 4)], 4),
)
KLEIN_FOUR = frozenset({
    identity(4),
    from_cycles([(1, 2), (3, 4)], 4),
    from_cycles([(1, 3), (2, 4)], 4),
    from_cycles([(1, 4), (2, 3)], 4),
})


class Coupling(str, Enum):
    PRODUCT = "product"    # g and g' independent
    DIAGONAL = "diagonal"  # g' = twist(g)
    KLEIN = "klein"        # g' in V4 . twist(g)


class ParityRule(str, Enum):
    ANY = "any"
    EVEN = "even"          # both components even
    MATCHING = "matching"  # components of equal parity


class PlusGroup(NamedTuple):
    """The bipart-preserving subgroup G+, described structurally."""
    n: int
    coupling: Coupling
    parity: ParityRule
    twist: Optional[Twist] = None

    def twisted(self, x: Perm) -> Perm:
        return self.twist(x) if self.twist is not None else x

    def base_generators(self) -> List[Perm]:
        """Generators of the diagonal factor H (or of each factor for products)."""
        if self.parity is ParityRule.ANY:
            return sym_generators(self.n)
        return alt_generators(self.n)

    def contains(self, g: Perm, gprime: Perm) -> bool:
        if g.degree != self.n or gprime.degree != self.n:
            raise DegreeMismatchException(detail=f"Pair of degree ({g.degree},{gprime.degree}) tested on n={self.n}")
        if self.parity is ParityRule.EVEN and not (g.is_even() and gprime.is_even()):
            return False
        if self.parity is ParityRule.MATCHING and g.parity() is not gprime.parity():
            return False
        if self.coupling is Coupling.DIAGONAL:
            return gprime == self.twisted(g)
        if self.coupling is Coupling.KLEIN:
            return compose(gprime, inverse(self.twisted(g))) in KLEIN_FOUR
        return True

    def generators(self) -> List[BiElement]:
        n = self.n
        one = identity(n)
        if self.coupling is Coupling.PRODUCT:
            base = self.base_generators()
            gens = [BiElement(s, one) for s in base] + [BiElement(one, s) for s in base]
            if self.parity is ParityRule.MATCHING:
                gens.append(BiElement(cycle(1, 2, degree=n), cycle(1, 2, degree=n)))
        else:
            if self.parity is ParityRule.MATCHING:
                raise ValidationException(detail=f"{self.coupling.value} coupling has no matching-parity variant")
            gens = [BiElement(s, self.twisted(s)) for s in self.base_generators()]
            if self.coupling is Coupling.KLEIN:
                gens = [BiElement(w, one) for w in KLEIN_FOUR_GENERATORS] + \
                       [BiElement(one, w) for w in KLEIN_FOUR_GENERATORS] + gens
        gens = [e for e in dict.fromkeys(gens) if not e.is_identity()]
        return gens or [bi_identity(n)]

    def h_order(self) -> int:
        """Order of the induced group H on one bipart."""
        full = factorial(self.n)
        return full // 2 if self.parity is ParityRule.EVEN else full

    def order(self) -> int:
        h = self.h_order()
        if self.coupling is Coupling.DIAGONAL:
            return h
        if self.coupling is Coupling.KLEIN:
            return 4 * h
        if self.parity is ParityRule.MATCHING:
            return h * h // 2
        return h * h


class BiGroup(NamedTuple):
    """G = G+ ∪ G+·r acting on a bipartite graph."""
    graph: GraphSpec
    plus: PlusGroup
    representative: BiElement

    @property
    def n(self) -> int:
        return self.graph.n

    def generators(self) -> List[BiElement]:
        return self.plus.generators() + [self.representative]

    def member(self, e: BiElement) -> bool:
        if e.n != self.n:
            raise DegreeMismatchException(detail=f"Element on n={e.n} tested against n={self.n}")
        if e.eps:
            e = bi_multiply(e, bi_inverse(self.representative))
        return self.plus.contains(e.g, e.gprime)

    def order(self) -> int:
        return 2 * self.plus.order()


_STRUCTURE = {
    "a": (Coupling.PRODUCT, ParityRule.ANY),
    "b": (Coupling.PRODUCT, ParityRule.EVEN),
    "c": (Coupling.PRODUCT, ParityRule.MATCHING),
    "d": (Coupling.DIAGONAL, ParityRule.ANY),
    "e": (Coupling.DIAGONAL, ParityRule.EVEN),
    "f": (Coupling.DIAGONAL, ParityRule.ANY),
    "g": (Coupling.DIAGONAL, ParityRule.EVEN),
    "h": (Coupling.KLEIN, ParityRule.ANY),
    "i": (Coupling.KLEIN, ParityRule.EVEN),
}


def plus_group(case: GroupCase) -> PlusGroup:
    coupling, parity = _STRUCTURE[case.case_id]
    twist = outer_phi_s6() if case.case_id in ("f", "g") else None
    return PlusGroup(case.n, coupling, parity, twist)


def coset_representative(case: GroupCase) -> BiElement:
    """The bipart-swapping generator of G."""
    n = case.n
    if case.line == 1:
        return tau(n)
    swap = cycle(1, 2, degree=n)
    if case.case_id == "c":
        return BiElement(swap, identity(n), 1)
    if case.case_id == "g":
        return BiElement(swap, outer_phi_s6()(swap), 1)
    return BiElement(swap, swap, 1)


def case_structure(case: GroupCase) -> BiGroup:
    return BiGroup(
        graph=GraphSpec(family=case.family, n=case.n),
        plus=plus_group(case),
        representative=coset_representative(case),
    )


def build_case(case: GroupCase) -> Tuple[GraphSpec, List[BiElement], List[BiElement]]:
    """(GraphSpec, generators of G, generators of G+)."""
    group = case_structure(case)
    return group.graph, group.generators(), group.plus.generators()


def member(case: GroupCase, e: BiElement) -> bool:
    return case_structure(case).member(e)
