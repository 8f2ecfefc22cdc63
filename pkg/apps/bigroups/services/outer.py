from functools import lru_cache
from typing import Callable, Dict, List, NamedTuple

from apps.perms.models import GenSet, Perm, compose, conjugate, cycle, identity
from apps.perms.services import enumerate_elements, orbit, sym_generators
from config.logging import logger
from core.exceptions import DegreeMismatchException, InternalException

Automorphism = Callable[[Perm], Perm]

# PGL(2,5) on the projective line {0,1,2,3,4,inf}, labelled x -> x+1 and inf -> 6:
# x -> x+1, x -> 2x, x -> -1/x.
_PROJECTIVE_GENERATORS = (
    cycle(1, 2, 3, 4, 5, degree=6),
    cycle(2, 3, 5, 4, degree=6),
    compose(cycle(1, 6, degree=6), cycle(2, 5, degree=6)),
)


class Conjugation(NamedTuple):
    """The inner automorphism x -> by^-1 x by."""
    by: Perm

    def __call__(self, x: Perm) -> Perm:
        return conjugate(x, self.by)


class ComposedAutomorphism(NamedTuple):
    """Apply ``first``, then ``then``."""
    first: Automorphism
    then: Automorphism

    def __call__(self, x: Perm) -> Perm:
        return self.then(self.first(x))


class OuterAutomorphism:
    """A tabulated automorphism of Sym(6), total on all 720 elements."""

    def __init__(self, table: Dict[Perm, Perm]):
        self._table = table

    def __call__(self, x: Perm) -> Perm:
        if x.degree != 6:
            raise DegreeMismatchException(detail=f"Outer automorphism acts on degree 6, got {x.degree}")
        return self._table[x]

    def __len__(self) -> int:
        return len(self._table)

    def items(self):
        return self._table.items()

    def generator_images(self) -> List[Perm]:
        return [self._table[s] for s in sym_generators(6)]

    def __repr__(self) -> str:
        images = ", ".join(str(x) for x in self.generator_images())
        return f"OuterAutomorphism({images})"


@lru_cache(maxsize=1)
def outer_phi_s6() -> OuterAutomorphism:
    """
    An outer automorphism of Sym(6) of order 2.

    Sym(6) acts on the six right cosets of the transitive subgroup PGL(2,5),
    which gives an outer automorphism psi. The result is the first
    psi followed by conjugation by h, for h in sorted element order, that squares
    to the identity.
    """
    elements = enumerate_elements(GenSet.of(sym_generators(6)), 720)
    if len(elements) != 720:
        raise InternalException(detail="Sym(6) enumeration is incomplete")
    elements = sorted(elements)

    projective = GenSet.of(_PROJECTIVE_GENERATORS)
    subgroup = enumerate_elements(projective, 720)
    if len(subgroup) != 120 or len(orbit(projective, 1)) != 6:
        raise InternalException(detail="PGL(2,5) is not a transitive subgroup of order 120")

    coset_of: Dict[Perm, int] = {}
    representatives: List[Perm] = []
    for x in elements:
        if x in coset_of:
            continue
        representatives.append(x)
        for t in subgroup:
            coset_of[compose(t, x)] = len(representatives)

    def psi(s: Perm) -> Perm:
        return Perm([coset_of[compose(rep, s)] for rep in representatives])

    if psi(cycle(1, 2, degree=6)).cycle_type() != (2, 2, 2):
        raise InternalException(detail="coset action does not give an outer automorphism")

    generators = sym_generators(6)
    psi_generators = [psi(s) for s in generators]
    for h in elements:
        mu = Conjugation(h)
        if all(_twice(psi, mu, image) == s for s, image in zip(generators, psi_generators)):
            break
    else:
        raise InternalException(detail="no order-2 outer automorphism in the coset of psi")

    table = {x: conjugate(psi(x), h) for x in elements}
    for x, image in table.items():
        if table[image] != x:
            raise InternalException(detail=f"phi(phi({x})) != {x}")
    if len(set(table.values())) != 720 or table[identity(6)] != identity(6):
        raise InternalException(detail="phi is not a bijection of Sym(6)")
    logger.debug(f"outer_phi_s6 h={h} phi((1,2))={table[cycle(1, 2, degree=6)]}")
    return OuterAutomorphism(table)


def _twice(psi: Automorphism, mu: Conjugation, image: Perm) -> Perm:
    # image is psi(s) for a generator s; returns (mu psi)(mu psi)(s)
    return mu(psi(mu(image)))
