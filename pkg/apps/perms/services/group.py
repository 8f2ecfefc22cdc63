from collections import deque
from functools import lru_cache
from typing import FrozenSet, List, NamedTuple, Optional, Union

from sympy.combinatorics import Permutation, PermutationGroup

from config.logging import logger
from config.settings import settings
from core.exceptions import DegreeMismatchException, ValidationException
from ..models.perm import GenSet, Perm, compose, cycle, identity


class EnumerationOverflow(NamedTuple):
    """Returned instead of an element list when the group is larger than the cap."""
    cap: int


def orbit(gens: GenSet, point: int) -> FrozenSet[int]:
    """Breadth-first closure of ``point`` under the generators."""
    if not 1 <= point <= gens.degree:
        raise ValidationException(detail=f"Point {point} outside 1..{gens.degree}")
    seen = {point}
    queue = deque([point])
    while queue:
        current = queue.popleft()
        for gen in gens.generators:
            image = gen(current)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return frozenset(seen)


def enumerate_elements(gens: GenSet, cap: int) -> Union[List[Perm], EnumerationOverflow]:
    """
    All elements of the generated group, each exactly once, in breadth-first order
    from the identity. Stops with ``EnumerationOverflow`` as soon as more than
    ``cap`` elements would be needed.
    """
    if cap < 1:
        raise ValidationException(detail=f"Enumeration cap must be positive, got {cap}")
    start = identity(gens.degree)
    seen = {start}
    elements = [start]
    index = 0
    while index < len(elements):
        current = elements[index]
        index += 1
        for gen in gens.generators:
            product = compose(current, gen)
            if product not in seen:
                if len(elements) >= cap:
                    return EnumerationOverflow(cap=cap)
                seen.add(product)
                elements.append(product)
    return elements


@lru_cache(maxsize=256)
def stabilizer_chain(gens: GenSet) -> PermutationGroup:
    """A Schreier-Sims base and strong generating set, held by a sympy group."""
    group = PermutationGroup([_to_sympy(g) for g in gens.generators])
    group.schreier_sims()
    return group


def group_order(gens: GenSet, cap: Optional[int] = None) -> int:
    cap = settings.ENUMERATION_CAP if cap is None else cap
    elements = enumerate_elements(gens, cap)
    if not isinstance(elements, EnumerationOverflow):
        return len(elements)
    logger.debug(f"group_order degree={gens.degree} cap={cap} fallback=stabilizer_chain")
    return int(stabilizer_chain(gens).order())


def contains(gens: GenSet, x: Perm) -> bool:
    if x.degree != gens.degree:
        raise DegreeMismatchException(detail=f"Element of degree {x.degree} tested against degree {gens.degree}")
    elements = _small_group_elements(gens)
    if elements is not None:
        return x in elements
    return bool(stabilizer_chain(gens).contains(_to_sympy(x)))


@lru_cache(maxsize=256)
def _small_group_elements(gens: GenSet) -> Optional[FrozenSet[Perm]]:
    elements = enumerate_elements(gens, settings.CONTAINS_ENUM_CAP)
    if isinstance(elements, EnumerationOverflow):
        return None
    return frozenset(elements)


def _to_sympy(x: Perm) -> Permutation:
    return Permutation([image - 1 for image in x.images])


# ==================== Standard generating sets ====================

def sym_generators(n: int) -> List[Perm]:
    """Sym(n) = <(1,2), (1,2,...,n)>."""
    if n == 1:
        return [identity(1)]
    if n == 2:
        return [cycle(1, 2)]
    return [cycle(1, 2, degree=n), cycle(*range(1, n + 1))]


def alt_generators(n: int) -> List[Perm]:
    """Alt(n) = <(1,2,3), (1,2,...,n) for odd n or (2,3,...,n) for even n>."""
    if n < 3:
        return [identity(n)]
    if n == 3:
        return [cycle(1, 2, 3)]
    long_cycle = cycle(*range(1, n + 1)) if n % 2 == 1 else cycle(*range(2, n + 1))
    return [cycle(1, 2, 3, degree=n), long_cycle]


def symmetric_group(n: int) -> GenSet:
    return GenSet.of(sym_generators(n))


def alternating_group(n: int) -> GenSet:
    return GenSet.of(alt_generators(n), degree=n)
