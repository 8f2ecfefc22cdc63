from collections import Counter
from functools import lru_cache
from typing import FrozenSet, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from apps.bigroups.models import BiElement
from apps.bigroups.schemas import GroupCase
from apps.bigroups.services import (
    KLEIN_FOUR,
    BiGroup,
    Coupling,
    ParityRule,
    case_structure,
    from_vertex_perm,
    to_vertex_perm,
    vertex_genset,
)
from apps.perms.models import GenSet, Perm, compose, identity, inverse
from apps.perms.services import EnumerationOverflow, enumerate_elements
from config.settings import settings
from core.exceptions import OracleUnavailableException, ValidationException
from ..models.partition import Partition, StabWitness

Allowed = List[FrozenSet[int]]


class SideSummary(NamedTuple):
    """One representative per (parity, is-identity) class of valid images for one side."""
    identity: Optional[Perm]
    even: Optional[Perm]
    odd: Optional[Perm]

    def candidates(self) -> List[Perm]:
        return [p for p in (self.identity, self.even, self.odd) if p is not None]


class BacktrackEngine:
    """
    Searches G+ and then the coset G+·r for a class-preserving element.
    Within G+ the witness is the first in lexicographic order of the images of (g, g').

    For the coset with representative r = (a, b)·tau^eps the element is
    (x·a, x'·b)·tau^eps with (x, x') in G+, so every image x(i) is confined to
    a^-1 of the points carrying the color vertex i must land on.
    """

    def witness(self, group: BiGroup, part: Partition) -> StabWitness:
        found = self.plus_witness(group, part)
        return found if found.found else self.coset_witness(group, part)

    def plus_witness(self, group: BiGroup, part: Partition) -> StabWitness:
        """Search the bipart-preserving subgroup only."""
        n = group.n
        color_v = part.colors[:n]
        color_u = part.colors[n:]
        found = self._search(group, _restrictions(color_v, color_v), _restrictions(color_u, color_u),
                             allow_identity=False)
        return StabWitness(BiElement(found[0], found[1], 0)) if found is not None else StabWitness()

    def coset_witness(self, group: BiGroup, part: Partition) -> StabWitness:
        n = group.n
        color_v = part.colors[:n]
        color_u = part.colors[n:]
        a, b = group.representative.g, group.representative.gprime
        swapped = _pull_back(_restrictions(color_v, color_u), inverse(a))
        swapped_prime = _pull_back(_restrictions(color_u, color_v), inverse(b))
        found = self._search(group, swapped, swapped_prime, allow_identity=True)
        if found is not None:
            x, xprime = found
            return StabWitness(BiElement(compose(x, a), compose(xprime, b), 1))
        return StabWitness()

    def _search(self, group: BiGroup, allowed: Allowed, allowed_prime: Allowed,
                allow_identity: bool) -> Optional[Tuple[Perm, Perm]]:
        plus = group.plus
        if plus.coupling is Coupling.PRODUCT:
            if not (_feasible(allowed) and _feasible(allowed_prime)):
                return None
            return _combine(_summarize(allowed), _summarize(allowed_prime), plus.parity, allow_identity)

        if plus.coupling is Coupling.DIAGONAL and plus.twist is None:
            both = [s & t for s, t in zip(allowed, allowed_prime)]
            if not _feasible(both):
                return None
            for x in _assignments(both):
                if _parity_ok(plus.parity, x, x) and (allow_identity or not x.is_identity()):
                    return x, x
            return None

        if not (_feasible(allowed) and _feasible(allowed_prime)):
            return None
        for x in _assignments(allowed):
            twisted = plus.twisted(x)
            options = [twisted] if plus.coupling is Coupling.DIAGONAL else \
                sorted(compose(w, twisted) for w in KLEIN_FOUR)
            for xprime in options:
                if not _fits(xprime, allowed_prime):
                    continue
                if not _parity_ok(plus.parity, x, xprime):
                    continue
                if allow_identity or not (x.is_identity() and xprime.is_identity()):
                    return x, xprime
        return None


class EnumerationEngine:
    """Brute force over every element of G; the correctness oracle for small groups."""

    def __init__(self, cap: Optional[int] = None):
        self.cap = settings.ORACLE_CAP if cap is None else cap

    def witness(self, group: BiGroup, part: Partition) -> StabWitness:
        n = group.n
        colors = part.colors
        swapping: Optional[Perm] = None
        for p in _group_elements(vertex_genset(group.generators(), n), self.cap):
            if p.is_identity():
                continue
            if all(colors[image - 1] == colors[position] for position, image in enumerate(p.images)):
                if p(1) <= n:
                    return StabWitness(from_vertex_perm(p, n))
                if swapping is None:
                    swapping = p
        return StabWitness(from_vertex_perm(swapping, n) if swapping is not None else None)


Engine = Union[BacktrackEngine, EnumerationEngine]


def preserving_witness(target: Union[GroupCase, BiGroup], part: Partition,
                       engine: Optional[Engine] = None) -> StabWitness:
    group = case_structure(target) if isinstance(target, GroupCase) else target
    if part.n != group.n:
        raise ValidationException(detail=f"Partition on n={part.n} tested against a group on n={group.n}")
    return (engine or BacktrackEngine()).witness(group, part)


def is_distinguishing(target: Union[GroupCase, BiGroup], part: Partition,
                      engine: Optional[Engine] = None) -> bool:
    return not preserving_witness(target, part, engine).found


def preserves_classes(e: BiElement, part: Partition) -> bool:
    """Direct check by the action on vertex positions."""
    p = to_vertex_perm(e)
    return all(part.colors[image - 1] == part.colors[position] for position, image in enumerate(p.images))


@lru_cache(maxsize=4)
def _group_elements(gens: GenSet, cap: int) -> Tuple[Perm, ...]:
    elements = enumerate_elements(gens, cap)
    if isinstance(elements, EnumerationOverflow):
        raise OracleUnavailableException(detail=f"Group on {gens.degree} points has more than {cap} elements")
    return tuple(elements)


def _restrictions(source: Sequence[int], target: Sequence[int]) -> Allowed:
    """For each point i, the points j with target[j] equal to source[i]."""
    by_color = {}
    for j, color in enumerate(target, start=1):
        by_color.setdefault(color, set()).add(j)
    return [frozenset(by_color.get(color, ())) for color in source]


def _pull_back(allowed: Allowed, p: Perm) -> Allowed:
    return [frozenset(p(j) for j in s) for s in allowed]


def _feasible(allowed: Allowed) -> bool:
    """Necessary conditions for a bijection i -> allowed[i]: no set is oversubscribed and all points are reachable."""
    counts = Counter(allowed)
    if any(count > len(s) for s, count in counts.items()):
        return False
    return len(frozenset().union(*allowed)) == len(allowed)


def _fits(p: Perm, allowed: Allowed) -> bool:
    return all(p(i) in s for i, s in enumerate(allowed, start=1))


def _assignments(allowed: Allowed) -> Iterator[Perm]:
    """Every bijection with x(i) in allowed[i], in lexicographic image order."""
    n = len(allowed)
    options = [sorted(s) for s in allowed]
    images = [0] * n
    used = [False] * (n + 1)

    def extend(i: int) -> Iterator[Perm]:
        if i == n:
            yield Perm._trusted(tuple(images))
            return
        for j in options[i]:
            if not used[j]:
                used[j] = True
                images[i] = j
                yield from extend(i + 1)
                used[j] = False

    yield from extend(0)


def _summarize(allowed: Allowed) -> SideSummary:
    n = len(allowed)
    one = identity(n)
    identity_ok = _fits(one, allowed)
    even = odd = None
    for x in _assignments(allowed):
        if x.is_identity():
            continue
        if x.is_even():
            even = even or x
        else:
            odd = odd or x
        if even is not None and odd is not None:
            break
    return SideSummary(one if identity_ok else None, even, odd)


def _parity_ok(rule: ParityRule, x: Perm, xprime: Perm) -> bool:
    if rule is ParityRule.EVEN:
        return x.is_even() and xprime.is_even()
    if rule is ParityRule.MATCHING:
        return x.is_even() == xprime.is_even()
    return True


def _combine(side: SideSummary, side_prime: SideSummary, rule: ParityRule,
             allow_identity: bool) -> Optional[Tuple[Perm, Perm]]:
    """The lexicographically first admissible pair; each representative is the first of its class."""
    pairs = [
        (x, xprime)
        for x in side.candidates()
        for xprime in side_prime.candidates()
        if _parity_ok(rule, x, xprime) and (allow_identity or not (x.is_identity() and xprime.is_identity()))
    ]
    return min(pairs, default=None)
