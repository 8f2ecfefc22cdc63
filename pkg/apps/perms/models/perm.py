from __future__ import annotations

import re
from enum import Enum
from typing import Iterable, List, NamedTuple, Optional, Tuple

from core.exceptions import DegreeMismatchException, ValidationException

_CYCLE_RE = re.compile(r"\(([0-9,]*)\)")


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"

    def __xor__(self, other: "Parity") -> "Parity":
        return Parity.EVEN if self is other else Parity.ODD


class Perm:
    """
    A bijection of the points 1..m.

    Composition is a right action: ``a * b`` applies ``a`` first, then ``b``,
    so ``(a * b)(j) == b(a(j))``.
    """

    __slots__ = ("_images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValidationException(detail=f"Not a permutation of 1..{len(images)}: {list(images)}")
        self._images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: Tuple[int, ...]) -> "Perm":
        perm = object.__new__(cls)
        perm._images = images
        perm._hash = hash(images)
        return perm

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> Tuple[int, ...]:
        return self._images

    def __call__(self, point: int) -> int:
        return self._images[point - 1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self._images == other._images

    def __lt__(self, other: "Perm") -> bool:
        return self._images < other._images

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __repr__(self) -> str:
        return f"Perm('{self}', degree={self.degree})"

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(p) for p in c) + ")" for c in cycles)

    def is_identity(self) -> bool:
        return all(image == point for point, image in enumerate(self._images, start=1))

    def inverse(self) -> "Perm":
        return inverse(self)

    def parity(self) -> Parity:
        return parity(self)

    def is_even(self) -> bool:
        return parity(self) is Parity.EVEN

    def cycles(self, include_fixed: bool = False) -> List[Tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point, ordered by that point."""
        seen = set()
        result = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self._images[start - 1]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self._images[point - 1]
            if len(cycle) > 1 or include_fixed:
                result.append(tuple(cycle))
        return result

    def cycle_type(self) -> Tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def support(self) -> frozenset:
        return frozenset(p for p, image in enumerate(self._images, start=1) if image != p)


class GenSet(NamedTuple):
    """A finite presentation of a permutation group by its generators."""
    degree: int
    generators: Tuple[Perm, ...]

    @classmethod
    def of(cls, generators: Iterable[Perm], degree: Optional[int] = None) -> "GenSet":
        generators = tuple(generators)
        if not generators:
            if degree is None:
                raise ValidationException(detail="A generating set needs at least one generator")
            generators = (identity(degree),)
        degree = generators[0].degree if degree is None else degree
        for gen in generators:
            if gen.degree != degree:
                raise DegreeMismatchException(
                    detail=f"Generator {gen} has degree {gen.degree}, expected {degree}"
                )
        return cls(degree=degree, generators=generators)


def identity(degree: int) -> Perm:
    if degree < 1:
        raise ValidationException(detail=f"Degree must be positive, got {degree}")
    return Perm._trusted(tuple(range(1, degree + 1)))


def cycle(*points: int, degree: Optional[int] = None) -> Perm:
    """The cycle ``points[0] -> points[1] -> ... -> points[0]``."""
    degree = max(points, default=1) if degree is None else degree
    if len(set(points)) != len(points) or any(p < 1 or p > degree for p in points):
        raise ValidationException(detail=f"Invalid cycle {points} on {degree} points")
    images = list(range(1, degree + 1))
    for current, following in zip(points, points[1:] + points[:1]):
        images[current - 1] = following
    return Perm._trusted(tuple(images))


def from_cycles(cycles: Iterable[Iterable[int]], degree: int) -> Perm:
    result = identity(degree)
    for c in cycles:
        result = compose(result, cycle(*tuple(c), degree=degree))
    return result


def parse_perm(text: str, degree: int) -> Perm:
    """Parse whitespace-free cycle notation such as ``(1,2)(3,4,5)``; ``()`` is the identity."""
    text = text.strip()
    if text in ("", "()"):
        return identity(degree)
    cycles = _CYCLE_RE.findall(text)
    if "".join(f"({c})" for c in cycles) != text:
        raise ValidationException(detail=f"Malformed cycle notation: {text!r}")
    try:
        parsed = [tuple(int(p) for p in c.split(",")) for c in cycles if c]
    except ValueError:
        raise ValidationException(detail=f"Malformed cycle notation: {text!r}")
    seen: set = set()
    for c in parsed:
        if seen & set(c):
            raise ValidationException(detail=f"Cycles are not disjoint: {text!r}")
        seen |= set(c)
    return from_cycles(parsed, degree)


def compose(a: Perm, b: Perm) -> Perm:
    if a.degree != b.degree:
        raise DegreeMismatchException(detail=f"Cannot compose degree {a.degree} with degree {b.degree}")
    b_images = b.images
    return Perm._trusted(tuple([b_images[k - 1] for k in a.images]))


def inverse(a: Perm) -> Perm:
    images = [0] * a.degree
    for point, image in enumerate(a.images, start=1):
        images[image - 1] = point
    return Perm._trusted(tuple(images))


def parity(a: Perm) -> Parity:
    cycle_count = len(a.cycles(include_fixed=True))
    return Parity.EVEN if (a.degree - cycle_count) % 2 == 0 else Parity.ODD


def conjugate(x: Perm, by: Perm) -> Perm:
    """``x`` conjugated by ``by`` in exponent notation: ``by^-1 * x * by``."""
    return compose(compose(inverse(by), x), by)
