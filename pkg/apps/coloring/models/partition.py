from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from apps.bigroups.models import BiElement, Vertex
from core.exceptions import ValidationException
from ..schemas.partition import PartitionSchema


class Partition(NamedTuple):
    """
    A coloring of the 2n vertices v1..vn, u1..un in restricted-growth form:
    colors are 0-based and color c+1 first appears after color c.
    """
    n: int
    colors: Tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return 1 + max(self.colors)

    def color_of(self, vertex: Vertex) -> int:
        return self.colors[vertex.position(self.n) - 1]

    def classes(self) -> List[List[Vertex]]:
        result: List[List[Vertex]] = [[] for _ in range(self.num_colors)]
        for position, color in enumerate(self.colors, start=1):
            result[color].append(Vertex.at(position, self.n))
        return result

    def class_sizes(self) -> List[int]:
        sizes = [0] * self.num_colors
        for color in self.colors:
            sizes[color] += 1
        return sizes

    def rgs(self) -> str:
        return ",".join(str(c) for c in self.colors)

    def to_schema(self) -> PartitionSchema:
        return PartitionSchema(n=self.n, classes=[[str(x) for x in cls] for cls in self.classes()])

    def __str__(self) -> str:
        return " | ".join("{" + ", ".join(str(x) for x in cls) + "}" for cls in self.classes())

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[Vertex]], n: int) -> "Partition":
        raw: List[Optional[int]] = [None] * (2 * n)
        for label, members in enumerate(classes):
            members = list(members)
            if not members:
                raise ValidationException(detail=f"Class {label + 1} is empty")
            for vertex in members:
                if not 1 <= vertex.index <= n:
                    raise ValidationException(detail=f"Vertex {vertex} outside 1..{n}")
                position = vertex.position(n) - 1
                if raw[position] is not None:
                    raise ValidationException(detail=f"Vertex {vertex} appears in two classes")
                raw[position] = label
        missing = [str(Vertex.at(p + 1, n)) for p, label in enumerate(raw) if label is None]
        if missing:
            raise ValidationException(detail=f"Vertices not covered: {', '.join(missing)}")
        return canonicalize(raw, n)

    @classmethod
    def from_schema(cls, schema: PartitionSchema) -> "Partition":
        return cls.from_classes(
            [[Vertex.parse(text) for text in members] for members in schema.classes], schema.n
        )

    @classmethod
    def parse_rgs(cls, text: str, n: int) -> "Partition":
        try:
            raw = [int(x) for x in text.split(",")]
        except ValueError:
            raise ValidationException(detail=f"Malformed coloring string {text!r}")
        partition = canonicalize(raw, n)
        if list(partition.colors) != raw:
            raise ValidationException(detail=f"{text!r} is not in restricted-growth form")
        return partition


def canonicalize(raw: Sequence[int], n: Optional[int] = None) -> Partition:
    """Relabel classes by first occurrence; the induced set partition is unchanged."""
    if n is None:
        if len(raw) % 2:
            raise ValidationException(detail=f"A coloring of 2n vertices needs even length, got {len(raw)}")
        n = len(raw) // 2
    if len(raw) != 2 * n or n < 1:
        raise ValidationException(detail=f"Expected {2 * n} colors for n={n}, got {len(raw)}")
    relabel: Dict[int, int] = {}
    colors = tuple(relabel.setdefault(label, len(relabel)) for label in raw)
    return Partition(n=n, colors=colors)


def trivial_partition(n: int) -> Partition:
    return Partition(n=n, colors=(0,) * (2 * n))


def discrete_partition(n: int) -> Partition:
    return Partition(n=n, colors=tuple(range(2 * n)))


class StabWitness(NamedTuple):
    """A non-identity element preserving every class, or None when the coloring distinguishes."""
    element: Optional[BiElement] = None

    @property
    def found(self) -> bool:
        return self.element is not None
