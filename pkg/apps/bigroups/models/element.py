from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from apps.perms.models import Perm, identity, parse_perm
from core.exceptions import ValidationException


class Side(str, Enum):
    DELTA = "v"
    DELTA_PRIME = "u"


class Vertex(NamedTuple):
    side: Side
    index: int

    def __str__(self) -> str:
        return f"{self.side.value}{self.index}"

    def position(self, n: int) -> int:
        """1-based position in the vertex order v1..vn, u1..un."""
        return self.index if self.side is Side.DELTA else n + self.index

    @classmethod
    def at(cls, position: int, n: int) -> "Vertex":
        if position <= n:
            return cls(Side.DELTA, position)
        return cls(Side.DELTA_PRIME, position - n)

    @classmethod
    def parse(cls, text: str) -> "Vertex":
        text = text.strip()
        if len(text) < 2 or text[0] not in "vu" or not text[1:].isdigit() or int(text[1:]) < 1:
            raise ValidationException(detail=f"Malformed vertex {text!r}; expected e.g. 'v3' or 'u17'")
        return cls(Side(text[0]), int(text[1:]))


def v(index: int) -> Vertex:
    return Vertex(Side.DELTA, index)


def u(index: int) -> Vertex:
    return Vertex(Side.DELTA_PRIME, index)


class BiElement(NamedTuple):
    """The automorphism (g, g')·tau^eps of the bipartite vertex set."""
    g: Perm
    gprime: Perm
    eps: int = 0

    @property
    def n(self) -> int:
        return self.g.degree

    def is_identity(self) -> bool:
        return self.eps == 0 and self.g.is_identity() and self.gprime.is_identity()

    def __str__(self) -> str:
        flag = ";t" if self.eps else ""
        return f"({self.g},{self.gprime}{flag})"

    @classmethod
    def parse(cls, text: str, n: int) -> "BiElement":
        """Inverse of ``str``: ``((1,2),(3,4);t)`` or ``((),(1,2))``."""
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise ValidationException(detail=f"Malformed element {text!r}")
        body = text[1:-1]
        eps = 0
        if body.endswith(";t"):
            body, eps = body[:-2], 1
        depth = 0
        for position, char in enumerate(body):
            if char == "(":
                depth += 1
            elif char == ")":
                depth -= 1
            elif char == "," and depth == 0:
                return cls(parse_perm(body[:position], n), parse_perm(body[position + 1:], n), eps)
        raise ValidationException(detail=f"Malformed element {text!r}; expected '(g,g')' with optional ';t'")


def bi_identity(n: int) -> BiElement:
    return BiElement(identity(n), identity(n), 0)


def tau(n: int) -> BiElement:
    return BiElement(identity(n), identity(n), 1)
