from typing import Iterable, List

from apps.perms.models import GenSet, Perm, compose, inverse
from core.exceptions import DegreeMismatchException, ValidationException
from ..models.element import BiElement, Side, Vertex


def act(e: BiElement, vertex: Vertex) -> Vertex:
    """Image of ``vertex`` under (g, g')·tau^eps: apply (g, g') first, then tau."""
    n = e.n
    if not 1 <= vertex.index <= n:
        raise ValidationException(detail=f"Vertex {vertex} outside 1..{n}")
    if vertex.side is Side.DELTA:
        image = e.g(vertex.index)
        return Vertex(Side.DELTA_PRIME if e.eps else Side.DELTA, image)
    image = e.gprime(vertex.index)
    return Vertex(Side.DELTA if e.eps else Side.DELTA_PRIME, image)


def bi_multiply(e1: BiElement, e2: BiElement) -> BiElement:
    if e1.n != e2.n:
        raise DegreeMismatchException(detail=f"Cannot multiply elements on n={e1.n} and n={e2.n}")
    if e1.eps:
        s2, s2prime = e2.gprime, e2.g
    else:
        s2, s2prime = e2.g, e2.gprime
    return BiElement(compose(e1.g, s2), compose(e1.gprime, s2prime), e1.eps ^ e2.eps)


def bi_inverse(e: BiElement) -> BiElement:
    if e.eps:
        return BiElement(inverse(e.gprime), inverse(e.g), 1)
    return BiElement(inverse(e.g), inverse(e.gprime), 0)


def bi_product(elements: Iterable[BiElement]) -> BiElement:
    elements = list(elements)
    if not elements:
        raise ValidationException(detail="Empty product")
    result = elements[0]
    for e in elements[1:]:
        result = bi_multiply(result, e)
    return result


def bi_conjugate(e: BiElement, by: BiElement) -> BiElement:
    """``by^-1 · e · by``."""
    return bi_product([bi_inverse(by), e, by])


def to_vertex_perm(e: BiElement) -> Perm:
    """The action of ``e`` on the 2n positions v1..vn, u1..un."""
    n = e.n
    shift_v = n if e.eps else 0
    shift_u = 0 if e.eps else n
    images = [e.g(i) + shift_v for i in range(1, n + 1)]
    images += [e.gprime(i) + shift_u for i in range(1, n + 1)]
    return Perm._trusted(tuple(images))


def from_vertex_perm(p: Perm, n: int) -> BiElement:
    """Inverse of ``to_vertex_perm``; rejects permutations that split a bipart."""
    if p.degree != 2 * n:
        raise DegreeMismatchException(detail=f"Expected degree {2 * n}, got {p.degree}")
    images = p.images
    swaps = images[0] > n
    v_images = [x - n if swaps else x for x in images[:n]]
    u_images = [x if swaps else x - n for x in images[n:]]
    if any(not 1 <= x <= n for x in v_images + u_images):
        raise ValidationException(detail=f"{p} does not preserve the bipartition")
    return BiElement(Perm._trusted(tuple(v_images)), Perm._trusted(tuple(u_images)), int(swaps))


def vertex_genset(elements: List[BiElement], n: int) -> GenSet:
    return GenSet.of([to_vertex_perm(e) for e in elements], degree=2 * n)
