from typing import Callable, FrozenSet

from apps.bigroups.models import Vertex, u, v
from ..models.blocks import BlockParams

BlockRule = Callable[[int, int, int], FrozenSet[Vertex]]


def v_block(n: int, i: int, q: int) -> FrozenSet[Vertex]:
    """Up to q consecutive points of the first bipart."""
    return frozenset(v(j) for j in BlockParams.of(n, i, q).interval())


def u_block(n: int, i: int, q: int) -> FrozenSet[Vertex]:
    """The points of the second bipart at distance q apart, starting from the residue of i."""
    return frozenset(u(j) for j in BlockParams.of(n, i, q).residues())


def partition_lemma_check(n: int, q: int, v_rule: BlockRule = v_block, u_rule: BlockRule = u_block) -> bool:
    """
    True when the q residue blocks partition u1..un and the ceil(n/q) interval
    blocks partition v1..vn, every listed block being nonempty.
    """
    if not 1 <= q <= n:
        return False
    d = -(-n // q)
    return _partitions([u_rule(n, i, q) for i in range(1, q + 1)], frozenset(u(j) for j in range(1, n + 1))) and \
        _partitions([v_rule(n, i, q) for i in range(1, d + 1)], frozenset(v(j) for j in range(1, n + 1)))


def _partitions(blocks, ground: FrozenSet[Vertex]) -> bool:
    if any(not block for block in blocks):
        return False
    if sum(len(block) for block in blocks) != len(ground):
        return False
    return frozenset().union(*blocks) == ground
