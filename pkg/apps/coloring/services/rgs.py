from typing import Iterator, Tuple

from core.exceptions import ValidationException


def restricted_growth_strings(length: int, max_classes: int, min_classes: int = 1) -> Iterator[Tuple[int, ...]]:
    """
    Every restricted-growth string of the given length with between ``min_classes``
    and ``max_classes`` distinct labels, in lexicographic order. Each set partition
    of the positions appears exactly once.
    """
    if length < 1 or max_classes < 1:
        raise ValidationException(detail=f"Need length>=1 and max_classes>=1, got {length}, {max_classes}")
    if min_classes > min(length, max_classes):
        return
    colors = [0] * length

    def extend(position: int, used: int) -> Iterator[Tuple[int, ...]]:
        if used + (length - position) < min_classes:
            return
        if position == length:
            yield tuple(colors)
            return
        for label in range(min(used + 1, max_classes)):
            colors[position] = label
            yield from extend(position + 1, max(used, label + 1))

    yield from extend(1, 1)


def rgs_count(length: int, max_classes: int, min_classes: int = 1) -> int:
    """Number of strings ``restricted_growth_strings`` yields (sum of Stirling numbers of the second kind)."""
    # table[j] holds S(m, j) for the current m
    table = [1] + [0] * max_classes
    for _ in range(length):
        table = [0] + [j * table[j] + table[j - 1] for j in range(1, max_classes + 1)]
    return sum(table[max(min_classes, 1):max_classes + 1])
