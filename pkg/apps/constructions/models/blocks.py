from typing import NamedTuple

from core.exceptions import ValidationException


class BlockParams(NamedTuple):
    """Block i of width q over the points 1..n."""
    n: int
    i: int
    q: int

    @classmethod
    def of(cls, n: int, i: int, q: int) -> "BlockParams":
        if min(n, i, q) < 1:
            raise ValidationException(detail=f"Block parameters must be positive, got n={n}, i={i}, q={q}")
        return cls(n, i, q)

    def interval(self) -> range:
        """Points j with (i-1)q < j <= min(iq, n)."""
        return range((self.i - 1) * self.q + 1, min(self.i * self.q, self.n) + 1)

    def residues(self) -> range:
        """Points j <= n with j congruent to i mod q."""
        first = self.i % self.q or self.q
        return range(first, self.n + 1, self.q)
