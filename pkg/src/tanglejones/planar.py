"""Non-crossing perfect matchings of 2n cyclically ordered boundary points.

Boundary points are labeled 1..2n counterclockwise starting at the marked
point.  A matching pairs the points with disjoint arcs in the disk, which is
possible exactly when no two arcs interleave in the cyclic order.  Every arc
of a non-crossing perfect matching joins an odd point to an even point, so a
matching is determined by the tuple listing, for k = 1..n, the even point
paired with point 2k-1.  That tuple is the matching's encoding and doubles
as its text form ("4,2" for the nested pair of arcs 1-4, 3-2).

>>> Matching.decode((4, 2)).arcs()
((1, 4), (3, 2))
>>> len(enumerate_matchings(3))
5
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Matching",
    "enumerate_matchings",
    "rotate_matching",
    "rotate_point",
]


@dataclass(frozen=True)
class Matching:
    """A non-crossing perfect matching of the points 1..2n.

    ``pairs[p - 1]`` is the partner of point ``p``.  Construction validates
    that the pairing is a fixed-point-free involution, joins odd points to
    even points, and has no interleaved arcs.
    """

    n: int
    pairs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        total = 2 * self.n
        if len(self.pairs) != total:
            raise ValueError(f"expected {total} partner entries, got {len(self.pairs)}")
        for p in range(1, total + 1):
            mate = self.pairs[p - 1]
            if not 1 <= mate <= total:
                raise ValueError(f"point {p} pairs with {mate}, outside 1..{total}")
            if mate == p:
                raise ValueError(f"point {p} pairs with itself")
            if self.pairs[mate - 1] != p:
                raise ValueError(f"pairing is not an involution at point {p}")
            if (p + mate) % 2 == 0:
                raise ValueError(f"arc {p}-{mate} joins two points of the same parity")
        # Arcs nest or are disjoint exactly when a left-to-right sweep can
        # close each arc against the most recently opened one.
        stack: list[int] = []
        for p in range(1, total + 1):
            mate = self.pairs[p - 1]
            if mate > p:
                stack.append(p)
            else:
                if not stack or stack[-1] != mate:
                    raise ValueError(f"arcs interleave at point {p}")
                stack.pop()

    def partner(self, p: int) -> int:
        """The point paired with p."""
        if not 1 <= p <= 2 * self.n:
            raise ValueError(f"point {p} outside 1..{2 * self.n}")
        return self.pairs[p - 1]

    def arcs(self) -> tuple[tuple[int, int], ...]:
        """The arcs as (odd point, even partner) pairs, by increasing odd point."""
        return tuple((p, self.pairs[p - 1]) for p in range(1, 2 * self.n, 2))

    def encode(self) -> tuple[int, ...]:
        """The even partners of points 1, 3, ..., 2n-1 in order.

        >>> Matching.decode((2, 4)).encode()
        (2, 4)
        """
        return tuple(self.pairs[p - 1] for p in range(1, 2 * self.n, 2))

    @classmethod
    def decode(cls, code: Sequence[int]) -> Matching:
        """The matching whose arc from point 2k-1 ends at code[k-1].

        Rejects tuples that are not permutations of the even numbers and
        encodings whose arcs would cross.
        """
        code = tuple(code)
        n = len(code)
        if sorted(code) != list(range(2, 2 * n + 1, 2)):
            raise ValueError(f"encoding {code} is not a permutation of the even numbers 2..{2 * n}")
        pairs = [0] * (2 * n)
        for k, even in enumerate(code):
            odd = 2 * k + 1
            pairs[odd - 1] = even
            pairs[even - 1] = odd
        return cls(n, tuple(pairs))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Matching:
        """The matching with the given arcs; validates on construction."""
        pairs = [0] * (2 * n)
        for a, b in arcs:
            if not (1 <= a <= 2 * n and 1 <= b <= 2 * n):
                raise ValueError(f"arc {a}-{b} leaves 1..{2 * n}")
            if pairs[a - 1] or pairs[b - 1]:
                raise ValueError(f"arc {a}-{b} reuses a matched point")
            pairs[a - 1] = b
            pairs[b - 1] = a
        return cls(n, tuple(pairs))

    @classmethod
    def empty(cls) -> Matching:
        return cls(0, ())

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.encode())


def _arc_sets(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    # The first point must pair within its segment at odd distance; the arc
    # then splits the rest into independent inner and outer segments.
    if not points:
        yield ()
        return
    first = points[0]
    for j in range(1, len(points), 2):
        for inner in _arc_sets(points[1:j]):
            for outer in _arc_sets(points[j + 1 :]):
                yield ((first, points[j]),) + inner + outer


@lru_cache(maxsize=None)
def _matchings(n: int) -> tuple[Matching, ...]:
    all_points = tuple(range(1, 2 * n + 1))
    ms = [Matching.from_arcs(n, arcs) for arcs in _arc_sets(all_points)]
    return tuple(sorted(ms, key=Matching.encode))


def enumerate_matchings(n: int) -> list[Matching]:
    """All non-crossing perfect matchings of 1..2n, sorted by encoding.

    The count is the n-th Catalan number.

    >>> [str(m) for m in enumerate_matchings(2)]
    ['2,4', '4,2']
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_matchings(n))


def rotate_point(p: int, steps: int, n: int) -> int:
    """Relabel point p after moving the marked point by the given steps.

    One step moves the marked point one boundary segment counterclockwise,
    which decrements every label by one: the old point 2 becomes the new
    point 1.
    """
    return (p - steps - 1) % (2 * n) + 1


def rotate_matching(m: Matching, steps: int) -> Matching:
    """The same arcs after relabeling every point with :func:`rotate_point`.

    Rotation preserves the cyclic order, so the result is non-crossing.

    >>> str(rotate_matching(Matching.decode((4, 2)), 1))
    '2,4'
    """
    if m.n == 0:
        return m
    arcs = (
        (rotate_point(a, steps, m.n), rotate_point(b, steps, m.n)) for a, b in m.arcs()
    )
    return Matching.from_arcs(m.n, arcs)
