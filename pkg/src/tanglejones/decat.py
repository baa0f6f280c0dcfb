"""State sums over the resolution cube.

Every resolution of a tangle, glued along a matching on the far side of the
equator and decorated on all of its circles, contributes one signed monomial
to the coefficient of one decorated cleaved link.  Summing those monomials
gives a vector over the cleaved-link basis: for an inside tangle this is the
invariant class, for an outside tangle the coefficient table of a functional
on the same basis.  Pairing the two recovers the unnormalized Jones
polynomial of the glued link, and a closed diagram (n = 0) collapses to a
single coefficient, the Jones polynomial itself.

Gradings of a decorated resolution with resolution bits rho:

    h = (number of 1-smoothings) - (negative crossings)
    i = h + (sum of free-circle signs)
          + (sum of cut-circle signs) / 2
          + (positive crossings - negative crossings)

and the contribution is (-1)^h * q^i on the boundary generator obtained by
deleting the free circles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Mapping

from .cleaved import CleavedGen, circles_of
from .diagram import (
    DiagramError,
    ResolvedState,
    TangleDiagram,
    crossing_counts,
    ensure_valid,
    resolve,
)
from .halfpoly import ZERO, HalfLaurent
from .planar import Matching, enumerate_matchings

__all__ = [
    "Generator",
    "DecatVector",
    "boundary",
    "generators",
    "decat_vector",
    "decat_vector_factored",
    "pair",
    "jones",
    "bracket",
]

# The weight of one free circle summed over its two decorations.
_FREE_WEIGHT = HalfLaurent({2: 1, -2: 1})

_EMPTY_GEN = CleavedGen(Matching.empty(), Matching.empty(), ())


@dataclass(frozen=True)
class Generator:
    """One decorated resolution glued along a far-side matching.

    ``far_matching`` is the outside matching for an inside tangle and the
    inside matching for an outside tangle.  ``h`` and ``i`` are the
    homological and quantum gradings of the contribution.
    """

    rho: tuple[int, ...]
    far_matching: Matching
    free_decs: tuple[int, ...]
    cut_decs: tuple[int, ...]
    h: int
    i: Fraction


def boundary(
    resolved: ResolvedState,
    far: Matching,
    cut_decs: tuple[int, ...],
    side: str = "inside",
) -> CleavedGen:
    """The boundary cleaved link of a decorated resolution.

    Free circles are deleted; the circles cut by the equator keep their
    decorations.  The resolution's induced matching fills the slot named by
    ``side`` and the far matching fills the other.
    """
    if side == "inside":
        return CleavedGen(resolved.lam, far, tuple(cut_decs))
    if side == "outside":
        return CleavedGen(far, resolved.lam, tuple(cut_decs))
    raise ValueError(f"side must be 'inside' or 'outside', got {side!r}")


def generators(t: TangleDiagram) -> Iterator[Generator]:
    """Every decorated, glued resolution of the diagram, one at a time.

    The iteration order is deterministic: resolution bits lexicographically
    with 0 before 1, then far matchings by encoding, then free and cut
    decorations with + before -.
    """
    ensure_valid(t)
    n = t.endpoints // 2
    n_plus, n_minus = crossing_counts(t)
    shift = n_plus - n_minus
    far_matchings = enumerate_matchings(n)
    for rho in product((0, 1), repeat=len(t.crossings)):
        state = resolve(t, rho)
        h = sum(rho) - n_minus
        for far in far_matchings:
            if t.side == "inside":
                ins, outs = state.lam, far
            else:
                ins, outs = far, state.lam
            k = len(circles_of(ins, outs))
            for free_decs in product((1, -1), repeat=len(state.free_circles)):
                for cut_decs in product((1, -1), repeat=k):
                    i = Fraction(
                        2 * (h + shift + sum(free_decs)) + sum(cut_decs), 2
                    )
                    yield Generator(rho, far, free_decs, cut_decs, h, i)


class DecatVector:
    """A sparse vector over the decorated cleaved links on 2n points.

    Generators with zero coefficient are never stored.  For vectors arising
    from tangles, every exponent of the coefficient of a generator g is
    congruent to (sum of g's decorations) / 2 modulo 1.
    """

    __slots__ = ("n", "_coeffs")

    def __init__(self, n: int, coeffs: Mapping[CleavedGen, HalfLaurent]):
        self.n = n
        clean: dict[CleavedGen, HalfLaurent] = {}
        for g, poly in coeffs.items():
            if g.n != n:
                raise ValueError(f"generator {g.key()} does not live on {2 * n} points")
            if poly:
                clean[g] = poly
        self._coeffs = clean

    def get(self, g: CleavedGen) -> HalfLaurent:
        return self._coeffs.get(g, ZERO)

    def support(self) -> tuple[CleavedGen, ...]:
        """The generators with nonzero coefficient, sorted by key."""
        return tuple(sorted(self._coeffs, key=CleavedGen.key))

    def items(self) -> list[tuple[CleavedGen, HalfLaurent]]:
        return [(g, self._coeffs[g]) for g in self.support()]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DecatVector):
            return NotImplemented
        return self.n == other.n and self._coeffs == other._coeffs

    def render_text(self) -> str:
        """One "<key> : <polynomial>" line per generator, sorted by key."""
        return "\n".join(f"{g.key()} : {poly.render()}" for g, poly in self.items())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "generators": [
                {"key": g.key(), "terms": [list(term) for term in poly.sorted_terms()]}
                for g, poly in self.items()
            ],
        }

    def __repr__(self) -> str:
        return f"<DecatVector n={self.n}, {len(self._coeffs)} generators>"


def _accumulated(acc: dict[CleavedGen, dict[int, int]], n: int) -> DecatVector:
    return DecatVector(n, {g: HalfLaurent(terms) for g, terms in acc.items()})


def decat_vector(t: TangleDiagram) -> DecatVector:
    """The invariant vector of a tangle by full decoration enumeration.

    Sums (-1)^h * q^i over every resolution, every far-side matching and
    every decoration of the free and cut circles, into the coefficient of
    the boundary cleaved link.
    """
    ensure_valid(t)
    n = t.endpoints // 2
    n_plus, n_minus = crossing_counts(t)
    shift = n_plus - n_minus
    far_matchings = enumerate_matchings(n)
    acc: dict[CleavedGen, dict[int, int]] = {}
    for rho in product((0, 1), repeat=len(t.crossings)):
        state = resolve(t, rho)
        h = sum(rho) - n_minus
        sign = -1 if h % 2 else 1
        free_count = len(state.free_circles)
        base2 = 2 * (h + shift)
        for far in far_matchings:
            if t.side == "inside":
                ins, outs = state.lam, far
            else:
                ins, outs = far, state.lam
            k = len(circles_of(ins, outs))
            for cut_decs in product((1, -1), repeat=k):
                g = CleavedGen(ins, outs, cut_decs)
                terms = acc.setdefault(g, {})
                cut2 = base2 + sum(cut_decs)
                for free_decs in product((1, -1), repeat=free_count):
                    e2 = cut2 + 2 * sum(free_decs)
                    terms[e2] = terms.get(e2, 0) + sign
    return _accumulated(acc, n)


def decat_vector_factored(t: TangleDiagram) -> DecatVector:
    """The invariant vector with free circles factored out.

    Summing a free circle over its two decorations multiplies the
    contribution by q + q^(-1), so each (resolution, matching, cut
    decoration) triple contributes one monomial times that weight raised to
    the number of free circles.  This is an independent evaluation path
    used to cross-check :func:`decat_vector`.
    """
    ensure_valid(t)
    n = t.endpoints // 2
    n_plus, n_minus = crossing_counts(t)
    shift = n_plus - n_minus
    far_matchings = enumerate_matchings(n)
    coeffs: dict[CleavedGen, HalfLaurent] = {}
    for rho in product((0, 1), repeat=len(t.crossings)):
        state = resolve(t, rho)
        h = sum(rho) - n_minus
        weight = _FREE_WEIGHT ** len(state.free_circles)
        base2 = 2 * (h + shift)
        sign = -1 if h % 2 else 1
        for far in far_matchings:
            if t.side == "inside":
                ins, outs = state.lam, far
            else:
                ins, outs = far, state.lam
            k = len(circles_of(ins, outs))
            for cut_decs in product((1, -1), repeat=k):
                g = CleavedGen(ins, outs, cut_decs)
                mono = HalfLaurent({base2 + sum(cut_decs): sign})
                coeffs[g] = coeffs.get(g, ZERO) + mono * weight
    return DecatVector(n, coeffs)


def pair(a: DecatVector, d: DecatVector) -> HalfLaurent:
    """The coefficient-wise dot product of two vectors over the same basis.

    For the class of an inside tangle paired against the functional of the
    complementary outside tangle, this is the unnormalized Jones polynomial
    of the glued link.
    """
    if a.n != d.n:
        raise ValueError(f"cannot pair vectors on {2 * a.n} and {2 * d.n} points")
    total = ZERO
    for g, poly in a.items():
        other = d.get(g)
        if other:
            total = total + poly * other
    return total


def jones(t: TangleDiagram) -> HalfLaurent:
    """The unnormalized Jones polynomial of a closed diagram.

    This is the coefficient of the unique empty generator in the diagram's
    invariant vector.
    """
    if t.endpoints != 0:
        raise DiagramError(f"jones needs a closed diagram, got {t.endpoints} endpoints")
    return decat_vector(t).get(_EMPTY_GEN)


def bracket(t: TangleDiagram) -> HalfLaurent:
    """The unnormalized state sum of a closed diagram, ignoring signs.

    Each resolution contributes (-q)^(number of 1-smoothings) times
    (q + q^(-1)) raised to the number of its circles.  The Jones polynomial
    is (-1)^(n-) * q^(n+ - 2n-) times this bracket.
    """
    if t.endpoints != 0:
        raise DiagramError(f"bracket needs a closed diagram, got {t.endpoints} endpoints")
    ensure_valid(t)
    total = ZERO
    for rho in product((0, 1), repeat=len(t.crossings)):
        state = resolve(t, rho)
        ones = sum(rho)
        sign = -1 if ones % 2 else 1
        total = total + HalfLaurent({2 * ones: sign}) * _FREE_WEIGHT ** len(state.free_circles)
    return total
