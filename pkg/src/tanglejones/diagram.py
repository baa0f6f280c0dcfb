"""Tangle diagrams as signed planar-diagram codes, and their resolutions.

A diagram lives in a marked disk with 2n boundary points and records each
crossing as four edge labels (a, b, c, d) read counterclockwise from the
incoming under-strand, together with an explicit sign.  Crossingless closed
components cannot be expressed by crossing slots, so a separate loop count
carries them.  The boundary map sends each point label to the edge ending
there; every edge label must occur exactly twice across crossing slots and
boundary entries.

Resolving a diagram replaces each crossing by one of its two planar
smoothings: the 0-smoothing joins the slot pairs (a, b) and (c, d), the
1-smoothing joins (a, d) and (b, c).  The resulting components split into
free circles, which miss the boundary, and boundary-to-boundary strands,
which induce a non-crossing matching of the 2n points.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .planar import Matching

__all__ = [
    "DiagramError",
    "Crossing",
    "TangleDiagram",
    "ResolvedState",
    "validate",
    "ensure_valid",
    "resolve",
    "crossing_counts",
    "serialize",
]


class DiagramError(ValueError):
    """A diagram violates a structural invariant."""


@dataclass(frozen=True)
class Crossing:
    """One signed crossing; slots run counterclockwise from the incoming
    under-strand."""

    sign: int
    slots: tuple[int, int, int, int]


@dataclass(frozen=True)
class TangleDiagram:
    """A planar-diagram code for a tangle in a marked disk.

    ``side`` records which disk of the split sphere the tangle occupies,
    which determines whether its invariant fills the inside or the outside
    slot of the boundary generators.  The instance is treated as immutable;
    ``boundary`` maps each point 1..2n to the edge ending there.
    """

    name: str
    side: str
    endpoints: int
    crossings: tuple[Crossing, ...]
    loops: int = 0
    boundary: Mapping[int, int] = field(default_factory=dict)

    def edge_labels(self) -> set[int]:
        labels = {e for cr in self.crossings for e in cr.slots}
        labels.update(self.boundary.values())
        return labels


@dataclass(frozen=True)
class ResolvedState:
    """One point of the resolution cube.

    ``free_circles`` lists the edge sets of components missing the
    boundary, ordered by smallest edge label; crossingless loops carry no
    edges and appear as empty sets at the end.  ``lam`` is the non-crossing
    matching the boundary-to-boundary strands induce on the 2n points.
    """

    rho: tuple[int, ...]
    free_circles: tuple[frozenset[int], ...]
    lam: Matching


def validate(t: TangleDiagram) -> list[str]:
    """All invariant violations, empty when the diagram is well formed."""
    errors: list[str] = []
    if t.side not in ("inside", "outside"):
        errors.append(f"side must be 'inside' or 'outside', got {t.side!r}")
    if t.endpoints < 0:
        errors.append(f"endpoints must be nonnegative, got {t.endpoints}")
    elif t.endpoints % 2:
        errors.append(f"endpoints must be even, got {t.endpoints}")
    if t.loops < 0:
        errors.append(f"loop count must be nonnegative, got {t.loops}")
    for idx, cr in enumerate(t.crossings, start=1):
        if cr.sign not in (1, -1):
            errors.append(f"crossing {idx} has sign {cr.sign!r}, expected +1 or -1")
        if len(cr.slots) != 4:
            errors.append(f"crossing {idx} has {len(cr.slots)} slots, expected 4")
        elif any(not isinstance(e, int) or e < 1 for e in cr.slots):
            errors.append(f"crossing {idx} has a non-positive edge label")
    expected_points = set(range(1, t.endpoints + 1))
    actual_points = set(t.boundary)
    for p in sorted(expected_points - actual_points):
        errors.append(f"boundary point {p} has no edge")
    for p in sorted(actual_points - expected_points):
        errors.append(f"boundary names point {p}, outside 1..{t.endpoints}")
    usage = Counter(e for cr in t.crossings for e in cr.slots)
    usage.update(t.boundary.values())
    for e in sorted(usage):
        if usage[e] != 2:
            errors.append(f"edge {e} has {usage[e]} ends, expected exactly 2")
    return errors


def ensure_valid(t: TangleDiagram) -> None:
    """Raise :class:`DiagramError` listing every violation, if any."""
    errors = validate(t)
    if errors:
        raise DiagramError("; ".join(errors))


def crossing_counts(t: TangleDiagram) -> tuple[int, int]:
    """(positive, negative) crossing counts."""
    plus = sum(1 for cr in t.crossings if cr.sign > 0)
    return plus, len(t.crossings) - plus


def _find(parent: dict[int, int], x: int) -> int:
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def resolve(t: TangleDiagram, rho: Iterable[int]) -> ResolvedState:
    """Smooth every crossing according to rho and trace the components.

    Assumes the diagram is valid.  Raises :class:`DiagramError` when a
    component meets the boundary in anything other than two points or the
    induced matching crosses itself; either signals a non-planar or corrupt
    diagram.
    """
    rho = tuple(rho)
    if len(rho) != len(t.crossings):
        raise ValueError(f"expected {len(t.crossings)} resolution bits, got {len(rho)}")
    if any(bit not in (0, 1) for bit in rho):
        raise ValueError("resolution bits must be 0 or 1")
    parent = {e: e for e in t.edge_labels()}

    def union(x: int, y: int) -> None:
        rx, ry = _find(parent, x), _find(parent, y)
        if rx != ry:
            parent[ry] = rx

    for cr, bit in zip(t.crossings, rho):
        a, b, c, d = cr.slots
        if bit == 0:
            union(a, b)
            union(c, d)
        else:
            union(a, d)
            union(b, c)

    components: dict[int, set[int]] = {}
    for e in parent:
        components.setdefault(_find(parent, e), set()).add(e)
    points_on: dict[int, list[int]] = {}
    for p in sorted(t.boundary):
        points_on.setdefault(_find(parent, t.boundary[p]), []).append(p)

    free = sorted(
        (frozenset(edges) for root, edges in components.items() if root not in points_on),
        key=min,
    )
    free.extend(frozenset() for _ in range(t.loops))

    arcs: list[tuple[int, int]] = []
    for root, points in points_on.items():
        if len(points) != 2:
            raise DiagramError(
                f"resolved component through edge {min(components[root])} meets "
                f"{len(points)} boundary points, expected 2"
            )
        arcs.append((points[0], points[1]))
    try:
        lam = Matching.from_arcs(t.endpoints // 2, arcs)
    except ValueError as err:
        raise DiagramError(f"induced boundary matching is invalid: {err}") from err
    return ResolvedState(rho, tuple(free), lam)


def serialize(t: TangleDiagram) -> str:
    """The diagram in its text file format; inverse to parsing."""
    lines = [f"tangle {t.name}", f"side {t.side}", f"endpoints {t.endpoints}"]
    for cr in t.crossings:
        sign = "+" if cr.sign > 0 else "-"
        lines.append("cross {} {} {} {} {}".format(sign, *cr.slots))
    if t.loops:
        lines.append(f"loop {t.loops}")
    for p in sorted(t.boundary):
        lines.append(f"boundary {p} {t.boundary[p]}")
    return "\n".join(lines) + "\n"
