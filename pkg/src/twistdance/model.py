"""Core diagram model: events on a closed oriented curve.

A twisted virtual Gauss code is read along the knot as a cyclic sequence of
events: classical crossing passes (over or under strand, signed), virtual
crossing passes, and twist bars.  ``validate`` enforces the structural
grammar; ``paths_of`` splits the cycle at a set of initial points.

Gaps are the positions between consecutive events where an initial point may
sit: gap ``g`` lies immediately before event ``g``.  The empty diagram (the
bare unknot) has a single gap 0.

Classical and virtual crossings are labelled in separate namespaces, so
``O1`` pairs with ``U1`` while ``V1`` pairs with the other ``V1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

__all__ = [
    "CrossingSign",
    "Strand",
    "ClassicalPass",
    "VirtualPass",
    "TwistBar",
    "Event",
    "Diagram",
    "DiagramError",
    "DuplicateStrand",
    "UnpairedCrossing",
    "SignMismatch",
    "DuplicateBar",
    "DuplicateGap",
    "validate",
    "check_points",
    "path_event_indices",
    "paths_of",
]


class CrossingSign(Enum):
    """Handedness of a classical crossing; stored for fidelity, never read
    by any dance rule."""

    POSITIVE = "+"
    NEGATIVE = "-"


class Strand(Enum):
    OVER = "O"
    UNDER = "U"


@dataclass(frozen=True)
class ClassicalPass:
    """One passage through a classical crossing on the given strand."""

    crossing_id: int
    strand: Strand
    sign: CrossingSign = CrossingSign.POSITIVE


@dataclass(frozen=True)
class VirtualPass:
    """One passage through a virtual crossing; never restricts a dancer."""

    crossing_id: int


@dataclass(frozen=True)
class TwistBar:
    """A tick mark on the strand; flips the facing of any dancer crossing it.

    The id exists only for traceability and has no semantic weight.
    """

    bar_id: int


Event = Union[ClassicalPass, VirtualPass, TwistBar]


class DiagramError(ValueError):
    """An event sequence that is not a valid twisted virtual Gauss code.

    ``event_index`` points at the event where the first violation was
    detected.  Checks run in a fixed order (strand duplication, crossing
    pairing, sign agreement, bar uniqueness) so every invalid sequence maps
    to exactly one error class.  ``span`` is attached by the codec when the
    sequence came from text.
    """

    def __init__(self, message: str, event_index: int | None = None) -> None:
        super().__init__(message)
        self.event_index = event_index
        self.span = None


class DuplicateStrand(DiagramError):
    """A classical crossing crossed twice on the same strand."""


class UnpairedCrossing(DiagramError):
    """A classical or virtual crossing id that does not occur exactly twice."""


class SignMismatch(DiagramError):
    """The two passes of one classical crossing carry different signs."""


class DuplicateBar(DiagramError):
    """A twist-bar id that occurs more than once."""


class DuplicateGap(ValueError):
    """Two initial points placed in the same gap."""


@dataclass(frozen=True)
class Diagram:
    """A validated cyclic event sequence; index order is the orientation.

    Construct through :func:`validate` or ``codec.parse``; the dataclass
    itself does not re-check invariants.
    """

    events: tuple[Event, ...]

    @property
    def gap_count(self) -> int:
        """Number of placement positions: one per event, or 1 when empty."""
        return max(len(self.events), 1)


def validate(events: Iterable[Event]) -> Diagram:
    """Check the structural invariants and wrap the sequence in a Diagram.

    The sequence is preserved verbatim.  Raises the subclass of
    :class:`DiagramError` for the first violated check, in the order:
    DuplicateStrand, UnpairedCrossing, SignMismatch, DuplicateBar.
    """
    evs = tuple(events)

    seen_strand: set[tuple[int, Strand]] = set()
    for i, ev in enumerate(evs):
        if isinstance(ev, ClassicalPass):
            key = (ev.crossing_id, ev.strand)
            if key in seen_strand:
                raise DuplicateStrand(
                    f"crossing {ev.crossing_id} passed twice on the "
                    f"{ev.strand.name.lower()} strand",
                    i,
                )
            seen_strand.add(key)

    classical_count: dict[int, int] = {}
    virtual_count: dict[int, int] = {}
    for i, ev in enumerate(evs):
        if isinstance(ev, ClassicalPass):
            classical_count[ev.crossing_id] = classical_count.get(ev.crossing_id, 0) + 1
        elif isinstance(ev, VirtualPass):
            virtual_count[ev.crossing_id] = virtual_count.get(ev.crossing_id, 0) + 1
            if virtual_count[ev.crossing_id] > 2:
                raise UnpairedCrossing(
                    f"virtual crossing {ev.crossing_id} appears more than twice", i
                )
    for i, ev in enumerate(evs):
        if isinstance(ev, ClassicalPass) and classical_count[ev.crossing_id] != 2:
            raise UnpairedCrossing(
                f"classical crossing {ev.crossing_id} appears only once", i
            )
        if isinstance(ev, VirtualPass) and virtual_count[ev.crossing_id] != 2:
            raise UnpairedCrossing(
                f"virtual crossing {ev.crossing_id} appears only once", i
            )

    first_sign: dict[int, CrossingSign] = {}
    for i, ev in enumerate(evs):
        if isinstance(ev, ClassicalPass):
            if ev.crossing_id in first_sign:
                if ev.sign is not first_sign[ev.crossing_id]:
                    raise SignMismatch(
                        f"crossing {ev.crossing_id} has one pass signed "
                        f"{first_sign[ev.crossing_id].value} and one signed {ev.sign.value}",
                        i,
                    )
            else:
                first_sign[ev.crossing_id] = ev.sign

    seen_bars: set[int] = set()
    for i, ev in enumerate(evs):
        if isinstance(ev, TwistBar):
            if ev.bar_id in seen_bars:
                raise DuplicateBar(f"twist bar {ev.bar_id} appears twice", i)
            seen_bars.add(ev.bar_id)

    return Diagram(evs)


def check_points(diagram: Diagram, points: Iterable[int]) -> tuple[int, ...]:
    """Validate a tuple of initial points: distinct gaps, listed in cyclic order.

    Cyclic order means that walking the diagram forward from ``points[0]``
    meets the remaining points in list order.  Returns the normalized tuple.
    """
    pts = tuple(points)
    if not pts:
        raise ValueError("at least one initial point is required")
    gaps = diagram.gap_count
    for p in pts:
        if not 0 <= p < gaps:
            raise ValueError(f"gap index {p} out of range 0..{gaps - 1}")
    seen: set[int] = set()
    for p in pts:
        if p in seen:
            raise DuplicateGap(f"two initial points share gap {p}")
        seen.add(p)
    offsets = [(p - pts[0]) % gaps for p in pts]
    if any(offsets[i] >= offsets[i + 1] for i in range(len(offsets) - 1)):
        raise ValueError(f"initial points {pts} are not in cyclic order")
    return pts


def path_event_indices(diagram: Diagram, points: Iterable[int]) -> list[tuple[int, ...]]:
    """Event indices of each path, in path order.

    Path ``i`` runs from ``points[i]`` up to (excluding events at or after)
    ``points[i+1]``, wrapping cyclically; a single point yields the whole
    cycle starting there.
    """
    pts = check_points(diagram, points)
    m = len(diagram.events)
    if m == 0:
        return [()]
    n = len(pts)
    arcs = []
    for i in range(n):
        start = pts[i]
        span = (pts[(i + 1) % n] - start) % m or m
        arcs.append(tuple((start + j) % m for j in range(span)))
    return arcs


def paths_of(diagram: Diagram, points: Iterable[int]) -> list[tuple[Event, ...]]:
    """The event subsequences of each path.

    Concatenating the result in order reproduces the event cycle starting at
    ``points[0]`` exactly once.
    """
    return [
        tuple(diagram.events[j] for j in arc)
        for arc in path_event_indices(diagram, points)
    ]
