"""Dance scheduling: feasibility search over dancer interleavings.

A plan fixes a diagram, n initial points (one dancer per gap), a lap count
k (each dancer walks the k consecutive paths after its start point), a dance
rule (forward or matching) and a crossing rule.  A dance is a strict
linearization: dancers take their next events one at a time, and classical
crossings constrain the order.

Under the over-first rule, an under-strand pass of crossing c is allowed
only while the completed over-passes of c outnumber the completed
under-passes: each over pass deposits one permission and each under pass
consumes one, aggregated over all dancers.  The under-first rule is the
mirror image; the unrestricted rule never blocks.  Virtual passes and twist
bars never block under any rule.

Facing requirements are pure parity constraints (see ``facing``) and are
checked before any search, so an infeasible verdict distinguishes a facing
mismatch from a scheduling deadlock.

``schedule_search`` runs a depth-first search over the vector of per-dancer
route positions, memoizing states proven dead.  Successors are tried in
dancer-id order, so a feasible plan yields the lexicographically least
witness interleaving.  ``oracle_schedule`` answers the same question by
brute force over interleavings, with no memoization and with crossing counts
recounted from the raw prefix; it exists to cross-check the search and is
kept deliberately independent of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

from .facing import Facing, forward_rule_ok, matching_check, parity_vector
from .model import (
    ClassicalPass,
    Diagram,
    Strand,
    TwistBar,
    check_points,
    path_event_indices,
)

__all__ = [
    "CrossingRule",
    "RuleKind",
    "InfeasibleReason",
    "DancePlan",
    "Step",
    "Schedule",
    "Infeasible",
    "InstanceTooLarge",
    "ORACLE_STEP_LIMIT",
    "routes_of",
    "schedule_search",
    "oracle_schedule",
    "retrograde",
    "retrograde_points",
    "verify_schedule",
]


class CrossingRule(Enum):
    OVER_FIRST = "over-first"
    UNDER_FIRST = "under-first"
    UNRESTRICTED = "unrestricted"


class RuleKind(Enum):
    FORWARD = "forward"
    MATCHING = "matching"


class InfeasibleReason(Enum):
    FACING_PARITY = "FacingParity"
    DEADLOCK = "Deadlock"


@dataclass(frozen=True)
class DancePlan:
    """A diagram with placement, lap count, dance rule and crossing rule.

    ``facings`` designates one facing per initial point and is required
    exactly when the rule is matching.
    """

    diagram: Diagram
    points: tuple[int, ...]
    k: int
    rule: RuleKind = RuleKind.FORWARD
    facings: tuple[Facing, ...] | None = None
    crossing_rule: CrossingRule = CrossingRule.OVER_FIRST

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", check_points(self.diagram, self.points))
        if self.k < 1:
            raise ValueError(f"lap count must be >= 1, got {self.k}")
        if self.rule is RuleKind.MATCHING:
            if self.facings is None:
                raise ValueError("matching rule needs a facing per initial point")
            object.__setattr__(self, "facings", tuple(self.facings))
            if len(self.facings) != len(self.points):
                raise ValueError(
                    f"{len(self.facings)} facings for {len(self.points)} points"
                )
        elif self.facings is not None:
            raise ValueError("facings are only meaningful under the matching rule")

    @property
    def n(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Step:
    """One linearized move: a dancer executes the event at ``event_index``.

    ``route_position`` is the step's index within that dancer's own route;
    ``facing_after`` is the dancer's facing once the event is done.
    """

    dancer: int
    route_position: int
    event_index: int
    facing_after: Facing


@dataclass(frozen=True)
class Schedule:
    """A complete linearization of all dancers' routes.

    ``feasible`` is True for constructed witnesses; the CLI also emits
    non-feasible placeholder schedules so infeasible runs still produce a
    trace file.
    """

    steps: tuple[Step, ...]
    feasible: bool = True
    plan: DancePlan | None = None


@dataclass(frozen=True)
class Infeasible:
    """Certified failure: facing parities cannot work, or every reachable
    interleaving deadlocks."""

    reason: InfeasibleReason
    states_explored: int = 0


class InstanceTooLarge(ValueError):
    """The brute-force oracle refuses plans beyond its step guard."""


ORACLE_STEP_LIMIT = 16


def routes_of(plan: DancePlan) -> list[tuple[int, ...]]:
    """Per-dancer event-index routes: dancer i walks paths i..i+k-1 (mod n)."""
    arcs = path_event_indices(plan.diagram, plan.points)
    n = len(arcs)
    routes = []
    for i in range(n):
        route: list[int] = []
        for lap in range(plan.k):
            route.extend(arcs[(i + lap) % n])
        routes.append(tuple(route))
    return routes


def _start_facings(plan: DancePlan) -> list[Facing]:
    if plan.rule is RuleKind.MATCHING:
        return list(plan.facings)
    return [Facing.FORWARD] * plan.n


def _facing_gate(plan: DancePlan) -> bool:
    t = parity_vector(plan.diagram, plan.points)
    if plan.rule is RuleKind.FORWARD:
        return forward_rule_ok(t, plan.k)
    return matching_check(t, plan.facings, plan.k)


def _witness(plan: DancePlan, routes: list[tuple[int, ...]], moves: list[int]) -> Schedule:
    events = plan.diagram.events
    facings = _start_facings(plan)
    positions = [0] * len(routes)
    steps = []
    for d in moves:
        idx = routes[d][positions[d]]
        if isinstance(events[idx], TwistBar):
            facings[d] = facings[d].flipped()
        steps.append(Step(d, positions[d], idx, facings[d]))
        positions[d] += 1
    return Schedule(tuple(steps), True, plan)


def schedule_search(plan: DancePlan) -> Union[Schedule, Infeasible]:
    """Decide the plan and produce a witness schedule or a certified failure.

    The state is the vector of per-dancer route positions; crossing balances
    are pure functions of it, so a visited set over position vectors is a
    sound memo.  The witness, when one exists, is the lexicographically
    least feasible dancer-id sequence.
    """
    if not _facing_gate(plan):
        return Infeasible(InfeasibleReason.FACING_PARITY, 0)

    routes = routes_of(plan)
    events = plan.diagram.events
    n = len(routes)
    lengths = [len(r) for r in routes]
    total = sum(lengths)
    if total == 0:
        return _witness(plan, routes, [])

    rule = plan.crossing_rule
    positions = [0] * n
    balance: dict[int, int] = {}  # crossing -> completed overs minus unders
    dead: set[tuple[int, ...]] = set()
    moves: list[int] = []
    resume = [0]  # per depth: next dancer id to try at this state
    explored = 1

    def blocked(d: int) -> bool:
        ev = events[routes[d][positions[d]]]
        if not isinstance(ev, ClassicalPass) or rule is CrossingRule.UNRESTRICTED:
            return False
        bal = balance.get(ev.crossing_id, 0)
        if rule is CrossingRule.OVER_FIRST:
            return ev.strand is Strand.UNDER and bal <= 0
        return ev.strand is Strand.OVER and bal >= 0

    def shift(d: int, direction: int) -> None:
        if direction < 0:
            positions[d] -= 1
        ev = events[routes[d][positions[d]]]
        if isinstance(ev, ClassicalPass):
            delta = 1 if ev.strand is Strand.OVER else -1
            balance[ev.crossing_id] = balance.get(ev.crossing_id, 0) + direction * delta
        if direction > 0:
            positions[d] += 1

    while True:
        d = resume[-1]
        descended = False
        while d < n:
            if positions[d] < lengths[d] and not blocked(d):
                shift(d, +1)
                if tuple(positions) in dead:
                    shift(d, -1)
                else:
                    explored += 1
                    resume[-1] = d + 1
                    moves.append(d)
                    if len(moves) == total:
                        return _witness(plan, routes, moves)
                    resume.append(0)
                    descended = True
                    break
            d += 1
        if descended:
            continue
        dead.add(tuple(positions))
        resume.pop()
        if not moves:
            return Infeasible(InfeasibleReason.DEADLOCK, explored)
        shift(moves.pop(), -1)


def oracle_schedule(plan: DancePlan) -> Union[Schedule, Infeasible]:
    """Brute-force reference: try interleavings in lexicographic dancer-id
    order, recounting the crossing prefix rule directly at every step.

    Facing feasibility is likewise re-derived by walking each route and
    counting its twist bars, with no parity-vector algebra.  Guarded to
    ``ORACLE_STEP_LIMIT`` total steps; must agree with ``schedule_search``
    on every plan within the guard.
    """
    routes = routes_of(plan)
    total = sum(len(r) for r in routes)
    if total > ORACLE_STEP_LIMIT:
        raise InstanceTooLarge(
            f"{total} total steps exceeds the oracle guard of {ORACLE_STEP_LIMIT}"
        )
    events = plan.diagram.events
    n = len(routes)
    k = plan.k
    starts = _start_facings(plan)
    for d, route in enumerate(routes):
        flips = sum(1 for idx in route if isinstance(events[idx], TwistBar))
        end = starts[d] if flips % 2 == 0 else starts[d].flipped()
        if plan.rule is RuleKind.FORWARD:
            ok = end is Facing.FORWARD
        else:
            ok = end is plan.facings[(d + k) % n]
        if not ok:
            return Infeasible(InfeasibleReason.FACING_PARITY, 0)

    rule = plan.crossing_rule
    merge: list[int] = []
    positions = [0] * n
    nodes = 0

    def allows(idx: int) -> bool:
        ev = events[idx]
        if not isinstance(ev, ClassicalPass) or rule is CrossingRule.UNRESTRICTED:
            return True
        overs = unders = 0
        for past in merge:
            pev = events[past]
            if isinstance(pev, ClassicalPass) and pev.crossing_id == ev.crossing_id:
                if pev.strand is Strand.OVER:
                    overs += 1
                else:
                    unders += 1
        if rule is CrossingRule.OVER_FIRST:
            return ev.strand is Strand.OVER or overs > unders
        return ev.strand is Strand.UNDER or unders > overs

    def extend() -> list[int] | None:
        nonlocal nodes
        nodes += 1
        if len(merge) == total:
            return []
        for d in range(n):
            if positions[d] < len(routes[d]):
                idx = routes[d][positions[d]]
                if allows(idx):
                    merge.append(idx)
                    positions[d] += 1
                    rest = extend()
                    merge.pop()
                    positions[d] -= 1
                    if rest is not None:
                        return [d] + rest
        return None

    moves = extend()
    if moves is None:
        return Infeasible(InfeasibleReason.DEADLOCK, nodes)
    return _witness(plan, routes, moves)


def retrograde(diagram: Diagram) -> Diagram:
    """Orientation reversal: the event order flips, nothing else changes."""
    return Diagram(tuple(reversed(diagram.events)))


def retrograde_points(diagram: Diagram, points: Iterable[int]) -> tuple[int, ...]:
    """Map a placement onto the reversed diagram: gap g goes to (m - g) mod m.

    Returned in ascending order, which is a cyclic order of the image set.
    """
    m = len(diagram.events)
    if m == 0:
        return (0,)
    return tuple(sorted((m - p) % m for p in points))


def verify_schedule(schedule: Schedule) -> list[str]:
    """Independently re-check a schedule against its plan.

    Returns a list of violation descriptions (empty means clean): per-dancer
    route completeness and order, facing evolution from the rule's start
    facings with a flip at every twist bar and nowhere else, end-facing
    conformance, and the crossing rule's prefix inequality.
    """
    problems: list[str] = []
    plan = schedule.plan
    if plan is None:
        return ["schedule carries no plan to verify against"]
    routes = routes_of(plan)
    events = plan.diagram.events
    n = len(routes)

    for step in schedule.steps:
        if not 0 <= step.dancer < n:
            return [f"dancer id {step.dancer} out of range"]
        if not 0 <= step.event_index < len(events):
            return [f"event index {step.event_index} out of range"]

    by_dancer: list[list[Step]] = [[] for _ in range(n)]
    for step in schedule.steps:
        by_dancer[step.dancer].append(step)

    starts = _start_facings(plan)
    for d, steps in enumerate(by_dancer):
        route = routes[d]
        if [s.route_position for s in steps] != list(range(len(route))):
            problems.append(f"dancer {d}: route positions not 0..{len(route) - 1} in order")
        if [s.event_index for s in steps] != list(route):
            problems.append(f"dancer {d}: steps do not follow the route")
            continue
        facing = starts[d]
        for s in steps:
            if isinstance(events[s.event_index], TwistBar):
                facing = facing.flipped()
            if s.facing_after is not facing:
                problems.append(
                    f"dancer {d}: facing at route position {s.route_position} "
                    f"should be {facing.letter}"
                )
        if plan.rule is RuleKind.FORWARD:
            if facing is not Facing.FORWARD:
                problems.append(f"dancer {d}: ends backward under the forward rule")
        else:
            designated = plan.facings[(d + plan.k) % n]
            if facing is not designated:
                problems.append(
                    f"dancer {d}: ends {facing.letter} at a point designated "
                    f"{designated.letter}"
                )

    rule = plan.crossing_rule
    if rule is not CrossingRule.UNRESTRICTED:
        balance: dict[int, int] = {}
        for t, step in enumerate(schedule.steps):
            ev = events[step.event_index]
            if not isinstance(ev, ClassicalPass):
                continue
            bal = balance.get(ev.crossing_id, 0)
            if rule is CrossingRule.OVER_FIRST and ev.strand is Strand.UNDER and bal <= 0:
                problems.append(f"step {t}: under pass of crossing {ev.crossing_id} unpermitted")
            if rule is CrossingRule.UNDER_FIRST and ev.strand is Strand.OVER and bal >= 0:
                problems.append(f"step {t}: over pass of crossing {ev.crossing_id} unpermitted")
            balance[ev.crossing_id] = bal + (1 if ev.strand is Strand.OVER else -1)

    return problems
