"""Sink search, sublevel exploration and the top-level recognition procedure."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import ceil

from ..farey import INF, ZERO, Edge, OrientedEdge, Region, Subtree, Vertex, basis_partner, neighbors_of
from .growth import Arc, arc_bound, arc_J, growth_constants
from .representation import Constants, Representation
from .verdict import (
    Bowditch,
    Budget,
    BudgetExceeded,
    Distinct,
    EndpointCoincidence,
    FiniteLevelSet,
    ForkViolation,
    Inconclusive,
    LevelRegion,
    NonHyperbolicPrimitive,
    NotBowditch,
    NotMapped,
    Reducible,
    SinkCertificate,
    SinkFound,
    SmallRegion,
)

TIE_RELATIVE = 1e-12
# chordal distances this many tolerances away trigger the certifying loop
ESCALATION_FACTOR = 100
DEFAULT_BUDGET = 1_000_000


def _budget(b) -> Budget:
    return b if isinstance(b, Budget) else Budget(b)


def orientation(rep: Representation, edge: Edge) -> OrientedEdge:
    """Arrow from the longer opposite region to the shorter one."""
    z, w = edge.opposite()
    lz, lw = rep.length(z), rep.length(w)
    if abs(lz - lw) <= TIE_RELATIVE * max(lz, lw):
        return OrientedEdge(edge, min(z, w))
    return OrientedEdge(edge, w if lw < lz else z)


def points_into(rep: Representation, edge: Edge, v: Vertex) -> bool:
    return orientation(rep, edge).head_vertex == v


def find_small_or_sink(rep: Representation, edge: Edge, C, budget=DEFAULT_BUDGET):
    budget = _budget(budget)
    trail: list[Edge] = []
    while True:
        if not budget.take():
            return BudgetExceeded("find-small-or-sink", tuple(trail[-8:]))
        trail.append(edge)
        x, y = edge.regions()
        for r in (x, y):
            if rep.length(r) <= C:
                return SmallRegion(edge, r)
        for r in sorted(edge.opposite()):
            if rep.length(r) <= C:
                return SmallRegion(Edge(x, r), r)
        head = orientation(rep, edge)
        v, r = head.head_vertex, head.head
        outgoing = [f for f in (Edge(x, r), Edge(y, r)) if not points_into(rep, f, v)]
        if not outgoing:
            return SinkFound(v, tuple(trail))
        if len(outgoing) == 2:
            return ForkViolation(v, tuple(outgoing))
        edge = outgoing[0]


# ---- semi-decision loops for boundary points


def endpoints_distinct_cert(space, ray1, ray2, budget=DEFAULT_BUDGET):
    """Certify that two rays, given as (base, endpoint), have distinct endpoints."""
    budget = _budget(budget)
    (x1, xi1), (x2, xi2) = ray1, ray2
    delta = space.delta
    d0 = space.dist(x1, x2)
    n = max(6 * delta, d0) + d0 + delta
    while budget.take():
        p = space.ray_point(x1, xi1, n)
        if space.dist(p, space.project_to_ray(p, x2, xi2)) > 2 * delta:
            return Distinct(n)
        n = n + 1
    return BudgetExceeded("endpoints-distinct")


def b_maps_aplus_cert(space, A, B, budget=DEFAULT_BUDGET):
    """Certify B(A+) != A- by finding n with l(A^n B) > 30 delta."""
    budget = _budget(budget)
    plus, minus = space.fixed_points(A)
    o = space.axis_basepoint(A)
    d_bo = space.dist(o, space.apply(B, o))
    delta = space.delta
    N = max(3 * d_bo + 18 * delta, 5 * d_bo + 10 * delta) / space.stable_norm(A)
    n = max(int(ceil(N)), 0)
    g = space.compose(space.power(A, n), B)
    while budget.take():
        length = space.stable_norm(g)
        if length > 30 * delta:
            return NotMapped(n, length)
        g = space.compose(A, g)
        n += 1
    return BudgetExceeded("b-maps-aplus")


def _endpoint_status(rep: Representation, A, B, budget: Budget) -> str:
    """'clear', 'coincident' or 'undecided' for the pair B(A+) versus A-."""
    sp = rep.space
    plus, minus = sp.fixed_points(A)
    chord = sp.chordal(sp.apply_boundary(B, plus), minus)
    if chord <= sp.params.boundary_tolerance:
        return "coincident"
    if not rep.exact and chord <= ESCALATION_FACTOR * sp.params.boundary_tolerance:
        cert = b_maps_aplus_cert(sp, A, B, budget)
        return "clear" if isinstance(cert, NotMapped) else "undecided"
    return "clear"


# ---- exploring the sublevel set


@dataclass(frozen=True)
class Explored:
    regions: tuple[LevelRegion, ...]


@dataclass(frozen=True)
class InfiniteEvidence:
    kind: str  # "whole", "half", "undecided" or "budget"
    region: Region | None = None
    side: str | None = None
    frontier: tuple = ()


def _sweep(rep: Representation, start: Region, C, budget: Budget):
    """Walk the component of the sublevel set {l <= C} containing start.

    Returns Explored, or the first obstruction found: NonHyperbolicPrimitive,
    EndpointCoincidence, ("undecided", region, side) or BudgetExceeded.
    """
    sp = rep.space
    # discovery order, so obstructions near the start surface before an
    # infinite sublevel set is walked outwards
    todo = deque([start])
    seen = {start}
    done: dict[Region, LevelRegion] = {}
    while todo:
        if not budget.take():
            return BudgetExceeded("explore", tuple(sorted(todo)))
        x = todo.popleft()
        if not rep.is_hyperbolic(x):
            return NonHyperbolicPrimitive(x, rep.length(x))
        y = basis_partner(x)
        A, B = rep.isometry(x), rep.isometry(y)
        for side, a_side in (("plus", A), ("minus", sp.invert(A))):
            status = _endpoint_status(rep, a_side, B, budget)
            if status == "coincident":
                return EndpointCoincidence((x, y), side)
            if status == "undecided":
                return ("undecided", x, side)
        gp = growth_constants(rep, x, y, "plus")
        gm = growth_constants(rep, x, y, "minus")
        length = rep.length(x)
        n_plus = arc_bound(gp.N, gp.k, C, length)
        n_minus = arc_bound(gm.N, gm.k, C, length)
        for n in range(-n_minus, n_plus + 1):
            yn = neighbors_of(x, y, n)
            if yn not in seen and rep.length(yn) <= C:
                seen.add(yn)
                todo.append(yn)
        done[x] = LevelRegion(x, y, length, n_minus, n_plus, gp, gm)
    return Explored(tuple(done[r] for r in sorted(done)))


def explore_small_regions(rep: Representation, edge: Edge, x: Region, C, budget=DEFAULT_BUDGET):
    budget = _budget(budget)
    if x not in edge.regions() or rep.length(x) > C:
        raise ValueError(f"{x} is not in the sublevel set")
    out = _sweep(rep, x, C, budget)
    if isinstance(out, (NonHyperbolicPrimitive, EndpointCoincidence)):
        return NotBowditch(out)
    if isinstance(out, tuple):
        return Inconclusive(f"could not decide endpoint coincidence at {out[1]} ({out[2]})")
    return out


def tree_T(rep: Representation, K, budget=DEFAULT_BUDGET):
    """The finite subtree spanned by the arcs around the sublevel set {l <= K}.

    Returns a Subtree (possibly empty) or InfiniteEvidence.
    """
    budget = _budget(budget)
    found = find_small_or_sink(rep, Edge(INF, ZERO), K, budget)
    if isinstance(found, SinkFound):
        return Subtree(frozenset())
    if isinstance(found, BudgetExceeded):
        return InfiniteEvidence("budget", frontier=found.frontier)
    if isinstance(found, ForkViolation):
        return InfiniteEvidence("undecided", frontier=(found.vertex,))
    todo = deque([found.region])
    seen = {found.region}
    edges = set()
    while todo:
        if not budget.take():
            return InfiniteEvidence("budget", frontier=tuple(sorted(todo)))
        x = todo.popleft()
        arc: Arc = arc_J(rep, K, x)
        if arc.whole:
            return InfiniteEvidence("whole", x)
        if arc.infinite:
            return InfiniteEvidence("half", x, "plus" if arc.n_plus is None else "minus")
        for n in arc.indices():
            yn = neighbors_of(x, arc.partner, n)
            edges.add(Edge(x, yn))
            if yn not in seen and rep.length(yn) <= K:
                seen.add(yn)
                todo.append(yn)
    return Subtree(frozenset(edges))


# ---- the recognition procedure


def _shared_fixed_point(rep: Representation, budget: Budget):
    """Return (Reducible | None, undecided: bool) for the generator images."""
    sp = rep.space
    A, B = rep.images
    pa, pb = sp.fixed_points(A), sp.fixed_points(B)
    names = ("+", "-")
    undecided = False
    for i, xi in enumerate(pa):
        for j, eta in enumerate(pb):
            chord = sp.chordal(xi, eta)
            if chord <= sp.params.boundary_tolerance:
                return Reducible(xi, f"A{names[i]}=B{names[j]}"), False
            if not rep.exact and chord <= ESCALATION_FACTOR * sp.params.boundary_tolerance:
                o = sp.origin()
                if not isinstance(endpoints_distinct_cert(sp, (o, xi), (o, eta), budget), Distinct):
                    undecided = True
    return None, undecided


def certify(rep: Representation, constants: Constants | None = None, budget=DEFAULT_BUDGET):
    constants = constants or Constants.make(rep.delta)
    budget = _budget(budget)
    C = constants.C_big
    for r in (INF, ZERO):
        if not rep.is_hyperbolic(r):
            return NotBowditch(NonHyperbolicPrimitive(r, rep.length(r)))
    reducible, undecided = _shared_fixed_point(rep, budget)
    if reducible is not None:
        return NotBowditch(reducible)
    if undecided:
        return Inconclusive("generator fixed points too close to separate within budget")
    start = Edge(INF, ZERO)
    found = find_small_or_sink(rep, start, C, budget)
    if isinstance(found, BudgetExceeded):
        return Inconclusive("budget exhausted while searching for a small region", found.frontier)
    if isinstance(found, ForkViolation):
        return Inconclusive(f"two arrows leave vertex {found.vertex}")
    if isinstance(found, SinkFound):
        lengths = tuple(rep.length(r) for r in found.vertex.regions)
        return Bowditch(SinkCertificate(found.vertex, lengths, found.trail), constants.mode)
    out = _sweep(rep, found.region, C, budget)
    if isinstance(out, BudgetExceeded):
        return Inconclusive("budget exhausted while exploring the sublevel set", out.frontier)
    if isinstance(out, tuple):
        return Inconclusive(f"could not decide endpoint coincidence at {out[1]} ({out[2]})")
    if isinstance(out, Explored):
        return Bowditch(FiniteLevelSet(found.edge, out.regions), constants.mode)
    return NotBowditch(out)


def level_set(verdict) -> list[Region]:
    if isinstance(verdict, Bowditch) and isinstance(verdict.certificate, FiniteLevelSet):
        return verdict.certificate.slopes()
    return []


__all__ = [
    "Explored",
    "InfiniteEvidence",
    "b_maps_aplus_cert",
    "certify",
    "endpoints_distinct_cert",
    "explore_small_regions",
    "find_small_or_sink",
    "orientation",
    "tree_T",
]
