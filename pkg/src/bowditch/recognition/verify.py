"""Independent re-check of certificates without re-running the search."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd

from ..farey import OrientedEdge, Region, neighbors_of, word_length_F
from .growth import EndpointCoincidence, arc_bound, growth_constants
from .representation import Constants, Representation
from .search import orientation
from .verdict import Bowditch, FiniteLevelSet, SinkCertificate

GROWTH_SPOT_F = 7
LENGTH_RTOL = 1e-20


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _close(a, b) -> bool:
    return abs(a - b) <= LENGTH_RTOL * max(1, abs(a), abs(b))


def _tail_side(oriented: OrientedEdge, max_f: int):
    """Regions on the edge or behind its tail with F at most max_f."""
    x, y = oriented.edge.regions()
    (p1, q1), (p2, q2) = x.vector, y.vector
    tail = oriented.tail
    sign = 1 if Region.from_vector(p1 + p2, q1 + q2) == tail else -1
    yield x
    yield y
    for total in range(2, max_f + 1):
        for alpha in range(1, total):
            beta = total - alpha
            if gcd(alpha, beta) == 1:
                yield Region.from_vector(alpha * p1 + sign * beta * p2, alpha * q1 + sign * beta * q2)


def _verify_sink(rep: Representation, cert: SinkCertificate, consts: Constants) -> list[Check]:
    C = consts.C_big
    v = cert.vertex
    checks = []
    fresh = [rep.length(r) for r in v.regions]
    checks.append(Check("lengths", all(_close(a, b) for a, b in zip(fresh, cert.lengths)), str(v)))
    checks.append(Check("above-threshold", all(l > C for l in fresh), str(v)))
    arrows = [orientation(rep, e) for e in v.edges()]
    checks.append(Check("sink", all(a.head_vertex == v for a in arrows), str(v)))
    if cert.trail:
        checks.append(Check("trail-ends-at-sink", cert.trail[-1] in v.edges(), str(cert.trail[-1])))
    if not consts.certified:
        return checks
    # the growth and product inequalities are only guaranteed at the full constant
    bad = []
    for arrow in arrows:
        x, y = arrow.edge.regions()
        m = min(rep.length(x), rep.length(y))
        for r in _tail_side(arrow, GROWTH_SPOT_F):
            f = word_length_F(arrow, r)
            if rep.length(r) < (m - C) * f + C - LENGTH_RTOL * max(1, abs(C)):
                bad.append(str(r))
    checks.append(Check("growth", not bad, ", ".join(bad)))
    bad = []
    for e in v.edges():
        x, y = e.regions()
        z, w = e.opposite()
        if max(rep.length(z), rep.length(w)) < rep.length(x) + rep.length(y) - C:
            bad.append(str(e))
    checks.append(Check("product-inequality", not bad, ", ".join(bad)))
    return checks


def _verify_level_set(rep: Representation, cert: FiniteLevelSet, consts: Constants) -> list[Check]:
    C = consts.C_big
    listed = {lr.region: lr for lr in cert.regions}
    checks = [Check("start", any(r in listed for r in cert.start.regions()), str(cert.start))]
    bad_len, bad_arc, open_ends = [], [], []
    adjacency: dict[Region, set[Region]] = {r: set() for r in listed}
    for x, lr in listed.items():
        length = rep.length(x)
        if not (_close(length, lr.length) and length <= C and rep.is_hyperbolic(x)):
            bad_len.append(str(x))
            continue
        try:
            gp = growth_constants(rep, x, lr.partner, "plus")
            gm = growth_constants(rep, x, lr.partner, "minus")
        except EndpointCoincidence:
            bad_arc.append(str(x))
            continue
        n_plus, n_minus = arc_bound(gp.N, gp.k, C, length), arc_bound(gm.N, gm.k, C, length)
        if (n_plus, n_minus) != (lr.n_plus, lr.n_minus):
            bad_arc.append(str(x))
        for n in range(-n_minus, n_plus + 1):
            y = neighbors_of(x, lr.partner, n)
            if rep.length(y) <= C:
                if y in listed:
                    adjacency[x].add(y)
                    adjacency[y].add(x)
                else:
                    open_ends.append(f"{x}->{y}")
    checks.append(Check("lengths", not bad_len, ", ".join(bad_len[:20])))
    checks.append(Check("arcs", not bad_arc, ", ".join(bad_arc[:20])))
    checks.append(Check("closed", not open_ends, ", ".join(open_ends[:20])))
    seen: set[Region] = set()
    if listed:
        root = next(iter(sorted(listed)))
        seen.add(root)
        queue = deque([root])
        while queue:
            for y in adjacency[queue.popleft()]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    checks.append(Check("connected", len(seen) == len(listed), f"{len(seen)} of {len(listed)} reached"))
    return checks


def verify_certificate(rep: Representation, verdict: Bowditch, consts: Constants) -> list[Check]:
    cert = verdict.certificate
    if isinstance(cert, SinkCertificate):
        return _verify_sink(rep, cert, consts)
    if isinstance(cert, FiniteLevelSet):
        return _verify_level_set(rep, cert, consts)
    raise TypeError(f"no verifier for {type(cert).__name__}")


def all_passed(checks: list[Check]) -> bool:
    return all(c.ok for c in checks)
