"""Growth constants for l(B A^n) and the bounded case where B sends A+ to A-."""

from __future__ import annotations

from dataclasses import dataclass
from math import floor

from ..farey import Region, basis_partner


class EndpointCoincidence(ValueError):
    pass


@dataclass(frozen=True)
class GrowthConstants:
    N: object
    k: object
    side: str
    d_bo: object  # d(Bo, o)
    d_po: object  # d(p(o), o)


def _basepoint_data(space, A, B):
    o = space.axis_basepoint(A)
    return o, space.dist(o, space.apply(B, o))


def growth_constants_iso(space, A, B, side: str = "plus") -> GrowthConstants:
    """N and k with l(B A^n) >= n l(A) - k for all n >= N.

    For side "minus" the caller passes A^-1 as A.
    """
    plus, minus = space.fixed_points(A)
    moved = space.apply_boundary(B, plus)
    if space.boundary_eq(moved, minus):
        raise EndpointCoincidence(side)
    o, d_bo = _basepoint_data(space, A, B)
    d_po = space.dist_to_geodesic(o, minus, moved)
    delta = space.delta
    k = 3 * d_bo + 2 * d_po + 36 * delta
    N = max(4 * d_bo + 3 * d_po + 51 * delta, 2 * d_bo + 4 * d_po + 5 * delta) / space.stable_norm(A)
    return GrowthConstants(N, k, side, d_bo, d_po)


def coincidence_bound_iso(space, A, B):
    """N with l(A^n B) <= 30 delta for all n >= N, valid when B(A+) = A-."""
    plus, minus = space.fixed_points(A)
    if not space.boundary_eq(space.apply_boundary(B, plus), minus):
        raise ValueError("B does not send the attracting point of A to the repelling one")
    _, d_bo = _basepoint_data(space, A, B)
    delta = space.delta
    return max(3 * d_bo + 18 * delta, 5 * d_bo + 10 * delta) / space.stable_norm(A)


def _pair(rep, x: Region, y: Region, side: str):
    A, B = rep.isometry(x), rep.isometry(y)
    if side == "minus":
        A = rep.space.invert(A)
    elif side != "plus":
        raise ValueError(f"side must be plus or minus, not {side!r}")
    return A, B


def growth_constants(rep, x: Region, y: Region, side: str) -> GrowthConstants:
    return growth_constants_iso(rep.space, *_pair(rep, x, y, side), side)


def coincidence_bound(rep, x: Region, y: Region, side: str = "plus"):
    return coincidence_bound_iso(rep.space, *_pair(rep, x, y, side))


def arc_bound(N, k, K, length) -> int:
    """Largest n with n <= max(N, (K + k) / length)."""
    return int(floor(max(N, (K + k) / length)))


@dataclass(frozen=True)
class Arc:
    """Boundary edges X|Y_n of a region for -n_minus <= n <= n_plus.

    A side bound of None means that side is infinite; ``whole`` marks the
    case where rho(P(X)) is not hyperbolic and the arc is all of the boundary.
    """

    region: Region
    partner: Region
    n_minus: int | None
    n_plus: int | None
    whole: bool = False
    plus: GrowthConstants | None = None
    minus: GrowthConstants | None = None

    @property
    def infinite(self) -> bool:
        return self.whole or self.n_minus is None or self.n_plus is None

    def indices(self) -> range:
        if self.infinite:
            raise ValueError("infinite arc")
        return range(-self.n_minus, self.n_plus + 1)


def arc_J(rep, K, x: Region) -> Arc:
    y = basis_partner(x)
    if not rep.is_hyperbolic(x):
        return Arc(x, y, None, None, whole=True)
    length = rep.length(x)
    bounds, consts = {}, {}
    for side in ("plus", "minus"):
        try:
            g = growth_constants(rep, x, y, side)
        except EndpointCoincidence:
            bounds[side], consts[side] = None, None
            continue
        bounds[side], consts[side] = arc_bound(g.N, g.k, K, length), g
    return Arc(x, y, bounds["minus"], bounds["plus"], plus=consts["plus"], minus=consts["minus"])
