"""Hyperbolic plane and hyperbolic 3-space via Moebius transformations.

Both models live in the upper half-space {(z, t) : z complex, t > 0}; the
plane is the slice where z is real and matrices have real entries.
Arithmetic is mpmath in a context owned by the space, so precision is never
global state. Long products are evaluated with extra guard bits scaled to the
size of the entries.
"""

from __future__ import annotations

from contextlib import contextmanager
from typing import NamedTuple

import mpmath

from .base import HYPERBOLICITY_THRESHOLD, NotHyperbolic, SameEndpoints, SpaceParams


class _Infinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


class Matrix(NamedTuple):
    a: object
    b: object
    c: object
    d: object


class Point(NamedTuple):
    z: object
    t: object

    @property
    def x(self):
        return self.z.real

    @property
    def y(self):
        return self.t


class MobiusSpace:
    def __init__(self, params: SpaceParams):
        if params.model_id not in ("plane", "space3"):
            raise ValueError("MobiusSpace serves the plane and space3 models")
        self.params = params
        self.model_id = params.model_id
        self.ctx = ctx = mpmath.MPContext()
        ctx.prec = params.precision_bits
        self.delta = ctx.mpf(params.delta)
        self.tolerance = ctx.mpf(params.boundary_tolerance)
        self.threshold = ctx.mpf(HYPERBOLICITY_THRESHOLD)
        self.zero = ctx.mpc(0)
        self.one = ctx.mpc(1)
        from .tracelog import TraceEngine

        self.engine = TraceEngine(ctx, params.precision_bits)

    # ---- precision

    def _mag(self, values) -> int:
        m = 0
        for v in values:
            if v:
                m = max(m, self.ctx.mag(v))
        return m

    @contextmanager
    def guarded(self, *mats):
        """Raise working precision to cover cancellation among large entries."""
        ctx = self.ctx
        # products multiply magnitudes, and determinants cancel twice the result's
        need = self.params.precision_bits + 2 * sum(self._mag(m) for m in mats) + 32
        with ctx.workprec(max(ctx.prec, need)):
            yield

    # ---- construction

    def number(self, v):
        ctx = self.ctx
        if isinstance(v, (list, tuple)):
            re, im = v
            return ctx.mpc(ctx.mpf(re), ctx.mpf(im))
        if isinstance(v, str):
            return ctx.mpc(ctx.mpf(v))
        return ctx.mpc(v)

    def matrix(self, rows, det_tolerance: float | None = 1e-9) -> Matrix:
        """Build a det-1 matrix from [[a, b], [c, d]]; rescales by sqrt(det)."""
        ctx = self.ctx
        (a, b), (c, d) = rows
        a, b, c, d = (self.number(v) for v in (a, b, c, d))
        if self.model_id == "plane" and any(v.imag != 0 for v in (a, b, c, d)):
            raise ValueError("plane isometries need real entries")
        with ctx.workprec(ctx.prec + 2 * self._mag((a, b, c, d)) + 32):
            det = a * d - b * c
        if det == 0:
            raise ValueError("singular matrix")
        if self.model_id == "plane" and det.real <= 0:
            raise ValueError("plane isometries need positive determinant")
        if det_tolerance is not None and abs(det - 1) > det_tolerance:
            raise ValueError(f"matrix is not unimodular (det = {mpmath.nstr(det, 12)})")
        s = ctx.sqrt(det)
        return Matrix(a / s, b / s, c / s, d / s)

    def identity(self) -> Matrix:
        return Matrix(self.one, self.zero, self.zero, self.one)

    def diagonal(self, lam) -> Matrix:
        lam = self.number(lam)
        return Matrix(lam, self.zero, self.zero, 1 / lam)

    def compose(self, g: Matrix, h: Matrix) -> Matrix:
        with self.guarded(g, h):
            m = Matrix(
                g.a * h.a + g.b * h.c,
                g.a * h.b + g.b * h.d,
                g.c * h.a + g.d * h.c,
                g.c * h.b + g.d * h.d,
            )
            det = m.a * m.d - m.b * m.c
            if abs(det - 1) > self.ctx.ldexp(1, -(self.params.precision_bits // 2)):
                s = self.ctx.sqrt(det)
                m = Matrix(m.a / s, m.b / s, m.c / s, m.d / s)
        return m

    def invert(self, g: Matrix) -> Matrix:
        # exact negation keeps the extra bits that guarded products carry
        neg = self.ctx.fneg
        return Matrix(g.d, neg(g.b, exact=True), neg(g.c, exact=True), g.a)

    def power(self, g: Matrix, n: int) -> Matrix:
        if n < 0:
            g, n = self.invert(g), -n
        result, base = self.identity(), g
        while n:
            if n & 1:
                result = self.compose(result, base)
            n >>= 1
            if n:
                base = self.compose(base, base)
        return result

    def conjugate(self, g: Matrix, h: Matrix) -> Matrix:
        """h g h^-1."""
        return self.compose(self.compose(h, g), self.invert(h))

    def word(self, images: tuple[Matrix, Matrix], letters: str) -> Matrix:
        table = {"a": images[0], "b": images[1], "A": self.invert(images[0]), "B": self.invert(images[1])}
        out = self.identity()
        for ch in letters:
            out = self.compose(out, table[ch])
        return out

    # ---- lengths

    def trace(self, g: Matrix):
        with self.guarded(g):
            return g.a + g.d

    def length_from_trace(self, tr):
        ctx = self.ctx
        return 2 * abs(ctx.re(ctx.acosh(ctx.mpc(tr) / 2)))

    def stable_norm(self, g: Matrix):
        with self.guarded(g):
            return +self.length_from_trace(self.trace(g))

    def is_hyperbolic(self, g: Matrix) -> bool:
        return self.stable_norm(g) > self.threshold

    # ---- boundary

    def fixed_points(self, g: Matrix):
        """(attracting, repelling) fixed points on the sphere at infinity."""
        if not self.is_hyperbolic(g):
            raise NotHyperbolic("fixed points requested for a non-hyperbolic isometry")
        ctx = self.ctx
        a, b, c, d = g
        with self.guarded(g):
            if c == 0:
                finite = b / (d - a)
                return (INFINITY, finite) if abs(a) > abs(d) else (finite, INFINITY)
            s = ctx.sqrt((a + d) ** 2 - 4)
            u, v = (a - d) + s, (a - d) - s
            w = u if abs(u) >= abs(v) else v
            z1 = w / (2 * c)
            z2 = -b / (c * z1)
            return (z1, z2) if abs(c * z1 + d) > 1 else (z2, z1)

    def apply_boundary(self, g: Matrix, xi):
        a, b, c, d = g
        with self.guarded(g):
            if xi is INFINITY:
                return INFINITY if c == 0 else a / c
            den = c * xi + d
            if den == 0:
                return INFINITY
            return (a * xi + b) / den

    def chordal(self, xi, eta):
        ctx = self.ctx
        if xi is INFINITY and eta is INFINITY:
            return ctx.mpf(0)
        if xi is INFINITY or eta is INFINITY:
            z = eta if xi is INFINITY else xi
            return 2 / ctx.sqrt(1 + abs(z) ** 2)
        return 2 * abs(xi - eta) / ctx.sqrt((1 + abs(xi) ** 2) * (1 + abs(eta) ** 2))

    def boundary_eq(self, xi, eta) -> bool:
        return self.chordal(xi, eta) <= self.tolerance

    # ---- points

    def point(self, z, t) -> Point:
        t = self.ctx.mpf(t)
        if not t > 0:
            raise ValueError("points need positive height")
        z = self.number(z)
        if self.model_id == "plane" and z.imag != 0:
            raise ValueError("plane points have real first coordinate")
        return Point(z, t)

    def origin(self) -> Point:
        return Point(self.zero, self.ctx.mpf(1))

    def apply(self, g: Matrix, x: Point) -> Point:
        ctx = self.ctx
        a, b, c, d = g
        z, t = x
        with self.guarded(g):
            czd = c * z + d
            den = abs(czd) ** 2 + abs(c) ** 2 * t**2
            num = (a * z + b) * ctx.conj(czd) + a * ctx.conj(c) * t**2
            return Point(num / den, t / den)

    def dist(self, x: Point, y: Point):
        ctx = self.ctx
        gap = ctx.sqrt(abs(x.z - y.z) ** 2 + (x.t - y.t) ** 2)
        return 2 * ctx.asinh(gap / (2 * ctx.sqrt(x.t * y.t)))

    def displacement_at_origin(self, h: Matrix):
        """dist(o, h o) for the origin o = (0, 1), from the matrix entries alone."""
        ctx = self.ctx
        with self.guarded(h):
            s = abs(h.a - ctx.conj(h.d)) ** 2 + abs(h.b + ctx.conj(h.c)) ** 2
            return 2 * ctx.asinh(ctx.sqrt(s) / 2)

    def frame_at(self, x: Point) -> Matrix:
        """A det-1 matrix sending x to the origin and fixing infinity."""
        r = self.ctx.sqrt(x.t)
        return Matrix(1 / r + self.zero, -x.z / r, self.zero, r + self.zero)

    def _standard(self, xi, eta) -> Matrix:
        # xi -> 0, eta -> infinity
        ctx = self.ctx
        if eta is INFINITY:
            return Matrix(self.one, -xi, self.zero, self.one)
        if xi is INFINITY:
            return Matrix(self.zero, -self.one, self.one, -eta)
        s = ctx.sqrt(xi - eta)
        return Matrix(1 / s, -xi / s, 1 / s, -eta / s)

    def _check_distinct(self, xi, eta):
        if self.boundary_eq(xi, eta):
            raise SameEndpoints("geodesic endpoints coincide")

    def project_to_geodesic(self, x: Point, xi, eta) -> Point:
        self._check_distinct(xi, eta)
        m = self._standard(xi, eta)
        y = self.apply(m, x)
        h = self.ctx.sqrt(abs(y.z) ** 2 + y.t**2)
        return self.apply(self.invert(m), Point(self.zero, h))

    def dist_to_geodesic(self, x: Point, xi, eta):
        self._check_distinct(xi, eta)
        y = self.apply(self._standard(xi, eta), x)
        return self.ctx.asinh(abs(y.z) / y.t)

    def axis_basepoint(self, g: Matrix) -> Point:
        plus, minus = self.fixed_points(g)
        return self.project_to_geodesic(self.origin(), plus, minus)

    # ---- rays and horofunctions

    def _ray_frame(self, base: Point, xi) -> Matrix:
        # xi -> infinity, base -> origin
        m = self.identity() if xi is INFINITY else Matrix(self.zero, -self.one, self.one, -xi)
        return self.compose(self.frame_at(self.apply(m, base)), m)

    def ray_point(self, base: Point, xi, s) -> Point:
        m = self._ray_frame(base, xi)
        return self.apply(self.invert(m), Point(self.zero, self.ctx.exp(s)))

    def project_to_ray(self, y: Point, base: Point, xi) -> Point:
        m = self._ray_frame(base, xi)
        w = self.apply(m, y)
        h = self.ctx.sqrt(abs(w.z) ** 2 + w.t**2)
        return self.apply(self.invert(m), Point(self.zero, max(h, self.ctx.mpf(1))))

    def busemann_cutoff(self, base: Point, x: Point):
        return self.dist(base, x) + 40 * self.delta + 10

    def busemann(self, xi, base: Point, x: Point, t=None):
        """d(r(t), x) - t along the unit-speed ray r from base toward xi."""
        if t is None:
            t = self.busemann_cutoff(base, x)
        w = self.apply(self._ray_frame(base, xi), x)
        return self.dist(Point(self.zero, self.ctx.exp(t)), w) - t
