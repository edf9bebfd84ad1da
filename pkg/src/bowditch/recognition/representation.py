from __future__ import annotations

from dataclasses import dataclass

from ..farey import INF, MINUS_ONE, ONE, ZERO, Edge, Region, parents
from ..geometry import Cancellation, SpaceParams, make_space
from ..words import Word

# below this length the trace is recomputed from the matrix product
MATRIX_FALLBACK_LENGTH = 50


class Representation:
    """A homomorphism from the free group on a, b, given by the images of a and b.

    Lengths and images of primitive words are memoized per region. For the
    Moebius models, lengths come from the Fricke trace recursion along Farey
    parents, with matrices used for short regions and after cancellation.
    """

    def __init__(self, space, image_a, image_b):
        self.space = space
        self.params: SpaceParams = space.params
        self.images = (image_a, image_b)
        self.length_cache: dict[Region, object] = {}
        self.word_image_cache: dict[Region, object] = {INF: image_a, ZERO: image_b}
        self._mirror_images = (image_a, space.invert(image_b))
        self._traces: dict = {}
        self.matrix_fallbacks = 0

    @classmethod
    def build(cls, model_id: str, a, b, **params) -> "Representation":
        space = make_space(SpaceParams(model_id, **params))
        if model_id == "cayley_tree":
            return cls(space, Word(a), Word(b))
        return cls(space, space.matrix(a), space.matrix(b))

    @property
    def delta(self):
        return self.space.delta

    @property
    def exact(self) -> bool:
        return self.params.model_id == "cayley_tree"

    # ---- images of primitive words

    def isometry(self, x: Region):
        """rho(P(x)), built along the Stern-Brocot path to x."""
        cache = self.word_image_cache
        if x in cache:
            return cache[x]
        sp = self.space
        neg = x.p < 0
        target = x.mirror().vector if neg else x.vector
        img_a, img_b = self._mirror_images if neg else self.images
        left, right = (0, 1), (1, 0)
        g_left, g_right = img_b, img_a
        while True:
            mid = (left[0] + right[0], left[1] + right[1])
            region = Region(-mid[0], mid[1]) if neg else Region(*mid)
            g_mid = cache.get(region)
            if g_mid is None:
                g_mid = sp.compose(g_right, g_left)
                cache[region] = g_mid
            if mid == target:
                return g_mid
            if target[0] * mid[1] < mid[0] * target[1]:
                right, g_right = mid, g_mid
            else:
                left, g_left = mid, g_mid

    def word_isometry(self, w: Word):
        return self.space.word(self.images, w.letters)

    # ---- lengths

    def length(self, x: Region):
        """l(x): stable norm of rho(P(x))."""
        cached = self.length_cache.get(x)
        if cached is not None:
            return cached
        if self.exact:
            value = self.space.stable_norm(self.isometry(x))
        else:
            value = self.space.engine.length(self._trace(x))
        self.length_cache[x] = value
        return value

    def trace(self, x: Region):
        if self.exact:
            raise TypeError("trees carry no traces")
        return self.space.engine.lower(self._trace(x))

    def _matrix_trace(self, x: Region):
        self.matrix_fallbacks += 1
        g = self.isometry(x)
        with self.space.guarded(g):
            return self.space.engine.lift(self.space.trace(g))

    @staticmethod
    def _deps(x: Region) -> tuple[Region, ...]:
        if x in (INF, ZERO, ONE):
            return ()
        if x == MINUS_ONE:
            return (INF, ZERO, ONE)
        lo, hi = parents(x)
        s, t = Edge(lo, hi).opposite()
        return lo, hi, (t if s == x else s)

    def _trace(self, x: Region):
        traces = self._traces
        if x in traces:
            return traces[x]
        eng = self.space.engine
        stack = [x]
        while stack:
            r = stack[-1]
            if r in traces:
                stack.pop()
                continue
            deps = self._deps(r)
            missing = [d for d in deps if d not in traces]
            if missing:
                stack.extend(missing)
                continue
            stack.pop()
            if not deps:
                traces[r] = self._matrix_trace(r)
                continue
            try:
                t = eng.edge_step(traces[deps[0]], traces[deps[1]], traces[deps[2]])
                if eng.length(t) < MATRIX_FALLBACK_LENGTH:
                    t = self._matrix_trace(r)
            except Cancellation:
                t = self._matrix_trace(r)
            traces[r] = t
        return traces[x]

    def is_hyperbolic(self, x: Region) -> bool:
        if self.exact:
            return self.length(x) > 0
        return self.length(x) > self.space.threshold


@dataclass(frozen=True)
class Constants:
    delta: object
    C_big: object
    K_threshold: object
    mode: str

    @classmethod
    def make(cls, delta, C=None, K=None) -> "Constants":
        C = 432 * delta if C is None else C
        K = C + delta if K is None else K
        certified = C >= 432 * delta and K >= C + delta
        return cls(delta, C, K, "certified" if certified else "heuristic")

    @property
    def certified(self) -> bool:
        return self.mode == "certified"
