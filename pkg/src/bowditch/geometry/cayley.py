"""The Cayley tree of the free group on a, b, acted on by left multiplication.

Vertices are reduced words, isometries are reduced words, and boundary points
are eventually periodic infinite reduced words. Everything is exact and the
tree is 0-hyperbolic.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..words import IDENTITY, Word, apply_endomorphism, conjugator_split, cyclic_length
from .base import NotHyperbolic, SameEndpoints, SpaceParams


def _primitive_root(s: str) -> str:
    n = len(s)
    for d in range(1, n + 1):
        if n % d == 0 and s[:d] * (n // d) == s:
            return s[:d]
    return s


@dataclass(frozen=True)
class End:
    """The infinite reduced word root + period + period + ..."""

    root: str
    period: str

    @classmethod
    def make(cls, root: str, period: str) -> "End":
        if not period:
            raise ValueError("an end needs a nonempty period")
        while root and root[-1] == period[-1]:
            root = root[:-1]
            period = period[-1] + period[:-1]
        return cls(root, _primitive_root(period))

    def prefix(self, n: int) -> str:
        if n <= len(self.root):
            return self.root[:n]
        reps = (n - len(self.root)) // len(self.period) + 1
        return (self.root + self.period * reps)[:n]

    def letters(self):
        yield from self.root
        while True:
            yield from self.period

    def __str__(self) -> str:
        return f"{self.root}({self.period})^inf"


def _common_prefix_len(u: End, v: End) -> int:
    for i, (x, y) in enumerate(zip(u.letters(), v.letters())):
        if x != y:
            return i
        if i > len(u.root) + len(v.root) + 2 * len(u.period) * len(v.period) + 2:
            raise SameEndpoints("ends coincide")
    raise AssertionError("unreachable")


class CayleyTree:
    def __init__(self, params: SpaceParams):
        if params.model_id != "cayley_tree":
            raise ValueError("CayleyTree serves the cayley_tree model")
        self.params = params
        self.model_id = params.model_id
        self.delta = 0

    # ---- group

    def identity(self) -> Word:
        return IDENTITY

    def compose(self, g: Word, h: Word) -> Word:
        return g * h

    def invert(self, g: Word) -> Word:
        return g.inverse()

    def power(self, g: Word, n: int) -> Word:
        return g**n

    def conjugate(self, g: Word, h: Word) -> Word:
        return h * g * h.inverse()

    def word(self, images: tuple[Word, Word], letters: str) -> Word:
        return apply_endomorphism(images, Word(letters))

    def stable_norm(self, g: Word) -> int:
        return cyclic_length(g)

    def is_hyperbolic(self, g: Word) -> bool:
        return cyclic_length(g) > 0

    # ---- boundary

    def fixed_points(self, g: Word) -> tuple[End, End]:
        if not self.is_hyperbolic(g):
            raise NotHyperbolic("the identity has no fixed ends")
        c, r = conjugator_split(g)
        return End.make(c.letters, r.letters), End.make(c.letters, r.inverse().letters)

    def apply_boundary(self, g: Word, xi: End) -> End:
        reps = len(g) // len(xi.period) + 2
        w = Word(g.letters + xi.root + xi.period * reps)
        return End.make(w.letters, xi.period)

    def boundary_eq(self, xi: End, eta: End) -> bool:
        return xi == eta

    def chordal(self, xi: End, eta: End) -> int:
        return 0 if xi == eta else 1

    # ---- points

    def origin(self) -> Word:
        return IDENTITY

    def point(self, letters: str) -> Word:
        return Word(letters)

    def apply(self, g: Word, x: Word) -> Word:
        return g * x

    def dist(self, x: Word, y: Word) -> int:
        return len(x.inverse() * y)

    def axis_basepoint(self, g: Word) -> Word:
        if not self.is_hyperbolic(g):
            raise NotHyperbolic("the identity has no axis")
        return conjugator_split(g)[0]

    def _seen_from(self, x: Word, xi: End) -> End:
        return self.apply_boundary(x.inverse(), xi)

    def project_to_geodesic(self, x: Word, xi: End, eta: End) -> Word:
        if xi == eta:
            raise SameEndpoints("geodesic endpoints coincide")
        u, v = self._seen_from(x, xi), self._seen_from(x, eta)
        return x * Word(u.prefix(_common_prefix_len(u, v)))

    def dist_to_geodesic(self, x: Word, xi: End, eta: End) -> int:
        return self.dist(x, self.project_to_geodesic(x, xi, eta))

    def ray_point(self, base: Word, xi: End, s) -> Word:
        if s != int(s) or s < 0:
            raise ValueError("tree rays are sampled at nonnegative integers")
        return base * Word(self._seen_from(base, xi).prefix(int(s)))

    def project_to_ray(self, y: Word, base: Word, xi: End) -> Word:
        u = self._seen_from(base, xi)
        rel = (base.inverse() * y).letters
        n = 0
        for ch, uc in zip(rel, u.letters()):
            if ch != uc:
                break
            n += 1
        return base * Word(u.prefix(n))

    def busemann_cutoff(self, base: Word, x: Word) -> int:
        return self.dist(base, x) + 10

    def busemann(self, xi: End, base: Word, x: Word, t=None) -> int:
        if t is None:
            t = self.busemann_cutoff(base, x)
        return self.dist(self.ray_point(base, xi, t), x) - t
