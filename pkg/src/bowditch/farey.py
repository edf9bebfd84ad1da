"""The Farey tree: regions are reduced slopes, edges are Farey-neighbour pairs.

Everything is recovered arithmetically from slopes; nothing about the
infinite trivalent tree is stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Iterator

from .words import Word

_MIRROR = str.maketrans("bB", "Bb")


@dataclass(frozen=True)
class Region:
    p: int
    q: int

    def __post_init__(self):
        if self.q < 0 or gcd(abs(self.p), self.q) != 1 or (self.q == 0 and self.p != 1):
            raise ValueError(f"not a normalized slope: {self.p}/{self.q}")

    @classmethod
    def from_vector(cls, p: int, q: int) -> "Region":
        if gcd(abs(p), abs(q)) != 1:
            raise ValueError(f"non-primitive vector ({p}, {q})")
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        return cls(p, q)

    @classmethod
    def parse(cls, text: str) -> "Region":
        text = text.strip()
        if text in ("inf", "oo", "∞"):
            return INF
        if "/" in text:
            p, q = text.split("/")
            return cls.from_vector(int(p), int(q))
        return cls(int(text), 1)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    @property
    def vector(self) -> tuple[int, int]:
        return self.p, self.q

    def key(self):
        """Numeric slope order with infinity on top."""
        return (1, Fraction(0)) if self.q == 0 else (0, Fraction(self.p, self.q))

    def __lt__(self, other: "Region") -> bool:
        return self.key() < other.key()

    def mirror(self) -> "Region":
        return self if self.q == 0 else Region(-self.p, self.q)

    @property
    def negative(self) -> bool:
        return self.p < 0


INF = Region(1, 0)
ZERO = Region(0, 1)
ONE = Region(1, 1)
MINUS_ONE = Region(-1, 1)


def is_neighbor(x: Region, y: Region) -> bool:
    return abs(x.p * y.q - y.p * x.q) == 1


def base_length(x: Region) -> int:
    """Cyclic length of P(x); equals F for the base edge."""
    return abs(x.p) + x.q


def depth(x: Region) -> int:
    """Stern-Brocot depth: 0 for the base regions, 1 for +-1, and so on."""
    p, q = abs(x.p), x.q
    if q == 0 or p == 0:
        return 0
    total = 0
    while q:
        total += p // q
        p, q = q, p % q
    return total


def parents(x: Region) -> tuple[Region, Region]:
    """The two Farey neighbours of x of smaller depth, as (left, right) around x."""
    if x.q == 0 or x.p == 0:
        raise ValueError(f"{x} is a base region")
    if x.p < 0:
        lo, hi = parents(x.mirror())
        return hi.mirror(), lo.mirror()
    p, q = x.p, x.q
    q1 = pow(p, -1, q) if q > 1 else 1
    p1 = (p * q1 - 1) // q
    return Region(p1, q1), Region.from_vector(p - p1, q - q1)


def basis_partner(x: Region) -> Region:
    """Fixed Farey neighbour used to build the neighbour family of x."""
    if x == INF:
        return ZERO
    if x == ZERO:
        return INF
    lo, hi = parents(x)
    return min((lo, hi), key=lambda r: (base_length(r), r.key()))


def _walk_words(p: int, q: int) -> str:
    # descend the Stern-Brocot tree; each mediant gets P(larger) + P(smaller)
    left, right = (0, 1), (1, 0)
    wl, wr = "b", "a"
    target = Fraction(p, q)
    while True:
        mid = (left[0] + right[0], left[1] + right[1])
        wm = wr + wl
        if mid == (p, q):
            return wm
        if target < Fraction(mid[0], mid[1]):
            right, wr = mid, wm
        else:
            left, wl = mid, wm


@lru_cache(maxsize=1 << 16)
def _word_letters(x: Region) -> str:
    if x == INF:
        return "a"
    if x == ZERO:
        return "b"
    if x.p < 0:
        return _word_letters(x.mirror()).translate(_MIRROR)
    return _walk_words(x.p, x.q)


def primitive_word(x: Region) -> Word:
    """P(x): a cyclically reduced primitive word with exponent sums along x."""
    return Word._trusted(_word_letters(x))


def abelian_vector(x: Region) -> tuple[int, int]:
    """Exponent sums of primitive_word(x); may be the negated slope vector."""
    return (-x.p, -x.q) if x.p < 0 else (x.p, x.q)


def neighbors_of(x: Region, y: Region, n: int) -> Region:
    """Y_n, the region whose primitive word is conjugate to P(x)^n P(y)."""
    ax, ay = abelian_vector(x), abelian_vector(y)
    return Region.from_vector(n * ax[0] + ay[0], n * ax[1] + ay[1])


def iter_neighbors(x: Region, y: Region, lo: int, hi: int) -> Iterator[tuple[int, Region]]:
    for n in range(lo, hi + 1):
        yield n, neighbors_of(x, y, n)


def tricolor(x: Region) -> int:
    return {(1, 0): 1, (0, 1): 2, (1, 1): 3}[(x.p % 2, x.q % 2)]


@dataclass(frozen=True)
class Edge:
    x: Region
    y: Region

    def __post_init__(self):
        if not is_neighbor(self.x, self.y):
            raise ValueError(f"{self.x} and {self.y} are not Farey neighbours")
        if self.y < self.x:
            a, b = self.y, self.x
            object.__setattr__(self, "x", a)
            object.__setattr__(self, "y", b)

    def __str__(self) -> str:
        return f"{self.x}|{self.y}"

    def regions(self) -> tuple[Region, Region]:
        return self.x, self.y

    def opposite(self) -> tuple[Region, Region]:
        """The two regions meeting the endpoints of this edge, (sum, difference)."""
        (a, b), (c, d) = self.x.vector, self.y.vector
        return Region.from_vector(a + c, b + d), Region.from_vector(a - c, b - d)

    def endpoints(self) -> tuple["Vertex", "Vertex"]:
        s, t = self.opposite()
        return Vertex.of(self.x, self.y, s), Vertex.of(self.x, self.y, t)

    def coords(self, r: Region) -> tuple[int, int]:
        """(alpha, beta) with r = alpha*x + beta*y on slope vectors."""
        (p1, q1), (p2, q2) = self.x.vector, self.y.vector
        det = p1 * q2 - p2 * q1
        return (r.p * q2 - p2 * r.q) * det, (p1 * r.q - r.p * q1) * det


@dataclass(frozen=True)
class Vertex:
    regions: tuple[Region, Region, Region]

    @classmethod
    def of(cls, x: Region, y: Region, z: Region) -> "Vertex":
        if not (is_neighbor(x, y) and is_neighbor(y, z) and is_neighbor(x, z)):
            raise ValueError("vertex regions must be pairwise neighbours")
        return cls(tuple(sorted((x, y, z))))

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.regions)) + ")"

    def edges(self) -> tuple[Edge, Edge, Edge]:
        x, y, z = self.regions
        return Edge(x, y), Edge(x, z), Edge(y, z)

    def third(self, e: Edge) -> Region:
        (r,) = [r for r in self.regions if r not in e.regions()]
        return r


@dataclass(frozen=True)
class OrientedEdge:
    """An edge with an arrow; ``head`` is the region touching only the head vertex."""

    edge: Edge
    head: Region

    def __post_init__(self):
        if self.head not in self.edge.opposite():
            raise ValueError(f"{self.head} does not meet {self.edge}")

    @property
    def tail(self) -> Region:
        s, t = self.edge.opposite()
        return t if self.head == s else s

    @property
    def head_vertex(self) -> Vertex:
        return Vertex.of(self.edge.x, self.edge.y, self.head)

    @property
    def tail_vertex(self) -> Vertex:
        return Vertex.of(self.edge.x, self.edge.y, self.tail)

    def reverse(self) -> "OrientedEdge":
        return OrientedEdge(self.edge, self.tail)

    def side(self, r: Region) -> int:
        """0 on the edge, +1 on the head side, -1 on the tail side."""
        alpha, beta = self.edge.coords(r)
        if alpha == 0 or beta == 0:
            return 0
        ha, hb = self.edge.coords(self.head)
        return 1 if (alpha * beta > 0) == (ha * hb > 0) else -1

    def __str__(self) -> str:
        return f"{self.edge}->{self.head}"


def base_edge() -> OrientedEdge:
    return OrientedEdge(Edge(INF, ZERO), MINUS_ONE)


def word_length_F(e: OrientedEdge | Edge, x: Region) -> int:
    """F_e(x): 1 on the edge, additive over parents relative to e."""
    edge = e.edge if isinstance(e, OrientedEdge) else e
    alpha, beta = edge.coords(x)
    return abs(alpha) + abs(beta)


def regions_to_depth(max_depth: int) -> list[Region]:
    out = [INF, ZERO]
    layer = [(ZERO.vector, INF.vector)]
    for _ in range(max_depth):
        nxt = []
        for left, right in layer:
            mid = (left[0] + right[0], left[1] + right[1])
            out.append(Region(*mid))
            out.append(Region(-mid[0], mid[1]))
            nxt.append((left, mid))
            nxt.append((mid, right))
        layer = nxt
    return out


def regions_to_length(max_len: int) -> list[Region]:
    """All regions with base_length <= max_len, found by a pruned tree walk."""
    if max_len < 1:
        return []
    out = [INF, ZERO]
    stack = [(ZERO.vector, INF.vector)]
    while stack:
        left, right = stack.pop()
        mid = (left[0] + right[0], left[1] + right[1])
        if mid[0] + mid[1] > max_len:
            continue
        out.append(Region(*mid))
        out.append(Region(-mid[0], mid[1]))
        stack.append((left, mid))
        stack.append((mid, right))
    return sorted(out)


# --- the subdivided tree: edge nodes and vertex nodes, rooted at the base edge


_ROOT = Edge(INF, ZERO)


def _edge_parent(e: Edge) -> Vertex | None:
    if e == _ROOT:
        return None
    u, v = sorted(e.regions(), key=base_length)
    lo, hi = parents(v)
    return Vertex.of(u, v, hi if lo == u else lo)


def _vertex_parent(v: Vertex) -> Edge:
    deepest = max(v.regions, key=base_length)
    return Edge(*parents(deepest))


def _chain(node) -> list:
    out = [node]
    while True:
        cur = out[-1]
        nxt = _vertex_parent(cur) if isinstance(cur, Vertex) else _edge_parent(cur)
        if nxt is None:
            return out
        out.append(nxt)


def _lowest_common(chains: list[list]):
    common = set(chains[0])
    for c in chains[1:]:
        common &= set(c)
    return min(common, key=lambda n: chains[0].index(n))


def node_distance(a, b) -> int:
    ca, cb = _chain(a), _chain(b)
    top = _lowest_common([ca, cb])
    return ca.index(top) + cb.index(top)


def edge_distance(e: Edge, f: Edge) -> int:
    """Number of steps between two edges (adjacent edges are 1 apart)."""
    return node_distance(e, f) // 2


@dataclass(frozen=True)
class Subtree:
    edges: frozenset

    def __len__(self) -> int:
        return len(self.edges)

    def vertices(self) -> set[Vertex]:
        return {v for e in self.edges for v in e.endpoints()}

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=lambda e: (e.x.key(), e.y.key()))

    def is_connected(self) -> bool:
        if not self.edges:
            return True
        todo = [next(iter(self.edges))]
        seen = set(todo)
        while todo:
            e = todo.pop()
            for v in e.endpoints():
                for f in v.edges():
                    if f in self.edges and f not in seen:
                        seen.add(f)
                        todo.append(f)
        return len(seen) == len(self.edges)


def span(edges: Iterable[Edge]) -> Subtree:
    edges = list(edges)
    if not edges:
        raise ValueError("span of no edges")
    chains = [_chain(e) for e in edges]
    top = _lowest_common(chains)
    nodes = set()
    for c in chains:
        nodes.update(c[: c.index(top) + 1])
    return Subtree(frozenset(n for n in nodes if isinstance(n, Edge)))


def circular_set(tree: Subtree) -> set[OrientedEdge]:
    out = set()
    for v in tree.vertices():
        for e in v.edges():
            if e not in tree.edges:
                out.add(OrientedEdge(e, v.third(e)))
    return out
