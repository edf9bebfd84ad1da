"""Brute-force cross-checks: primitive enumeration, finite scans and inequality probes.

Nothing here goes through the Farey-parent trace recursion or the sublevel
search, so agreement with the recognition engine is evidence, not tautology.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .farey import Region, primitive_word, regions_to_length
from .geometry import SameEndpoints, format_length
from .words import ALPHABET, PrimitiveClass, Word, canonical_form, cyclic_length, is_primitive

# ---- enumeration


def enumerate_primitives(max_len: int) -> list[PrimitiveClass]:
    """Primitive conjugacy-inversion classes with cyclic length at most max_len."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    return [PrimitiveClass(canonical_form(primitive_word(r)), r) for r in regions_to_length(max_len)]


def exhaustive_primitive_classes(max_len: int) -> set[Word]:
    """Canonical forms of primitive classes, found by classifying every reduced word."""
    found = set()
    frontier = [""]
    for _ in range(max_len):
        nxt = []
        for s in frontier:
            for ch in ALPHABET:
                if s and Word(s[-1]).inverse().letters == ch:
                    continue
                t = s + ch
                nxt.append(t)
                w = Word._trusted(t)
                if cyclic_length(w) == len(t) and is_primitive(w):
                    found.add(canonical_form(w))
        frontier = nxt
    return found


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def primitive_count(max_len: int) -> int:
    """Closed-form class count: 2 of length 1, then 2 phi(n) of each length n >= 2."""
    return 0 if max_len < 1 else 2 + sum(2 * euler_phi(n) for n in range(2, max_len + 1))


# ---- scans


@dataclass
class ScanReport:
    max_word_length: int
    threshold: object
    sublevel: list[tuple[PrimitiveClass, object]]
    fitted_C: object
    violations: list[PrimitiveClass] = field(default_factory=list)  # non-hyperbolic classes
    rows: list[tuple[PrimitiveClass, object]] = field(default_factory=list)

    def slopes(self) -> list[Region]:
        return sorted(c.slope for c, _ in self.sublevel)

    def to_dict(self) -> dict:
        return {
            "max_word_length": self.max_word_length,
            "threshold": format_length(self.threshold),
            "fitted_C": format_length(self.fitted_C),
            "sublevel": [{"slope": str(c.slope), "word": str(c.canonical), "length": format_length(l)} for c, l in self.sublevel],
            "non_hyperbolic": [{"slope": str(c.slope), "word": str(c.canonical)} for c in self.violations],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(["slope", "word", "length"])
        for c, l in sorted(self.rows, key=lambda row: row[0].slope):
            out.writerow([str(c.slope), str(c.canonical), format_length(l)])
        return buf.getvalue()


def class_length(rep, cls: PrimitiveClass):
    """Stable norm of the image of the canonical word, by direct multiplication."""
    sp = rep.space
    return sp.stable_norm(rep.word_isometry(cls.canonical))


def bq_scan(rep, max_len: int, threshold) -> ScanReport:
    rows = [(c, class_length(rep, c)) for c in enumerate_primitives(max_len)]
    sublevel = sorted(((c, l) for c, l in rows if l <= threshold), key=lambda row: (row[1], row[0].slope))
    exact = rep.space.model_id == "cayley_tree"
    bad = [c for c, l in rows if not (l > 0 if exact else l > rep.space.threshold)]
    ratios = [len(c.canonical) / l for c, l in rows if c not in bad]
    # the smallest C with |g| <= C l(g) on every scanned class
    fitted = max(ratios) if ratios else 0
    return ScanReport(max_len, threshold, sublevel, fitted, bad, rows)


# ---- stable norm by iteration


def stable_norm_estimate(space, g, n: int):
    """(1/n) d(x0, g^n x0) with x0 on the axis of g, g^n by repeated squaring."""
    if n < 1:
        raise ValueError("n must be positive")
    gn = space.power(g, n)
    if space.model_id == "cayley_tree":
        x0 = space.axis_basepoint(g) if space.is_hyperbolic(g) else space.origin()
        return space.dist(x0, space.apply(gn, x0)) / n
    x0 = space.axis_basepoint(g) if space.is_hyperbolic(g) else space.origin()
    frame = space.frame_at(x0)
    h = space.compose(space.compose(frame, gn), space.invert(frame))
    return space.displacement_at_origin(h) / n


# ---- inequality probes


def _shared_fixed_point(space, A, B) -> bool:
    return any(space.boundary_eq(x, y) for x in space.fixed_points(A) for y in space.fixed_points(B))


def product_inequality_margin(space, A, B, C):
    """max(l(AB), l(AB^-1)) - (l(A) + l(B) - C)."""
    if not (space.is_hyperbolic(A) and space.is_hyperbolic(B)):
        raise ValueError("both isometries must be hyperbolic")
    if _shared_fixed_point(space, A, B):
        raise SameEndpoints("the isometries share a fixed point")
    la, lb = space.stable_norm(A), space.stable_norm(B)
    if not (la > C and lb > C):
        raise ValueError("both lengths must exceed C")
    lab = space.stable_norm(space.compose(A, B))
    labi = space.stable_norm(space.compose(A, space.invert(B)))
    return max(lab, labi) - (la + lb - C)


def product_inequality_margin_traces(engine, tr_a, tr_b, tr_ab, C):
    """Same margin from log-domain traces; tr(AB^-1) comes from the edge relation."""
    la, lb, lab = engine.length(tr_a), engine.length(tr_b), engine.length(tr_ab)
    if not (la > C and lb > C):
        raise ValueError("both lengths must exceed C")
    labi = engine.length(engine.edge_step(tr_a, tr_b, tr_ab))
    return max(lab, labi) - (la + lb - C)


def log_trace_margin(space, A, B):
    """max(log|tr AB|, log|tr AB^-1|) - (log|tr A| + log|tr B| - log 2)."""
    ctx = space.ctx
    with space.guarded(A, B):
        ta, tb = space.trace(A), space.trace(B)
        tab = space.trace(space.compose(A, B))
        tabi = space.trace(space.compose(A, space.invert(B)))
        return max(ctx.log(abs(tab)), ctx.log(abs(tabi))) - (ctx.log(abs(ta)) + ctx.log(abs(tb)) - ctx.ln2)


def _relative(residual, *terms):
    return abs(residual) / max([abs(t) for t in terms] + [1])


def trace_identity_check(space, A, B):
    """Relative residuals of the edge relation and the vertex (commutator) relation."""
    with space.guarded(A, B):
        ta, tb = space.trace(A), space.trace(B)
        tab = space.trace(space.compose(A, B))
        tabi = space.trace(space.compose(A, space.invert(B)))
        comm = space.compose(space.compose(A, B), space.compose(space.invert(A), space.invert(B)))
        tc = space.trace(comm)
        edge = _relative(tab + tabi - ta * tb, tab, tabi, ta * tb)
        terms = (ta**2, tb**2, tab**2, ta * tb * tab, tc, 2)
        vertex = _relative(ta**2 + tb**2 + tab**2 - ta * tb * tab - tc - 2, *terms)
        return +edge, +vertex


# ---- representations from trace coordinates


def matrices_from_traces(space, tr_a, tr_b, tr_ab):
    """A det-1 pair with the given traces of A, B and AB."""
    ctx = space.ctx
    x, y, z = (space.number(t) for t in (tr_a, tr_b, tr_ab))
    root = ctx.sqrt(z * z - 4)
    s = (z + root) / 2
    if abs(s) < 1:
        s = (z - root) / 2
    A = [[x, -1], [1, 0]]
    B = [[0, s], [-1 / s, y]]
    if space.model_id == "plane":
        if any(abs(v.imag) > 0 for v in (x, y, z, s)):
            raise ValueError("plane trace coordinates must be real with |tr AB| >= 2")
        A = [[ctx.re(v) for v in row] for row in A]
        B = [[ctx.re(v) for v in row] for row in B]
    return space.matrix(A), space.matrix(B)

