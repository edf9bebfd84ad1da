"""Basis descent for reducible representations.

Starting from a basis whose images share a boundary point p with A+ = B- = p,
each step replaces (a, b) by (ab, b) or (a, ab) so that the invariant holds
again. Elements of small stable norm along the way are collected.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..words import Word
from .representation import Representation
from .verdict import Budget

HARVEST_FACTOR = 329
SWITCH_FACTOR = 88


class NotReducible(ValueError):
    pass


@dataclass(frozen=True)
class Harvested:
    word: Word
    length: object
    step: int


@dataclass(frozen=True)
class Descent:
    harvested: tuple[Harvested, ...]
    bases: tuple[tuple[Word, Word], ...]
    lengths: tuple[tuple[object, object, object], ...]  # l(A_n), l(B_n), l(A_n B_n)
    mismatches: tuple[int, ...]  # steps where the 88 delta rule disagreed with the fixed points
    stopped: str  # "zero-length", "steps" or "budget"


def _normalize(rep: Representation):
    """(a, b, p) with rho(a)+ = rho(b)- = p, or NotReducible."""
    sp = rep.space
    a, b = Word("a"), Word("b")
    A, B = rep.images
    if not (sp.is_hyperbolic(A) and sp.is_hyperbolic(B)):
        raise NotReducible("both generator images must be hyperbolic")
    (ap, am), (bp, bm) = sp.fixed_points(A), sp.fixed_points(B)
    if sp.boundary_eq(ap, bm):
        return a, b, ap
    if sp.boundary_eq(am, bp):
        return b, a, bp
    if sp.boundary_eq(ap, bp):
        return a, b.inverse(), ap
    if sp.boundary_eq(am, bm):
        return a.inverse(), b, am
    raise NotReducible("generator images share no fixed point")


def reducible_descent(rep: Representation, steps: int = 64, budget=None) -> Descent:
    sp = rep.space
    budget = budget if isinstance(budget, Budget) else Budget(steps if budget is None else budget)
    a, b, p = _normalize(rep)
    delta = rep.delta
    harvest_at = HARVEST_FACTOR * delta
    A, B = rep.word_isometry(a), rep.word_isometry(b)
    harvested, bases, lengths, mismatches = [], [], [], []
    stopped = "steps"
    for n in range(steps):
        if not budget.take():
            stopped = "budget"
            break
        bases.append((a, b))
        ab, AB = a * b, sp.compose(A, B)
        la, lb, lab = sp.stable_norm(A), sp.stable_norm(B), sp.stable_norm(AB)
        lengths.append((la, lb, lab))
        if lab <= harvest_at:
            harvested.append(Harvested(ab, lab, n + 1))
        if not sp.is_hyperbolic(AB):
            stopped = "zero-length"
            break
        plus, minus = sp.fixed_points(AB)
        if sp.boundary_eq(plus, p):
            keep_b = True
        elif sp.boundary_eq(minus, p):
            keep_b = False
        else:
            raise NotReducible(f"the product at step {n} lost the shared fixed point")
        # l(A) > l(B) + 88 delta forces (AB)+ = p, and the reverse inequality forces (AB)- = p
        if (la > lb + SWITCH_FACTOR * delta and not keep_b) or (la < lb - SWITCH_FACTOR * delta and keep_b):
            mismatches.append(n)
        if keep_b:
            a, A = ab, AB
        else:
            b, B = ab, AB
    return Descent(tuple(harvested), tuple(bases), tuple(lengths), tuple(mismatches), stopped)
