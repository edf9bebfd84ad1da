"""Traces in log-polar form and the Fricke recursions that move them along the tree.

A value is stored as (log|z|, arg z). Products add, sums go through a
log-sum-exp step that also reports how many bits cancelled.
"""

from __future__ import annotations

from typing import NamedTuple


class Cancellation(ArithmeticError):
    """Too many leading bits cancelled in a trace sum; recompute at higher precision."""


class LogComplex(NamedTuple):
    logabs: object  # -inf encodes zero
    arg: object


class TraceEngine:
    # beyond this log-magnitude the length formula switches to its asymptotic form
    _LARGE = 40

    def __init__(self, ctx, precision_bits: int):
        self.ctx = ctx
        self.max_loss = precision_bits // 4

    def lift(self, z) -> LogComplex:
        ctx = self.ctx
        z = ctx.mpc(z)
        if z == 0:
            return LogComplex(ctx.ninf, ctx.mpf(0))
        return LogComplex(ctx.log(abs(z)), ctx.arg(z))

    def lower(self, x: LogComplex):
        ctx = self.ctx
        if x.logabs == ctx.ninf:
            return ctx.mpc(0)
        return ctx.exp(x.logabs) * ctx.expj(x.arg)

    def _wrap(self, theta):
        ctx = self.ctx
        return theta - 2 * ctx.pi * ctx.floor((theta + ctx.pi) / (2 * ctx.pi))

    def mul(self, x: LogComplex, y: LogComplex) -> LogComplex:
        ctx = self.ctx
        if x.logabs == ctx.ninf or y.logabs == ctx.ninf:
            return LogComplex(ctx.ninf, ctx.mpf(0))
        return LogComplex(x.logabs + y.logabs, self._wrap(x.arg + y.arg))

    def add(self, x: LogComplex, y: LogComplex, sign: int = 1) -> LogComplex:
        """x + sign*y; raises Cancellation when more than a quarter of the bits vanish."""
        ctx = self.ctx
        if sign < 0 and y.logabs != ctx.ninf:
            y = LogComplex(y.logabs, self._wrap(y.arg + ctx.pi))
        if y.logabs == ctx.ninf:
            return x
        if x.logabs == ctx.ninf:
            return y
        big, small = (x, y) if x.logabs >= y.logabs else (y, x)
        w = 1 + ctx.exp(small.logabs - big.logabs) * ctx.expj(small.arg - big.arg)
        if w == 0:
            raise Cancellation("exact cancellation")
        mag = abs(w)
        if mag < 1 and -ctx.log(mag, 2) > self.max_loss:
            raise Cancellation(f"lost {int(-ctx.log(mag, 2))} bits")
        return LogComplex(big.logabs + ctx.log(mag), self._wrap(big.arg + ctx.arg(w)))

    def sub(self, x: LogComplex, y: LogComplex) -> LogComplex:
        return self.add(x, y, -1)

    def edge_step(self, tu: LogComplex, tv: LogComplex, t_other: LogComplex) -> LogComplex:
        """tr(uv) from tr(u), tr(v), tr(uv^-1); the relation is symmetric in the last two."""
        return self.sub(self.mul(tu, tv), t_other)

    def length(self, t: LogComplex):
        """Translation length 2|Re arccosh(t/2)|."""
        ctx = self.ctx
        if t.logabs == ctx.ninf:
            return ctx.mpf(0)
        if t.logabs > self._LARGE:
            half_log = t.logabs - ctx.ln2
            inv_sq = ctx.exp(-2 * half_log) * ctx.expj(-2 * t.arg)
            return 2 * (half_log + ctx.log(abs(1 + ctx.sqrt(1 - inv_sq))))
        return 2 * abs(ctx.re(ctx.acosh(self.lower(t) / 2)))


class ProductChain:
    """tr(A^n B) for all integers n, from tr A, tr B and tr AB.

    Uses tr(A^{n+1}B) = tr A * tr(A^n B) - tr(A^{n-1} B) in both directions.
    """

    def __init__(self, engine: TraceEngine, tr_a: LogComplex, tr_b: LogComplex, tr_ab: LogComplex):
        self.engine = engine
        self.tr_a = tr_a
        self.values = {0: tr_b, 1: tr_ab}

    def __getitem__(self, n: int) -> LogComplex:
        vals, eng = self.values, self.engine
        if n in vals:
            return vals[n]
        if n > 1:
            k = max(m for m in vals if m <= n)
            while k < n:
                vals[k + 1] = eng.sub(eng.mul(self.tr_a, vals[k]), vals[k - 1])
                k += 1
        else:
            k = min(m for m in vals if m >= n)
            while k > n:
                vals[k - 1] = eng.sub(eng.mul(self.tr_a, vals[k]), vals[k + 1])
                k -= 1
        return vals[n]


def trace_of_product_chain(engine: TraceEngine, tr_a, tr_b, tr_ab) -> ProductChain:
    lift = engine.lift
    args = [x if isinstance(x, LogComplex) else lift(x) for x in (tr_a, tr_b, tr_ab)]
    return ProductChain(engine, *args)
