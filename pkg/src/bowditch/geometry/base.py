from __future__ import annotations

from dataclasses import dataclass

import mpmath

MODELS = ("plane", "space3", "cayley_tree")

_CTX = mpmath.MPContext()
_CTX.prec = 320
# thin-triangle constant of the real hyperbolic plane and space
HYPERBOLIC_DELTA = _CTX.log(1 + _CTX.sqrt(2))

HYPERBOLICITY_THRESHOLD = 1e-8
BOUNDARY_TOLERANCE = 1e-9
PRECISION_BITS = 256


class NotHyperbolic(ValueError):
    pass


class SameEndpoints(ValueError):
    pass


@dataclass(frozen=True)
class SpaceParams:
    model_id: str
    delta: object = None
    boundary_tolerance: float = BOUNDARY_TOLERANCE
    precision_bits: int = PRECISION_BITS

    def __post_init__(self):
        if self.model_id not in MODELS:
            raise ValueError(f"unknown model {self.model_id!r}")
        if self.delta is None:
            object.__setattr__(self, "delta", 0 if self.model_id == "cayley_tree" else HYPERBOLIC_DELTA)
        if self.model_id == "cayley_tree" and self.delta != 0:
            raise ValueError("the Cayley tree is 0-hyperbolic")
        if self.model_id != "cayley_tree" and not self.delta > 0:
            raise ValueError("Moebius models need delta > 0")
        if self.precision_bits < 53:
            raise ValueError("precision_bits must be at least 53")


def make_space(params: SpaceParams):
    if params.model_id == "cayley_tree":
        from .cayley import CayleyTree

        return CayleyTree(params)
    from .mobius import MobiusSpace

    return MobiusSpace(params)


def format_length(x, digits: int = 30) -> str:
    if isinstance(x, int):
        return str(x)
    return mpmath.nstr(x, digits)


def parse_length(text) -> object:
    """A decimal string read at the reference precision."""
    return _CTX.mpf(text)
