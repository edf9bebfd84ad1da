from .base import (
    BOUNDARY_TOLERANCE,
    HYPERBOLIC_DELTA,
    HYPERBOLICITY_THRESHOLD,
    PRECISION_BITS,
    NotHyperbolic,
    SameEndpoints,
    SpaceParams,
    format_length,
    parse_length,
    make_space,
)
from .cayley import CayleyTree, End
from .mobius import INFINITY, Matrix, MobiusSpace, Point
from .tracelog import Cancellation, LogComplex, ProductChain, TraceEngine, trace_of_product_chain
