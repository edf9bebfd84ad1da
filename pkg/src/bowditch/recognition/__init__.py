from .descent import Descent, Harvested, NotReducible, reducible_descent
from .growth import (
    Arc,
    GrowthConstants,
    arc_bound,
    arc_J,
    coincidence_bound,
    coincidence_bound_iso,
    growth_constants,
    growth_constants_iso,
)
from .representation import MATRIX_FALLBACK_LENGTH, Constants, Representation
from .search import (
    Explored,
    InfiniteEvidence,
    b_maps_aplus_cert,
    certify,
    endpoints_distinct_cert,
    explore_small_regions,
    find_small_or_sink,
    level_set,
    orientation,
    tree_T,
)
from .verdict import (
    Bowditch,
    Budget,
    BudgetExceeded,
    Distinct,
    EndpointCoincidence,
    FiniteLevelSet,
    ForkViolation,
    Inconclusive,
    LevelRegion,
    NonHyperbolicPrimitive,
    NotBowditch,
    NotMapped,
    Reducible,
    SinkCertificate,
    SinkFound,
    SmallRegion,
    Verdict,
)
from .verify import Check, all_passed, verify_certificate

region_length = Representation.length
