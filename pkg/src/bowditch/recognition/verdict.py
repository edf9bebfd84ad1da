from __future__ import annotations

from dataclasses import dataclass, field

from ..farey import Edge, Region, Vertex
from .growth import GrowthConstants


class Budget:
    """Step counter shared by the stages of one run."""

    def __init__(self, limit: int):
        if limit < 0:
            raise ValueError("budget must be nonnegative")
        self.limit = limit
        self.used = 0

    def take(self) -> bool:
        if self.used >= self.limit:
            return False
        self.used += 1
        return True

    @property
    def left(self) -> int:
        return self.limit - self.used


# ---- intermediate outcomes


@dataclass(frozen=True)
class SmallRegion:
    edge: Edge
    region: Region


@dataclass(frozen=True)
class SinkFound:
    vertex: Vertex
    trail: tuple[Edge, ...] = ()


@dataclass(frozen=True)
class BudgetExceeded:
    stage: str
    frontier: tuple = ()


@dataclass(frozen=True)
class ForkViolation:
    vertex: Vertex
    outgoing: tuple[Edge, Edge]


@dataclass(frozen=True)
class Distinct:
    n: object


@dataclass(frozen=True)
class NotMapped:
    n: int
    length: object


# ---- certificates and witnesses


@dataclass(frozen=True)
class SinkCertificate:
    vertex: Vertex
    lengths: tuple  # lengths of the three regions at the vertex
    trail: tuple[Edge, ...] = ()


@dataclass(frozen=True)
class LevelRegion:
    region: Region
    partner: Region
    length: object
    n_minus: int
    n_plus: int
    plus: GrowthConstants
    minus: GrowthConstants


@dataclass(frozen=True)
class FiniteLevelSet:
    start: Edge
    regions: tuple[LevelRegion, ...]

    def slopes(self) -> list[Region]:
        return [r.region for r in self.regions]


@dataclass(frozen=True)
class NonHyperbolicPrimitive:
    region: Region
    length: object


@dataclass(frozen=True)
class Reducible:
    point: object
    detail: str  # which fixed points agree, e.g. "A+=B-"


@dataclass(frozen=True)
class EndpointCoincidence:
    basis: tuple[Region, Region]
    side: str


# ---- verdicts


@dataclass(frozen=True)
class Bowditch:
    certificate: SinkCertificate | FiniteLevelSet
    mode: str

    @property
    def label(self) -> str:
        return f"{self.mode}-bowditch"


@dataclass(frozen=True)
class NotBowditch:
    witness: NonHyperbolicPrimitive | Reducible | EndpointCoincidence
    label: str = "not-bowditch"


@dataclass(frozen=True)
class Inconclusive:
    reason: str
    frontier: tuple = field(default=())
    label: str = "inconclusive"


Verdict = Bowditch | NotBowditch | Inconclusive
