"""Configuration, certificates and results of the partition-and-stitch algorithm."""

import math
from dataclasses import dataclass
from fractions import Fraction

from ..core.errors import PreconditionError
from ..core.types import Arc, JSONDict
from ..graph.digraph import PathWitness

DEFAULT_MAX_RESAMPLE_ROUNDS = 1_000_000


@dataclass(frozen=True)
class LllConfig:
    """Parameters of one partition run; logarithms are natural."""

    C: Fraction
    d: int
    c_prime: Fraction
    seed: int = 0
    max_resample_rounds: int = DEFAULT_MAX_RESAMPLE_ROUNDS

    def __post_init__(self) -> None:
        object.__setattr__(self, "C", Fraction(self.C))
        object.__setattr__(self, "c_prime", Fraction(self.c_prime))
        if self.C < 1:
            raise PreconditionError(f"C must be at least 1, got {self.C}")
        if self.d < 1:
            raise PreconditionError(f"d must be positive, got {self.d}")
        if self.c_prime <= 0:
            raise PreconditionError(f"c' must be positive, got {self.c_prime}")
        if self.max_resample_rounds < 1:
            raise PreconditionError("max_resample_rounds must be positive")

    @property
    def degree_floor(self) -> float:
        """ln d / (2c′), the cross-degree every vertex must reach."""
        return math.log(self.d) / (2 * float(self.c_prime))


@dataclass(frozen=True)
class Feasibility:
    """Number of parts and the local-lemma inequality evaluated for them.

    ``inequality_value`` is None when t = 0.
    """

    t: int
    feasible: bool
    inequality_value: float | None


@dataclass(frozen=True)
class PartitionCertificate:
    """Balanced partition with its recounted minimum cross-degree."""

    parts: tuple[tuple[int, ...], ...]
    t: int
    sizes: tuple[int, ...]
    degree_floor: float
    min_cross_degree: int
    resample_rounds_used: int
    fake_vertex_count: int
    c_prime: Fraction
    seed: int

    @property
    def required_degree(self) -> int:
        """Degree floor rounded up to an integer."""
        return math.ceil(self.degree_floor)

    @property
    def valid(self) -> bool:
        return max(self.sizes) - min(self.sizes) <= 1 and self.min_cross_degree >= self.required_degree

    def to_dict(self) -> JSONDict:
        return {
            "t": self.t,
            "sizes": list(self.sizes),
            "degree_floor": self.degree_floor,
            "required_degree": self.required_degree,
            "min_cross_degree": self.min_cross_degree,
            "resample_rounds_used": self.resample_rounds_used,
            "fake_vertex_count": self.fake_vertex_count,
            "c_prime": self.c_prime,
            "seed": self.seed,
            "valid": self.valid,
            "parts": [list(part) for part in self.parts],
        }


@dataclass(frozen=True)
class StitchResult:
    """Path built from one maximal segment per part joined by single arcs.

    ``target`` is (c′/2)·d·g/ln d when the run knows c′ and d.
    """

    path: PathWitness
    segment_lengths: tuple[int, ...]
    connectors_used: tuple[Arc, ...]
    guaranteed_floor: int
    girth: int | None
    target: float | None = None

    @property
    def t(self) -> int:
        return len(self.segment_lengths)

    def problems(self) -> list[str]:
        """Broken length invariants; empty when the result is consistent."""
        found: list[str] = []
        if self.path.length != sum(self.segment_lengths) + len(self.connectors_used):
            found.append("path length differs from segments plus connectors")
        if len(self.connectors_used) != max(self.t - 1, 0):
            found.append("connector count differs from t - 1")
        if self.path.length < self.guaranteed_floor:
            found.append(
                f"path length {self.path.length} below guaranteed floor {self.guaranteed_floor}"
            )
        return found

    def to_dict(self) -> JSONDict:
        return {
            "length": self.path.length,
            "path": list(self.path.vertices),
            "segment_lengths": list(self.segment_lengths),
            "connectors_used": [list(arc) for arc in self.connectors_used],
            "guaranteed_floor": self.guaranteed_floor,
            "girth": self.girth,
            "target": self.target,
        }


@dataclass(frozen=True)
class RunProvenance:
    """How a long-path run chose its parameters."""

    C: Fraction
    d: int
    t: int
    c_prime: Fraction | None
    achieved: int
    fallback_reason: str | None = None
    inequality_value: float | None = None
    ratio: float | None = None

    @property
    def c(self) -> Fraction | None:
        """Path constant c = c′/2."""
        return self.c_prime / 2 if self.c_prime is not None else None


@dataclass(frozen=True)
class LongPathRun:
    """Stitched path, the certificate behind it and the run provenance."""

    stitch: StitchResult
    provenance: RunProvenance
    certificate: PartitionCertificate | None = None

    @property
    def fell_back(self) -> bool:
        return self.provenance.fallback_reason is not None

    def to_dict(self) -> JSONDict:
        provenance = self.provenance
        return {
            "stitch": self.stitch.to_dict(),
            "provenance": {
                "C": provenance.C,
                "d": provenance.d,
                "t": provenance.t,
                "c_prime": provenance.c_prime,
                "c": provenance.c,
                "target": self.stitch.target,
                "achieved": provenance.achieved,
                "ratio": provenance.ratio,
                "fallback_reason": provenance.fallback_reason,
                "inequality_value": provenance.inequality_value,
            },
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }
