"""Report types for the long-path/dense-subgraph dichotomy and bound checks."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from ..core.types import JSONDict
from ..graph.digraph import PathWitness
from .bounds import BoundTable


class Outcome(str, Enum):
    """Which side of the dichotomy an instance lands on."""

    LONG_PATH = "LongPath"
    SMALL_SUBGRAPH = "SmallSubgraph"


@dataclass(frozen=True)
class ClaimCheck:
    """Result of one structural claim check.

    ``asserted`` is False when the claim's hypotheses do not hold for the
    instance, so the result is recorded but must not fail a run.
    """

    claim: str
    holds: bool
    counterwitness: tuple[tuple[int, ...], ...] | None = None
    asserted: bool = True

    @property
    def failed(self) -> bool:
        return self.asserted and not self.holds


@dataclass(frozen=True)
class DichotomyReport:
    """Outcome of the dichotomy analysis with every witness set in input ids.

    ``best_path`` is an exact longest path of the input. For the
    SmallSubgraph outcome ``proof_path`` is the maximum path of the reduced
    digraph with maximum cycle bound, ``pivot`` is the vertex just before the
    cycle on it, and ``a_set``/``b_set``/``b_minus_set`` split its
    out-neighbourhood between the path prefix and the cycle.
    """

    delta: int
    ell: int
    best_path: PathWitness
    outcome: Outcome
    reduced_vertices: tuple[int, ...] = ()
    reduced_ell: int | None = None
    proof_path: PathWitness | None = None
    cycle_bound: int | None = None
    a_index: int | None = None
    pivot: int | None = None
    pivot_neighbours: tuple[int, ...] = ()
    a_set: tuple[int, ...] = ()
    b_set: tuple[int, ...] = ()
    b_minus_set: tuple[int, ...] = ()
    s_vertices: tuple[int, ...] = ()
    s_min_outdeg: int | None = None
    s_min_outdeg_reduced: int | None = None
    claims: tuple[ClaimCheck, ...] = ()

    def violations(self) -> list[str]:
        """Report invariants that do not hold; empty for a valid report."""
        problems: list[str] = []
        long_path = self.ell >= 2 * self.delta
        if long_path != (self.outcome is Outcome.LONG_PATH):
            problems.append(f"outcome {self.outcome.value} disagrees with ell={self.ell}")
        if self.best_path.length != self.ell:
            problems.append("best path length differs from ell")

        if self.outcome is Outcome.SMALL_SUBGRAPH:
            if len(self.s_vertices) > self.delta:
                problems.append(f"|S|={len(self.s_vertices)} exceeds delta={self.delta}")
            if self.s_min_outdeg is None or self.s_min_outdeg < 2 * self.delta - self.ell:
                problems.append(
                    f"min out-degree of S {self.s_min_outdeg} below 2δ−ℓ={2 * self.delta - self.ell}"
                )
            if set(self.a_set) | set(self.b_set) != set(self.pivot_neighbours):
                problems.append("A ∪ B differs from the pivot's out-neighbourhood")
            if len(self.a_set) + len(self.b_set) != self.delta:
                problems.append("|A| + |B| differs from delta")
            if len(self.b_minus_set) != len(self.b_set):
                problems.append("|B⁻| differs from |B|")

        problems.extend(f"claim {check.claim} failed" for check in self.claims if check.failed)
        return problems

    def to_dict(self) -> JSONDict:
        data: JSONDict = {
            "delta": self.delta,
            "ell": self.ell,
            "outcome": self.outcome.value,
            "best_path": list(self.best_path.vertices),
            "claims": [
                {
                    "claim": check.claim,
                    "holds": check.holds,
                    "asserted": check.asserted,
                    "counterwitness": (
                        [list(part) for part in check.counterwitness]
                        if check.counterwitness is not None
                        else None
                    ),
                }
                for check in self.claims
            ],
        }
        if self.outcome is Outcome.SMALL_SUBGRAPH:
            data.update(
                {
                    "reduced_vertices": list(self.reduced_vertices),
                    "reduced_ell": self.reduced_ell,
                    "proof_path": list(self.proof_path.vertices) if self.proof_path else None,
                    "cycle_bound": self.cycle_bound,
                    "a_index": self.a_index,
                    "pivot": self.pivot,
                    "A": list(self.a_set),
                    "B": list(self.b_set),
                    "B_minus": list(self.b_minus_set),
                    "S": list(self.s_vertices),
                    "S_min_outdeg": self.s_min_outdeg,
                    "S_min_outdeg_reduced": self.s_min_outdeg_reduced,
                }
            )
        return data


class Verdict(str, Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class BoundVerdict:
    """One proven bound checked against the exact values of an instance."""

    name: str
    bound: Fraction | int | None
    verdict: Verdict


@dataclass(frozen=True)
class PathBoundsReport:
    """Exact ℓ, girth and δ⁺ of an instance with every bound evaluated.

    ``verdicts`` hold proven statements; ``probes`` hold open conjectures and
    are reported, never asserted.
    """

    n: int
    m: int
    delta: int
    girth: int | None
    ell: int
    oriented: bool
    bounds: BoundTable
    verdicts: tuple[BoundVerdict, ...]
    probes: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(verdict.verdict is not Verdict.VIOLATED for verdict in self.verdicts)

    def verdict(self, name: str) -> Verdict:
        for entry in self.verdicts:
            if entry.name == name:
                return entry.verdict
        raise KeyError(name)

    def to_dict(self) -> JSONDict:
        return {
            "n": self.n,
            "m": self.m,
            "delta": self.delta,
            "girth": self.girth,
            "ell": self.ell,
            "oriented": self.oriented,
            "bounds": {
                entry.name: {"bound": entry.bound, "verdict": entry.verdict.value}
                for entry in self.verdicts
            },
            "bound_table": self.bounds.to_dict(),
            "conjecture_probes": dict(self.probes),
        }
