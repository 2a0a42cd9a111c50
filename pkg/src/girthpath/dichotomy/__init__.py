"""Long-path/dense-subgraph dichotomy, its structural claims and path bounds."""

from .analysis import (
    ProofTrace,
    analyze_dichotomy,
    reduce_to_proof_environment,
    select_proof_path,
    trace_proof,
    verify_path_bounds,
)
from .bounds import BoundTable, bound_table
from .claims import (
    check_no_two_long_cycles,
    check_outneighbours_on_path,
    check_predecessors_stay_on_cycle,
)
from .schemas import (
    BoundVerdict,
    ClaimCheck,
    DichotomyReport,
    Outcome,
    PathBoundsReport,
    Verdict,
)

__all__ = [
    "BoundTable",
    "BoundVerdict",
    "ClaimCheck",
    "DichotomyReport",
    "Outcome",
    "PathBoundsReport",
    "ProofTrace",
    "Verdict",
    "analyze_dichotomy",
    "bound_table",
    "check_no_two_long_cycles",
    "check_outneighbours_on_path",
    "check_predecessors_stay_on_cycle",
    "reduce_to_proof_environment",
    "select_proof_path",
    "trace_proof",
    "verify_path_bounds",
]
