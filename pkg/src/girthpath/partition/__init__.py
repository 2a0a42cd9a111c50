"""Balanced partitions by permutation resampling and the stitched long path."""

from .driver import find_long_path
from .resampling import (
    bad_event,
    c_prime_for_parts,
    check_cd_regular,
    cross_degrees,
    default_c_prime,
    lll_feasibility,
    partition_lll,
    verify_certificate,
)
from .schemas import (
    Feasibility,
    LllConfig,
    LongPathRun,
    PartitionCertificate,
    RunProvenance,
    StitchResult,
)
from .stitching import stitch_long_path

__all__ = [
    "Feasibility",
    "LllConfig",
    "LongPathRun",
    "PartitionCertificate",
    "RunProvenance",
    "StitchResult",
    "bad_event",
    "c_prime_for_parts",
    "check_cd_regular",
    "cross_degrees",
    "default_c_prime",
    "find_long_path",
    "lll_feasibility",
    "partition_lll",
    "stitch_long_path",
    "verify_certificate",
]
