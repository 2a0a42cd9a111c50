"""Lift constructions, the counterexample family and random generators."""

from .generator import generate
from .lifts import build_counterexample, complete_digraph, counterexample_params_for_girth, k_lift
from .schemas import CounterexampleParams, GenSpec, GraphKind, LiftSpec

__all__ = [
    "CounterexampleParams",
    "GenSpec",
    "GraphKind",
    "LiftSpec",
    "build_counterexample",
    "complete_digraph",
    "counterexample_params_for_girth",
    "generate",
    "k_lift",
]
