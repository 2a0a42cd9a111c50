"""girthpath - girth, long paths and out-degree in digraphs, made executable."""

__version__ = "0.1.0"

from .core import GirthPathError, load_config
from .graph import Digraph, girth
from .main import main as run
from .solvers import SolverLimits, longest_path_exact

__all__ = [
    "Digraph",
    "GirthPathError",
    "SolverLimits",
    "girth",
    "load_config",
    "longest_path_exact",
    "run",
]
