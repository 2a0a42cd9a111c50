"""Configuration loading and management for girthpath."""

import os
from fractions import Fraction
from pathlib import Path
from typing import TYPE_CHECKING, cast

import yaml

from .errors import ConfigError
from .types import JSONDict

if TYPE_CHECKING:
    from ..solvers.limits import SolverLimits

LIMITS_ENV_VAR = "GIRTHPATH_LIMITS"


class GirthPathConfig:
    """Configuration class for girthpath runs."""

    def __init__(self, config_data: JSONDict, limits_override: str | None = None) -> None:
        """Initialize configuration from config data.

        Args:
            config_data: Parsed configuration dictionary
            limits_override: Optional ``dp=..,bb=..,budget=..`` string that wins
                over the ``solver`` section
        """
        self._config = config_data
        self._limits_override = limits_override

    def _section(self, name: str) -> JSONDict:
        section = self._config.get(name) or {}
        if not isinstance(section, dict):
            raise ConfigError(f"Config section '{name}' must be a mapping")
        return section

    @property
    def solver_limits(self) -> "SolverLimits":
        """Exact-solver limits, with the environment override applied."""
        from ..solvers.limits import SolverLimits

        solver = self._section("solver")
        try:
            limits = SolverLimits(
                max_dp_vertices=int(solver.get("max_dp_vertices", 22)),
                max_bb_vertices=int(solver.get("max_bb_vertices", 40)),
                node_budget=int(solver.get("node_budget", 100_000_000)),
            )
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid solver limits in config: {e}") from e

        if self._limits_override:
            limits = SolverLimits.parse(self._limits_override, base=limits)
        return limits

    @property
    def partition_C(self) -> Fraction:
        """In-degree constant C of (C, d)-regularity."""
        return Fraction(str(self._section("partition").get("C", 2)))

    @property
    def partition_d(self) -> int | None:
        """Out-degree floor d; None means use the digraph's minimum out-degree."""
        value = self._section("partition").get("d")
        return None if value is None else int(value)

    @property
    def partition_c_prime(self) -> Fraction | None:
        """Partition constant c'; None means pick it from the default grid."""
        value = self._section("partition").get("c_prime")
        return None if value is None else Fraction(str(value))

    @property
    def partition_seed(self) -> int:
        """Seed for the resampling permutations."""
        return int(self._section("partition").get("seed", 0))

    @property
    def max_resample_rounds(self) -> int:
        """Round cap for the resampling loop."""
        return int(self._section("partition").get("max_resample_rounds", 1_000_000))

    @property
    def sweep_workers(self) -> int:
        """Number of worker processes used by verification suites."""
        return max(1, int(self._section("sweeps").get("workers", 1)))

    @property
    def sweep_seed(self) -> int:
        """Base seed of the verification corpora."""
        return int(self._section("sweeps").get("seed", 0))

    @property
    def log_level(self) -> str:
        """Root logging level name."""
        return str(self._section("logging").get("level", "WARNING")).upper()


def load_config(config_path: Path | None = None) -> GirthPathConfig:
    """Load configuration from YAML file.

    Args:
        config_path: Path to config file. If None, looks for config.yaml in the
            current working directory.

    Returns:
        GirthPathConfig instance with loaded settings

    Raises:
        yaml.YAMLError: If config file has invalid YAML syntax
    """
    limits_override = os.getenv(LIMITS_ENV_VAR) or None

    if config_path is None:
        config_path = Path.cwd() / "config.yaml"

    if not config_path.exists():
        # Built-in defaults, still honouring the environment limits
        return GirthPathConfig({}, limits_override=limits_override)

    try:
        with open(config_path, encoding="utf-8") as f:
            config_data = cast(JSONDict, yaml.safe_load(f) or {})
    except yaml.YAMLError as e:
        raise yaml.YAMLError(f"Invalid YAML in config file {config_path}: {e}") from e

    if not isinstance(config_data, dict):
        raise ConfigError(f"Config file {config_path} must contain a mapping")

    return GirthPathConfig(config_data, limits_override=limits_override)
