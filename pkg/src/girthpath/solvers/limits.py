"""Size and budget limits for the exact solvers."""

from dataclasses import dataclass, replace

from ..core.errors import ConfigError, InstanceTooLargeError

_KEYS = {"dp": "max_dp_vertices", "bb": "max_bb_vertices", "budget": "node_budget"}


@dataclass(frozen=True)
class SolverLimits:
    """Scale limits: subset DP up to ``max_dp_vertices``, branch-and-bound
    up to ``max_bb_vertices`` with at most ``node_budget`` expansions."""

    max_dp_vertices: int = 22
    max_bb_vertices: int = 40
    node_budget: int = 100_000_000

    def __post_init__(self) -> None:
        if min(self.max_dp_vertices, self.max_bb_vertices, self.node_budget) <= 0:
            raise ValueError("Solver limits must be positive")
        if self.max_dp_vertices > self.max_bb_vertices:
            raise ValueError("max_dp_vertices cannot exceed max_bb_vertices")
        if self.max_bb_vertices > 62:
            raise ValueError("max_bb_vertices cannot exceed 62 (int64 bitmasks)")

    @classmethod
    def parse(cls, text: str, base: "SolverLimits | None" = None) -> "SolverLimits":
        """Parse ``dp=22,bb=40,budget=100000000``; missing keys keep ``base``.

        Raises:
            ConfigError: On unknown keys or non-integer values
        """
        limits = base or cls()
        updates: dict[str, int] = {}
        for item in text.split(","):
            item = item.strip()
            if not item:
                continue
            key, sep, value = item.partition("=")
            key = key.strip().lower()
            if not sep or key not in _KEYS:
                raise ConfigError(f"Unknown solver limit entry {item!r}")
            try:
                updates[_KEYS[key]] = int(value.strip())
            except ValueError as e:
                raise ConfigError(f"Solver limit {key} must be an integer, got {value!r}") from e
        try:
            return replace(limits, **updates)
        except ValueError as e:
            raise ConfigError(str(e)) from e

    def require_dp_scale(self, vertex_count: int) -> None:
        if vertex_count > self.max_dp_vertices:
            raise InstanceTooLargeError(
                f"{vertex_count} vertices exceed the enumeration limit of {self.max_dp_vertices}"
            )

    def require_bb_scale(self, vertex_count: int) -> None:
        if vertex_count > self.max_bb_vertices:
            raise InstanceTooLargeError(
                f"{vertex_count} vertices exceed the exact-solver limit of {self.max_bb_vertices}"
            )
