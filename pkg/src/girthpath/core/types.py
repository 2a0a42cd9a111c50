"""Common types and type aliases for girthpath."""

from typing import Any, TypeAlias

# Common type aliases
JSONDict: TypeAlias = dict[str, Any]
Arc: TypeAlias = tuple[int, int]
VertexSet: TypeAlias = frozenset[int]
