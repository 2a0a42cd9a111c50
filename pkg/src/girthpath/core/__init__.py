"""Core infrastructure: configuration, errors, manifests, file access."""

from .config import GirthPathConfig, load_config
from .errors import GirthPathError
from .manifest import RunManifest, build_manifest
from .serialization import dumps, to_jsonable
from .types import Arc, JSONDict, VertexSet

__all__ = [
    "Arc",
    "GirthPathConfig",
    "GirthPathError",
    "JSONDict",
    "RunManifest",
    "VertexSet",
    "build_manifest",
    "dumps",
    "load_config",
    "to_jsonable",
]
