"""Run manifests embedded in every JSON artifact."""

import hashlib
import os
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Any

from .types import JSONDict

UTC = timezone.utc  # alias of datetime.UTC (3.11+)


def sha256_hex(text: str) -> str:
    """SHA-256 hex digest of UTF-8 text."""
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def utc_timestamp() -> str:
    """UTC ISO-8601 timestamp, pinned by SOURCE_DATE_EPOCH when set."""
    epoch = os.getenv("SOURCE_DATE_EPOCH")
    if epoch is not None and epoch.strip().isdigit():
        moment = datetime.fromtimestamp(int(epoch), tz=UTC)
    else:
        moment = datetime.now(tz=UTC)
    return moment.replace(microsecond=0).isoformat().replace("+00:00", "Z")


@dataclass(frozen=True)
class RunManifest:
    """Provenance of a single command run."""

    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    seed: int | None = None
    tool_version: str = ""
    instance_digest: str | None = None
    timestamp: str = ""

    def to_dict(self) -> JSONDict:
        return asdict(self)


def build_manifest(
    command: str,
    parameters: dict[str, Any],
    seed: int | None = None,
    canonical_instance: str | None = None,
) -> RunManifest:
    """Create a manifest for a command run.

    Args:
        command: Subcommand name, e.g. ``analyze``
        parameters: Every flag that influenced the result
        seed: Seed used, if any
        canonical_instance: Canonical edge-list text of the instance, if any

    Returns:
        RunManifest with version, digest and timestamp filled in
    """
    from .. import __version__

    digest = sha256_hex(canonical_instance) if canonical_instance is not None else None
    return RunManifest(
        command=command,
        parameters={key: _plain(value) for key, value in sorted(parameters.items())},
        seed=seed,
        tool_version=__version__,
        instance_digest=digest,
        timestamp=utc_timestamp(),
    )


def _plain(value: Any) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    return str(value)
