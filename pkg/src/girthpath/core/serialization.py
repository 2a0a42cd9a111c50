"""JSON conversion for reports, certificates and manifests."""

import dataclasses
import json
import math
from enum import Enum
from fractions import Fraction
from typing import Any


def to_jsonable(value: Any) -> Any:
    """Convert report objects into plain JSON values.

    Fractions become floats, sets become sorted lists, enums their values and
    infinite floats ``None``.
    """
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        if hasattr(value, "to_dict"):
            return to_jsonable(value.to_dict())
        return {
            f.name: to_jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)
        }
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else float(value)
    if isinstance(value, float):
        return None if math.isinf(value) or math.isnan(value) else value
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(item) for item in value)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    return str(value)


def dumps(value: Any) -> str:
    """Stable, indented JSON text with a trailing newline."""
    return json.dumps(to_jsonable(value), indent=2, sort_keys=True) + "\n"
