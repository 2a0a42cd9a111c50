"""Closed-form path and cycle bounds in terms of n, δ and girth."""

import math
from dataclasses import dataclass
from fractions import Fraction

from ..core.errors import PreconditionError
from ..core.types import JSONDict

# Proven for oriented graphs of girth at least 4
GIRTH4_FACTOR = Fraction(16535, 10000)
# Minimum out-degree ratio forcing a directed triangle in oriented graphs
TRIANGLE_FACTOR = Fraction(3465, 10000)
# Offset in the large-girth bound; defined from this girth on
LARGE_GIRTH_MIN = 74


@dataclass(frozen=True)
class BoundTable:
    """Every closed-form bound evaluated for one (n, δ, g).

    ``girth`` is None for infinite girth. Bounds that are undefined for the
    given girth are None.
    """

    n: int
    delta: int
    girth: int | None
    girth_path_conjecture: int | None
    girth_path_bound: Fraction
    oriented_path_bound: Fraction
    girth4_path_bound: Fraction
    large_girth_path_bound: Fraction | None
    short_cycle_bound: int
    triangle_threshold: Fraction
    caccetta_haggkvist_path_bound: Fraction
    caccetta_haggkvist_cycle: int | None

    def to_dict(self) -> JSONDict:
        return {
            "n": self.n,
            "delta": self.delta,
            "girth": self.girth,
            "girth_path_conjecture": self.girth_path_conjecture,
            "girth_path_bound": self.girth_path_bound,
            "oriented_path_bound": self.oriented_path_bound,
            "girth4_path_bound": self.girth4_path_bound,
            "large_girth_path_bound": self.large_girth_path_bound,
            "short_cycle_bound": self.short_cycle_bound,
            "triangle_threshold": self.triangle_threshold,
            "caccetta_haggkvist_path_bound": self.caccetta_haggkvist_path_bound,
            "caccetta_haggkvist_cycle": self.caccetta_haggkvist_cycle,
        }


def _finite_girth(g: int | float | None) -> int | None:
    if g is None or (isinstance(g, float) and math.isinf(g)):
        return None
    if int(g) != g or g < 2:
        raise PreconditionError(f"Girth must be an integer >= 2 or infinite, got {g}")
    return int(g)


def bound_table(n: int, delta: int, g: int | float | None) -> BoundTable:
    """Evaluate every bound for ``n`` vertices, minimum out-degree ``delta`` and girth ``g``.

    ``g`` may be None or ``math.inf`` for acyclic digraphs; the girth-dependent
    path bounds then take their limit 2δ and the δ(g − 1) conjecture is absent.

    Raises:
        PreconditionError: If n < 1, delta < 0 or g is not a valid girth
    """
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    if delta < 0:
        raise PreconditionError(f"delta must be non-negative, got {delta}")
    girth = _finite_girth(g)

    if girth is None:
        conjecture = None
        girth_path = Fraction(2 * delta)
        large_girth: Fraction | None = Fraction(2 * delta)
        ch_path = Fraction(2 * delta)
    else:
        conjecture = delta * (girth - 1)
        girth_path = Fraction(2 * delta * (girth - 1), girth)
        large_girth = (
            (2 - Fraction(1, girth - 73)) * delta if girth >= LARGE_GIRTH_MIN else None
        )
        ch_path = (2 - Fraction(1, girth)) * delta

    return BoundTable(
        n=n,
        delta=delta,
        girth=girth,
        girth_path_conjecture=conjecture,
        girth_path_bound=girth_path,
        oriented_path_bound=Fraction(3 * delta, 2),
        girth4_path_bound=GIRTH4_FACTOR * delta,
        large_girth_path_bound=large_girth,
        short_cycle_bound=math.ceil(Fraction(2 * n, delta + 1)),
        triangle_threshold=TRIANGLE_FACTOR * n,
        caccetta_haggkvist_path_bound=ch_path,
        caccetta_haggkvist_cycle=math.ceil(Fraction(n, delta)) if delta else None,
    )
