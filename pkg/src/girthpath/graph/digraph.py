"""Immutable directed graph, witnesses and basic degree primitives."""

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

from ..core.errors import (
    EmptyDigraphError,
    InsufficientOutDegreeError,
    InvalidDigraphError,
)
from ..core.types import Arc


@dataclass(frozen=True)
class Digraph:
    """Directed graph on vertices ``0 .. vertex_count - 1``.

    Arcs are kept exactly as supplied so that :func:`validate` can point at
    self-loops, duplicates and out-of-range ids in raw input. Use
    :meth:`from_arcs` to build a checked instance.
    """

    vertex_count: int
    arcs: tuple[Arc, ...] = ()

    @classmethod
    def from_arcs(cls, vertex_count: int, arcs: Iterable[Arc]) -> "Digraph":
        """Build a validated digraph with arcs stored in sorted order.

        Raises:
            InvalidDigraphError: If the arcs violate a digraph invariant
        """
        digraph = cls(vertex_count, tuple((int(u), int(v)) for u, v in arcs))
        report = validate(digraph)
        if not report.ok:
            raise InvalidDigraphError(report.summary())
        return cls(vertex_count, tuple(sorted(digraph.arcs)))

    @classmethod
    def empty(cls, vertex_count: int = 0) -> "Digraph":
        return cls(vertex_count, ())

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @cached_property
    def arc_set(self) -> frozenset[Arc]:
        return frozenset(self.arcs)

    @cached_property
    def out_neighbours(self) -> tuple[tuple[int, ...], ...]:
        """Sorted out-neighbour tuple per vertex."""
        buckets: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.arcs:
            buckets[u].add(v)
        return tuple(tuple(sorted(bucket)) for bucket in buckets)

    @cached_property
    def in_neighbours(self) -> tuple[tuple[int, ...], ...]:
        """Sorted in-neighbour tuple per vertex."""
        buckets: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.arcs:
            buckets[v].add(u)
        return tuple(tuple(sorted(bucket)) for bucket in buckets)

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        """Out-neighbourhoods as integer bitmasks."""
        return tuple(_to_mask(heads) for heads in self.out_neighbours)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        """In-neighbourhoods as integer bitmasks."""
        return tuple(_to_mask(tails) for tails in self.in_neighbours)

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self.arc_set

    def out_degree(self, vertex: int) -> int:
        return len(self.out_neighbours[vertex])

    def in_degree(self, vertex: int) -> int:
        return len(self.in_neighbours[vertex])

    def out_degree_into(self, vertex: int, part: Iterable[int]) -> int:
        """d⁺(v, S): number of out-neighbours of ``vertex`` inside ``part``."""
        members = part if isinstance(part, (set, frozenset)) else set(part)
        return sum(1 for head in self.out_neighbours[vertex] if head in members)

    def check_vertex(self, vertex: int) -> None:
        if not 0 <= vertex < self.vertex_count:
            raise InvalidDigraphError(
                f"Vertex {vertex} out of range for digraph on {self.vertex_count} vertices"
            )


def _to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for vertex in vertices:
        mask |= 1 << vertex
    return mask


@dataclass(frozen=True)
class Violation:
    """One broken digraph invariant with the arc that breaks it."""

    kind: str
    arc: Arc | None
    message: str


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate`; violations are data, not errors."""

    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(violation.message for violation in self.violations)


def validate(digraph: Digraph) -> ValidationReport:
    """Check the digraph invariants and list every violation found."""
    violations: list[Violation] = []
    n = digraph.vertex_count

    if n < 0:
        violations.append(
            Violation("negative-vertex-count", None, f"Vertex count {n} is negative")
        )

    counts = Counter(digraph.arcs)
    reported: set[Arc] = set()
    for arc in digraph.arcs:
        tail, head = arc
        if not (0 <= tail < n and 0 <= head < n):
            violations.append(
                Violation(
                    "vertex-out-of-range",
                    arc,
                    f"Arc {tail}->{head} uses a vertex outside [0, {n})",
                )
            )
        if tail == head:
            violations.append(
                Violation("self-loop", arc, f"Arc {tail}->{head} is a self-loop")
            )
        if counts[arc] > 1 and arc not in reported:
            reported.add(arc)
            violations.append(
                Violation(
                    "duplicate-arc",
                    arc,
                    f"Arc {tail}->{head} listed {counts[arc]} times",
                )
            )

    return ValidationReport(tuple(violations))


def is_oriented(digraph: Digraph) -> bool:
    """True iff no pair of opposite arcs is present."""
    arc_set = digraph.arc_set
    return not any((head, tail) in arc_set for tail, head in arc_set)


@dataclass(frozen=True)
class DegreeProfile:
    """Extreme out- and in-degrees of a digraph."""

    min_out: int
    max_out: int
    min_in: int
    max_in: int


def degree_profile(digraph: Digraph) -> DegreeProfile:
    """Exact min/max of out- and in-degrees.

    Raises:
        EmptyDigraphError: If the digraph has no vertices
    """
    if digraph.vertex_count == 0:
        raise EmptyDigraphError("Degree profile is undefined for the empty digraph")
    outs = [len(heads) for heads in digraph.out_neighbours]
    ins = [len(tails) for tails in digraph.in_neighbours]
    return DegreeProfile(min(outs), max(outs), min(ins), max(ins))


def min_out_degree(digraph: Digraph) -> int:
    """δ⁺(D); zero for the empty digraph."""
    if digraph.vertex_count == 0:
        return 0
    return min(len(heads) for heads in digraph.out_neighbours)


def prune_to_exact_outdegree(digraph: Digraph, delta: int) -> Digraph:
    """Keep, per vertex, the ``delta`` out-arcs with the smallest head ids.

    Raises:
        InsufficientOutDegreeError: If some vertex has fewer than ``delta`` out-arcs
    """
    if delta < 0:
        raise InsufficientOutDegreeError(f"Out-degree target must be non-negative, got {delta}")
    floor = min_out_degree(digraph)
    if digraph.vertex_count and floor < delta:
        raise InsufficientOutDegreeError(
            f"Minimum out-degree {floor} is below the requested {delta}"
        )
    arcs = [
        (tail, head)
        for tail, heads in enumerate(digraph.out_neighbours)
        for head in heads[:delta]
    ]
    return Digraph(digraph.vertex_count, tuple(arcs))


@dataclass(frozen=True)
class PathWitness:
    """A directed simple path given by its vertex sequence."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        """Number of arcs."""
        return len(self.vertices) - 1

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]

    def check(self, digraph: Digraph) -> list[str]:
        """List the invariants this path breaks in ``digraph``."""
        problems: list[str] = []
        if not self.vertices:
            problems.append("path has no vertices")
        if len(set(self.vertices)) != len(self.vertices):
            problems.append("path repeats a vertex")
        for tail, head in zip(self.vertices, self.vertices[1:], strict=False):
            if not digraph.has_arc(tail, head):
                problems.append(f"missing arc {tail}->{head}")
        return problems


@dataclass(frozen=True)
class CycleWitness:
    """A directed cycle given by its vertex sequence (closing arc implied)."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        """Number of arcs, equal to the number of vertices."""
        return len(self.vertices)

    def arcs(self) -> list[Arc]:
        closed = self.vertices + self.vertices[:1]
        return list(zip(closed, closed[1:], strict=False))

    def predecessor(self, vertex: int) -> int:
        """The vertex whose cycle arc enters ``vertex``."""
        index = self.vertices.index(vertex)
        return self.vertices[index - 1]

    def check(self, digraph: Digraph) -> list[str]:
        """List the invariants this cycle breaks in ``digraph``."""
        problems: list[str] = []
        if len(self.vertices) < 2:
            problems.append("cycle shorter than 2")
        if len(set(self.vertices)) != len(self.vertices):
            problems.append("cycle repeats a vertex")
        for tail, head in self.arcs():
            if not digraph.has_arc(tail, head):
                problems.append(f"missing arc {tail}->{head}")
        return problems


@dataclass(frozen=True)
class InducedSubgraph:
    """A relabelled induced subgraph with its id-remapping table."""

    digraph: Digraph
    vertices: tuple[int, ...] = field(default=())

    def to_original(self, local: int) -> int:
        return self.vertices[local]

    @cached_property
    def _local_ids(self) -> dict[int, int]:
        return {original: local for local, original in enumerate(self.vertices)}

    def to_local(self, original: int) -> int:
        return self._local_ids[original]

    def map_path(self, path: PathWitness) -> PathWitness:
        """Translate a path of the subgraph into original ids."""
        return PathWitness(tuple(self.vertices[v] for v in path.vertices))


def induced_subgraph(digraph: Digraph, vertices: Iterable[int]) -> InducedSubgraph:
    """Induced subgraph on ``vertices``, relabelled to ``0 .. |S| - 1`` ascending.

    Raises:
        InvalidDigraphError: If a vertex id is out of range
    """
    chosen = sorted(set(vertices))
    for vertex in chosen:
        digraph.check_vertex(vertex)
    local = {original: index for index, original in enumerate(chosen)}
    arcs = tuple(
        (local[tail], local[head])
        for tail in chosen
        for head in digraph.out_neighbours[tail]
        if head in local
    )
    return InducedSubgraph(Digraph(len(chosen), arcs), tuple(chosen))
