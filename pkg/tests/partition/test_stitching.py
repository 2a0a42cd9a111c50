"""Tests for stitching per-part maximal paths into one path."""

from fractions import Fraction

import pytest

from girthpath.core.errors import InvalidPartitionError
from girthpath.graph import Digraph
from girthpath.partition import (
    LllConfig,
    c_prime_for_parts,
    partition_lll,
    stitch_long_path,
)
from tests.factories import circulant, directed_cycle


class TestStitchLongPath:
    """Test the greedy stitch and its guaranteed floor."""

    def test_cycle_single_part(self):
        result = stitch_long_path(directed_cycle(6), [range(6)])

        assert result.path.vertices == (0, 1, 2, 3, 4, 5)
        assert result.path.length == 5
        assert result.guaranteed_floor == 5
        assert result.girth == 6
        assert result.t == 1
        assert result.connectors_used == ()
        assert result.problems() == []

    def test_known_girth_is_trusted(self):
        result = stitch_long_path(directed_cycle(6), [range(6)], known_girth=3)

        assert result.guaranteed_floor == 2
        assert result.girth == 3

    def test_acyclic_floor(self, path_digraph):
        result = stitch_long_path(path_digraph, [[0, 1], [2, 3]])

        assert result.girth is None
        assert result.guaranteed_floor == 1
        assert result.connectors_used == ((1, 2),)
        assert result.path.length == 3

    def test_certified_partition(self):
        """Girth 4 and two parts give a floor of 2·3 + 1."""
        digraph = circulant(64, tuple(range(1, 17)))
        cfg = LllConfig(Fraction(1), 16, c_prime_for_parts(16, 2), seed=5)
        certificate = partition_lll(digraph, cfg)

        result = stitch_long_path(digraph, certificate.parts)

        assert result.girth == 4
        assert result.guaranteed_floor == 7
        assert result.path.length >= 7
        assert result.path.check(digraph) == []
        assert result.problems() == []

        parts = [set(part) for part in certificate.parts]
        start = 0
        for index, length in enumerate(result.segment_lengths):
            segment = result.path.vertices[start : start + length + 1]
            assert set(segment) <= parts[index]
            assert length >= result.girth - 1
            start += length + 1

    def test_to_dict(self, triangle):
        document = stitch_long_path(triangle, [range(3)]).to_dict()

        assert document["length"] == 2
        assert document["path"] == [0, 1, 2]
        assert document["guaranteed_floor"] == 2
        assert document["target"] is None

    @pytest.mark.parametrize(
        "parts,message",
        [
            ([], "no parts"),
            ([[0, 1], []], "Part 2 is empty"),
            ([[0, 1], [1, 2]], "overlaps"),
        ],
    )
    def test_invalid_parts(self, triangle, parts, message):
        with pytest.raises(InvalidPartitionError, match=message):
            stitch_long_path(triangle, parts)

    def test_unreachable_next_part(self, path_digraph):
        with pytest.raises(InvalidPartitionError, match="no out-neighbour in part 2"):
            stitch_long_path(path_digraph, [[0, 1], [3]])

    def test_part_without_inner_arcs_falls_short_of_the_floor(self):
        """Part {0} has no arc inside it, so its segment is a single vertex."""
        with pytest.raises(InvalidPartitionError, match="below the floor 7: segment 1 has length 0"):
            stitch_long_path(directed_cycle(4), [[0], [1, 2, 3]])

    def test_sink_inside_a_single_part(self):
        """0 -> 1 is a dead end while the triangle 2 -> 3 -> 4 sets g = 3."""
        digraph = Digraph.from_arcs(5, [(0, 1), (2, 3), (3, 4), (4, 2)])

        with pytest.raises(InvalidPartitionError, match="below the floor 2"):
            stitch_long_path(digraph, [range(5)])
