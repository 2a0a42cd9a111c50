"""Tests for the closed-form bound table."""

import math
from fractions import Fraction

import pytest

from girthpath.core.errors import PreconditionError
from girthpath.dichotomy import bound_table


class TestBoundTable:
    """Test bound evaluation."""

    def test_short_cycle_bound_for_infinite_girth(self):
        """⌈2n/(δ+1)⌉ with n = 10, δ = 3."""
        table = bound_table(10, 3, math.inf)

        assert table.short_cycle_bound == 5
        assert table.girth is None
        assert table.girth_path_conjecture is None

    def test_girth_path_bound(self):
        """2δ(1 − 1/g) with δ = 10, g = 5."""
        assert bound_table(50, 10, 5).girth_path_bound == 16

    def test_oriented_path_bound(self):
        assert bound_table(50, 10, 3).oriented_path_bound == 15

    def test_girth4_path_bound(self):
        assert bound_table(30000, 10000, 4).girth4_path_bound == 16535

    def test_triangle_threshold(self):
        assert bound_table(10000, 1, 3).triangle_threshold == 3465

    def test_conjectured_bound(self):
        """δ(g − 1) for finite girth."""
        assert bound_table(20, 2, 4).girth_path_conjecture == 6

    def test_large_girth_bound_starts_at_74(self):
        assert bound_table(200, 3, 73).large_girth_path_bound is None
        assert bound_table(200, 3, 74).large_girth_path_bound == 3
        assert bound_table(200, 27, 100).large_girth_path_bound == 53

    def test_caccetta_haggkvist_values(self):
        table = bound_table(10, 3, 4)

        assert table.caccetta_haggkvist_cycle == 4
        assert table.caccetta_haggkvist_path_bound == Fraction(21, 4)
        assert bound_table(10, 0, None).caccetta_haggkvist_cycle is None

    def test_infinite_girth_limits(self):
        """Girth-dependent path bounds take their limit 2δ."""
        table = bound_table(8, 3, None)

        assert table.girth_path_bound == 6
        assert table.large_girth_path_bound == 6
        assert table.caccetta_haggkvist_path_bound == 6

    @pytest.mark.parametrize(
        "n, delta, g",
        [(0, 1, 3), (5, -1, 3), (5, 1, 1), (5, 1, 2.5)],
    )
    def test_invalid_arguments(self, n, delta, g):
        with pytest.raises(PreconditionError):
            bound_table(n, delta, g)

    def test_to_dict_keys(self):
        data = bound_table(10, 2, 3).to_dict()

        assert data["girth_path_bound"] == Fraction(8, 3)
        assert set(data) >= {"short_cycle_bound", "triangle_threshold", "girth4_path_bound"}
