"""Tests for the end-to-end long-path driver."""

import math
from fractions import Fraction

import pytest

from girthpath.core.errors import NotRegularError
from girthpath.partition import c_prime_for_parts, find_long_path, verify_certificate
from tests.factories import circulant, directed_cycle


@pytest.fixture
def dense_circulant():
    return circulant(64, tuple(range(1, 17)))


class TestFindLongPath:
    """Test parameter choice, fallbacks and provenance."""

    def test_directed_cycle_falls_back(self):
        run = find_long_path(directed_cycle(7), 1)

        assert run.fell_back
        assert run.provenance.t == 1
        assert run.provenance.fallback_reason == "d=1 <= 1"
        assert run.provenance.ratio is None
        assert run.stitch.path.length == 6
        assert run.certificate is None

    def test_no_default_c_prime(self, dense_circulant):
        run = find_long_path(dense_circulant, 1)

        assert run.fell_back
        assert run.provenance.fallback_reason == "no c' satisfies the inequality"
        assert run.provenance.c_prime is None
        assert run.stitch.path.length == 63

    def test_inequality_required(self, dense_circulant):
        run = find_long_path(dense_circulant, 1, c_prime=c_prime_for_parts(16, 2))

        assert run.fell_back
        assert run.provenance.fallback_reason == "inequality fails"
        assert run.provenance.inequality_value > 1

    def test_single_part_choice(self, dense_circulant):
        run = find_long_path(dense_circulant, 1, c_prime=c_prime_for_parts(16, 1))

        assert run.provenance.fallback_reason == "t=1 <= 1"

    def test_two_parts_without_inequality(self, dense_circulant):
        c_prime = c_prime_for_parts(16, 2)

        run = find_long_path(
            dense_circulant, 1, c_prime=c_prime, seed=3, require_inequality=False
        )

        assert not run.fell_back
        assert run.certificate is not None
        assert verify_certificate(dense_circulant, run.certificate) == []
        assert run.provenance.t == 2
        assert run.provenance.c == c_prime / 2
        assert run.provenance.achieved == run.stitch.path.length
        assert run.stitch.path.length >= run.stitch.guaranteed_floor == 7
        assert run.stitch.target == pytest.approx(
            float(c_prime) / 2 * 16 * 4 / math.log(16)
        )

    def test_seeded_runs_repeat(self, dense_circulant):
        kwargs = {
            "c_prime": c_prime_for_parts(16, 2),
            "seed": 9,
            "require_inequality": False,
        }

        assert find_long_path(dense_circulant, 1, **kwargs) == find_long_path(
            dense_circulant, 1, **kwargs
        )

    def test_rejects_irregular(self, d22):
        with pytest.raises(NotRegularError):
            find_long_path(d22, 1)

    def test_to_dict(self, dense_circulant):
        c_prime = c_prime_for_parts(16, 2)
        run = find_long_path(
            dense_circulant, Fraction(1), c_prime=c_prime, require_inequality=False
        )

        document = run.to_dict()

        assert document["provenance"]["t"] == 2
        assert document["provenance"]["c"] == c_prime / 2
        assert document["provenance"]["fallback_reason"] is None
        assert document["stitch"]["length"] == run.stitch.path.length
