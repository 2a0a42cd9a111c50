"""Test suite for girthpath."""
