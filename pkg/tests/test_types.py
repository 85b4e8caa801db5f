# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Tests for the matrix helpers and rational conversions."""

from fractions import Fraction

import pytest

from crystalline.invariants import InconsistentInvariantsError
from crystalline.invariants._types import (
    anti_diagonal_sum,
    as_integer,
    entry,
    format_rational,
    make_matrix,
    parse_rational,
    transpose,
    zero_matrix,
)

# Set up some constants for reusability
MATRIX = make_matrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])


def test_make_matrix_coerces_rows() -> None:
    """Test that rows are stored as nested tuples of ints."""
    assert make_matrix([[1, 0], (0, True)]) == ((1, 0), (0, 1))


def test_make_matrix_rejects_non_square() -> None:
    """Test that non-square and empty matrices are rejected."""
    with pytest.raises(ValueError):
        make_matrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        make_matrix([])


def test_zero_matrix() -> None:
    """Test the zero matrix."""
    assert zero_matrix(2) == ((0, 0), (0, 0))


def test_entry_outside_is_zero() -> None:
    """Test that reading outside the matrix gives zero."""
    assert entry(MATRIX, 1, 2) == 6
    assert entry(MATRIX, -1, 0) == 0
    assert entry(MATRIX, 0, 3) == 0


def test_transpose() -> None:
    """Test transposition."""
    assert transpose(MATRIX) == ((1, 4, 7), (2, 5, 8), (3, 6, 9))


def test_anti_diagonal_sum() -> None:
    """Test the sums over i + j = k."""
    assert [anti_diagonal_sum(MATRIX, k) for k in range(5)] == [1, 6, 15, 14, 9]


def test_as_integer() -> None:
    """Test that only integral rationals are accepted."""
    assert as_integer(Fraction(12, 4), "x") == 3
    with pytest.raises(InconsistentInvariantsError, match="x = 1/2"):
        as_integer(Fraction(1, 2), "x")


def test_parse_rational() -> None:
    """Test parsing of exact rationals and rejection of floats."""
    assert parse_rational("3/2") == Fraction(3, 2)
    assert parse_rational(4) == Fraction(4)
    assert parse_rational(" -1/3 ") == Fraction(-1, 3)
    with pytest.raises(ValueError):
        parse_rational(0.5)
    with pytest.raises(ValueError):
        parse_rational("one half")


def test_format_rational() -> None:
    """Test formatting of rationals."""
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(-3) == "-3"
