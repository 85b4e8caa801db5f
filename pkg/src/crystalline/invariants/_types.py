# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Module to define the types shared by the invariant computations."""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from typing import TypeAlias

Matrix: TypeAlias = tuple[tuple[int, ...], ...]
"""Square integer matrix stored row-major and indexed as `matrix[i][j]`."""


class InconsistentInvariantsError(ValueError):
    """Supplied invariants violate an identity they are required to satisfy.

    This is raised for non-integral dimensions, negative domino numbers and
    failed equivalences. It derives from `ValueError` so callers catching
    invalid input keep working.
    """


def make_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    """Build a square integer matrix.

    Args:
        rows: The rows of the matrix.

    Returns:
        The matrix as nested tuples.

    Raises:
        ValueError: If the rows do not form a non-empty square matrix.
    """
    matrix = tuple(tuple(int(value) for value in row) for row in rows)
    if not matrix or any(len(row) != len(matrix) for row in matrix):
        raise ValueError("A matrix must be non-empty and square.")
    return matrix


def zero_matrix(size: int) -> Matrix:
    """Return the `size` x `size` zero matrix.

    Args:
        size: Number of rows and columns.

    Returns:
        The zero matrix.
    """
    return tuple((0,) * size for _ in range(size))


def entry(matrix: Matrix, i: int, j: int) -> int:
    """Read `matrix[i][j]`, treating every index outside the matrix as zero.

    Args:
        matrix: The matrix to read.
        i: Row index.
        j: Column index.

    Returns:
        The entry, or zero when `(i, j)` is out of range.
    """
    size = len(matrix)
    if 0 <= i < size and 0 <= j < size:
        return matrix[i][j]
    return 0


def transpose(matrix: Matrix) -> Matrix:
    """Return the transpose of a square matrix."""
    return tuple(zip(*matrix))


def anti_diagonal_sum(matrix: Matrix, k: int) -> int:
    """Return the sum of the entries `matrix[i][j]` with `i + j == k`."""
    return sum(entry(matrix, i, k - i) for i in range(k + 1))


def as_integer(value: Fraction | int, name: str) -> int:
    """Return an exact rational as an integer.

    Args:
        value: The value that must be integral.
        name: The name of the quantity (for error messages).

    Returns:
        The value as an `int`.

    Raises:
        InconsistentInvariantsError: If the value is not an integer.
    """
    value = Fraction(value)
    if value.denominator != 1:
        raise InconsistentInvariantsError(f"{name} = {value} is not an integer.")
    return value.numerator


def parse_rational(value: str | int | Fraction) -> Fraction:
    """Parse an exact rational from its JSON representation.

    Args:
        value: A fraction string such as `"3/2"`, an integer or a fraction.

    Returns:
        The rational number.

    Raises:
        ValueError: If the value is a float or not a valid fraction.
    """
    if isinstance(value, float):
        raise ValueError(f"Rationals must be given exactly, got the float {value}.")
    return Fraction(value)


def format_rational(value: Fraction | int) -> str:
    """Format an exact rational as `"a/b"`, or `"a"` when it is an integer."""
    return str(Fraction(value))
