# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Hodge-Witt numbers, domino numbers and the identities relating them."""

# `T` is the conventional name of the domino number matrix.
# pylint: disable=invalid-name

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from typing import Self

from ._types import (
    InconsistentInvariantsError,
    Matrix,
    anti_diagonal_sum,
    entry,
    make_matrix,
    transpose,
)

_logger = logging.getLogger(__name__)


def _check_size(matrix: Matrix, size: int, name: str) -> None:
    if len(matrix) != size or any(len(row) != size for row in matrix):
        raise ValueError(f"The matrix {name} must be {size} x {size}.")


def hodge_witt_from_parts(m: Matrix, T: Matrix) -> Matrix:
    """Compute the Hodge-Witt numbers from slope and domino numbers.

    `h_W^{i,j} = m^{i,j} + T^{i,j} - 2 T^{i-1,j+1} + T^{i-2,j+2}`, reading
    domino numbers outside the matrix as zero.

    Args:
        m: The slope numbers.
        T: The domino numbers.

    Returns:
        The Hodge-Witt numbers.

    Raises:
        ValueError: If the matrices differ in shape or `T` has a negative entry.
    """
    size = len(m)
    _check_size(m, size, "m")
    _check_size(T, size, "T")
    if any(value < 0 for row in T for value in row):
        raise ValueError("Domino numbers must be non-negative.")
    return tuple(
        tuple(
            m[i][j]
            + T[i][j]
            - 2 * entry(T, i - 1, j + 1)
            + entry(T, i - 2, j + 2)
            for j in range(size)
        )
        for i in range(size)
    )


def chi_from_hodge(hodge: Matrix) -> tuple[int, ...]:
    """Return `chi(Omega^i) = sum_j (-1)^j h^{i,j}` for every `i`."""
    return tuple(_alternating_sum(row) for row in hodge)


def _alternating_sum(row: Iterable[int]) -> int:
    return sum(value if j % 2 == 0 else -value for j, value in enumerate(row))


@dataclass(frozen=True)
class HodgeWittTable:
    """Slope, domino and Hodge-Witt numbers of one variety."""

    dim: int
    """The dimension `n` of the variety."""

    m: Matrix
    """The slope numbers `m^{i,j}`."""

    T: Matrix
    """The domino numbers `T^{i,j}`."""

    hW: Matrix
    """The Hodge-Witt numbers `h_W^{i,j}`."""

    hodge: Matrix | None = None
    """The Hodge numbers `h^{i,j}`, if known."""

    chi: tuple[int, ...] | None = None
    """The Euler characteristics `chi(Omega^i)`, if known."""

    def __post_init__(self) -> None:
        """Check shapes and the defining formula of the Hodge-Witt numbers.

        Raises:
            ValueError: If a matrix or `chi` has the wrong shape.
            InconsistentInvariantsError: If `hW` does not follow from `m` and `T`.
        """
        size = self.dim + 1
        for name, matrix in (("m", self.m), ("T", self.T), ("hW", self.hW)):
            _check_size(matrix, size, name)
        if self.hodge is not None:
            _check_size(self.hodge, size, "hodge")
        if self.chi is not None and len(self.chi) != size:
            raise ValueError(f"chi must have {size} entries, got {len(self.chi)}.")
        if hodge_witt_from_parts(self.m, self.T) != self.hW:
            raise InconsistentInvariantsError(
                "The Hodge-Witt numbers do not follow from the slope and domino numbers."
            )

    @classmethod
    def from_parts(
        cls,
        m: Matrix,
        T: Matrix,
        hodge: Matrix | None = None,
        chi: Sequence[int] | None = None,
    ) -> Self:
        """Build a table, computing the Hodge-Witt numbers.

        Args:
            m: The slope numbers.
            T: The domino numbers.
            hodge: The Hodge numbers, if known.
            chi: The Euler characteristics `chi(Omega^i)`, if known.

        Returns:
            The table.
        """
        return cls(
            dim=len(m) - 1,
            m=m,
            T=T,
            hW=hodge_witt_from_parts(m, T),
            hodge=hodge,
            chi=None if chi is None else tuple(chi),
        )

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Self:
        """Convert a JSON object to a table.

        Args:
            data: Object with the keys `dim`, `m`, `T`, `hW` and optionally
                `hodge` and `chi`.

        Returns:
            The table.
        """
        hodge = data.get("hodge")
        chi = data.get("chi")
        return cls(
            dim=int(data["dim"]),
            m=make_matrix(data["m"]),
            T=make_matrix(data["T"]),
            hW=make_matrix(data["hW"]),
            hodge=None if hodge is None else make_matrix(hodge),
            chi=None if chi is None else tuple(int(value) for value in chi),
        )

    def to_dict(self) -> dict[str, Any]:
        """Convert the table to a JSON object.

        Returns:
            The table with matrices as row-major arrays.
        """
        return {
            "dim": self.dim,
            "m": [list(row) for row in self.m],
            "T": [list(row) for row in self.T],
            "hW": [list(row) for row in self.hW],
            "hodge": None if self.hodge is None else [list(row) for row in self.hodge],
            "chi": None if self.chi is None else list(self.chi),
        }


def mazur_ogus_dominoes(hodge: Matrix, m: Matrix, n: int) -> Matrix:
    """Determine the domino numbers of a Mazur-Ogus variety.

    For such a variety the Hodge-Witt numbers are the Hodge numbers, so the
    defining formula can be solved for `T^{i,j}`. Columns are processed from
    `j = n` down to `0`, rows upwards within a column; `T^{i-1,j+1}` and
    `T^{i-2,j+2}` are then always known.

    Args:
        hodge: The Hodge numbers.
        m: The slope numbers.
        n: The dimension of the variety.

    Returns:
        The domino numbers.

    Raises:
        InconsistentInvariantsError: If some domino number comes out negative,
            so the input is not consistent with a Mazur-Ogus variety.
    """
    size = n + 1
    _check_size(hodge, size, "hodge")
    _check_size(m, size, "m")
    T = [[0] * size for _ in range(size)]
    for j in reversed(range(size)):
        for i in range(size):
            value = (
                hodge[i][j]
                - m[i][j]
                + 2 * (T[i - 1][j + 1] if i >= 1 and j + 1 < size else 0)
                - (T[i - 2][j + 2] if i >= 2 and j + 2 < size else 0)
            )
            if value < 0:
                raise InconsistentInvariantsError(
                    f"Negative domino number T^{{{i},{j}}} = {value}: the input is "
                    "not consistent with a Mazur-Ogus variety."
                )
            if value:
                _logger.debug("T^{%s,%s} = %s", i, j, value)
            T[i][j] = value
    return make_matrix(T)


def check_crew_formula(t: HodgeWittTable) -> bool:
    """Check Crew's formula `sum_j (-1)^j h_W^{i,j} = chi(Omega^i)`.

    When Hodge numbers are present the classical side
    `sum_j (-1)^j h^{i,j}` must agree as well.

    Args:
        t: The table; needs `chi` or `hodge`.

    Returns:
        Whether every row satisfies the formula.

    Raises:
        ValueError: If the table has neither `chi` nor `hodge`.
    """
    if t.chi is not None:
        chi = tuple(t.chi)
    elif t.hodge is not None:
        chi = chi_from_hodge(t.hodge)
    else:
        raise ValueError(
            "Crew's formula needs the Euler characteristics or Hodge numbers."
        )
    if chi_from_hodge(t.hW) != chi:
        return False
    return t.hodge is None or chi_from_hodge(t.hodge) == chi


def check_ekedahl_bound(t: HodgeWittTable, mazur_ogus: bool) -> bool:
    """Check `h_W^{i,j} <= h^{i,j}`, with equality for Mazur-Ogus varieties.

    Args:
        t: The table; needs `hodge`.
        mazur_ogus: Whether the variety is Mazur-Ogus.

    Returns:
        Whether the bound (or the equality) holds entrywise.

    Raises:
        ValueError: If the table has no Hodge numbers.
    """
    if t.hodge is None:
        raise ValueError("Ekedahl's bound needs the Hodge numbers.")
    if mazur_ogus:
        return t.hW == t.hodge
    return all(
        hw <= h for hw_row, h_row in zip(t.hW, t.hodge) for hw, h in zip(hw_row, h_row)
    )


def check_domino_duality(T: Matrix, n: int) -> bool:
    """Check Ekedahl duality `T^{i,j} = T^{n-i-2,n-j+2}`.

    A domino number whose dual slot lies outside the matrix must vanish.

    Args:
        T: The domino numbers.
        n: The dimension of the variety.

    Returns:
        Whether the duality holds.
    """
    size = n + 1
    _check_size(T, size, "T")
    for i in range(size):
        for j in range(size):
            di, dj = n - i - 2, n - j + 2
            if 0 <= di < size and 0 <= dj < size:
                if T[i][j] != T[di][dj]:
                    return False
            elif T[i][j] != 0:
                return False
    return True


def check_domino_vanishing(T: Matrix, n: int) -> bool:
    """Check that only the possibly non-trivial dominoes are non-zero.

    Surfaces may only have `T^{0,2}`; threefolds only `T^{0,2}`, `T^{0,3}`,
    `T^{1,2}` and `T^{1,3}`. Other dimensions are not constrained here.

    Args:
        T: The domino numbers.
        n: The dimension of the variety.

    Returns:
        Whether all other entries vanish.
    """
    allowed = {2: {(0, 2)}, 3: {(0, 2), (0, 3), (1, 2), (1, 3)}}.get(n)
    if allowed is None:
        return True
    return all(
        value == 0 or (i, j) in allowed
        for i, row in enumerate(T)
        for j, value in enumerate(row)
    )


def check_hw_symmetries(t: HodgeWittTable) -> bool:
    """Check the symmetries and Betti sums of the Hodge-Witt numbers.

    Hodge-Witt symmetry `h_W^{i,j} = h_W^{j,i}` is only known in dimension at
    most three and is skipped above. Duality `h_W^{i,j} = h_W^{n-i,n-j}` and
    `sum_{i+j=k} h_W^{i,j} = b_k` (with `b_k` read off the slope numbers) are
    always checked.

    Args:
        t: The table.

    Returns:
        Whether all applicable identities hold.
    """
    n = t.dim
    if n <= 3:
        if transpose(t.hW) != t.hW:
            return False
    else:
        _logger.debug("Skipping Hodge-Witt symmetry in dimension %s.", n)
    if any(
        t.hW[i][j] != t.hW[n - i][n - j] for i in range(n + 1) for j in range(n + 1)
    ):
        return False
    return all(
        anti_diagonal_sum(t.hW, k) == anti_diagonal_sum(t.m, k)
        for k in range(2 * n + 1)
    )


def hodge_witt_betti(t: HodgeWittTable, k: int) -> int:
    """Return `sum_{i+j=k} h_W^{i,j}`."""
    return anti_diagonal_sum(t.hW, k)


def is_hodge_witt(T: Matrix) -> bool:
    """Check whether all domino numbers vanish."""
    return all(value == 0 for row in T for value in row)
