# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Hodge, Betti and domino numbers of smooth hypersurfaces of dimension 2 to 4."""

# Invariant names follow the usual notation (T, h13, ...).
# pylint: disable=invalid-name

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import sympy

from ._exactmath import (
    hodge_generating_series,
    hypersurface_euler_characteristic,
    primitive_to_hodge,
)
from ._hodgewitt import HodgeWittTable, chi_from_hodge, mazur_ogus_dominoes
from ._slopes import (
    CrystalProfile,
    SlopeProfile,
    newton_hodge_profile,
    slope_numbers,
)
from ._types import InconsistentInvariantsError, Matrix, as_integer, make_matrix

_logger = logging.getLogger(__name__)

_d = sympy.Symbol("d", integer=True, positive=True)

SUPPORTED_DIMENSIONS = (2, 3, 4)
"""Dimensions for which closed forms are available."""

_HODGE_FORMS: dict[int, dict[tuple[int, int], sympy.Expr]] = {
    2: {
        (0, 2): (_d - 1) * (_d - 2) * (_d - 3) / 6,
        (1, 1): _d * (2 * _d**2 - 6 * _d + 7) / 3,
    },
    3: {
        (0, 3): (_d - 1) * (_d - 2) * (_d - 3) * (_d - 4) / 24,
        (1, 2): (_d - 1) * (_d - 2) * (11 * _d**2 - 17 * _d + 12) / 24,
    },
    4: {
        (0, 4): (_d - 1) * (_d - 2) * (_d - 3) * (_d - 4) * (_d - 5) / 120,
        (1, 3): (_d - 1) * (_d - 2) * (13 * _d**3 - 51 * _d**2 + 56 * _d - 30) / 60,
    },
}

_BETTI_FORMS: dict[int, sympy.Expr] = {
    2: _d**3 - 4 * _d**2 + 6 * _d - 2,
    3: (_d - 1) * (_d - 2) * (_d**2 - 2 * _d + 2),
    4: ((_d - 1) ** 6 - 1) / _d + 2,
}

_HODGE_FORMS[4][(2, 2)] = (
    _BETTI_FORMS[4] - 2 * _HODGE_FORMS[4][(0, 4)] - 2 * _HODGE_FORMS[4][(1, 3)]
)

# Rows of the commonly printed table that disagree with the generating function.
_PRINTED_FORMS: dict[str, sympy.Expr] = {
    "h22": (_d - 1) * (_d - 2) * (3 * _d**3 - 11 * _d**2 + 11 * _d - 5) / 10,
    "b4": (_d - 1) * (_d - 2) * (3 * _d**3 - 12 * _d**2 + 15 * _d - 10) / 4,
    "T13": (_d - 1) * (_d - 2) * (14 * _d**3 - 63 * _d**2 + 103 * _d - 90) / 120,
}


def _evaluate_exact(expr: sympy.Expr, d: int) -> Fraction:
    value = sympy.Rational(expr.subs(_d, d))
    return Fraction(int(value.p), int(value.q))


def _evaluate(expr: sympy.Expr, d: int, name: str) -> int:
    return as_integer(_evaluate_exact(expr, d), name)


def _check_arguments(n: int, d: int) -> None:
    if n not in SUPPORTED_DIMENSIONS:
        raise ValueError(f"The dimension must be one of 2, 3, 4, got {n}.")
    if d < 1:
        raise ValueError(f"The degree must be at least 1, got {d}.")


def _hodge_matrix(n: int, middle: dict[int, int]) -> Matrix:
    """Assemble the Hodge matrix from `h^{p,n-p}`, keyed by `p`."""
    return make_matrix(
        [
            [middle[i] if i + j == n else int(i == j) for j in range(n + 1)]
            for i in range(n + 1)
        ]
    )


def hodge_numbers_closed(n: int, d: int) -> Matrix:
    """Compute the Hodge numbers of a smooth hypersurface from closed forms.

    Off the middle row `h^{p,q} = delta_{p,q}`; the middle row is filled by
    Hodge symmetry.

    Args:
        n: The dimension, 2, 3 or 4.
        d: The degree.

    Returns:
        The `(n+1) x (n+1)` Hodge matrix.

    Raises:
        ValueError: If `n` or `d` is out of range.
    """
    _check_arguments(n, d)
    forms = _HODGE_FORMS[n]
    middle = {}
    for p in range(n + 1):
        key = (min(p, n - p), max(p, n - p))
        middle[p] = _evaluate(forms[key], d, f"h^{{{p},{n - p}}}")
    return _hodge_matrix(n, middle)


def hodge_numbers_series(n: int, d: int, order: int | None = None) -> Matrix:
    """Compute the Hodge numbers of a smooth hypersurface from the generating series.

    Args:
        n: The dimension, at least 1.
        d: The degree.
        order: The truncation order, `n + 1` by default.

    Returns:
        The `(n+1) x (n+1)` Hodge matrix.

    Raises:
        ValueError: If an argument is out of range.
    """
    if n < 1:
        raise ValueError(f"The dimension must be at least 1, got {n}.")
    order = n + 1 if order is None else order
    if order < n:
        raise ValueError(f"The truncation order must be at least {n}, got {order}.")
    series = hodge_generating_series(d, order)
    middle = {
        p: primitive_to_hodge(p, n - p, series.coefficient(p, n - p))
        for p in range(n + 1)
    }
    return _hodge_matrix(n, middle)


def betti_numbers(n: int, d: int) -> int:
    """Compute the middle Betti number `b_n` of a smooth hypersurface.

    Args:
        n: The dimension, 2, 3 or 4.
        d: The degree.

    Returns:
        `b_n` from its closed form.

    Raises:
        InconsistentInvariantsError: If the closed form disagrees with the sum
            of the middle Hodge numbers or with the Euler characteristic.
    """
    _check_arguments(n, d)
    b_n = _evaluate(_BETTI_FORMS[n], d, f"b_{n}")
    hodge = hodge_numbers_closed(n, d)
    hodge_sum = sum(hodge[p][n - p] for p in range(n + 1))
    if b_n != hodge_sum:
        raise InconsistentInvariantsError(
            f"b_{n} = {b_n} differs from the sum of Hodge numbers {hodge_sum}."
        )
    euler = n + b_n if n % 2 == 0 else n + 1 - b_n
    if euler != hypersurface_euler_characteristic(n, d):
        raise InconsistentInvariantsError(
            f"b_{n} = {b_n} does not match the Euler characteristic."
        )
    return b_n


@dataclass(frozen=True)
class TableErratum:
    """A printed closed form compared with the value actually computed."""

    row: str
    """Name of the table row."""

    printed: Fraction
    """The value of the printed closed form."""

    computed: int
    """The value computed from the generating function."""

    @property
    def matches(self) -> bool:
        """Whether the printed row gives the right value."""
        return self.printed == self.computed


def table_errata(d: int) -> tuple[TableErratum, ...]:
    """Compare the rows of the printed fourfold table with computed values.

    The printed `h^{2,2}` and `b_4` rows disagree with the generating function,
    and the printed `T^{1,3}` row is half of `h^{1,3} + 2 h^{0,4}`.

    Args:
        d: The degree.

    Returns:
        One entry each for `h22`, `b4` and `T13`.
    """
    hodge = hodge_numbers_closed(4, d)
    computed = {
        "h22": hodge[2][2],
        "b4": betti_numbers(4, d),
        "T13": hodge[1][3] + 2 * hodge[0][4],
    }
    return tuple(
        TableErratum(row, _evaluate_exact(_PRINTED_FORMS[row], d), value)
        for row, value in computed.items()
    )


@dataclass(frozen=True)
class DominoNumbers:
    """Maximal domino numbers of a hypersurface."""

    T: Matrix
    """The domino numbers, or upper bounds for them."""

    exact: bool
    """Whether `T` holds the values (slope condition met) or only bounds."""

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON object."""
        return {"T": [list(row) for row in self.T], "exact": self.exact}


def maximal_domino_numbers(n: int, d: int, slope_condition_met: bool) -> DominoNumbers:
    """Compute the maximal domino numbers of a hypersurface.

    `T^{0,n} <= h^{0,n}` and, for fourfolds, `T^{1,3} <= h^{1,3} + 2 h^{0,4}`,
    with equality exactly under the slope condition. The slots paired with
    these by domino duality (`T^{1,2}` for threefolds, `T^{2,2}` for
    fourfolds) carry the same value.

    Args:
        n: The dimension, 2, 3 or 4.
        d: The degree.
        slope_condition_met: Whether the slope condition for `n` holds.

    Returns:
        The domino numbers when the condition holds, otherwise the bounds.
    """
    hodge = hodge_numbers_closed(n, d)
    T = [[0] * (n + 1) for _ in range(n + 1)]
    T[0][n] = hodge[0][n]
    if n == 3:
        T[1][2] = hodge[0][3]
    elif n == 4:
        T[1][3] = hodge[1][3] + 2 * hodge[0][4]
        T[2][2] = hodge[0][4]
    return DominoNumbers(make_matrix(T), slope_condition_met)


def general_type_margins(d: int) -> tuple[int, int]:
    """Compute `h^{1,1} - 2 p_g` and `h^{1,1} - 4 p_g` of a degree `d` surface.

    Args:
        d: The degree, at least 1.

    Returns:
        `((d^3 - 4d + 6)/3, 2d^2 - 5d + 4)`.

    Raises:
        InconsistentInvariantsError: If a closed form disagrees with the
            Hodge numbers.
    """
    _check_arguments(2, d)
    m2 = as_integer(Fraction(d**3 - 4 * d + 6, 3), "(d^3 - 4d + 6)/3")
    m4 = 2 * d * d - 5 * d + 4
    hodge = hodge_numbers_closed(2, d)
    h11, pg = hodge[1][1], hodge[0][2]
    if (m2, m4) != (h11 - 2 * pg, h11 - 4 * pg):
        raise InconsistentInvariantsError(
            f"The margins ({m2}, {m4}) differ from ({h11 - 2 * pg}, {h11 - 4 * pg})."
        )
    return m2, m4


def pure_slope_profile(n: int, d: int) -> CrystalProfile:
    """Return the profile with middle cohomology of pure slope `n/2`.

    Args:
        n: The dimension, 2, 3 or 4.
        d: The degree.

    Returns:
        The crystal profile meeting the maximal domino slope condition.
    """
    middle = SlopeProfile.from_multiset(n, [(Fraction(n, 2), betti_numbers(n, d))])
    return CrystalProfile.from_middle(n, middle)


def ordinary_profile(n: int, d: int) -> CrystalProfile:
    """Return the profile whose Newton polygon is the Hodge polygon.

    Args:
        n: The dimension, 2, 3 or 4.
        d: The degree.

    Returns:
        The crystal profile of an ordinary hypersurface.
    """
    hodge = hodge_numbers_closed(n, d)
    middle = newton_hodge_profile(n, [hodge[p][n - p] for p in range(n + 1)])
    return CrystalProfile.from_middle(n, middle)


def slope_conditions(profile: SlopeProfile) -> dict[str, bool]:
    """Evaluate the named slope conditions on a middle cohomology profile."""
    slopes = profile.slopes
    return {
        "pure slope one": all(slope == 1 for slope in slopes),
        "no slopes in [0,1)": all(slope >= 1 for slope in slopes),
        "pure slope two": all(slope == 2 for slope in slopes),
    }


_CONDITION_FOR_DIMENSION = {
    2: "pure slope one",
    3: "no slopes in [0,1)",
    4: "pure slope two",
}


def slope_condition_met(n: int, profile: SlopeProfile) -> bool:
    """Check the slope condition for maximal domino numbers in dimension `n`.

    Args:
        n: The dimension, 2, 3 or 4.
        profile: The profile of `H^n`.

    Returns:
        Whether the condition holds.

    Raises:
        ValueError: If `n` is unsupported or the profile has another degree.
    """
    if n not in _CONDITION_FOR_DIMENSION:
        raise ValueError(f"The dimension must be one of 2, 3, 4, got {n}.")
    if profile.degree != n:
        raise ValueError(f"Need a profile of degree {n}, got {profile.degree}.")
    return slope_conditions(profile)[_CONDITION_FOR_DIMENSION[n]]


def hypersurface_table(
    n: int, d: int, profile: CrystalProfile | None = None
) -> HodgeWittTable:
    """Compute the Hodge-Witt table of a smooth hypersurface.

    Hypersurfaces are Mazur-Ogus, so the domino numbers follow from the Hodge
    and slope numbers.

    Args:
        n: The dimension, 2, 3 or 4.
        d: The degree.
        profile: The slopes; the pure slope profile by default.

    Returns:
        The table with Hodge numbers and `chi(Omega^i)`.

    Raises:
        InconsistentInvariantsError: If the profile is invalid or does not fit
            the Betti number.
    """
    profile = pure_slope_profile(n, d) if profile is None else profile
    violations = profile.validate()
    b_n = betti_numbers(n, d)
    if profile.dim != n:
        violations.append(f"profile of dimension {profile.dim}, expected {n}")
    elif profile.profile(n).betti != b_n:
        violations.append(f"H^{n} has rank {profile.profile(n).betti}, expected {b_n}")
    if violations:
        raise InconsistentInvariantsError(
            f"Invalid hypersurface slopes: {'; '.join(violations)}"
        )
    hodge = hodge_numbers_closed(n, d)
    m = slope_numbers(profile)
    T = mazur_ogus_dominoes(hodge, m, n)
    _logger.debug("Domino numbers of the degree %s hypersurface: %s", d, T)
    return HodgeWittTable.from_parts(m, T, hodge=hodge, chi=chi_from_hodge(hodge))
