# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Tests for the invariants of smooth hypersurfaces."""

from fractions import Fraction

import pytest

from crystalline.invariants import (
    InconsistentInvariantsError,
    SlopeProfile,
    betti_numbers,
    check_crew_formula,
    check_domino_duality,
    check_ekedahl_bound,
    general_type_margins,
    hodge_numbers_closed,
    hodge_numbers_series,
    hypersurface_table,
    maximal_domino_numbers,
    ordinary_profile,
    pure_slope_profile,
    slope_condition_met,
    slope_conditions,
    table_errata,
)
from crystalline.invariants._types import zero_matrix


def test_quartic_surface() -> None:
    """Test the Hodge diamond of a quartic (K3) surface."""
    assert hodge_numbers_closed(2, 4) == ((1, 0, 1), (0, 20, 0), (1, 0, 1))
    assert betti_numbers(2, 4) == 22


def test_quintic_surface() -> None:
    """Test the quintic surface."""
    hodge = hodge_numbers_closed(2, 5)
    assert (hodge[0][2], hodge[1][1]) == (4, 45)
    assert betti_numbers(2, 5) == 53


def test_quintic_threefold() -> None:
    """Test the quintic threefold."""
    hodge = hodge_numbers_closed(3, 5)
    assert (hodge[0][3], hodge[1][2], hodge[2][1], hodge[3][0]) == (1, 101, 101, 1)
    assert hodge[1][1] == hodge[2][2] == 1
    assert betti_numbers(3, 5) == 204


def test_sextic_fourfold() -> None:
    """Test the sextic fourfold, whose h22 and b4 follow the generating function."""
    hodge = hodge_numbers_closed(4, 6)
    assert [hodge[p][4 - p] for p in range(5)] == [1, 426, 1752, 426, 1]
    assert betti_numbers(4, 6) == 2606


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("d", range(1, 11))
def test_series_matches_closed_forms(n: int, d: int) -> None:
    """Test that the generating series reproduces the closed forms."""
    assert hodge_numbers_series(n, d) == hodge_numbers_closed(n, d)


def test_series_order() -> None:
    """Test that a larger truncation order gives the same numbers."""
    assert hodge_numbers_series(3, 5, order=7) == hodge_numbers_closed(3, 5)
    with pytest.raises(ValueError):
        hodge_numbers_series(3, 5, order=2)
    with pytest.raises(ValueError):
        hodge_numbers_series(0, 5)


def test_series_beyond_closed_forms() -> None:
    """Test the series in a dimension without closed forms."""
    hodge = hodge_numbers_series(1, 3)
    assert hodge == ((1, 1), (1, 1))


def test_bad_arguments() -> None:
    """Test that unsupported dimensions and degrees are rejected."""
    with pytest.raises(ValueError):
        hodge_numbers_closed(5, 3)
    with pytest.raises(ValueError):
        betti_numbers(3, 0)


def test_table_errata() -> None:
    """Test the printed fourfold rows against the computed values."""
    errata = {erratum.row: erratum for erratum in table_errata(6)}
    assert (errata["h22"].printed, errata["h22"].computed) == (626, 1752)
    assert (errata["b4"].printed, errata["b4"].computed) == (1480, 2606)
    assert (errata["T13"].printed, errata["T13"].computed) == (214, 428)
    assert not any(erratum.matches for erratum in errata.values())


@pytest.mark.parametrize("d", range(1, 11))
def test_printed_t13_is_half(d: int) -> None:
    """Test that the printed T13 row is exactly half the computed bound."""
    erratum = {row.row: row for row in table_errata(d)}["T13"]
    assert 2 * erratum.printed == erratum.computed
    assert isinstance(erratum.printed, Fraction)


def test_maximal_domino_numbers() -> None:
    """Test the maximal domino numbers and their dual slots."""
    surface = maximal_domino_numbers(2, 5, True)
    assert surface.T == ((0, 0, 4), (0, 0, 0), (0, 0, 0))
    threefold = maximal_domino_numbers(3, 5, False)
    assert (threefold.T[0][3], threefold.T[1][2]) == (1, 1)
    assert not threefold.exact
    fourfold = maximal_domino_numbers(4, 6, True)
    assert (fourfold.T[0][4], fourfold.T[1][3], fourfold.T[2][2]) == (1, 428, 1)
    assert fourfold.to_dict()["exact"] is True
    for n, d in ((2, 5), (3, 5), (4, 6)):
        assert check_domino_duality(maximal_domino_numbers(n, d, True).T, n)


def test_general_type_margins() -> None:
    """Test h11 - 2pg and h11 - 4pg of surfaces in P^3."""
    assert general_type_margins(4) == (18, 16)
    assert general_type_margins(5) == (37, 29)
    assert all(general_type_margins(d)[1] > 0 for d in range(1, 30))
    with pytest.raises(ValueError):
        general_type_margins(0)


def test_slope_conditions() -> None:
    """Test the named conditions on middle cohomology."""
    pure = SlopeProfile(2, ((Fraction(1), 22),))
    assert slope_conditions(pure) == {
        "pure slope one": True,
        "no slopes in [0,1)": True,
        "pure slope two": False,
    }
    assert slope_condition_met(2, pure)
    ordinary = ordinary_profile(3, 5).profile(3)
    assert not slope_condition_met(3, ordinary)
    assert slope_condition_met(3, SlopeProfile(3, ((Fraction(3, 2), 204),)))
    assert slope_condition_met(4, pure_slope_profile(4, 6).profile(4))
    with pytest.raises(ValueError):
        slope_condition_met(5, pure)
    with pytest.raises(ValueError):
        slope_condition_met(3, pure)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("d", range(1, 8))
def test_pure_slope_table_has_maximal_dominoes(n: int, d: int) -> None:
    """Test that the domino recursion reproduces the maximal domino numbers."""
    table = hypersurface_table(n, d)
    assert table.T == maximal_domino_numbers(n, d, True).T
    assert table.hW == table.hodge
    assert check_crew_formula(table)
    assert check_ekedahl_bound(table, mazur_ogus=True)


def test_ordinary_table_is_hodge_witt() -> None:
    """Test that an ordinary hypersurface has no dominoes."""
    table = hypersurface_table(3, 5, ordinary_profile(3, 5))
    assert table.T == zero_matrix(4)
    assert table.m == hodge_numbers_closed(3, 5)


def test_table_rejects_wrong_profile() -> None:
    """Test that a profile of the wrong rank is rejected."""
    with pytest.raises(InconsistentInvariantsError, match="rank 22, expected 53"):
        hypersurface_table(2, 5, pure_slope_profile(2, 4))
    with pytest.raises(InconsistentInvariantsError, match="dimension 2"):
        hypersurface_table(3, 5, pure_slope_profile(2, 5))
