# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Tests for slope profiles and slope numbers."""

import logging
from fractions import Fraction

import pytest
from deepdiff import DeepDiff

from crystalline.invariants import (
    CrystalProfile,
    InconsistentInvariantsError,
    SlopeProfile,
    ValidationLevel,
    betti_from_slopes,
    check_slope_symmetries,
    crew_vmod_length,
    hodge_numbers_closed,
    is_ordinary_profile,
    m11_decomposition,
    newton_hodge_profile,
    poincare_dual,
    slope_number,
    slope_numbers,
    validate_profile,
)

# Set up some constants for reusability
HALF = Fraction(1, 2)
HEIGHT_TWO_H2 = SlopeProfile(2, ((HALF, 2), (Fraction(1), 18), (Fraction(3, 2), 2)))
HEIGHT_TWO_K3 = CrystalProfile.from_middle(2, HEIGHT_TWO_H2)
ORDINARY_K3 = CrystalProfile.from_middle(2, newton_hodge_profile(2, [1, 20, 1]))
SUPERSINGULAR_K3 = CrystalProfile.from_middle(2, SlopeProfile(2, ((Fraction(1), 22),)))


def test_from_multiset_merges_and_sorts() -> None:
    """Test that equal slopes are merged, sorted and empty ones dropped."""
    profile = SlopeProfile.from_multiset(2, [(1, 3), ("1/2", 2), (1, 2), (0, 0)])
    assert profile.entries == ((HALF, 2), (Fraction(1), 5))
    assert profile.betti == 7
    assert profile.slopes == (HALF, Fraction(1))
    assert profile.multiplicity(1) == 5
    assert profile.multiplicity(2) == 0


def test_self_duality() -> None:
    """Test the Poincaré self-duality of middle degree profiles."""
    assert HEIGHT_TWO_H2.is_self_dual()
    assert not SlopeProfile(2, ((HALF, 2), (Fraction(1), 5))).is_self_dual()


def test_validate_profile_valid() -> None:
    """Test that a well formed profile has no violations."""
    assert not validate_profile(HEIGHT_TWO_H2, ValidationLevel.STRICT)


def test_validate_profile_violations() -> None:
    """Test the individual violations reported for a profile."""
    assert validate_profile(SlopeProfile(2, ((Fraction(3), 1),))) == [
        "slope out of range: 3 not in [0, 2]"
    ]
    assert validate_profile(SlopeProfile(2, ((Fraction(1), 1), (HALF, 2)))) == [
        "slopes not strictly increasing"
    ]
    assert validate_profile(SlopeProfile(2, ((Fraction(1), 0),))) == [
        "non-positive multiplicity 0 for slope 1"
    ]


def test_validate_profile_strict_denominators() -> None:
    """Test that only strict validation checks multiplicities against denominators."""
    profile = SlopeProfile(2, ((HALF, 1), (Fraction(3, 2), 1)))
    assert not validate_profile(profile, ValidationLevel.LENIENT)
    assert validate_profile(profile, ValidationLevel.STRICT) == [
        "multiplicity 1 of slope 1/2 is not divisible by 2",
        "multiplicity 1 of slope 3/2 is not divisible by 2",
    ]


def test_validation_level_from_json(caplog: pytest.LogCaptureFixture) -> None:
    """Test parsing of validation levels, falling back to lenient."""
    assert ValidationLevel.from_json("STRICT") is ValidationLevel.STRICT
    with caplog.at_level(logging.WARNING):
        assert ValidationLevel.from_json("paranoid") is ValidationLevel.LENIENT
    assert "Unknown validation level paranoid" in caplog.text


def test_poincare_dual() -> None:
    """Test that slopes are mirrored into the complementary degree."""
    dual = poincare_dual(SlopeProfile(1, ((Fraction(0), 1), (Fraction(1), 1))), 2)
    assert dual == SlopeProfile(3, ((Fraction(1), 1), (Fraction(2), 1)))
    with pytest.raises(ValueError):
        poincare_dual(SlopeProfile(5), 2)


def test_crystal_profile_shape() -> None:
    """Test that a crystal profile needs one profile per degree."""
    with pytest.raises(ValueError):
        CrystalProfile(1, (SlopeProfile(0, ((Fraction(0), 1),)), SlopeProfile(1)))
    with pytest.raises(ValueError):
        CrystalProfile(0, ())
    assert HEIGHT_TWO_K3.profile(7) == SlopeProfile(7)


def test_crystal_profile_validate() -> None:
    """Test that the K3 profiles are valid and a broken one is reported."""
    for profile in (HEIGHT_TWO_K3, ORDINARY_K3, SUPERSINGULAR_K3):
        assert not profile.validate(ValidationLevel.STRICT)
    broken = CrystalProfile(
        1,
        (
            SlopeProfile(0, ((Fraction(0), 2),)),
            SlopeProfile(1),
            SlopeProfile(2, ((Fraction(1), 1),)),
        ),
    )
    violations = broken.validate()
    assert "H^0 and H^2 are not Poincaré dual" in violations
    assert "H^0 must be {(0, 1)}" in violations


def test_slope_number_height_two() -> None:
    """Test that the supersingular-free part of a height 2 K3 gives m11 = 20."""
    assert slope_number(HEIGHT_TWO_H2, 0) == 1
    assert slope_number(HEIGHT_TWO_H2, 1) == 20
    assert slope_number(HEIGHT_TWO_H2, 2) == 1


def test_slope_numbers_matrix() -> None:
    """Test the full matrix of slope numbers of K3 surfaces."""
    assert slope_numbers(HEIGHT_TWO_K3) == ((1, 0, 1), (0, 20, 0), (1, 0, 1))
    assert slope_numbers(SUPERSINGULAR_K3) == ((1, 0, 0), (0, 22, 0), (0, 0, 1))
    assert check_slope_symmetries(HEIGHT_TWO_K3)


def test_slope_numbers_not_integral() -> None:
    """Test that half-integral slope numbers are rejected."""
    odd = CrystalProfile.from_middle(
        2, SlopeProfile(2, ((HALF, 1), (Fraction(1), 20), (Fraction(3, 2), 1)))
    )
    with pytest.raises(InconsistentInvariantsError, match="m\\^\\{0,2\\}"):
        slope_numbers(odd)
    assert not check_slope_symmetries(odd)


def test_betti_from_slopes() -> None:
    """Test that the slope numbers add up to the Betti numbers."""
    assert [betti_from_slopes(HEIGHT_TWO_K3, k) for k in range(5)] == [1, 0, 22, 0, 1]
    with pytest.raises(ValueError):
        betti_from_slopes(HEIGHT_TWO_K3, 5)


def test_crew_vmod_length() -> None:
    """Test the length of M/VM for slopes below one."""
    assert crew_vmod_length(SlopeProfile(1, ((Fraction(0), 1), (HALF, 2)))) == 2
    with pytest.raises(ValueError):
        crew_vmod_length(SlopeProfile(1, ((Fraction(1), 1),)))


def test_m11_decomposition() -> None:
    """Test the split of m11 into slope one and the remaining slopes."""
    assert m11_decomposition(HEIGHT_TWO_H2) == (18, Fraction(2))
    assert m11_decomposition(SUPERSINGULAR_K3.profile(2)) == (22, Fraction(0))
    with pytest.raises(ValueError):
        m11_decomposition(SlopeProfile(1, ((HALF, 2),)))
    with pytest.raises(InconsistentInvariantsError):
        m11_decomposition(SlopeProfile(2, ((HALF, 2), (Fraction(1), 20))))


def test_newton_hodge_profile() -> None:
    """Test the ordinary profile read off a Hodge row."""
    assert newton_hodge_profile(2, [1, 20, 1]).entries == (
        (Fraction(0), 1),
        (Fraction(1), 20),
        (Fraction(2), 1),
    )
    assert newton_hodge_profile(2, [0, 1, 0]).entries == ((Fraction(1), 1),)


def test_is_ordinary_profile() -> None:
    """Test that only the ordinary K3 has slope numbers equal to Hodge numbers."""
    hodge = hodge_numbers_closed(2, 4)
    assert is_ordinary_profile(ORDINARY_K3, hodge)
    assert not is_ordinary_profile(SUPERSINGULAR_K3, hodge)


def test_profile_json() -> None:
    """Test the JSON form of slope profiles."""
    data = HEIGHT_TWO_K3.to_dict()
    assert not DeepDiff(
        data["profiles"][2],
        {"degree": 2, "slopes": [["1/2", 2], ["1", 18], ["3/2", 2]]},
    )
    assert CrystalProfile.from_dict(data) == HEIGHT_TWO_K3
    assert SlopeProfile.from_dict({"degree": 1, "slopes": [["1/2", 2]]}).entries == (
        (HALF, 2),
    )
