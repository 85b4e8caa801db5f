# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Tests for the acceptance checks and their random record generators."""

import random

from crystalline.invariants import (
    betti_from_slopes,
    check_slope_symmetries,
    chern_predicates,
    run_selftest,
    validate_surface,
)
from crystalline.invariants._selftest import (
    CHECKS,
    random_crystal_profile,
    random_surface,
    random_surface_with_slopes,
)


def test_random_surfaces_are_consistent() -> None:
    """Test that generated surface records pass validation."""
    rng = random.Random(7)
    for _ in range(200):
        surface = random_surface(rng)
        assert validate_surface(surface) == []
        chern_predicates(surface)


def test_random_surfaces_with_slopes_are_consistent() -> None:
    """Test that generated records with slopes pass validation."""
    rng = random.Random(11)
    for _ in range(200):
        surface = random_surface_with_slopes(rng)
        assert validate_surface(surface) == []
        predicates = chern_predicates(surface)
        assert predicates["twice_T02_plus_b1_le_m11"] == predicates["c1sq_le_5c2"]


def test_random_crystal_profiles() -> None:
    """Test that generated crystal profiles satisfy duality and symmetry."""
    rng = random.Random(13)
    for dim in range(1, 5):
        profile = random_crystal_profile(rng, dim)
        assert profile.validate() == []
        assert check_slope_symmetries(profile)
        for k in range(2 * dim + 1):
            betti_from_slopes(profile, k)


def test_run_selftest() -> None:
    """Test that every acceptance check passes and the run is reproducible."""
    results = run_selftest(seed=0)
    assert [result.name for result in results] == [name for name, _ in CHECKS]
    failures = [result for result in results if not result.passed]
    assert not failures, failures
