# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Acceptance checks over known values and randomized consistent records."""

# pylint: disable=invalid-name

from __future__ import annotations

import logging
import random
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ._exactmath import hodge_generating_series, hodge_generating_series_ratio
from ._hodgewitt import check_crew_formula
from ._hypersurface import (
    betti_numbers,
    general_type_margins,
    hodge_numbers_closed,
    hodge_numbers_series,
    hypersurface_table,
    maximal_domino_numbers,
    table_errata,
)
from ._slopes import (
    CrystalProfile,
    SlopeProfile,
    betti_from_slopes,
    check_slope_symmetries,
    crew_vmod_length,
    m11_decomposition,
    poincare_dual,
    slope_number,
)
from ._surface import (
    KodairaDimension,
    SurfaceFlags,
    SurfaceInvariants,
    blowup_transform,
    chern_predicates,
    hw_numbers_surface,
    szpiro_series,
)
from ._threefold import (
    ThreefoldInvariants,
    cy_formulaire,
    liftability_necessary,
    nonliftable_characterization,
)

_logger = logging.getLogger(__name__)

PRIMES = (2, 3, 5, 7, 11, 13)
"""Characteristics drawn for random records."""


class SelfTestError(Exception):
    """An acceptance check found a wrong value."""


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise SelfTestError(message)


def random_surface(rng: random.Random) -> SurfaceInvariants:
    """Draw surface invariants satisfying Noether's formula and its companions.

    Args:
        rng: The random number generator.

    Returns:
        A consistent record without slopes.
    """
    q = rng.randint(0, 4)
    pg = rng.randint(0, 30)
    defect = rng.randint(0, min(pg, 2))
    h01 = q + defect
    chi = 1 - h01 + pg
    b1 = 2 * q
    # b2 = c2 - 2 + 2 b1 must stay non-negative.
    upper = 12 * chi + 2 * b1 - 2
    c1sq = rng.randint(upper - 60, upper)
    c2 = 12 * chi - c1sq
    return SurfaceInvariants(
        p=rng.choice(PRIMES),
        c1sq=c1sq,
        c2=c2,
        b1=b1,
        b2=c2 - 2 + 2 * b1,
        q=q,
        h01=h01,
        pg=pg,
        chi=chi,
        kodaira=KodairaDimension.TWO,
        flags=SurfaceFlags(pic_reduced=defect == 0),
    )


def random_surface_with_slopes(rng: random.Random) -> SurfaceInvariants:
    """Draw consistent surface invariants with a self-dual `H^2` profile.

    The profile is built first; `T^{0,2}` is drawn and the Chern numbers are
    solved for.

    Args:
        rng: The random number generator.

    Returns:
        A consistent record with slopes and a reduced Picard scheme.
    """
    while True:
        height = rng.randint(1, 4)
        copies = rng.randint(0, 3)
        extreme = rng.randint(0, 4)
        middle = rng.randint(0, 30)
        slopes = SlopeProfile.from_multiset(
            2,
            [
                (0, extreme),
                (1 - Fraction(1, height), height * copies),
                (1, middle),
                (1 + Fraction(1, height), height * copies),
                (2, extreme),
            ],
        )
        b2 = slopes.betti
        m11 = middle + 2 * (height - 1) * copies
        hw11 = m11 - 2 * rng.randint(0, 3)
        q = rng.randint(0, 3)
        b1 = 2 * q
        chi = (b2 - hw11 - b1 + 2) // 2
        pg = chi - 1 + q
        if pg < 0:
            continue
        c1sq = 10 * chi + b1 - hw11
        return SurfaceInvariants(
            p=rng.choice(PRIMES),
            c1sq=c1sq,
            c2=12 * chi - c1sq,
            b1=b1,
            b2=b2,
            q=q,
            h01=q,
            pg=pg,
            chi=chi,
            kodaira=KodairaDimension.TWO,
            flags=SurfaceFlags(pic_reduced=True),
            h2_slopes=slopes,
        )


def _random_symmetric_profile(rng: random.Random, degree: int) -> SlopeProfile:
    entries: list[tuple[Fraction, int]] = []
    for _ in range(rng.randint(0, 3)):
        denominator = rng.randint(1, 4)
        slope = Fraction(rng.randint(0, degree * denominator // 2), denominator)
        mult = denominator * rng.randint(1, 3)
        entries.append((slope, mult))
        if slope != degree - slope:
            entries.append((degree - slope, mult))
    return SlopeProfile.from_multiset(degree, entries)


def random_crystal_profile(rng: random.Random, dim: int) -> CrystalProfile:
    """Draw a crystal profile satisfying Poincaré duality and the functional equation.

    Args:
        rng: The random number generator.
        dim: The dimension of the variety.

    Returns:
        The profile; multiplicities are divisible by the slope denominators.
    """
    lower = [SlopeProfile(0, ((Fraction(0), 1),))]
    lower.extend(_random_symmetric_profile(rng, k) for k in range(1, dim + 1))
    upper = [poincare_dual(lower[k], dim) for k in reversed(range(dim))]
    return CrystalProfile(dim, (*lower, *upper))


def _check_series_oracle(_: random.Random) -> None:
    for d in range(1, 11):
        _expect(
            hodge_generating_series(d, 8) == hodge_generating_series_ratio(d, 8),
            f"the two expansions differ for d={d}",
        )


def _check_table(_: random.Random) -> None:
    for n in (2, 3, 4):
        for d in range(1, 11):
            _expect(
                hodge_numbers_series(n, d) == hodge_numbers_closed(n, d),
                f"series and closed forms differ for n={n}, d={d}",
            )
            betti_numbers(n, d)
    _expect(betti_numbers(2, 4) == 22, "b2 of a quartic surface is not 22")
    _expect(hodge_numbers_closed(3, 5)[1][2] == 101, "h12 of the quintic is not 101")
    _expect(betti_numbers(3, 5) == 204, "b3 of the quintic is not 204")


def _check_margins(_: random.Random) -> None:
    for d in range(1, 13):
        general_type_margins(d)


def _check_domino_recursion(_: random.Random) -> None:
    for n in (2, 3, 4):
        for d in range(1, 11):
            _expect(
                hypersurface_table(n, d).T == maximal_domino_numbers(n, d, True).T,
                f"domino recursion differs from the closed forms for n={n}, d={d}",
            )
    for d in range(1, 11):
        erratum = {row.row: row for row in table_errata(d)}["T13"]
        _expect(
            2 * erratum.printed == erratum.computed,
            f"printed T13 is not half the computed value for d={d}",
        )


def _check_chern_equivalences(rng: random.Random) -> None:
    for _ in range(10_000):
        chern_predicates(random_surface(rng))
    for _ in range(1_000):
        chern_predicates(random_surface_with_slopes(rng))


def _check_slope_numbers(rng: random.Random) -> None:
    for _ in range(1_000):
        c = random_crystal_profile(rng, rng.randint(1, 4))
        _expect(not c.validate(), "random crystal profile is invalid")
        _expect(check_slope_symmetries(c), "slope number symmetries fail")
        for k in range(2 * c.dim + 1):
            betti_from_slopes(c, k)
            low = [(s, m) for s, m in c.profile(k).entries if s < 1]
            crew_vmod_length(SlopeProfile.from_multiset(k, low))
        h2 = c.profile(2)
        if c.dim >= 2:
            m1, rest = m11_decomposition(h2)
            _expect(slope_number(h2, 1) == m1 + rest, "m11 decomposition fails")


def _k3(slopes: SlopeProfile) -> SurfaceInvariants:
    return SurfaceInvariants(
        p=5,
        c1sq=0,
        c2=24,
        b1=0,
        b2=22,
        q=0,
        h01=0,
        pg=1,
        h11=20,
        chi=2,
        kodaira=KodairaDimension.ZERO,
        flags=SurfaceFlags(minimal=True),
        h2_slopes=slopes,
    )


def _check_k3(_: random.Random) -> None:
    for height in range(1, 11):
        slopes = SlopeProfile.from_multiset(
            2,
            [
                (1 - Fraction(1, height), height),
                (1, 22 - 2 * height),
                (1 + Fraction(1, height), height),
            ],
        )
        report = hw_numbers_surface(_k3(slopes))
        _expect(
            report.m11 == 20 == report.hW11, f"K3 of height {height}: m11 != 20"
        )
    report = hw_numbers_surface(_k3(SlopeProfile(2, ((Fraction(1), 22),))))
    _expect(
        (report.m11, report.T02) == (22, 1), "supersingular K3: m11, T02 != 22, 1"
    )


def _check_szpiro(_: random.Random) -> None:
    members = szpiro_series(2, 2, 6, 5, 4, 1, 3, m=2)
    _expect(
        [s.hW11 for s in members] == [1, -19, -119], "Szpiro hW11 != 1, -19, -119"
    )
    _expect(members[0].least_n_c1sq_gt_p_c2 == 1, "least n with c1^2 > p c2 != 1")
    _expect(members[0].least_n_c1sq_gt_pm_c2 == 2, "least n with c1^2 > p^2 c2 != 2")


def _check_threefolds(_: random.Random) -> None:
    hirokado = ThreefoldInvariants(c1c2=0, c3=48, b2=23, b3=0, is_calabi_yau=True)
    _expect(cy_formulaire(hirokado).hW[1][2] == -1, "Hirokado hW12 != -1")
    _expect(not liftability_necessary(hirokado), "Hirokado passes c3 <= 2 b2")
    nonliftable_characterization(hirokado)
    quintic = ThreefoldInvariants(c1c2=0, c3=-200, b2=1, b3=204, is_calabi_yau=True)
    table = cy_formulaire(quintic)
    _expect(table.hW[1][2] == 101, "quintic hW12 != 101")
    _expect(table.chi == (0, 100, -100, 0), "quintic chi(Omega^1) != 100")
    _expect(check_crew_formula(table), "Crew's formula fails for the quintic")


def _check_blowups(rng: random.Random) -> None:
    for _ in range(1_000):
        s = random_surface_with_slopes(rng)
        k = rng.randint(1, 5)
        before = hw_numbers_surface(s)
        after = hw_numbers_surface(blowup_transform(s, k))
        _expect(after.hW11 == before.hW11 + k, "blowup does not raise hW11 by k")
        _expect(after.T02 == before.T02, "blowup changes T02")
        split = rng.randint(1, k)
        if split < k:
            _expect(
                blowup_transform(blowup_transform(s, split), k - split)
                == blowup_transform(s, k),
                "blowups do not compose",
            )


CHECKS: tuple[tuple[str, Callable[[random.Random], None]], ...] = (
    ("generating series oracle", _check_series_oracle),
    ("hodge table", _check_table),
    ("general type margins", _check_margins),
    ("domino recursion", _check_domino_recursion),
    ("chern equivalences", _check_chern_equivalences),
    ("slope numbers", _check_slope_numbers),
    ("k3 fixtures", _check_k3),
    ("szpiro family", _check_szpiro),
    ("threefold fixtures", _check_threefolds),
    ("blowup invariance", _check_blowups),
)
"""The acceptance checks in execution order."""


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one acceptance check."""

    name: str
    """The check."""

    passed: bool
    """Whether it passed."""

    detail: str = ""
    """The failure message."""

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON object."""
        return {"check": self.name, "passed": self.passed, "detail": self.detail}


def run_selftest(seed: int = 0) -> list[CheckResult]:
    """Run every acceptance check.

    Args:
        seed: Seed of the random records; the same seed gives the same run.

    Returns:
        One result per check.
    """
    results = []
    for name, check in CHECKS:
        rng = random.Random(f"{seed}:{name}")
        try:
            check(rng)
        except (SelfTestError, ValueError) as exc:
            _logger.error("Self-test %s failed: %s", name, exc)
            results.append(CheckResult(name, False, str(exc)))
        else:
            _logger.debug("Self-test %s passed.", name)
            results.append(CheckResult(name, True))
    return results
