# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Slopes of Frobenius on crystalline cohomology and the slope numbers."""

from __future__ import annotations

import enum
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from typing import Self

from ._types import (
    InconsistentInvariantsError,
    Matrix,
    anti_diagonal_sum,
    as_integer,
    format_rational,
    parse_rational,
)

_logger = logging.getLogger(__name__)


class ValidationLevel(enum.Enum):
    """How thoroughly slope data is validated."""

    LENIENT = "lenient"
    """Range, ordering and multiplicity checks only."""

    STRICT = "strict"
    """Additionally require a slope `r/s` to have multiplicity divisible by `s`."""

    @classmethod
    def from_json(cls, value: str) -> ValidationLevel:
        """Convert a JSON or CLI label to a validation level.

        Args:
            value: The label.

        Returns:
            The matching level, `LENIENT` for unknown labels.
        """
        for level in cls:
            if level.value == value.lower():
                return level
        _logger.warning("Unknown validation level %s. Returning LENIENT.", value)
        return cls.LENIENT


@dataclass(frozen=True)
class SlopeProfile:
    """Slopes of Frobenius with multiplicities on one cohomology group."""

    degree: int
    """The cohomological degree."""

    entries: tuple[tuple[Fraction, int], ...] = field(default=())
    """The `(slope, multiplicity)` pairs, expected in increasing slope order."""

    def __post_init__(self) -> None:
        """Coerce the entries to exact values without reordering them."""
        object.__setattr__(
            self,
            "entries",
            tuple((parse_rational(slope), int(mult)) for slope, mult in self.entries),
        )

    @classmethod
    def from_multiset(
        cls, degree: int, entries: Iterable[tuple[Fraction | int | str, int]]
    ) -> Self:
        """Create a profile, merging equal slopes and sorting them.

        Args:
            degree: The cohomological degree.
            entries: `(slope, multiplicity)` pairs in any order.

        Returns:
            The normalized profile; slopes with total multiplicity 0 are dropped.
        """
        merged: dict[Fraction, int] = {}
        for slope, mult in entries:
            key = parse_rational(slope)
            merged[key] = merged.get(key, 0) + int(mult)
        kept = tuple((slope, mult) for slope, mult in sorted(merged.items()) if mult)
        return cls(degree, kept)

    @property
    def betti(self) -> int:
        """The Betti number, the sum of all multiplicities."""
        return sum(mult for _, mult in self.entries)

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        """The slopes, in stored order."""
        return tuple(slope for slope, _ in self.entries)

    def multiplicity(self, slope: Fraction | int) -> int:
        """Return the total multiplicity of a slope (0 if absent)."""
        return sum(mult for value, mult in self.entries if value == slope)

    def is_self_dual(self) -> bool:
        """Check whether `lambda -> degree - lambda` preserves the multiset."""
        mirrored = SlopeProfile.from_multiset(
            self.degree, ((self.degree - slope, mult) for slope, mult in self.entries)
        )
        return mirrored == SlopeProfile.from_multiset(self.degree, self.entries)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Self:
        """Convert a JSON object to a slope profile.

        Args:
            data: An object such as `{"degree": 2, "slopes": [["1/2", 2]]}`.

        Returns:
            The profile, in the order given.
        """
        return cls(
            int(data["degree"]),
            tuple((parse_rational(slope), int(mult)) for slope, mult in data["slopes"]),
        )

    def to_dict(self) -> dict[str, Any]:
        """Convert the profile to a JSON object.

        Returns:
            The profile with slopes as exact fraction strings.
        """
        return {
            "degree": self.degree,
            "slopes": [[format_rational(slope), mult] for slope, mult in self.entries],
        }


def validate_profile(
    p: SlopeProfile, level: ValidationLevel = ValidationLevel.LENIENT
) -> list[str]:
    """Validate a slope profile.

    Args:
        p: The profile to validate.
        level: The validation level.

    Returns:
        Descriptions of all violations, empty when the profile is valid.
    """
    violations: list[str] = []
    if p.degree < 0:
        violations.append(f"negative degree {p.degree}")
    for slope, mult in p.entries:
        if slope < 0 or slope > p.degree:
            violations.append(
                f"slope out of range: {format_rational(slope)} not in [0, {p.degree}]"
            )
        if mult <= 0:
            violations.append(
                f"non-positive multiplicity {mult} for slope {format_rational(slope)}"
            )
        elif level is ValidationLevel.STRICT and mult % slope.denominator:
            violations.append(
                f"multiplicity {mult} of slope {format_rational(slope)} is not "
                f"divisible by {slope.denominator}"
            )
    if any(a >= b for a, b in zip(p.slopes, p.slopes[1:])):
        violations.append("slopes not strictly increasing")
    return violations


def poincare_dual(p: SlopeProfile, n: int) -> SlopeProfile:
    """Return the Poincaré dual profile on a variety of dimension `n`.

    Args:
        p: The profile of degree `i`.
        n: The dimension of the variety.

    Returns:
        The profile of degree `2n - i` with slopes `n - lambda`.

    Raises:
        ValueError: If the degree of `p` exceeds `2n`.
    """
    if p.degree > 2 * n:
        raise ValueError(
            f"A degree {p.degree} profile has no dual on a variety of dimension {n}."
        )
    return SlopeProfile.from_multiset(
        2 * n - p.degree, ((n - slope, mult) for slope, mult in p.entries)
    )


@dataclass(frozen=True)
class CrystalProfile:
    """Slope profiles of all crystalline cohomology groups of a variety."""

    dim: int
    """The dimension `n` of the variety."""

    profiles: tuple[SlopeProfile, ...]
    """Profiles of degrees `0 .. 2n`, indexed by degree."""

    def __post_init__(self) -> None:
        """Check the number of profiles.

        Raises:
            ValueError: If the dimension is not positive or a degree is missing.
        """
        if self.dim < 1:
            raise ValueError(f"The dimension must be at least 1, got {self.dim}.")
        object.__setattr__(self, "profiles", tuple(self.profiles))
        if len(self.profiles) != 2 * self.dim + 1:
            raise ValueError(
                f"A variety of dimension {self.dim} needs {2 * self.dim + 1} "
                f"profiles, got {len(self.profiles)}."
            )

    def profile(self, degree: int) -> SlopeProfile:
        """Return the profile of a degree, empty outside `0 .. 2n`."""
        if 0 <= degree <= 2 * self.dim:
            return self.profiles[degree]
        return SlopeProfile(degree)

    @classmethod
    def from_middle(cls, dim: int, middle: SlopeProfile) -> Self:
        """Build the profile of a variety with the cohomology of `P^n` off the middle.

        This is the situation of smooth hypersurfaces: `H^{2k}` has the single
        slope `k` for `2k != n` and odd degrees other than `n` vanish.

        Args:
            dim: The dimension `n`.
            middle: The profile of degree `n`.

        Returns:
            The crystal profile.

        Raises:
            ValueError: If `middle` does not have degree `dim`.
        """
        if middle.degree != dim:
            raise ValueError(
                f"The middle profile must have degree {dim}, got {middle.degree}."
            )
        profiles = []
        for degree in range(2 * dim + 1):
            if degree == dim:
                profiles.append(middle)
            elif degree % 2 == 0:
                profiles.append(SlopeProfile(degree, ((Fraction(degree // 2), 1),)))
            else:
                profiles.append(SlopeProfile(degree))
        return cls(dim, tuple(profiles))

    def validate(self, level: ValidationLevel = ValidationLevel.LENIENT) -> list[str]:
        """Validate every profile and the Poincaré duality between them.

        Args:
            level: The validation level passed on to `validate_profile`.

        Returns:
            Descriptions of all violations, empty when the data is consistent.
        """
        n = self.dim
        violations: list[str] = []
        for degree, prof in enumerate(self.profiles):
            if prof.degree != degree:
                violations.append(f"profile {degree} has degree {prof.degree}")
            violations.extend(f"H^{degree}: {v}" for v in validate_profile(prof, level))
            low, high = max(0, degree - n), min(degree, n)
            violations.extend(
                f"H^{degree}: slope {format_rational(slope)} outside [{low}, {high}]"
                for slope in prof.slopes
                if not low <= slope <= high
            )
        for degree in range(n + 1):
            mirror = self.profiles[2 * n - degree]
            if poincare_dual(self.profiles[degree], n) != SlopeProfile.from_multiset(
                mirror.degree, mirror.entries
            ):
                violations.append(
                    f"H^{degree} and H^{2 * n - degree} are not Poincaré dual"
                )
        if self.profiles[0].entries != ((Fraction(0), 1),):
            violations.append("H^0 must be {(0, 1)}")
        if self.profiles[2 * n].entries != ((Fraction(n), 1),):
            violations.append(f"H^{2 * n} must be {{({n}, 1)}}")
        return violations

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Self:
        """Convert a JSON object to a crystal profile.

        Args:
            data: An object with `dim` and a list of profile objects.

        Returns:
            The crystal profile.
        """
        return cls(
            int(data["dim"]),
            tuple(SlopeProfile.from_dict(item) for item in data["profiles"]),
        )

    def to_dict(self) -> dict[str, Any]:
        """Convert the crystal profile to a JSON object.

        Returns:
            The JSON object.
        """
        return {"dim": self.dim, "profiles": [p.to_dict() for p in self.profiles]}


def _slope_weight(slope: Fraction, i: int) -> Fraction:
    # Tent function centred at i on the half-open windows [i-1, i) and [i, i+1).
    if i - 1 <= slope < i:
        return slope - i + 1
    if i <= slope < i + 1:
        return i + 1 - slope
    return Fraction(0)


def slope_number(p: SlopeProfile, i: int) -> Fraction:
    """Return the contribution of one cohomology group to a slope number.

    For `p` of degree `i + j` this is `m^{i,j}` before the integrality check.

    Args:
        p: The profile of degree `i + j`.
        i: The first index of the slope number.

    Returns:
        The weighted multiplicity sum.
    """
    return sum(
        (_slope_weight(slope, i) * mult for slope, mult in p.entries), Fraction(0)
    )


def slope_numbers(c: CrystalProfile) -> Matrix:
    """Compute the matrix of slope numbers `m^{i,j}`.

    Args:
        c: The crystal profile of a variety of dimension `n`.

    Returns:
        The `(n+1) x (n+1)` matrix of slope numbers.

    Raises:
        InconsistentInvariantsError: If some `m^{i,j}` is not an integer.
    """
    size = c.dim + 1
    return tuple(
        tuple(
            as_integer(slope_number(c.profile(i + j), i), f"m^{{{i},{j}}}")
            for j in range(size)
        )
        for i in range(size)
    )


def check_slope_symmetries(c: CrystalProfile) -> bool:
    """Check `m^{i,j} = m^{j,i} = m^{n-i,n-j}`.

    Args:
        c: The crystal profile.

    Returns:
        Whether both symmetries hold; `False` if the slope numbers are not
            integral.
    """
    try:
        m = slope_numbers(c)
    except InconsistentInvariantsError as exc:
        _logger.warning("Slope numbers are not defined: %s", exc)
        return False
    n = c.dim
    return all(
        m[i][j] == m[j][i] == m[n - i][n - j]
        for i in range(n + 1)
        for j in range(n + 1)
    )


def betti_from_slopes(c: CrystalProfile, k: int) -> int:
    """Return the Betti number `b_k` and check it against the slope numbers.

    Args:
        c: The crystal profile.
        k: The degree, `0 <= k <= 2n`.

    Returns:
        The sum of the multiplicities of the degree `k` profile.

    Raises:
        ValueError: If `k` is out of range.
        InconsistentInvariantsError: If the slope numbers on `i + j = k` do
            not add up to the Betti number.
    """
    if not 0 <= k <= 2 * c.dim:
        raise ValueError(f"The degree must lie in [0, {2 * c.dim}], got {k}.")
    betti = c.profile(k).betti
    total = anti_diagonal_sum(slope_numbers(c), k)
    if total != betti:
        raise InconsistentInvariantsError(
            f"The slope numbers of degree {k} add up to {total}, but b_{k} = {betti}."
        )
    return betti


def crew_vmod_length(p: SlopeProfile) -> int:
    """Return the length of `M/VM` for slopes in `[0, 1)`.

    Args:
        p: A profile whose slopes all lie in `[0, 1)`.

    Returns:
        `sum (1 - lambda) * m_lambda`.

    Raises:
        ValueError: If a slope lies outside `[0, 1)`.
    """
    if any(not 0 <= slope < 1 for slope in p.slopes):
        raise ValueError("The V-quotient length needs all slopes in [0, 1).")
    length = sum(((1 - slope) * mult for slope, mult in p.entries), Fraction(0))
    return as_integer(length, "length(M/VM)")


def m11_decomposition(p: SlopeProfile) -> tuple[int, Fraction]:
    """Split `m^{1,1}` into its slope one part and the contribution of other slopes.

    Args:
        p: A Poincaré self-dual profile of degree 2.

    Returns:
        The multiplicity `m_1` of slope 1 and `2 * sum_{0 < lambda < 1} lambda
            * m_lambda`; their sum is `m^{1,1}`.

    Raises:
        ValueError: If the profile is not a valid degree 2 profile.
        InconsistentInvariantsError: If the profile is not self-dual.
    """
    if p.degree != 2:
        raise ValueError(f"The decomposition needs a degree 2 profile, got {p.degree}.")
    violations = validate_profile(p)
    if violations:
        raise ValueError(f"Invalid profile: {'; '.join(violations)}")
    if not p.is_self_dual():
        raise InconsistentInvariantsError("The degree 2 profile is not self-dual.")
    sub = sum(
        (slope * mult for slope, mult in p.entries if 0 < slope < 1), Fraction(0)
    )
    return p.multiplicity(1), 2 * sub


def newton_hodge_profile(degree: int, hodge_row: Sequence[int]) -> SlopeProfile:
    """Return the ordinary profile: slope `p` with multiplicity `h^{p, degree-p}`.

    Args:
        degree: The cohomological degree.
        hodge_row: The Hodge numbers `h^{p, degree-p}` for `p = 0 .. degree`.

    Returns:
        The profile whose Newton polygon is the Hodge polygon.
    """
    return SlopeProfile.from_multiset(
        degree, ((p, h) for p, h in enumerate(hodge_row) if h)
    )


def is_ordinary_profile(c: CrystalProfile, hodge: Matrix) -> bool:
    """Check whether the slope numbers coincide with the Hodge numbers."""
    try:
        return slope_numbers(c) == hodge
    except InconsistentInvariantsError:
        return False
