# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Surface invariants, Chern class inequalities and their equivalences."""

# Invariant names follow the usual notation (hW11, T02, ...).
# pylint: disable=invalid-name,too-many-lines

from __future__ import annotations

import enum
import logging
from dataclasses import asdict, dataclass, field, fields, replace
from fractions import Fraction
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from typing import Self

import sympy

from ._exactmath import binomial
from ._slopes import SlopeProfile, ValidationLevel, slope_number, validate_profile
from ._types import InconsistentInvariantsError, as_integer

_logger = logging.getLogger(__name__)


class KodairaDimension(enum.Enum):
    """Kodaira dimension of a surface, supplied as a label."""

    NEG_INFINITY = "-inf"
    """Ruled and rational surfaces."""

    ZERO = "0"
    """K3, Enriques, abelian and (quasi-)hyperelliptic surfaces."""

    ONE = "1"
    """Properly (quasi-)elliptic surfaces."""

    TWO = "2"
    """Surfaces of general type."""

    @classmethod
    def from_json(cls, value: str | int) -> KodairaDimension:
        """Convert a JSON value to a Kodaira dimension.

        Args:
            value: One of `"-inf"`, `0`, `1`, `2` (as number or string).

        Returns:
            The Kodaira dimension.

        Raises:
            ValueError: If the value is not a Kodaira dimension.
        """
        text = str(value).strip().lower()
        if text in ("-infinity", "-oo", "neg_infinity"):
            text = "-inf"
        for member in cls:
            if member.value == text:
                return member
        raise ValueError(f"Unknown Kodaira dimension {value!r}.")


@dataclass(frozen=True)
class SurfaceFlags:  # pylint: disable=too-many-instance-attributes
    """Boolean hypotheses about a surface that cannot be derived from numbers."""

    minimal: bool = False
    """The surface contains no (-1)-curves."""

    hodge_witt: bool = False
    """The slope spectral sequence degenerates at E1."""

    ordinary: bool = False
    """The surface is ordinary in the sense of Bloch-Kato."""

    mazur_ogus: bool = False
    """Hodge-de Rham degenerates and the crystalline cohomology is torsion-free."""

    pic_reduced: bool = False
    """The Picard scheme is reduced."""

    h2cris_torsion_free: bool = False
    """`H^2_cris(X/W)` is torsion-free."""

    supersingular: bool = False
    """`H^2_cris(X/W)` is of pure slope one."""

    quasi_elliptic: bool = False
    """The surface is quasi-elliptic (only possible in characteristic 2 and 3)."""

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Self:
        """Convert a JSON object to flags; missing flags are false.

        Args:
            data: The JSON object.

        Returns:
            The flags.
        """
        known = {f.name for f in fields(cls)}
        for key in data:
            if key not in known:
                _logger.warning("Unknown surface flag %s. Ignoring it.", key)
        return cls(**{key: bool(value) for key, value in data.items() if key in known})

    def to_dict(self) -> dict[str, bool]:
        """Convert the flags to a JSON object."""
        return asdict(self)


@dataclass(frozen=True, kw_only=True)
class SurfaceInvariants:  # pylint: disable=too-many-instance-attributes
    """Classical numerical invariants of a smooth projective surface."""

    p: int
    """The characteristic of the base field."""

    c1sq: int
    """The Chern number `c_1^2 = K_X^2`."""

    c2: int
    """The Chern number `c_2`, the étale Euler characteristic."""

    b1: int
    """The first Betti number."""

    b2: int
    """The second Betti number."""

    q: int
    """The dimension of the Albanese variety."""

    h01: int
    """The Hodge number `h^{0,1}`."""

    pg: int
    """The geometric genus `p_g = h^{0,2}`."""

    h11: int | None = None
    """The Hodge number `h^{1,1}`, if known."""

    chi: int
    """The holomorphic Euler characteristic `chi(O_X)`."""

    kodaira: KodairaDimension
    """The Kodaira dimension."""

    flags: SurfaceFlags = field(default_factory=SurfaceFlags)
    """The boolean hypotheses."""

    h2_slopes: SlopeProfile | None = None
    """The slopes of Frobenius on `H^2_cris(X/W)`, if known."""

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Self:
        """Convert a JSON object to surface invariants.

        Args:
            data: Object whose keys are the field names of this class.

        Returns:
            The surface invariants.

        Raises:
            ValueError: If a required field is missing.
        """
        try:
            h11 = data.get("h11")
            slopes = data.get("h2_slopes")
            return cls(
                p=int(data["p"]),
                c1sq=int(data["c1sq"]),
                c2=int(data["c2"]),
                b1=int(data["b1"]),
                b2=int(data["b2"]),
                q=int(data["q"]),
                h01=int(data["h01"]),
                pg=int(data["pg"]),
                h11=None if h11 is None else int(h11),
                chi=int(data["chi"]),
                kodaira=KodairaDimension.from_json(data["kodaira"]),
                flags=SurfaceFlags.from_dict(data.get("flags", {})),
                h2_slopes=None if slopes is None else SlopeProfile.from_dict(slopes),
            )
        except KeyError as exc:
            raise ValueError(f"Missing surface invariant {exc.args[0]!r}.") from exc

    def to_dict(self) -> dict[str, Any]:
        """Convert the surface invariants to a JSON object.

        Returns:
            The JSON object.
        """
        return {
            "p": self.p,
            "c1sq": self.c1sq,
            "c2": self.c2,
            "b1": self.b1,
            "b2": self.b2,
            "q": self.q,
            "h01": self.h01,
            "pg": self.pg,
            "h11": self.h11,
            "chi": self.chi,
            "kodaira": self.kodaira.value,
            "flags": self.flags.to_dict(),
            "h2_slopes": None if self.h2_slopes is None else self.h2_slopes.to_dict(),
        }


@dataclass(frozen=True)
class SurfaceReport:
    """Hodge-Witt numbers of a surface together with the evaluated predicates."""

    hW01: int
    """The Hodge-Witt number `h_W^{0,1} = b_1 / 2`."""

    hW02: int
    """The Hodge-Witt number `h_W^{0,2} = chi - 1 + b_1 / 2`."""

    hW11: int
    """The Hodge-Witt number `h_W^{1,1}`, possibly negative."""

    m11: int | None = None
    """The slope number `m^{1,1}`, when slopes are known."""

    T02: int | None = None
    """The domino number `T^{0,2}`, when slopes are known."""

    predicates: dict[str, bool | None] = field(default_factory=dict)
    """Chern class predicates; `None` where the data does not decide them."""

    diagnostics: tuple[str, ...] = ()
    """Consequences drawn from the numbers."""

    def to_dict(self) -> dict[str, Any]:
        """Convert the report to a JSON object.

        Returns:
            The JSON object.
        """
        return {
            "hW01": self.hW01,
            "hW02": self.hW02,
            "hW11": self.hW11,
            "m11": self.m11,
            "T02": self.T02,
            "predicates": dict(self.predicates),
            "diagnostics": list(self.diagnostics),
        }


def validate_surface(
    s: SurfaceInvariants, level: ValidationLevel = ValidationLevel.LENIENT
) -> list[str]:
    """Check the identities every surface satisfies.

    The Noether formula is checked in both forms. The `p_g` form is
    `10 + 12 p_g = c_1^2 + b_2 + 8q + 12(h^{0,1} - q)`, which follows from
    `12 chi = c_1^2 + c_2`, `chi = 1 - h^{0,1} + p_g` and
    `c_2 = 2 - 2 b_1 + b_2`.

    Args:
        s: The surface invariants.
        level: Validation level for the slopes of `H^2`.

    Returns:
        Descriptions of all violations, empty when the record is consistent.
    """
    violations: list[str] = []
    if not sympy.isprime(s.p):
        violations.append(f"p = {s.p} is not a prime")
    for name in ("b1", "b2", "q", "h01", "pg"):
        if getattr(s, name) < 0:
            violations.append(f"{name} is negative")
    if s.h11 is not None and s.h11 < 0:
        violations.append("h11 is negative")
    if 12 * s.chi != s.c1sq + s.c2:
        violations.append(
            f"Noether fails: 12*chi = {12 * s.chi} != c1^2 + c2 = {s.c1sq + s.c2}"
        )
    rhs = s.c1sq + s.b2 + 8 * s.q + 12 * (s.h01 - s.q)
    if 10 + 12 * s.pg != rhs:
        violations.append(
            f"Noether (p_g form) fails: 10 + 12*pg = {10 + 12 * s.pg} != {rhs}"
        )
    if s.b1 != 2 * s.q:
        violations.append(f"b1 = {s.b1} != 2q = {2 * s.q}")
    if not 0 <= s.h01 - s.q <= s.pg:
        violations.append("Bombieri bound 0 <= h01 - q <= pg fails")
    if s.chi != 1 - s.h01 + s.pg:
        violations.append(f"chi = {s.chi} != 1 - h01 + pg = {1 - s.h01 + s.pg}")
    if (5 * s.c2 - s.c1sq + 6 * s.b1) % 6:
        violations.append("(5c2 - c1^2 + 6b1)/6 is not an integer")
    violations.extend(_flag_violations(s))
    if s.h2_slopes is not None:
        violations.extend(_slope_violations(s, s.h2_slopes, level))
    return violations


def _flag_violations(s: SurfaceInvariants) -> list[str]:
    flags = s.flags
    violations = []
    if flags.ordinary and not flags.hodge_witt:
        violations.append("ordinary surfaces are Hodge-Witt")
    if flags.mazur_ogus and not (flags.pic_reduced and flags.h2cris_torsion_free):
        violations.append(
            "Mazur-Ogus surfaces have reduced Picard scheme and torsion-free H^2_cris"
        )
    if flags.pic_reduced and s.h01 != s.q:
        violations.append("a reduced Picard scheme needs h01 == q")
    if flags.quasi_elliptic and s.p not in (2, 3):
        violations.append(
            "quasi-elliptic surfaces only exist in characteristic 2 and 3"
        )
    return violations


def _slope_violations(
    s: SurfaceInvariants, slopes: SlopeProfile, level: ValidationLevel
) -> list[str]:
    violations = [f"H^2 slopes: {v}" for v in validate_profile(slopes, level)]
    if slopes.degree != 2:
        violations.append(f"H^2 slopes have degree {slopes.degree}")
    if slopes.betti != s.b2:
        violations.append(f"H^2 slopes add up to {slopes.betti}, but b2 = {s.b2}")
    if not slopes.is_self_dual():
        violations.append("H^2 slopes are not Poincaré self-dual")
    if s.flags.supersingular and slopes.slopes not in ((), (Fraction(1),)):
        violations.append("supersingular surfaces have H^2 of pure slope one")
    return violations


def _require_valid(s: SurfaceInvariants) -> None:
    violations = validate_surface(s)
    if violations:
        raise InconsistentInvariantsError(
            f"Invalid surface invariants: {'; '.join(violations)}"
        )


def ekedahl_h11(c1sq: int, c2: int, b1: int) -> int:
    """Return `h_W^{1,1} = b_1 + (5 c_2 - c_1^2) / 6`.

    Args:
        c1sq: The Chern number `c_1^2`.
        c2: The Chern number `c_2`.
        b1: The first Betti number.

    Returns:
        The Hodge-Witt number `h_W^{1,1}`.

    Raises:
        InconsistentInvariantsError: If the value is not an integer.
    """
    return as_integer(b1 + Fraction(5 * c2 - c1sq, 6), "h_W^{1,1}")


def _hw11(s: SurfaceInvariants) -> int:
    hw11 = ekedahl_h11(s.c1sq, s.c2, s.b1)
    noether = 10 * s.chi - s.c1sq + s.b1
    if hw11 != noether:
        raise InconsistentInvariantsError(
            f"The two formulas for h_W^{{1,1}} disagree: {hw11} != {noether}."
        )
    return hw11


def _slope_parts(s: SurfaceInvariants, hw11: int) -> tuple[int | None, int | None]:
    if s.h2_slopes is None:
        return None, None
    m11 = as_integer(slope_number(s.h2_slopes, 1), "m^{1,1}")
    excess = m11 - hw11
    if excess < 0 or excess % 2:
        raise InconsistentInvariantsError(
            f"T^{{0,2}} = (m11 - hW11)/2 = ({m11} - {hw11})/2 is not a "
            "non-negative integer."
        )
    return m11, excess // 2


def hw_numbers_surface(s: SurfaceInvariants) -> SurfaceReport:
    """Compute the Hodge-Witt numbers of a surface.

    Args:
        s: Valid surface invariants.

    Returns:
        The report with Hodge-Witt numbers, the slope and domino numbers when
            slopes are known, the Chern predicates and the diagnostics.
    """
    _require_valid(s)
    hw11 = _hw11(s)
    m11, t02 = _slope_parts(s, hw11)
    return SurfaceReport(
        hW01=s.b1 // 2,
        hW02=s.chi - 1 + s.b1 // 2,
        hW11=hw11,
        m11=m11,
        T02=t02,
        predicates=chern_predicates(s),
        diagnostics=(diagnose_negativity(s),),
    )


def chern_predicates(s: SurfaceInvariants) -> dict[str, bool | None]:
    """Evaluate the Chern class inequalities and their equivalent forms.

    `c_1^2 <= 5 c_2`, `h_W^{1,1} >= b_1` and `2 T^{0,2} + b_1 <= m^{1,1}` are
    equivalent, as are `c_1^2 <= 5 c_2 + 6 b_1` and `h_W^{1,1} >= 0`. For
    Mazur-Ogus surfaces the first also matches `h^{1,1} >= b_1`, for
    Hodge-Witt surfaces `m^{1,1} >= 2 m^{0,1}`.

    Args:
        s: Valid surface invariants.

    Returns:
        The predicates, `None` where optional data is missing.

    Raises:
        InconsistentInvariantsError: If an equivalence fails on the record.
    """
    _require_valid(s)
    hw11 = _hw11(s)
    m11, t02 = _slope_parts(s, hw11)
    a1 = s.c1sq <= 5 * s.c2
    a2 = hw11 >= s.b1
    a3 = None if m11 is None or t02 is None else 2 * t02 + s.b1 <= m11
    b1 = s.c1sq <= 5 * s.c2 + 6 * s.b1
    b2 = hw11 >= 0
    if a1 != a2 or (a3 is not None and a3 != a1) or b1 != b2:
        raise InconsistentInvariantsError(
            "The Chern class inequalities and their Hodge-Witt forms disagree."
        )
    mazur_ogus = None
    if s.flags.mazur_ogus and s.h11 is not None:
        if s.h11 != hw11:
            raise InconsistentInvariantsError(
                f"Mazur-Ogus surfaces have h^{{1,1}} = h_W^{{1,1}}, got {s.h11} "
                f"and {hw11}."
            )
        mazur_ogus = s.h11 >= s.b1
    hodge_witt = None
    if s.flags.hodge_witt and t02 is not None and m11 is not None:
        if t02:
            raise InconsistentInvariantsError(
                f"Hodge-Witt surfaces have T^{{0,2}} = 0, got {t02}."
            )
        hodge_witt = m11 >= s.b1
    if (s.flags.hodge_witt or s.flags.mazur_ogus) and hw11 < 0:
        raise InconsistentInvariantsError(
            "Hodge-Witt and Mazur-Ogus surfaces satisfy c1^2 <= 5c2 + 6b1."
        )
    return {
        "c1sq_le_5c2": a1,
        "hw11_ge_b1": a2,
        "twice_T02_plus_b1_le_m11": a3,
        "c1sq_le_5c2_plus_6b1": b1,
        "hw11_ge_0": b2,
        "h11_ge_b1": mazur_ogus,
        "m11_ge_2m01": hodge_witt,
    }


def blowup_transform(s: SurfaceInvariants, k: int) -> SurfaceInvariants:
    """Blow up a surface in `k` points.

    Each blowup lowers `c_1^2` by one and raises `c_2`, `b_2` and `h^{1,1}`
    by one. The exceptional curves add slope one classes to `H^2`, so
    `m^{1,1}` rises with `h_W^{1,1}` and `T^{0,2}` is unchanged.

    Args:
        s: Valid surface invariants.
        k: The number of points, at least 1.

    Returns:
        The invariants of the blown up surface, no longer minimal.

    Raises:
        ValueError: If `k < 1`.
    """
    if k < 1:
        raise ValueError(f"The number of blown up points must be at least 1, got {k}.")
    _require_valid(s)
    slopes = s.h2_slopes
    if slopes is not None:
        slopes = SlopeProfile.from_multiset(2, [*slopes.entries, (Fraction(1), k)])
    return replace(
        s,
        c1sq=s.c1sq - k,
        c2=s.c2 + k,
        b2=s.b2 + k,
        h11=None if s.h11 is None else s.h11 + k,
        flags=replace(s.flags, minimal=False),
        h2_slopes=slopes,
    )


def diagnose_negativity(s: SurfaceInvariants) -> str:
    """Explain what a negative `h_W^{1,1}` forces.

    Args:
        s: Valid surface invariants.

    Returns:
        `"no constraint"` when `h_W^{1,1} >= 0`; otherwise the forced
            classification, the forced domino, and any contradiction with the
            supplied labels, separated by `"; "`.
    """
    _require_valid(s)
    hw11 = _hw11(s)
    if hw11 >= 0:
        return "no constraint"
    if s.p >= 5:
        parts = ["general type (kappa=2) forced"]
        allowed = {KodairaDimension.TWO}
    else:
        parts = ["general type or quasi-elliptic (kappa=1) forced"]
        allowed = {KodairaDimension.TWO, KodairaDimension.ONE}
    parts.append("not Hodge-Witt; T^{0,2} >= 1")
    if s.kodaira not in allowed:
        parts.append(f"contradiction: kodaira dimension {s.kodaira.value} is excluded")
    elif s.kodaira is KodairaDimension.ONE and not s.flags.quasi_elliptic:
        parts.append(
            "contradiction: kodaira dimension 1 needs a quasi-elliptic surface"
        )
    if s.flags.hodge_witt:
        parts.append("contradiction: the surface is labelled Hodge-Witt")
    if s.kodaira is KodairaDimension.TWO:
        parts.append("Omega^1 is Bogomolov unstable")
    if s.b1 != 0 and 6 * hw11 >= -s.c1sq:
        parts.append(
            "note: conjecturally the Albanese image is a curve (unproven, numerics only)"
        )
    return "; ".join(parts)


@dataclass(frozen=True)
class RaynaudReport:
    """Lower and upper bounds on `h_W^{1,1}` of a surface of general type."""

    checks: dict[str, bool | None]
    """The bounds; `None` where the bound does not apply."""

    notes: tuple[str, ...] = ()
    """Which exception or consequence applies."""

    def to_dict(self) -> dict[str, Any]:
        """Convert the report to a JSON object."""
        return {"checks": dict(self.checks), "notes": list(self.notes)}


def raynaud_bounds(s: SurfaceInvariants) -> RaynaudReport:
    """Check `-c_1^2 <= h_W^{1,1} <= h^{1,1}` and `h_W^{1,1} > -c_1^2/6`.

    Args:
        s: Valid invariants of a surface of general type.

    Returns:
        The bounds with notes on the applicable exceptions.

    Raises:
        ValueError: If the surface is not of general type.
    """
    if s.kodaira is not KodairaDimension.TWO:
        raise ValueError("The bounds on h_W^{1,1} need a surface of general type.")
    _require_valid(s)
    hw11 = _hw11(s)
    lower = hw11 >= -s.c1sq
    strict = None if s.c2 <= 0 else 6 * hw11 > -s.c1sq
    upper = None if s.h11 is None else hw11 <= s.h11
    notes = []
    if not lower:
        if s.p <= 7:
            notes.append(
                "p <= 7 exceptional fibration case required: fibred over a curve "
                "of genus >= 2 with singular rational fibres of arithmetic genus <= 4"
            )
        else:
            notes.append("contradiction: h_W^{1,1} >= -c1^2 holds for p > 7")
    if strict is False:
        notes.append("contradiction: c2 > 0 forces h_W^{1,1} > -c1^2/6")
    if upper is False:
        notes.append("contradiction: h_W^{1,1} <= h^{1,1} fails")
    if 6 * hw11 < -s.c1sq:
        notes.append("X maps onto a curve of genus >= 1 with connected fibres")
    return RaynaudReport(
        checks={
            "hw11_ge_minus_c1sq": lower,
            "hw11_gt_minus_c1sq_over_6": strict,
            "hw11_le_h11": upper,
        },
        notes=tuple(notes),
    )


def sufficient_conditions_5c2(s: SurfaceInvariants) -> dict[str, bool]:
    """Evaluate the hypothesis sets that imply `c_1^2 <= 5 c_2`.

    The sets are: Hodge-Witt with `c_2 > 0` and `m^{1,1} >= 2 p_g`;
    Mazur-Ogus with `c_2 > 0` and `m^{1,1} >= 4 p_g`; Hodge-Witt with
    `c_2 > 0`, `p_g > 0`, reduced Picard scheme or torsion-free `H^2_cris`,
    and no slope of `H^2` below 1/2.

    Args:
        s: Valid invariants of a minimal surface of general type with slopes.

    Returns:
        For each hypothesis set whether it is met (the conclusion is then
            verified).

    Raises:
        ValueError: If the preconditions are not met.
        InconsistentInvariantsError: If a met hypothesis set has a failing
            conclusion.
    """
    if s.h2_slopes is None:
        raise ValueError("The hypotheses need the slopes of H^2.")
    if s.kodaira is not KodairaDimension.TWO or not s.flags.minimal:
        raise ValueError("The hypotheses need a minimal surface of general type.")
    _require_valid(s)
    m11 = as_integer(slope_number(s.h2_slopes, 1), "m^{1,1}")
    flags = s.flags
    min_slope = min(s.h2_slopes.slopes, default=Fraction(1))
    met = {
        "hodge_witt_m11_ge_2pg": flags.hodge_witt and s.c2 > 0 and m11 >= 2 * s.pg,
        "mazur_ogus_m11_ge_4pg": flags.mazur_ogus and s.c2 > 0 and m11 >= 4 * s.pg,
        "no_slope_below_half": (
            s.c2 > 0
            and s.pg > 0
            and flags.hodge_witt
            and (flags.pic_reduced or flags.h2cris_torsion_free)
            and min_slope >= Fraction(1, 2)
        ),
    }
    for name, hypotheses in met.items():
        if hypotheses and s.c1sq > 5 * s.c2:
            raise InconsistentInvariantsError(
                f"inconsistent invariants: the hypotheses {name} hold but "
                f"c1^2 = {s.c1sq} > 5c2 = {5 * s.c2}"
            )
    return met


class SupersingularRegime(enum.Enum):
    """Outcome of the dichotomy for supersingular Mazur-Ogus surfaces."""

    INEQ_HOLDS = "c1^2 <= 5c2"
    """The inequality `c_1^2 <= 5 c_2` holds."""

    NONLIFTABLE_REGIME = "c2 < 2chi"
    """`c_2 < 2 chi`: no smooth deformation lifts to characteristic zero."""


def supersingular_dichotomy(s: SurfaceInvariants) -> SupersingularRegime:
    """Decide which side of the supersingular dichotomy a surface is on.

    Args:
        s: Valid invariants of a minimal, supersingular, Mazur-Ogus surface
            of general type with `p_g > 0` and `c_2 > 0`.

    Returns:
        `INEQ_HOLDS` if `c_1^2 <= 5 c_2`, otherwise `NONLIFTABLE_REGIME`.

    Raises:
        ValueError: If the preconditions are not met.
        InconsistentInvariantsError: If neither side holds.
    """
    missing = [
        name
        for name, ok in (
            ("minimal", s.flags.minimal),
            ("general type", s.kodaira is KodairaDimension.TWO),
            ("pg > 0", s.pg > 0),
            ("c2 > 0", s.c2 > 0),
            ("Mazur-Ogus", s.flags.mazur_ogus),
            ("supersingular", s.flags.supersingular),
        )
        if not ok
    ]
    if missing:
        raise ValueError(f"The dichotomy needs: {', '.join(missing)}.")
    _require_valid(s)
    if s.c1sq <= 5 * s.c2:
        return SupersingularRegime.INEQ_HOLDS
    if s.c2 < 2 * s.chi:
        _logger.debug("c1^2 > 5c2 with c2 < 2chi: the surface does not lift.")
        return SupersingularRegime.NONLIFTABLE_REGIME
    raise InconsistentInvariantsError(
        "inconsistent invariants: neither c1^2 <= 5c2 nor c2 < 2chi holds"
    )


def supersingular_identity(s: SurfaceInvariants) -> bool:
    """Check `T^{0,2} = p_g - (h^{0,1} - q)` and the matching Betti identity.

    With `H^2` of pure slope one, `m^{1,1} = b_2`, and
    `5 c_2 - c_1^2 = 6(b_2 - b_1 - 2 p_g + 2(h^{0,1} - q))`.

    Args:
        s: Valid invariants of a supersingular surface with slopes.

    Returns:
        Whether both identities hold.

    Raises:
        ValueError: If the surface is not supersingular or has no slopes.
    """
    if not s.flags.supersingular or s.h2_slopes is None:
        raise ValueError("The identity needs a supersingular surface with slopes.")
    _require_valid(s)
    _, t02 = _slope_parts(s, _hw11(s))
    defect = s.h01 - s.q
    return t02 == s.pg - defect and 6 * (
        s.b2 - s.b1 - 2 * s.pg + 2 * defect
    ) == 5 * s.c2 - s.c1sq


CONDITIONAL_LABEL = "conditional on the ordinary cup product injectivity conjecture"
"""Label attached to the conditional consequences for ordinary surfaces."""


def ordinary_conjecture_consequences(s: SurfaceInvariants) -> dict[str, bool | None]:
    """Check what the cup product conjecture would imply for an ordinary surface.

    These are conditional checks, see `CONDITIONAL_LABEL`: `c_1^2 <= 5 c_2 + 6`,
    `c_1^2 <= 6 c_2` when `c_2 >= 6` and `h^{1,1} >= b_1 - 1`.

    The bound `c_1^2 <= 6 c_2` is not strict: equality is allowed, and the
    strict form already fails for `c_2 = 6`.

    Args:
        s: Valid invariants of a minimal, ordinary surface of general type.

    Returns:
        The predicates, `None` where they do not apply.

    Raises:
        ValueError: If the preconditions are not met.
    """
    if not (s.flags.ordinary and s.flags.minimal and s.kodaira is KodairaDimension.TWO):
        raise ValueError(
            "The conditional checks need a minimal ordinary surface of general type."
        )
    _require_valid(s)
    _logger.debug("Evaluating conditional checks: %s.", CONDITIONAL_LABEL)
    return {
        "c1sq_le_5c2_plus_6": s.c1sq <= 5 * s.c2 + 6,
        "c1sq_le_6c2": s.c1sq <= 6 * s.c2 if s.c2 >= 6 else None,
        "h11_ge_b1_minus_1": None if s.h11 is None else s.h11 >= s.b1 - 1,
    }


@dataclass(frozen=True)
class SzpiroSurface:  # pylint: disable=too-many-instance-attributes
    """One member `S_n` of a family of iterated Frobenius pullbacks."""

    g: int
    """Genus of the fibres."""

    q: int
    """Genus of the base curve."""

    d: int
    """Degree parameter of the fibration."""

    p: int
    """The characteristic."""

    b1: int
    """The first Betti number (an input, not derived)."""

    n: int
    """Number of Frobenius pullbacks."""

    c1sq: int
    """`c_1^2 = p^n d + 8(g-1)(q-1)`."""

    c2: int
    """`c_2 = 4(g-1)(q-1)`, independent of `n`."""

    hW11: int
    """The Hodge-Witt number `h_W^{1,1}`."""

    m: int
    """The exponent used for `least_n_c1sq_gt_pm_c2`."""

    least_n_c1sq_gt_p_c2: int
    """Least `n` with `c_1^2 > p c_2`."""

    least_n_c1sq_gt_pm_c2: int
    """Least `n` with `c_1^2 > p^m c_2`."""

    def predicates(self) -> dict[str, bool]:
        """Evaluate the Chern class inequalities on this member.

        Returns:
            The predicates.
        """
        return {
            "c1sq_le_5c2": self.c1sq <= 5 * self.c2,
            "c1sq_le_5c2_plus_6b1": self.c1sq <= 5 * self.c2 + 6 * self.b1,
            "hw11_ge_0": self.hW11 >= 0,
            "hw11_gt_minus_c1sq_over_6": 6 * self.hW11 > -self.c1sq,
        }

    def to_dict(self) -> dict[str, Any]:
        """Convert the member to a JSON object."""
        return {**asdict(self), **self.predicates()}


def _szpiro_c1sq(g: int, q: int, d: int, p: int, n: int) -> int:
    return p**n * d + 8 * (g - 1) * (q - 1)


def _least_n_exceeding(g: int, q: int, d: int, p: int, factor: int) -> int:
    c2 = 4 * (g - 1) * (q - 1)
    n = 0
    while _szpiro_c1sq(g, q, d, p, n) <= factor * c2:
        n += 1
    return n


def szpiro_family(
    g: int, q: int, d: int, p: int, b1: int, n: int, m: int = 1
) -> SzpiroSurface:
    """Compute the member `S_n` of a family of iterated Frobenius pullbacks.

    `c_2` stays `4(g-1)(q-1)` while `c_1^2 = p^n d + 8(g-1)(q-1)` grows, so
    `h_W^{1,1} = b_1 + (12(g-1)(q-1) - p^n d)/6` tends to minus infinity.

    Args:
        g: Genus of the fibres, at least 2.
        q: Genus of the base, at least 2.
        d: Degree parameter, at least 1.
        p: The characteristic, a prime.
        b1: The first Betti number, even and non-negative.
        n: Number of Frobenius pullbacks, non-negative.
        m: Exponent for the least `n` with `c_1^2 > p^m c_2`, at least 1.

    Returns:
        The member.

    Raises:
        ValueError: If a parameter is out of range.
        InconsistentInvariantsError: If `h_W^{1,1}` is not an integer.
    """
    # pylint: disable=too-many-arguments, too-many-positional-arguments
    if g < 2 or q < 2:
        raise ValueError(f"Need g >= 2 and q >= 2, got g={g}, q={q}.")
    if d < 1:
        raise ValueError(f"The degree parameter must be at least 1, got {d}.")
    if not sympy.isprime(p):
        raise ValueError(f"The characteristic must be a prime, got {p}.")
    if b1 < 0 or b1 % 2:
        raise ValueError(f"b1 must be even and non-negative, got {b1}.")
    if n < 0 or m < 1:
        raise ValueError(f"Need n >= 0 and m >= 1, got n={n}, m={m}.")
    c2 = 4 * (g - 1) * (q - 1)
    c1sq = _szpiro_c1sq(g, q, d, p, n)
    if (p**n * d) % 6:
        raise InconsistentInvariantsError(
            f"h_W^{{1,1}} is not an integer: p^n * d = {p**n * d} must be divisible "
            "by 6, so d must be divisible by 6 / gcd(6, p^n)."
        )
    return SzpiroSurface(
        g=g,
        q=q,
        d=d,
        p=p,
        b1=b1,
        n=n,
        c1sq=c1sq,
        c2=c2,
        hW11=ekedahl_h11(c1sq, c2, b1),
        m=m,
        least_n_c1sq_gt_p_c2=_least_n_exceeding(g, q, d, p, p),
        least_n_c1sq_gt_pm_c2=_least_n_exceeding(g, q, d, p, p**m),
    )


def szpiro_series(
    g: int, q: int, d: int, p: int, b1: int, n_min: int, n_max: int, m: int = 1
) -> list[SzpiroSurface]:
    """Compute the members `S_n` for `n_min <= n <= n_max`.

    Args:
        g: Genus of the fibres.
        q: Genus of the base.
        d: Degree parameter.
        p: The characteristic.
        b1: The first Betti number.
        n_min: First member.
        n_max: Last member.
        m: Exponent for the least `n` with `c_1^2 > p^m c_2`.

    Returns:
        The members in increasing `n`.

    Raises:
        ValueError: If the range is empty.
    """
    # pylint: disable=too-many-arguments, too-many-positional-arguments
    if n_max < n_min:
        raise ValueError(f"Empty range of members: {n_min}..{n_max}.")
    return [szpiro_family(g, q, d, p, b1, n, m) for n in range(n_min, n_max + 1)]


def surface_from_hypersurface(
    d: int, p: int, h2_slopes: SlopeProfile | None = None
) -> SurfaceInvariants:
    """Return the invariants of a smooth surface of degree `d` in `P^3`.

    Args:
        d: The degree.
        p: The characteristic.
        h2_slopes: The slopes of `H^2`, if known.

    Returns:
        The invariants; such surfaces are Mazur-Ogus.

    Raises:
        ValueError: If `d < 1`.
    """
    if d < 1:
        raise ValueError(f"The degree must be at least 1, got {d}.")
    c1sq = d * (d - 4) ** 2
    c2 = d * (d * d - 4 * d + 6)
    pg = binomial(d - 1, 3)
    b2 = c2 - 2
    if d <= 3:
        kodaira = KodairaDimension.NEG_INFINITY
    elif d == 4:
        kodaira = KodairaDimension.ZERO
    else:
        kodaira = KodairaDimension.TWO
    return SurfaceInvariants(
        p=p,
        c1sq=c1sq,
        c2=c2,
        b1=0,
        b2=b2,
        q=0,
        h01=0,
        pg=pg,
        h11=b2 - 2 * pg,
        chi=(c1sq + c2) // 12,
        kodaira=kodaira,
        flags=SurfaceFlags(
            minimal=d != 3,
            mazur_ogus=True,
            pic_reduced=True,
            h2cris_torsion_free=True,
        ),
        h2_slopes=h2_slopes,
    )
