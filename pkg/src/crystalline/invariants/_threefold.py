# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Hodge-Witt numbers of threefolds and the Calabi-Yau liftability criteria."""

# pylint: disable=invalid-name

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from typing import Self

from ._hodgewitt import HodgeWittTable
from ._types import InconsistentInvariantsError, Matrix, as_integer, make_matrix

_logger = logging.getLogger(__name__)


@dataclass(frozen=True, kw_only=True)
class ThreefoldInvariants:  # pylint: disable=too-many-instance-attributes
    """Numerical invariants of a smooth projective threefold."""

    c1c2: int
    """The Chern number `c_1 c_2`."""

    c3: int | None = None
    """The Chern number `c_3`; derived from `b_3` for Calabi-Yau threefolds."""

    b2: int
    """The second Betti number."""

    b3: int | None = None
    """The third Betti number; derived from `c_3` for Calabi-Yau threefolds."""

    hodge: Matrix | None = None
    """The Hodge numbers, if known."""

    is_calabi_yau: bool = False
    """Whether the canonical bundle is trivial and `H^1(O) = H^2(O) = 0`."""

    hodge_witt: bool | None = None
    """Whether the threefold is Hodge-Witt, if known."""

    h2cris_torsion_free: bool | None = None
    """Whether `H^2_cris(X/W)` is torsion-free, if known."""

    h0_omega1_zero: bool | None = None
    """Whether `H^0(X, Omega^1) = 0`, if known."""

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Self:
        """Convert a JSON object to threefold invariants.

        Args:
            data: Object whose keys are the field names of this class.

        Returns:
            The invariants.

        Raises:
            ValueError: If a required field is missing.
        """

        def optional_int(key: str) -> int | None:
            value = data.get(key)
            return None if value is None else int(value)

        def optional_bool(key: str) -> bool | None:
            value = data.get(key)
            return None if value is None else bool(value)

        hodge = data.get("hodge")
        try:
            return cls(
                c1c2=int(data.get("c1c2", 0)),
                c3=optional_int("c3"),
                b2=int(data["b2"]),
                b3=optional_int("b3"),
                hodge=None if hodge is None else make_matrix(hodge),
                is_calabi_yau=bool(data.get("is_calabi_yau", False)),
                hodge_witt=optional_bool("hodge_witt"),
                h2cris_torsion_free=optional_bool("h2cris_torsion_free"),
                h0_omega1_zero=optional_bool("h0_omega1_zero"),
            )
        except KeyError as exc:
            raise ValueError(f"Missing threefold invariant {exc.args[0]!r}.") from exc

    def to_dict(self) -> dict[str, Any]:
        """Convert the invariants to a JSON object."""
        return {
            "c1c2": self.c1c2,
            "c3": self.c3,
            "b2": self.b2,
            "b3": self.b3,
            "hodge": None if self.hodge is None else [list(row) for row in self.hodge],
            "is_calabi_yau": self.is_calabi_yau,
            "hodge_witt": self.hodge_witt,
            "h2cris_torsion_free": self.h2cris_torsion_free,
            "h0_omega1_zero": self.h0_omega1_zero,
        }


def validate_threefold(t: ThreefoldInvariants) -> list[str]:
    """Check the identities threefold invariants satisfy.

    For Calabi-Yau threefolds `b_1 = b_5 = 0`, so `c_3 = 2 + 2 b_2 - b_3`;
    when both `c_3` and `b_3` are given this is cross-checked.

    Args:
        t: The invariants.

    Returns:
        Descriptions of all violations, empty when the record is consistent.
    """
    violations: list[str] = []
    if t.b2 < 0:
        violations.append("b2 is negative")
    if t.b3 is not None and (t.b3 < 0 or t.b3 % 2):
        violations.append(f"b3 = {t.b3} must be even and non-negative")
    if t.hodge is not None:
        if len(t.hodge) != 4 or any(len(row) != 4 for row in t.hodge):
            violations.append("the Hodge matrix must be 4 x 4")
        elif any(value < 0 for row in t.hodge for value in row):
            violations.append("Hodge numbers must be non-negative")
    if t.is_calabi_yau:
        violations.extend(_calabi_yau_violations(t))
    elif t.c3 is None:
        violations.append("c3 is required unless the threefold is Calabi-Yau")
    if not violations and (t.c3 is not None or t.b3 is not None):
        chi = Fraction(-23, 24) * t.c1c2 - Fraction(resolved_c3(t), 2)
        if chi.denominator != 1:
            violations.append(f"chi(Omega^1) = {chi} is not an integer")
    return violations


def _calabi_yau_violations(t: ThreefoldInvariants) -> list[str]:
    violations = []
    if t.c1c2 != 0:
        violations.append(f"c1c2 = {t.c1c2} must vanish for a Calabi-Yau threefold")
    if t.hodge is not None and len(t.hodge) == 4 and tuple(t.hodge[0]) != (1, 0, 0, 1):
        violations.append("Calabi-Yau threefolds have Hodge row (1, 0, 0, 1)")
    if t.c3 is None and t.b3 is None:
        violations.append("c3 or b3 is required")
    elif t.c3 is not None and t.b3 is not None and t.c3 != 2 + 2 * t.b2 - t.b3:
        violations.append(
            f"c3 = {t.c3} != 2 + 2*b2 - b3 = {2 + 2 * t.b2 - t.b3}"
        )
    if t.c3 is not None and t.c3 % 2:
        violations.append(f"c3 = {t.c3} must be even for a Calabi-Yau threefold")
    return violations


def _require_valid(t: ThreefoldInvariants) -> None:
    violations = validate_threefold(t)
    if violations:
        raise InconsistentInvariantsError(
            f"Invalid threefold invariants: {'; '.join(violations)}"
        )


def _require_calabi_yau(t: ThreefoldInvariants) -> None:
    if not t.is_calabi_yau:
        raise ValueError("This needs a Calabi-Yau threefold.")
    _require_valid(t)


def resolved_c3(t: ThreefoldInvariants) -> int:
    """Return `c_3`, deriving it as `2 + 2 b_2 - b_3` for Calabi-Yau threefolds.

    Args:
        t: The invariants.

    Returns:
        The Chern number `c_3`.

    Raises:
        ValueError: If `c_3` is neither given nor derivable.
    """
    if t.c3 is not None:
        return t.c3
    if t.is_calabi_yau and t.b3 is not None:
        return 2 + 2 * t.b2 - t.b3
    raise ValueError("c3 is neither given nor derivable from b3.")


def resolved_b3(t: ThreefoldInvariants) -> int | None:
    """Return `b_3`, deriving it from `c_3` for Calabi-Yau threefolds."""
    if t.b3 is not None:
        return t.b3
    if t.is_calabi_yau and t.c3 is not None:
        return 2 + 2 * t.b2 - t.c3
    return None


def chi_omega1(t: ThreefoldInvariants) -> int:
    """Compute `chi(Omega^1) = -23/24 c_1 c_2 - c_3 / 2` by Riemann-Roch.

    Args:
        t: The invariants.

    Returns:
        The Euler characteristic of `Omega^1`.

    Raises:
        InconsistentInvariantsError: If the result is not an integer.
    """
    value = Fraction(-23, 24) * t.c1c2 - Fraction(resolved_c3(t), 2)
    return as_integer(value, "chi(Omega^1)")


def cy_formulaire(t: ThreefoldInvariants) -> HodgeWittTable:
    """Compute the Hodge-Witt table of a Calabi-Yau threefold.

    `h_W^{1,1} = b_2` and `h_W^{1,2} = b_2 - c_3 / 2`; the remaining entries
    follow from symmetry and duality. The only possible domino is
    `T^{0,3} = T^{1,2}`, which is 1 exactly when the threefold is not
    Hodge-Witt, forced when `h_W^{1,2} < 0`.

    Args:
        t: Valid invariants of a Calabi-Yau threefold.

    Returns:
        The table, with `chi(Omega^i)` and the Hodge numbers when known.

    Raises:
        InconsistentInvariantsError: If the numbers admit no slope and domino
            numbers, for example `h_W^{1,2} < -1`.
    """
    _require_calabi_yau(t)
    b2 = t.b2
    hw12 = as_integer(b2 - Fraction(resolved_c3(t), 2), "h_W^{1,2}")
    if hw12 < 0 and t.hodge_witt:
        raise InconsistentInvariantsError(
            f"h_W^{{1,2}} = {hw12} < 0, but the threefold is labelled Hodge-Witt."
        )
    t03 = 1 if hw12 < 0 or t.hodge_witt is False else 0
    m12 = hw12 + t03
    if m12 < 0:
        raise InconsistentInvariantsError(
            f"h_W^{{1,2}} = {hw12} < -1 is impossible for a Calabi-Yau threefold."
        )
    m03 = 1 - t03
    m = make_matrix(
        [
            [1, 0, 0, m03],
            [0, b2, m12, 0],
            [0, m12, b2, 0],
            [m03, 0, 0, 1],
        ]
    )
    T = make_matrix([[0, 0, 0, t03], [0, 0, t03, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    chi1 = chi_omega1(t)
    return HodgeWittTable.from_parts(m, T, hodge=t.hodge, chi=(0, chi1, -chi1, 0))


class ConditionStatus(enum.Enum):
    """Status of one condition of an equivalence."""

    HOLDS = "holds"
    """The condition holds on the supplied numbers."""

    FAILS = "fails"
    """The condition fails on the supplied numbers."""

    NOT_CHECKABLE = "not-checkable"
    """The condition needs data beyond Betti and Chern numbers."""

    @classmethod
    def of(cls, value: bool) -> ConditionStatus:
        """Return `HOLDS` or `FAILS`."""
        return cls.HOLDS if value else cls.FAILS


@dataclass(frozen=True)
class CharacterizationReport:
    """The equivalent conditions for `b_3 = 0` on a Calabi-Yau threefold."""

    conditions: dict[str, ConditionStatus]
    """Status of each condition."""

    notes: tuple[str, ...] = ()
    """Implications that cannot be checked numerically."""

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON object."""
        return {
            "conditions": {key: value.value for key, value in self.conditions.items()},
            "notes": list(self.notes),
        }


def nonliftable_characterization(t: ThreefoldInvariants) -> CharacterizationReport:
    """Evaluate the conditions equivalent to `b_3 = 0` for a Calabi-Yau threefold.

    These are: `h_W^{1,2} = -1`; `h_W^{1,2} < 0`; `H^3_cris(X/W)` is torsion;
    `b_3 = 0`; the threefold is not Hodge-Witt and `m^{1,2} = 0`. Torsion of
    `H^3` is not decidable from numbers, and the last condition only when
    the Hodge-Witt property is known.

    Args:
        t: Valid invariants of a Calabi-Yau threefold.

    Returns:
        The report.

    Raises:
        InconsistentInvariantsError: If the checkable conditions disagree.
    """
    table = cy_formulaire(t)
    hw12 = table.hW[1][2]
    b3 = resolved_b3(t)
    conditions = {
        "hw12_eq_minus_1": ConditionStatus.of(hw12 == -1),
        "hw12_negative": ConditionStatus.of(hw12 < 0),
        "h3cris_torsion": ConditionStatus.NOT_CHECKABLE,
        "b3_zero": ConditionStatus.of(b3 == 0),
        "not_hodge_witt_and_m12_zero": (
            ConditionStatus.NOT_CHECKABLE
            if t.hodge_witt is None
            else ConditionStatus.of(not t.hodge_witt and table.m[1][2] == 0)
        ),
    }
    checked = set(conditions.values()) - {ConditionStatus.NOT_CHECKABLE}
    if len(checked) > 1:
        raise InconsistentInvariantsError(
            f"inconsistent (b2, b3, c3) triple: the conditions for b3 = 0 disagree "
            f"({', '.join(f'{k}: {v.value}' for k, v in conditions.items())})"
        )
    notes: tuple[str, ...] = ()
    if ConditionStatus.HOLDS in checked:
        conditions["h3cris_torsion"] = ConditionStatus.HOLDS
        notes = (
            "H^3_cris(X/W) is a torsion module",
            "X is not Hodge-Witt and m^{1,2} = 0",
            "X does not lift to characteristic zero",
        )
    return CharacterizationReport(conditions, notes)


def liftability_necessary(t: ThreefoldInvariants) -> bool:
    """Check `c_3 <= 2 b_2`, which holds when a Calabi-Yau threefold lifts to W(k).

    Args:
        t: Valid invariants of a Calabi-Yau threefold.

    Returns:
        Whether the necessary condition holds; `False` means non-liftable.
    """
    _require_calabi_yau(t)
    return resolved_c3(t) <= 2 * t.b2


CONJECTURALLY_LIFTABLE = "conjecturally liftable"
"""Label for threefolds that the liftability conjecture predicts to lift."""

NON_LIFTABLE = "non-liftable"
"""Label for threefolds that provably do not lift."""


def liftability_conjecture(t: ThreefoldInvariants) -> str | None:
    """Evaluate the conjectural liftability criterion of a Calabi-Yau threefold.

    Conjecturally a Calabi-Yau threefold with `H^0(X, Omega^1) = 0` and
    `c_3 <= 2 b_2` lifts. The result is only a conjecture and is labelled so.

    Args:
        t: Valid invariants of a Calabi-Yau threefold.

    Returns:
        `NON_LIFTABLE` if `c_3 > 2 b_2`, `CONJECTURALLY_LIFTABLE` if also
            `H^0(X, Omega^1) = 0`, otherwise `None`.
    """
    if not liftability_necessary(t):
        return NON_LIFTABLE
    if t.h0_omega1_zero:
        return CONJECTURALLY_LIFTABLE
    return None


def hw_threefold_parts(m: Matrix, T03: int, T02: int) -> tuple[int, int]:
    """Compute `h_W^{1,2} = m^{1,2} - T^{0,3}` and `h_W^{1,1} = m^{1,1} - 2 T^{0,2}`.

    Args:
        m: The slope numbers of a threefold.
        T03: The domino number `T^{0,3}`.
        T02: The domino number `T^{0,2}`.

    Returns:
        The pair `(h_W^{1,2}, h_W^{1,1})`.

    Raises:
        ValueError: If a domino number is negative.
    """
    if T03 < 0 or T02 < 0:
        raise ValueError(f"Domino numbers must be non-negative, got {T03} and {T02}.")
    return m[1][2] - T03, m[1][1] - 2 * T02


@dataclass(frozen=True)
class ThreefoldReport:
    """Everything computed for one threefold."""

    chi_omega1: int
    """The Euler characteristic of `Omega^1`."""

    table: HodgeWittTable | None = None
    """The Hodge-Witt table (Calabi-Yau threefolds only)."""

    characterization: CharacterizationReport | None = None
    """The conditions for `b_3 = 0` (Calabi-Yau threefolds only)."""

    liftability_necessary: bool | None = None
    """Whether `c_3 <= 2 b_2` (Calabi-Yau threefolds only)."""

    liftability: str | None = None
    """The conjectural liftability label, if any."""

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON object."""
        return {
            "chi_omega1": self.chi_omega1,
            "table": None if self.table is None else self.table.to_dict(),
            "characterization": (
                None
                if self.characterization is None
                else self.characterization.to_dict()
            ),
            "liftability_necessary": self.liftability_necessary,
            "liftability": self.liftability,
        }


def threefold_report(t: ThreefoldInvariants) -> ThreefoldReport:
    """Compute the report of a threefold.

    Args:
        t: The invariants.

    Returns:
        The report.

    Raises:
        InconsistentInvariantsError: If the invariants are inconsistent.
    """
    _require_valid(t)
    if not t.is_calabi_yau:
        return ThreefoldReport(chi_omega1=chi_omega1(t))
    _logger.debug("Evaluating the Calabi-Yau formulas for b2=%s.", t.b2)
    return ThreefoldReport(
        chi_omega1=chi_omega1(t),
        table=cy_formulaire(t),
        characterization=nonliftable_characterization(t),
        liftability_necessary=liftability_necessary(t),
        liftability=liftability_conjecture(t),
    )
