# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""
Exact p-adic invariants of surfaces and threefolds.

## Crystalline Invariants

This package computes Hodge-Witt numbers, slope numbers and domino numbers of
smooth projective varieties in characteristic `p`, and evaluates the Chern
class inequalities and liftability criteria that follow from them. All
arithmetic is exact: integers and `fractions.Fraction`, never floats.

### Features

- **Hypersurfaces**: Hodge and Betti numbers from closed forms and from the
generating series, maximal domino numbers and full Hodge-Witt tables.
- **Surfaces**: validation of the classical invariants, `h_W^{1,1}`, the
equivalent forms of `c_1^2 <= 5 c_2` and `c_1^2 <= 5 c_2 + 6 b_1`, blowups,
negativity diagnostics and families of iterated Frobenius pullbacks.
- **Threefolds**: `chi(Omega^1)`, the Calabi-Yau Hodge-Witt table and the
characterization of `b_3 = 0`.
- **Command line**: `crystalline-invariants` renders every report as a
table, JSON or CSV and scans parameter grids.

### Installation

```bash
pip install crystalline-invariants
```

### Example Usage

#### Hodge numbers of a hypersurface

???+ example "The quintic threefold"

    ```python
    from crystalline.invariants import betti_numbers, hodge_numbers_closed

    hodge = hodge_numbers_closed(3, 5)
    assert hodge[1][2] == 101
    assert betti_numbers(3, 5) == 204
    ```

#### Surfaces

???+ example "Hodge-Witt numbers of a quintic surface"

    ```python
    from crystalline.invariants import (
        chern_predicates,
        hw_numbers_surface,
        surface_from_hypersurface,
    )

    quintic = surface_from_hypersurface(5, p=7)
    report = hw_numbers_surface(quintic)
    assert report.hW11 == 45
    assert chern_predicates(quintic)["c1sq_le_5c2"]
    ```

???+ example "A family with negative h_W^{1,1}"

    ```python
    from crystalline.invariants import szpiro_series

    members = szpiro_series(g=2, q=2, d=6, p=5, b1=4, n_min=1, n_max=3)
    assert [member.hW11 for member in members] == [1, -19, -119]
    ```

#### Threefolds

???+ example "A non-liftable Calabi-Yau threefold"

    ```python
    from crystalline.invariants import (
        ThreefoldInvariants,
        cy_formulaire,
        liftability_necessary,
    )

    threefold = ThreefoldInvariants(c1c2=0, c3=48, b2=23, b3=0, is_calabi_yau=True)
    assert cy_formulaire(threefold).hW[1][2] == -1
    assert not liftability_necessary(threefold)
    ```
"""

from ._exactmath import (
    BiSeries,
    Exponent,
    Rational,
    binomial,
    hodge_generating_series,
    hodge_generating_series_ratio,
    hypersurface_euler_characteristic,
    primitive_to_hodge,
    series_div_exact_z_minus_y,
    series_invert_unit,
    series_mul,
)
from ._hodgewitt import (
    HodgeWittTable,
    check_crew_formula,
    check_domino_duality,
    check_domino_vanishing,
    check_ekedahl_bound,
    check_hw_symmetries,
    chi_from_hodge,
    hodge_witt_betti,
    hodge_witt_from_parts,
    is_hodge_witt,
    mazur_ogus_dominoes,
)
from ._hypersurface import (
    DominoNumbers,
    TableErratum,
    betti_numbers,
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
from ._report import OutputFormat, render_record, render_rows, to_json_value
from ._selftest import CheckResult, run_selftest
from ._slopes import (
    CrystalProfile,
    SlopeProfile,
    ValidationLevel,
    betti_from_slopes,
    check_slope_symmetries,
    crew_vmod_length,
    is_ordinary_profile,
    m11_decomposition,
    newton_hodge_profile,
    poincare_dual,
    slope_number,
    slope_numbers,
    validate_profile,
)
from ._surface import (
    CONDITIONAL_LABEL,
    KodairaDimension,
    RaynaudReport,
    SupersingularRegime,
    SurfaceFlags,
    SurfaceInvariants,
    SurfaceReport,
    SzpiroSurface,
    blowup_transform,
    chern_predicates,
    diagnose_negativity,
    ekedahl_h11,
    hw_numbers_surface,
    ordinary_conjecture_consequences,
    raynaud_bounds,
    sufficient_conditions_5c2,
    supersingular_dichotomy,
    supersingular_identity,
    surface_from_hypersurface,
    szpiro_family,
    szpiro_series,
    validate_surface,
)
from ._threefold import (
    CONJECTURALLY_LIFTABLE,
    NON_LIFTABLE,
    CharacterizationReport,
    ConditionStatus,
    ThreefoldInvariants,
    ThreefoldReport,
    chi_omega1,
    cy_formulaire,
    hw_threefold_parts,
    liftability_conjecture,
    liftability_necessary,
    nonliftable_characterization,
    resolved_b3,
    resolved_c3,
    threefold_report,
    validate_threefold,
)
from ._types import InconsistentInvariantsError, Matrix

__all__ = [
    "BiSeries",
    "CONDITIONAL_LABEL",
    "CONJECTURALLY_LIFTABLE",
    "CharacterizationReport",
    "CheckResult",
    "ConditionStatus",
    "CrystalProfile",
    "DominoNumbers",
    "Exponent",
    "HodgeWittTable",
    "InconsistentInvariantsError",
    "KodairaDimension",
    "Matrix",
    "NON_LIFTABLE",
    "OutputFormat",
    "Rational",
    "RaynaudReport",
    "SlopeProfile",
    "SupersingularRegime",
    "SurfaceFlags",
    "SurfaceInvariants",
    "SurfaceReport",
    "SzpiroSurface",
    "TableErratum",
    "ThreefoldInvariants",
    "ThreefoldReport",
    "ValidationLevel",
    "betti_from_slopes",
    "betti_numbers",
    "binomial",
    "blowup_transform",
    "check_crew_formula",
    "check_domino_duality",
    "check_domino_vanishing",
    "check_ekedahl_bound",
    "check_hw_symmetries",
    "check_slope_symmetries",
    "chern_predicates",
    "chi_from_hodge",
    "chi_omega1",
    "crew_vmod_length",
    "cy_formulaire",
    "diagnose_negativity",
    "ekedahl_h11",
    "general_type_margins",
    "hodge_generating_series",
    "hodge_generating_series_ratio",
    "hodge_numbers_closed",
    "hodge_numbers_series",
    "hodge_witt_betti",
    "hodge_witt_from_parts",
    "hw_numbers_surface",
    "hw_threefold_parts",
    "hypersurface_euler_characteristic",
    "hypersurface_table",
    "is_hodge_witt",
    "is_ordinary_profile",
    "liftability_conjecture",
    "liftability_necessary",
    "m11_decomposition",
    "maximal_domino_numbers",
    "mazur_ogus_dominoes",
    "newton_hodge_profile",
    "nonliftable_characterization",
    "ordinary_conjecture_consequences",
    "ordinary_profile",
    "poincare_dual",
    "primitive_to_hodge",
    "pure_slope_profile",
    "raynaud_bounds",
    "render_record",
    "render_rows",
    "resolved_b3",
    "resolved_c3",
    "run_selftest",
    "series_div_exact_z_minus_y",
    "series_invert_unit",
    "series_mul",
    "slope_condition_met",
    "slope_conditions",
    "slope_number",
    "slope_numbers",
    "sufficient_conditions_5c2",
    "supersingular_dichotomy",
    "supersingular_identity",
    "surface_from_hypersurface",
    "szpiro_family",
    "szpiro_series",
    "table_errata",
    "threefold_report",
    "to_json_value",
    "validate_profile",
    "validate_surface",
    "validate_threefold",
]
