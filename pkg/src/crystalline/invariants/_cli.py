# License: MIT
# Copyright © 2024 Frequenz Energy-as-a-Service GmbH

"""Command line interface."""

from __future__ import annotations

import itertools
import json
import logging
import sys
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import IO, Any, NoReturn, TypeVar

import click

from ._hypersurface import (
    betti_numbers,
    hodge_numbers_closed,
    hodge_numbers_series,
    maximal_domino_numbers,
    table_errata,
)
from ._report import OutputFormat, render_record, render_rows
from ._selftest import run_selftest
from ._slopes import SlopeProfile, ValidationLevel
from ._surface import (
    KodairaDimension,
    SurfaceFlags,
    SurfaceInvariants,
    blowup_transform,
    hw_numbers_surface,
    ordinary_conjecture_consequences,
    raynaud_bounds,
    sufficient_conditions_5c2,
    supersingular_dichotomy,
    supersingular_identity,
    szpiro_family,
    szpiro_series,
    validate_surface,
)
from ._threefold import ThreefoldInvariants, threefold_report, validate_threefold
from ._types import InconsistentInvariantsError, parse_rational

_logger = logging.getLogger(__name__)

_T = TypeVar("_T")
_R = TypeVar("_R")


class IntGrid(click.ParamType):
    """Integer range `a..b`, list `a,b,c` or single value."""

    name = "grid"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> list[int]:
        """Parse the grid.

        Args:
            value: The command line text.
            param: The parameter.
            ctx: The click context.

        Returns:
            The grid values in order.
        """
        if isinstance(value, list):
            return value
        text = str(value).strip()
        try:
            if ".." in text:
                start, stop = text.split("..", 1)
                values = list(range(int(start), int(stop) + 1))
            else:
                values = [int(item) for item in text.split(",")]
        except ValueError:
            self.fail(f"{text!r} is not a range a..b or a list a,b,c", param, ctx)
        if not values:
            self.fail(f"the grid {text!r} is empty", param, ctx)
        return values


def _fail(message: str) -> NoReturn:
    _logger.error("Command failed: %s", message)
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


def _format_option(function: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--format",
        "fmt",
        type=click.Choice([fmt.value for fmt in OutputFormat]),
        default=OutputFormat.TABLE.value,
        show_default=True,
        help="Output format.",
    )(function)


def _parse_slopes(text: str) -> SlopeProfile:
    """Parse `slope:multiplicity` pairs such as `0:1,1:20,2:1` into an H^2 profile."""
    entries = []
    for item in text.split(","):
        slope, _, mult = item.partition(":")
        try:
            entries.append((parse_rational(slope.strip()), int(mult)))
        except ValueError as exc:
            raise click.BadParameter(f"bad slope entry {item!r}") from exc
    return SlopeProfile(2, tuple(entries))


@click.group()
@click.version_option(package_name="crystalline-invariants")
@click.option("--verbose", "-v", is_flag=True, help="Log debug messages to stderr.")
def cli(verbose: bool) -> None:
    """Crystalline and Hodge-Witt invariants of varieties in characteristic p."""
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _hypersurface_row(n: int, d: int, slope_condition: bool) -> dict[str, Any]:
    dominoes = maximal_domino_numbers(n, d, slope_condition)
    return {
        "dim": n,
        "degree": d,
        "hodge": hodge_numbers_closed(n, d),
        f"b{n}": betti_numbers(n, d),
        "T": dominoes.T,
        "T_exact": dominoes.exact,
    }


@cli.command()
@click.option("--dim", "n", type=click.IntRange(2, 4), required=True)
@click.option("--degree", "d", type=click.IntRange(min=1), required=True)
@click.option(
    "--slope-condition",
    is_flag=True,
    help="The middle cohomology meets the slope condition for maximal dominoes.",
)
@click.option(
    "--order",
    type=click.IntRange(min=1),
    default=None,
    help="Truncation order for the series cross-check (default dim + 1).",
)
@_format_option
def hypersurface(
    n: int, d: int, slope_condition: bool, order: int | None, fmt: str
) -> None:
    """Hodge, Betti and maximal domino numbers of a smooth hypersurface."""
    try:
        if order is not None and order < n:
            raise click.BadParameter(f"must be at least {n}", param_hint="--order")
        if hodge_numbers_series(n, d, order) != hodge_numbers_closed(n, d):
            _fail("the generating series disagrees with the closed forms")
        row = _hypersurface_row(n, d, slope_condition)
        if n == 4:
            for erratum in table_errata(d):
                if not erratum.matches:
                    _logger.warning(
                        "The printed %s row gives %s, the computed value is %s.",
                        erratum.row,
                        erratum.printed,
                        erratum.computed,
                    )
    except InconsistentInvariantsError as exc:
        _fail(str(exc))
    click.echo(render_record(row, OutputFormat(fmt)), nl=False)


def _load_json(stream: IO[str]) -> dict[str, Any]:
    try:
        data = json.load(stream)
    except json.JSONDecodeError as exc:
        raise click.BadParameter(f"invalid JSON: {exc}", param_hint="--input") from exc
    if not isinstance(data, dict):
        raise click.BadParameter("expected a JSON object", param_hint="--input")
    return data


_SURFACE_FLAGS = (
    "minimal",
    "hodge_witt",
    "ordinary",
    "mazur_ogus",
    "pic_reduced",
    "h2cris_torsion_free",
    "supersingular",
    "quasi_elliptic",
)


def _surface_from_options(options: dict[str, Any]) -> SurfaceInvariants:
    required = ("p", "c1sq", "c2", "b1", "b2", "q", "h01", "pg", "chi", "kodaira")
    missing = [name for name in required if options[name] is None]
    if missing:
        raise click.UsageError(
            "Missing options: "
            + ", ".join(f"--{name.replace('_', '-')}" for name in missing)
            + " (or use --input)."
        )
    slopes = options["h2_slopes"]
    return SurfaceInvariants(
        p=options["p"],
        c1sq=options["c1sq"],
        c2=options["c2"],
        b1=options["b1"],
        b2=options["b2"],
        q=options["q"],
        h01=options["h01"],
        pg=options["pg"],
        h11=options["h11"],
        chi=options["chi"],
        kodaira=KodairaDimension.from_json(options["kodaira"]),
        flags=SurfaceFlags(**{name: options[name] for name in _SURFACE_FLAGS}),
        h2_slopes=None if slopes is None else _parse_slopes(slopes),
    )


def _optional_checks(s: SurfaceInvariants) -> dict[str, Any]:
    checks: dict[str, Callable[[SurfaceInvariants], Any]] = {
        "raynaud": raynaud_bounds,
        "sufficient_5c2": sufficient_conditions_5c2,
        "supersingular_dichotomy": supersingular_dichotomy,
        "supersingular_identity": supersingular_identity,
        "ordinary_conditional": ordinary_conjecture_consequences,
    }
    results: dict[str, Any] = {}
    for name, check in checks.items():
        try:
            results[name] = check(s)
        except InconsistentInvariantsError:
            raise
        except ValueError as exc:
            _logger.debug("Skipping %s: %s", name, exc)
    return results


@cli.command()
@click.option("--input", "source", type=click.File("r"), help="Read a JSON record.")
@click.option("--p", type=int)
@click.option("--c1sq", type=int)
@click.option("--c2", type=int)
@click.option("--b1", type=int)
@click.option("--b2", type=int)
@click.option("--q", type=int)
@click.option("--h01", type=int)
@click.option("--pg", type=int)
@click.option("--h11", type=int)
@click.option("--chi", type=int)
@click.option("--kodaira", type=click.Choice(["-inf", "0", "1", "2"]))
@click.option("--h2-slopes", help="Slopes of H^2 as slope:multiplicity pairs.")
@click.option("--minimal", is_flag=True)
@click.option("--hodge-witt", is_flag=True)
@click.option("--ordinary", is_flag=True)
@click.option("--mazur-ogus", is_flag=True)
@click.option("--pic-reduced", is_flag=True)
@click.option("--h2cris-torsion-free", is_flag=True)
@click.option("--supersingular", is_flag=True)
@click.option("--quasi-elliptic", is_flag=True)
@click.option("--blowup", type=click.IntRange(min=1), help="Blow up K points first.")
@click.option("--strict/--lenient", default=False, help="Validation level for slopes.")
@_format_option
def surface(
    source: IO[str] | None, blowup: int | None, strict: bool, fmt: str, **options: Any
) -> None:
    """Hodge-Witt numbers and Chern class inequalities of a surface."""
    if source is not None:
        try:
            s = SurfaceInvariants.from_dict(_load_json(source))
        except ValueError as exc:
            raise click.BadParameter(str(exc), param_hint="--input") from exc
    else:
        s = _surface_from_options(options)
    level = ValidationLevel.STRICT if strict else ValidationLevel.LENIENT
    output_format = OutputFormat(fmt)
    violations = validate_surface(s, level)
    if violations:
        record = {"input": s.to_dict(), "violations": violations}
        click.echo(render_record(record, output_format), nl=False)
        sys.exit(1)
    try:
        if blowup is not None:
            s = blowup_transform(s, blowup)
        record = {
            "input": s.to_dict(),
            "violations": [],
            "report": hw_numbers_surface(s),
            **_optional_checks(s),
        }
    except InconsistentInvariantsError as exc:
        _fail(str(exc))
    click.echo(render_record(record, output_format), nl=False)


@cli.command()
@click.option("--input", "source", type=click.File("r"), help="Read a JSON record.")
@click.option("--c1c2", type=int, default=0, show_default=True)
@click.option("--c3", type=int)
@click.option("--b2", type=int)
@click.option("--b3", type=int)
@click.option("--calabi-yau", is_flag=True)
@click.option("--hodge-witt/--not-hodge-witt", default=None)
@click.option("--h0-omega1-zero/--no-h0-omega1-zero", default=None)
@_format_option
def threefold(
    source: IO[str] | None,
    c1c2: int,
    c3: int | None,
    b2: int | None,
    b3: int | None,
    calabi_yau: bool,
    hodge_witt: bool | None,
    h0_omega1_zero: bool | None,
    fmt: str,
) -> None:
    """Hodge-Witt numbers and liftability criteria of a threefold."""
    # pylint: disable=too-many-arguments, too-many-positional-arguments
    if source is not None:
        try:
            t = ThreefoldInvariants.from_dict(_load_json(source))
        except ValueError as exc:
            raise click.BadParameter(str(exc), param_hint="--input") from exc
    elif b2 is None:
        raise click.UsageError("Missing option --b2 (or use --input).")
    else:
        t = ThreefoldInvariants(
            c1c2=c1c2,
            c3=c3,
            b2=b2,
            b3=b3,
            is_calabi_yau=calabi_yau,
            hodge_witt=hodge_witt,
            h0_omega1_zero=h0_omega1_zero,
        )
    output_format = OutputFormat(fmt)
    violations = validate_threefold(t)
    if violations:
        record = {"input": t.to_dict(), "violations": violations}
        click.echo(render_record(record, output_format), nl=False)
        sys.exit(1)
    try:
        record = {"input": t.to_dict(), "violations": [], "report": threefold_report(t)}
    except InconsistentInvariantsError as exc:
        _fail(str(exc))
    click.echo(render_record(record, output_format), nl=False)


@cli.command()
@click.option("--g", type=click.IntRange(min=2), required=True, help="Fibre genus.")
@click.option("--q", type=click.IntRange(min=2), required=True, help="Base genus.")
@click.option("--d", type=click.IntRange(min=1), required=True)
@click.option("--p", type=int, required=True)
@click.option("--b1", type=click.IntRange(min=0), required=True)
@click.option("--n-min", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--n-max", type=click.IntRange(min=0), required=True)
@click.option("--m", type=click.IntRange(min=1), default=1, show_default=True)
@_format_option
def szpiro(
    g: int, q: int, d: int, p: int, b1: int, n_min: int, n_max: int, m: int, fmt: str
) -> None:
    """Members of a family of iterated Frobenius pullbacks."""
    # pylint: disable=too-many-arguments, too-many-positional-arguments
    try:
        members = szpiro_series(g, q, d, p, b1, n_min, n_max, m)
    except InconsistentInvariantsError as exc:
        _fail(str(exc))
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    rows = [member.to_dict() for member in members]
    click.echo(render_rows(rows, OutputFormat(fmt)), nl=False)


@cli.group()
def scan() -> None:
    """Evaluate a grid of parameters, one row per grid point."""


def _scan_rows(
    points: Iterable[_T], compute: Callable[[_T], _R], jobs: int
) -> list[_R | None]:
    def guarded(point: _T) -> _R | None:
        try:
            return compute(point)
        except ValueError as exc:
            _logger.warning("Skipping grid point %s: %s", point, exc)
            return None

    with ThreadPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(guarded, points))


def _emit_scan(rows: Sequence[dict[str, Any] | None], fmt: str) -> None:
    kept = [row for row in rows if row is not None]
    click.echo(render_rows(kept, OutputFormat(fmt)), nl=False)
    if len(kept) != len(rows):
        sys.exit(1)


_jobs_option = click.option(
    "--jobs", type=click.IntRange(min=1), default=1, show_default=True
)
_scan_format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice([fmt.value for fmt in OutputFormat]),
    default=OutputFormat.CSV.value,
    show_default=True,
)


@scan.command("hypersurface")
@click.option("--dim", "dims", type=IntGrid(), required=True)
@click.option("--degree", "degrees", type=IntGrid(), required=True)
@click.option("--slope-condition", is_flag=True)
@_jobs_option
@_scan_format_option
def scan_hypersurface(
    dims: list[int], degrees: list[int], slope_condition: bool, jobs: int, fmt: str
) -> None:
    """Scan hypersurfaces over dimensions and degrees."""
    if any(n not in (2, 3, 4) for n in dims):
        raise click.BadParameter("dimensions must lie in 2..4", param_hint="--dim")
    rows = _scan_rows(
        itertools.product(dims, degrees),
        lambda point: _scan_hypersurface_row(point[0], point[1], slope_condition),
        jobs,
    )
    _emit_scan(rows, fmt)


def _scan_hypersurface_row(n: int, d: int, slope_condition: bool) -> dict[str, Any]:
    # Fixed columns so that rows of different dimensions share a header.
    hodge = hodge_numbers_closed(n, d)
    dominoes = maximal_domino_numbers(n, d, slope_condition).T
    return {
        "dim": n,
        "degree": d,
        "h0n": hodge[0][n],
        "h1n_1": hodge[1][n - 1],
        "h22": hodge[2][2] if n == 4 else None,
        "b_n": betti_numbers(n, d),
        "T0n": dominoes[0][n],
        "T13": dominoes[1][3] if n == 4 else None,
        "T_exact": slope_condition,
    }


@scan.command("szpiro")
@click.option("--g", "gs", type=IntGrid(), required=True)
@click.option("--q", "qs", type=IntGrid(), required=True)
@click.option("--d", "ds", type=IntGrid(), required=True)
@click.option("--p", "ps", type=IntGrid(), required=True)
@click.option("--b1", "b1s", type=IntGrid(), required=True)
@click.option("--n", "ns", type=IntGrid(), required=True)
@click.option("--m", type=click.IntRange(min=1), default=1, show_default=True)
@_jobs_option
@_scan_format_option
def scan_szpiro(
    gs: list[int],
    qs: list[int],
    ds: list[int],
    ps: list[int],
    b1s: list[int],
    ns: list[int],
    m: int,
    jobs: int,
    fmt: str,
) -> None:
    """Scan Frobenius pullback families over their parameters."""
    # pylint: disable=too-many-arguments, too-many-positional-arguments
    rows = _scan_rows(
        itertools.product(gs, qs, ds, ps, b1s, ns),
        lambda point: szpiro_family(*point, m=m).to_dict(),
        jobs,
    )
    _emit_scan(rows, fmt)


@cli.command()
@click.option("--seed", type=int, default=0, show_default=True)
@_format_option
def selftest(seed: int, fmt: str) -> None:
    """Run the acceptance checks; exit 1 if any fails."""
    results = run_selftest(seed)
    click.echo(render_rows(results, OutputFormat(fmt)), nl=False)
    if not all(result.passed for result in results):
        sys.exit(1)
