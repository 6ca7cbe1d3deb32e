"""
octoeigen CLI - right eigenvalues of 3x3 octonionic Hermitian matrices.
"""

import logging
from enum import Enum
from pathlib import Path
from typing import List, Optional

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from ..core.calibration import NoConsistentTable, calibrate_table
from ..core.eigen import eigenspace_dim, real_eigen_families, search_nonreal
from ..core.errors import OctoEigenError
from ..core.jordan import JordanMatrix
from ..core.octonion import MultiplicationTable
from ..core.properties import run_property_suite
from ..core.settings import DEFAULT_SETTINGS, SolverSettings
from ..core.validators import (
    EigenPairModel,
    EigsReport,
    JordanMatrixModel,
    MatrixFile,
    NullityReport,
    ParseError,
    RealFamilyModel,
    parse_matrix_file,
    parse_octonion,
    with_overrides,
)
from ..core.verification import ExampleVerifier, VerificationReport

app = typer.Typer(
    name="octoeigen",
    help="Octonionic Hermitian eigenvalue solvers and example verification",
    add_completion=False,
)

console = Console()
err_console = Console(stderr=True)


class OutputFormat(str, Enum):
    json = "json"
    text = "text"


# Utility functions for CLI messages
def success_message(message: str):
    """Display a success message."""
    err_console.print(f"[green]✅ {message}[/green]")


def error_message(message: str):
    """Display an error message."""
    err_console.print(f"[red]❌ {message}[/red]")


def info_message(message: str):
    """Display an info message."""
    err_console.print(f"[blue]ℹ️ {message}[/blue]")


@app.callback()
def configure(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log solver progress to stderr"),
):
    """Octonionic Hermitian eigenvalue solvers and example verification."""
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG,
            format="%(message)s",
            handlers=[RichHandler(console=err_console, show_path=False)],
            force=True,
        )


def _settings(tol: Optional[float]) -> SolverSettings:
    if tol is None:
        return DEFAULT_SETTINGS
    return DEFAULT_SETTINGS.model_copy(update={"nullity_tol": tol})


def _active_table() -> MultiplicationTable:
    try:
        return calibrate_table().table
    except NoConsistentTable as e:
        error_message(str(e))
        raise typer.Exit(1)


def _load_matrix(
    file: Optional[Path],
    example: Optional[int],
    p: Optional[float],
    q: Optional[float],
    theta: Optional[float],
    table: MultiplicationTable,
) -> JordanMatrix:
    """Matrix from a MatrixFile, or from ``--example`` with ``--p/--q/--theta`` overrides."""
    if file is not None and example is not None:
        error_message("Pass either a matrix file or --example, not both.")
        raise typer.Exit(2)
    if file is None and example is None:
        error_message("A matrix file or --example is required.")
        raise typer.Exit(2)
    try:
        if file is not None:
            document = parse_matrix_file(file)
        else:
            document = MatrixFile(example=example)
        if document.example is not None:
            document = with_overrides(document, p=p, q=q, theta=theta)
        return document.to_matrix(table)
    except ParseError as e:
        error_message(str(e))
        raise typer.Exit(2)


def _emit(model, output: OutputFormat, render) -> None:
    if output == OutputFormat.json:
        typer.echo(model.model_dump_json(indent=2))
    else:
        render(model)


def _format_values(values: List[float]) -> str:
    return ", ".join(f"{value:.6g}" for value in values)


def _render_verification(report: VerificationReport) -> None:
    table = Table(title=f"Verification ({escape(report.table_convention)}, seed {report.seed})")
    table.add_column("Check", style="cyan")
    table.add_column("#", justify="right")
    table.add_column("Status")
    table.add_column("Measured")
    table.add_column("Tolerance", justify="right")
    colors = {"pass": "green", "fail": "red", "discrepancy": "yellow"}
    for check in report.checks:
        table.add_row(
            check.name,
            str(check.criterion),
            f"[{colors[check.status]}]{check.status}[/{colors[check.status]}]",
            _format_values(check.measured),
            f"{check.tolerance:.0e}",
        )
    console.print(table)
    console.print(
        f"[green]{report.counts['pass']} passed[/green], [red]{report.counts['fail']} failed[/red], "
        f"[yellow]{report.counts['discrepancy']} discrepancies[/yellow]"
    )


def _render_eigs(report: EigsReport) -> None:
    table = Table(title="Real eigenvalue families")
    table.add_column("r", justify="right")
    table.add_column("Eigenvalues")
    table.add_column("Nullities")
    for family in report.families:
        table.add_row(f"{family.r:.6g}", _format_values(family.lambdas), ", ".join(map(str, family.nullities)))
    console.print(table)
    if report.nonreal:
        found = Table(title="Non-real eigenpairs")
        found.add_column("lambda")
        found.add_column("Residual", justify="right")
        for pair in report.nonreal:
            found.add_row(_format_values(pair.lam), f"{pair.residual:.2e}")
        console.print(found)


@app.command("verify-paper")
def verify_paper(
    seed: int = typer.Option(0, "--seed", help="Seed for every random sample"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Nullity tolerance (default 1e-7)"),
    restarts: Optional[int] = typer.Option(None, "--restarts", min=1, help="Orthogonal triple search restarts (default 200)"),
    output: OutputFormat = typer.Option(OutputFormat.json, "--format", help="Report format"),
):
    """
    Run every example and identity check and print the report.

    Exits 1 if any check fails; discrepancy entries do not fail the run.
    """
    settings = _settings(tol)
    if restarts is not None:
        settings = settings.model_copy(update={"triple_restarts": restarts})
    with err_console.status("[bold blue]Running checks...", spinner="dots"):
        report = ExampleVerifier(seed=seed, settings=settings).run()
    _emit(report, output, _render_verification)
    if report.counts["discrepancy"]:
        info_message(f"{report.counts['discrepancy']} printed value(s) reported as discrepancies")
    if report.exit_code:
        error_message(f"{len(report.failed)} check(s) failed")
    else:
        success_message(f"All {report.counts['pass']} checks passed")
    raise typer.Exit(report.exit_code)


@app.command("eigs")
def eigs(
    file: Optional[Path] = typer.Argument(None, help="MatrixFile JSON"),
    example: Optional[int] = typer.Option(None, "--example", min=1, max=3, help="Built-in example 1, 2 or 3"),
    p: Optional[float] = typer.Option(None, "--p", help="Diagonal parameter of an example"),
    q: Optional[float] = typer.Option(None, "--q", help="Off-diagonal scale of an example"),
    theta: Optional[float] = typer.Option(None, "--theta", help="Angle of Example 1"),
    search: bool = typer.Option(False, "--search/--no-search", help="Also search for non-real eigenpairs"),
    seeds: int = typer.Option(16, "--seeds", min=1, help="Random starts for --search"),
    seed: int = typer.Option(0, "--seed", help="Seed for the random starts"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Nullity tolerance (default 1e-7)"),
    output: OutputFormat = typer.Option(OutputFormat.json, "--format", help="Report format"),
):
    """Print both real eigenvalue families and, with --search, non-real eigenpairs."""
    settings = _settings(tol)
    table = _active_table()
    matrix = _load_matrix(file, example, p, q, theta, table)
    try:
        families = real_eigen_families(matrix, settings, table)
        nonreal = search_nonreal(matrix, seeds, seed, settings=settings, table=table) if search else []
    except OctoEigenError as e:
        error_message(str(e))
        raise typer.Exit(1)
    report = EigsReport(
        table_convention=table.describe(),
        matrix=JordanMatrixModel.from_matrix(matrix),
        families=[
            RealFamilyModel(r=family.r, lambdas=list(family.lambdas), nullities=list(family.nullities))
            for family in families
        ],
        nonreal=[EigenPairModel.from_pair(pair) for pair in nonreal],
    )
    _emit(report, output, _render_eigs)


@app.command("nullity")
def nullity(
    file: Optional[Path] = typer.Argument(None, help="MatrixFile JSON"),
    lam: str = typer.Option(..., "--lambda", help="Eigenvalue, e.g. '1 - 2kl' or a JSON array of 8 numbers"),
    example: Optional[int] = typer.Option(None, "--example", min=1, max=3, help="Built-in example 1, 2 or 3"),
    p: Optional[float] = typer.Option(None, "--p", help="Diagonal parameter of an example"),
    q: Optional[float] = typer.Option(None, "--q", help="Off-diagonal scale of an example"),
    theta: Optional[float] = typer.Option(None, "--theta", help="Angle of Example 1"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Nullity tolerance (default 1e-7)"),
    output: OutputFormat = typer.Option(OutputFormat.json, "--format", help="Report format"),
):
    """Print the real dimension of the eigenspace of LAMBDA."""
    settings = _settings(tol)
    table = _active_table()
    matrix = _load_matrix(file, example, p, q, theta, table)
    try:
        value = parse_octonion(lam, table)
    except ParseError as e:
        error_message(str(e))
        raise typer.Exit(2)
    dim = eigenspace_dim(matrix, value, settings.nullity_tol, table)
    report = NullityReport(
        table_convention=table.describe(), lam=value.to_list(), nullity=dim, tolerance=settings.nullity_tol
    )
    _emit(report, output, lambda model: console.print(f"nullity([bold]{value!r}[/bold]) = [bold blue]{model.nullity}[/bold blue]"))


@app.command("property-suite")
def property_suite(
    trials: int = typer.Option(10_000, "--trials", min=1, help="Samples per octonion identity"),
    seed: int = typer.Option(0, "--seed", help="Seed for every random sample"),
    output: OutputFormat = typer.Option(OutputFormat.json, "--format", help="Report format"),
):
    """Run the randomized identity suites and print the max deviation of each."""
    table = _active_table()
    report = run_property_suite(trials, seed, table)

    def render(model) -> None:
        grid = Table(title=f"Identities ({model.trials} trials, seed {model.seed})")
        grid.add_column("Identity", style="cyan")
        grid.add_column("Samples", justify="right")
        grid.add_column("Max deviation", justify="right")
        grid.add_column("Tolerance", justify="right")
        grid.add_column("Status")
        for result in model.results:
            status = "[green]pass[/green]" if result.passed else "[red]fail[/red]"
            grid.add_row(result.name, str(result.samples), f"{result.max_deviation:.3e}", f"{result.tolerance:.0e}", status)
        console.print(grid)

    _emit(report, output, render)
    if not report.passed:
        raise typer.Exit(1)


@app.command("calibrate")
def calibrate(
    exhaustive: bool = typer.Option(False, "--exhaustive", help="Scan every orientation and list all passing tables"),
):
    """Show the multiplication table that satisfies the built-in examples."""
    try:
        with err_console.status("[bold blue]Checking orientations...", spinner="dots"):
            result = calibrate_table(exhaustive=exhaustive)
    except NoConsistentTable as e:
        error_message(str(e))
        raise typer.Exit(1)

    lines = [f"[cyan]Active:[/cyan] {escape(result.convention)}"]
    lines.append(f"[cyan]Default table passes:[/cyan] {'✅ Yes' if result.default_passed else '❌ No'}")
    if exhaustive:
        lines.append(f"[cyan]Passing orientations:[/cyan] {len(result.passing)}")
        lines.extend(f"  • {escape(candidate.describe())}" for candidate in result.passing)
    console.print(Panel.fit(Text.from_markup("\n".join(lines)), title="Multiplication table", border_style="blue"))
    success_message("Calibration complete")


@app.command("version")
def show_version():
    """Show the version of octoeigen."""
    from .. import __version__
    console.print(f"octoeigen version: [bold blue]{__version__}[/bold blue]")


def main():
    """Main entry point for the CLI."""
    app()


if __name__ == "__main__":
    main()
