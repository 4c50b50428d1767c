"""Typer CLI application with commands."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any

import typer
from rich.console import Console

from . import genfun
from .blocks import pvir
from .chambers import chamber_of_sigma, check_chamber, last_chamber
from .cks import disconnecting_subsets, parse_graph, u_series
from .config import RunSettings, load_settings
from .errors import ArithmeticAssertion, ParameterError, VerificationFailure, WallcrossError
from .logging import get_logger, set_console_level, setup_logging, verbosity_level
from .output import Result, render
from .pairs import pair_dimension, pair_genfun_motivic, pair_motive
from .ring import ZERO, LaurentPoly
from .triples import ModuliKey, Regime, poles_motive, triple_motive_chamber
from .verify import SUITE_NAMES, run_suite

# Initialize logging
setup_logging()
logger = get_logger()

app = typer.Typer(
    name="wallcross",
    help="Exact motives and invariants of rank-2 Bradlow-Higgs moduli spaces",
    no_args_is_help=True,
)
err_console = Console(stderr=True)

EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_ARITHMETIC = 3


class OutputFormat(str, Enum):
    json = "json"
    csv = "csv"
    text = "text"
    toon = "toon"


class Which(str, Enum):
    fmot = "fmot"
    fvir = "fvir"
    g = "g"
    hmb = "hmb"
    pairs = "pairs"
    qvir = "qvir"
    qmot = "qmot"
    v = "v"


@dataclass
class RunConfig:
    """Per-invocation settings: RunSettings defaults overlaid with command flags."""

    command: str
    genus: int
    order: int
    format: str
    degree: int = 0
    chamber: int = 0
    gamma: int = 0
    regime: Regime = Regime.EPS
    pairs: bool = False
    suite: str = "all"
    workers: int = 1
    out: Path | None = None

    def __post_init__(self) -> None:
        if self.genus < 2:
            raise ParameterError(f"genus must be at least 2, got {self.genus}")
        if self.order < 1:
            raise ParameterError(f"order must be at least 1, got {self.order}")


def _settings() -> RunSettings:
    return load_settings(Path.cwd())


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Map the error hierarchy to exit codes with a one-line message."""
    try:
        yield
    except ParameterError as e:
        _report_error(e)
        raise typer.Exit(EXIT_USAGE)
    except ArithmeticAssertion as e:
        _report_error(e)
        raise typer.Exit(EXIT_ARITHMETIC)
    except VerificationFailure as e:
        _report_error(e)
        raise typer.Exit(EXIT_VERIFICATION)


def _report_error(e: WallcrossError) -> None:
    logger.debug("traceback", exc_info=True)
    err_console.print(f"[red]Error:[/red] {e}")


def _emit(result: Result, cfg: RunConfig) -> None:
    text = render(result, cfg.format)
    if cfg.out is None:
        typer.echo(text, nl=False)
    else:
        cfg.out.write_text(text)
        logger.info("wrote %s", cfg.out)


def _resolve_chamber(degree: int, gamma: int, sigma: str | None, chamber: int | None) -> int:
    if sigma is not None and chamber is not None:
        raise ParameterError("--sigma and --chamber are mutually exclusive")
    if sigma is not None:
        try:
            value = Fraction(sigma)
        except (ValueError, ZeroDivisionError):
            raise ParameterError(f"sigma must be a rational number, got {sigma!r}") from None
        return chamber_of_sigma(degree, value)
    resolved = chamber or 0
    if gamma == 0:
        check_chamber(degree, resolved)
    return resolved


def _poles_regime(degree: int, chamber: int, regime: Regime | None) -> Regime:
    """Only the two extreme chambers are modeled for gamma >= 1."""
    if regime is not None:
        return regime
    if chamber == 0:
        return Regime.EPS
    if chamber >= last_chamber(degree):
        return Regime.INFTY
    raise ParameterError("with poles only the first and the unbounded chamber are available")


def _space_config(
    command: str,
    genus: int | None,
    degree: int,
    sigma: str | None,
    chamber: int | None,
    gamma: int,
    regime: Regime | None,
    pairs: bool,
    fmt: OutputFormat | None,
    out: Path | None,
) -> RunConfig:
    settings = _settings()
    g = settings.genus if genus is None else genus
    resolved = _resolve_chamber(degree, gamma, sigma, chamber)
    if pairs and gamma:
        raise ParameterError("--pairs and --gamma are mutually exclusive")
    return RunConfig(
        command=command,
        genus=g,
        order=settings.order_for(g),
        format=settings.format if fmt is None else fmt.value,
        degree=degree,
        chamber=resolved,
        gamma=gamma,
        regime=_poles_regime(degree, resolved, regime) if gamma else Regime.EPS,
        pairs=pairs,
        out=out,
    )


def _space(cfg: RunConfig) -> tuple[LaurentPoly, dict[str, Any]]:
    """Motive of the selected space and its metadata."""
    metadata: dict[str, Any] = {
        "genus": cfg.genus,
        "degree": cfg.degree,
        "chamber": cfg.chamber,
        "gamma": cfg.gamma,
    }
    if cfg.pairs:
        check_chamber(cfg.degree, cfg.chamber)
        motive = pair_motive(cfg.genus, cfg.degree, cfg.chamber)
        metadata.update(space="pairs", dimension=pair_dimension(cfg.genus, cfg.degree), smooth=True)
        return motive, metadata
    key = ModuliKey(cfg.genus, cfg.degree, cfg.chamber, cfg.gamma, cfg.regime)
    if cfg.gamma:
        motive = poles_motive(cfg.genus, cfg.degree, cfg.gamma, cfg.regime)
        metadata["regime"] = cfg.regime.value
    else:
        motive = triple_motive_chamber(cfg.genus, cfg.degree, cfg.chamber)
    metadata.update(space="triples", dimension=key.dimension, smooth=key.smooth)
    return motive, metadata


# ============================================================
# Shared options
# ============================================================

_GENUS = typer.Option(None, "--genus", "-g", help="Genus of the curve (default from config)")
_DEGREE = typer.Option(..., "--degree", "-d", help="Degree of the rank-2 bundle")
_SIGMA = typer.Option(None, "--sigma", help="Stability parameter (rational, not a wall)")
_CHAMBER = typer.Option(None, "--chamber", help="Chamber index (0 = first chamber)")
_GAMMA = typer.Option(0, "--gamma", help="Pole order of the Higgs field (0 = no poles)")
_REGIME = typer.Option(None, "--regime", help="Chamber of the poles variant")
_PAIRS = typer.Option(False, "--pairs", help="Bradlow pairs instead of triples")
_ORDER = typer.Option(None, "--order", help="Truncation order (default 10 x genus)")
_FORMAT = typer.Option(None, "--format", "-f", help="Output format (default from config)")
_OUT = typer.Option(None, "--out", "-o", help="Write output to a file instead of stdout")


@app.callback()
def main_callback(
    verbose: int = typer.Option(
        0, "--verbose", "-v", count=True, help="Show progress (-v) or debug output (-vv)"
    ),
) -> None:
    """Exact motives and invariants of rank-2 Bradlow-Higgs moduli spaces."""
    set_console_level(verbosity_level(verbose))


@app.command()
def motive(
    genus: int | None = _GENUS,
    degree: int = _DEGREE,
    sigma: str | None = _SIGMA,
    chamber: int | None = _CHAMBER,
    gamma: int = _GAMMA,
    regime: Regime | None = _REGIME,
    pairs: bool = _PAIRS,
    fmt: OutputFormat | None = _FORMAT,
    out: Path | None = _OUT,
) -> None:
    """Motive (E-polynomial) of a moduli space."""
    with _exit_codes():
        cfg = _space_config(
            "motive", genus, degree, sigma, chamber, gamma, regime, pairs, fmt, out
        )
        value, metadata = _space(cfg)
        _emit(Result(value, metadata), cfg)


@app.command(name="pvir")
def pvir_command(
    genus: int | None = _GENUS,
    degree: int = _DEGREE,
    sigma: str | None = _SIGMA,
    chamber: int | None = _CHAMBER,
    gamma: int = _GAMMA,
    regime: Regime | None = _REGIME,
    pairs: bool = _PAIRS,
    fmt: OutputFormat | None = _FORMAT,
    out: Path | None = _OUT,
) -> None:
    """Virtual Poincare polynomial of a moduli space."""
    with _exit_codes():
        cfg = _space_config("pvir", genus, degree, sigma, chamber, gamma, regime, pairs, fmt, out)
        value, metadata = _space(cfg)
        # an empty space has P^vir 0 whatever its expected dimension
        poincare = pvir(value, metadata["dimension"]) if value else ZERO
        _emit(Result(poincare, metadata), cfg)


@app.command(name="genfun")
def genfun_command(
    which: Which = typer.Option(Which.fmot, "--which", help="Generating function to expand"),
    mode: genfun.Mode = typer.Option(
        genfun.Mode.DIRECT, "--mode", help="Direct sum or closed form (fmot, fvir)"
    ),
    genus: int | None = _GENUS,
    order: int | None = _ORDER,
    fmt: OutputFormat | None = _FORMAT,
    out: Path | None = _OUT,
) -> None:
    """Expand a generating function to the truncation order."""
    with _exit_codes():
        settings = _settings()
        g = settings.genus if genus is None else genus
        if which is Which.hmb and order is not None:
            logger.warning("--order is ignored for hmb; its series is exact at order %d", 8 * g - 5)
        cfg = RunConfig(
            command="genfun",
            genus=g,
            order=settings.order_for(g) if order is None else order,
            format=settings.format if fmt is None else fmt.value,
            out=out,
        )
        builders = {
            Which.fmot: lambda: genfun.fmot(g, cfg.order, mode),
            Which.fvir: lambda: genfun.fvir(g, cfg.order, mode),
            Which.g: lambda: genfun.g_series(g, cfg.order),
            Which.hmb: lambda: genfun.char_variety_mixed_hodge(g, 8 * g - 5),
            Which.pairs: lambda: pair_genfun_motivic(g, cfg.order),
            Which.qvir: lambda: genfun.qvir(g, cfg.order),
            Which.qmot: lambda: genfun.qmot(g, cfg.order),
            Which.v: lambda: genfun.v_series(g, cfg.order),
        }
        series = builders[which]()
        metadata = {"genus": g, "which": which.value, "order": series.order}
        _emit(Result(series, metadata), cfg)


@app.command()
def verify(
    suite: str = typer.Option("all", "--suite", "-s", help=f"One of {', '.join(SUITE_NAMES)}"),
    genus: int | None = _GENUS,
    order: int | None = _ORDER,
    workers: int | None = typer.Option(None, "--workers", "-j", help="Worker processes"),
    fmt: OutputFormat | None = _FORMAT,
    out: Path | None = _OUT,
) -> None:
    """Run a verification suite; exit 1 if any check fails."""
    with _exit_codes():
        settings = _settings()
        g = settings.genus if genus is None else genus
        cfg = RunConfig(
            command="verify",
            genus=g,
            order=settings.order_for(g) if order is None else order,
            format=settings.format if fmt is None else fmt.value,
            suite=suite,
            workers=settings.workers if workers is None else workers,
            out=out,
        )
        reports = run_suite(cfg.suite, cfg.genus, cfg.order, cfg.workers)
        result = Result(reports, {"suite": cfg.suite, "genus": g, "order": cfg.order})
        _emit(result, cfg)
        if not result.passed:
            failures = sum(1 for r in reports if not r.passed)
            err_console.print(f"[red]{failures} check(s) failed[/red]")
            raise typer.Exit(EXIT_VERIFICATION)


@app.command(name="cks")
def cks_command(
    graph: str = typer.Option(..., "--graph", help="banana:k, rose:k, JSON object or JSON file"),
    max_n: int = typer.Option(4, "--max-n", help="Number of complex degrees to compute"),
    fmt: OutputFormat | None = _FORMAT,
    out: Path | None = _OUT,
) -> None:
    """U-series of CKS weight polynomials for a dual graph."""
    with _exit_codes():
        settings = _settings()
        parsed = parse_graph(graph)
        cfg = RunConfig(
            command="cks",
            genus=settings.genus,
            order=max(max_n, 1),
            format=settings.format if fmt is None else fmt.value,
            out=out,
        )
        series = u_series(parsed, max_n)
        metadata = {
            "vertices": parsed.vertex_count,
            "edges": parsed.edge_count,
            "regime_external": bool(disconnecting_subsets(parsed, max_n - 1)),
        }
        _emit(Result(series, metadata), cfg)


def main() -> None:
    """Entry point."""
    logging.captureWarnings(True)
    app()


if __name__ == "__main__":
    main()
