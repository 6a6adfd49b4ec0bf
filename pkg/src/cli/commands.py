import logging
from typing import Optional, Tuple

import click
import numpy as np

from cli import config as defaults
from cli.config import RunConfig
from cli.runner import run_brute, run_circuit_listing, run_evaluate, run_solve
from utils.errors import ConfigError
from utils.logger import get_logger, set_log_level

_logger = get_logger(__name__)


class SeedParamType(click.ParamType):
    """A non-negative integer, or `random` for an entropy-drawn seed (None)."""

    name = "seed"

    def convert(self, value, param, ctx) -> Optional[int]:
        if value is None or isinstance(value, int):
            return value
        if str(value).strip().lower() == "random":
            return None
        try:
            seed = int(value)
        except ValueError:
            self.fail(f"{value!r} is neither an integer nor 'random'", param, ctx)
        if seed < 0:
            self.fail(f"seed must be non-negative, got {seed}", param, ctx)
        return seed


class FloatListParamType(click.ParamType):
    """Comma-separated radians, e.g. `0.1,-0.2`."""

    name = "floats"

    def convert(self, value, param, ctx) -> Tuple[float, ...]:
        if isinstance(value, tuple):
            return value
        entries = [v.strip() for v in str(value).split(",")]
        if not any(entries):
            self.fail("at least one angle is required", param, ctx)
        if not all(entries):
            self.fail(f"{value!r} has an empty entry", param, ctx)
        try:
            return tuple(float(v) for v in entries)
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of numbers", param, ctx)


SEED = SeedParamType()
FLOATS = FloatListParamType()


def _resolve_seed(seed: Optional[int]) -> int:
    if seed is None:
        seed = int(np.random.SeedSequence().entropy)
        _logger.info(f"Drawn seed: {seed}")
    return seed


def _build_config(**kwargs) -> RunConfig:
    try:
        return RunConfig(**kwargs)
    except ConfigError as exc:
        raise click.ClickException(str(exc)) from exc


graph_argument = click.argument("graph_path", type=click.Path(dir_okay=False))
seed_option = click.option(
    "--seed",
    type=SEED,
    default=defaults.DEFAULT_SEED,
    show_default=True,
    help="RNG seed, or 'random'.",
)
samples_option = click.option(
    "--samples",
    type=int,
    default=defaults.DEFAULT_SAMPLES,
    show_default=True,
    help="Measurements per expectation estimate.",
)
angle_options = [
    click.option("--gammas", type=FLOATS, required=True, help="Comma-separated γ."),
    click.option("--betas", type=FLOATS, required=True, help="Comma-separated β."),
]


def _apply(options):
    def decorator(f):
        for option in reversed(options):
            f = option(f)
        return f

    return decorator


@click.group(
    context_settings={
        "auto_envvar_prefix": "QAOA_MAXCUT",
        "help_option_names": ["-h", "--help"],
    }
)
@click.option("-v", "--verbose", is_flag=True, help="Debug logging on stderr.")
def qaoa_maxcut(verbose: bool) -> None:
    """Max-Cut with QAOA on a state-vector simulator, trained by SPSA."""
    if verbose:
        set_log_level(logging.DEBUG)


@qaoa_maxcut.command()
@graph_argument
@click.option("--p", "p", type=int, default=defaults.DEFAULT_P, show_default=True, help="QAOA depth.")
@click.option("--iterations", type=int, default=defaults.DEFAULT_ITERATIONS, show_default=True)
@samples_option
@click.option("--a-start", type=float, default=defaults.DEFAULT_A_START, show_default=True)
@click.option("--c-start", type=float, default=defaults.DEFAULT_C_START, show_default=True)
@click.option("--decay", type=float, default=defaults.DEFAULT_DECAY, show_default=True)
@seed_option
@click.option("--exact", is_flag=True, help="Optimize the exact expectation value.")
@click.option("--parallel", is_flag=True, help="Evaluate F+ and F- concurrently.")
@click.option("--out", "output_path", type=click.Path(dir_okay=False), help="Write a JSON result document.")
@click.pass_context
def solve(
    ctx: click.Context,
    graph_path: str,
    p: int,
    iterations: int,
    samples: int,
    a_start: float,
    c_start: float,
    decay: float,
    seed: Optional[int],
    exact: bool,
    parallel: bool,
    output_path: Optional[str],
) -> None:
    """Train QAOA parameters with SPSA and report the best cut found."""
    config = _build_config(
        graph_path=graph_path,
        mode="solve",
        p=p,
        n_iterations=iterations,
        n_samples=samples,
        a_start=a_start,
        c_start=c_start,
        decay=decay,
        seed=_resolve_seed(seed),
        exact=exact,
        output_path=output_path,
        parallel=parallel,
    )
    ctx.exit(run_solve(config))


@qaoa_maxcut.command()
@graph_argument
@click.pass_context
def brute(ctx: click.Context, graph_path: str) -> None:
    """Enumerate every cut and print the optimum."""
    ctx.exit(run_brute(_build_config(graph_path=graph_path, mode="brute")))


@qaoa_maxcut.command()
@graph_argument
@_apply(angle_options)
@samples_option
@seed_option
@click.pass_context
def evaluate(
    ctx: click.Context,
    graph_path: str,
    gammas: Tuple[float, ...],
    betas: Tuple[float, ...],
    samples: int,
    seed: Optional[int],
) -> None:
    """Sampled and exact expectation at fixed angles."""
    config = _build_config(
        graph_path=graph_path,
        mode="evaluate",
        n_samples=samples,
        seed=_resolve_seed(seed),
    )
    ctx.exit(run_evaluate(config, gammas, betas))


@qaoa_maxcut.command()
@graph_argument
@_apply(angle_options)
@click.pass_context
def circuit(
    ctx: click.Context,
    graph_path: str,
    gammas: Tuple[float, ...],
    betas: Tuple[float, ...],
) -> None:
    """Print the gate list of the QAOA circuit."""
    ctx.exit(run_circuit_listing(_build_config(graph_path=graph_path, mode="circuit"), gammas, betas))
