# solve / brute / evaluate / circuit drivers; each returns a process exit status
import functools
import time
from typing import Callable, Sequence

import click
import numpy as np

from cli.config import RunConfig
from cli.graph_file import parse_graph_file
from cli.results import build_result_document, write_result
from core import maxcut, qaoa
from core.models import IterationRecord, QaoaParams
from core.spsa import optimize
from utils.errors import QaoaMaxcutError
from utils.logger import get_logger
from utils.pure import format_vector, generate_markdown_table

_logger = get_logger(__name__)

# brute-force argmax sets can be huge on sparse graphs
MAX_LISTED_OPTIMA = 16


def _reports_errors(func: Callable[..., int]) -> Callable[..., int]:
    """Print `Error: ...` to stderr and return 1 on any expected failure."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except (QaoaMaxcutError, OSError) as exc:
            _logger.debug(f"{func.__name__} failed", exc_info=True)
            click.echo(f"Error: {exc}", err=True)
            return 1

    return wrapper


def format_iteration(record: IterationRecord) -> str:
    return f"Iteration: {record.index} Exp(+): {record.f_plus} Exp(-): {record.f_minus}"


def _echo_iteration(record: IterationRecord) -> None:
    click.echo(format_iteration(record))


def _format_optima(optima: Sequence[str]) -> str:
    listed = sorted(optima)
    if len(listed) <= MAX_LISTED_OPTIMA:
        return " ".join(listed)
    shown = " ".join(listed[:MAX_LISTED_OPTIMA])
    return f"{shown} ... ({len(listed)} total)"


@_reports_errors
def run_solve(config: RunConfig) -> int:
    graph = parse_graph_file(config.graph_path)
    evaluator = (
        qaoa.ExactEvaluator() if config.exact else qaoa.SampledEvaluator(config.n_samples)
    )
    _logger.info(
        f"Solving {config.graph_path} ({graph.n_vertices} vertices, "
        f"{graph.n_edges} edges) with p={config.p}, seed={config.seed}"
    )

    start = time.perf_counter()
    trace = optimize(
        graph, config.p, config.spsa_config(), evaluator, on_iteration=_echo_iteration
    )
    brute = None
    if graph.n_vertices <= maxcut.MAX_BRUTE_FORCE_VERTICES:
        brute = maxcut.brute_force_max(graph)
    wall_time = time.perf_counter() - start

    kind = "exact" if config.exact else "sampled"
    final = trace.final_params
    click.echo(f"Final gammas: {format_vector(final.gammas)}")
    click.echo(f"Final betas: {format_vector(final.betas)}")
    click.echo(
        generate_markdown_table(
            ["P", "gamma", "beta"],
            [[i, g, b] for i, (g, b) in enumerate(zip(final.gammas, final.betas))],
        )
    )
    click.echo(f"Final expectation ({kind}): {trace.final_value}")
    click.echo(f"Best bitstring: {trace.best_bitstring} (score {trace.best_score})")
    if brute is not None:
        click.echo(f"Brute-force optimum: {brute[0]} ({_format_optima(brute[1])})")

    if config.output_path:
        write_result(
            config.output_path,
            build_result_document(config, graph, trace, brute, wall_time),
        )
        _logger.info(f"Result written to {config.output_path}")
    _logger.info(f"Wall time: {wall_time:.2f} s")
    return 0


@_reports_errors
def run_brute(config: RunConfig) -> int:
    graph = parse_graph_file(config.graph_path)
    best, argmax = maxcut.brute_force_max(graph)
    click.echo(f"max {best}: {_format_optima(argmax)}")
    return 0


@_reports_errors
def run_evaluate(
    config: RunConfig, gammas: Sequence[float], betas: Sequence[float]
) -> int:
    graph = parse_graph_file(config.graph_path)
    params = QaoaParams(tuple(gammas), tuple(betas))
    rng = np.random.default_rng(config.seed)
    sampled = qaoa.estimate_expectation(graph, params, config.n_samples, rng)
    exact = qaoa.exact_expectation_value(graph, params)
    click.echo(f"Sampled expectation: {sampled} ({config.n_samples} samples)")
    click.echo(f"Exact expectation: {exact}")
    return 0


@_reports_errors
def run_circuit_listing(
    config: RunConfig, gammas: Sequence[float], betas: Sequence[float]
) -> int:
    graph = parse_graph_file(config.graph_path)
    params = QaoaParams(tuple(gammas), tuple(betas))
    click.echo(qaoa.format_circuit(qaoa.build_circuit(graph, params)))
    return 0
