# SPSA: simultaneous perturbation stochastic approximation, maximizing
from __future__ import annotations

import asyncio
import contextlib
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from core.models import (
    Evaluation,
    GainSchedule,
    Graph,
    IterationRecord,
    Perturbation,
    QaoaParams,
    SpsaConfig,
    SpsaTrace,
)
from utils.errors import ArgumentError
from utils.logger import get_logger

_logger = get_logger(__name__)

Evaluator = Callable[
    [Graph, QaoaParams, np.random.Generator], Union[float, Evaluation]
]


def gain_schedule(config: SpsaConfig) -> GainSchedule:
    """
    a_i = a_start / (i+1)^decay and c_i = max(c_start / (i+1)^decay, c_floor)
    for zero-based iteration i.
    """
    denom = np.arange(1, config.n_iterations + 1, dtype=np.float64) ** config.decay
    a = config.a_start / denom
    c = np.maximum(config.c_start / denom, config.c_floor)
    return GainSchedule(tuple(a.tolist()), tuple(c.tolist()))


def init_params(p: int, half_range: float, rng: np.random.Generator) -> QaoaParams:
    """Every γ and β uniform on [-half_range, half_range]."""
    if p < 1:
        raise ArgumentError(f"depth p must be at least 1, got {p}")
    if half_range < 0:
        raise ArgumentError(f"half_range must be >= 0, got {half_range}")
    return QaoaParams.from_vector(rng.uniform(-half_range, half_range, size=2 * p))


def perturb(
    params: QaoaParams, c_i: float, rng: np.random.Generator
) -> Tuple[QaoaParams, QaoaParams, Perturbation]:
    """Θ± = Θ ± Δ with Δ_j = ±c_i, each sign a fair coin."""
    if not c_i > 0:
        raise ArgumentError(f"perturbation magnitude must be > 0, got {c_i}")
    signs = rng.integers(0, 2, size=2 * params.p) * 2 - 1
    delta = signs.astype(np.float64) * c_i
    theta = params.as_vector()
    p = params.p
    return (
        QaoaParams.from_vector(theta + delta),
        QaoaParams.from_vector(theta - delta),
        Perturbation(tuple(delta[:p].tolist()), tuple(delta[p:].tolist())),
    )


def gradient_estimate(
    f_plus: float, f_minus: float, delta: Perturbation
) -> np.ndarray:
    """g_j = (F+ - F-) / (2 Δ_j), using the signed perturbation entry."""
    d = delta.as_vector()
    if np.any(d == 0.0):
        raise ArgumentError("perturbation has a zero entry")
    return (f_plus - f_minus) / (2.0 * d)


def update_params(
    params: QaoaParams, a_i: float, g: Sequence[float]
) -> QaoaParams:
    """Ascent step Θ + a_i g."""
    g = np.asarray(g, dtype=np.float64)
    if g.shape != (2 * params.p,):
        raise ArgumentError(
            f"gradient has shape {g.shape}, parameters need ({2 * params.p},)"
        )
    return QaoaParams.from_vector(params.as_vector() + a_i * g)


def _as_evaluation(result: Union[float, Evaluation]) -> Evaluation:
    if isinstance(result, Evaluation):
        return result
    return Evaluation(float(result))


async def _evaluate_concurrently(
    evaluator: Evaluator,
    graph: Graph,
    jobs: Sequence[Tuple[QaoaParams, np.random.Generator]],
) -> List[Union[float, Evaluation]]:
    return await asyncio.gather(
        *(asyncio.to_thread(evaluator, graph, params, rng) for params, rng in jobs)
    )


class _BestSeen:
    def __init__(self) -> None:
        self.bitstring: Optional[str] = None
        self.score: Optional[int] = None

    def offer(self, evaluation: Evaluation) -> None:
        if evaluation.best_score is None:
            return
        if self.score is None or evaluation.best_score > self.score:
            self.bitstring = evaluation.best_bitstring
            self.score = evaluation.best_score


def optimize(
    graph: Graph,
    p: int,
    config: SpsaConfig,
    evaluator: Evaluator,
    on_iteration: Optional[Callable[[IterationRecord], None]] = None,
) -> SpsaTrace:
    """
    Run config.n_iterations SPSA steps on evaluator and return the trace.

    Randomness comes from one SeedSequence: separate child streams for the
    initial point, the perturbation signs, and every single evaluation, so the
    trace does not depend on whether F+ and F- run concurrently.
    """
    seed_seq = np.random.SeedSequence(config.seed)
    init_seq, perturb_seq, eval_seq = seed_seq.spawn(3)
    perturb_rng = np.random.default_rng(perturb_seq)
    schedule = gain_schedule(config)

    params = init_params(p, config.init_half_range, np.random.default_rng(init_seq))
    initial = params
    best = _BestSeen()
    records: List[IterationRecord] = []
    _logger.debug(f"SPSA start: p={p}, init={params}, seed={seed_seq.entropy}")

    runner_cm = asyncio.Runner() if config.parallel else contextlib.nullcontext()
    with runner_cm as runner:
        for i in range(config.n_iterations):
            a_i, c_i = schedule.a[i], schedule.c[i]
            theta_plus, theta_minus, delta = perturb(params, c_i, perturb_rng)
            rng_plus, rng_minus = (np.random.default_rng(s) for s in eval_seq.spawn(2))

            if runner is not None:
                raw_plus, raw_minus = runner.run(
                    _evaluate_concurrently(
                        evaluator,
                        graph,
                        [(theta_plus, rng_plus), (theta_minus, rng_minus)],
                    )
                )
            else:
                raw_plus = evaluator(graph, theta_plus, rng_plus)
                raw_minus = evaluator(graph, theta_minus, rng_minus)
            ev_plus, ev_minus = _as_evaluation(raw_plus), _as_evaluation(raw_minus)
            best.offer(ev_plus)
            best.offer(ev_minus)

            g = gradient_estimate(ev_plus.value, ev_minus.value, delta)
            params = update_params(params, a_i, g)

            record = IterationRecord(
                index=i,
                a=a_i,
                c=c_i,
                f_plus=ev_plus.value,
                f_minus=ev_minus.value,
                gradient=tuple(g.tolist()),
                params=params,
            )
            records.append(record)
            _logger.debug(
                f"iter {i}: a={a_i:.5f} c={c_i:.5f} "
                f"F+={ev_plus.value:.5f} F-={ev_minus.value:.5f}"
            )
            if on_iteration is not None:
                on_iteration(record)

    final = _as_evaluation(
        evaluator(graph, params, np.random.default_rng(eval_seq.spawn(1)[0]))
    )
    best.offer(final)
    _logger.debug(f"SPSA done: final value {final.value:.5f}, best {best.bitstring}")

    return SpsaTrace(
        initial_params=initial,
        records=tuple(records),
        final_params=params,
        final_value=final.value,
        best_bitstring=best.bitstring,
        best_score=best.score,
        seed=int(seed_seq.entropy),
    )
