# QAOA circuit construction and expectation values
from __future__ import annotations

from typing import Sequence, Tuple

import numpy as np

from core import maxcut
from core.models import Evaluation, Graph, QaoaParams
from sim.statevector import (
    Instruction,
    StateVector,
    execute,
    index_to_bitstring,
    new_zero_state,
    probabilities,
    sample,
)
from utils.errors import ArgumentError
from utils.logger import get_logger

_logger = get_logger(__name__)


def build_circuit(graph: Graph, params: QaoaParams) -> Tuple[Instruction, ...]:
    """
    Gate list for the QAOA circuit.

    Hadamards on every qubit once, then for each stage P a CNOT-Rz(γ_P)-CNOT
    block per edge in stored order followed by Rx(2β_P) on every qubit.
    """
    n = graph.n_vertices
    circuit = [Instruction("h", (q,)) for q in range(n)]
    for gamma, beta in zip(params.gammas, params.betas):
        for u, v in graph.edges:
            circuit.append(Instruction("cx", (u, v)))
            circuit.append(Instruction("rz", (v,), gamma))
            circuit.append(Instruction("cx", (u, v)))
        circuit.extend(Instruction("rx", (q,), 2.0 * beta) for q in range(n))
    return tuple(circuit)


def format_circuit(instructions: Sequence[Instruction]) -> str:
    return "\n".join([*(str(inst) for inst in instructions), "measure"])


def run_circuit(graph: Graph, params: QaoaParams) -> StateVector:
    return execute(new_zero_state(graph.n_vertices), build_circuit(graph, params))


def exact_expectation_value(graph: Graph, params: QaoaParams) -> float:
    return maxcut.exact_expectation(probabilities(run_circuit(graph, params)), graph)


def estimate_expectation(
    graph: Graph, params: QaoaParams, n_samples: int, rng: np.random.Generator
) -> float:
    samples = sample(run_circuit(graph, params), n_samples, rng)
    return maxcut.sample_expectation(samples, graph)


class SampledEvaluator:
    """
    Objective for the optimizer: expectation estimated from n_samples
    measurements, reporting the best bitstring among them.
    """

    def __init__(self, n_samples: int) -> None:
        if n_samples < 1:
            raise ArgumentError(f"n_samples must be at least 1, got {n_samples}")
        self.n_samples = n_samples

    def __call__(
        self, graph: Graph, params: QaoaParams, rng: np.random.Generator
    ) -> Evaluation:
        samples = sample(run_circuit(graph, params), self.n_samples, rng)
        value = maxcut.sample_expectation(samples, graph)
        bits, score = maxcut.best_sampled(samples, graph)
        return Evaluation(value, bits, score)


class ExactEvaluator:
    """
    Objective computed from the probability vector. Without samples, the
    reported bitstring is the most probable basis state.
    """

    def __call__(
        self, graph: Graph, params: QaoaParams, rng: np.random.Generator
    ) -> Evaluation:
        probs = probabilities(run_circuit(graph, params))
        value = maxcut.exact_expectation(probs, graph)
        bits = index_to_bitstring(int(np.argmax(probs)), graph.n_vertices)
        return Evaluation(value, bits, maxcut.cut_score(bits, graph))
