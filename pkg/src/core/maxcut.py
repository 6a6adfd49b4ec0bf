# Max-Cut scoring, exact and sampled expectations, brute-force oracle
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import FrozenSet, Mapping, Sequence, Tuple, Union

import numpy as np

from core.models import Graph
from sim.statevector import index_to_bitstring
from utils.errors import ArgumentError, SizeError
from utils.logger import get_logger

_logger = get_logger(__name__)

MAX_BRUTE_FORCE_VERTICES = 20
NORMALIZATION_TOLERANCE = 1e-8

# "0101" or [0, 1, 0, 1]; character/entry i is z_i
Bitstring = Union[str, Sequence[int]]


def _as_bits(bits: Bitstring) -> Tuple[int, ...]:
    if isinstance(bits, str):
        if any(b not in "01" for b in bits):
            raise ArgumentError(f"not a bitstring: {bits!r}")
        return tuple(1 if b == "1" else 0 for b in bits)
    values = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in values):
        raise ArgumentError(f"not a bitstring: {list(bits)!r}")
    return values


def cut_score(bits: Bitstring, graph: Graph) -> int:
    """Number of edges whose endpoints sit on different sides of the cut."""
    z = _as_bits(bits)
    if len(z) != graph.n_vertices:
        raise ArgumentError(
            f"bitstring has {len(z)} bits, graph has {graph.n_vertices} vertices"
        )
    return sum(1 for u, v in graph.edges if z[u] != z[v])


def complement(bits: Bitstring) -> str:
    return "".join("0" if b else "1" for b in _as_bits(bits))


@lru_cache(maxsize=16)
def cut_scores(graph: Graph) -> np.ndarray:
    """
    Score of every basis state: entry k is cut_score(bitstring(k)).

    The returned array is cached per graph and read-only.
    """
    index = np.arange(1 << graph.n_vertices, dtype=np.int64)
    scores = np.zeros(index.shape[0], dtype=np.int64)
    for u, v in graph.edges:
        scores += ((index >> u) & 1) != ((index >> v) & 1)
    scores.setflags(write=False)
    return scores


def brute_force_max(graph: Graph) -> Tuple[int, FrozenSet[str]]:
    """Best cut over all 2^n bitstrings together with every bitstring achieving it."""
    if graph.n_vertices > MAX_BRUTE_FORCE_VERTICES:
        raise SizeError(
            f"brute force is limited to {MAX_BRUTE_FORCE_VERTICES} vertices, "
            f"graph has {graph.n_vertices}"
        )
    scores = cut_scores(graph)
    best = int(scores.max())
    argmax = frozenset(
        index_to_bitstring(int(k), graph.n_vertices)
        for k in np.flatnonzero(scores == best)
    )
    _logger.debug(f"Brute force: max {best} reached by {len(argmax)} bitstrings.")
    return best, argmax


def exact_expectation(probs: Sequence[float], graph: Graph) -> float:
    probs = np.asarray(probs, dtype=np.float64)
    expected = 1 << graph.n_vertices
    if probs.ndim != 1 or probs.shape[0] != expected:
        raise ArgumentError(
            f"probability vector has {probs.size} entries, "
            f"{graph.n_vertices} vertices need {expected}"
        )
    total = float(probs.sum())
    if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
        raise ArgumentError(f"probabilities sum to {total}, not 1")
    return float(probs @ cut_scores(graph))


def sample_expectation(samples: Mapping[str, int], graph: Graph) -> float:
    """Count-weighted mean score of a measurement histogram."""
    total = sum(samples.values())
    if total < 1:
        raise ArgumentError("sample set is empty")
    weighted = sum(count * cut_score(bits, graph) for bits, count in samples.items())
    return weighted / total


def best_sampled(samples: Mapping[str, int], graph: Graph) -> Tuple[str, int]:
    """Highest-scoring bitstring in a histogram; ties go to the first key."""
    if not samples:
        raise ArgumentError("sample set is empty")
    best_bits, best_score = "", -1
    for bits in samples:
        score = cut_score(bits, graph)
        if score > best_score:
            best_bits, best_score = bits, score
    return best_bits, best_score


def random_graph(
    n_vertices: int, edge_probability: float, rng: np.random.Generator
) -> Graph:
    """Include each vertex pair independently; orientation is a coin flip."""
    if not 0.0 <= edge_probability <= 1.0:
        raise ArgumentError(f"edge probability {edge_probability} not in [0, 1]")
    edges = []
    for u, v in itertools.combinations(range(n_vertices), 2):
        if rng.random() < edge_probability:
            edges.append((u, v) if rng.random() < 0.5 else (v, u))
    return Graph(n_vertices, tuple(edges))
