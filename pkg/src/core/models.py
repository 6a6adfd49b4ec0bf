# provide dataclass models
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from utils.errors import ArgumentError, ConfigError, GraphError

Edge = Tuple[int, int]


def _as_vertex(value) -> int:
    try:
        vertex = int(value)
    except (TypeError, ValueError, OverflowError):
        raise GraphError(f"vertex {value!r} is not an integer") from None
    if vertex != value:
        raise GraphError(f"vertex {value!r} is not an integer")
    return vertex


@dataclass(frozen=True)
class Graph:
    """
    Unweighted Max-Cut instance.

    Edges keep the order and orientation they were given in; u is the CNOT
    control and v the target when the circuit is built. Duplicates are
    detected on the unordered pair.
    """

    n_vertices: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n_vertices < 1:
            raise GraphError(f"graph needs at least one vertex, got {self.n_vertices}")
        edges = tuple((_as_vertex(u), _as_vertex(v)) for u, v in self.edges)
        seen: set[frozenset[int]] = set()
        for u, v in edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise GraphError(
                    f"edge ({u}, {v}) references a vertex outside 0..{self.n_vertices - 1}"
                )
            if u == v:
                raise GraphError(f"self-loop on vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        object.__setattr__(self, "edges", edges)

    @property
    def n_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class QaoaParams:
    gammas: Tuple[float, ...]
    betas: Tuple[float, ...]

    def __post_init__(self) -> None:
        gammas = tuple(float(g) for g in self.gammas)
        betas = tuple(float(b) for b in self.betas)
        if len(gammas) != len(betas):
            raise ArgumentError(
                f"{len(gammas)} gammas but {len(betas)} betas; depths must match"
            )
        if not gammas:
            raise ArgumentError("QAOA depth p must be at least 1")
        if not all(math.isfinite(x) for x in gammas + betas):
            raise ArgumentError("QAOA angles must be finite")
        object.__setattr__(self, "gammas", gammas)
        object.__setattr__(self, "betas", betas)

    @property
    def p(self) -> int:
        return len(self.gammas)

    def as_vector(self) -> np.ndarray:
        """[γ_0 .. γ_{p-1}, β_0 .. β_{p-1}]"""
        return np.array(self.gammas + self.betas, dtype=np.float64)

    @classmethod
    def from_vector(cls, vector: Sequence[float]) -> QaoaParams:
        values = [float(x) for x in vector]
        if len(values) % 2:
            raise ArgumentError(f"parameter vector length {len(values)} is odd")
        p = len(values) // 2
        return cls(tuple(values[:p]), tuple(values[p:]))

    @classmethod
    def zeros(cls, p: int) -> QaoaParams:
        return cls((0.0,) * p, (0.0,) * p)


@dataclass(frozen=True)
class Evaluation:
    """One objective evaluation, plus the best bitstring it saw if any."""

    value: float
    best_bitstring: Optional[str] = None
    best_score: Optional[int] = None


@dataclass(frozen=True)
class SpsaConfig:
    n_iterations: int
    a_start: float
    c_start: float
    decay: float
    c_floor: float = 0.01
    init_half_range: float = 0.1
    seed: Optional[int] = None
    parallel: bool = False

    def __post_init__(self) -> None:
        if self.n_iterations < 1:
            raise ConfigError(f"n_iterations must be >= 1, got {self.n_iterations}")
        for name in ("a_start", "c_start", "decay", "c_floor", "init_half_range"):
            if not math.isfinite(getattr(self, name)):
                raise ConfigError(f"{name} must be finite, got {getattr(self, name)}")
        if not self.a_start > 0:
            raise ConfigError(f"a_start must be > 0, got {self.a_start}")
        if not self.c_start > 0:
            raise ConfigError(f"c_start must be > 0, got {self.c_start}")
        if not self.decay >= 0:
            raise ConfigError(f"decay must be >= 0, got {self.decay}")
        if not self.c_floor > 0:
            raise ConfigError(f"c_floor must be > 0, got {self.c_floor}")
        if not self.init_half_range >= 0:
            raise ConfigError(
                f"init_half_range must be >= 0, got {self.init_half_range}"
            )
        if self.seed is not None and self.seed < 0:
            raise ConfigError(f"seed must be non-negative, got {self.seed}")


@dataclass(frozen=True)
class GainSchedule:
    a: Tuple[float, ...]
    c: Tuple[float, ...]


@dataclass(frozen=True)
class Perturbation:
    delta_gammas: Tuple[float, ...]
    delta_betas: Tuple[float, ...]

    def as_vector(self) -> np.ndarray:
        return np.array(self.delta_gammas + self.delta_betas, dtype=np.float64)


@dataclass(frozen=True)
class IterationRecord:
    index: int
    a: float
    c: float
    f_plus: float
    f_minus: float
    gradient: Tuple[float, ...]
    params: QaoaParams  # after the update


@dataclass(frozen=True)
class SpsaTrace:
    initial_params: QaoaParams
    records: Tuple[IterationRecord, ...]
    final_params: QaoaParams
    final_value: float
    best_bitstring: Optional[str] = None
    best_score: Optional[int] = None
    seed: Optional[int] = None

    def __len__(self) -> int:
        return len(self.records)
