from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from core.models import SpsaConfig
from utils.errors import ConfigError

# defaults reproduce the 4-cycle example run out of the box
DEFAULT_P = 2
DEFAULT_ITERATIONS = 100
DEFAULT_SAMPLES = 10000
DEFAULT_A_START = 0.25
DEFAULT_C_START = 0.25
DEFAULT_DECAY = 0.5
DEFAULT_C_FLOOR = 0.01
DEFAULT_INIT_HALF_RANGE = 0.1
DEFAULT_SEED = 1234

Mode = Literal["solve", "brute", "evaluate", "circuit"]


@dataclass(frozen=True)
class RunConfig:
    """
    Everything one CLI invocation needs.

    Fields:
      - graph_path: edge-list file
      - seed: concrete seed; `--seed random` is resolved before this is built
      - exact: optimize the exact expectation instead of the sampled one
      - output_path: optional JSON result document (solve only)
    """

    graph_path: str
    mode: Mode = "solve"
    p: int = DEFAULT_P
    n_iterations: int = DEFAULT_ITERATIONS
    n_samples: int = DEFAULT_SAMPLES
    a_start: float = DEFAULT_A_START
    c_start: float = DEFAULT_C_START
    decay: float = DEFAULT_DECAY
    seed: int = DEFAULT_SEED
    exact: bool = False
    output_path: Optional[str] = None
    parallel: bool = False

    def __post_init__(self) -> None:
        if self.mode not in ("solve", "brute", "evaluate", "circuit"):
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.p < 1:
            raise ConfigError(f"p must be >= 1, got {self.p}")
        if self.n_samples < 1:
            raise ConfigError(f"n_samples must be >= 1, got {self.n_samples}")
        # raises on invalid optimizer settings
        self.spsa_config()

    def spsa_config(self) -> SpsaConfig:
        return SpsaConfig(
            n_iterations=self.n_iterations,
            a_start=self.a_start,
            c_start=self.c_start,
            decay=self.decay,
            c_floor=DEFAULT_C_FLOOR,
            init_half_range=DEFAULT_INIT_HALF_RANGE,
            seed=self.seed,
            parallel=self.parallel,
        )
