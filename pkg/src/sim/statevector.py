# dense state-vector simulator of an n-qubit register
#
# Basis index k encodes qubit i as bit i (qubit 0 least significant); bitstrings
# are rendered z_0 z_1 ... z_{n-1} left to right. Gate applications mutate the
# state in place and return it.
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterable, Literal, Optional, Tuple

import numpy as np

from sim import kernels
from utils.errors import ArgumentError, ConfigError
from utils.logger import get_logger

_logger = get_logger(__name__)

MAX_QUBITS = 24
UNITARY_TOLERANCE = 1e-10

SampleSet = Dict[str, int]


@dataclass(frozen=True, eq=False)
class Gate1Q:
    name: str
    matrix: np.ndarray

    def __post_init__(self) -> None:
        matrix = np.asarray(self.matrix, dtype=np.complex128)
        if matrix.shape != (2, 2):
            raise ArgumentError(f"gate {self.name} must be 2x2, got {matrix.shape}")
        if not np.allclose(
            matrix.conj().T @ matrix, np.eye(2), rtol=0.0, atol=UNITARY_TOLERANCE
        ):
            raise ArgumentError(f"gate {self.name} is not unitary")
        object.__setattr__(self, "matrix", matrix)


class StateVector:
    """
    2^n complex amplitudes of an n-qubit register.

    Owned by a single simulation run; never apply gates to the same instance
    from two threads.
    """

    __slots__ = ("n_qubits", "amplitudes")

    def __init__(self, n_qubits: int, amplitudes: np.ndarray) -> None:
        amplitudes = np.ascontiguousarray(amplitudes, dtype=np.complex128)
        if amplitudes.shape != (1 << n_qubits,):
            raise ArgumentError(
                f"{n_qubits} qubits need {1 << n_qubits} amplitudes, "
                f"got {amplitudes.shape[0]}"
            )
        self.n_qubits = n_qubits
        self.amplitudes = amplitudes

    @classmethod
    def from_amplitudes(cls, amplitudes: Iterable[complex]) -> StateVector:
        """Build a state from explicit amplitudes; they must be normalized."""
        amps = np.asarray(list(amplitudes), dtype=np.complex128)
        size = amps.shape[0]
        if size < 2 or size & (size - 1):
            raise ArgumentError(f"amplitude count {size} is not a power of two")
        n_qubits = size.bit_length() - 1
        _check_qubit_count(n_qubits)
        if abs(float(np.vdot(amps, amps).real) - 1.0) > UNITARY_TOLERANCE:
            raise ArgumentError("amplitudes are not normalized")
        return cls(n_qubits, amps)

    def copy(self) -> StateVector:
        return StateVector(self.n_qubits, self.amplitudes.copy())

    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)


def _check_qubit_count(n_qubits: int) -> None:
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise ConfigError(
            f"qubit count must be between 1 and {MAX_QUBITS}, got {n_qubits}"
        )


def _check_qubit(state: StateVector, qubit: int, role: str) -> None:
    if not 0 <= qubit < state.n_qubits:
        raise ArgumentError(
            f"{role} qubit {qubit} out of range for {state.n_qubits} qubits"
        )


def _check_angle(angle: float, name: str) -> float:
    angle = float(angle)
    if not math.isfinite(angle):
        raise ArgumentError(f"{name} must be finite, got {angle}")
    return angle


# ---------------------------
# Basis indexing
# ---------------------------


def index_to_bitstring(k: int, n_qubits: int) -> str:
    if not 0 <= k < (1 << n_qubits):
        raise ArgumentError(f"basis index {k} out of range for {n_qubits} qubits")
    return "".join("1" if (k >> i) & 1 else "0" for i in range(n_qubits))


def bitstring_to_index(bits: str) -> int:
    if not bits or any(b not in "01" for b in bits):
        raise ArgumentError(f"not a bitstring: {bits!r}")
    return sum(1 << i for i, b in enumerate(bits) if b == "1")


# ---------------------------
# States and gates
# ---------------------------


def new_zero_state(n_qubits: int) -> StateVector:
    """|00...0> on n_qubits qubits."""
    _check_qubit_count(n_qubits)
    amplitudes = np.zeros(1 << n_qubits, dtype=np.complex128)
    amplitudes[0] = 1.0
    _logger.debug(f"Allocated {n_qubits}-qubit register.")
    return StateVector(n_qubits, amplitudes)


def hadamard() -> Gate1Q:
    s = 1.0 / math.sqrt(2.0)
    return Gate1Q("h", np.array([[s, s], [s, -s]]))


def rx(theta: float) -> Gate1Q:
    theta = _check_angle(theta, "theta")
    cos, sin = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return Gate1Q("rx", np.array([[cos, -1j * sin], [-1j * sin, cos]]))


def rz(phi: float) -> Gate1Q:
    phi = _check_angle(phi, "phi")
    return Gate1Q(
        "rz",
        np.array([[np.exp(-0.5j * phi), 0.0], [0.0, np.exp(0.5j * phi)]]),
    )


def apply_1q(state: StateVector, gate: Gate1Q, target: int) -> StateVector:
    _check_qubit(state, target, "target")
    kernels.apply_1q_kernel(state.amplitudes, gate.matrix, target)
    return state


def apply_cnot(state: StateVector, control: int, target: int) -> StateVector:
    _check_qubit(state, control, "control")
    _check_qubit(state, target, "target")
    if control == target:
        raise ArgumentError(f"control and target are both qubit {control}")
    kernels.apply_cnot_kernel(state.amplitudes, control, target)
    return state


# ---------------------------
# Measurement
# ---------------------------


def probabilities(state: StateVector) -> np.ndarray:
    return kernels.probabilities_kernel(state.amplitudes)


def sample(state: StateVector, n_samples: int, rng: np.random.Generator) -> SampleSet:
    """
    Draw n_samples independent measurements of every qubit.

    The draws are aggregated with a single multinomial, which has the same
    distribution as n_samples categorical draws. Keys are ordered by basis index.
    """
    if n_samples < 1:
        raise ArgumentError(f"n_samples must be at least 1, got {n_samples}")
    probs = probabilities(state)
    probs = probs / probs.sum()
    counts = rng.multinomial(n_samples, probs)
    return {
        index_to_bitstring(int(k), state.n_qubits): int(counts[k])
        for k in np.flatnonzero(counts)
    }


# ---------------------------
# Circuits
# ---------------------------

_ARITY = {"h": 1, "rx": 1, "rz": 1, "cx": 2}


@dataclass(frozen=True)
class Instruction:
    op: Literal["h", "rx", "rz", "cx"]
    qubits: Tuple[int, ...]
    angle: Optional[float] = None

    def __post_init__(self) -> None:
        if self.op not in _ARITY:
            raise ArgumentError(f"unknown instruction {self.op!r}")
        qubits = tuple(self.qubits)
        if len(qubits) != _ARITY[self.op]:
            raise ArgumentError(
                f"{self.op} takes {_ARITY[self.op]} qubit(s), got {len(qubits)}"
            )
        object.__setattr__(self, "qubits", qubits)
        if self.op in ("rx", "rz"):
            if self.angle is None:
                raise ArgumentError(f"{self.op} needs an angle")
            object.__setattr__(self, "angle", _check_angle(self.angle, "angle"))
        elif self.angle is not None:
            raise ArgumentError(f"{self.op} takes no angle")

    def __str__(self) -> str:
        operands = " ".join(str(q) for q in self.qubits)
        if self.angle is None:
            return f"{self.op} {operands}"
        return f"{self.op}({self.angle!r}) {operands}"


def execute(state: StateVector, instructions: Iterable[Instruction]) -> StateVector:
    """Apply instructions in order."""
    h = hadamard()
    for inst in instructions:
        if inst.op == "h":
            apply_1q(state, h, inst.qubits[0])
        elif inst.op == "rx":
            apply_1q(state, rx(inst.angle), inst.qubits[0])
        elif inst.op == "rz":
            apply_1q(state, rz(inst.angle), inst.qubits[0])
        elif inst.op == "cx":
            apply_cnot(state, inst.qubits[0], inst.qubits[1])
        else:
            raise ArgumentError(f"unknown instruction {inst.op!r}")
    return state
