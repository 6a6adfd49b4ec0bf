# numba amplitude kernels, internal to the sim package
#
# Qubit q is bit q of the basis index (qubit 0 is the least-significant bit).
# Each kernel walks the 2^(n-1) indices whose target bit is 0 and inserts that
# zero bit to find the pair (i1, i1 | 1 << target).
import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def apply_1q_kernel(state, gate, target):
    tk = 1 << target
    nstates = state.shape[0] >> 1
    for g in range(nstates):
        i1 = ((g >> target) << (target + 1)) + (g & (tk - 1))
        i2 = i1 + tk
        a1 = state[i1]
        a2 = state[i2]
        state[i1] = gate[0, 0] * a1 + gate[0, 1] * a2
        state[i2] = gate[1, 0] * a1 + gate[1, 1] * a2
    return state


@njit(cache=True, nogil=True)
def apply_cnot_kernel(state, control, target):
    tk = 1 << target
    ck = 1 << control
    nstates = state.shape[0] >> 1
    for g in range(nstates):
        i1 = ((g >> target) << (target + 1)) + (g & (tk - 1))
        if i1 & ck:
            i2 = i1 + tk
            tmp = state[i1]
            state[i1] = state[i2]
            state[i2] = tmp
    return state


@njit(cache=True, nogil=True)
def probabilities_kernel(state):
    out = np.empty(state.shape[0], dtype=np.float64)
    for k in range(state.shape[0]):
        a = state[k]
        out[k] = a.real * a.real + a.imag * a.imag
    return out
