"""Constant values used across cddsim."""

import numpy as np


PAULI_I = np.eye(2, dtype=np.complex128)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

PAULIS = {"I": PAULI_I, "X": PAULI_X, "Y": PAULI_Y, "Z": PAULI_Z}

# Time base for schedules (time units per tick). 1 ns when the unit is seconds.
DEFAULT_TICK = 1e-9

DEFAULT_MAX_EVENTS = 10_000_000

HERMITIAN_ATOL = 1e-12
UNITARY_ATOL = 1e-10
STATE_ATOL = 1e-10

# Eigenphases closer than this to +-pi are treated as a log branch-cut hit.
BRANCH_CUT_MARGIN = 1e-6

# Fitted rates below this (per time unit) are reported as zero decay.
RATE_FLOOR = 1e-9
