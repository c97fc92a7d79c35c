"""Exact diagonal-state simulator used to verify the Monte Carlo engine.

The boosting gates only permute computational-basis populations, so a
state is fully described by the 2^n nonnegative populations c_k of the
component states |k>.  This module evolves that vector exactly, takes
single-qubit marginals, and computes the von Neumann / effective
entropies whose gap measures the total classical correlation.

Bit convention: qubit 1 is the most significant bit of the index k, so
the vector is ordered |00...0>, |00...1>, ..., |11...1>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analytics import binary_entropy
from .gates import CNOT_KIND, FREDKIN_KIND, X_KIND, Circuit

#: Default width cap; 2^20 populations (~8 MB) is comfortable desk scale.
DEFAULT_MAX_QUBITS = 20

_NORM_ATOL = 1e-12


@dataclass
class PopulationVector:
    """Populations c_k of the 2^n component states, summing to 1."""

    n: int
    c: np.ndarray

    def __post_init__(self):
        self.c = np.asarray(self.c, dtype=float)
        if self.c.shape != (2**self.n,):
            raise ValueError(f"expected {2**self.n} populations, got shape {self.c.shape}")

    def copy(self) -> "PopulationVector":
        return PopulationVector(self.n, self.c.copy())

    def validate(self, atol: float = _NORM_ATOL) -> None:
        if np.any(self.c < 0):
            raise ValueError("negative population")
        total = float(self.c.sum())
        if abs(total - 1.0) > atol:
            raise ValueError(f"populations sum to {total}, not 1")


def _bit_shift(n: int, qubit: int) -> int:
    """LSB-relative position of ``qubit`` in a state index (qubit 1 = MSB)."""
    if not 1 <= qubit <= n:
        raise ValueError(f"qubit {qubit} out of range 1..{n}")
    return n - qubit


def product_state(biases, max_qubits: int = DEFAULT_MAX_QUBITS) -> PopulationVector:
    """Tensor product of single-spin diagonal states with the given biases.

    c_k = prod_i (1 + (-1)^{bit_i(k)} eps_i)/2.
    """
    biases = np.asarray(biases, dtype=float)
    n = len(biases)
    if n > max_qubits:
        raise ValueError(f"n={n} exceeds capacity cap {max_qubits}")
    if np.any(np.abs(biases) > 1.0):
        raise ValueError("bias magnitude exceeds 1")
    c = np.ones(1)
    for eps in biases:
        p = (1.0 + eps) / 2.0
        c = np.kron(c, np.array([p, 1.0 - p]))
    return PopulationVector(n, c)


def _gate_permutation(n: int, gate) -> np.ndarray:
    """Index map pi of the gate as a permutation of state indices."""
    k = np.arange(2**n, dtype=np.int64)
    if gate.kind == X_KIND:
        s = _bit_shift(n, gate.qubits[0])
        return k ^ (1 << s)
    if gate.kind == CNOT_KIND:
        sa = _bit_shift(n, gate.qubits[0])
        sb = _bit_shift(n, gate.qubits[1])
        return k ^ (((k >> sa) & 1) << sb)
    if gate.kind == FREDKIN_KIND:
        sa = _bit_shift(n, gate.qubits[0])
        sb = _bit_shift(n, gate.qubits[1])
        sc = _bit_shift(n, gate.qubits[2])
        differ = ((k >> sa) & 1) ^ ((k >> sb) & 1)
        swap = differ & ((k >> sc) & 1)
        return k ^ (swap << sa) ^ (swap << sb)
    raise ValueError(f"unknown gate kind {gate.kind!r}")


def apply_circuit_exact(pop: PopulationVector, circuit: Circuit) -> PopulationVector:
    """Push the population vector through the circuit: c'_{pi(k)} = c_k."""
    if circuit.width != pop.n:
        raise ValueError(f"circuit width {circuit.width} != state width {pop.n}")
    c = pop.c.copy()
    out = np.empty_like(c)
    for g in circuit.gates:
        perm = _gate_permutation(pop.n, g)
        out[perm] = c
        c, out = out, c
    return PopulationVector(pop.n, c)


@dataclass(frozen=True)
class QubitMarginal:
    """Reduced state of one qubit of a diagonal n-qubit state."""

    prob_zero: float
    bias: float
    intrinsic_bias: float
    entropy: float


def marginal(pop: PopulationVector, qubit: int) -> QubitMarginal:
    """Single-qubit marginal: P(0), superficial bias 2P-1, intrinsic
    bias |2P-1| (the diagonal reduced state sorted descending), and the
    binary entropy of the intrinsic bias."""
    s = _bit_shift(pop.n, qubit)
    k = np.arange(2**pop.n, dtype=np.int64)
    p0 = float(pop.c[(k >> s) & 1 == 0].sum())
    bias = 2.0 * p0 - 1.0
    intrinsic = abs(bias)
    return QubitMarginal(
        prob_zero=p0,
        bias=bias,
        intrinsic_bias=intrinsic,
        entropy=binary_entropy(intrinsic),
    )


def marginal_biases(pop: PopulationVector) -> np.ndarray:
    """Superficial biases 2 P_i - 1 of all qubits."""
    return np.array([marginal(pop, i).bias for i in range(1, pop.n + 1)])


def von_neumann_entropy(pop: PopulationVector) -> float:
    """S = -sum c_k log2 c_k with 0 log 0 = 0, in bits."""
    c = pop.c[pop.c > 0.0]
    return float(-(c * np.log2(c)).sum())


@dataclass(frozen=True)
class EntropyReport:
    """Entropy summary of a diagonal state.

    ``r_e``/``r_c`` treat this state as the terminal one; they are None
    where undefined (S = n resp. S_e = 0).
    """

    n: int
    s: float
    s_e: float
    r_e: float | None
    r_c: float | None

    @property
    def total_correlation(self) -> float:
        return self.s_e - self.s


def entropies(pop: PopulationVector) -> EntropyReport:
    """Von Neumann entropy S, effective entropy S_e (sum of intrinsic-
    bias binary entropies), and the efficiency ratios."""
    pop.validate()
    s = von_neumann_entropy(pop)
    s_e = float(sum(marginal(pop, i).entropy for i in range(1, pop.n + 1)))
    r_e = (pop.n - s_e) / (pop.n - s) if s < pop.n else None
    r_c = s / s_e if s_e > 0.0 else None
    return EntropyReport(n=pop.n, s=s, s_e=s_e, r_e=r_e, r_c=r_c)


def joint_zero_probability_exact(pop: PopulationVector, qubits) -> float:
    """Probability that every listed qubit reads 0 (empty list -> 1)."""
    qubits = list(qubits)
    if len(set(qubits)) != len(qubits):
        raise ValueError(f"duplicate qubit index in {qubits}")
    mask = 0
    for q in qubits:
        mask |= 1 << _bit_shift(pop.n, q)
    k = np.arange(2**pop.n, dtype=np.int64)
    return float(pop.c[(k & mask) == 0].sum())


def total_correlation_kl(pop: PopulationVector) -> float:
    """Total correlation computed directly as the relative entropy
    KL(joint || product of marginals), in bits.

    Independent of :func:`entropies`; the two must agree to ~1e-9 on any
    diagonal state (they are the same quantity by identity).
    """
    pop.validate()
    probs_zero = np.array([marginal(pop, i).prob_zero for i in range(1, pop.n + 1)])
    k = np.arange(2**pop.n, dtype=np.int64)
    log_prod = np.zeros(2**pop.n)
    for i, p0 in enumerate(probs_zero, start=1):
        bit = (k >> _bit_shift(pop.n, i)) & 1
        with np.errstate(divide="ignore"):
            log_prod += np.where(bit == 0, np.log2(p0), np.log2(1.0 - p0))
    support = pop.c > 0.0
    return float((pop.c[support] * (np.log2(pop.c[support]) - log_prod[support])).sum())
