"""Closed-form theory for the bias-boosting scheme.

Everything here is a pure function of biases and entropies: the thermal
bias of a spin, binary entropy in bias form, the independent-input
predictor for one trio boost, the alpha/beta/l bound chain that limits
how many qubits can be initialized, efficiency ratios, and the one-step
correlation-growth study for the 3- and 4-wire boosting primitives.

Biases (polarizations) are dimensionless in [-1, 1]; a spin with bias
eps is 0 with probability (1 + eps)/2.  All entropies are in bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: CODATA Boltzmann constant, J/K (exact since the 2019 SI redefinition).
K_BOLTZMANN = 1.380649e-23


@dataclass(frozen=True)
class ThermalParams:
    """Zeeman energy gap (J) and temperature (K) of a spin species."""

    energy_gap: float
    temperature: float

    def __post_init__(self):
        if self.temperature <= 0:
            raise ValueError(f"temperature must be positive, got {self.temperature}")
        if self.energy_gap < 0:
            raise ValueError(f"energy gap must be nonnegative, got {self.energy_gap}")


def thermal_bias(params: ThermalParams) -> float:
    """Equilibrium bias tanh(E_gap / (2 k_B T)) of a spin."""
    return math.tanh(params.energy_gap / (2.0 * K_BOLTZMANN * params.temperature))


def thermal_bias_from_ratio(ratio: float) -> float:
    """Same as :func:`thermal_bias` with the dimensionless ratio
    E_gap/(k_B T) supplied directly (avoids unit pitfalls)."""
    if ratio < 0:
        raise ValueError(f"ratio must be nonnegative, got {ratio}")
    return math.tanh(ratio / 2.0)


def binary_entropy(eps):
    """Binary entropy H(eps) in bits of a spin with bias eps.

    Accepts a scalar or ndarray; symmetric in +-eps, H(0) = 1, H(+-1) = 0.
    """
    e = np.asarray(eps, dtype=float)
    if np.any(np.abs(e) > 1.0):
        raise ValueError("bias magnitude exceeds 1")
    p = (1.0 + e) / 2.0
    q = 1.0 - p
    with np.errstate(divide="ignore", invalid="ignore"):
        h = -np.where(p > 0.0, p * np.log2(p), 0.0) - np.where(
            q > 0.0, q * np.log2(q), 0.0
        )
    if np.isscalar(eps):
        return float(h)
    return h


def effective_entropy(biases) -> float:
    """Sum of the per-qubit binary entropies (bits)."""
    return float(np.sum(binary_entropy(np.asarray(biases, dtype=float))))


def predict_boost(eps_a: float, eps_b: float, eps_c: float) -> tuple[float, float, float]:
    """Post-boost biases of an *independent* trio (a, b, c).

    The caller is responsible for the no-correlation assumption; after a
    few boosting steps real trios are correlated and this is only a
    rough forecast.
    """
    prod = eps_a * eps_b * eps_c
    out_a = 0.5 * (eps_a + eps_b + eps_c - prod)
    out_b = 0.5 * (eps_a + eps_b - eps_c + prod)
    out_c = eps_b * eps_c
    return out_a, out_b, out_c


def boost_condition(eps_a: float, eps_b: float, eps_c: float) -> bool:
    """Whether a boost on an independent trio strictly increases eps_a:
    eps_a < (eps_b + eps_c) / (1 + eps_b * eps_c)."""
    denom = 1.0 + eps_b * eps_c
    if denom == 0.0:
        raise ValueError("eps_b * eps_c = -1 leaves the condition undefined")
    return eps_a < (eps_b + eps_c) / denom


@dataclass(frozen=True)
class StepStudyPoint:
    """Correlation growth of one boosting step on a uniform trio/quad."""

    eps: float
    n_wires: int
    s: float
    s_e_out: float

    @property
    def mean_gap(self) -> float:
        return (self.s_e_out - self.s) / self.n_wires


def step_study(eps: float, n_wires: int) -> StepStudyPoint:
    """One-step effective-entropy growth for the 3- or 4-wire primitive.

    Inputs are ``n_wires`` independent qubits of uniform bias eps.  The
    3-wire output biases are ((3e - e^3)/2, (e + e^3)/2, e^2); the
    4-wire variant adds a second e^2 wire.  The 4-wire primitive always
    induces at least as much correlation per wire, which is why it is
    not used as the generator's basic operation.
    """
    if n_wires not in (3, 4):
        raise ValueError(f"n_wires must be 3 or 4, got {n_wires}")
    if not 0.0 <= eps <= 1.0:
        raise ValueError(f"eps must be in [0, 1], got {eps}")
    out = [(3.0 * eps - eps**3) / 2.0, (eps + eps**3) / 2.0, eps**2]
    if n_wires == 4:
        out.append(eps**2)
    s = n_wires * binary_entropy(eps)
    s_e_out = float(sum(binary_entropy(e) for e in out))
    return StepStudyPoint(eps=eps, n_wires=n_wires, s=s, s_e_out=s_e_out)


def alpha_bound(joint_target: float, l: int) -> float:
    """Largest admissible mean binary entropy of l initialized qubits.

    For independent initialized qubits, Prob{0...0} >= c forces the mean
    binary entropy alpha <= H(2 c^(1/l) - 1); this returns that bound.
    """
    if not 0.0 < joint_target <= 1.0:
        raise ValueError(f"joint target must be in (0, 1], got {joint_target}")
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    p = joint_target ** (1.0 / l)
    return binary_entropy(2.0 * p - 1.0)


def l_upper_bound(n: int, s_e: float, beta: float) -> float:
    """Upper bound (1 + beta)(n - S_e) on the number of initialized qubits."""
    if not 0.0 <= s_e <= n:
        raise ValueError(f"S_e must be in [0, n], got {s_e}")
    if beta < 0:
        raise ValueError(f"beta must be nonnegative, got {beta}")
    return (1.0 + beta) * (n - s_e)


@dataclass(frozen=True)
class BoundsReport:
    """The bound chain from a joint-probability target to an l cap."""

    joint_target: float
    l: int
    alpha: float
    beta: float
    compressed_entropy_bound: float
    l_max: float


def bounds_report(n: int, s_e: float, joint_target: float, l: int) -> BoundsReport:
    """Evaluate the full alpha/beta/l bound chain for a given state."""
    alpha = alpha_bound(joint_target, l)
    beta = alpha / (1.0 - alpha)
    return BoundsReport(
        joint_target=joint_target,
        l=l,
        alpha=alpha,
        beta=beta,
        compressed_entropy_bound=s_e - alpha * l,
        l_max=l_upper_bound(n, s_e, beta),
    )


def efficiencies(n: int, s: float, s_e_end: float) -> tuple[float, float]:
    """Maximal initialization and compression efficiencies.

    r_e = (n - S_e_end)/(n - S) and r_c = S/S_e_end.  Rejects S = n
    (r_e undefined) and S_e_end <= 0.
    """
    if not 0.0 <= s <= s_e_end <= n:
        raise ValueError(f"need 0 <= S <= S_e_end <= n, got S={s}, S_e_end={s_e_end}, n={n}")
    if s == n:
        raise ValueError("r_e is undefined at S = n")
    if s_e_end <= 0.0:
        raise ValueError("r_c is undefined at S_e_end = 0")
    return (n - s_e_end) / (n - s), s / s_e_end


def default_eps_cold(n: int, s: float) -> float:
    """Default cold-qubit threshold 2 * 0.9**(1/ceil(n - S)) - 1.

    The exponent is clamped to >= 1 so the degenerate S = n input (all
    qubits maximally mixed) stays defined.
    """
    if not 0.0 <= s <= n:
        raise ValueError(f"S must be in [0, n], got {s}")
    k = max(1, math.ceil(n - s))
    return 2.0 * 0.9 ** (1.0 / k) - 1.0


def nonuniform_prediction(n: int, s_a: float, s_b: float) -> tuple[float, float]:
    """Terminal S_e predictions for an even split into species A and B.

    Returns ``(split, pooled)`` where ``split`` assumes the two halves
    grow independently, (n/2) sqrt(2 S_A/n) + (n/2) sqrt(2 S_B/n), and
    ``pooled`` treats them as one uniform pool, sqrt(n (S_A + S_B)).
    The split prediction never exceeds the pooled one.
    """
    if n < 2 or n % 2:
        raise ValueError(f"n must be even and >= 2, got {n}")
    if s_a < 0 or s_b < 0 or s_a > n / 2 or s_b > n / 2:
        raise ValueError("species entropies must lie in [0, n/2]")
    split = (n / 2.0) * math.sqrt(2.0 * s_a / n) + (n / 2.0) * math.sqrt(2.0 * s_b / n)
    pooled = math.sqrt(n * (s_a + s_b))
    return split, pooled


@dataclass(frozen=True)
class RelationPoint:
    """One (n, eps) data point of the terminal-entropy relation
    S_e_end/n ~ sqrt(S/n)."""

    n: int
    eps: float
    s_over_n: float
    s_e_end_over_n: float

    @property
    def delta(self) -> float:
        """Residual S_e_end/n - sqrt(S/n)."""
        return self.s_e_end_over_n - math.sqrt(self.s_over_n)

    def in_large_n_band(self) -> bool:
        """Whether the residual sits in the accepted (-0.05, 0.04) band
        for large-n runs (n >= 1000, eps <= 0.975)."""
        return -0.05 < self.delta < 0.04
