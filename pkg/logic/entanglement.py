"""
Entanglement of pure states in S_N: entropies of the reduced density
operators plus a battery of moment-based witnesses.

Every witness is reported as ``value = lhs - threshold`` so that a negative
value certifies entanglement and a non-negative one is inconclusive.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

import numpy as np
import scipy.stats

from logic.errors import DomainError, WitnessDiagnosticError
from logic.fock import (
    A_B_DAG,
    A_DAG_B,
    N_A,
    N_AB,
    N_B,
    NormalMonomial,
    SubspaceState,
    expectation_monomial,
    variance,
)

logger = logging.getLogger(__name__)

DETECTION_TOL = 1e-12
CONVENTION = "negative => entangled"

WITNESS_NAMES = ("duan", "mancini", "d3", "ecs", "su2", "su11", "simon", "hz", "D")

# Readings of the last term of the SU(1,1) witness.
SU11_READINGS = ("sum_squared", "abs_sum_squared", "difference_squared")
SU11_DEFAULT_READING = "sum_squared"


@dataclass(frozen=True)
class ReducedSpectrum:
    """Diagonal of either reduced density operator; ``probs[j]`` = |amps[j]|^2."""

    N: int
    probs: Tuple[float, ...]

    def for_mode(self, mode: str) -> np.ndarray:
        """Occupation distribution of one mode, indexed by its quanta."""
        probs = np.array(self.probs)
        if mode == "b":
            return probs
        if mode == "a":
            return probs[::-1]
        raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class WitnessReport:
    name: str
    value: float
    detected: bool
    convention: str = CONVENTION

    @classmethod
    def from_value(cls, name: str, value: float) -> "WitnessReport":
        value = float(value)
        return cls(name, value, value < -DETECTION_TOL)


# ---------------- Entropies ----------------
def reduced_spectrum(state: SubspaceState) -> ReducedSpectrum:
    return ReducedSpectrum(state.N, tuple(float(p) for p in state.probabilities))


def linear_entropy(state: SubspaceState) -> float:
    probs = state.probabilities
    return float(max(0.0, 1.0 - np.sum(probs ** 2)))


def von_neumann_entropy(state: SubspaceState) -> float:
    """-sum p log2 p over the reduced spectrum, in bits."""
    return float(max(0.0, scipy.stats.entropy(state.probabilities, base=2)))


def normalized_entropy(state: SubspaceState) -> float:
    if state.N == 0:
        raise DomainError("normalized entropy is undefined in the one-dimensional S_0")
    return von_neumann_entropy(state) / math.log2(state.N + 1)


# ---------------- Moments ----------------
def _real(state: SubspaceState, mono: NormalMonomial) -> float:
    return float(expectation_monomial(state, mono).real)


def number_moments(state: SubspaceState) -> Tuple[float, float, float]:
    """(<n_a>, <n_b>, <n_a n_b>)."""
    return _real(state, N_A), _real(state, N_B), _real(state, N_AB)


def _duan_operators(lam: float):
    s = math.sqrt(2.0)
    u = {"a": abs(lam) / s, "ad": abs(lam) / s, "b": 1 / (lam * s), "bd": 1 / (lam * s)}
    # v = [|lam|(a - a^dag) - (b - b^dag)/lam] / (i sqrt2)
    v = {"a": -1j * abs(lam) / s, "ad": 1j * abs(lam) / s,
         "b": 1j / (lam * s), "bd": -1j / (lam * s)}
    return u, v


# ---------------- Witnesses ----------------
def variance_witnesses(state: SubspaceState, lam: float = 1.0) -> Tuple[WitnessReport, WitnessReport]:
    """Duan (sum of variances, scale ``lam``) and Mancini (product, lam = 1)."""
    if lam == 0 or not math.isfinite(lam):
        raise DomainError(f"Duan scale must be a finite nonzero number, got {lam}")
    u, v = _duan_operators(lam)
    duan = variance(state, u) + variance(state, v) - (lam ** 4 + 1) / lam ** 2
    u1, v1 = _duan_operators(1.0)
    mancini = variance(state, u1) * variance(state, v1) - 1.0
    return WitnessReport.from_value("duan", duan), WitnessReport.from_value("mancini", mancini)


def duan_closed_form(state: SubspaceState, lam: float = 1.0) -> float:
    """Sum of the Duan variances for S_N states: (lam^4+1)/lam^2 + 2 lam^2 N_a + 2 N_b / lam^2."""
    n_a, n_b, _ = number_moments(state)
    return (lam ** 4 + 1) / lam ** 2 + 2 * lam ** 2 * n_a + 2 * n_b / lam ** 2


def _det3(rows) -> float:
    return float(np.linalg.det(np.array(rows, dtype=complex)).real)


def determinant_witnesses(state: SubspaceState) -> Tuple[WitnessReport, WitnessReport]:
    """Shchukin-Vogel type determinants: D3 and the entangled-coherent-state one."""
    def e(*exps):
        return expectation_monomial(state, NormalMonomial(*exps))

    d3 = _det3([
        [1.0, e(1, 0, 0, 0), e(0, 0, 1, 0)],
        [e(0, 1, 0, 0), e(1, 1, 0, 0), e(1, 0, 1, 0)],
        [e(0, 0, 0, 1), e(0, 1, 0, 1), e(0, 0, 1, 1)],
    ])
    # corners <ab>, <a^dag b^dag>: the reading under which the determinant
    # reduces to <n_a n_b><n_b> on S_N
    ecs = _det3([
        [1.0, e(0, 0, 0, 1), e(0, 1, 0, 1)],
        [e(0, 0, 1, 0), e(0, 0, 1, 1), e(0, 1, 1, 1)],
        [e(1, 0, 1, 0), e(1, 0, 1, 1), e(1, 1, 1, 1)],
    ])
    return WitnessReport.from_value("d3", d3), WitnessReport.from_value("ecs", ecs)


def su11_value(state: SubspaceState, reading: str = SU11_DEFAULT_READING) -> float:
    n_a, n_b, n_ab = number_moments(state)
    pair = float(expectation_monomial(state, NormalMonomial(0, 2, 2, 0)).real)  # <a^2 b^dag^2>
    hop = float(expectation_monomial(state, A_DAG_B).real)
    if reading in ("sum_squared", "abs_sum_squared"):
        last = abs(n_a + n_b) ** 2
    elif reading == "difference_squared":
        last = (n_a - n_b) ** 2
    else:
        raise ValueError(f"unknown SU(1,1) reading {reading!r}; choose from {SU11_READINGS}")
    return ((1 + 2 * n_ab + n_a + n_b - 2 * n_a * n_b) ** 2
            - 4 * (pair ** 2 - hop ** 2) ** 2
            - last)


def algebraic_witnesses(state: SubspaceState) -> Tuple[WitnessReport, ...]:
    """SU(2), SU(1,1), Simon and Hillery-Zubairy witnesses, in that order."""
    n_a, n_b, n_ab = number_moments(state)
    su2 = n_ab * (4 * n_ab + 2 * n_a + 2 * n_b) + 4 * n_a * n_b
    x = expectation_monomial(state, A_B_DAG)
    simon = (x.real ** 2 / 2 + abs(x) ** 4 - abs(x) ** 2 * (n_a + n_b + 2 * n_a * n_b)
             + (1 + 2 * n_a) ** 2 * (1 + 2 * n_b) ** 2 / 16)
    hz = n_a * n_b - abs(expectation_monomial(state, A_DAG_B)) ** 2
    return (WitnessReport.from_value("su2", su2),
            WitnessReport.from_value("su11", su11_value(state)),
            WitnessReport.from_value("simon", simon),
            WitnessReport.from_value("hz", hz))


def number_correlation_D(state: SubspaceState) -> WitnessReport:
    """D = <n_a n_b> - <n_a><n_b>; on S_N it equals -Var(n_a) and is negative iff entangled."""
    n_a, n_b, n_ab = number_moments(state)
    return WitnessReport.from_value("D", n_ab - n_a * n_b)


def all_witnesses(state: SubspaceState, lam: float = 1.0) -> Dict[str, WitnessReport]:
    reports = (*variance_witnesses(state, lam), *determinant_witnesses(state),
               *algebraic_witnesses(state), number_correlation_D(state))
    return {r.name: r for r in reports}


def check_su11_dip(states: Iterable[SubspaceState]) -> float:
    """Minimum SU(1,1) witness along ``states``; raises when it never goes negative.

    The error lists the minimum under every reading of the malformed last
    term so the discrepancy is reported instead of silently resolved.
    """
    states = list(states)
    minima = {reading: min(su11_value(s, reading) for s in states) for reading in SU11_READINGS}
    adopted = minima[SU11_DEFAULT_READING]
    if adopted < -DETECTION_TOL:
        return adopted
    detail = ", ".join(f"{k}={v:.6g}" for k, v in minima.items())
    logger.error("SU(1,1) witness never negative; minima per reading: %s", detail)
    raise WitnessDiagnosticError(f"SU(1,1) witness shows no dip ({detail})", minima)
