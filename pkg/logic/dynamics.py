"""
Exact time evolution inside an invariant subspace by spectral decomposition.

Two time axes are supported. In ``phase`` units a level of energy E (cm^-1)
accumulates the phase E * t, i.e. hbar = 1 with energies in wavenumbers. In
``ps`` units the phase is 2 pi c E t with c in cm/ps.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, Sequence, Tuple, Union

import numpy as np
import scipy.linalg

from logic.errors import DimensionError, DomainError, InvariantViolation
from logic.fock import NORM_TOL, FullTwoModeState, ModelParams, SubspaceState, inner_product
from logic.hamiltonian import SubspaceHamiltonian, build_subspace_hamiltonian

logger = logging.getLogger(__name__)

SPEED_OF_LIGHT_CM_PER_PS = 2.99792458e-2


class TimeUnit(str, Enum):
    PICOSECONDS = "ps"
    PHASE = "phase"


def phase_per_ps(energy: float) -> float:
    """Radians per picosecond accumulated by a level of ``energy`` cm^-1."""
    return 2.0 * math.pi * SPEED_OF_LIGHT_CM_PER_PS * energy


def to_phase_time(t, unit: Union[TimeUnit, str] = TimeUnit.PHASE):
    """Convert times into the phase axis (radians per cm^-1)."""
    unit = TimeUnit(unit)
    if unit is TimeUnit.PICOSECONDS:
        return np.asarray(t, dtype=float) * phase_per_ps(1.0)
    return np.asarray(t, dtype=float)


@dataclass(frozen=True, eq=False)
class TimeSpec:
    unit: TimeUnit
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float, ndmin=1)
        if values.ndim != 1 or values.size == 0:
            raise DomainError("time grid must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(values)):
            raise DomainError("time grid must be finite")
        if np.any(np.diff(values) <= 0):
            raise DomainError("time grid must be strictly ascending")
        values.setflags(write=False)
        object.__setattr__(self, "unit", TimeUnit(self.unit))
        object.__setattr__(self, "values", values)

    @classmethod
    def grid(cls, t_max: float, steps: int, unit=TimeUnit.PHASE) -> "TimeSpec":
        """``steps`` evenly spaced points from 0 to ``t_max`` inclusive."""
        if steps < 1:
            raise DomainError(f"steps must be at least 1, got {steps}")
        if steps > 1 and not t_max > 0:
            raise DomainError(f"t_max must be positive, got {t_max}")
        return cls(unit, np.linspace(0.0, t_max, steps) if steps > 1 else np.zeros(1))

    def phase_times(self) -> np.ndarray:
        return to_phase_time(self.values, self.unit)

    def __len__(self):
        return self.values.size


@dataclass(frozen=True, eq=False)
class Trajectory:
    times: TimeSpec
    states: Tuple[SubspaceState, ...]
    initial: SubspaceState

    def __len__(self):
        return len(self.states)

    def __iter__(self) -> Iterator[SubspaceState]:
        return iter(self.states)

    def amplitudes(self) -> np.ndarray:
        return np.array([s.amps for s in self.states])


def _checked_state(N: int, vec: np.ndarray) -> SubspaceState:
    drift = abs(float(np.linalg.norm(vec)) - 1.0)
    if drift > NORM_TOL:
        raise InvariantViolation(f"norm drifted by {drift:.3e} during propagation in S_{N}")
    return SubspaceState(N, vec / np.linalg.norm(vec))


def _spectral_propagate(H: SubspaceHamiltonian, psi0: SubspaceState, tau: np.ndarray) -> np.ndarray:
    """Rows are U(tau_i) psi0 for every phase time in ``tau``."""
    V = H.eigenvectors
    coeffs = V.T.conj() @ psi0.amps
    phases = np.exp(-1j * np.outer(tau, H.eigenvalues))
    return (phases * coeffs) @ V.T


def evolve(H: SubspaceHamiltonian, psi0: SubspaceState, t: float,
           unit: Union[TimeUnit, str] = TimeUnit.PHASE) -> SubspaceState:
    """U(t) psi0 with U = sum_k exp(-i theta_k(t)) |v_k><v_k|."""
    if psi0.N != H.N:
        raise DimensionError(f"state in S_{psi0.N}, Hamiltonian on S_{H.N}")
    tau = float(to_phase_time(t, unit))
    if tau == 0.0:
        return psi0
    return _checked_state(H.N, _spectral_propagate(H, psi0, np.array([tau]))[0])


def fidelity(H: SubspaceHamiltonian, psi0: SubspaceState, t: float,
             unit: Union[TimeUnit, str] = TimeUnit.PHASE) -> float:
    """|<psi0| U(t) |psi0>|."""
    return min(1.0, abs(inner_product(psi0, evolve(H, psi0, t, unit))))


def sample_trajectory(H: SubspaceHamiltonian, psi0: SubspaceState, times: TimeSpec) -> Trajectory:
    """Evolve psi0 to every grid point independently (no step accumulation)."""
    if psi0.N != H.N:
        raise DimensionError(f"state in S_{psi0.N}, Hamiltonian on S_{H.N}")
    rows = _spectral_propagate(H, psi0, times.phase_times())
    states = []
    for tau, row in zip(times.phase_times(), rows):
        states.append(psi0 if tau == 0.0 else _checked_state(H.N, row))
    logger.debug("sampled %d points in S_%d", len(states), H.N)
    return Trajectory(times, tuple(states), psi0)


# ---------------- Bell-like states in S_1 ----------------
def bell_states() -> Tuple[SubspaceState, SubspaceState]:
    """(|0,1> + i|1,0>)/sqrt2 and (|0,1> - i|1,0>)/sqrt2 in S_1 ordering."""
    plus = SubspaceState.from_amplitudes(1, [1j, 1.0])
    minus = SubspaceState.from_amplitudes(1, [-1j, 1.0])
    return plus, minus


def bell_overlaps(params: ModelParams, t: float,
                  unit: Union[TimeUnit, str] = TimeUnit.PHASE) -> Tuple[float, float]:
    """Overlaps of exp(-itH)|0,1> with the two Bell-like states."""
    H = build_subspace_hamiltonian(1, params)
    psi = evolve(H, SubspaceState.basis(0, 1), t, unit)
    plus, minus = bell_states()
    return abs(inner_product(plus, psi)), abs(inner_product(minus, psi))


def bell_arrival_phases(params: ModelParams) -> Dict[str, float]:
    """Phase times at which |0,1> reaches each Bell-like state and |1,0>.

    Arrival is pinned by the relative phase of the two eigenbranches:
    pi/2 for the first Bell-like state, pi for full transfer, 3 pi/2 for
    the second one and 2 pi for the return to |0,1>.
    """
    H = build_subspace_hamiltonian(1, params)
    gap = float(H.eigenvalues[1] - H.eigenvalues[0])
    if gap <= 0:
        raise DomainError("S_1 levels are degenerate (epsilon = 0); no Bell-like state is reached")
    return {
        "plus": (math.pi / 2) / gap,
        "transfer": math.pi / gap,
        "minus": (3 * math.pi / 2) / gap,
        "period": 2 * math.pi / gap,
    }


# ---------------- Full-space oracle ----------------
def evolve_full(full_matrix: np.ndarray, state: FullTwoModeState, t: float,
                unit: Union[TimeUnit, str] = TimeUnit.PHASE) -> FullTwoModeState:
    """Propagate a truncated two-mode state with a dense matrix exponential.

    Also covers initial states that mix several invariant subspaces.
    """
    tau = float(to_phase_time(t, unit))
    U = scipy.linalg.expm(-1j * tau * full_matrix)
    return FullTwoModeState.from_vector(U @ state.to_vector(), state.cutoff)


def energy_series(H: SubspaceHamiltonian, states: Sequence[SubspaceState]) -> np.ndarray:
    return np.array([H.energy(s) for s in states])
