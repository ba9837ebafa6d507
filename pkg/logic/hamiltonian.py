"""
Local-mode Hamiltonian of two coupled anharmonic C-H oscillators (cm^-1 units)

    H = (w - g/2)(n_a + n_b) - (g/2)(n_a^2 + n_b^2) - e (a^dag b + a b^dag)

Total quantum number commutes with H, so every S_N is invariant and the
dynamics inside it is governed by an (N+1) x (N+1) real symmetric matrix.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np
import scipy.linalg

from logic.errors import DimensionError, PerturbationError
from logic.fock import ModelParams, SubspaceState, full_index

logger = logging.getLogger(__name__)

# gamma >> epsilon is required for the local modes to be near-eigenstates;
# below this ratio the perturbative state is only weakly trustworthy.
WEAK_VALIDITY_RATIO = 4.0
DEGENERACY_TOL = 1e-9


def fock_energy(n: int, m: int, params: ModelParams) -> float:
    """Diagonal element <n,m|H|n,m>."""
    return (params.omega - params.gamma / 2.0) * (n + m) - (params.gamma / 2.0) * (n * n + m * m)


def hopping(n_from: int, m_to: int, params: ModelParams) -> float:
    """<n-1, m+1| H |n, m> with n_from = n and m_to = m + 1 (and its transpose)."""
    return -params.epsilon * math.sqrt(n_from * m_to)


def _fix_phases(vectors: np.ndarray) -> np.ndarray:
    """Make the largest-magnitude component of every column real positive."""
    vectors = vectors.copy()
    for k in range(vectors.shape[1]):
        col = vectors[:, k]
        pivot = col[np.argmax(np.abs(col))]
        vectors[:, k] = col * (abs(pivot) / pivot)
    return vectors


@dataclass(frozen=True, eq=False)
class SubspaceHamiltonian:
    N: int
    params: ModelParams
    matrix: np.ndarray
    eigenvalues: np.ndarray = field(repr=False)
    eigenvectors: np.ndarray = field(repr=False)  # columns

    @property
    def dim(self) -> int:
        return self.N + 1

    def eigenstate(self, k: int) -> SubspaceState:
        return SubspaceState.from_amplitudes(self.N, self.eigenvectors[:, k])

    def energy(self, state: SubspaceState) -> float:
        if state.N != self.N:
            raise DimensionError(f"state in S_{state.N}, Hamiltonian on S_{self.N}")
        return float(np.vdot(state.amps, self.matrix @ state.amps).real)


def build_subspace_hamiltonian(N: int, params: ModelParams) -> SubspaceHamiltonian:
    """Truncated Hamiltonian on S_N in the |N-j, j> basis, with its eigensystem."""
    if N < 0:
        raise DimensionError(f"total quantum number must be non-negative, got {N}")
    matrix = np.zeros((N + 1, N + 1))
    for j in range(N + 1):
        matrix[j, j] = fock_energy(N - j, j, params)
    for j in range(N):
        matrix[j, j + 1] = matrix[j + 1, j] = hopping(N - j, j + 1, params)

    eigenvalues, eigenvectors = scipy.linalg.eigh(matrix)
    eigenvectors = _fix_phases(eigenvectors)
    for arr in (matrix, eigenvalues, eigenvectors):
        arr.setflags(write=False)
    logger.debug("S_%d spectrum: %s", N, eigenvalues)
    return SubspaceHamiltonian(N, params, matrix, eigenvalues, eigenvectors)


def build_full_hamiltonian(cutoff: int, params: ModelParams) -> np.ndarray:
    """Oracle Hamiltonian on every |n,m> with n, m <= cutoff.

    Row/column order follows :func:`logic.fock.full_index`. Blocks with
    N <= cutoff match :func:`build_subspace_hamiltonian` entry for entry.
    """
    if cutoff < 0:
        raise DimensionError(f"cutoff must be non-negative, got {cutoff}")
    dim = (cutoff + 1) ** 2
    matrix = np.zeros((dim, dim))
    for n in range(cutoff + 1):
        for m in range(cutoff + 1):
            i = full_index(n, m, cutoff)
            matrix[i, i] = fock_energy(n, m, params)
            # a b^dag |n,m> = sqrt(n (m+1)) |n-1, m+1>
            if n >= 1 and m + 1 <= cutoff:
                k = full_index(n - 1, m + 1, cutoff)
                matrix[k, i] = matrix[i, k] = hopping(n, m + 1, params)
    return matrix


def subspace_block(full_matrix: np.ndarray, cutoff: int, N: int) -> np.ndarray:
    """Extract the S_N block of a full-space operator in |N-j, j> order."""
    idx = [full_index(N - j, j, cutoff) for j in range(N + 1)]
    return full_matrix[np.ix_(idx, idx)]


def unperturbed_levels(N: int, params: ModelParams) -> Tuple[np.ndarray, int]:
    """Uncoupled energies of |N-j, j> and the number of distinct values among them."""
    energies = np.array([fock_energy(N - j, j, params) for j in range(N + 1)])
    distinct = len(np.unique(np.round(energies, 9)))
    return energies, distinct


# ---------------- Perturbation theory ----------------
@dataclass(frozen=True, eq=False)
class PerturbedState:
    N: int
    m: int
    state: SubspaceState
    valid: bool
    f1: Optional[float] = None  # coefficient on |N-m+1, m-1>
    f2: Optional[float] = None  # coefficient on |N-m-1, m+1>
    diagnostic: str = ""
    warnings: Tuple[str, ...] = ()

    @property
    def amps(self) -> np.ndarray:
        return self.state.amps


def admixture_magnitudes(N: int, m: int, params: ModelParams) -> Tuple[float, float]:
    """Closed-form magnitudes |f1|, |f2| of the first order admixtures."""
    ratio = params.epsilon / params.gamma
    f1 = ratio * math.sqrt((N - m + 1) * m) / abs(1 + N - 2 * m) if m > 0 else 0.0
    f2 = ratio * math.sqrt((N - m) * (m + 1)) / abs(1 - N + 2 * m) if m < N else 0.0
    return f1, f2


def perturbed_state(N: int, m: int, params: ModelParams) -> PerturbedState:
    """First order state grown out of |N-m, m> by the coupling term.

    Coefficient on a neighbour |k> is <k|V|n> / (E_n - E_k) with the
    diagonal of the S_N matrix as unperturbed energies.
    """
    if not 0 <= m <= N:
        raise DimensionError(f"need 0 <= m <= N, got N={N}, m={m}")
    unperturbed = SubspaceState.basis(N - m, m)

    if abs(N - 2 * m) == 1:
        msg = (f"perturbation theory not applicable: |{N - m},{m}> is coupled to its "
               f"degenerate partner (|N-2m| = 1)")
        logger.info(msg)
        return PerturbedState(N, m, unperturbed, False, diagnostic=msg)
    if params.gamma == 0:
        msg = "first order perturbation theory fails without nonlinearity (gamma = 0)"
        logger.info(msg)
        return PerturbedState(N, m, unperturbed, False, diagnostic=msg)

    energies = [fock_energy(N - j, j, params) for j in range(N + 1)]
    amps = np.zeros(N + 1)
    amps[m] = 1.0
    f1 = f2 = 0.0
    if m >= 1:
        f1 = hopping(N - m + 1, m, params) / (energies[m] - energies[m - 1])
        amps[m - 1] = f1
    if m + 1 <= N:
        f2 = hopping(N - m, m + 1, params) / (energies[m] - energies[m + 1])
        amps[m + 1] = f2

    warnings = []
    if params.gamma < WEAK_VALIDITY_RATIO * params.epsilon:
        warnings.append(f"weak validity: gamma={params.gamma} < {WEAK_VALIDITY_RATIO:g} * epsilon")
        logger.warning(warnings[-1])
    return PerturbedState(N, m, SubspaceState.from_amplitudes(N, amps), True, f1, f2,
                          warnings=tuple(warnings))


def local_doublet(H: SubspaceHamiltonian, m: int) -> Tuple[int, ...]:
    """Exact eigenvectors that continue the unperturbed level of |N-m, m>.

    The Hamiltonian is symmetric under mode swap, so |N-m, m> and its partner
    |m, N-m> end up in an even/odd pair of eigenvectors; the pair is returned
    (a single index when m = N/2).
    """
    weights = np.abs(H.eigenvectors)
    first = int(np.argmax(weights[m]))
    partner = H.N - m
    if partner == m:
        return (first,)
    row = weights[partner].copy()
    row[first] = -1.0
    return (first, int(np.argmax(row)))


def eigenstate_overlap(N: int, m: int, params: ModelParams) -> float:
    """Overlap of the first order state with the exact eigenvectors it approximates."""
    pert = perturbed_state(N, m, params)
    if not pert.valid:
        raise PerturbationError(pert.diagnostic)
    H = build_subspace_hamiltonian(N, params)
    indices = local_doublet(H, m)
    proj = H.eigenvectors[:, list(indices)].T.conj() @ pert.amps
    return float(min(1.0, np.linalg.norm(proj)))
