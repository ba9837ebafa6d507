"""
Fock-space data model for two bosonic modes a and b.

Amplitude convention, used everywhere in the package: inside the invariant
subspace S_N the basis vector with index j is |N-j, j>, i.e. j counts the
quanta in mode b.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Tuple

import numpy as np

from logic.errors import CapacityError, DimensionError, DomainError, NormalizationError

logger = logging.getLogger(__name__)

NORM_TOL = 1e-12
PRUNE_TOL = 1e-300


def falling_sqrt(n: int, k: int) -> float:
    """sqrt(n! / (n-k)!) as a running product, 0 when k > n."""
    if k > n:
        return 0.0
    value = 1.0
    for i in range(k):
        value *= math.sqrt(n - i)
    return value


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=complex)
    arr.setflags(write=False)
    return arr


# ---------------- Value types ----------------
@dataclass(frozen=True)
class ModelParams:
    """Spectroscopic constants of the local-mode Hamiltonian, all in cm^-1."""

    omega: float = 3050.0
    gamma: float = 125.0
    epsilon: float = 30.0

    def __post_init__(self):
        for name in ("omega", "gamma", "epsilon"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.omega <= 0:
            raise DomainError(f"omega must be positive, got {self.omega}")
        if self.gamma < 0:
            raise DomainError(f"gamma must be non-negative, got {self.gamma}")
        if self.epsilon < 0:
            raise DomainError(f"epsilon must be non-negative, got {self.epsilon}")


@dataclass(frozen=True, order=True)
class FockPair:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError(f"occupation numbers must be non-negative, got ({self.n}, {self.m})")

    @property
    def total(self) -> int:
        return self.n + self.m

    def __str__(self):
        return f"|{self.n},{self.m}>"


@dataclass(frozen=True)
class NormalMonomial:
    """Exponents of the normally ordered monomial a^dag^p a^q b^dag^r b^s."""

    p: int = 0
    q: int = 0
    r: int = 0
    s: int = 0

    def __post_init__(self):
        if min(self.p, self.q, self.r, self.s) < 0:
            raise ValueError(f"exponents must be non-negative, got {self.exponents}")

    @property
    def exponents(self) -> Tuple[int, int, int, int]:
        return (self.p, self.q, self.r, self.s)

    @property
    def conserves_number(self) -> bool:
        return self.p + self.r == self.q + self.s

    def adjoint(self) -> "NormalMonomial":
        return NormalMonomial(self.q, self.p, self.s, self.r)


# Frequently used moments.
N_A = NormalMonomial(1, 1, 0, 0)
N_B = NormalMonomial(0, 0, 1, 1)
N_AB = NormalMonomial(1, 1, 1, 1)
A_DAG_B = NormalMonomial(1, 0, 0, 1)
A_B_DAG = NormalMonomial(0, 1, 1, 0)


@dataclass(frozen=True, eq=False)
class SubspaceState:
    """Pure state inside S_N; ``amps[j]`` is the amplitude of |N-j, j>.

    Build instances through :meth:`from_amplitudes` or :meth:`basis`; both
    renormalize and keep the original norm in ``norm_correction``.
    """

    N: int
    amps: np.ndarray
    norm_correction: float = field(default=1.0, compare=False)

    def __post_init__(self):
        if self.N < 0:
            raise DimensionError(f"total quantum number must be non-negative, got {self.N}")
        amps = self.amps
        if not (isinstance(amps, np.ndarray) and not amps.flags.writeable and amps.dtype == complex):
            amps = _frozen(amps)
            object.__setattr__(self, "amps", amps)
        if amps.shape != (self.N + 1,):
            raise DimensionError(f"S_{self.N} needs {self.N + 1} amplitudes, got shape {amps.shape}")
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) > NORM_TOL:
            raise NormalizationError(f"state is not normalized (norm^2 = {norm2!r})")

    @classmethod
    def from_amplitudes(cls, N: int, amps: Iterable[complex]) -> "SubspaceState":
        vec = np.asarray(list(amps), dtype=complex)
        if vec.shape != (N + 1,):
            raise DimensionError(f"S_{N} needs {N + 1} amplitudes, got {vec.shape[0]}")
        if not np.all(np.isfinite(vec)):
            raise NormalizationError("amplitudes must be finite")
        norm = float(np.linalg.norm(vec))
        if norm == 0.0:
            raise NormalizationError("cannot normalize the zero vector")
        if abs(norm - 1.0) > NORM_TOL:
            logger.debug("renormalized S_%d state by factor %.3e", N, 1.0 / norm)
        return cls(N, _frozen(vec / norm), norm)

    @classmethod
    def basis(cls, n: int, m: int) -> "SubspaceState":
        pair = FockPair(n, m)
        vec = np.zeros(pair.total + 1, dtype=complex)
        vec[m] = 1.0
        return cls(pair.total, _frozen(vec))

    @property
    def dim(self) -> int:
        return self.N + 1

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.amps) ** 2

    def pair(self, j: int) -> FockPair:
        return FockPair(self.N - j, j)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def __len__(self):
        return self.dim


@dataclass(frozen=True, eq=False)
class FullTwoModeState:
    """Truncated two-mode state over all |n,m> with n, m <= cutoff.

    Only the oracle code paths use this representation.
    """

    cutoff: int
    amps: Mapping[FockPair, complex]

    def __post_init__(self):
        if self.cutoff < 0:
            raise CapacityError(f"cutoff must be non-negative, got {self.cutoff}")
        pruned: Dict[FockPair, complex] = {}
        for pair, amp in self.amps.items():
            if pair.n > self.cutoff or pair.m > self.cutoff:
                raise CapacityError(f"{pair} exceeds cutoff {self.cutoff}")
            if abs(amp) >= PRUNE_TOL:
                pruned[pair] = complex(amp)
        object.__setattr__(self, "amps", pruned)
        norm2 = sum(abs(a) ** 2 for a in pruned.values())
        if abs(norm2 - 1.0) > NORM_TOL:
            raise NormalizationError(f"full state is not normalized (norm^2 = {norm2!r})")

    @property
    def dim(self) -> int:
        return (self.cutoff + 1) ** 2

    def to_vector(self) -> np.ndarray:
        vec = np.zeros(self.dim, dtype=complex)
        for pair, amp in self.amps.items():
            vec[full_index(pair.n, pair.m, self.cutoff)] = amp
        return vec

    @classmethod
    def from_vector(cls, vec: np.ndarray, cutoff: int) -> "FullTwoModeState":
        vec = np.asarray(vec, dtype=complex)
        if vec.shape != ((cutoff + 1) ** 2,):
            raise DimensionError(f"vector of shape {vec.shape} does not match cutoff {cutoff}")
        norm = float(np.linalg.norm(vec))
        if norm == 0.0:
            raise NormalizationError("cannot normalize the zero vector")
        vec = vec / norm
        amps = {}
        for n in range(cutoff + 1):
            for m in range(cutoff + 1):
                amps[FockPair(n, m)] = vec[full_index(n, m, cutoff)]
        return cls(cutoff, amps)

    def weight_outside(self, N: int) -> float:
        """Total probability carried by basis states with n + m != N."""
        return float(sum(abs(a) ** 2 for pair, a in self.amps.items() if pair.total != N))


def full_index(n: int, m: int, cutoff: int) -> int:
    return n * (cutoff + 1) + m


# ---------------- Operations ----------------
def inner_product(x: SubspaceState, y: SubspaceState) -> complex:
    """<x|y>, conjugate-linear in the first argument."""
    if x.N != y.N:
        raise DimensionError(f"states live in S_{x.N} and S_{y.N}")
    return complex(np.vdot(x.amps, y.amps))


def _ladder_action(n_a: int, n_b: int, mono: NormalMonomial):
    """Apply the monomial to |n_a, n_b>; returns (coefficient, n_a', n_b')."""
    coef = falling_sqrt(n_a, mono.q) * falling_sqrt(n_b, mono.s)
    if coef == 0.0:
        return 0.0, n_a, n_b
    n_a -= mono.q
    n_b -= mono.s
    # creation part: a^dag^p |k> = sqrt((k+p)!/k!) |k+p>
    coef *= falling_sqrt(n_a + mono.p, mono.p) * falling_sqrt(n_b + mono.r, mono.r)
    return coef, n_a + mono.p, n_b + mono.r


def expectation_monomial(state: SubspaceState, mono: NormalMonomial) -> complex:
    """Exact <psi| a^dag^p a^q b^dag^r b^s |psi> for a state in S_N.

    Monomials that change the total quantum number have a vanishing
    expectation value; the function returns an exact zero for them.
    """
    if not mono.conserves_number:
        return 0j
    N = state.N
    total = 0j
    for j, amp in enumerate(state.amps):
        if amp == 0:
            continue
        coef, n_a, n_b = _ladder_action(N - j, j, mono)
        if coef == 0.0:
            continue
        # n_a + n_b == N, so the image is the basis vector with index n_b
        total += np.conj(state.amps[n_b]) * coef * amp
    return complex(total)


def embed_full(state: SubspaceState, cutoff: int) -> FullTwoModeState:
    if cutoff < state.N:
        raise CapacityError(f"cutoff {cutoff} cannot hold a state of S_{state.N}")
    amps = {state.pair(j): amp for j, amp in enumerate(state.amps)}
    return FullTwoModeState(cutoff, amps)


def restrict_subspace(full: FullTwoModeState, N: int) -> SubspaceState:
    """Project a full state onto S_N and renormalize."""
    if N > full.cutoff:
        raise CapacityError(f"S_{N} does not fit under cutoff {full.cutoff}")
    amps = [full.amps.get(FockPair(N - j, j), 0j) for j in range(N + 1)]
    return SubspaceState.from_amplitudes(N, amps)


def full_expectation(full: FullTwoModeState, mono: NormalMonomial) -> complex:
    """Oracle expectation value by direct ladder algebra on the sparse expansion."""
    image: Dict[FockPair, complex] = {}
    for pair, amp in full.amps.items():
        coef, n_a, n_b = _ladder_action(pair.n, pair.m, mono)
        if coef == 0.0:
            continue
        key = FockPair(n_a, n_b)
        image[key] = image.get(key, 0j) + coef * amp
    total = 0j
    for pair, amp in image.items():
        total += np.conj(full.amps.get(pair, 0j)) * amp
    return complex(total)


def ladder_matrices(cutoff: int) -> Tuple[np.ndarray, np.ndarray]:
    """Dense annihilation operators (a, b) on the truncated product space."""
    single = np.diag(np.sqrt(np.arange(1, cutoff + 1, dtype=float)), k=1)
    eye = np.eye(cutoff + 1)
    return np.kron(single, eye), np.kron(eye, single)


def monomial_matrix(mono: NormalMonomial, cutoff: int) -> np.ndarray:
    a, b = ladder_matrices(cutoff)
    power = np.linalg.matrix_power
    return power(a.T, mono.p) @ power(a, mono.q) @ power(b.T, mono.r) @ power(b, mono.s)


def is_product(state: SubspaceState, tol: float = NORM_TOL) -> bool:
    """Inside S_N only the canonical basis states |N-j, j> are product states."""
    return bool(state.probabilities.max() >= 1.0 - tol)


# ---------------- Quadratic forms in the ladder operators ----------------
# label -> (mode, creation?)
LADDER_OPS = {"a": ("a", False), "ad": ("a", True), "b": ("b", False), "bd": ("b", True)}


def _single(label: str) -> NormalMonomial:
    mode, dagger = LADDER_OPS[label]
    if mode == "a":
        return NormalMonomial(p=int(dagger), q=int(not dagger))
    return NormalMonomial(r=int(dagger), s=int(not dagger))


def product_moment(state: SubspaceState, x: str, y: str) -> complex:
    """<x y> for two ladder labels, normal ordering the product on the fly."""
    mx, dx = LADDER_OPS[x]
    my, dy = LADDER_OPS[y]
    first, second = _single(x), _single(y)
    mono = NormalMonomial(*(i + k for i, k in zip(first.exponents, second.exponents)))
    value = expectation_monomial(state, mono)
    if mx == my and not dx and dy:
        # a a^dag = a^dag a + 1
        value += 1.0
    return value


def linear_moment(state: SubspaceState, coeffs: Mapping[str, complex]) -> complex:
    return sum(c * expectation_monomial(state, _single(x)) for x, c in coeffs.items())


def quadratic_moment(state: SubspaceState, coeffs: Mapping[str, complex]) -> complex:
    """<L^2> for L = sum_x coeffs[x] * x."""
    return sum(cx * cy * product_moment(state, x, y)
               for x, cx in coeffs.items() for y, cy in coeffs.items())


def variance(state: SubspaceState, coeffs: Mapping[str, complex]) -> float:
    """Variance of the Hermitian combination L = sum_x coeffs[x] * x."""
    mean = linear_moment(state, coeffs)
    return float((quadratic_moment(state, coeffs) - mean * mean).real)
