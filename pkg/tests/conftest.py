import numpy as np
import pytest

from logic.fock import ModelParams, SubspaceState


@pytest.fixture
def params():
    return ModelParams(3050.0, 125.0, 30.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def make_random_state(rng, N):
    vec = rng.normal(size=N + 1) + 1j * rng.normal(size=N + 1)
    return SubspaceState.from_amplitudes(N, vec)


@pytest.fixture
def random_states(rng):
    """125 random states in each of S_1 .. S_4."""
    return [make_random_state(rng, N) for N in range(1, 5) for _ in range(125)]


@pytest.fixture
def bell_state():
    return SubspaceState.from_amplitudes(1, [1.0, 1.0])
