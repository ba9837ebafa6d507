import math

import numpy as np
import pytest

from logic.errors import CapacityError, DimensionError, DomainError, NormalizationError
from logic.fock import (
    A_DAG_B,
    N_A,
    N_B,
    FockPair,
    FullTwoModeState,
    ModelParams,
    NormalMonomial,
    SubspaceState,
    embed_full,
    expectation_monomial,
    falling_sqrt,
    full_expectation,
    full_index,
    inner_product,
    is_product,
    monomial_matrix,
    restrict_subspace,
    variance,
)

# every monomial up to total degree 4
MONOMIALS = [NormalMonomial(p, q, r, s)
             for p in range(3) for q in range(3) for r in range(3) for s in range(3)
             if p + q + r + s <= 4]


def test_model_params_domain():
    assert ModelParams() == ModelParams(3050.0, 125.0, 30.0)
    with pytest.raises(DomainError):
        ModelParams(omega=0.0)
    with pytest.raises(DomainError):
        ModelParams(gamma=-1.0)
    with pytest.raises(DomainError):
        ModelParams(epsilon=float("nan"))


def test_fock_pair():
    assert FockPair(2, 3).total == 5
    assert str(FockPair(0, 1)) == "|0,1>"
    with pytest.raises(ValueError):
        FockPair(-1, 0)


def test_falling_sqrt():
    assert falling_sqrt(5, 0) == 1.0
    assert falling_sqrt(2, 3) == 0.0
    assert math.isclose(falling_sqrt(4, 2), math.sqrt(12.0))


def test_state_construction():
    state = SubspaceState.from_amplitudes(2, [3.0, 0.0, 4.0])
    assert math.isclose(state.norm_correction, 5.0)
    assert np.allclose(state.amps, [0.6, 0.0, 0.8])
    assert not state.amps.flags.writeable

    basis = SubspaceState.basis(1, 3)
    assert basis.N == 4 and basis.amps[3] == 1.0
    assert basis.pair(3) == FockPair(1, 3)

    with pytest.raises(NormalizationError):
        SubspaceState(1, np.array([1.0, 1.0]))
    with pytest.raises(NormalizationError):
        SubspaceState.from_amplitudes(1, [0.0, 0.0])
    with pytest.raises(DimensionError):
        SubspaceState.from_amplitudes(2, [1.0, 0.0])


def test_inner_product(bell_state):
    up, down = SubspaceState.basis(0, 1), SubspaceState.basis(1, 0)
    assert inner_product(bell_state, bell_state) == pytest.approx(1.0)
    assert inner_product(up, down) == 0
    assert inner_product(bell_state, up) == pytest.approx(1 / math.sqrt(2))
    with pytest.raises(DimensionError):
        inner_product(up, SubspaceState.basis(1, 1))


def test_expectation_examples(bell_state):
    cat = SubspaceState.from_amplitudes(2, [1.0, 0.0, 1.0])
    assert expectation_monomial(cat, NormalMonomial(0, 2, 2, 0)) == pytest.approx(1.0)
    assert expectation_monomial(SubspaceState.basis(1, 1), N_A) == pytest.approx(1.0)
    assert expectation_monomial(bell_state, A_DAG_B) == pytest.approx(0.5)


def test_selection_rule_is_exact(random_states):
    for state in random_states[::10]:
        for mono in MONOMIALS:
            if not mono.conserves_number:
                assert expectation_monomial(state, mono) == 0


def test_moments_hermitian(random_states):
    for state in random_states[::10]:
        for mono in MONOMIALS:
            value = expectation_monomial(state, mono)
            adjoint = expectation_monomial(state, mono.adjoint())
            assert abs(value - np.conj(adjoint)) < 1e-12


def test_number_sum(random_states):
    for state in random_states:
        total = expectation_monomial(state, N_A) + expectation_monomial(state, N_B)
        assert abs(total - state.N) < 1e-12


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_oracle_expectations(rng, N):
    state = SubspaceState.from_amplitudes(N, rng.normal(size=N + 1) + 1j * rng.normal(size=N + 1))
    cutoff = N + 1
    full = embed_full(state, cutoff)
    vec = full.to_vector()
    for mono in MONOMIALS:
        expected = expectation_monomial(state, mono)
        assert abs(full_expectation(full, mono) - expected) < 1e-12
        dense = np.vdot(vec, monomial_matrix(mono, cutoff) @ vec)
        assert abs(dense - expected) < 1e-12


def test_embed_full(bell_state):
    full = embed_full(SubspaceState.basis(0, 1), 1)
    assert full.amps == {FockPair(0, 1): 1.0}

    full = embed_full(bell_state, 4)
    assert len(full.amps) == 2
    assert all(abs(a - 1 / math.sqrt(2)) < 1e-15 for a in full.amps.values())
    assert full.weight_outside(1) == 0.0

    with pytest.raises(CapacityError):
        embed_full(SubspaceState.basis(2, 1), 2)


def test_full_state_roundtrip(rng):
    state = SubspaceState.from_amplitudes(3, rng.normal(size=4))
    full = FullTwoModeState.from_vector(embed_full(state, 3).to_vector(), 3)
    back = restrict_subspace(full, 3)
    assert np.allclose(back.amps, state.amps, atol=1e-15)
    assert full_index(1, 2, 3) == 6


def test_full_state_capacity():
    with pytest.raises(CapacityError):
        FullTwoModeState(1, {FockPair(2, 0): 1.0})


def test_is_product(bell_state):
    assert is_product(SubspaceState.basis(2, 2))
    assert not is_product(bell_state)
    edge = SubspaceState(1, np.array([math.sqrt(1 - 1e-14), 1e-7]))
    assert is_product(edge, tol=1e-12)


def test_variance_of_position():
    # <(a + a^dag)^2>/2 = n + 1/2 on a number state
    coeffs = {"a": 1 / math.sqrt(2), "ad": 1 / math.sqrt(2)}
    assert variance(SubspaceState.basis(3, 0), coeffs) == pytest.approx(3.5)
    assert variance(SubspaceState.basis(0, 0), coeffs) == pytest.approx(0.5)
