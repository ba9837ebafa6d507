import math

import numpy as np
import pytest

from conftest import make_random_state
from logic.dynamics import (
    TimeSpec,
    TimeUnit,
    bell_arrival_phases,
    bell_overlaps,
    bell_states,
    energy_series,
    evolve,
    evolve_full,
    fidelity,
    phase_per_ps,
    sample_trajectory,
    to_phase_time,
)
from logic.errors import DimensionError, DomainError
from logic.fock import ModelParams, SubspaceState, embed_full, inner_product, restrict_subspace
from logic.hamiltonian import build_full_hamiltonian, build_subspace_hamiltonian


def window_min_fidelity(params, n, m, t_max=1.0, steps=2001):
    psi0 = SubspaceState.basis(n, m)
    H = build_subspace_hamiltonian(psi0.N, params)
    traj = sample_trajectory(H, psi0, TimeSpec.grid(t_max, steps))
    return min(abs(inner_product(psi0, s)) for s in traj)


def test_phase_per_ps():
    assert phase_per_ps(0.0) == 0.0
    assert phase_per_ps(30.0) == pytest.approx(5.65129, rel=1e-5)
    assert phase_per_ps(1.0) == pytest.approx(0.188365, rel=1e-5)
    assert to_phase_time(2.0, "ps") == pytest.approx(2 * phase_per_ps(1.0))
    assert to_phase_time(2.0, TimeUnit.PHASE) == 2.0


def test_time_spec():
    spec = TimeSpec.grid(1.0, 5)
    assert list(spec.values) == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert len(spec) == 5
    assert list(TimeSpec.grid(3.0, 1).values) == [0.0]
    with pytest.raises(DomainError):
        TimeSpec.grid(1.0, 0)
    with pytest.raises(DomainError):
        TimeSpec(TimeUnit.PHASE, [0.0, 0.5, 0.5])
    with pytest.raises(DomainError):
        TimeSpec(TimeUnit.PHASE, [0.0, float("inf")])
    with pytest.raises(ValueError):
        TimeSpec("seconds", [0.0])


def test_evolve_identity_and_vacuum(params):
    H = build_subspace_hamiltonian(2, params)
    psi0 = SubspaceState.basis(0, 2)
    assert evolve(H, psi0, 0.0) is psi0

    vacuum = SubspaceState.basis(0, 0)
    H0 = build_subspace_hamiltonian(0, params)
    out = evolve(H0, vacuum, 17.3)
    assert out.amps[0] == pytest.approx(1.0)

    with pytest.raises(DimensionError):
        evolve(H, vacuum, 1.0)


@pytest.mark.parametrize("tau", [0.0, 0.01, 0.02618, 0.05, 0.3])
def test_two_level_populations(params, tau):
    H = build_subspace_hamiltonian(1, params)
    psi = evolve(H, SubspaceState.basis(0, 1), tau)
    # amps[1] is |0,1>
    assert psi.probabilities[1] == pytest.approx(math.cos(params.epsilon * tau) ** 2, abs=1e-12)
    assert psi.probabilities[0] == pytest.approx(math.sin(params.epsilon * tau) ** 2, abs=1e-12)


def test_fidelity_of_eigenstates(params):
    H = build_subspace_hamiltonian(3, params)
    for k in range(4):
        for t in (0.1, 0.7, 3.0):
            assert fidelity(H, H.eigenstate(k), t) == pytest.approx(1.0, abs=1e-12)


def test_fidelity_ordering(params):
    local = window_min_fidelity(params, 0, 4)
    others = {pair: window_min_fidelity(params, *pair) for pair in [(2, 2), (1, 3), (0, 2)]}
    assert local > 0.8
    assert all(local > value for value in others.values())
    assert others[(0, 2)] < 0.2


def test_vacuum_fidelity_is_one(params):
    assert window_min_fidelity(params, 0, 0, steps=11) == pytest.approx(1.0)


def test_sample_trajectory(params, rng):
    psi0 = make_random_state(rng, 4)
    H = build_subspace_hamiltonian(4, params)
    single = sample_trajectory(H, psi0, TimeSpec.grid(1.0, 1))
    assert len(single) == 1 and single.states[0] is psi0

    traj = sample_trajectory(H, psi0, TimeSpec.grid(2.0, 101))
    assert len(traj) == 101
    assert traj.amplitudes().shape == (101, 5)
    for state in traj:
        assert abs(state.norm() - 1.0) <= 1e-12
        assert state.N == 4

    energies = energy_series(H, traj.states)
    assert np.abs(energies - energies[0]).max() <= 1e-9 * abs(energies[0])


def test_trajectory_matches_pointwise_evolution(params, rng):
    psi0 = make_random_state(rng, 3)
    H = build_subspace_hamiltonian(3, params)
    traj = sample_trajectory(H, psi0, TimeSpec.grid(0.5, 6))
    for t, state in zip(traj.times.values, traj):
        assert np.allclose(state.amps, evolve(H, psi0, t).amps, atol=1e-12)


def test_group_law(params, rng):
    psi0 = make_random_state(rng, 4)
    H = build_subspace_hamiltonian(4, params)
    direct = evolve(H, psi0, 0.37)
    composed = evolve(H, evolve(H, psi0, 0.15), 0.22)
    assert np.abs(direct.amps - composed.amps).max() <= 1e-10


def test_picosecond_axis(params):
    H = build_subspace_hamiltonian(2, params)
    psi0 = SubspaceState.basis(2, 0)
    in_ps = evolve(H, psi0, 0.5, TimeUnit.PICOSECONDS)
    in_phase = evolve(H, psi0, 0.5 * phase_per_ps(1.0), TimeUnit.PHASE)
    assert np.allclose(in_ps.amps, in_phase.amps, atol=1e-12)


def test_oracle_propagation(params, rng):
    cutoff = 4
    full_H = build_full_hamiltonian(cutoff, params)
    times = TimeSpec.grid(1.0, 11)
    for N in range(1, 5):
        H = build_subspace_hamiltonian(N, params)
        for _ in range(10):
            psi0 = make_random_state(rng, N)
            embedded = embed_full(psi0, cutoff)
            for tau in times.values:
                expected = evolve(H, psi0, tau)
                full = evolve_full(full_H, embedded, tau)
                assert full.weight_outside(N) <= 1e-12
                got = restrict_subspace(full, N)
                assert np.abs(got.amps - expected.amps).max() <= 1e-9


def test_bell_states():
    plus, minus = bell_states()
    assert abs(inner_product(plus, minus)) < 1e-15
    up = SubspaceState.basis(0, 1)
    assert abs(inner_product(plus, up)) == pytest.approx(1 / math.sqrt(2))


def test_bell_overlaps(params):
    assert bell_overlaps(params, 0.0) == pytest.approx((1 / math.sqrt(2), 1 / math.sqrt(2)))

    arrivals = bell_arrival_phases(params)
    assert arrivals["plus"] * params.epsilon == pytest.approx(math.pi / 4)
    assert arrivals["period"] == pytest.approx(math.pi / params.epsilon)

    plus, _ = bell_overlaps(params, arrivals["plus"])
    _, minus = bell_overlaps(params, arrivals["minus"])
    assert abs(plus - 1.0) <= 1e-9
    assert abs(minus - 1.0) <= 1e-9

    H = build_subspace_hamiltonian(1, params)
    half = evolve(H, SubspaceState.basis(0, 1), arrivals["transfer"])
    assert half.probabilities[0] == pytest.approx(1.0, abs=1e-12)

    back = evolve(H, SubspaceState.basis(0, 1), arrivals["period"])
    assert back.probabilities[1] == pytest.approx(1.0, abs=1e-12)


def test_bell_needs_coupling():
    with pytest.raises(DomainError):
        bell_arrival_phases(ModelParams(3050.0, 125.0, 0.0))
