import numpy as np
import pytest

from unruhpt.errors import DomainError, NotHermitianError
from unruhpt.linalg import ID2, Subsystem, swap_subsystems
from unruhpt.unruh import (
    AccelerationSpec,
    KrausPair,
    R_MAX,
    Scenario,
    TwoQubitState,
    accelerate,
    apply_channel,
    bell_phi_plus,
    reference_both_accelerated,
    reference_single_accelerated,
    unruh_kraus,
)

from _oracles import random_density


def test_bell_matrix():
    rho = bell_phi_plus().rho
    expected = np.zeros((4, 4), dtype=complex)
    expected[0, 0] = expected[0, 3] = expected[3, 0] = expected[3, 3] = 0.5
    assert np.array_equal(rho, expected)


def test_bell_trace_and_purity():
    rho = bell_phi_plus().rho
    assert abs(np.trace(rho) - 1) < 1e-15
    assert abs(np.trace(rho @ rho) - 1) < 1e-15


def test_kraus_at_zero():
    pair = unruh_kraus(0.0)
    assert np.array_equal(pair.k0, ID2)
    assert np.array_equal(pair.k1, np.zeros((2, 2)))


def test_kraus_at_quarter_pi():
    pair = unruh_kraus(np.pi / 4)
    assert abs(pair.k0[0, 0] - 1 / np.sqrt(2)) < 1e-15
    assert pair.k0[1, 1] == 1
    assert abs(pair.k1[1, 0] - 1 / np.sqrt(2)) < 1e-15


def test_kraus_completeness():
    for r in np.linspace(0, R_MAX, 20):
        pair = unruh_kraus(float(r))
        comp = pair.k0.conj().T @ pair.k0 + pair.k1.conj().T @ pair.k1
        assert np.max(np.abs(comp - ID2)) < 1e-15


def test_kraus_domain():
    with pytest.raises(DomainError):
        unruh_kraus(-0.01)
    with pytest.raises(DomainError):
        unruh_kraus(R_MAX + 0.01)


def test_kraus_pair_rejects_incomplete():
    with pytest.raises(ValueError):
        KrausPair(ID2, ID2)


def test_acceleration_spec_domain():
    with pytest.raises(DomainError):
        AccelerationSpec(-0.1, Scenario.BOTH)
    with pytest.raises(DomainError):
        AccelerationSpec(1.0, Scenario.FIRST_ONLY)


def test_channel_at_zero_is_identity():
    rng = np.random.default_rng(5)
    pair = unruh_kraus(0.0)
    for _ in range(10):
        state = TwoQubitState(random_density(rng, 4))
        out = apply_channel(state, pair, Subsystem.A)
        assert np.max(np.abs(out.rho - state.rho)) < 1e-15


def test_single_accelerated_matches_table_modulo_slot_swap():
    # the channel on qubit A parks the damped population on |10><10|; the
    # tabulated matrix parks it on |01><01|
    bell = bell_phi_plus()
    for r in np.linspace(0, R_MAX, 25):
        ours = accelerate(bell, AccelerationSpec(float(r), Scenario.FIRST_ONLY)).rho
        ref = reference_single_accelerated(float(r))
        assert abs(ours[2, 2] - np.sin(r) ** 2 / 2) < 1e-14
        assert np.max(np.abs(swap_subsystems(ours) - ref)) < 1e-12


def test_both_accelerated_matches_table():
    bell = bell_phi_plus()
    for r in np.linspace(0, R_MAX, 50):
        ours = accelerate(bell, AccelerationSpec(float(r), Scenario.BOTH)).rho
        assert np.max(np.abs(ours - reference_both_accelerated(float(r)))) < 1e-12


def test_accelerate_zero_r_identity():
    bell = bell_phi_plus()
    for scenario in Scenario:
        out = accelerate(bell, AccelerationSpec(0.0, scenario))
        assert np.max(np.abs(out.rho - bell.rho)) < 1e-14


def test_channel_order_commutes():
    bell = bell_phi_plus()
    for r in (0.2, 0.5, R_MAX):
        pair = unruh_kraus(r)
        ab = apply_channel(apply_channel(bell, pair, Subsystem.A), pair, Subsystem.B)
        ba = apply_channel(apply_channel(bell, pair, Subsystem.B), pair, Subsystem.A)
        assert np.max(np.abs(ab.rho - ba.rho)) < 1e-15
        direct = accelerate(bell, AccelerationSpec(r, Scenario.BOTH))
        assert np.max(np.abs(ab.rho - direct.rho)) < 1e-15


def test_channel_preserves_trace_and_positivity():
    rng = np.random.default_rng(41)
    states = [TwoQubitState(random_density(rng, 4)) for _ in range(100)]
    r_grid = np.linspace(0, R_MAX, 50)
    for r in r_grid:
        pair = unruh_kraus(float(r))
        for state in states[:: max(1, len(states) // 10)]:
            for target in Subsystem:
                out = apply_channel(state, pair, target)
                assert abs(np.trace(out.rho).real - 1) < 1e-12
                assert np.linalg.eigvalsh(out.rho).min() >= -1e-10
    # full set of random states at a few representative accelerations
    for r in (0.1, 0.5, R_MAX):
        pair = unruh_kraus(r)
        for state in states:
            out = apply_channel(state, pair, Subsystem.A)
            assert abs(np.trace(out.rho).real - 1) < 1e-12
            assert np.linalg.eigvalsh(out.rho).min() >= -1e-10


def test_state_rejects_non_hermitian():
    m = np.diag([0.5, 0.5, 0.0, 0.0]).astype(complex)
    m[0, 1] = 0.1
    with pytest.raises(NotHermitianError):
        TwoQubitState(m)


def test_state_rejects_wrong_trace():
    with pytest.raises(ValueError):
        TwoQubitState(np.diag([1.0, 1.0, 0.0, 0.0]).astype(complex))


def test_state_from_matrix_rejects_negative():
    with pytest.raises(ValueError):
        TwoQubitState.from_matrix(np.diag([1.5, -0.5, 0.0, 0.0]).astype(complex))


def test_state_is_read_only():
    state = bell_phi_plus()
    with pytest.raises(ValueError):
        state.rho[0, 0] = 9.0
