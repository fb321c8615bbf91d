import numpy as np
import pytest

from unruhpt import ptsym
from unruhpt.errors import DomainError, SingularEvolutionError
from unruhpt.linalg import ID2, SIGMA_X, dagger
from unruhpt.measures import negativity
from unruhpt.ptsym import (
    PTParams,
    PTTarget,
    evolve,
    h_pt,
    reference_both_accel_op_first,
    reference_one_accel_op_first,
    u_pt,
    verify_closed_forms,
)
from unruhpt.unruh import (
    AccelerationSpec,
    R_MAX,
    Scenario,
    TwoQubitState,
    accelerate,
    bell_phi_plus,
    reference_both_accelerated,
    reference_single_accelerated,
)

from _oracles import series_expm

ALPHAS = (np.pi / 6, np.pi / 4, np.pi / 3)


def test_h_pt_hermitian_limit():
    assert np.array_equal(h_pt(0.0), SIGMA_X)


def test_h_pt_at_pi_sixth():
    expected = np.array([[0.5j, 1.0], [1.0, -0.5j]])
    assert np.max(np.abs(h_pt(np.pi / 6) - expected)) < 1e-15


def test_h_pt_conjugation_symmetry():
    for alpha in ALPHAS:
        assert np.array_equal(h_pt(-alpha), dagger(h_pt(alpha)))


def test_h_pt_domain():
    with pytest.raises(DomainError):
        h_pt(np.pi / 2)
    with pytest.raises(DomainError):
        h_pt(-2.0)


def test_params_validation():
    with pytest.raises(DomainError):
        PTParams(np.pi / 2 + 0.1, 1.0)
    with pytest.raises(DomainError):
        PTParams(0.5, -1.0)
    with pytest.raises(OverflowError):
        PTParams(np.pi / 2 - 1e-8, 1.0)
    with pytest.raises(DomainError):
        PTParams(np.nan, 1.0)


def test_u_pt_hermitian_limit_is_rotation():
    for t in (0.3, 1.7, 9.2):
        expected = np.array(
            [[np.cos(t), -1j * np.sin(t)], [-1j * np.sin(t), np.cos(t)]], dtype=complex
        )
        assert np.max(np.abs(u_pt(PTParams(0.0, t)) - expected)) < 1e-15


def test_u_pt_identity_at_t_zero():
    for alpha in ALPHAS:
        assert np.array_equal(u_pt(PTParams(alpha, 0.0)), ID2)


def test_u_pt_matches_series_exponential_at_sample():
    params = PTParams(np.pi / 4, 0.5)
    oracle = series_expm(-1j * h_pt(params.alpha) * params.t)
    assert np.max(np.abs(u_pt(params) - oracle)) < 1e-9


def test_u_pt_matches_series_exponential_random():
    rng = np.random.default_rng(47)
    for _ in range(500):
        alpha = rng.uniform(-np.pi / 3, np.pi / 3)
        t = rng.uniform(0.0, 10.0)
        oracle = series_expm(-1j * h_pt(alpha) * t)
        assert np.max(np.abs(u_pt(PTParams(alpha, t)) - oracle)) < 1e-9


def test_u_pt_unitary_at_alpha_zero():
    for t in np.linspace(0, 10, 30):
        u = u_pt(PTParams(0.0, float(t)))
        assert np.max(np.abs(dagger(u) @ u - ID2)) < 1e-12


def test_u_pt_unit_determinant():
    for alpha in ALPHAS:
        for t in (0.1, 2.3, 7.7):
            assert abs(np.linalg.det(u_pt(PTParams(alpha, t))) - 1) < 1e-12


def test_evolve_identity_at_t_zero():
    state = accelerate(bell_phi_plus(), AccelerationSpec(0.4, Scenario.FIRST_ONLY))
    for target in PTTarget:
        out = evolve(state, PTParams(np.pi / 4, 0.0), target)
        assert np.max(np.abs(out.rho - state.rho)) < 1e-14


def test_evolve_unitary_case_preserves_negativity():
    state = accelerate(bell_phi_plus(), AccelerationSpec(0.3, Scenario.FIRST_ONLY))
    base = negativity(state)
    for target in PTTarget:
        for t in np.linspace(0, 10, 25):
            out = evolve(state, PTParams(0.0, float(t)), target)
            assert abs(negativity(out) - base) < 1e-10


def test_evolve_output_is_valid_state():
    bell = bell_phi_plus()
    for r in np.linspace(0, R_MAX, 6):
        for scenario in (Scenario.FIRST_ONLY, Scenario.BOTH):
            state = accelerate(bell, AccelerationSpec(float(r), scenario))
            for alpha in ALPHAS:
                for t in np.linspace(0, 10, 8):
                    for target in PTTarget:
                        out = evolve(state, PTParams(alpha, float(t)), target)
                        assert abs(np.trace(out.rho).real - 1) < 1e-12
                        assert np.max(np.abs(out.rho - out.rho.conj().T)) < 1e-11
                        assert np.linalg.eigvalsh(out.rho).min() >= -1e-9


def test_evolve_singular_guard(monkeypatch):
    monkeypatch.setattr(ptsym, "EVOLVE_TRACE_FLOOR", 2.0)
    state = bell_phi_plus()
    with pytest.raises(SingularEvolutionError):
        evolve(state, PTParams(np.pi / 6, 0.4), PTTarget.ON_A)


def test_evolve_matches_one_sided_table():
    state = TwoQubitState(reference_single_accelerated(0.3))
    out = evolve(state, PTParams(np.pi / 6, 0.4), PTTarget.ON_A)
    ref = reference_one_accel_op_first(0.3, np.pi / 6, 0.4)
    assert np.max(np.abs(out.rho - ref)) < 1e-12


def test_both_accel_table_exact_except_tabulated_conjugation_slip():
    # element (2,1) is tabulated without conjugation; everything else is exact
    state = TwoQubitState(reference_both_accelerated(0.5))
    out = evolve(state, PTParams(np.pi / 4, 1.3), PTTarget.ON_A)
    ref = reference_both_accel_op_first(0.5, np.pi / 4, 1.3)
    diff = np.abs(out.rho - ref)
    assert diff[1, 0] > 0.01
    diff[1, 0] = 0.0
    assert diff.max() < 1e-12


def test_verify_closed_forms_report():
    r_grid = np.linspace(0, R_MAX, 5)
    params = [PTParams(a, float(t)) for a in ALPHAS for t in np.linspace(0, 10, 5)]
    report = verify_closed_forms(r_grid, params)
    assert report.hard_ok
    assert report.max_residual("one_acc_op_first") < 1e-9
    # the two-sided tables oscillate with the wrong time argument
    assert report.max_residual("one_acc_op_both") > 1e-3
    assert report.max_residual("both_acc_op_both") > 1e-3
    hard_rows = [e for e in report.entries if e.hard]
    assert hard_rows and all(e.t == 0.0 for e in hard_rows)
    assert max(e.residual for e in hard_rows) < 1e-14
    text = report.render()
    assert "overall: PASS" in text
    assert "one_acc_op_both" in text


def test_verify_closed_forms_rejects_empty_grid():
    with pytest.raises(DomainError):
        verify_closed_forms([], [PTParams(0.1, 0.1)])
    with pytest.raises(DomainError):
        verify_closed_forms([0.1], [])
