import numpy as np
import pytest

from sagnac_wva.errors import NearOrthogonalPostselection
from sagnac_wva.jones import (
    OpticalElement,
    PolarizationState,
    SystemOperator,
    basis_h,
    basis_v,
    coupling_unitary,
    inner_product,
    postselection_state,
    postselection_state_via_waveplate,
    preselection_state,
    qwp_matrix,
    sigma_z,
    transition_amplitude,
    weak_value,
)

INV_SQRT2 = 1.0 / np.sqrt(2.0)


def test_preselection_components():
    s = preselection_state()
    assert s.h_component == pytest.approx(INV_SQRT2)
    assert s.v_component == pytest.approx(INV_SQRT2)
    assert s.norm() == pytest.approx(1.0, abs=1e-15)


def test_preselection_overlap_with_h():
    assert inner_product(basis_h(), preselection_state()) == pytest.approx(INV_SQRT2)


def test_postselection_quarter_turn_components():
    s = postselection_state(np.pi / 4.0)
    assert s.h_component == pytest.approx(INV_SQRT2 * np.exp(1j * np.pi / 4.0))
    assert s.v_component == pytest.approx(-INV_SQRT2 * np.exp(-1j * np.pi / 4.0))


def test_postselection_small_angle_moduli():
    s = postselection_state(1e-4)
    assert abs(s.h_component) == pytest.approx(INV_SQRT2, rel=1e-12)
    assert abs(s.v_component) == pytest.approx(INV_SQRT2, rel=1e-12)
    assert s.norm() == pytest.approx(1.0, abs=1e-12)


def test_waveplate_route_matches_closed_form():
    rng = np.random.default_rng(7)
    for phi in rng.uniform(-np.pi / 2.0, np.pi / 2.0, size=100):
        direct = postselection_state(phi).as_array()
        via_plate = postselection_state_via_waveplate(phi).as_array()
        assert np.max(np.abs(direct - via_plate)) < 1e-12


def test_qwp_is_unitary():
    m = qwp_matrix().entries
    assert np.max(np.abs(m.conj().T @ m - np.eye(2))) < 1e-12


def test_weak_value_quarter_turn():
    wv = weak_value(sigma_z(), preselection_state(), postselection_state(np.pi / 4.0))
    assert wv.value == pytest.approx(1j, abs=1e-14)


def test_weak_value_small_angle():
    # 1/tan(1e-4) = 9999.999966666666
    wv = weak_value(sigma_z(), preselection_state(), postselection_state(1e-4))
    assert wv.value.real == pytest.approx(0.0, abs=1e-9)
    assert wv.value.imag == pytest.approx(9999.999966666666, rel=1e-10)


def test_weak_value_law_across_angles():
    for phi in np.geomspace(1e-6, np.pi / 2.0 * 0.999, 40):
        wv = weak_value(sigma_z(), preselection_state(), postselection_state(phi))
        expected = 1j / np.tan(phi)
        assert abs(wv.value - expected) <= 1e-10 * abs(expected)


def test_weak_value_eigenstate_gives_eigenvalue():
    wv = weak_value(sigma_z(), basis_h(), basis_h())
    assert wv.value == 1.0 + 0.0j
    wv = weak_value(sigma_z(), basis_v(), basis_v())
    assert wv.value == -1.0 + 0.0j


def test_weak_value_orthogonal_postselection_raises():
    post = PolarizationState(INV_SQRT2, -INV_SQRT2)
    with pytest.raises(NearOrthogonalPostselection):
        weak_value(sigma_z(), preselection_state(), post)


def test_coupling_unitary_zero_phase_is_identity():
    u = coupling_unitary(sigma_z(), 0.0).entries
    assert np.array_equal(u, np.eye(2, dtype=complex))


def test_coupling_unitary_quarter_phase():
    u = coupling_unitary(sigma_z(), np.pi / 2.0).entries
    assert np.max(np.abs(u - np.diag([-1j, 1j]))) < 1e-15


def test_coupling_unitary_offdiagonal_path():
    # exp(-i t X) = [[cos t, -i sin t], [-i sin t, cos t]] for X = [[0,1],[1,0]]
    x = SystemOperator(np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex))
    for t in (0.3, 1.1, -2.4):
        u = coupling_unitary(x, t).entries
        expected = np.array(
            [[np.cos(t), -1j * np.sin(t)], [-1j * np.sin(t), np.cos(t)]]
        )
        assert np.max(np.abs(u - expected)) < 1e-12


def test_coupling_unitary_is_unitary_and_norm_preserving():
    rng = np.random.default_rng(11)
    for _ in range(20):
        phase = rng.uniform(-10.0, 10.0)
        u = coupling_unitary(sigma_z(), phase)
        assert np.max(np.abs(u.entries.conj().T @ u.entries - np.eye(2))) < 1e-12
        s = PolarizationState(*(rng.normal(size=2) + 1j * rng.normal(size=2)))
        out = u.entries @ s.as_array()
        assert np.linalg.norm(out) == pytest.approx(s.norm(), rel=1e-12)


def test_closed_form_fringe_law():
    pre = preselection_state()
    op = sigma_z()
    for phi in (1e-4, 0.3, 1.2):
        post = postselection_state(phi)
        for theta in np.linspace(-np.pi, np.pi, 181):
            amp = transition_amplitude(post, coupling_unitary(op, theta), pre)
            assert abs(amp) ** 2 == pytest.approx(np.sin(theta + phi) ** 2, abs=1e-12)


def test_transition_amplitude_identity_element():
    ident = OpticalElement(np.eye(2, dtype=complex), unitary_flag=True)
    assert transition_amplitude(basis_h(), ident, basis_h()) == pytest.approx(1.0)
    phi = 0.7
    amp = transition_amplitude(postselection_state(phi), ident, preselection_state())
    assert abs(amp) ** 2 == pytest.approx(np.sin(phi) ** 2, abs=1e-12)


def test_state_rejects_zero_norm():
    with pytest.raises(ValueError):
        PolarizationState(0.0, 0.0)


def test_operator_rejects_non_hermitian():
    with pytest.raises(ValueError):
        SystemOperator(np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex))


def test_operator_rejects_wrong_shape():
    with pytest.raises(ValueError):
        SystemOperator(np.eye(3, dtype=complex))


def test_element_rejects_non_unitary_when_flagged():
    with pytest.raises(ValueError):
        OpticalElement(2.0 * np.eye(2, dtype=complex), unitary_flag=True)
    # same matrix is fine without the flag
    OpticalElement(2.0 * np.eye(2, dtype=complex))
