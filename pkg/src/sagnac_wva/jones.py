"""
Two-level polarization algebra: states, optical elements, weak values.

Everything lives in the |H>, |V> basis as dimensionless complex amplitudes.
The three ingredients of the interferometer readout are built here:

* the 45-degree input state (|H> + |V>)/sqrt(2),
* the analyzer output state (e^{+i phi}|H> - e^{-i phi}|V>)/sqrt(2), and
* the rotation-induced relative-phase unitary exp(-i * theta * A) for the
  polarization-difference observable A = |H><H| - |V><V|.

Sign convention: the analyzer state carries e^{+i phi} on |H> (not e^{-i phi}),
so that the post-selected intensity law is sin^2(theta + phi) and the weak
value of A is +i*cot(phi).  The wave-plate construction in
`postselection_state_via_waveplate` produces the identical state.

All functions are pure; the dataclasses are frozen and treated as immutable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NearOrthogonalPostselection

#: overlaps at or below this magnitude make a weak value numerically undefined
OVERLAP_UNDERFLOW = 1e-300

#: tolerance for the U+U = I check on elements declared unitary
UNITARY_TOL = 1e-12

_HERMITIAN_TOL = 1e-12


@dataclass(frozen=True)
class PolarizationState:
    """Fully polarized state with complex amplitudes on |H> and |V>."""

    h_component: complex
    v_component: complex

    def __post_init__(self):
        n = self.norm()
        if not np.isfinite(n) or n == 0.0:
            raise ValueError("state norm must be finite and strictly positive")

    def norm(self) -> float:
        return float(np.sqrt(abs(self.h_component) ** 2 + abs(self.v_component) ** 2))

    def normalized(self) -> PolarizationState:
        n = self.norm()
        return PolarizationState(self.h_component / n, self.v_component / n)

    def as_array(self) -> np.ndarray:
        return np.array([self.h_component, self.v_component], dtype=complex)


@dataclass(frozen=True)
class SystemOperator:
    """Hermitian observable on the polarization qubit (2x2 complex matrix)."""

    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"operator must be 2x2, got shape {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > _HERMITIAN_TOL:
            raise ValueError("operator must be Hermitian")
        object.__setattr__(self, "entries", m)


@dataclass(frozen=True)
class OpticalElement:
    """Transfer matrix of one polarization optic (2x2 complex)."""

    entries: np.ndarray
    unitary_flag: bool = False

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"element must be 2x2, got shape {m.shape}")
        if self.unitary_flag:
            dev = float(np.max(np.abs(m.conj().T @ m - np.eye(2))))
            if dev > UNITARY_TOL:
                raise ValueError(f"element declared unitary deviates from U+U=I by {dev:.3e}")
        object.__setattr__(self, "entries", m)


@dataclass(frozen=True)
class WeakValue:
    """Complex weak value <post|A|pre>/<post|pre>."""

    value: complex


def basis_h() -> PolarizationState:
    return PolarizationState(1.0 + 0.0j, 0.0 + 0.0j)


def basis_v() -> PolarizationState:
    return PolarizationState(0.0 + 0.0j, 1.0 + 0.0j)


def sigma_z() -> SystemOperator:
    """|H><H| - |V><V|, the observable the rotation couples to."""
    return SystemOperator(np.diag([1.0 + 0.0j, -1.0 + 0.0j]))


def preselection_state() -> PolarizationState:
    """Equal superposition (|H> + |V>)/sqrt(2) set by the input polarizer."""
    s = 1.0 / np.sqrt(2.0)
    return PolarizationState(s + 0.0j, s + 0.0j)


def postselection_state(phi: float) -> PolarizationState:
    """Analyzer output state for offset angle phi.

    Parameters
    ----------
    phi : float
        Offset of the analyzer arm from the dark port, in radians.

    Returns
    -------
    PolarizationState
        (e^{+i phi}|H> - e^{-i phi}|V>)/sqrt(2), normalized.  The relative
        phase sign is chosen so the post-selected fringe law downstream is
        sin^2(theta + phi); see the module docstring.
    """
    s = 1.0 / np.sqrt(2.0)
    return PolarizationState(s * np.exp(1j * phi), -s * np.exp(-1j * phi))


def qwp_matrix() -> OpticalElement:
    """Quarter-wave plate Jones matrix [[1, -i], [-i, 1]]/sqrt(2)."""
    m = np.array([[1.0, -1.0j], [-1.0j, 1.0]], dtype=complex) / np.sqrt(2.0)
    return OpticalElement(m, unitary_flag=True)


def postselection_state_via_waveplate(phi: float) -> PolarizationState:
    """Build the analyzer state as wave plate times linear-polarizer vector.

    The plate is applied to the unit vector at angle -phi - pi/4; it
    contributes a global phase e^{i pi/4} which is stripped so the components
    come out exactly as e^{+-i phi}/sqrt(2), matching `postselection_state`.
    """
    analyzer = np.array(
        [np.cos(-phi - np.pi / 4.0), np.sin(-phi - np.pi / 4.0)], dtype=complex
    )
    out = qwp_matrix().entries @ analyzer
    out = out * np.exp(-1j * np.pi / 4.0)
    return PolarizationState(out[0], out[1])


def inner_product(bra: PolarizationState, ket: PolarizationState) -> complex:
    """<bra|ket> with the physics convention (bra side conjugated)."""
    return complex(
        np.conj(bra.h_component) * ket.h_component
        + np.conj(bra.v_component) * ket.v_component
    )


def weak_value(
    op: SystemOperator, pre: PolarizationState, post: PolarizationState
) -> WeakValue:
    """Weak value <post|op|pre>/<post|pre>.

    Raises
    ------
    NearOrthogonalPostselection
        If |<post|pre>| is at or below OVERLAP_UNDERFLOW, where the quotient
        stops being numerically meaningful.
    """
    overlap = inner_product(post, pre)
    if abs(overlap) <= OVERLAP_UNDERFLOW:
        raise NearOrthogonalPostselection(
            f"|<post|pre>| = {abs(overlap):.3e} is at or below the underflow "
            f"threshold {OVERLAP_UNDERFLOW:.0e}"
        )
    acted = op.entries @ pre.as_array()
    numer = complex(np.conj(post.as_array()) @ acted)
    return WeakValue(numer / overlap)


def coupling_unitary(op: SystemOperator, total_phase: float) -> OpticalElement:
    """exp(-i * total_phase * op) as an optical element.

    Diagonal operators take the exact elementwise-exponential path; general
    Hermitian operators go through an eigendecomposition.  Both paths agree
    to rounding for diagonal input.
    """
    m = op.entries
    if m[0, 1] == 0.0 and m[1, 0] == 0.0:
        u = np.diag(np.exp(-1j * total_phase * m.diagonal()))
    else:
        evals, evecs = np.linalg.eigh(m)
        u = (evecs * np.exp(-1j * total_phase * evals)) @ evecs.conj().T
    return OpticalElement(u, unitary_flag=True)


def transition_amplitude(
    post: PolarizationState, element: OpticalElement, pre: PolarizationState
) -> complex:
    """<post| element |pre>."""
    return complex(np.conj(post.as_array()) @ (element.entries @ pre.as_array()))
