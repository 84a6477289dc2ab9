"""Spin-arm interferometry and its spatial split-beam dual.

In the usual arrangement a spin precesses in one beam of a two-beam
interferometer and the fringe shift reads out the spin relative phase.
In the dual arrangement the beam pair itself carries the phase: both
beams see a transverse field (different strengths), and a spin analyser
behind each beam reads the relative phase of the two spatial states
|A+> and |A->, whose roles mirror the initial and precessed spin states
under the substitution (precession angle) <-> (field-angle difference).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import matrix_exponential_su2, principal_angle, tensor, wrap_angle
from .errors import OrthogonalStatesError
from .phase import (
    EPS_ORTH,
    InterferenceProfile,
    PhaseResult,
    extract_fringe,
    pancharatnam_phase,
    pure_interference_profile,
)

_X_AXIS = (1.0, 0.0, 0.0)


@dataclass(frozen=True)
class SpinArmSpec:
    """Spin tilted by theta from +z, precessing about z by varphi."""

    theta: float
    varphi: float


def spin_arm_states(spec: SpinArmSpec) -> tuple[np.ndarray, np.ndarray]:
    """Initial and precessed spin states of the single-arm experiment."""
    c, s = np.cos(spec.theta / 2.0), np.sin(spec.theta / 2.0)
    initial = np.array([c, s], dtype=complex)
    final = np.array([np.exp(-1j * spec.varphi / 2.0) * c,
                      np.exp(1j * spec.varphi / 2.0) * s])
    return initial, final


def spin_pancharatnam(spec: SpinArmSpec) -> PhaseResult:
    """Relative phase and visibility of the precessed spin state.

    Closed forms: phase -arctan(cos(theta) tan(varphi/2)) on the
    overlap-tracking branch, visibility
    sqrt(1 - sin^2(theta) sin^2(varphi/2)).  Every call cross-checks the
    closed forms against the overlap of the explicitly constructed
    states.

    Raises:
        OrthogonalStatesError: where the visibility vanishes
            (theta = pi/2 with varphi = pi).
    """
    half = spec.varphi / 2.0
    overlap = complex(np.cos(half) - 1j * np.cos(spec.theta) * np.sin(half))
    if abs(overlap) < EPS_ORTH:
        raise OrthogonalStatesError("initial and precessed spin states orthogonal")
    result = PhaseResult(
        principal_angle(overlap),
        float(np.sqrt(1.0 - (np.sin(spec.theta) * np.sin(half)) ** 2)),
    )
    direct = pancharatnam_phase(*spin_arm_states(spec))
    if (abs(wrap_angle(direct.phase - result.phase)) > 1e-10
            or abs(direct.visibility - result.visibility) > 1e-10):
        raise AssertionError("closed form disagrees with direct state overlap")
    return result


def spin_interference_profile(spec: SpinArmSpec, chis) -> InterferenceProfile:
    """Two-beam fringe |e^{i chi} initial + precessed|^2 by direct arithmetic."""
    initial, final = spin_arm_states(spec)
    return pure_interference_profile(initial, final, chis)


@dataclass(frozen=True)
class DualSetupSpec:
    """Split-beam arrangement: beam-splitter tilt plus per-beam field angles.

    The transmission amplitude is cos(theta/2); varphi0 and varphi1 are
    the x-axis precession angles picked up in beams 0 and 1.
    """

    theta: float
    varphi0: float
    varphi1: float

    @property
    def delta_phi(self) -> float:
        return self.varphi0 - self.varphi1

    @property
    def chi(self) -> float:
        return (self.varphi0 + self.varphi1) / 2.0


def prepare_beam_state(spec: DualSetupSpec) -> np.ndarray:
    """Post-splitter state [cos(theta/2)|0> + sin(theta/2)|1>] x |+z>.

    Four components in (beam x spin) order: the beam index varies
    slowest.
    """
    beam = np.array([np.cos(spec.theta / 2.0), np.sin(spec.theta / 2.0)],
                    dtype=complex)
    return tensor(beam, np.array([1.0, 0.0], dtype=complex))


def apply_arm_fields(psi: np.ndarray, spec: DualSetupSpec) -> np.ndarray:
    """Apply the per-beam x-axis spin rotations to a (beam x spin) state.

    The operator is |0><0| x exp(-i varphi0 sx/2) + |1><1| x
    exp(-i varphi1 sx/2); unitary, so norms are preserved.
    """
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (4,):
        raise ValueError("expected a 4-component (beam x spin) state")
    u0 = matrix_exponential_su2(_X_AXIS, spec.varphi0)
    u1 = matrix_exponential_su2(_X_AXIS, spec.varphi1)
    out = psi.copy()
    out[:2] = u0 @ psi[:2]
    out[2:] = u1 @ psi[2:]
    return out


def spatial_vectors(spec: DualSetupSpec) -> tuple[np.ndarray, np.ndarray]:
    """The beam-pair states |A+> and |A-> whose relative phase is measured.

    |A+-> = e^{-+ i dphi/4} cos(theta/2)|0> + e^{+- i dphi/4}
    sin(theta/2)|1> with dphi the field-angle difference.
    """
    quarter = spec.delta_phi / 4.0
    c, s = np.cos(spec.theta / 2.0), np.sin(spec.theta / 2.0)
    a_plus = np.array([np.exp(-1j * quarter) * c, np.exp(1j * quarter) * s])
    a_minus = np.array([np.exp(1j * quarter) * c, np.exp(-1j * quarter) * s])
    return a_plus, a_minus


def predicted_final_state(spec: DualSetupSpec) -> np.ndarray:
    """Final state rewritten in terms of the beam-pair vectors.

    (1/2)[e^{-i chi/2}|A+> + e^{i chi/2}|A->] x |+z> +
    (1/2)[e^{-i chi/2}|A+> - e^{i chi/2}|A->] x |-z>; agrees with
    apply_arm_fields on the prepared state to floating precision.
    """
    a_plus, a_minus = spatial_vectors(spec)
    early = np.exp(-1j * spec.chi / 2.0) * a_plus
    late = np.exp(1j * spec.chi / 2.0) * a_minus
    plus_z = tensor(0.5 * (early + late), np.array([1.0, 0.0], dtype=complex))
    minus_z = tensor(0.5 * (early - late), np.array([0.0, 1.0], dtype=complex))
    return plus_z + minus_z


def dual_phase_closed_form(spec: DualSetupSpec) -> PhaseResult:
    """Dual relative phase arg<A-|A+> and visibility |<A-|A+>|.

    Same functional form as the spin-arm result with the precession angle
    replaced by the field-angle difference.  Cross-checked against the
    direct two-dimensional inner product on every call.

    Raises:
        OrthogonalStatesError: at theta = pi/2 with delta_phi = pi.
    """
    half = spec.delta_phi / 2.0
    overlap = complex(np.cos(half) - 1j * np.cos(spec.theta) * np.sin(half))
    if abs(overlap) < EPS_ORTH:
        raise OrthogonalStatesError("beam-pair states orthogonal")
    result = PhaseResult(
        principal_angle(overlap),
        float(np.sqrt(1.0 - (np.sin(spec.theta) * np.sin(half)) ** 2)),
    )
    a_plus, a_minus = spatial_vectors(spec)
    direct = pancharatnam_phase(a_minus, a_plus)
    if (abs(wrap_angle(direct.phase - result.phase)) > 1e-10
            or abs(direct.visibility - result.visibility) > 1e-10):
        raise AssertionError("closed form disagrees with direct beam overlap")
    return result


def dual_coincidence_profile(theta: float, delta_phi: float, chis,
                             channel: int = +1) -> InterferenceProfile:
    """Summed analyser fringe in one spin channel, swept in chi.

    For each chi the full final state is built end to end with the field
    angles chi +- delta_phi/2, both beams are projected onto the chosen
    spin channel (+1 or -1), and the two analyser intensities are summed.
    The raw sum is rescaled by 4 so the result follows the common
    2 + 2 V cos(chi - phase) convention of the other profiles.
    """
    if channel not in (+1, -1):
        raise ValueError("channel must be +1 or -1")
    chis = np.asarray(chis, dtype=float)
    spin_slot = 0 if channel == +1 else 1
    intensities = np.empty_like(chis)
    for i, chi in enumerate(chis):
        spec = DualSetupSpec(theta, chi + delta_phi / 2.0, chi - delta_phi / 2.0)
        psi = apply_arm_fields(prepare_beam_state(spec), spec)
        intensities[i] = 4.0 * (abs(psi[spin_slot]) ** 2
                                + abs(psi[2 + spin_slot]) ** 2)
    return InterferenceProfile(chis, intensities, extract_fringe(chis, intensities))
