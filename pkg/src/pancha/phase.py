"""Relative phase between quantum states and two-beam interference.

The relative phase between nonorthogonal states is the fringe-maximum
shift arg<A|B> observed when one beam gets a variable U(1) shift chi:

    I(chi) = |e^{i chi}|A> + |B>|^2 = 2 + 2 |<A|B>| cos(chi - arg<A|B>)

and it generalizes to a unitarily evolved mixed state as arg Tr(U rho)
with fringe contrast |Tr(U rho)|.  Interference profiles here are always
computed by direct state arithmetic, so the closed forms above stay
testable claims rather than baked-in assumptions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import inner_product, principal_angle
from .errors import IllConditionedError, OrthogonalStatesError, VanishingTraceError

#: visibility below which a phase is declared undefined (arg of a
#: near-zero complex number carries no information)
EPS_ORTH = 1e-9


@dataclass(frozen=True)
class PhaseResult:
    """A relative phase with its fringe visibility.

    ``phase`` is on the principal branch (-pi, pi].  When ``defined`` is
    False the visibility fell below EPS_ORTH and ``phase`` is NaN; it
    must not be consumed.
    """

    phase: float
    visibility: float
    defined: bool = True

    @classmethod
    def from_overlap(cls, z: complex) -> "PhaseResult":
        vis = abs(z)
        if vis < EPS_ORTH:
            return cls(phase=float("nan"), visibility=vis, defined=False)
        return cls(phase=principal_angle(z), visibility=vis)


@dataclass(frozen=True)
class InterferenceProfile:
    """Sampled intensity-versus-chi record with the fitted readout."""

    chis: np.ndarray
    intensities: np.ndarray
    extracted: PhaseResult = field(repr=False)


def pancharatnam_phase(a: np.ndarray, b: np.ndarray) -> PhaseResult:
    """Relative phase arg<a|b> and visibility |<a|b>|.

    Reduces to alpha for b = e^{i alpha} a.

    Raises:
        OrthogonalStatesError: if |<a|b>| < EPS_ORTH (phase undefined).
    """
    overlap = inner_product(a, b)
    if abs(overlap) < EPS_ORTH:
        raise OrthogonalStatesError(
            f"overlap modulus {abs(overlap):.3e} below {EPS_ORTH:.0e}"
        )
    return PhaseResult.from_overlap(overlap)


def extract_fringe(chis, intensities) -> PhaseResult:
    """fit_fringe, degrading to an undefined result when the sample grid
    cannot support the three-parameter fit."""
    try:
        return fit_fringe(chis, intensities)
    except IllConditionedError:
        return PhaseResult(float("nan"), 0.0, defined=False)


def pure_interference_profile(a, b, chis) -> InterferenceProfile:
    """Two-beam profile |e^{i chi} a + b|^2 sampled by direct arithmetic.

    Orthogonal states are allowed: the profile is flat and the extracted
    result is marked undefined.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    chis = np.asarray(chis, dtype=float)
    superposed = np.exp(1j * chis)[:, None] * a[None, :] + b[None, :]
    intensities = np.einsum("ij,ij->i", superposed.conj(), superposed).real
    return InterferenceProfile(chis, intensities, extract_fringe(chis, intensities))


def mixed_phase(rho: np.ndarray, u: np.ndarray) -> PhaseResult:
    """Mixed-state relative phase arg Tr(U rho), visibility |Tr(U rho)|.

    For rank-1 rho = |A><A| this agrees with pancharatnam_phase(|A>, U|A>).

    Raises:
        VanishingTraceError: if |Tr(U rho)| < EPS_ORTH.
    """
    rho = np.asarray(rho, dtype=complex)
    u = np.asarray(u, dtype=complex)
    if rho.shape != u.shape:
        raise ValueError(f"dimension mismatch: {rho.shape} vs {u.shape}")
    t = complex(np.trace(u @ rho))
    if abs(t) < EPS_ORTH:
        raise VanishingTraceError(f"|Tr(U rho)| = {abs(t):.3e} below {EPS_ORTH:.0e}")
    return PhaseResult.from_overlap(t)


def mixed_interference_profile(rho, u, chis) -> InterferenceProfile:
    """Mixed-state profile, computed by two independent routes.

    Route one eigendecomposes rho and adds the weighted pure-state
    profiles of each eigenvector against its image under U; route two is
    the closed form 2 + 2 Re(e^{i chi} conj(Tr(U rho))).  The two must
    agree pointwise within 1e-9 or the call fails, so every invocation
    doubles as an oracle check.  The returned samples are the simulated
    (eigen-route) ones.
    """
    rho = np.asarray(rho, dtype=complex)
    u = np.asarray(u, dtype=complex)
    chis = np.asarray(chis, dtype=float)

    weights, basis = np.linalg.eigh(rho)
    if not np.isfinite(basis).all():
        raise np.linalg.LinAlgError("eigendecomposition of rho failed")
    phases = np.exp(1j * chis)
    simulated = np.zeros_like(chis)
    for k in range(rho.shape[0]):
        vec = basis[:, k]
        superposed = phases[:, None] * vec[None, :] + (u @ vec)[None, :]
        simulated += weights[k] * np.einsum(
            "ij,ij->i", superposed.conj(), superposed
        ).real

    t = complex(np.trace(u @ rho))
    closed = 2.0 + 2.0 * np.real(phases * np.conj(t))
    mismatch = np.abs(simulated - closed).max()
    if mismatch > 1e-9:
        raise AssertionError(
            f"eigen-route and trace-route profiles disagree by {mismatch:.3e}"
        )
    return InterferenceProfile(chis, simulated, extract_fringe(chis, simulated))


def fit_fringe(chis, intensities) -> PhaseResult:
    """Least-squares harmonic fit I(chi) = c0 + c1 cos(chi) + c2 sin(chi).

    The extracted phase atan2(c2, c1) is the fringe-maximum location and
    the visibility is sqrt(c1^2 + c2^2) / c0, emulating an experimental
    fringe readout.  Needs at least three samples with distinct chi
    spanning at least pi.

    Raises:
        IllConditionedError: if the design matrix is rank deficient.
    """
    chis = np.asarray(chis, dtype=float)
    intensities = np.asarray(intensities, dtype=float)
    if chis.shape != intensities.shape or chis.ndim != 1:
        raise ValueError("chis and intensities must be 1-d arrays of equal length")
    if np.unique(chis).size < 3:
        raise IllConditionedError("need at least 3 distinct chi samples")

    design = np.column_stack([np.ones_like(chis), np.cos(chis), np.sin(chis)])
    coeffs, _, rank, _ = np.linalg.lstsq(design, intensities, rcond=None)
    if rank < 3:
        raise IllConditionedError(f"design matrix rank {rank} < 3")
    c0, c1, c2 = coeffs
    amplitude = np.hypot(c1, c2)
    if c0 <= EPS_ORTH or amplitude / c0 < EPS_ORTH:
        return PhaseResult(float("nan"), 0.0 if c0 <= EPS_ORTH else amplitude / c0,
                           defined=False)
    return PhaseResult(float(np.arctan2(c2, c1)), float(amplitude / c0))
