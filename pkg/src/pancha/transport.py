"""Discretized geometric phase along state-space paths.

A path of pure states carries a phase given by the argument of the
ordered chain of adjacent overlaps, closed with the endpoint overlap.
That chain phase is a property of the projector path alone (rephasing any
interior state leaves it untouched) and splits the endpoint Pancharatnam
phase into a geometric piece plus the accumulated local (dynamical)
phase.  This module provides the chain, parallel lifts that zero the
local piece, an auxiliary-evolution construction that cancels it without
touching the lift, the spin-1/2 precession worked example, and the
signed solid angle swept by a path closed with the shortest geodesic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    SIGMA_X,
    SIGMA_Z,
    bloch_to_state,
    matrix_exponential_su2,
    principal_angle,
    wrap_angle,
)
from .errors import (
    AntipodalEndpointsError,
    BranchAmbiguityError,
    DegenerateTriangleError,
    OrthogonalStatesError,
    VanishingEndpointOverlapError,
)
from .geometry import SphericalTriangle, girard_signed_area, mixed_solid_angle_phase
from .phase import EPS_ORTH

_NORTH = np.array([0.0, 0.0, 1.0])


@dataclass(frozen=True)
class DiscretePath:
    """Time-sampled lift of a state-space path.

    ``states`` holds one unit vector per sample time.  ``generators``
    optionally holds the hermitian generator at each sample (in radians
    per unit time), for paths produced by Schroedinger evolution.
    """

    times: np.ndarray
    states: np.ndarray
    generators: np.ndarray | None = None

    def __post_init__(self):
        object.__setattr__(self, "times", np.asarray(self.times, dtype=float))
        object.__setattr__(self, "states", np.asarray(self.states, dtype=complex))

    @property
    def n_samples(self) -> int:
        return self.states.shape[0]

    def validate(self) -> "DiscretePath":
        if self.times.ndim != 1 or self.states.ndim != 2:
            raise ValueError("times must be 1-d and states 2-d")
        if self.times.size != self.states.shape[0] or self.times.size < 2:
            raise ValueError("need one state per time and at least two samples")
        if (np.diff(self.times) <= 0.0).any():
            raise ValueError("times must be strictly increasing")
        norms = np.linalg.norm(self.states, axis=1)
        if np.abs(norms - 1.0).max() > 1e-9:
            raise ValueError("path states must be unit vectors")
        if self.generators is not None:
            gen = np.asarray(self.generators, dtype=complex)
            if gen.shape != (self.n_samples, *self.states.shape[1:],
                             self.states.shape[1]):
                raise ValueError("need one generator matrix per sample")
        return self


def _adjacent_overlaps(path: DiscretePath) -> np.ndarray:
    """<A_{j+1}|A_j> for every link, failing on a vanishing one."""
    links = np.einsum("ij,ij->i", path.states[1:].conj(), path.states[:-1])
    small = np.abs(links) < EPS_ORTH
    if small.any():
        j = int(np.argmax(small))
        raise OrthogonalStatesError(f"adjacent overlap vanishes at link {j}")
    return links

def _endpoint_overlap(path: DiscretePath) -> complex:
    overlap = complex(np.vdot(path.states[0], path.states[-1]))
    if abs(overlap) < EPS_ORTH:
        raise VanishingEndpointOverlapError("endpoint states are orthogonal")
    return overlap


def chain_phase(path: DiscretePath) -> float:
    """Geometric phase of the path from the ordered overlap chain.

    Returns arg(<A_0|A_t> <A_t|A_{t-dt}> ... <A_dt|A_0>) wrapped to the
    principal branch.  Independent of any rephasing of individual states,
    so it depends only on the projector path.

    Raises:
        OrthogonalStatesError: naming the first vanishing link.
        VanishingEndpointOverlapError: if the endpoints are orthogonal.
    """
    path.validate()
    links = _adjacent_overlaps(path)
    total = principal_angle(_endpoint_overlap(path)) + np.angle(links).sum()
    return wrap_angle(total)


def is_parallel_lift(path: DiscretePath, tol: float) -> bool:
    """True iff every adjacent overlap is real positive within ``tol``."""
    path.validate()
    links = np.einsum("ij,ij->i", path.states[1:].conj(), path.states[:-1])
    if (np.abs(links) < EPS_ORTH).any():
        return False
    return bool(np.abs(np.angle(links)).max() <= tol)


def make_parallel_lift(path: DiscretePath) -> DiscretePath:
    """Rephase each state in sequence so all adjacent overlaps are real positive.

    Preserves the projector path exactly, and the resulting endpoint
    phase arg<A_0|A_t> equals the chain phase of the input.  Generators
    are dropped: they generate the input lift, not the rephased one.
    """
    path.validate()
    states = path.states.copy()
    for j in range(1, path.n_samples):
        overlap = np.vdot(states[j - 1], states[j])
        if abs(overlap) < EPS_ORTH:
            raise OrthogonalStatesError(f"adjacent overlap vanishes at link {j - 1}")
        states[j] = states[j] * np.exp(-1j * np.angle(overlap))
    return DiscretePath(path.times, states)


def dynamical_phase(path: DiscretePath) -> float:
    """Accumulated local phase along the lift.

    With generators present this is -integral(<A_t|H(t)|A_t>) dt by the
    trapezoidal rule; otherwise it is the per-link sum of
    arg<A_j|A_{j+1}>, which has the same continuum limit.  Unlike the
    chain phase it does depend on the lift: a parallel lift gives zero.
    """
    path.validate()
    if path.generators is not None:
        gen = np.asarray(path.generators, dtype=complex)
        energies = np.einsum("ij,ijk,ik->i", path.states.conj(), gen,
                             path.states).real
        return float(-np.trapezoid(energies, path.times))
    links = np.einsum("ij,ij->i", path.states[:-1].conj(), path.states[1:])
    if (np.abs(links) < EPS_ORTH).any():
        raise OrthogonalStatesError("adjacent overlap vanishes")
    return float(np.angle(links).sum())


def pancharatnam_vs_auxiliary(path: DiscretePath) -> float:
    """Endpoint phase against an auxiliary evolution that cancels the local phase.

    The auxiliary path multiplies the start state by e^{i gamma(t)} with
    gamma the running dynamical phase, so the relative phase of the two
    endpoints, arg<A_0|A_t> - gamma(t), reproduces the chain phase up to
    discretization error.
    """
    path.validate()
    gamma = dynamical_phase(path)
    return wrap_angle(principal_angle(_endpoint_overlap(path)) - gamma)


@dataclass(frozen=True)
class PrecessionSpec:
    """Spin-1/2 precession about the tilted axis (sin(theta), 0, cos(theta)).

    The generator has unit level splitting, so the precession angle phi
    doubles as the duration.  ``r`` is the Bloch radius used by the
    mixed-state variant.
    """

    theta: float
    phi: float
    r: float = 1.0


def precession_hamiltonian(theta: float) -> np.ndarray:
    """Generator (sin(theta) sx + cos(theta) sz) / 2 of the precession."""
    return 0.5 * (np.sin(theta) * SIGMA_X + np.cos(theta) * SIGMA_Z)


def auxiliary_hamiltonian(spec: PrecessionSpec) -> np.ndarray:
    """Generator (cos(theta)/2) sz of the phase-cancelling auxiliary evolution.

    Acting on the +z start state it reproduces the running local phase of
    the precession, which is what makes the relative phase of the two
    evolutions purely geometric.
    """
    return 0.5 * np.cos(spec.theta) * SIGMA_Z


def precession_path(spec: PrecessionSpec, n: int = 4096) -> DiscretePath:
    """Precession lift e^{-iHt}|+z> sampled at n equal steps (n+1 states)."""
    if n < 1:
        raise ValueError("need at least one subdivision")
    times = np.linspace(0.0, spec.phi, n + 1)
    half = times / 2.0
    states = np.column_stack([
        np.cos(half) - 1j * np.sin(half) * np.cos(spec.theta),
        -1j * np.sin(half) * np.sin(spec.theta),
    ])
    generators = np.broadcast_to(
        precession_hamiltonian(spec.theta), (n + 1, 2, 2)
    ).copy()
    return DiscretePath(times, states, generators)


def precession_comparison_unitary(spec: PrecessionSpec) -> np.ndarray:
    """Net relative evolution: inverse auxiliary then precession."""
    undo_aux = matrix_exponential_su2(
        (0.0, 0.0, 1.0), -spec.phi * np.cos(spec.theta)
    )
    precess = matrix_exponential_su2(
        (np.sin(spec.theta), 0.0, np.cos(spec.theta)), spec.phi
    )
    return undo_aux @ precess


def precession_phase_simulated(spec: PrecessionSpec) -> float:
    """Relative phase of the precessed +z state against the auxiliary path,
    from the matrix element of the net evolution."""
    overlap = complex(precession_comparison_unitary(spec)[0, 0])
    if abs(overlap) < EPS_ORTH:
        raise OrthogonalStatesError("comparison overlap vanishes")
    return principal_angle(overlap)


def precession_phase_closed_form(spec: PrecessionSpec) -> float:
    """Closed-form noncyclic geometric phase of the precession.

    Returns -arctan(cos(theta) tan(phi/2)) + (phi/2) cos(theta), wrapped
    to the principal branch, with the arctan taken on the branch that is
    continuous in phi at 0 and follows the overlap argument through the
    tangent poles.  Equals minus half the solid angle enclosed by the
    precession arc and its closing geodesic.

    Raises:
        BranchAmbiguityError: for |phi| >= 2*pi, outside the single-turn
            branch.
    """
    if abs(spec.phi) >= 2.0 * np.pi:
        raise BranchAmbiguityError("|phi| >= 2*pi is outside the single-turn branch")
    half = spec.phi / 2.0
    cos_t = np.cos(spec.theta)
    arc = np.arctan2(-cos_t * np.sin(half), np.cos(half))
    return wrap_angle(arc + half * cos_t)


def _unsigned_angles(t1: np.ndarray, t2: np.ndarray) -> np.ndarray:
    """Rowwise angle between tangent vectors (scale invariant, so the
    tangents need not be normalized)."""
    sines = np.linalg.norm(np.cross(t1, t2), axis=1)
    cosines = np.einsum("ij,ij->i", t1, t2)
    return np.arctan2(sines, cosines)


def _segment_areas(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Signed area each arc u[j] -> v[j] sweeps against the north pole.

    This is the exact per-segment value of the line integral whose
    integrand is the azimuth differential weighted by (1 - cos(polar
    angle)): the spherical excess of the triangle (north, u, v), signed
    by orientation.  Segments with an endpoint at the north pole run
    along meridians and sweep nothing.
    """
    dots = np.einsum("ij,ij->i", u, v)
    crosses = np.cross(u, v)
    cross_norms = np.linalg.norm(crosses, axis=1)

    collapsed = cross_norms < 1e-13
    if (collapsed & (dots < 0.0)).any():
        raise DegenerateTriangleError("adjacent path points are antipodal")
    u_on_axis = np.hypot(u[:, 0], u[:, 1]) < 1e-13
    v_on_axis = np.hypot(v[:, 0], v[:, 1]) < 1e-13
    if ((u_on_axis & (u[:, 2] < 0.0)) | (v_on_axis & (v[:, 2] < 0.0))).any():
        raise DegenerateTriangleError(
            "path touches the south pole, where the azimuth chart is singular"
        )
    at_pole = u_on_axis | v_on_axis

    north = np.broadcast_to(_NORTH, u.shape)
    angle_n = _unsigned_angles(u - u[:, 2:3] * north, v - v[:, 2:3] * north)
    angle_u = _unsigned_angles(v - dots[:, None] * u, north - u[:, 2:3] * u)
    angle_v = _unsigned_angles(north - v[:, 2:3] * v, u - dots[:, None] * v)
    excess = angle_n + angle_u + angle_v - np.pi
    orientation = np.where(crosses[:, 2] >= 0.0, 1.0, -1.0)
    areas = orientation * excess
    areas[collapsed | at_pole] = 0.0
    return areas


def geodesic_closure_solid_angle(path: DiscretePath) -> float:
    """Signed solid angle enclosed by a qubit path plus its closing geodesic.

    The Bloch-sphere trace of the path is closed with the shortest
    geodesic between its endpoints; the enclosed area is accumulated as a
    line integral, segment by segment, each segment contributing the
    exact signed area it sweeps relative to the north pole.  The chain
    phase of the path converges to minus half this angle.

    Raises:
        AntipodalEndpointsError: if the endpoints are antipodal, leaving
            the shortest closing geodesic ambiguous.
    """
    path.validate()
    if path.states.shape[1] != 2:
        raise ValueError("solid angles require qubit paths")
    cross_term = path.states.conj()[:, 0] * path.states[:, 1]
    zs = np.abs(path.states[:, 0]) ** 2 - np.abs(path.states[:, 1]) ** 2
    vecs = np.column_stack([2.0 * cross_term.real, 2.0 * cross_term.imag, zs])
    vecs /= np.linalg.norm(vecs, axis=1)[:, None]

    first, last = vecs[0], vecs[-1]
    if (np.linalg.norm(np.cross(first, last)) < 1e-8
            and np.dot(first, last) < 0.0):
        raise AntipodalEndpointsError("closing geodesic undefined for antipodal ends")

    starts = np.vstack([vecs[:-1], last[None, :]])
    ends = np.vstack([vecs[1:], first[None, :]])
    return float(_segment_areas(starts, ends).sum())


def mixed_noncyclic_phase(spec: PrecessionSpec) -> float:
    """Mixed-state noncyclic phase of the precession at Bloch radius r.

    The +z and -z eigenstates acquire opposite halves of the geodesically
    closed solid angle, so the weighted overlap sum collapses to the
    qubit closed form evaluated at that angle.  Agrees with
    arg Tr[(auxiliary-relative evolution) rho] for rho of radius r about z.

    Raises:
        DegenerateSpectrumError: for r = 0.
        BranchAmbiguityError: outside the single-turn branch.
    """
    omega_gc = -2.0 * precession_phase_closed_form(spec)
    return mixed_solid_angle_phase(spec.r, omega_gc)


def sample_triangle_path(triangle: SphericalTriangle, n: int = 4096) -> DiscretePath:
    """Closed path tracing the triangle's geodesic sides at n total steps.

    States are transported by fractional geodesic rotations, so the final
    state is the loop holonomy applied to the first.
    """
    per_side = max(1, n // 3)
    points = [triangle.a, triangle.b, triangle.c, triangle.a]
    states = [bloch_to_state(triangle.a)]
    for p, q in zip(points[:-1], points[1:]):
        u, v = p.unit_vector(), q.unit_vector()
        cross = np.cross(u, v)
        sine = np.linalg.norm(cross)
        if sine < 1e-13:
            states.extend([states[-1]] * per_side)
            continue
        axis = cross / sine
        angle = np.arctan2(sine, float(np.dot(u, v)))
        segment_start = states[-1]
        for s in range(1, per_side + 1):
            rot = matrix_exponential_su2(axis, angle * s / per_side)
            states.append(rot @ segment_start)
    times = np.linspace(0.0, 1.0, len(states))
    return DiscretePath(times, np.array(states))
