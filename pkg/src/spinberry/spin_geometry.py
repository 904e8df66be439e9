"""Single-spin geometric phases and the Bell-coefficient parametrisation.

A spin adiabatically precessing about the z-axis at cone angle θ sweeps a
solid angle 2π(1-cosθ) per cycle; the upper/lower instantaneous eigenstates
acquire geometric phases π(1∓cosθ).  For a Bell-like state a|↑↓> - b|↓↑>
whose coefficient magnitudes are tied to the same deviation angle through
|a| = √2 cos²(nθ/4), |b| = √2 sin²(nθ/4) (odd n), the concurrence 2|a||b|
equals sin²(θ/2) = |Φ_B|/2π at n = 1, which is the identity this module
exists to expose and cross-check numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

TWO_PI = 2.0 * math.pi


def _check_theta(theta: float) -> float:
    theta = float(theta)
    if not -1e-12 <= theta <= math.pi + 1e-12:
        raise DomainError(f"theta = {theta} outside [0, pi]")
    return min(max(theta, 0.0), math.pi)


@dataclass(frozen=True)
class BlochDirection:
    """Direction on the Bloch sphere: polar angle theta in [0, pi], azimuth
    phi normalized into [0, 2*pi)."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "theta", _check_theta(self.theta))
        object.__setattr__(self, "phi", float(self.phi) % TWO_PI)


@dataclass(frozen=True)
class RotationSchedule:
    """Uniform discretization of one azimuthal precession cycle.

    ``omega0`` is the angular velocity; the period ``tau`` is derived as
    2*pi/omega0 so tau*omega0 == 2*pi holds by construction.  ``steps`` is
    the number of loop segments.  The geometric phase depends only on
    ``steps``; omega0 fixes the (irrelevant here) time parametrisation.
    """

    omega0: float
    steps: int

    def __post_init__(self):
        if self.omega0 <= 0:
            raise DomainError(f"omega0 must be positive, got {self.omega0}")
        if self.steps < 2:
            raise DomainError(f"steps must be >= 2, got {self.steps}")

    @property
    def tau(self) -> float:
        return TWO_PI / self.omega0


@dataclass(frozen=True)
class QubitState:
    """Normalized two-component spinor in the sigma_z basis."""

    amp_up: complex
    amp_down: complex

    def __post_init__(self):
        n2 = abs(self.amp_up) ** 2 + abs(self.amp_down) ** 2
        if abs(n2 - 1.0) > 1e-12:
            raise DomainError(f"spinor norm² = {n2} deviates from 1 beyond 1e-12")

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.amp_up, self.amp_down], dtype=np.complex128)

    def overlap(self, other: "QubitState") -> complex:
        return complex(np.vdot(self.vector, other.vector))


@dataclass(frozen=True)
class BellCoefficients:
    """Unnormalized Bell coefficients (|a|, |b|) = √2 (cos²(nθ/4), sin²(nθ/4)).

    |a|² + |b|² = 1 only at θ = π, so the normalized pair is exposed
    separately for the probability interpretation.
    """

    a_mag: float
    b_mag: float
    n: int
    theta: float

    @property
    def normalized(self) -> tuple:
        norm = math.hypot(self.a_mag, self.b_mag)
        return self.a_mag / norm, self.b_mag / norm

    @property
    def concurrence(self) -> float:
        """2|a||b| of the unnormalized pair; equals sin²(θ/2) for n = 1."""
        return 2.0 * self.a_mag * self.b_mag


def bloch_eigenstates(direction: BlochDirection) -> tuple:
    """Instantaneous spin-up/down eigenstates along a Bloch direction.

    up   = (cos θ/2, sin θ/2 e^{iφ})
    down = (sin θ/2, -cos θ/2 e^{iφ})

    The lower state carries the minus sign of the standard orthonormal
    convention, so the pair is always orthonormal.
    """
    half = direction.theta / 2.0
    phase = complex(math.cos(direction.phi), math.sin(direction.phi))
    up = QubitState(math.cos(half), math.sin(half) * phase)
    down = QubitState(math.sin(half), -math.cos(half) * phase)
    return up, down


def berry_phase_analytic(theta: float, branch: str = "up") -> float:
    """Geometric phase for one precession cycle at cone angle theta:
    π(1-cosθ) for the up branch, π(1+cosθ) for the down branch."""
    theta = _check_theta(theta)
    if branch == "up":
        return math.pi * (1.0 - math.cos(theta))
    if branch == "down":
        return math.pi * (1.0 + math.cos(theta))
    raise DomainError(f"branch must be 'up' or 'down', got {branch!r}")


def cyclic_berry_phase_numeric(theta: float, schedule: RotationSchedule) -> float:
    """Accumulated Pancharatnam phase of the discretized precession loop.

    The upper eigenstate is sampled at azimuths φ_k = 2πk/steps and the
    per-segment overlap phases arg<ψ_k|ψ_{k+1}> are summed along the closed
    path (continuous unwrapping: each segment phase is small, so the sum is
    the total accumulated phase, not its mod-2π reduction; θ = π gives 2π,
    not 0).  Sign convention matches the positive analytic value π(1-cosθ)
    for forward traversal.  Converges at second order in 1/steps.
    """
    theta = _check_theta(theta)
    steps = schedule.steps
    k = np.arange(steps + 1)
    phi = TWO_PI * k / steps
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    spinors = np.empty((steps + 1, 2), dtype=np.complex128)
    spinors[:, 0] = c
    spinors[:, 1] = s * np.exp(1j * phi)
    spinors[-1] = spinors[0]  # close the loop exactly
    overlaps = np.sum(np.conj(spinors[:-1]) * spinors[1:], axis=1)
    return float(np.sum(np.angle(overlaps)))


def bell_coefficients(theta: float, n: int = 1) -> BellCoefficients:
    """Bell coefficient magnitudes at deviation angle theta for odd n.

    n = 1 is the physical branch (deviation capped at spin reversal, θ = π);
    other odd n are kept for probing the constraint family.
    """
    theta = _check_theta(theta)
    n = int(n)
    if n < 1 or n % 2 == 0:
        raise DomainError(f"n must be a positive odd integer, got {n}")
    quarter = n * theta / 4.0
    root2 = math.sqrt(2.0)
    return BellCoefficients(
        a_mag=root2 * math.cos(quarter) ** 2,
        b_mag=root2 * math.sin(quarter) ** 2,
        n=n,
        theta=theta,
    )


def concurrence_from_theta(theta: float) -> float:
    """Concurrence of the deviation-angle Bell state: sin²(θ/2)."""
    theta = _check_theta(theta)
    return (1.0 - math.cos(theta)) / 2.0


def concurrence_from_berry(phi_b: float) -> float:
    """Concurrence from a geometric phase: |Φ_B| / 2π, valid for |Φ_B| ≤ 2π."""
    phi_b = float(phi_b)
    if abs(phi_b) > TWO_PI * (1.0 + 1e-9):
        raise DomainError(f"|phi_b| = {abs(phi_b)} exceeds 2*pi")
    return min(abs(phi_b) / TWO_PI, 1.0)
