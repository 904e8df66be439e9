"""Strong-coupling spin-chain mapping of the repulsive chain model.

At half filling and large repulsion the two-electron hopping model reduces to
an antiferromagnetic exchange chain with J = 4t²/U.  The spin-spin correlator
defines a deviation angle via <Sz_i Sz_j> = (1/4)cosθ, and matching the
single-particle kinetic energy -2t·cos(k0)·<n> (with <n> = 1/2 per species)
to the exchange energy per site J·(3/4)·cosθ turns a scattering momentum k0
into that angle.  The predicted concurrence of the post-collision spin state
is then (1 + |cosθ|)/2, i.e. the generalized geometric phase π(1 + |cosθ|)
divided by 2π.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class HeisenbergParams:
    """Exchange coupling of the effective spin chain."""

    coupling_j: float

    def __post_init__(self):
        if self.coupling_j <= 0:
            raise DomainError(f"coupling_j must be positive, got {self.coupling_j}")


def j_coupling(t: float, u: float) -> HeisenbergParams:
    """Effective exchange J = 4t²/U; undefined at U = 0."""
    if t <= 0:
        raise DomainError(f"hopping t must be positive, got {t}")
    if u <= 0:
        raise DomainError(f"onsite U must be positive for the mapping, got {u}")
    return HeisenbergParams(4.0 * t * t / u)


def theta_from_correlator(czz: float) -> float:
    """Deviation angle from the spin correlator: θ = arccos(4·<Sz_i Sz_j>).

    The spin-1/2 chain bounds the correlator by |czz| ≤ 1/4.
    """
    czz = float(czz)
    if abs(czz) > 0.25 + 1e-12:
        raise DomainError(f"|czz| = {abs(czz)} exceeds the spin-1/2 bound 1/4")
    return math.acos(min(max(4.0 * czz, -1.0), 1.0))


def heisenberg_energy_per_site(params: HeisenbergParams, theta: float) -> float:
    """Exchange energy per site at deviation angle theta: J·(3/4)·cosθ."""
    return params.coupling_j * 0.75 * math.cos(theta)


def theta_from_k0(t: float, u: float, k0: float) -> float:
    """Deviation angle matching kinetic and exchange energies.

    Solves t·cos(k0) = (4t²/U)·(3/4)·cosθ, i.e. cosθ = U·cos(k0)/(3t);
    for t = U this is cosθ = cos(k0)/3.  Raises when the right-hand side
    leaves [-1, 1] (mapping breakdown).
    """
    if t <= 0 or u <= 0:
        raise DomainError(f"t and U must be positive, got t={t}, U={u}")
    rhs = u * math.cos(k0) / (3.0 * t)
    if abs(rhs) > 1.0 + 1e-12:
        raise DomainError(
            f"cos(theta) = {rhs:.6g} outside [-1, 1]: energy matching breaks "
            f"down at k0={k0:.6g} for t={t}, U={u}"
        )
    return math.acos(min(max(rhs, -1.0), 1.0))


def generalized_berry_phase(theta: float) -> float:
    """Geometric phase covering both flip and non-flip channels: π(1+|cosθ|)."""
    return math.pi * (1.0 + abs(math.cos(theta)))


def predict_concurrence(theta: float) -> float:
    """Concurrence predicted from the deviation angle: (1+|cosθ|)/2.

    Computed as generalized_berry_phase(theta)/2π so the two expressions are
    identical to the last bit; symmetric about θ = π/2 where it is minimized
    at exactly 1/2, and exactly 1 at θ ∈ {0, π}.
    """
    return generalized_berry_phase(theta) / (2.0 * math.pi)


def concurrence_vs_k0(t: float, u: float, k0: float) -> dict:
    """One momentum-table row: deviation angle, geometric phase, concurrence.

    At k0 exactly 0 or π the flip and non-flip amplitudes coincide and the
    concurrence is 1 (the deviation angle is reported as 0/π there); at any
    other k0 the energy-matching angle is used, which makes the k0 → 0 limit
    discontinuous (2/3 vs 1) by design of the two regimes.
    """
    if k0 in (0.0, math.pi):
        theta = 0.0 if k0 == 0.0 else math.pi
        note = "amplitude-coincidence branch"
    else:
        theta = theta_from_k0(t, u, k0)
        note = ""
    phi_b = generalized_berry_phase(theta)
    return {
        "k0": float(k0),
        "theta": theta,
        "berry_phase": phi_b,
        "concurrence": predict_concurrence(theta),
        "note": note,
    }
