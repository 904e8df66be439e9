"""Two-electron scattering in the 1D repulsive chain model.

An up-spin Gaussian packet launched rightward from region A collides with a
down-spin packet launched leftward from region B.  The onsite repulsion U is
the only interaction; after the packets re-separate, the weight with the up
spin still in A (non-flip channel, magnitude |t_kq|) and the weight with the
spins exchanged (flip channel, |r_kq|) give the concurrence 2|t_kq r_kq| of
the post-selected final state, which is cross-checked against the overlap
concurrence and the spin-chain prediction.

The Hamiltonian acts on the canonical amplitude matrix as

    (Hψ)[i, j] = -t (ψ[i±1, j] + ψ[i, j±1]) + U δ_{ij} ψ[i, j]

-- the two hopping families act on independent indices, so no fermionic sign
appears in this sector.  Time evolution is exact (full diagonalization, small
lattices) or Lanczos-stepped (default; the Hamiltonian application is the hot
kernel and dominates the run time).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal

from . import heisenberg, kernels
from .berry_lattice import lattice_berry_phase
from .concurrence import overlap_concurrence
from .errors import DomainError, SectorError
from .lattice import RegionPartition, TwoElectronState, sector_weights

SCHEMA_VERSION = "1"

_EXACT_SITES_GUARD = 72  # N^2 x N^2 dense eigh beyond this is a mistake, not a run


@dataclass(frozen=True)
class HubbardParams:
    """Chain geometry and couplings: N sites, hopping t > 0, onsite U ≥ 0."""

    num_sites: int
    hopping: float = 1.0
    onsite_u: float = 0.0
    boundary: str = "open"

    def __post_init__(self):
        if self.num_sites < 4:
            raise DomainError(f"need at least 4 sites, got {self.num_sites}")
        if self.hopping <= 0:
            raise DomainError(f"hopping must be positive, got {self.hopping}")
        if self.onsite_u < 0:
            raise DomainError(f"onsite U must be >= 0, got {self.onsite_u}")
        if self.boundary not in ("open", "periodic"):
            raise DomainError(f"boundary must be open|periodic, got {self.boundary!r}")


@dataclass(frozen=True)
class WavePacketSpec:
    """Gaussian packet: amplitude envelope exp(-(x-center)²/(2σ²)) times a
    plane wave e^{i·momentum·x}.  The |ψ|² width is therefore σ/√2.

    ``center`` may be fractional; ``momentum`` is in radians per site and
    must lie in the first Brillouin zone.
    """

    center: float
    width_sigma: float
    momentum: float
    spin: str

    def __post_init__(self):
        if self.width_sigma < 2:
            raise DomainError(f"width_sigma must be >= 2, got {self.width_sigma}")
        if not -math.pi <= self.momentum <= math.pi:
            raise DomainError(f"momentum {self.momentum} outside [-pi, pi]")
        if self.spin not in ("up", "down"):
            raise DomainError(f"spin must be up|down, got {self.spin!r}")

    def envelope(self, sites: np.ndarray) -> np.ndarray:
        g = np.exp(-((sites - self.center) ** 2) / (2.0 * self.width_sigma**2))
        return g * np.exp(1j * self.momentum * sites)


@dataclass(frozen=True)
class ScatteringResult:
    """Channel magnitudes and concurrences read off a post-collision state.

    t_mag² + r_mag² + leakage equals the squared state norm exactly (weight
    accounting); c_tr = 2·t·r renormalized to the one-per-region sector,
    c_overlap is the post-selected overlap concurrence of the same state.
    """

    t_mag: float
    r_mag: float
    leakage: float
    c_tr: float
    c_overlap: float
    final_norm: float

    def to_dict(self) -> dict:
        return {
            "t_mag": self.t_mag,
            "r_mag": self.r_mag,
            "leakage": self.leakage,
            "c_tr": self.c_tr,
            "c_overlap": self.c_overlap,
            "final_norm": self.final_norm,
        }


class HubbardHamiltonian:
    """Linear action of the two-electron chain Hamiltonian.

    Hermitian on the N² canonical basis; ``apply_raw`` is the hot kernel
    (compiled when available).  The dense matrix and its eigendecomposition
    are built lazily and only for lattices small enough to afford them.
    """

    def __init__(self, params: HubbardParams):
        self.params = params
        self._eig = None

    @property
    def num_sites(self) -> int:
        return self.params.num_sites

    def apply_raw(self, amp: np.ndarray) -> np.ndarray:
        return kernels.hubbard_apply(
            amp,
            self.params.hopping,
            self.params.onsite_u,
            self.params.boundary == "periodic",
        )

    def apply(self, state: TwoElectronState) -> TwoElectronState:
        if state.num_sites != self.num_sites:
            raise DomainError(
                f"state has {state.num_sites} sites, Hamiltonian {self.num_sites}"
            )
        return TwoElectronState(self.num_sites, self.apply_raw(state.amp))

    def expectation(self, state: TwoElectronState) -> float:
        return float(np.vdot(state.amp, self.apply_raw(state.amp)).real)

    def matrix(self) -> np.ndarray:
        """Dense (N², N²) matrix in row-major flattening of the amplitude
        matrix: kron(h1, I) + kron(I, h1) + U on the double-occupancy axis."""
        n = self.num_sites
        h1 = np.zeros((n, n))
        for i in range(n - 1):
            h1[i, i + 1] = h1[i + 1, i] = -self.params.hopping
        if self.params.boundary == "periodic":
            h1[0, n - 1] += -self.params.hopping
            h1[n - 1, 0] += -self.params.hopping
        eye = np.eye(n)
        h = np.kron(h1, eye) + np.kron(eye, h1)
        if self.params.onsite_u:
            docc = np.arange(n) * n + np.arange(n)
            h[docc, docc] += self.params.onsite_u
        return h

    def eigensystem(self):
        if self._eig is None:
            self._eig = np.linalg.eigh(self.matrix())
        return self._eig


def build_hamiltonian(params: HubbardParams) -> HubbardHamiltonian:
    return HubbardHamiltonian(params)


def free_dispersion_energy(t: float, momenta) -> float:
    """Band energy of non-meeting particles: -2t Σ_i cos(k_i)."""
    return float(-2.0 * t * np.sum(np.cos(np.asarray(list(momenta), dtype=float))))


def initial_packets(
    params: HubbardParams, left: WavePacketSpec, right: WavePacketSpec
) -> TwoElectronState:
    """Product state of an up packet (left, moving right) and a down packet.

    amp[i, j] = g_L(i) e^{i k_L i} · g_R(j) e^{i k_R j}, normalized.  The
    packets must be well separated (centers ≥ 6 density-widths apart, i.e.
    6σ/√2) and clear of the chain ends by 3 density-widths so the initial
    non-flip weight is effectively 1 for the default half-chain split.
    """
    if left.spin != "up" or right.spin != "down":
        raise DomainError("left packet must be spin up, right packet spin down")
    if right.center <= left.center:
        raise DomainError("right packet must sit to the right of the left packet")
    rho_width = left.width_sigma / math.sqrt(2.0)
    rho_width_r = right.width_sigma / math.sqrt(2.0)
    sep = right.center - left.center
    if sep < 3.0 * (rho_width + rho_width_r):
        raise DomainError(
            f"packet centers {sep:.1f} sites apart overlap beyond tolerance "
            f"(need >= {3.0 * (rho_width + rho_width_r):.1f})"
        )
    n = params.num_sites
    for spec, rho in ((left, rho_width), (right, rho_width_r)):
        margin = min(spec.center - 1, n - spec.center)
        if margin < 3.0 * rho:
            raise DomainError(
                f"packet at {spec.center} is {margin:.1f} sites from a chain "
                f"end; needs >= {3.0 * rho:.1f} to fit"
            )
    sites = np.arange(1, n + 1, dtype=np.float64)
    amp = np.outer(left.envelope(sites), right.envelope(sites))
    return TwoElectronState(n, amp).normalized()


def _lanczos_step(h: HubbardHamiltonian, amp: np.ndarray, dt: float, dim: int):
    """One Krylov step: amp -> exp(-i H dt) amp via a Lanczos tridiagonal.

    Truncates early on (happy) breakdown; returns the new amplitude matrix
    and the breakdown residual for diagnostics.
    """
    norm0 = np.linalg.norm(amp)
    basis = [amp / norm0]
    alphas, betas = [], []
    residual = 0.0
    w = h.apply_raw(basis[0])
    alphas.append(float(np.vdot(basis[0], w).real))
    w = w - alphas[0] * basis[0]
    for _ in range(1, dim):
        beta = float(np.linalg.norm(w))
        if beta < 1e-13 * max(1.0, abs(alphas[0])):
            residual = beta
            break
        betas.append(beta)
        basis.append(w / beta)
        w = h.apply_raw(basis[-1]) - beta * basis[-2]
        a = float(np.vdot(basis[-1], w).real)
        alphas.append(a)
        w = w - a * basis[-1]
    evals, evecs = eigh_tridiagonal(alphas, betas)
    coef = evecs @ (np.exp(-1j * evals * dt) * evecs[0, :])
    out = np.zeros_like(amp)
    for c, v in zip(coef, basis):
        out += c * v
    return out * norm0, residual


def evolve(
    state: TwoElectronState,
    h: HubbardHamiltonian,
    t_final: float,
    method: str = "krylov",
    dt: float = 0.05,
    krylov_dim: int = 30,
    max_exact_sites: int = _EXACT_SITES_GUARD,
) -> TwoElectronState:
    """Propagate: exp(-i H T) |state>.

    ``exact`` diagonalizes the full N²-dimensional sector (guarded: refuses
    N > max_exact_sites).  ``krylov`` steps with Lanczos subspaces of size
    ``krylov_dim`` every ``dt``; unitary to rounding for Hermitian H.
    The returned state is NOT renormalized -- norm drift is a diagnostic.
    """
    if t_final < 0:
        raise DomainError(f"evolution time must be >= 0, got {t_final}")
    if t_final == 0:
        return state
    if method == "exact":
        if h.num_sites > max_exact_sites:
            raise DomainError(
                f"exact evolution on {h.num_sites} sites needs a "
                f"{h.num_sites ** 2}-dim dense eigh; raise max_exact_sites "
                f"(currently {max_exact_sites}) to insist"
            )
        evals, evecs = h.eigensystem()
        vec = evecs.conj().T @ state.amp.ravel()
        vec = evecs @ (np.exp(-1j * evals * t_final) * vec)
        return TwoElectronState(h.num_sites, vec.reshape(h.num_sites, h.num_sites))
    if method != "krylov":
        raise DomainError(f"method must be exact|krylov, got {method!r}")
    if dt <= 0:
        raise DomainError(f"krylov needs dt > 0, got {dt}")
    steps = max(1, int(round(t_final / dt)))
    step_dt = t_final / steps
    amp = state.amp
    for _ in range(steps):
        amp, _residual = _lanczos_step(h, amp, step_dt, krylov_dim)
    return TwoElectronState(h.num_sites, amp)


def extract_amplitudes(
    final: TwoElectronState, part: RegionPartition
) -> ScatteringResult:
    """Channel magnitudes and concurrences of a post-collision state.

    Non-flip means region A holds the up spin at measurement, matching the
    initial assignment; both concurrences are post-selected on the
    one-electron-per-region sector.
    """
    weights = sector_weights(final, part)
    if weights.cross < 1e-6:
        raise SectorError(
            f"no scattering outcome: one-per-region weight {weights.cross:.3e}"
        )
    t_mag = math.sqrt(weights.w_nonflip)
    r_mag = math.sqrt(weights.w_flip)
    return ScatteringResult(
        t_mag=t_mag,
        r_mag=r_mag,
        leakage=weights.w_other,
        c_tr=2.0 * t_mag * r_mag / weights.cross,
        c_overlap=overlap_concurrence(final, part, normalize_sector=True),
        final_norm=final.norm(),
    )


def post_selected_state(
    state: TwoElectronState, part: RegionPartition
) -> TwoElectronState:
    """Project onto the one-electron-per-region sector and renormalize."""
    a_idx, b_idx = part.indices(state.num_sites)
    keep = np.zeros_like(state.amp)
    keep[np.ix_(a_idx, b_idx)] = state.amp[np.ix_(a_idx, b_idx)]
    keep[np.ix_(b_idx, a_idx)] = state.amp[np.ix_(b_idx, a_idx)]
    if np.linalg.norm(keep) < 1e-8:
        raise SectorError("no weight in the one-per-region sector")
    return TwoElectronState(state.num_sites, keep).normalized()


@dataclass(frozen=True)
class TimePolicy:
    """When to read the channels off.  ``fixed`` evolves to t_final exactly;
    ``auto`` samples the leakage w_other(t) on a uniform grid and measures at
    its post-collision minimum (the packets' best re-separation)."""

    mode: str = "auto"
    t_final: float = 0.0
    t_max: float | None = None
    samples: int = 48

    def __post_init__(self):
        if self.mode not in ("auto", "fixed"):
            raise DomainError(f"time policy mode must be auto|fixed, got {self.mode!r}")
        if self.mode == "fixed" and self.t_final < 0:
            raise DomainError(f"t_final must be >= 0, got {self.t_final}")
        if self.samples < 8:
            raise DomainError(f"auto policy needs >= 8 samples, got {self.samples}")


@dataclass(frozen=True)
class ScatterConfig:
    """Full description of one collision run (serializable, CLI-compatible)."""

    params: HubbardParams
    left: WavePacketSpec
    right: WavePacketSpec
    partition: RegionPartition
    method: str = "krylov"
    dt: float = 0.05
    time_policy: TimePolicy = field(default_factory=TimePolicy)


def _auto_time_bounds(config: ScatterConfig) -> tuple:
    """Collision-time estimate and a wall-safe sampling horizon from the
    packet group velocities v = 2t sin(k)."""
    t_hop = config.params.hopping
    v_l = abs(2.0 * t_hop * math.sin(config.left.momentum))
    v_r = abs(2.0 * t_hop * math.sin(config.right.momentum))
    closing = v_l + v_r
    if closing < 1e-9:
        raise DomainError("packets do not approach each other (zero closing speed)")
    sep = config.right.center - config.left.center
    t_coll = sep / closing
    mid = 0.5 * (config.left.center + config.right.center)
    v_out = max(v_l, v_r)
    travel = min(mid - 1.0, config.params.num_sites - mid)
    travel -= 2.0 * max(config.left.width_sigma, config.right.width_sigma)
    t_wall = t_coll + max(travel, 0.0) / v_out
    return t_coll, min(2.6 * t_coll, t_wall)


def scatter_experiment(config: ScatterConfig) -> dict:
    """Run one collision: prepare packets, evolve, pick the measurement time,
    extract channels.  Returns the versioned report document.

    The report carries the inputs, the ScatteringResult, the spin-chain
    prediction for the same (t, U, k0), the lattice geometric phase of the
    post-selected final state, and the sampled leakage timeline that backed
    the automatic measurement-time choice.
    """
    h = build_hamiltonian(config.params)
    state = initial_packets(config.params, config.left, config.right)
    timeline = []

    if config.time_policy.mode == "fixed":
        t_meas = config.time_policy.t_final
        final = evolve(state, h, t_meas, method=config.method, dt=config.dt)
    else:
        t_coll, t_max = _auto_time_bounds(config)
        if config.time_policy.t_max is not None:
            t_max = config.time_policy.t_max
        sample_dt = t_max / config.time_policy.samples
        best = None
        current = state
        t_now = 0.0
        w = sector_weights(current, config.partition)
        timeline.append((0.0, w.w_nonflip, w.w_flip, w.w_other))
        peak_w_other = w.w_other
        peak_seen = False
        for _ in range(config.time_policy.samples):
            current = evolve(current, h, sample_dt, method=config.method, dt=config.dt)
            t_now += sample_dt
            w = sector_weights(current, config.partition)
            timeline.append((t_now, w.w_nonflip, w.w_flip, w.w_other))
            if w.w_other > peak_w_other:
                peak_w_other = w.w_other
                peak_seen = True
                best = None  # minima before the collision peak do not count
            elif peak_seen and (best is None or w.w_other < best[1]):
                best = (t_now, w.w_other, current)
        if best is None:
            # no re-separation found; fall back to the horizon state
            best = (t_now, w.w_other, current)
        t_meas, _, final = best

    result = extract_amplitudes(final, config.partition)
    k0 = abs(config.left.momentum)
    try:
        prediction = heisenberg.concurrence_vs_k0(
            config.params.hopping, config.params.onsite_u, k0
        )
    except DomainError as exc:
        prediction = {"error": str(exc), "k0": k0}
    phi = lattice_berry_phase(post_selected_state(final, config.partition), config.partition)
    return {
        "schema_version": SCHEMA_VERSION,
        "config": config_to_dict(config),
        "measurement_time": t_meas,
        "result": result.to_dict(),
        "concurrence_gap": abs(result.c_tr - result.c_overlap),
        "heisenberg_prediction": prediction,
        "berry_phase_post_selected": {"re": phi.real, "im": phi.imag, "abs": abs(phi)},
        "berry_concurrence": abs(phi) / (2.0 * math.pi),
        "leakage_timeline": [list(row) for row in timeline],
    }


# -- config (de)serialization ------------------------------------------------


def config_to_dict(config: ScatterConfig) -> dict:
    regions = {
        "A": sorted(config.partition.region_a),
        "B": sorted(config.partition.region_b),
    }
    policy = {"mode": config.time_policy.mode}
    if config.time_policy.mode == "fixed":
        policy["T"] = config.time_policy.t_final
    else:
        policy["samples"] = config.time_policy.samples
        if config.time_policy.t_max is not None:
            policy["t_max"] = config.time_policy.t_max
    return {
        "N": config.params.num_sites,
        "t": config.params.hopping,
        "U": config.params.onsite_u,
        "boundary": config.params.boundary,
        "k0": abs(config.left.momentum),
        "sigma": config.left.width_sigma,
        "centers": [config.left.center, config.right.center],
        "regions": regions,
        "method": config.method,
        "dt": config.dt,
        "T_policy": policy,
    }


def _region_from_spec(spec) -> list:
    """Region syntax: [start, stop] inclusive range, or explicit site list."""
    if (
        isinstance(spec, (list, tuple))
        and len(spec) == 2
        and all(isinstance(x, int) for x in spec)
        and spec[0] < spec[1]
    ):
        return list(range(spec[0], spec[1] + 1))
    if isinstance(spec, (list, tuple)) and spec:
        return [int(x) for x in spec]
    raise DomainError(f"region spec {spec!r} is neither a range nor a site list")


def config_from_dict(doc: dict) -> ScatterConfig:
    """Parse the documented config keys; unknown keys are rejected by name."""
    known = {
        "N", "t", "U", "boundary", "k0", "sigma", "centers",
        "regions", "method", "dt", "T_policy",
    }
    unknown = set(doc) - known
    if unknown:
        raise DomainError(f"unknown config keys: {sorted(unknown)}")
    missing = {"N", "k0", "sigma", "centers"} - set(doc)
    if missing:
        raise DomainError(f"missing config keys: {sorted(missing)}")
    params = HubbardParams(
        num_sites=int(doc["N"]),
        hopping=float(doc.get("t", 1.0)),
        onsite_u=float(doc.get("U", 0.0)),
        boundary=doc.get("boundary", "open"),
    )
    k0 = float(doc["k0"])
    sigma = float(doc["sigma"])
    centers = doc["centers"]
    if not (isinstance(centers, (list, tuple)) and len(centers) == 2):
        raise DomainError(f"centers must be a [left, right] pair, got {centers!r}")
    left = WavePacketSpec(float(centers[0]), sigma, +k0, "up")
    right = WavePacketSpec(float(centers[1]), sigma, -k0, "down")
    if "regions" in doc:
        regions = doc["regions"]
        if not isinstance(regions, dict) or set(regions) != {"A", "B"}:
            raise DomainError("regions must be an object with keys 'A' and 'B'")
        partition = RegionPartition(
            _region_from_spec(regions["A"]), _region_from_spec(regions["B"])
        )
    else:
        partition = RegionPartition.halves(params.num_sites)
    policy_doc = doc.get("T_policy", {"mode": "auto"})
    if isinstance(policy_doc, (int, float)):
        policy = TimePolicy(mode="fixed", t_final=float(policy_doc))
    elif isinstance(policy_doc, dict):
        mode = policy_doc.get("mode", "auto")
        if mode == "fixed":
            if "T" not in policy_doc:
                raise DomainError("fixed T_policy needs key 'T'")
            policy = TimePolicy(mode="fixed", t_final=float(policy_doc["T"]))
        else:
            policy = TimePolicy(
                mode=mode,
                t_max=policy_doc.get("t_max"),
                samples=int(policy_doc.get("samples", 48)),
            )
    else:
        raise DomainError(f"T_policy {policy_doc!r} is neither a number nor an object")
    return ScatterConfig(
        params=params,
        left=left,
        right=right,
        partition=partition,
        method=doc.get("method", "krylov"),
        dt=float(doc.get("dt", 0.05)),
        time_policy=policy,
    )
