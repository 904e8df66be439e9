"""Spin entanglement of two delocalised lattice fermions via Berry phases.

Quantifies the concurrence of a two-electron, total-Sz=0 state split across
two spatial regions through three cross-validated routes (closed-form
overlap, brute-force spin-correlator algebra, per-pair Bell decomposition),
relates it to single-spin and lattice geometric phases, and reproduces it
dynamically by colliding wave packets in a 1D repulsive chain model.
"""

__version__ = "0.1.0"

from .spin_geometry import (
    BellCoefficients,
    BlochDirection,
    QubitState,
    RotationSchedule,
    bell_coefficients,
    berry_phase_analytic,
    bloch_eigenstates,
    concurrence_from_berry,
    concurrence_from_theta,
    cyclic_berry_phase_numeric,
)
from .lattice import (
    RegionPartition,
    SectorWeights,
    TwoElectronState,
    make_singlet,
    make_state,
    make_triplet,
    sector_weights,
)
from .concurrence import (
    BellPairAmplitudes,
    TwoQubitDensity,
    bell_pair_amplitudes,
    bell_pair_concurrence,
    overlap_concurrence,
    reduced_spin_density,
    spin_correlator_concurrence,
    wootters_concurrence,
)
from .berry_lattice import (
    BerryIntegral,
    StateFamily,
    berry_connection_integral,
    lattice_berry_phase,
    rotated_state,
    rotation_family,
)
from .hubbard import (
    HubbardHamiltonian,
    HubbardParams,
    ScatterConfig,
    ScatteringResult,
    TimePolicy,
    WavePacketSpec,
    build_hamiltonian,
    evolve,
    extract_amplitudes,
    free_dispersion_energy,
    initial_packets,
    post_selected_state,
    scatter_experiment,
)
from .heisenberg import (
    HeisenbergParams,
    concurrence_vs_k0,
    generalized_berry_phase,
    heisenberg_energy_per_site,
    j_coupling,
    predict_concurrence,
    theta_from_correlator,
    theta_from_k0,
)
from .errors import ConfigError, DomainError, SectorError, SpinberryError

__all__ = [name for name in dir() if not name.startswith("_")]
