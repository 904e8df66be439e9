"""Two-electron states on a 1D chain, region partitions, sector bookkeeping.

Basis convention
----------------
The total-Sz=0 sector of two electrons on an N-site chain is spanned by the
kets  c†_{i↑} c†_{j↓} |0>  in this fixed operator order, with sites labelled
1..N in all public interfaces and i = j (double occupancy) allowed.  A state
is the complex N×N matrix ``amp`` with ``amp[i-1, j-1]`` the coefficient of
that ket.

The companion family of amplitudes written with the operators in the
opposite order is not stored: c†_{i↓} c†_{j↑} = -c†_{j↑} c†_{i↓}, so it is
fixed to minus the transpose of ``amp``.  Storing one matrix removes that
gauge redundancy; the anticommutation sign resurfaces only when spin
configurations at fixed positions are compared (see
``spinberry.concurrence.reduced_spin_density``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from . import kernels


@dataclass(frozen=True)
class TwoElectronState:
    """Canonical amplitude matrix of a two-electron, Sz=0 lattice state.

    ``amp[i-1, j-1]`` multiplies c†_{i↑} c†_{j↓}|0>.  The array is made
    read-only on construction; treat states as immutable values.
    """

    num_sites: int
    amp: np.ndarray

    def __post_init__(self):
        if self.num_sites < 1:
            raise DomainError(f"num_sites must be positive, got {self.num_sites}")
        a = np.asarray(self.amp, dtype=np.complex128)
        if a.shape != (self.num_sites, self.num_sites):
            raise DomainError(
                f"amplitude matrix shape {a.shape} does not match "
                f"{self.num_sites} sites"
            )
        a = np.ascontiguousarray(a)
        a.flags.writeable = False
        object.__setattr__(self, "amp", a)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amp))

    @property
    def is_normalized(self) -> bool:
        return abs(self.norm() - 1.0) <= 1e-10

    def amplitude(self, i: int, j: int) -> complex:
        """Coefficient of c†_{i↑} c†_{j↓}|0> for 1-based sites i, j."""
        _check_site(i, self.num_sites)
        _check_site(j, self.num_sites)
        return complex(self.amp[i - 1, j - 1])

    def normalized(self) -> "TwoElectronState":
        n = self.norm()
        if n == 0.0:
            raise DomainError("cannot normalize the zero state")
        return TwoElectronState(self.num_sites, self.amp / n)

    # -- persistence ------------------------------------------------------

    def to_dict(self) -> dict:
        entries = []
        nz = np.argwhere(self.amp != 0)
        for i, j in nz:
            z = self.amp[i, j]
            entries.append([int(i) + 1, int(j) + 1, float(z.real), float(z.imag)])
        return {"num_sites": self.num_sites, "entries": entries}

    def dumps(self) -> str:
        return json.dumps(self.to_dict())

    def dump(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_dict(), fh)
            fh.write("\n")

    @classmethod
    def from_dict(cls, doc: dict) -> "TwoElectronState":
        try:
            n = int(doc["num_sites"])
            raw = doc["entries"]
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed state document: missing {exc}") from exc
        amp = np.zeros((n, n), dtype=np.complex128)
        for i, j, re, im in raw:
            _check_site(int(i), n)
            _check_site(int(j), n)
            amp[int(i) - 1, int(j) - 1] = complex(re, im)
        return cls(n, amp)

    @classmethod
    def loads(cls, text: str) -> "TwoElectronState":
        return cls.from_dict(json.loads(text))

    @classmethod
    def load(cls, path) -> "TwoElectronState":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


@dataclass(frozen=True)
class RegionPartition:
    """Two disjoint, non-empty sets of 1-based sites defining domains A and B."""

    region_a: frozenset = field()
    region_b: frozenset = field()

    def __init__(self, region_a, region_b):
        a = frozenset(int(s) for s in region_a)
        b = frozenset(int(s) for s in region_b)
        if not a or not b:
            raise DomainError("both regions must be non-empty")
        if a & b:
            raise DomainError(f"regions overlap on sites {sorted(a & b)}")
        object.__setattr__(self, "region_a", a)
        object.__setattr__(self, "region_b", b)

    @classmethod
    def halves(cls, num_sites: int) -> "RegionPartition":
        """Left block / right block split used as the default measurement
        geometry (A = sites 1..N/2)."""
        mid = num_sites // 2
        return cls(range(1, mid + 1), range(mid + 1, num_sites + 1))

    def indices(self, num_sites: int):
        """0-based index arrays (sorted) for regions A and B; validates range."""
        for s in sorted(self.region_a | self.region_b):
            _check_site(s, num_sites)
        a = np.array(sorted(self.region_a), dtype=np.int64) - 1
        b = np.array(sorted(self.region_b), dtype=np.int64) - 1
        return a, b


@dataclass(frozen=True)
class SectorWeights:
    """Weights of the one-electron-per-region sectors of a state.

    ``w_nonflip``: up spin in A and down spin in B.  ``w_flip``: up in B,
    down in A.  ``w_other``: everything else (double occupancy, both
    electrons in one region, or support outside A ∪ B).
    """

    w_nonflip: float
    w_flip: float
    w_other: float

    @property
    def total(self) -> float:
        return self.w_nonflip + self.w_flip + self.w_other

    @property
    def cross(self) -> float:
        """Weight of the post-selection sector (one electron per region)."""
        return self.w_nonflip + self.w_flip


def _check_site(s: int, n: int) -> None:
    if not 1 <= s <= n:
        raise DomainError(f"site {s} outside 1..{n}")


def make_state(num_sites: int, entries) -> TwoElectronState:
    """Build a normalized state from (i, j, amplitude) triples (1-based sites).

    Repeated (i, j) entries accumulate.  Raises on an empty list, an index
    out of range, or amplitudes summing to the zero state.
    """
    entries = list(entries)
    if not entries:
        raise DomainError("at least one amplitude entry is required")
    amp = np.zeros((num_sites, num_sites), dtype=np.complex128)
    for i, j, value in entries:
        _check_site(int(i), num_sites)
        _check_site(int(j), num_sites)
        amp[int(i) - 1, int(j) - 1] += complex(value)
    return TwoElectronState(num_sites, amp).normalized()


def make_singlet(num_sites: int, i: int, j: int) -> TwoElectronState:
    """Spin singlet (c†_{i↑}c†_{j↓} - c†_{i↓}c†_{j↑})|0>/√2 between sites i ≠ j.

    In the canonical matrix the anticommutation of the second term gives two
    equal entries: amp[i][j] = amp[j][i] = 1/√2.
    """
    if i == j:
        raise DomainError("singlet requires two distinct sites")
    inv = 1.0 / np.sqrt(2.0)
    return make_state(num_sites, [(i, j, inv), (j, i, inv)])


def make_triplet(num_sites: int, i: int, j: int) -> TwoElectronState:
    """Sz=0 triplet (c†_{i↑}c†_{j↓} + c†_{i↓}c†_{j↑})|0>/√2: antisymmetric
    canonical matrix, amp[i][j] = -amp[j][i] = 1/√2."""
    if i == j:
        raise DomainError("triplet requires two distinct sites")
    inv = 1.0 / np.sqrt(2.0)
    return make_state(num_sites, [(i, j, inv), (j, i, -inv)])


def sector_weights(state: TwoElectronState, part: RegionPartition) -> SectorWeights:
    """Decompose the state's weight over the flip/non-flip/other sectors."""
    a_idx, b_idx = part.indices(state.num_sites)
    w_nf, w_fl, w_other = kernels.sector_weights(state.amp, a_idx, b_idx)
    return SectorWeights(w_nf, w_fl, w_other)
