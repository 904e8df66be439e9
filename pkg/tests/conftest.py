import numpy as np
import pytest

from spinberry import RegionPartition, TwoElectronState


def random_state(rng, n):
    amp = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return TwoElectronState(n, amp / np.linalg.norm(amp))


def random_partition(rng, n):
    """Random disjoint non-empty regions; may or may not cover all sites."""
    sites = list(rng.permutation(n) + 1)
    na = int(rng.integers(1, n))
    nb = int(rng.integers(1, n - na + 1))
    return RegionPartition(sites[:na], sites[na : na + nb])


def covering_partition(rng, n):
    sites = list(rng.permutation(n) + 1)
    na = int(rng.integers(1, n))
    return RegionPartition(sites[:na], sites[na:])


@pytest.fixture
def rng():
    return np.random.default_rng(20260808)
