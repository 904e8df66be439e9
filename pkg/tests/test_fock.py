"""The operator-algebra engine earns its anticommutation signs; pin them."""

import math

import numpy as np
import pytest

from spinberry import make_singlet, make_state, make_triplet
from spinberry.fock import (
    DOWN,
    UP,
    annihilate,
    apply_one_body,
    create,
    from_amp_matrix,
    inner,
    orbital,
    spin_lower_terms,
    spin_raise_terms,
    spinflip_correlator,
)


def test_orbital_encoding():
    assert orbital(1, UP) == 0
    assert orbital(1, DOWN) == 1
    assert orbital(3, UP) == 4


def test_create_orders_and_signs():
    ket, sign = create((), 3)
    assert ket == (3,) and sign == 1
    ket, sign = create((3,), 0)  # no occupied orbital below 0
    assert ket == (0, 3) and sign == 1
    ket, sign = create((1,), 3)  # one occupied orbital below 3
    assert ket == (1, 3) and sign == -1
    assert create((2,), 2) is None  # Pauli exclusion


def test_annihilate_signs():
    ket, sign = annihilate((1, 3), 1)
    assert ket == (3,) and sign == 1
    ket, sign = annihilate((1, 3), 3)
    assert ket == (1,) and sign == -1
    assert annihilate((1, 3), 2) is None


def test_double_create_vanishes():
    vec = {(): 1.0}
    terms = [(1.0, 2, 2)]  # c†_2 c_2 on empty orbital
    assert apply_one_body(terms, vec) == {}


def test_canonical_expansion_of_singlet():
    # c†_{2↑} c†_{1↓}|0> reorders to -|{1↓, 2↑}>, so the singlet matrix
    # (both entries +1/√2) expands to the antisymmetric spin combination.
    vec = from_amp_matrix(make_singlet(2, 1, 2).amp)
    inv = 1 / math.sqrt(2)
    assert vec[(0, 3)] == pytest.approx(inv)   # c†_{1↑} c†_{2↓}
    assert vec[(1, 2)] == pytest.approx(-inv)  # minus c†_{1↓} c†_{2↑}


def test_canonical_expansion_of_triplet():
    vec = from_amp_matrix(make_triplet(2, 1, 2).amp)
    inv = 1 / math.sqrt(2)
    assert vec[(0, 3)] == pytest.approx(inv)
    assert vec[(1, 2)] == pytest.approx(inv)


def test_inner_product_conjugates_bra():
    u = {(0, 3): 1j}
    v = {(0, 3): 2.0, (1, 2): 5.0}
    assert inner(u, v) == pytest.approx(-2j)


def test_singlet_correlator_hand_value():
    # <S+_1 S-_2> on the singlet is -1/2 (worked by hand through the kets)
    corr = spinflip_correlator(make_singlet(2, 1, 2).amp, [1], [2])
    assert corr == pytest.approx(-0.5, abs=1e-14)


def test_triplet_correlator_hand_value():
    corr = spinflip_correlator(make_triplet(2, 1, 2).amp, [1], [2])
    assert corr == pytest.approx(+0.5, abs=1e-14)


def test_product_state_correlator_vanishes():
    corr = spinflip_correlator(make_state(2, [(1, 2, 1.0)]).amp, [1], [2])
    assert corr == 0


def test_spin_ladder_closes_on_sz_zero_sector(rng):
    # S+_A S-_B maps the two-electron Sz=0 sector into itself; applying the
    # pair keeps exactly two orbitals per ket.
    amp = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    vec = from_amp_matrix(amp)
    out = apply_one_body(
        spin_raise_terms([1, 2]), apply_one_body(spin_lower_terms([3, 4]), vec)
    )
    assert all(len(ket) == 2 for ket in out)


def test_correlator_cross_sum_identity(rng):
    # operator algebra gives exactly minus the A×B cross sum, any state
    for _ in range(20):
        n = int(rng.integers(2, 7))
        amp = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        amp /= np.linalg.norm(amp)
        split = int(rng.integers(1, n))
        sites_a = list(range(1, split + 1))
        sites_b = list(range(split + 1, n + 1))
        corr = spinflip_correlator(amp, sites_a, sites_b)
        cross = sum(
            np.conj(amp[i - 1, j - 1]) * amp[j - 1, i - 1]
            for i in sites_a
            for j in sites_b
        )
        assert corr == pytest.approx(-cross, abs=1e-13)
