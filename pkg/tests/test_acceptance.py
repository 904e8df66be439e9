"""Acceptance gate: one test per criterion, one printed pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines and the
per-criterion timings.  Criterion 9 is a physics-level consistency check and
is soft by design: a discrepancy report is printed instead of failing.
"""

import math
import time

import numpy as np
import pytest

from spinberry import (
    RotationSchedule,
    bell_pair_concurrence,
    berry_phase_analytic,
    concurrence_from_berry,
    concurrence_from_theta,
    cyclic_berry_phase_numeric,
    lattice_berry_phase,
    make_singlet,
    make_state,
    overlap_concurrence,
    reduced_spin_density,
    spin_correlator_concurrence,
    wootters_concurrence,
)
from spinberry import RegionPartition, TwoElectronState
from spinberry.cli import bundled_example_config, run_heisenberg_table
from spinberry.hubbard import config_from_dict, scatter_experiment

from conftest import random_partition, random_state
from test_concurrence import packet_factorized_state

PI = math.pi


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def _line(num, ok, text, timer):
    status = "PASS" if ok else "FAIL"
    print(f"\nCRITERION {num:02d} {status} ({timer.elapsed:.2f}s) - {text}")


@pytest.fixture(scope="module")
def flagship_report():
    # N=64, t=U=1, k0=pi/2, sigma=6: the canonical collision
    return scatter_experiment(config_from_dict(bundled_example_config()))


@pytest.fixture(scope="module")
def free_report():
    doc = dict(bundled_example_config())
    doc["U"] = 0.0
    return scatter_experiment(config_from_dict(doc))


def test_criterion_01_berry_concurrence_identity():
    with _Timer() as t:
        grid = np.linspace(0.0, PI, 101)
        for theta in grid:
            direct = concurrence_from_theta(theta)
            half_angle = math.sin(theta / 2.0) ** 2
            via_phase = concurrence_from_berry(berry_phase_analytic(theta, "up"))
            assert abs(direct - half_angle) <= 1e-12
            assert abs(direct - via_phase) <= 1e-12
    _line(1, True, "sin^2(theta/2) = (1-cos)/2 = phase/2pi on 101-point grid", t)
    assert t.elapsed < 1.0


def test_criterion_02_numeric_loop_phase():
    thetas = (PI / 6, PI / 3, PI / 2, 2 * PI / 3, 5 * PI / 6)
    with _Timer() as t:
        for theta in thetas:
            exact = berry_phase_analytic(theta, "up")
            got = cyclic_berry_phase_numeric(theta, RotationSchedule(1.0, 2000))
            assert abs(got - exact) <= 1e-3
        ratios = []
        for theta in thetas:
            exact = berry_phase_analytic(theta, "up")
            e500 = abs(cyclic_berry_phase_numeric(theta, RotationSchedule(1.0, 500)) - exact)
            e2000 = abs(cyclic_berry_phase_numeric(theta, RotationSchedule(1.0, 2000)) - exact)
            if e500 > 1e-9:  # pi/2 is exact to rounding; ratio undefined there
                ratios.append(e500 / e2000)
            else:
                assert e2000 < 1e-12
        # second order: quadrupling steps divides the error by ~16
        assert ratios and min(ratios) >= 11.0
    _line(2, True,
          f"2000-step loop within 1e-3; 500->2000 error ratio >= {min(ratios):.1f}", t)
    assert t.elapsed < 5.0


def test_criterion_03_overlap_equals_operator_algebra():
    rng = np.random.default_rng(42)
    with _Timer() as t:
        worst = 0.0
        for n in (2, 4, 6):
            for _ in range(100):
                state = random_state(rng, n)
                part = random_partition(rng, n)
                gap = abs(
                    overlap_concurrence(state, part)
                    - spin_correlator_concurrence(state, part)
                )
                worst = max(worst, gap)
                assert gap <= 1e-12
    _line(3, True, f"closed form == operator algebra, 300 states, worst gap {worst:.2e}", t)
    assert t.elapsed < 30.0


def test_criterion_04_bell_pair_bound_and_equality():
    rng = np.random.default_rng(43)
    with _Timer() as t:
        for n in (2, 4, 6):
            for _ in range(100):
                state = random_state(rng, n)
                part = random_partition(rng, n)
                assert bell_pair_concurrence(state, part) >= (
                    overlap_concurrence(state, part) - 1e-12
                )
        for _ in range(50):
            n = 6
            chi = rng.uniform(0, 2 * PI)
            amp = np.zeros((n, n), dtype=np.complex128)
            sites = list(rng.permutation(n) + 1)
            na = int(rng.integers(1, n))
            part = RegionPartition(sites[:na], sites[na:])
            for i in part.region_a:
                for j in part.region_b:
                    z = rng.normal() + 1j * rng.normal()
                    amp[i - 1, j - 1] = z
                    amp[j - 1, i - 1] = z * rng.uniform(0.1, 2.0) * np.exp(1j * chi)
            state = TwoElectronState(n, amp).normalized()
            assert abs(
                bell_pair_concurrence(state, part) - overlap_concurrence(state, part)
            ) <= 1e-12
    _line(4, True, "pair sum dominates overlap; equality on 50 common-phase states", t)
    assert t.elapsed < 10.0


def test_criterion_05_singlet_and_product_anchors():
    with _Timer() as t:
        singlet = make_singlet(2, 1, 2)
        part = RegionPartition({1}, {2})
        for measure in (
            overlap_concurrence,
            spin_correlator_concurrence,
            bell_pair_concurrence,
        ):
            assert abs(measure(singlet, part) - 1.0) <= 1e-12
        phi = lattice_berry_phase(singlet, part)
        assert abs(phi.real - 2 * PI) <= 1e-12 and abs(phi.imag) <= 1e-12

        product = make_state(2, [(1, 2, 1.0)])
        assert overlap_concurrence(product, part) == 0.0
        assert spin_correlator_concurrence(product, part) == 0.0
        assert bell_pair_concurrence(product, part) == 0.0
        assert lattice_berry_phase(product, part) == 0.0
    _line(5, True, "singlet -> all measures 1, phase 2pi; product -> all exactly 0", t)
    assert t.elapsed < 1.0


def test_criterion_06_wootters_oracle_on_factorized_states():
    rng = np.random.default_rng(44)
    with _Timer() as t:
        n = 8
        part = RegionPartition(range(1, 5), range(5, 9))
        for _ in range(50):
            amag = math.sqrt(rng.uniform(0.0, 1.0))
            bmag = math.sqrt(1.0 - amag**2)
            a = amag * np.exp(1j * rng.uniform(0, 2 * PI))
            state = packet_factorized_state(rng, n, part, a, bmag)
            expect = 2.0 * amag * bmag
            got_w = wootters_concurrence(reduced_spin_density(state, part))
            got_o = overlap_concurrence(state, part)
            assert abs(got_w - expect) <= 1e-10
            assert abs(got_o - expect) <= 1e-10
    _line(6, True, "Wootters oracle == overlap == 2|a||b| on 50 factorized states", t)
    assert t.elapsed < 10.0


def test_criterion_07_momentum_table_matches_reference():
    with _Timer() as t:
        report = run_heisenberg_table(1.0, 1.0, [PI / 4, PI / 2, 3 * PI / 4, 0.0, PI])
        rows = report["results"]
        assert abs(rows[0]["concurrence"] - 0.6178511301977579) <= 1e-12
        assert rows[1]["concurrence"] == 0.5
        assert abs(rows[2]["concurrence"] - 0.6178511301977579) <= 1e-12
        assert [r["concurrence_2dp"] for r in rows[:3]] == [0.62, 0.50, 0.62]
        assert rows[3]["concurrence"] == 1.0 and rows[4]["concurrence"] == 1.0
    _line(7, True, "table 0.62/0.50/0.62 at t=U; band edges give exactly 1", t)
    assert t.elapsed < 1.0


def test_criterion_08_collision_consistency(flagship_report):
    with _Timer() as t:
        result = flagship_report["result"]
        assert abs(result["final_norm"] - 1.0) <= 1e-8
        total = result["t_mag"] ** 2 + result["r_mag"] ** 2 + result["leakage"]
        assert abs(total - result["final_norm"] ** 2) <= 1e-8
        gap = abs(result["c_tr"] - result["c_overlap"])
        assert gap <= 0.02
    _line(8, True,
          f"N=64 collision: norm drift, weight accounting, channel gap {gap:.1e}", t)


def test_criterion_09_heisenberg_agreement_soft(flagship_report):
    with _Timer() as t:
        c_tr = flagship_report["result"]["c_tr"]
        predicted = flagship_report["heisenberg_prediction"]["concurrence"]
        deviation = abs(c_tr - predicted)
        if deviation > 0.15:
            print(
                "\nDISCREPANCY REPORT (soft criterion): collision c_tr "
                f"{c_tr:.4f} vs spin-chain prediction {predicted:.4f} "
                f"(|diff| = {deviation:.4f} > 0.15); report only, not a failure."
            )
    _line(9, True,
          f"collision c_tr {c_tr:.4f} vs prediction {predicted:.2f} "
          f"(|diff| {deviation:.4f}, soft bound 0.15)", t)


def test_criterion_10_no_entanglement_without_interaction(free_report):
    with _Timer() as t:
        c_tr = free_report["result"]["c_tr"]
        assert c_tr <= 0.04
    _line(10, True, f"U=0 collision gives c_tr {c_tr:.2e} <= 0.04", t)
