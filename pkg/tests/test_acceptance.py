"""Acceptance criteria, one test per criterion, each printing a verdict line.

Every criterion pits a closed-form phase law against an independent
brute-force route over seeded random inputs, at the stated tolerance.
Run with ``pytest tests/test_acceptance.py -v -s`` to see the verdict
lines inline.
"""

import json
import subprocess
import sys
import time

import numpy as np
import pytest

from pancha.checks import (
    PRECESSION_GRID,
    check_additivity,
    check_chain_convergence,
    check_channel_sum,
    check_dual_fringe,
    check_duality_identity,
    check_franson_fringe,
    check_maximal_entanglement_quantisation,
    check_mixed_noncyclic,
    check_mixed_profile_routes,
    check_mixed_solid_angle_law,
    check_orientation,
    check_pair_oracle,
    check_solid_angle_law,
)
from pancha.core import wrap_angle
from pancha.transport import (
    PrecessionSpec,
    chain_phase,
    geodesic_closure_solid_angle,
    precession_path,
    precession_phase_closed_form,
    precession_phase_simulated,
)

SEED = 20260809


def report(criterion: str, passed: bool, detail: str):
    print(f"acceptance[{criterion}]: {'PASS' if passed else 'FAIL'} ({detail})")
    assert passed, f"{criterion}: {detail}"


def test_criterion_1_solid_angle_law():
    start = time.perf_counter()
    outcome = check_solid_angle_law(SEED, n=1000)
    elapsed = time.perf_counter() - start
    report("1 solid-angle law, 1000 random triples",
           outcome.passed and elapsed < 1.0,
           f"max dev {outcome.stat:.3e} <= 1e-9, runtime {elapsed:.2f}s < 1s")


def test_criterion_2_additivity_and_orientation():
    add = check_additivity(SEED, n=1000)
    orient = check_orientation(SEED, n=1000)
    report("2 additivity and orientation", add.passed and orient.passed,
           f"additivity dev {add.stat:.3e} <= 1e-9, "
           f"orientation dev {orient.stat:.3e} exact")


def test_criterion_3_mixed_state_law():
    law = check_mixed_solid_angle_law(SEED, n=200)
    profiles = check_mixed_profile_routes(SEED, n=200, n_chi=64)
    report("3 mixed-state law and profile routes",
           law.passed and profiles.passed,
           f"arctan-law dev {law.stat:.3e} <= 1e-8, "
           f"profile dev {profiles.stat:.3e} <= 1e-9")


def test_criterion_4_two_photon_laws():
    oracle = check_pair_oracle(SEED, n=500)
    pinned = check_maximal_entanglement_quantisation(SEED)
    franson = check_franson_fringe(SEED)
    report("4 two-photon closed forms vs simulation",
           oracle.passed and pinned.passed and franson.passed,
           f"500-instance dev {oracle.stat:.3e} <= 1e-8, "
           f"lam=1/2 pinning dev {pinned.stat:.3e}, "
           f"coincidence-fit dev {franson.stat:.3e}")


def test_criterion_5_chain_and_convergence():
    start = time.perf_counter()
    worst = 0.0
    for theta, phi in PRECESSION_GRID:
        spec = PrecessionSpec(theta, phi)
        gap = abs(wrap_angle(chain_phase(precession_path(spec, 10_000))
                             - precession_phase_closed_form(spec)))
        worst = max(worst, gap)
    order = check_chain_convergence(SEED)
    elapsed = time.perf_counter() - start
    report("5 overlap-chain limit and convergence order",
           worst <= 1e-3 and order.passed and elapsed < 10.0,
           f"chain dev {worst:.3e} <= 1e-3, halving ratio {order.stat:.2f} "
           f">= 1.9, runtime {elapsed:.2f}s < 10s")


def test_criterion_6_dynamical_phase_cancellation():
    dev_sim = 0.0
    dev_area = 0.0
    for theta, phi in PRECESSION_GRID:
        spec = PrecessionSpec(theta, phi)
        closed = precession_phase_closed_form(spec)
        simulated = precession_phase_simulated(spec)
        dev_sim = max(dev_sim, abs(wrap_angle(simulated - closed)))
        omega_gc = geodesic_closure_solid_angle(precession_path(spec, 10_000))
        dev_area = max(dev_area, abs(wrap_angle(-omega_gc / 2.0 - simulated)))
    report("6 auxiliary-evolution cancellation",
           dev_sim <= 1e-9 and dev_area <= 1e-4,
           f"simulated vs closed {dev_sim:.3e} <= 1e-9, "
           f"vs geodesic closure {dev_area:.3e} <= 1e-4")


def test_criterion_7_mixed_noncyclic_phase():
    outcome = check_mixed_noncyclic(SEED)
    report("7 mixed noncyclic phase vs trace oracle", outcome.passed,
           f"max dev {outcome.stat:.3e} <= 1e-8")


def test_criterion_8_dual_setup():
    fringe = check_dual_fringe(SEED)
    duality = check_duality_identity(SEED)
    channels = check_channel_sum(SEED)
    report("8 dual split-beam readout",
           fringe.passed and duality.passed and channels.passed,
           f"20x20 fringe dev {fringe.stat:.3e} <= 1e-8, "
           f"duality dev {duality.stat:.3e} <= 1e-10, "
           f"channel-sum dev {channels.stat:.3e} <= 1e-10")


class TestCriterion9Harness:
    def test_verify_all_exits_clean(self):
        proc = subprocess.run(
            [sys.executable, "-m", "pancha", "verify", "all", "--seed", "0"],
            capture_output=True, text=True, check=False)
        report("9a verify-all exit status", proc.returncode == 0,
               f"exit {proc.returncode}, last line: "
               f"{proc.stdout.strip().splitlines()[-1] if proc.stdout else ''}")

    @pytest.mark.parametrize("fmt", ["csv", "json"])
    def test_identical_seeds_identical_bytes(self, tmp_path, fmt):
        config = {
            "experiment": "precession",
            "parameters": {"theta": [0.4, 0.8, 1.2], "phi": 1.3,
                           "subdivisions": 512},
            "seed": 3,
            "format": fmt,
        }
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps(config))
        outputs = []
        for name in ("a", "b"):
            out = tmp_path / f"{name}.{fmt}"
            proc = subprocess.run(
                [sys.executable, "-m", "pancha", "sweep", "--config", str(cfg),
                 "--out", str(out), "--jobs", "2"],
                capture_output=True, text=True, check=False)
            assert proc.returncode == 0, proc.stderr
            outputs.append(out.read_bytes())
        report(f"9b byte-identical reruns ({fmt})", outputs[0] == outputs[1],
               f"{len(outputs[0])} bytes each")
