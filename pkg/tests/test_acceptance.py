"""The acceptance suite, one test per criterion, each with its time budget."""

import json
import os
import subprocess
import sys
import time
from itertools import combinations, combinations_with_replacement, product

import pytest

from flagmorph import bundles
from flagmorph.chow import FlagVariety
from flagmorph.obstruction import (Outcome, bounded_search, build_system, decide_run,
                                   duality_consistency, recurrence_certificate, valid_runs)
from flagmorph.symmetric import (claim_check, complete_values, even_positivity_oracle,
                                 genfun_check, newton_alternating_sum)
from flagmorph.witness import fiber_parameters, verify_batch


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.1f}s, budget {self.seconds}s"


def zero_only(fv, m, bound, **kw):
    sys_ = build_system(fv, m)
    return [s.values for s in bounded_search(sys_, bound, **kw)] == [(0,) * len(sys_.unknowns)]


@pytest.mark.criterion(1, "claim identity for 1 <= j <= k <= 6")
def test_criterion_1_claim_identity():
    with Budget(10):
        assert all(claim_check(j, k) for k in range(1, 7) for j in range(1, k + 1))


@pytest.mark.criterion(2, "generating-function and Newton identities")
def test_criterion_2_generating_functions():
    with Budget(30):
        assert all(genfun_check(k, d) for k in range(1, 6) for d in range(1, 9))
        assert all(newton_alternating_sum(k, l).is_zero() for k in range(1, 6) for l in range(1, 9))


@pytest.mark.criterion(3, "even-degree positivity, exhaustive box [-4,4]")
def test_criterion_3_even_positivity():
    violations = []
    with Budget(60):
        for m in (2, 4):
            for k in range(1, 5):
                for a in product(range(-4, 5), repeat=k):
                    value = complete_values(a, m)[m]
                    if value < 0 or (value == 0) != (not any(a)):
                        violations.append((m, a, value))
                    elif even_positivity_oracle(m, a).value != value:
                        violations.append((m, a, "oracle disagrees"))
    assert violations == []


@pytest.mark.criterion(4, "initial-segment flags: bounded search finds only zero")
def test_criterion_4_initial_segment_search():
    with Budget(120):
        for n, m in [(3, 2), (4, 3), (5, 3), (5, 4)]:
            assert zero_only(FlagVariety(n, tuple(range(1, n - m + 3))), m, 4), (n, m)


@pytest.mark.criterion(5, "even two-step flags: search and recurrence certificate")
def test_criterion_5_even_two_step():
    with Budget(60):
        for k in (1, 2):
            assert zero_only(FlagVariety(2 * k, (1, 2 * k)), 2 * k, 4), k
            rep = recurrence_certificate(k, a_max=6, b1_max=6, parity_length=10)
            assert rep.passed, rep.counterexample
            assert rep.a_range == (0, 6) and rep.b1_range == (-6, 6)


EXPECTED_WITNESS = {(4, 3, 2): (1, 0, 1, -1), (5, 3, 2): (1, 0, 1, -1, 0), (5, 3, 3): (0, 1, 0, 1, -1)}


@pytest.mark.criterion(6, "odd interior runs: verdict and nonzero search hit")
def test_criterion_6_nonconstant_consistency():
    with Budget(30):
        for (n, m, i), witness in EXPECTED_WITNESS.items():
            assert decide_run(n, m, i, search=False).outcome is Outcome.NONCONSTANT
            sols = [s.values for s in bounded_search(
                build_system(FlagVariety.from_complement_run(n, m, i), m), 2)]
            assert any(any(s) for s in sols)
            assert witness in sols, (n, m, i)
        # the bare fiber A_3/P(1,3)
        sols = [s.values for s in bounded_search(build_system(FlagVariety(3, (1, 3)), 3), 2)]
        assert (1, 0, 1) in sols


@pytest.mark.criterion(7, "symplectic witness soundness on 100 seeded points")
def test_criterion_7_witness_soundness():
    cases = [fiber_parameters(1), fiber_parameters(2), (4, 2, 3), (6, 2, 5), (6, 3, 3)]
    with Budget(60):
        for n, i, m in cases:
            rep = verify_batch(n, i, m, samples=100, seed=0)
            assert rep.passed, rep.to_json()


BUNDLE_GRID_MAX_RANK = 8


def bundle_grid():
    for m in range(1, 7):
        for r in range(1, BUNDLE_GRID_MAX_RANK + 1):
            # a splitting type is a multiset, so sorted tuples cover the whole grid
            for t in combinations_with_replacement(range(-5, 6), r):
                yield bundles.SplittingType(m, t)


@pytest.mark.criterion(8, "verdicts agree under duality; bundle duality")
def test_criterion_8_duality():
    runs = list(valid_runs(8, 6))
    assert runs
    for n, m, i in runs:
        assert duality_consistency(n, m, FlagVariety.from_complement_run(n, m, i).dims), (n, m, i)
    for t in bundle_grid():
        d = bundles.dual_type(t)
        assert bundles.dual_type(d) == t
        assert bundles.classify(d).outcome is bundles.classify(t).outcome


@pytest.mark.criterion(9, "uniform bundle classifier")
def test_criterion_9_bundles():
    with Budget(30):
        c = bundles.classify(bundles.SplittingType(5, (2, 1, 1, 1, 1)))
        assert c.outcome is bundles.Outcome.INCONCLUSIVE
        c = bundles.classify(bundles.SplittingType(4, (5, 3, 2)))
        assert (c.outcome, c.rule) == (bundles.Outcome.SPLITS, bundles.LOW_RANK)
        t = bundles.SplittingType(4, (7, 7, 5, 3, 1))
        c = bundles.classify(t)
        assert (c.outcome, c.rule) == (bundles.Outcome.SPLITS, bundles.REPEATED_TOP)
        assert bundles.top_multiplicity(t) == 2
        for r in range(2, 7):
            for t in combinations(range(-5, 6), r):
                # on P^2 only the low-rank rule could fire, and it needs r <= 1
                c = bundles.classify(bundles.SplittingType(2, t))
                assert c.outcome is bundles.Outcome.INCONCLUSIVE, t
        for t in bundle_grid():
            assert bundles.classify(bundles.dual_type(t)).outcome is bundles.classify(t).outcome


# determinism -------------------------------------------------------------------------

CLI_RUNS = [
    ["search", "--n", "5", "--dims", "1,2,3", "--m", "4", "--bound", "4"],
    ["search", "--n", "4", "--dims", "1,4", "--m", "4", "--bound", "4"],
    ["identity", "parity", "--k", "2"],
    ["decide", "--n", "5", "--m", "3", "--i", "3"],
    ["search", "--n", "5", "--dims", "1,2,4,5", "--m", "3", "--bound", "2"],
    ["witness", "verify", "--n", "6", "--i", "3", "--m", "3", "--samples", "100", "--seed", "0"],
    ["decide", "--n", "6", "--m", "4", "--i", "2", "--bound", "2"],
]


def _cli_outputs(threads):
    env = dict(os.environ, FLAGMORPH_THREADS=str(threads))
    outs = []
    for argv in CLI_RUNS:
        proc = subprocess.run([sys.executable, "-m", "flagmorph", *argv], env=env,
                              capture_output=True, check=True)
        outs.append(proc.stdout)
    return outs


def _library_payload():
    payload = []
    for n, m in [(3, 2), (4, 3), (5, 3), (5, 4)]:
        sys_ = build_system(FlagVariety(n, tuple(range(1, n - m + 3))), m)
        payload.append([s.values for s in bounded_search(sys_, 4, min_parallel_size=0)])
    for n, m, i in EXPECTED_WITNESS:
        sys_ = build_system(FlagVariety.from_complement_run(n, m, i), m)
        payload.append([s.values for s in bounded_search(sys_, 2, min_parallel_size=0)])
    payload.append(recurrence_certificate(2).to_json())
    payload.append(verify_batch(4, 2, 3).to_json())
    return json.dumps(payload, sort_keys=True).encode()


@pytest.mark.criterion(10, "byte-identical output for FLAGMORPH_THREADS 1 and 4")
def test_criterion_10_determinism(monkeypatch):
    monkeypatch.setenv("FLAGMORPH_THREADS", "1")
    serial = _library_payload()
    monkeypatch.setenv("FLAGMORPH_THREADS", "4")
    parallel = _library_payload()
    assert serial == parallel
    assert _library_payload() == parallel
    assert _cli_outputs(1) == _cli_outputs(4)
