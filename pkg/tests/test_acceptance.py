"""Acceptance criteria. Each test carries a ``criterion`` label and the
terminal summary prints one PASS/FAIL line per label.

Tolerances: every comparison is exact (integers or Fractions). Runtime
limits are wall-clock seconds measured inside the test.
"""

import os
import random
import time
from fractions import Fraction
from pathlib import Path

import pytest

from hyperchrom.coloring import chromatic_index_exact, is_proper, pair_adjacency_check
from hyperchrom.core import check_sandwich, metrics, validate
from hyperchrom.lab import (
    config_for_seed,
    dump_counterexample,
    fano,
    helly_positive,
    oracle_automorphisms,
    oracle_chromatic_index,
    oracle_helly,
    random_linear,
)
from hyperchrom.quotient import (
    CASE2,
    clique_condition_check,
    conjecture_report,
    helly_check,
    pivot_candidates,
    theorem2_inequality,
    theorem21_check,
)
from hyperchrom.report import analyze, symmetry_summary
from hyperchrom.symmetry import automorphisms, burnside_average

ORACLE_SEEDS = range(500)
THEOREM_SEEDS = range(1000)
SUITE_SECONDS = 120
ARTIFACTS = Path(os.environ.get("HYPERCHROM_ARTIFACTS", "counterexamples"))


def instance(seed, n_max=10):
    return random_linear(config_for_seed(seed, n_max=n_max, m_max=8))


# --- Fano regression --------------------------------------------------------


@pytest.mark.criterion("Fano regression (q, degrees, groups, Gamma sizes, theorem2 bound, Helly witness, < 5 s)")
def test_fano_regression():
    start = time.perf_counter()
    H = fano()
    a = analyze(H)
    r = a.report
    mt = r.metrics
    assert (r.q, mt.delta, mt.delta2, mt.antirank, mt.rank) == (7, 3, 6, 3, 3)
    assert (r.direct.q, r.direct.bound, r.direct.holds, r.direct.equality) == (7, 7, True, True)
    assert a.symmetry.aut.order == 168
    assert r.case.kind == CASE2 and len(r.case.missing) == 4
    assert [len(b.gamma) for b in r.per_c0] == [3, 3, 3, 3]
    assert all((b.theorem2.lhs, b.theorem2.rhs) == (10, 13) and b.theorem2.holds for b in r.per_c0)
    assert r.helly.helly is False and len(r.helly.witness) == 4
    # any minimal colouring: sample several
    for seed in (None, 1, 2, 3, 4):
        _, col = chromatic_index_exact(H, seed=seed)
        s = symmetry_summary(H, col)
        assert s.t.order == 1 and s.burnside.bound == 7 and len(s.orbits.blocks) == 7
    assert time.perf_counter() - start < 5
    assert oracle_automorphisms(H) == 168  # 5040 permutations, kept outside the timed part


# --- stated arithmetic ------------------------------------------------------


@pytest.mark.criterion("Stated arithmetic: Burnside (32 + 32*11)/64 = 6 certifies 4 <= 6")
def test_burnside_arithmetic():
    bound = burnside_average(64, 32 + 32 * 11)
    assert bound == 6 and 4 <= bound


@pytest.mark.criterion("Stated arithmetic: theorem2_inequality(q=7, |Gamma|=2, ar=3, Delta2=20) certifies 9 <= 21")
def test_theorem2_arithmetic():
    ineq = theorem2_inequality(q=7, gamma_size=2, antirank=3, delta2=20)
    assert ineq.lhs == 9
    assert ineq.rhs == Fraction(21), f"evaluator gives rhs {ineq.rhs}"
    assert ineq.holds


# --- oracle equivalence -----------------------------------------------------


@pytest.mark.criterion("Oracle equivalence: solver q == brute-force q (500 seeds)")
def test_oracle_chromatic_index():
    start = time.perf_counter()
    for seed in ORACLE_SEEDS:
        H = instance(seed)
        assert H.n <= 10 and H.m <= 8
        q, col = chromatic_index_exact(H)
        assert is_proper(H, col)
        assert q == oracle_chromatic_index(H), H.name
    assert time.perf_counter() - start < SUITE_SECONDS


@pytest.mark.criterion("Oracle equivalence: |Aut| == brute-force order, n <= 8 (500 seeds)")
def test_oracle_automorphisms():
    start = time.perf_counter()
    for seed in ORACLE_SEEDS:
        H = instance(seed, n_max=8)
        assert automorphisms(H).order == oracle_automorphisms(H), H.name
    assert time.perf_counter() - start < SUITE_SECONDS


@pytest.mark.criterion("Oracle equivalence: helly_check == subfamily oracle, <= 12 sets (500 seeds)")
def test_oracle_helly():
    start = time.perf_counter()
    checked = 0
    for seed in ORACLE_SEEDS:
        H = instance(seed)
        rng = random.Random(seed)
        families = [list(H.edges)]
        families.append([set(rng.sample(range(8), rng.randint(1, 4))) for _ in range(rng.randint(1, 12))])
        hg = conjecture_report(H).gamma_hypergraph
        if hg is not None:
            families.append(list(hg.hypergraph.edges))
        for fam in families:
            assert helly_check(fam).helly == oracle_helly(fam), (H.name, fam)
            checked += 1
    assert checked >= 1000
    assert time.perf_counter() - start < SUITE_SECONDS


@pytest.mark.criterion("Oracle equivalence: Burnside bound == orbit count (500 seeds)")
def test_burnside_equals_orbits():
    start = time.perf_counter()
    for seed in ORACLE_SEEDS:
        H = instance(seed)
        _, col = chromatic_index_exact(H)
        s = symmetry_summary(H, col)
        assert s.burnside.bound == len(s.orbits.blocks), H.name
    assert time.perf_counter() - start < SUITE_SECONDS


# --- theorem suites ---------------------------------------------------------


@pytest.fixture(scope="module")
def theorem_cases():
    cases = []
    for seed in THEOREM_SEEDS:
        H = instance(seed)
        cases.append((H, analyze(H)))
    return cases


@pytest.mark.criterion("Theorem suite: sandwich (ar-1)Delta <= Delta2 <= (r-1)Delta (1000 seeds)")
def test_sandwich(theorem_cases):
    for H, _ in theorem_cases:
        assert check_sandwich(H).holds, H.name


@pytest.mark.criterion("Theorem suite: Delta <= q <= Delta2 + 1, violations dumped (1000 seeds)")
def test_conjecture_direct(theorem_cases):
    failures = []
    for H, a in theorem_cases:
        mt = metrics(H)
        assert a.report.q >= mt.delta, H.name
        if a.report.q > mt.delta2 + 1:
            failures.append(dump_counterexample(ARTIFACTS, H, "q exceeds Delta_2 + 1",
                                                {"coloring": a.report.coloring.to_json()}))
    assert not failures, f"counterexamples: {failures}"


@pytest.mark.criterion("Theorem suite: orbits of T are monochromatic and q <= Burnside bound (1000 seeds)")
def test_orbits_and_burnside(theorem_cases):
    for H, a in theorem_cases:
        col = a.report.coloring
        for block in a.symmetry.orbits.blocks:
            assert len({col[e] for e in block}) == 1, H.name
        assert a.report.q <= a.symmetry.burnside.bound, H.name


@pytest.mark.criterion("Theorem suite: every two colour classes meet, solver colourings (1000 seeds)")
def test_pair_adjacency(theorem_cases):
    for H, a in theorem_cases:
        assert pair_adjacency_check(H, a.report.coloring).holds, H.name
        for seed in (1, 2):
            _, col = chromatic_index_exact(H, seed=seed)
            assert pair_adjacency_check(H, col).holds, (H.name, seed)


@pytest.mark.criterion("Theorem suite: theorem2 bound holds for every missing c0 at every pivot (1000 seeds)")
def test_theorem2_every_c0(theorem_cases):
    evaluated = 0
    for H, a in theorem_cases:
        col = a.report.coloring
        for v in pivot_candidates(H):
            r = conjecture_report(H, pivot=v, coloring=col)
            for b in r.per_c0:
                if not b.theorem2.holds:
                    dump_counterexample(ARTIFACTS, H, f"theorem2 bound fails at c0={b.c0}")
                assert b.theorem2.holds, (H.name, v, b.c0)
                evaluated += 1
    assert evaluated > 0


@pytest.mark.criterion("Theorem suite: every certificate co-occurs with a passing direct check (1000 seeds)")
def test_certificates_sound(theorem_cases):
    for H, a in theorem_cases:
        col = a.report.coloring
        t = theorem21_check(H, col, a.report.pivot)
        c = clique_condition_check(H, col, a.report.pivot)
        if a.report.certificates or t.fired or c.fired:
            assert a.report.direct.holds, H.name
        if t.fired:
            assert t.chain_holds, H.name


# --- constructed conditions -------------------------------------------------


@pytest.mark.criterion("Constructed: helly_positive(3) fires theorem21_check with q <= 2 Delta")
def test_helly_positive_theorem21():
    H, v = helly_positive(3)
    _, col = chromatic_index_exact(H)
    t = theorem21_check(H, col, v)
    assert t.applicable and t.helly.helly and t.fired
    assert t.q == t.star_size + t.missing_size
    assert t.q <= 2 * metrics(H).delta == t.two_delta


@pytest.mark.criterion("Constructed: helly_positive(8) is 3-uniform and fires clique_condition_check, |F| = 8 > 7")
def test_helly_positive_clique_condition():
    H, v = helly_positive(8)
    _, col = chromatic_index_exact(H)
    c = clique_condition_check(H, col, v)
    assert H.is_uniform() and len(H.edges[0]) == 3, (
        f"instance has edge sizes {sorted({len(e) for e in H.edges})}")
    assert c.applicable and c.k == 3 and c.threshold == 7
    assert c.fired and len(c.family) == 8
    u = c.common_vertex
    assert all(u in H.edges[i] for i in c.family)
