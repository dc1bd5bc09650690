"""Acceptance gate: every criterion at its stated tolerance and runtime budget.

Each test records one PASS/FAIL line (printed in the terminal summary) and
then asserts the same condition, so a red line is also a failed test.
"""

import math
import os
import time

import numpy as np
import pytest
from scipy.stats import spearmanr

import oracles
from acceptance_log import record
from netimbalance import graph as gen
from netimbalance.experiments import (
    ER_GRID,
    WS_GRID,
    SweepSpec,
    ba_qos_reversal,
    pooled_se,
    run_sweep,
    steepest_drop,
    ws_metric_comparison,
)
from netimbalance.metric import (
    PROFILE_A,
    PROFILE_B,
    QoSProfile,
    imbalance,
    imbalance_from_histogram,
    imbalance_gradient,
    mohar_sufficient_h0,
)
from netimbalance.optimizer import greedy_edge_addition
from netimbalance.paths import all_pairs_histogram, diameter


def check(number, ok, detail, start, budget):
    elapsed = time.perf_counter() - start
    within = elapsed < budget
    if not within:
        detail += f"; runtime over {budget}s budget"
    record(number, ok and within, detail, elapsed)
    assert ok and within, detail


def random_graph(rng, max_n, connected=False):
    """Mixed-model random graph; with ``connected`` it is redrawn until connected."""
    while True:
        n = int(rng.integers(3, max_n + 1))
        seed = int(rng.integers(2**32))
        kind = rng.choice(["er", "ba", "ws", "subset"])
        if kind == "er":
            g = gen.erdos_renyi(n, float(rng.uniform(0.05, 0.9)), seed)
        elif kind == "ba":
            g = gen.barabasi_albert(n, int(rng.integers(1, n)), seed)
        elif kind == "ws":
            k = 2 * int(rng.integers(1, (n - 1) // 2 + 1))
            g = gen.watts_strogatz(n, k, float(rng.uniform(0, 1)), seed)
        else:
            pairs = oracles.all_pairs(n)
            keep = rng.random(len(pairs)) < rng.uniform(0, 1)
            g = gen.from_edges(n, [e for e, k in zip(pairs, keep) if k])
        if not connected or gen.is_connected(g):
            return g


def test_criterion_01_complete_graph_zero():
    start = time.perf_counter()
    worst = 0.0
    for n in (3, 10, 50):
        hist = all_pairs_histogram(gen.complete(n))
        for a in (0.1, 0.5, 1.0, 5.0, 100.0):
            for h0 in (0.5, 1.0, 2.0, 4.0, 10.0):
                worst = max(worst, abs(imbalance_from_histogram(hist, QoSProfile(a, h0)).I))
    check(1, worst <= 1e-12, f"max |I(K_n)| = {worst:.3g} over n in {{3,10,50}} x 5x5 grid", start, 1.0)


def test_criterion_02_empty_graph():
    start = time.perf_counter()
    value = imbalance(gen.erdos_renyi(50, 0.0, 0), QoSProfile(1, 4)).I
    check(2, value == 1.0, f"I(ER(50, p=0)) = {value!r}", start, 1.0)


def test_criterion_03_star_limit():
    start = time.perf_counter()
    value = imbalance(gen.star(50), QoSProfile(100, 1.5)).I
    target = 1 - math.log2(98) / math.log2(2450)
    err = abs(value - target)
    check(3, err < 1e-6, f"I(star50) = {value:.10f}, limit {target:.10f}, error {err:.2e}", start, 1.0)


def test_criterion_04_diameter_sufficiency():
    start = time.perf_counter()
    rng = np.random.default_rng(4)
    worst_diam = worst_mohar = 0.0
    for _ in range(50):
        g = random_graph(rng, 50, connected=True)
        hist = all_pairs_histogram(g)
        worst_diam = max(worst_diam, imbalance_from_histogram(hist, QoSProfile(60, diameter(hist) + 1)).I)
        worst_mohar = max(worst_mohar, imbalance_from_histogram(hist, QoSProfile(60, mohar_sufficient_h0(g))).I)
    ok = worst_diam < 1e-3 and worst_mohar < 1e-3
    check(4, ok, f"max I at h0=diam+1: {worst_diam:.2e}; at spectral h0: {worst_mohar:.2e}", start, 10.0)


def test_criterion_05_non_monotone_witness():
    start = time.perf_counter()
    p = QoSProfile(2, 3)
    c8 = gen.ring(8)
    chord = gen.add_edge(c8, 0, 4)
    before, after = imbalance(c8, p).I, imbalance(chord, p).I
    ob = oracles.pairwise_imbalance(8, c8.edges(), 2, 3)
    oa = oracles.pairwise_imbalance(8, chord.edges(), 2, 3)
    match = abs(before - ob) < 1e-12 and abs(after - oa) < 1e-12
    ok = match and after > before
    detail = f"I(C8) = {before:.6f}, I(C8+(0,4)) = {after:.6f}, oracle match {match}; need the chord to raise I"
    check(5, ok, detail, start, 1.0)


def test_criterion_06_histogram_oracle():
    start = time.perf_counter()
    rng = np.random.default_rng(6)
    worst = 0.0
    for _ in range(200):
        g = random_graph(rng, 30)
        a, h0 = float(rng.uniform(0.1, 10)), float(rng.uniform(0.5, 8))
        lib = imbalance(g, QoSProfile(a, h0)).I
        worst = max(worst, abs(lib - oracles.pairwise_imbalance(g.n, g.edges(), a, h0)))
    check(6, worst < 1e-12, f"max |I_hist - I_pairwise| = {worst:.2e} over 200 graphs", start, 30.0)


def test_criterion_07_gradient():
    start = time.perf_counter()
    rng = np.random.default_rng(7)
    step, cases, skipped, worst = 1e-5, 0, 0, 0.0
    while cases < 100:
        g = random_graph(rng, 30)
        hist = all_pairs_histogram(g)
        if not hist.counts:
            skipped += 1
            continue
        a, h0 = float(rng.uniform(0.2, 5)), float(rng.uniform(0.5, 6))
        grad = imbalance_gradient(hist, QoSProfile(a, h0))
        # the difference quotient carries ~1e-11 absolute roundoff at this step,
        # so a relative check is only meaningful for |dI| >= 1e-5
        if min(abs(x) for x in grad) < 1e-5:
            skipped += 1
            continue
        fd = (
            oracles.central_difference(lambda x: imbalance_from_histogram(hist, QoSProfile(x, h0)).I, a, step),
            oracles.central_difference(lambda x: imbalance_from_histogram(hist, QoSProfile(a, x)).I, h0, step),
        )
        worst = max(worst, *(abs(an - num) / abs(num) for an, num in zip(grad, fd)))
        cases += 1
    check(7, worst < 1e-5, f"max relative error {worst:.2e} over 100 cases ({skipped} degenerate draws skipped)", start, 30.0)


def test_criterion_08_er_percolation():
    start = time.perf_counter()
    profile = QoSProfile(1, 4)
    grid = sorted(set(ER_GRID) | {0.005})
    res = run_sweep(SweepSpec("er", 50, grid, (profile,), runs=20, base_seed=0))
    params, means, _ = res.curve(profile)
    at = dict(zip(params.tolist(), means.tolist()))
    lo, hi = steepest_drop(params, means)
    parts = {
        "I(p=0.005) >= 0.8": at[0.005] >= 0.8,
        "I(p=0.4) <= 0.02": at[0.4] <= 0.02,
        "steepest drop in [0.01, 0.1]": 0.01 <= lo and hi <= 0.1,
    }
    detail = (
        f"mean I(0.005) = {at[0.005]:.3f}, mean I(0.4) = {at[0.4]:.4f}, steepest drop on [{lo}, {hi}]; "
        + ", ".join(f"{k}: {'ok' if v else 'no'}" for k, v in parts.items())
    )
    check(8, all(parts.values()), detail, start, 120.0)


def test_criterion_09_ba_reversal():
    start = time.perf_counter()
    rev = ba_qos_reversal(n=50, m_attach=3, runs=20, seed=0, a=2.0)
    strict, lenient = rev.strict.mean_I, rev.lenient.mean_I
    ok = strict > lenient and lenient < 0.05
    check(9, ok, f"mean I(h0=1) = {strict:.4f}, mean I(h0=4) = {lenient:.5f}", start, 60.0)


def test_criterion_10_ws_trend():
    start = time.perf_counter()
    profile = QoSProfile(1, 4)
    res = run_sweep(SweepSpec("ws", 50, WS_GRID, (profile,), runs=20, base_seed=0, k=4))
    _, means, stds = res.curve(profile)
    bad_steps = [
        i for i in range(len(means) - 1)
        if means[i + 1] > means[i] + pooled_se(stds[i], stds[i + 1], 20)
    ]
    ok = means[-1] < means[0] and not bad_steps
    detail = f"mean I {means[0]:.4f} at p=0.001 -> {means[-1]:.4f} at p=1; steps rising beyond one SE: {bad_steps}"
    check(10, ok, detail, start, 120.0)


def test_criterion_11_dumbbell():
    start = time.perf_counter()
    size, outcomes = 25, []
    for seed in range(5):
        g, _ = gen.dumbbell(size, seed=seed)
        res = greedy_edge_addition(g, PROFILE_A)
        u, v = res.chosen_edges[0]
        cross = (u < size) != (v < size)
        b_before, b_after = imbalance(g, PROFILE_B).I, imbalance(res.graph, PROFILE_B).I
        outcomes.append(cross and res.i_after < res.i_before and b_after <= b_before)
    check(11, all(outcomes), f"seeds 0-4 directional outcomes {outcomes}", start, 60.0)


def test_criterion_12_metric_concordance():
    start = time.perf_counter()
    rows = ws_metric_comparison(n=50, k=4, p_grid=WS_GRID, profile=QoSProfile(1, 4), runs=20, seed=0)
    I = np.array([r.I for r in rows])
    jain = np.array([r.jain_unfairness for r in rows])
    var = np.array([r.path_variance for r in rows])
    rho = spearmanr(I, jain).statistic
    small = len(rows) // 2
    var_peak, i_peak = int(np.argmax(var)), int(np.argmax(I))
    concordant = rho > 0.8
    distinct_peak = var_peak < small and i_peak != var_peak
    detail = (
        f"Spearman(I, Jain) = {rho:.3f} ({'ok' if concordant else 'no'}); "
        f"path_variance peaks at p={rows[var_peak].p:.4g}, I peaks at p={rows[i_peak].p:.4g} "
        f"({'ok' if distinct_peak else 'no'}: need distinct peaks)"
    )
    check(12, concordant and distinct_peak, detail, start, 120.0)


AS_EDGES = os.environ.get("NETIMB_AS_EDGES")


@pytest.mark.skipif(not AS_EDGES, reason="set NETIMB_AS_EDGES to an AS edge-list file")
def test_criterion_13_as_snapshot():
    start = time.perf_counter()
    g = gen.read_edge_list(AS_EDGES)
    value = imbalance(g, QoSProfile(1.0, 4.0), threads=None).I
    check(13, value < 0.02, f"n={g.n}, m={g.m}, I = {value:.5f}", start, 300.0)
