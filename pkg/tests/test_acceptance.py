"""Acceptance suite: one test per criterion, one printed line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
Every tolerance is pinned here: exact (zero-tolerance) comparisons for
rational-weight instances, 1e-9 relative slack for the float twins.
"""

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

import pytest

import treesep as ts
from treesep.treeio import parse_tree, serialize_tree

REL_TOL = 1e-9

# corpus pinned by the suite: 500 seeded trees, n in [6, 24], weights 1..10
CORPUS_SEEDS = range(500)
CORPUS_KS = (2, 3, 4, 5)
ORACLE_CAP = 10 ** 6


def _line(num, ok, desc):
    print(f"{'PASS' if ok else 'FAIL'} criterion {num}: {desc}")
    assert ok, f"criterion {num}: {desc}"


def _corpus_tree(seed):
    return ts.gen_random_quasi_binary(6 + seed % 19, seed, "uniform:1:10")


@dataclass
class Run:
    seed: int
    tree: object
    k: int
    gamma: object
    maxmin: object      # BoundCertificate or None
    minmax: object


@pytest.fixture(scope="module")
def corpus():
    return [_corpus_tree(seed) for seed in CORPUS_SEEDS]


@pytest.fixture(scope="module")
def runs(corpus):
    """Both constructions on every corpus instance passing its hypothesis."""
    out = []
    for seed, tree in zip(CORPUS_SEEDS, corpus):
        gamma = ts.default_gamma(tree)
        for k in CORPUS_KS:
            if tree.n < k:
                continue
            mm = mx = None
            if ts.max_min_precondition(tree, k, gamma).ok:
                _, mm = ts.max_min_separator(tree, k, gamma)
            if ts.min_max_precondition(tree, k, gamma).ok:
                _, mx = ts.min_max_separator(tree, k, gamma)
            if mm or mx:
                out.append(Run(seed, tree, k, gamma, mm, mx))
    return out


# ---------------------------------------------------------------------------
# criterion 1: exact reproduction of the equality family
# ---------------------------------------------------------------------------

def test_criterion_1_equality_family():
    failures = []
    slowest = 0.0
    cases = 0
    for k in (3, 4, 5):
        for omega_prime in (1, 2, 5):
            t0 = time.perf_counter()
            tree = ts.gen_tightness_family(k, 1, omega_prime)
            gamma = ts.default_gamma(tree)
            bound = Fraction(tree.total_weight - (k - 1) * gamma,
                             2 * k - 1)
            beta = ts.exact_beta_k(tree, k).optimum
            elapsed = time.perf_counter() - t0
            slowest = max(slowest, elapsed)
            cases += 1
            # zero tolerance: Fractions compared for equality
            if not (beta == omega_prime == bound):
                failures.append((k, omega_prime, beta, bound))
            if elapsed >= 10.0:
                failures.append((k, omega_prime, "runtime", elapsed))
    _line(1, not failures,
          f"equality family beta_k == omega' == bound exactly for "
          f"{cases} (k, omega') cases, slowest {slowest:.2f}s"
          + (f"; failures: {failures}" if failures else ""))


# ---------------------------------------------------------------------------
# criterion 2: max-min certificates over the random corpus
# ---------------------------------------------------------------------------

def test_criterion_2_max_min_certificates(runs):
    t0 = time.perf_counter()
    exact_bad = []
    float_bad = []
    count = 0
    for run in runs:
        if run.maxmin is None:
            continue
        count += 1
        cert = run.maxmin
        if not (cert.ok and cert.achieved_min >= cert.claimed_min):
            exact_bad.append((run.seed, run.k))

        # float twin at 1e-9 relative tolerance
        ftree = ts.WeightedTree([float(w) for w in run.tree.weights],
                                run.tree.edges)
        fgamma = float(run.gamma)
        if ts.max_min_precondition(ftree, run.k, fgamma).ok:
            _, fcert = ts.max_min_separator(ftree, run.k, fgamma)
            slack = REL_TOL * max(1.0, abs(fcert.claimed_min))
            if not fcert.achieved_min >= fcert.claimed_min - slack:
                float_bad.append((run.seed, run.k))
    elapsed = time.perf_counter() - t0
    _line(2, not exact_bad and not float_bad and elapsed < 120,
          f"max-min bound held on all {count} hypothesis-passing runs "
          f"(of {len(runs)} recorded), exact and float (rel 1e-9), "
          f"{elapsed:.1f}s"
          + (f"; exact failures {exact_bad[:5]} float failures "
             f"{float_bad[:5]}" if exact_bad or float_bad else ""))


# ---------------------------------------------------------------------------
# criterion 3: min-max certificates over the same corpus
# ---------------------------------------------------------------------------

def test_criterion_3_min_max_certificates(runs):
    t0 = time.perf_counter()
    bad = []
    count = 0
    alt_pass = 0
    for run in runs:
        if run.minmax is None:
            continue
        count += 1
        cert = run.minmax
        if not (cert.ok and cert.achieved_max <= cert.claimed_max):
            bad.append((run.seed, run.k))
        alt_pass += bool(cert.alt_max_ok)
    elapsed = time.perf_counter() - t0
    rate = alt_pass / count if count else 0.0
    _line(3, not bad and elapsed < 120,
          f"min-max k*gamma bound held on {count} runs; (k-1)*gamma "
          f"variant passed {alt_pass}/{count} ({rate:.1%}, tallied only), "
          f"{elapsed:.1f}s"
          + (f"; failures {bad[:5]}" if bad else ""))


# ---------------------------------------------------------------------------
# criterion 4: oracle dominance and the averaging identity
# ---------------------------------------------------------------------------

def test_criterion_4_oracle_dominance(runs):
    t0 = time.perf_counter()
    bad = []
    checked = 0
    for run in runs:
        if math.comb(len(run.tree.edges), run.k - 1) > ORACLE_CAP:
            continue
        checked += 1
        beta = ts.exact_beta_k(run.tree, run.k).optimum
        alpha = ts.exact_alpha_k(run.tree, run.k).optimum
        mean = Fraction(run.tree.total_weight, run.k)
        if not beta <= mean <= alpha:
            bad.append((run.seed, run.k, "averaging"))
        if run.maxmin and not beta >= run.maxmin.achieved_min:
            bad.append((run.seed, run.k, "beta-dominance"))
        if run.minmax and not alpha <= run.minmax.achieved_max:
            bad.append((run.seed, run.k, "alpha-dominance"))
    elapsed = time.perf_counter() - t0
    _line(4, not bad,
          f"oracle dominance and beta <= W/k <= alpha on {checked} "
          f"(instance, k) pairs, {elapsed:.1f}s"
          + (f"; failures {bad[:5]}" if bad else ""))


# ---------------------------------------------------------------------------
# criterion 5: certified split property suite
# ---------------------------------------------------------------------------

def _test_side_table(tree):
    """Independent subtree sums: BFS orders, explicit accumulation."""
    n = tree.n
    parent = [-1] * n
    order = []
    queue = [0]
    seen = [False] * n
    seen[0] = True
    while queue:
        nxt = []
        for v in queue:
            order.append(v)
            for u in tree.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    parent[u] = v
                    nxt.append(u)
        queue = nxt
    w = list(tree.weights)
    s = [1] * n
    for v in reversed(order):
        if parent[v] >= 0:
            w[parent[v]] += w[v]
            s[parent[v]] += s[v]
    sides = []
    for eid, (a, b) in enumerate(tree.edges):
        child = b if parent[b] == a else a
        sides.append((eid, w[child], s[child]))
        sides.append((eid, tree.total_weight - w[child], n - s[child]))
    return sides


def _bfs_side(tree, eid, start):
    a, b = tree.edges[eid]
    block = b if start == a else a
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in tree.adjacency[x]:
            if x == start and y == block:
                continue
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return sum(tree.weights[v] for v in seen), len(seen)


def test_criterion_5_split_property_suite():
    t0 = time.perf_counter()
    bad = []
    for seed in range(1000):
        rng = random.Random(seed)
        tree = ts.gen_random_quasi_binary(2 + seed % 199, seed)
        prof = ts.degree_profile(tree)
        total = Fraction(tree.total_weight)

        floor = [Fraction(0), Fraction(prof.omega1) - total]
        if prof.omega3 is not None:
            floor.append(Fraction(prof.omega3))
        if prof.omega2 is not None:
            floor.append(Fraction(prof.omega2) - total / 2)
        gamma = max(floor) + Fraction(rng.randint(0, 300), 100)
        lo = (Fraction(prof.omega1) - gamma) / 2
        if prof.omega2 is not None:
            lo = max(lo, Fraction(prof.omega2) - gamma)
        eta = lo + (total / 2 - lo) * Fraction(rng.randint(0, 1000), 1000)
        params = ts.SplitParams(eta, gamma)
        if not ts.check_split_params(tree, params).ok:
            bad.append((seed, "params"))
            continue

        res = ts.find_split_edge(tree, params)
        if not eta <= res.certified_weight <= 2 * eta + gamma:
            bad.append((seed, "certificate"))
        sides = _test_side_table(tree)
        qual_sizes = [sz for _, wt, sz in sides if wt >= eta]
        if res.certified_size != min(qual_sizes):
            bad.append((seed, "minimality"))
        if not any(wt >= eta and wt <= 2 * eta + gamma
                   for _, wt, sz in sides):
            bad.append((seed, "oracle-existence"))
        if seed % 10 == 0:
            # slow fully-independent spot check of the side table
            wt, sz = _bfs_side(tree, res.edge_id, res.certified_end)
            if (wt, sz) != (res.certified_weight, res.certified_size):
                bad.append((seed, "side-mismatch"))
    elapsed = time.perf_counter() - t0
    _line(5, not bad and elapsed < 60,
          f"1000 certified splits: bounds, minimality, oracle agreement, "
          f"{elapsed:.1f}s" + (f"; failures {bad[:5]}" if bad else ""))


# ---------------------------------------------------------------------------
# criterion 6: single-cut exactness on the unit 3-path
# ---------------------------------------------------------------------------

def test_criterion_6_single_cut_exactness():
    tree = ts.gen_named("path", 3, 1)
    _, cert = ts.bisect(tree, 0)
    beta = ts.exact_beta_k(tree, 2).optimum
    alpha = ts.exact_alpha_k(tree, 2).optimum
    ok = (beta == 1 == cert.claimed_min == cert.achieved_min
          and alpha == 2 == cert.claimed_max == cert.achieved_max)
    _line(6, ok,
          "unit 3-path meets both single-cut bounds with equality "
          f"(min {cert.achieved_min} == {cert.claimed_min}, "
          f"max {cert.achieved_max} == {cert.claimed_max})")


# ---------------------------------------------------------------------------
# criterion 7: structural identities and round trips at scale
# ---------------------------------------------------------------------------

def test_criterion_7_structure_and_roundtrip():
    t0 = time.perf_counter()
    bad = 0
    for i in range(10_000):
        tree = ts.gen_random_quasi_binary(2 + i % 499, i)
        prof = ts.degree_profile(tree)
        if prof.n1 != prof.n3 + 2:
            bad += 1
        if prof.omega3 is not None:
            if not (prof.omega1 >= prof.omega2 >= prof.omega3):
                bad += 1
            if (prof.omega1 * prof.n1 + prof.omega2 * prof.n2
                    + prof.omega3 * prof.n3) < tree.total_weight:
                bad += 1
        if parse_tree(serialize_tree(tree)) != tree:
            bad += 1
        if parse_tree(serialize_tree(tree, "text")) != tree:
            bad += 1
    elapsed = time.perf_counter() - t0
    _line(7, bad == 0,
          f"degree/weight identities and both-format round trips on "
          f"10000 trees (n up to 500), {elapsed:.1f}s; {bad} failures")


# ---------------------------------------------------------------------------
# criterion 8: degenerate k handling
# ---------------------------------------------------------------------------

def test_criterion_8_degenerate_handling(corpus):
    problems = []

    checked = 0
    for tree in corpus[:50]:
        gamma = ts.default_gamma(tree)
        if not ts.bisect_precondition(tree, gamma).ok:
            continue
        checked += 1
        base = ts.bisect(tree, gamma)
        if ts.max_min_separator(tree, 2, gamma) != base \
                or ts.min_max_separator(tree, 2, gamma) != base:
            problems.append("k=2 delegation not bit-identical")
            break

    k3 = 0
    for tree in corpus:
        gamma = ts.default_gamma(tree)
        if not ts.min_max_precondition(tree, 3, gamma).ok:
            continue
        _, cert = ts.min_max_separator(tree, 3, gamma)
        k3 += 1
        if cert.proven:
            problems.append("k=3 run claims a proven schedule")
            break
        if not cert.ok:
            problems.append(f"k=3 runtime certificate failed: {cert}")
            break
        if k3 >= 100:
            break

    for k in (3, 4, 5):
        try:
            ts.eta_schedule(2 * k - 3, k, 10, 10, 0)
            problems.append(f"no degenerate-schedule error at k={k}")
        except ts.DegenerateScheduleError:
            pass

    _line(8, not problems,
          f"k=2 delegation bit-identical on {checked} instances, k=3 "
          f"fallback checked on {k3} runs, schedule degeneracy raises"
          + (f"; problems: {problems}" if problems else ""))
