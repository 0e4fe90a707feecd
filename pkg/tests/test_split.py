"""Single-edge split: parameter checks, selection rule, certificates."""

import random
from fractions import Fraction

import pytest

import treesep as ts


# ---------------------------------------------------------------------------
# brute-force oracle: all (edge, side) weights via plain BFS
# ---------------------------------------------------------------------------

def all_sides(tree):
    """[(edge_id, side_weight, side_size, endpoint), ...] for every side."""
    out = []
    for eid, (u, v) in enumerate(tree.edges):
        for start, block in ((u, v), (v, u)):
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
            out.append((eid, sum(tree.weights[w] for w in seen),
                        len(seen), start))
    return out


def random_tree(rng, n):
    weights = [rng.randint(1, 10) for _ in range(n)]
    edges = []
    deg = [0] * n
    for v in range(1, n):
        u = rng.choice([u for u in range(v) if deg[u] <= 2])
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    return ts.WeightedTree(weights, edges)


def admissible_params(tree, rng):
    """Draw exact (eta, gamma) satisfying the split hypotheses."""
    prof = ts.degree_profile(tree)
    total = Fraction(tree.total_weight)
    gamma_floor = [Fraction(0)]
    if prof.omega3 is not None:
        gamma_floor.append(Fraction(prof.omega3))
    gamma_floor.append(Fraction(prof.omega1) - total)
    if prof.omega2 is not None:
        gamma_floor.append(Fraction(prof.omega2) - total / 2)
    gamma = max(gamma_floor) + Fraction(rng.randint(0, 300), 100)
    lo = (Fraction(prof.omega1) - gamma) / 2
    if prof.omega2 is not None:
        lo = max(lo, Fraction(prof.omega2) - gamma)
    hi = total / 2
    assert lo <= hi
    eta = lo + (hi - lo) * Fraction(rng.randint(0, 1000), 1000)
    return ts.SplitParams(eta, gamma)


# ---------------------------------------------------------------------------
# parameter checks
# ---------------------------------------------------------------------------

def test_params_all_hold_on_unit_path4():
    t = ts.gen_named("path", 4, 1)
    rep = ts.check_split_params(t, ts.SplitParams(1, 1))
    assert rep.ok and rep.gamma_ok and rep.lower_ok and rep.upper_ok
    # max{(1-1)/2, 1-1} = 0 <= 1 <= 2
    assert rep.eta_lower == 0 and rep.eta_upper == 2


def test_upper_bound_violation_reported_with_margin():
    t = ts.gen_named("path", 4, 1)
    rep = ts.check_split_params(t, ts.SplitParams(3, 1))
    assert not rep.ok and not rep.upper_ok
    assert rep.upper_margin == -1          # 2 - 3


def test_boundary_equalities_accepted():
    t = ts.WeightedTree([5, 5], [(0, 1)])
    rep = ts.check_split_params(t, ts.SplitParams(5, 0))
    assert rep.ok
    assert rep.gamma_margin is None        # no degree-3 vertex
    assert rep.eta_lower == Fraction(5, 2)
    assert rep.upper_margin == 0


def test_gamma_below_omega3_rejected():
    t = ts.gen_named("complete-binary", 2, 2)   # internal weights 2
    rep = ts.check_split_params(t, ts.SplitParams(3, 1))
    assert not rep.gamma_ok and rep.gamma_margin == -1


# ---------------------------------------------------------------------------
# the selection rule
# ---------------------------------------------------------------------------

def test_unit_path4_returns_first_singleton_side():
    t = ts.gen_named("path", 4, 1)
    res = ts.find_split_edge(t, ts.SplitParams(1, 1))
    assert res.edge_id == 0
    assert res.certified_weight == 1 and res.certified_size == 1
    assert 1 <= res.certified_weight <= 3


def test_two_vertex_tree_certifies_heavier_side():
    t = ts.WeightedTree([3, 5], [(0, 1)])
    res = ts.find_split_edge(t, ts.SplitParams(4, 0))
    assert res.certified_end == 1 and res.certified_weight == 5
    assert 4 <= res.certified_weight <= 8


def test_complete_binary_certifies_subtree_below_root():
    t = ts.gen_named("complete-binary", 2, 1)
    res = ts.find_split_edge(t, ts.SplitParams(2, 1))
    assert res.certified_weight == 3 and res.certified_size == 3
    assert 2 <= res.certified_weight <= 5


def test_param_error_carries_report():
    t = ts.gen_named("path", 4, 1)
    with pytest.raises(ts.ParamError) as exc:
        ts.find_split_edge(t, ts.SplitParams(3, 1))
    assert exc.value.report.upper_ok is False


def test_sizes_and_weights_always_partition_the_tree():
    t = ts.gen_named("path", 6, 2)
    res = ts.find_split_edge(t, ts.SplitParams(4, 0))
    assert res.certified_weight + res.other_weight == t.total_weight
    assert res.certified_size + res.other_size == t.n


def test_property_suite_certificate_minimality_agreement():
    rng = random.Random(20240817)
    for trial in range(150):
        t = random_tree(rng, rng.randint(2, 60))
        params = admissible_params(t, rng)
        assert ts.check_split_params(t, params).ok

        res = ts.find_split_edge(t, params)       # totality: never fails
        eta, gamma = params.eta, params.gamma

        # two-sided certificate
        assert eta <= res.certified_weight <= 2 * eta + gamma

        sides = all_sides(t)
        qualifying = [(eid, w, s, end) for eid, w, s, end in sides
                      if w >= eta]
        # the oracle agrees a certified side exists
        two_sided = [q for q in qualifying if q[1] <= 2 * eta + gamma]
        assert two_sided, "oracle found no admissible side"
        assert (res.edge_id, res.certified_weight, res.certified_size,
                res.certified_end) in [
            (eid, w, s, end) for eid, w, s, end in two_sided]

        # minimality: no qualifying side anywhere has fewer vertices
        assert res.certified_size == min(s for _, _, s, _ in qualifying)


def test_eta_at_half_total_boundary_inclusive():
    t = ts.WeightedTree([2, 2], [(0, 1)])
    res = ts.find_split_edge(t, ts.SplitParams(2, 0))
    assert res.certified_weight == 2


def test_float_mode_tolerates_boundary_noise():
    t = ts.WeightedTree([1.0, 1.0, 1.0], [(0, 1), (1, 2)])
    eta = t.total_weight / 2 + 1e-12       # nudged over the edge
    res = ts.find_split_edge(t, ts.SplitParams(eta, 0.0))
    assert res.certified_weight >= 1.0
