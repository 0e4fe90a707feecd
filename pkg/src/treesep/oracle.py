"""Ground-truth optima by exhaustive enumeration of edge subsets.

``exact_beta_k`` / ``exact_alpha_k`` scan every (k-1)-subset of edges and
evaluate the induced components with a union-find rebuilt per subset, so
the result does not depend on any of the traversal machinery it is used
to check.  Enumeration is in lexicographic order over edge ids and only
strict improvements replace the incumbent, which makes the reported
witness the lexicographically smallest optimal subset.

Rational weights (and any weights of an exact tree) are scaled to
integers up front, so comparisons and tie detection are exact; float
trees are compared as floats.  Budgets are enforced by refusing runs
whose subset count exceeds them, never by approximating.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import BudgetExceededError
from .tree import Component, Number, WeightedTree

DEFAULT_BUDGET = 10 ** 8
BUDGET_ENV_VAR = "TREESEP_ORACLE_BUDGET"


@dataclass(frozen=True)
class OracleResult:
    k: int
    objective: str              # "max-min" | "min-max"
    optimum: Number
    witness: tuple[int, ...]    # lexicographically smallest optimal subset
    subsets_examined: int


def configured_budget() -> int:
    return int(os.environ.get(BUDGET_ENV_VAR, DEFAULT_BUDGET))


def evaluate_separator(tree: WeightedTree, edge_ids) -> tuple[Component, ...]:
    """Components induced by deleting the given edges, sorted by rep."""
    tree.require_valid()
    ids = tuple(edge_ids)
    if len(set(ids)) != len(ids):
        raise ValueError(f"duplicate edge ids in {ids!r}")
    for eid in ids:
        if not (isinstance(eid, int) and 0 <= eid < len(tree.edges)):
            raise ValueError(f"unknown edge id {eid!r}")

    n = tree.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    drop = set(ids)
    for eid, (u, v) in enumerate(tree.edges):
        if eid in drop:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[rv] = ru

    groups = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    comps = []
    for members in groups.values():
        comps.append(Component(rep=members[0],
                               weight=sum(tree.weights[v] for v in members),
                               size=len(members),
                               vertices=tuple(members)))
    return tuple(sorted(comps, key=lambda c: c.rep))


def exact_beta_k(tree: WeightedTree, k: int,
                 budget: int | None = None) -> OracleResult:
    """Largest achievable minimum component weight over all k-separators."""
    mn, mx, count = _scan(tree, k, budget)
    return OracleResult(k=k, objective="max-min", optimum=mn[0],
                        witness=mn[1], subsets_examined=count)


def exact_alpha_k(tree: WeightedTree, k: int,
                  budget: int | None = None) -> OracleResult:
    """Smallest achievable maximum component weight over all k-separators."""
    mn, mx, count = _scan(tree, k, budget)
    return OracleResult(k=k, objective="min-max", optimum=mx[0],
                        witness=mx[1], subsets_examined=count)


def _scan(tree, k, budget):
    tree.require_valid()
    n = tree.n
    if not (isinstance(k, int) and 2 <= k <= n):
        raise ValueError(f"k must satisfy 2 <= k <= n, got k={k!r}, n={n}")
    if budget is None:
        budget = configured_budget()
    m = len(tree.edges)
    count = math.comb(m, k - 1)
    if count > budget:
        raise BudgetExceededError(
            f"C({m}, {k - 1}) = {count} subsets exceeds budget {budget}")
    return _scan_cached(tree, k) + (count,)


@lru_cache(maxsize=256)
def _scan_cached(tree, k):
    """One pass over all subsets, tracking both objectives."""
    n = tree.n
    m = len(tree.edges)
    us = [e[0] for e in tree.edges]
    vs = [e[1] for e in tree.edges]

    if tree.exact:
        scale = math.lcm(*(Fraction(w).denominator for w in tree.weights))
        ws = [int(w * scale) for w in tree.weights]
    else:
        scale = None
        ws = list(tree.weights)

    proto = list(range(n))
    best_min = None     # (value, witness) for max-min
    best_max = None     # (value, witness) for min-max

    for sub in combinations(range(m), k - 1):
        parent = proto.copy()
        acc = ws.copy()
        # walk the kept-edge ranges between the removed ids (sub is sorted)
        prev = -1
        for cut in sub:
            for eid in range(prev + 1, cut):
                _union(parent, acc, us[eid], vs[eid])
            prev = cut
        for eid in range(prev + 1, m):
            _union(parent, acc, us[eid], vs[eid])

        mn = mx = None
        for v in range(n):
            if parent[v] == v:
                w = acc[v]
                if mn is None or w < mn:
                    mn = w
                if mx is None or w > mx:
                    mx = w
        if best_min is None or mn > best_min[0]:
            best_min = (mn, sub)
        if best_max is None or mx < best_max[0]:
            best_max = (mx, sub)

    def restore(value):
        return Fraction(value, scale) if scale is not None else value

    return ((restore(best_min[0]), best_min[1]),
            (restore(best_max[0]), best_max[1]))


def _union(parent, acc, u, v):
    while parent[u] != u:
        parent[u] = parent[parent[u]]
        u = parent[u]
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    # u != v always: the kept edges of a tree never close a cycle
    parent[v] = u
    acc[u] += acc[v]
