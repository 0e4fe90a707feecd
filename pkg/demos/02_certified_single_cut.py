"""One certified cut: find an edge whose side weight is provably boxed.

Given eta and gamma with

    gamma >= (heaviest degree-3 weight)
    max{(omega1 - gamma)/2, omega2 - gamma} <= eta <= W/2

some edge has a side weighing in [eta, 2*eta + gamma].  The search is
constructive: per edge, take the side of weight >= eta (preferring fewer
vertices); return the edge whose candidate side is globally smallest.
"""

from fractions import Fraction

import treesep as ts

tree = ts.gen_named("complete-binary", 2, 1)   # 7 unit-weight vertices
params = ts.SplitParams(eta=2, gamma=1)

report = ts.check_split_params(tree, params)
print("hypothesis report:", report)

res = ts.find_split_edge(tree, params)
print(f"\ncut edge {res.edge} -> certified side weighs "
      f"{res.certified_weight} in [2, 5], size {res.certified_size}")

# The returned side is the smallest qualifying side anywhere: compare
# with a brute-force scan of every (edge, side).
for eid, edge in enumerate(tree.edges):
    for end in edge:
        side = ts.side_vertices(tree, eid, end)
        w = sum(tree.weights[v] for v in side)
        marker = " <- chosen" if (eid, end) == (res.edge_id,
                                                res.certified_end) else ""
        print(f"  edge {edge} side at {end}: weight {w}, "
              f"size {len(side)}{marker}")

# Bisecting uses eta = (W - gamma)/3, which boxes BOTH components into
# [(W - gamma)/3, (2W + gamma)/3].
path = ts.gen_named("path", 3, 1)
sep, cert = ts.bisect(path, gamma=0)
print("\nunit 3-path bisected:",
      [c.weight for c in sep.components],
      "claims", (cert.claimed_min, cert.claimed_max))
assert cert.claimed_min == Fraction(3 - 0, 3) == 1
