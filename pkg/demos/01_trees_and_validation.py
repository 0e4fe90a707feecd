"""Build weighted trees, validate them, and read their degree structure.

Everything in this package operates on vertex-weighted trees whose
degrees never exceed 3.  Validation never raises: it reports every
violated invariant so you can inspect bad candidates.
"""

import treesep as ts

# -- a valid tree ----------------------------------------------------------

tree = ts.WeightedTree(weights=[1, 2, 4], edges=[(0, 1), (1, 2)])
print("three-vertex path:", ts.validate(tree))
print("total weight:", tree.total_weight)

# Degree classes: n1/n2/n3 count the vertices of degree 1/2/3 and
# omega_i is the heaviest weight among vertices of degree >= i.
print("profile:", ts.degree_profile(tree))

# Handy identity: in any tree with max degree 3 and n > 1 the leaf count
# exceeds the degree-3 count by exactly 2.
prof = ts.degree_profile(ts.gen_random_quasi_binary(200, seed=1))
print("n1 =", prof.n1, " n3 + 2 =", prof.n3 + 2)

# -- invalid candidates are data, not exceptions ---------------------------

star = ts.WeightedTree([1] * 5, [(0, 1), (0, 2), (0, 3), (0, 4)])
print("\ndegree-4 star:", ts.validate(star))

negative = ts.WeightedTree([1, -2, 0.5], [(0, 1), (1, 2)])
print("nonpositive total:", ts.validate(negative))

# -- per-edge component table ----------------------------------------------

# One traversal gives, for every edge, the weight and size of the
# component on the far side from a chosen root.
table = ts.edge_side_table(tree, root=0)
for eid in range(len(tree.edges)):
    distal, near = table.sides(eid)
    print(f"edge {tree.edges[eid]}: far side {distal}, near side {near}")
