"""Exact optima by exhaustive enumeration, used to audit constructions.

beta_k = the best achievable minimum component weight (max-min optimum)
alpha_k = the best achievable maximum component weight (min-max optimum)

The oracle tries every (k-1)-subset of edges with a per-subset
union-find, in exact rational arithmetic whenever the weights allow it.
It refuses budgets it cannot honour instead of approximating.
"""

from fractions import Fraction

import treesep as ts

tree = ts.gen_random_quasi_binary(18, seed=11, weight_law="uniform:1:10")
gamma = ts.default_gamma(tree)
W = tree.total_weight
print(f"n={tree.n}, W={W}")

for k in (2, 3, 4):
    beta = ts.exact_beta_k(tree, k)
    alpha = ts.exact_alpha_k(tree, k)
    print(f"\nk={k}: beta={beta.optimum} (witness {beta.witness}), "
          f"alpha={alpha.optimum}, {beta.subsets_examined} subsets")

    # sandwich: no separator can beat the per-component average
    assert beta.optimum <= Fraction(W, k) <= alpha.optimum

    # constructions are dominated by the exact optima
    _, mm = ts.max_min_separator(tree, k, gamma)
    _, mx = ts.min_max_separator(tree, k, gamma)
    print(f"  constructed min {mm.achieved_min} <= beta, "
          f"constructed max {mx.achieved_max} >= alpha")
    assert mm.achieved_min <= beta.optimum
    assert mx.achieved_max >= alpha.optimum

# evaluate any edge set directly:
comps = ts.evaluate_separator(tree, beta.witness)
print("\nwitness components:", [(c.rep, c.weight, c.size) for c in comps])

# budget refusal is explicit, never silent approximation
big = ts.gen_random_quasi_binary(40, seed=0)
try:
    ts.exact_beta_k(big, 6, budget=1000)
except ts.BudgetExceededError as exc:
    print("\nrefused:", exc)
