"""The family where the max-min floor is achieved exactly.

A root of weight w' reaches k-1 branch vertices of weight w, each
holding two pendant leaves of weight w'.  With gamma set to the
heaviest degree-3 weight (= w), the floor

    (W - (k-1)*gamma) / (2k - 1)

collapses to exactly w', and exhaustive search confirms beta_k = w':
the guarantee cannot be improved in general.
"""

import treesep as ts

for k in (3, 4, 5):
    for omega_prime in (1, 2, 5):
        tree = ts.gen_tightness_family(k, omega=1,
                                       omega_prime=omega_prime)
        gamma = ts.default_gamma(tree)
        _, cert = ts.max_min_separator(tree, k, gamma)
        beta = ts.exact_beta_k(tree, k)
        print(f"k={k} w'={omega_prime}: W={tree.total_weight}, "
              f"floor={cert.claimed_min}, beta_k={beta.optimum}")
        assert cert.claimed_min == beta.optimum == omega_prime

print("\nfloor == exact optimum == w' on every instance: the bound is "
      "tight")

# The family stays degree-3-capped for every k: large fan-outs go
# through weightless internal vertices, and the root keeps degree <= 2
# so the heaviest degree-3 vertex is a branch vertex of weight w.
big = ts.gen_tightness_family(9, 1, 2)
print("\nk=9 realization:", big.n, "vertices,",
      "max degree", max(big.degrees),
      "root degree", big.degrees[0])
print("degree-3 weights:",
      sorted({big.weights[v] for v in range(big.n)
              if big.degrees[v] == 3}))
