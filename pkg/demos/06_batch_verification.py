"""Sweep a corpus: construct, enumerate, and verify every guarantee.

A sweep realizes each instance, runs both builders where their
hypotheses hold, runs the oracle when the subset count fits the budget,
and reduces everything to named pass/fail verdicts.  The same runs are
available from the command line:

    treesep sweep --seeds 0:25 --n 16 --ks 2,3,4
    treesep sweep --tightness 3,4,5 --ks 3,4,5 --tsv
"""

import collections

import treesep as ts

config = ts.SweepConfig(
    instances=tuple({"kind": "random", "n": 16, "seed": s,
                     "law": "uniform:1:10"} for s in range(25)),
    ks=(2, 3, 4),
    gamma="auto",
)

verdict_counts = collections.Counter()
failed = []
for report in ts.run_sweep(config):
    for name, ok in report.verdicts:
        verdict_counts[name.split(":")[-1]] += 1
        if not ok:
            failed.append((report.instance, name))

print("verdicts checked:")
for name, count in sorted(verdict_counts.items()):
    print(f"  {name:24s} x{count}")
print("failures:", failed if failed else "none")

# Equality-family sweep: the floor matches the exact optimum every time.
tight = ts.SweepConfig(
    instances=tuple({"kind": "tightness", "k": k, "omega": 1,
                     "omega_prime": 2} for k in (3, 4, 5)),
    ks=(3, 4, 5),
)
for report in ts.run_sweep(tight):
    row = next(r for r in report.details["rows"]
               if r["k"] == report.instance["k"])
    print(f"\nk={report.instance['k']}: floor "
          f"{row['max_min']['bound']} == beta {row['beta']}, "
          f"ok={report.ok}")
