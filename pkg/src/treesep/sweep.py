"""Batch verification: run constructions against the oracle over a corpus.

A sweep realizes each configured instance, runs both peeling
constructions wherever their hypotheses hold, runs the exhaustive oracle
when the subset count fits the budget, and turns every certificate and
dominance relation into a named verdict.  Per-instance failures are
verdicts, not aborts; the caller decides the exit code from ``ok``.
"""

from __future__ import annotations

import dataclasses
import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import TreeSepError
from .generators import GenSpec
from .oracle import configured_budget, exact_alpha_k, exact_beta_k
from .separators import (default_gamma, max_min_precondition,
                         max_min_separator, min_max_precondition,
                         min_max_separator, _slack)
from .tree import degree_profile, div, tol_for
from .treeio import read_tree


def jsonable(obj):
    """Recursively convert results to JSON-ready data.

    Fractions become ints when integral, else "p/q" strings; dataclasses
    become dicts; tuples become lists.
    """
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else str(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: jsonable(getattr(obj, f.name))
                for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


@dataclass(frozen=True)
class SweepConfig:
    instances: tuple          # dicts: {"kind": "file", "path": ...} or GenSpec dicts
    ks: tuple[int, ...]
    gamma: object = "auto"    # "auto" or a number
    budget: int | None = None
    oracle: bool = True
    exact: bool = False       # parse mode for file instances

    @classmethod
    def from_dict(cls, d: dict) -> "SweepConfig":
        return cls(instances=tuple(d["instances"]),
                   ks=tuple(int(k) for k in d["ks"]),
                   gamma=d.get("gamma", "auto"),
                   budget=d.get("budget"),
                   oracle=bool(d.get("oracle", True)),
                   exact=bool(d.get("exact", False)))


@dataclass(frozen=True)
class RunReport:
    """Everything one instance produced: verdicts plus raw numbers."""

    instance: dict
    ok: bool
    verdicts: tuple            # ((name, bool), ...)
    details: dict
    elapsed: float


def _realize(spec: dict, exact: bool):
    if spec.get("kind") == "file":
        return read_tree(spec["path"], exact=exact)
    return GenSpec.from_dict(spec).realize()


def run_sweep(config: SweepConfig):
    """Yield one RunReport per configured instance, in config order."""
    budget = config.budget if config.budget is not None \
        else configured_budget()
    for spec in config.instances:
        yield _run_instance(dict(spec), config, budget)


def _run_instance(spec, config, budget) -> RunReport:
    t0 = time.perf_counter()
    verdicts = []
    details = {"rows": []}

    try:
        tree = _realize(spec, config.exact)
    except TreeSepError as exc:
        verdicts.append(("realize", False))
        details["error"] = str(exc)
        return RunReport(instance=spec, ok=False, verdicts=tuple(verdicts),
                         details=details,
                         elapsed=time.perf_counter() - t0)

    valid = tree.validation.ok
    verdicts.append(("valid", valid))
    if not valid:
        details["violations"] = list(tree.validation.violations)
        return RunReport(instance=spec, ok=False, verdicts=tuple(verdicts),
                         details=details,
                         elapsed=time.perf_counter() - t0)

    gamma = default_gamma(tree) if config.gamma == "auto" else config.gamma
    total = tree.total_weight
    prof = degree_profile(tree)
    details["n"] = tree.n
    details["total_weight"] = jsonable(total)
    details["gamma"] = jsonable(gamma)
    verdicts.append(("degree-count-identity", prof.n1 == prof.n3 + 2))

    for k in config.ks:
        row = {"k": k}
        if not (2 <= k <= tree.n):
            details["rows"].append(row)
            continue
        tol = tol_for(*tree.weights, gamma)

        amin = amax = None
        if max_min_precondition(tree, k, gamma).ok:
            sep, cert = max_min_separator(tree, k, gamma)
            amin = cert.achieved_min
            row["max_min"] = {"bound": jsonable(cert.claimed_min),
                              "achieved": jsonable(amin),
                              "ok": cert.ok}
            verdicts.append((f"k={k}:max-min-bound", cert.ok))
            ssum = sum(c.weight for c in sep.components)
            verdicts.append((f"k={k}:components-sum",
                             abs(ssum - total) <= tol))

        if min_max_precondition(tree, k, gamma).ok:
            sep, cert = min_max_separator(tree, k, gamma)
            amax = cert.achieved_max
            row["min_max"] = {"bound": jsonable(cert.claimed_max),
                              "achieved": jsonable(amax),
                              "ok": cert.ok,
                              "alt_bound_ok": cert.alt_max_ok,
                              "clamped_steps": list(cert.clamped_steps)}
            verdicts.append((f"k={k}:min-max-bound", cert.ok))

        if config.oracle and math.comb(len(tree.edges), k - 1) <= budget:
            beta = exact_beta_k(tree, k, budget)
            alpha = exact_alpha_k(tree, k, budget)
            row["beta"] = jsonable(beta.optimum)
            row["alpha"] = jsonable(alpha.optimum)
            mean = div(total, k)
            verdicts.append(
                (f"k={k}:averaging",
                 beta.optimum <= mean + _slack(mean, beta.optimum)
                 and alpha.optimum >= mean - _slack(mean, alpha.optimum)))
            if amin is not None:
                verdicts.append(
                    (f"k={k}:beta-dominance",
                     beta.optimum >= amin - _slack(amin, beta.optimum)))
            if amax is not None:
                verdicts.append(
                    (f"k={k}:alpha-dominance",
                     alpha.optimum <= amax + _slack(amax, alpha.optimum)))
        details["rows"].append(row)

    ok = all(flag for _, flag in verdicts)
    return RunReport(instance=spec, ok=ok, verdicts=tuple(verdicts),
                     details=details, elapsed=time.perf_counter() - t0)


def tsv_rows(report: RunReport):
    """Flatten a report into plottable rows (one per k)."""
    label = ":".join(f"{k}={v}" for k, v in sorted(report.instance.items()))
    for row in report.details.get("rows", []):
        mm = row.get("max_min", {})
        mx = row.get("min_max", {})
        yield [label, row.get("k"),
               report.details.get("total_weight"),
               report.details.get("gamma"),
               mm.get("bound"), mm.get("achieved"),
               mx.get("bound"), mx.get("achieved"),
               row.get("beta"), row.get("alpha"),
               report.ok]


TSV_HEADER = ["instance", "k", "total_weight", "gamma",
              "max_min_bound", "max_min_achieved",
              "min_max_bound", "min_max_achieved",
              "beta", "alpha", "instance_ok"]
