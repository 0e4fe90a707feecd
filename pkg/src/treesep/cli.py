"""Command-line surface.

Subcommands: check, split, separate, oracle, gen, sweep.  Output is JSON
on stdout (``sweep --tsv`` emits a flat table instead).  Exit codes:
0 success, 1 verdict or precondition failure, 2 usage or parse error.
TREESEP_ORACLE_BUDGET overrides the default oracle budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import (BudgetExceededError, ParamError, ParseError,
                     TreeSepError)
from .generators import gen_named, gen_random_quasi_binary, \
    gen_tightness_family
from .oracle import exact_alpha_k, exact_beta_k
from .separators import bisect, default_gamma, max_min_separator, \
    min_max_separator
from .split import SplitParams, find_split_edge
from .sweep import TSV_HEADER, SweepConfig, jsonable, run_sweep, tsv_rows
from .tree import degree_profile, validate
from .treeio import read_tree, serialize_tree


def _number(text, exact=False):
    """CLI numeric argument: int stays int, else Fraction/float."""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return Fraction(text) if exact else float(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _exact_number(text):
    return _number(text, exact=True)


def _emit(payload):
    print(json.dumps(jsonable(payload), indent=2, sort_keys=True))


def _load(args):
    return read_tree(args.tree, exact=getattr(args, "exact", False))


def _gamma_arg(tree, text):
    if text == "auto":
        return default_gamma(tree)
    return _number(text, exact=True)   # ints/decimals stay rational


# -- subcommand handlers ----------------------------------------------------

def _cmd_check(args):
    tree = _load(args)
    report = validate(tree)
    payload = {"valid": report.ok, "violations": list(report.violations)}
    if report.ok:
        payload["n"] = tree.n
        payload["total_weight"] = tree.total_weight
        payload["profile"] = degree_profile(tree)
    _emit(payload)
    return 0 if report.ok else 1


def _cmd_split(args):
    tree = _load(args)
    params = SplitParams(eta=args.eta, gamma=args.gamma)
    try:
        res = find_split_edge(tree, params)
    except ParamError as exc:
        _emit({"error": "parameters", "message": str(exc),
               "report": exc.report})
        return 1
    _emit({"params": params, "result": res})
    return 0


def _cmd_separate(args):
    tree = _load(args)
    gamma = _gamma_arg(tree, args.gamma)
    build = {"max-min": max_min_separator,
             "min-max": min_max_separator}[args.objective]
    try:
        if args.k == 2:
            sep, cert = bisect(tree, gamma)
        else:
            sep, cert = build(tree, args.k, gamma)
    except ParamError as exc:
        _emit({"error": "parameters", "message": str(exc),
               "report": exc.report})
        return 1
    payload = {"separator": sep,
               "certificate": _cert_payload(cert, with_trace=args.trace)}
    _emit(payload)
    return 0 if cert.ok else 1


def _cert_payload(cert, with_trace):
    data = jsonable(cert)
    if not with_trace:
        data.pop("steps", None)
    return data


def _cmd_oracle(args):
    tree = _load(args)
    fn = {"max-min": exact_beta_k, "min-max": exact_alpha_k}[args.objective]
    try:
        res = fn(tree, args.k, args.budget)
    except BudgetExceededError as exc:
        _emit({"error": "budget", "message": str(exc)})
        return 1
    _emit(res)
    return 0


def _cmd_gen(args):
    if args.family == "tightness":
        tree = gen_tightness_family(args.k, args.omega, args.omega_prime,
                                    path_len=args.path_len)
        info = {"kind": "tightness", "k": args.k,
                "omega": str(args.omega),
                "omega_prime": str(args.omega_prime),
                "path_len": args.path_len}
    elif args.family == "random":
        tree = gen_random_quasi_binary(args.n, args.seed, args.law)
        info = {"kind": "random", "n": args.n, "seed": args.seed,
                "law": args.law}
    else:  # named
        size = args.n if args.kind == "path" else args.depth
        tree = gen_named(args.kind, size, args.weight)
        info = {"kind": args.kind, "size": size, "weight": str(args.weight)}

    fmt = "text" if args.text else "json"
    rendered = serialize_tree(tree, fmt, info=None if args.text else info)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return 0


def _cmd_sweep(args):
    if args.config:
        with open(args.config) as fh:
            config = SweepConfig.from_dict(json.load(fh))
    else:
        instances = []
        if args.seeds:
            first, last = (int(x) for x in args.seeds.split(":"))
            instances.extend({"kind": "random", "n": args.n, "seed": s,
                              "law": args.law}
                             for s in range(first, last))
        if args.tightness:
            instances.extend({"kind": "tightness", "k": int(kk),
                              "omega": args.omega,
                              "omega_prime": args.omega_prime}
                             for kk in args.tightness.split(","))
        if args.files:
            instances.extend({"kind": "file", "path": p}
                             for p in args.files)
        if not args.ks:
            raise SystemExit(2)
        config = SweepConfig(
            instances=tuple(instances),
            ks=tuple(int(k) for k in args.ks.split(",")),
            gamma="auto" if args.gamma == "auto"
            else _number(args.gamma, args.exact),
            budget=args.budget, oracle=not args.no_oracle,
            exact=args.exact)

    failures = 0
    count = 0
    if args.tsv:
        print("\t".join(TSV_HEADER))
    for report in run_sweep(config):
        count += 1
        if not report.ok:
            failures += 1
        if args.tsv:
            for row in tsv_rows(report):
                print("\t".join("" if c is None else str(c) for c in row))
        else:
            print(json.dumps(jsonable(report), sort_keys=True))
    print(f"sweep: {count} instances, {failures} failed", file=sys.stderr)
    return 0 if failures == 0 else 1


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treesep",
        description="certified balanced edge separators of weighted "
                    "max-degree-3 trees")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tree_arg(p):
        p.add_argument("tree", help="tree file (text or JSON format)")
        p.add_argument("--exact", action="store_true",
                       help="parse weights as exact rationals")

    p = sub.add_parser("check", help="validate a tree file")
    add_tree_arg(p)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("split", help="find one certified edge split")
    add_tree_arg(p)
    p.add_argument("--eta", type=_exact_number, required=True,
                   help="split target weight")
    p.add_argument("--gamma", type=_exact_number, required=True,
                   help="slack parameter (>= heaviest degree-3 weight)")
    p.set_defaults(fn=_cmd_split)

    p = sub.add_parser("separate", help="build a k-way separator")
    add_tree_arg(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--objective", choices=["max-min", "min-max"],
                   required=True)
    p.add_argument("--gamma", default="auto",
                   help='slack parameter or "auto" (default)')
    p.add_argument("--trace", action="store_true",
                   help="include the per-step peeling trace")
    p.set_defaults(fn=_cmd_separate)

    p = sub.add_parser("oracle", help="exact optimum by enumeration")
    add_tree_arg(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--objective", choices=["max-min", "min-max"],
                   required=True)
    p.add_argument("--budget", type=int, default=None,
                   help="max subsets to enumerate "
                        "(default TREESEP_ORACLE_BUDGET or 1e8)")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("gen", help="generate instance files")
    gen_sub = p.add_subparsers(dest="family", required=True)

    g = gen_sub.add_parser("tightness", help="equality family instance")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--omega", type=_exact_number, required=True)
    g.add_argument("--omega-prime", dest="omega_prime",
                   type=_exact_number, required=True)
    g.add_argument("--path-len", dest="path_len", type=int, default=1)

    g = gen_sub.add_parser("random", help="seeded random tree")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--law", default="uniform:1:10")

    g = gen_sub.add_parser("named", help="path / complete binary fixtures")
    g.add_argument("--kind", choices=["path", "complete-binary"],
                   required=True)
    g.add_argument("--n", type=int, default=None, help="path length")
    g.add_argument("--depth", type=int, default=None,
                   help="complete binary tree depth")
    g.add_argument("--weight", type=_exact_number, default=1)

    for g_parser in gen_sub.choices.values():
        g_parser.add_argument("-o", "--output", default=None)
        g_parser.add_argument("--text", action="store_true",
                              help="emit the text format instead of JSON")
        g_parser.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("sweep", help="batch construction-vs-oracle checks")
    p.add_argument("--config", default=None,
                   help="JSON sweep config file")
    p.add_argument("--seeds", default=None, help="random seeds A:B")
    p.add_argument("--n", type=int, default=16)
    p.add_argument("--law", default="uniform:1:10")
    p.add_argument("--tightness", default=None,
                   help="comma-separated k values of equality instances")
    p.add_argument("--omega", type=_exact_number, default=1)
    p.add_argument("--omega-prime", dest="omega_prime",
                   type=_exact_number, default=2)
    p.add_argument("--files", nargs="*", default=None)
    p.add_argument("--ks", default=None, help="comma-separated k values")
    p.add_argument("--gamma", default="auto")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--tsv", action="store_true")
    p.add_argument("--exact", action="store_true")
    p.set_defaults(fn=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error ({exc.kind}): {exc}", file=sys.stderr)
        return 2
    except (ParamError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except TreeSepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
