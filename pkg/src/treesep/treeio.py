"""Tree file parsing and serialization.

Two interchangeable formats:

* text, line oriented::

      n
      w_0 w_1 ... w_{n-1}
      u v          (n-1 edge lines)

* JSON: ``{"weights": [...], "edges": [[u, v], ...]}``.  Writers emit
  JSON by default; extra JSON keys (e.g. an "info" block describing how
  an instance was generated) are ignored on parse.

Weights are decimal text.  The default parse mode is float; with
``exact=True`` integer tokens become ints and everything else becomes
Fraction (so "0.1" parses as 1/10, and "1/3" is accepted too).
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

from .errors import ParseError
from .tree import WeightedTree


def _parse_weight(token, exact):
    try:
        return int(token)
    except ValueError:
        pass
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError("bad-weight",
                         f"cannot parse weight {token!r}") from None
    return value if exact else float(value)


def _build(weights, edges, n):
    seen = set()
    pairs = []
    for e in edges:
        try:
            u, v = e
        except (TypeError, ValueError):
            raise ParseError("bad-edge", f"malformed edge {e!r}") from None
        if not (isinstance(u, int) and isinstance(v, int)):
            raise ParseError("bad-edge", f"non-integer edge {e!r}")
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError("bad-edge",
                             f"edge {e!r} invalid for n={n}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError("duplicate-edge", f"duplicate edge {key!r}")
        seen.add(key)
        pairs.append(key)
    return WeightedTree(weights, pairs)


def parse_tree_text(text: str, exact: bool = False) -> WeightedTree:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("malformed-count", "empty input")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError("malformed-count",
                         f"first line must be the vertex count, "
                         f"got {lines[0]!r}") from None
    if n < 1:
        raise ParseError("malformed-count", f"vertex count {n} < 1")
    if len(lines) < 2:
        raise ParseError("malformed-count", "missing weight line")
    tokens = lines[1].split()
    if len(tokens) != n:
        raise ParseError("malformed-count",
                         f"expected {n} weights, got {len(tokens)}")
    weights = [_parse_weight(t, exact) for t in tokens]
    edge_lines = lines[2:]
    if len(edge_lines) != n - 1:
        raise ParseError("malformed-count",
                         f"expected {n - 1} edge lines, "
                         f"got {len(edge_lines)}")
    edges = []
    for ln in edge_lines:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError("bad-edge", f"malformed edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError("bad-edge",
                             f"non-integer edge line {ln!r}") from None
    return _build(weights, edges, n)


def parse_tree_json(text: str, exact: bool = False) -> WeightedTree:
    try:
        if exact:
            data = json.loads(text, parse_float=Fraction)
        else:
            data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("bad-format", f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "weights" not in data \
            or "edges" not in data:
        raise ParseError("bad-format",
                         'JSON tree needs "weights" and "edges" keys')
    raw = data["weights"]
    if not isinstance(raw, list) or not raw:
        raise ParseError("bad-weight", '"weights" must be a non-empty list')
    weights = []
    for w in raw:
        if isinstance(w, str):
            w = _parse_weight(w, exact)   # "p/q" strings from the writer
        elif isinstance(w, bool) or not isinstance(w, (int, float, Fraction)):
            raise ParseError("bad-weight", f"non-numeric weight {w!r}")
        weights.append(w)
    edges = data["edges"]
    if not isinstance(edges, list):
        raise ParseError("bad-edge", '"edges" must be a list')
    return _build(weights, [tuple(e) for e in edges], len(weights))


def parse_tree(text: str, exact: bool = False) -> WeightedTree:
    """Parse either format, sniffing JSON by a leading '{'."""
    if text.lstrip().startswith("{"):
        return parse_tree_json(text, exact)
    return parse_tree_text(text, exact)


def read_tree(path, exact: bool = False) -> WeightedTree:
    if not os.path.exists(path):
        raise ParseError("bad-format", f"no such file: {path}")
    with open(path) as fh:
        return parse_tree(fh.read(), exact)


def _weight_str(w) -> str:
    if isinstance(w, Fraction):
        return str(w.numerator) if w.denominator == 1 else str(w)
    return repr(w) if isinstance(w, float) else str(w)


def _weight_json(w):
    if isinstance(w, Fraction):
        return w.numerator if w.denominator == 1 else str(w)
    return w


def serialize_tree(tree: WeightedTree, fmt: str = "json",
                   info: dict | None = None) -> str:
    """Render a tree in the requested format (JSON unless fmt="text").

    Non-integral Fractions serialize as "p/q" strings, which both
    parsers accept back in exact mode.  ``info`` attaches an extra JSON
    key that parsers ignore (used to record generator provenance).
    """
    if fmt == "text":
        lines = [str(tree.n),
                 " ".join(_weight_str(w) for w in tree.weights)]
        lines.extend(f"{u} {v}" for u, v in tree.edges)
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {"weights": [_weight_json(w) for w in tree.weights],
               "edges": [list(e) for e in tree.edges]}
        if info:
            doc["info"] = info
        return json.dumps(doc, separators=(",", ":"), sort_keys=True) + "\n"
    raise ValueError(f"unrecognised format {fmt!r}")


def write_tree(tree: WeightedTree, path, fmt: str = "json",
               info: dict | None = None):
    with open(path, "w") as fh:
        fh.write(serialize_tree(tree, fmt, info))
