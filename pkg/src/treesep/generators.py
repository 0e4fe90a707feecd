"""Deterministic test-instance generators.

Three families:

* ``gen_tightness_family`` -- the equality family on which the max-min
  guarantee is achieved exactly: a root of weight w' reaches k-1 branch
  vertices of weight w, each carrying two pendant leaves of weight w'.
* ``gen_random_quasi_binary`` -- seeded random trees grown by attaching
  each new vertex to a uniformly chosen vertex of degree <= 2.
* ``gen_named`` -- paths and complete binary trees with constant weight.

Every generator is a pure function of its arguments: the same arguments
always produce the identical tree (and hence byte-identical files).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalContradictionError
from .separators import default_gamma, max_min_precondition
from .tree import Number, WeightedTree


def gen_tightness_family(k: int, omega: Number, omega_prime: Number,
                         path_len: int = 1) -> WeightedTree:
    """Tree on which the max-min bound is met with equality.

    Structure: a root r (weight omega_prime) connected to k-1 branch
    vertices x_1..x_{k-1} (weight omega), each adjacent to two pendant
    leaves (weight omega_prime).  A literal star from r would give it
    degree k-1, so for k >= 4 the branches hang off a balanced fan of
    zero-weight internal vertices instead; the root keeps degree <= 2 in
    every case so the heaviest degree-3 vertex stays at weight omega,
    which is what makes the bound tight.  ``path_len`` inserts extra
    zero-weight degree-2 vertices on the way to each x_i (weightless, so
    no bound changes).

    Total weight is (k-1)*omega + (2k-1)*omega_prime.
    """
    if not (isinstance(k, int) and k >= 3):
        raise ValueError(f"k must be an integer >= 3, got {k!r}")
    if not omega > 0:
        raise ValueError(f"omega must be positive, got {omega!r}")
    if not omega_prime >= omega:
        raise ValueError(
            f"omega_prime must be >= omega, got {omega_prime!r} < {omega!r}")
    if not (isinstance(path_len, int) and path_len >= 1):
        raise ValueError(f"path_len must be an integer >= 1, got {path_len!r}")

    weights = [omega_prime]          # root r = vertex 0
    edges = []

    def add(weight, attach_to):
        weights.append(weight)
        vid = len(weights) - 1
        edges.append((attach_to, vid))
        return vid

    # fan out k-1 attachment slots below the root, root degree <= 2
    slots = [0, 0]
    while len(slots) < k - 1:
        g = add(0, slots.pop(0))     # internal fan vertex: degree 3
        slots.extend((g, g))

    for _ in range(k - 1):
        at = slots.pop(0)
        for _step in range(path_len - 1):
            at = add(0, at)          # degree-2 filler along the branch
        x = add(omega, at)
        add(omega_prime, x)
        add(omega_prime, x)

    tree = WeightedTree(weights, edges)
    tree.require_valid()
    pre = max_min_precondition(tree, k, default_gamma(tree))
    if not pre.ok:
        raise InternalContradictionError(
            f"tightness instance fails its own hypothesis: {pre}")
    return tree


def parse_weight_law(spec: str):
    """Compile a weight-law spec into a draw(rng) callable.

    Accepted forms: "uniform:LO:HI" (integer uniform, inclusive),
    "constant:C", "twopoint:A:B" (fair coin between A and B).  Values
    parse as int when possible, else Fraction, so generated trees stay
    exact.
    """
    parts = spec.split(":")
    kind = parts[0]

    def num(token):
        try:
            return int(token)
        except ValueError:
            return Fraction(token)

    if kind == "uniform" and len(parts) == 3:
        lo, hi = int(parts[1]), int(parts[2])
        if lo > hi:
            raise ValueError(f"empty range in weight law {spec!r}")
        return lambda rng: rng.randint(lo, hi)
    if kind == "constant" and len(parts) == 2:
        c = num(parts[1])
        return lambda rng: c
    if kind == "twopoint" and len(parts) == 3:
        a, b = num(parts[1]), num(parts[2])
        return lambda rng: a if rng.random() < 0.5 else b
    raise ValueError(f"unrecognised weight law {spec!r}")


def gen_random_quasi_binary(n: int, seed: int,
                            weight_law: str = "uniform:1:10") -> WeightedTree:
    """Seeded random tree with max degree 3 and weights from the law."""
    if not (isinstance(n, int) and n > 1):
        raise ValueError(f"n must be an integer > 1, got {n!r}")
    draw = parse_weight_law(weight_law)
    rng = random.Random(seed)

    weights = [draw(rng)]
    edges = []
    open_vertices = [0]          # degree <= 2, eligible for attachment
    degree = [0]

    for v in range(1, n):
        i = rng.randrange(len(open_vertices))
        target = open_vertices[i]
        weights.append(draw(rng))
        degree.append(1)
        edges.append((target, v))
        degree[target] += 1
        if degree[target] == 3:
            open_vertices[i] = open_vertices[-1]
            open_vertices.pop()
        open_vertices.append(v)

    return WeightedTree(weights, edges)


def gen_named(kind: str, size: int, weight: Number = 1) -> WeightedTree:
    """Canonical constant-weight fixtures.

    kind "path": ``size`` is the vertex count n > 1.
    kind "complete-binary": ``size`` is the depth d >= 1, giving
    2^(d+1) - 1 vertices with the root at id 0 (degree 2).
    """
    if kind == "path":
        if not (isinstance(size, int) and size > 1):
            raise ValueError(f"path needs n > 1, got {size!r}")
        return WeightedTree([weight] * size,
                            [(i, i + 1) for i in range(size - 1)])
    if kind == "complete-binary":
        if not (isinstance(size, int) and size >= 1):
            raise ValueError(f"complete-binary needs depth >= 1, got {size!r}")
        n = 2 ** (size + 1) - 1
        edges = [((v - 1) // 2, v) for v in range(1, n)]
        return WeightedTree([weight] * n, edges)
    raise ValueError(f"unrecognised fixture kind {kind!r}")


@dataclass(frozen=True)
class GenSpec:
    """Serializable descriptor of a generated instance.

    The same spec always realizes the identical tree; specs round-trip
    through dicts for sweep configs and report files.
    """

    kind: str                        # tightness | random | path | complete-binary
    params: tuple                    # sorted (name, value) pairs

    @classmethod
    def from_dict(cls, d: dict) -> "GenSpec":
        d = dict(d)
        kind = d.pop("kind")
        return cls(kind=kind, params=tuple(sorted(d.items())))

    def to_dict(self) -> dict:
        return {"kind": self.kind, **dict(self.params)}

    def realize(self) -> WeightedTree:
        p = dict(self.params)
        if self.kind == "tightness":
            return gen_tightness_family(
                k=p["k"], omega=p["omega"], omega_prime=p["omega_prime"],
                path_len=p.get("path_len", 1))
        if self.kind == "random":
            return gen_random_quasi_binary(
                n=p["n"], seed=p["seed"],
                weight_law=p.get("law", "uniform:1:10"))
        if self.kind == "path":
            return gen_named("path", p["n"], p.get("weight", 1))
        if self.kind == "complete-binary":
            return gen_named("complete-binary", p["depth"],
                             p.get("weight", 1))
        raise ValueError(f"unrecognised instance kind {self.kind!r}")
