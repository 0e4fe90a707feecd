"""Vertex-weighted trees with maximum degree three.

The data model the rest of the package consumes: an immutable weighted
tree, its validation report, per-degree-class weight maxima, and the
per-edge component weight/size table filled by a single traversal.

Weights may be ints, Fractions, or floats.  A tree whose weights are all
rational (int or Fraction) is *exact*: derived quantities stay rational
and comparisons use no tolerance.  Any float weight switches comparisons
to a fixed absolute tolerance of ``ABS_TOL`` (weights are expected to be
of magnitude O(1)..O(1e3) for that tolerance to be meaningful).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from .errors import InvalidTreeError

ABS_TOL = 1e-9

Number = int | float | Fraction


def is_exact(*values) -> bool:
    """True when every value is an int or Fraction."""
    return all(isinstance(v, Rational) for v in values)


def tol_for(*values):
    """Comparison slack: 0 for all-rational inputs, ABS_TOL otherwise."""
    return 0 if is_exact(*values) else ABS_TOL


def div(a, b):
    """a / b, staying in Fraction when both operands are rational."""
    if isinstance(a, Rational) and isinstance(b, Rational):
        return Fraction(a) / Fraction(b)
    return a / b


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]


@dataclass(frozen=True)
class Component:
    """One connected piece after edge deletions: summary plus members."""

    rep: int                    # smallest vertex id in the piece
    weight: Number
    size: int
    vertices: tuple[int, ...]   # sorted


@dataclass(frozen=True)
class DegreeProfile:
    """Degree-class counts and per-class weight maxima.

    ``omega_i`` is the maximum weight over vertices of degree >= i; it is
    None exactly when no vertex has degree >= i (omega2 for two-vertex
    trees, omega3 whenever there is no degree-3 vertex).
    """

    n1: int
    n2: int
    n3: int
    omega1: Number
    omega2: Number | None
    omega3: Number | None


@dataclass(frozen=True)
class WeightedTree:
    """Immutable vertex-weighted graph intended to be a tree, max degree 3.

    Vertices are dense ids 0..n-1.  Edges are normalised to (min, max)
    pairs stored in lexicographic order, so an edge's position in
    ``edges`` is its canonical id.  Construction only rejects malformed
    containers (ids out of range, self-loops, duplicate edges); whether
    the graph actually is a positive-weight quasi-binary tree is reported
    by ``validate`` as data, never raised, so invalid candidates can be
    inspected.
    """

    weights: tuple
    edges: tuple
    adjacency: tuple = field(init=False, compare=False, repr=False)
    degrees: tuple = field(init=False, compare=False, repr=False)
    total_weight: Number = field(init=False, compare=False, repr=False)
    exact: bool = field(init=False, compare=False, repr=False)
    validation: ValidationReport = field(init=False, compare=False, repr=False)
    _edge_ids: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        weights = tuple(self.weights)
        n = len(weights)
        if n == 0:
            raise ValueError("a tree needs at least one vertex")

        canon = []
        for e in self.edges:
            u, v = e
            if not (isinstance(u, int) and isinstance(v, int)):
                raise ValueError(f"edge endpoints must be ints, got {e!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e!r} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a!r}")
        edges = tuple(canon)

        adj = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)

        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adj))
        object.__setattr__(self, "degrees", tuple(len(a) for a in adj))
        object.__setattr__(self, "total_weight", sum(weights))
        object.__setattr__(self, "exact", is_exact(*weights))
        object.__setattr__(self, "_edge_ids",
                           {e: i for i, e in enumerate(edges)})
        object.__setattr__(self, "validation", self._check())

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.weights)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_ids[key]
        except KeyError:
            raise ValueError(f"no edge {key!r} in tree") from None

    def require_valid(self):
        if not self.validation.ok:
            raise InvalidTreeError(
                "invalid tree: " + "; ".join(self.validation.violations))

    # -- validation ------------------------------------------------------

    def _check(self) -> ValidationReport:
        n = len(self.weights)
        violations = []

        if n <= 1:
            violations.append("n <= 1")

        for w in self.weights:
            if isinstance(w, float) and not math.isfinite(w):
                violations.append(f"non-finite weight {w!r}")
                break
        else:
            if not self.total_weight > 0:
                violations.append(
                    f"total weight {self.total_weight!r} <= 0")

        for v, d in enumerate(self.degrees):
            if d > 3:
                violations.append(f"degree {d} at vertex {v}")

        if len(self.edges) != n - 1:
            violations.append(
                f"{len(self.edges)} edges, expected {n - 1}")

        # connectivity + cycle in one union-find sweep
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        cycle = False
        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                cycle = True
            else:
                parent[rv] = ru
        roots = {find(v) for v in range(n)}
        if len(roots) > 1:
            violations.append("disconnected")
        if cycle:
            violations.append("cycle")

        return ValidationReport(ok=not violations,
                                violations=tuple(violations))


def validate(tree: WeightedTree) -> ValidationReport:
    """Report every violated tree invariant; valid trees get an ok report."""
    return tree.validation


def degree_profile(tree: WeightedTree) -> DegreeProfile:
    """Count degree classes and their weight maxima for a valid tree."""
    tree.require_valid()
    counts = [0, 0, 0, 0]
    for d in tree.degrees:
        counts[d] += 1
    maxima = []
    for i in (1, 2, 3):
        ws = [w for w, d in zip(tree.weights, tree.degrees) if d >= i]
        maxima.append(max(ws) if ws else None)
    return DegreeProfile(n1=counts[1], n2=counts[2], n3=counts[3],
                         omega1=maxima[0], omega2=maxima[1],
                         omega3=maxima[2])


@dataclass(frozen=True)
class EdgeSideTable:
    """Per-edge component weights/sizes relative to a fixed root.

    For every edge, ``distal_*[edge_id]`` describes the component on the
    far side from the root; the near side is derived by subtraction from
    the tree totals, so the two sides always sum exactly to them.
    """

    root: int
    total_weight: Number
    size: int
    distal_weight: tuple
    distal_size: tuple
    distal_end: tuple
    near_end: tuple

    def sides(self, edge_id: int):
        """Both sides of an edge as (weight, size, endpoint) triples."""
        w = self.distal_weight[edge_id]
        s = self.distal_size[edge_id]
        distal = (w, s, self.distal_end[edge_id])
        near = (self.total_weight - w, self.size - s, self.near_end[edge_id])
        return distal, near


def edge_side_table(tree: WeightedTree, root: int) -> EdgeSideTable:
    """Fill subtree weight and size for every edge in one traversal."""
    tree.require_valid()
    n = tree.n
    if not (isinstance(root, int) and 0 <= root < n):
        raise ValueError(f"root {root!r} not a vertex id")

    parent = [-1] * n
    order = []
    stack = [root]
    seen = [False] * n
    seen[root] = True
    while stack:
        v = stack.pop()
        order.append(v)
        for u in tree.adjacency[v]:
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                stack.append(u)

    sub_w = list(tree.weights)
    sub_n = [1] * n
    for v in reversed(order):
        p = parent[v]
        if p >= 0:
            sub_w[p] = sub_w[p] + sub_w[v]
            sub_n[p] += sub_n[v]

    m = len(tree.edges)
    dw = [None] * m
    ds = [0] * m
    de = [0] * m
    ne = [0] * m
    for eid, (u, v) in enumerate(tree.edges):
        child = v if parent[v] == u else u
        dw[eid] = sub_w[child]
        ds[eid] = sub_n[child]
        de[eid] = child
        ne[eid] = u if child == v else v

    return EdgeSideTable(root=root, total_weight=tree.total_weight,
                         size=n, distal_weight=tuple(dw),
                         distal_size=tuple(ds), distal_end=tuple(de),
                         near_end=tuple(ne))


def side_vertices(tree: WeightedTree, edge_id: int, end: int) -> tuple[int, ...]:
    """Vertices of the component containing ``end`` once the edge is cut."""
    u, v = tree.edges[edge_id]
    if end not in (u, v):
        raise ValueError(f"vertex {end} is not an endpoint of edge {edge_id}")
    blocked = v if end == u else u
    seen = {end}
    stack = [end]
    while stack:
        x = stack.pop()
        for y in tree.adjacency[x]:
            if x == end and y == blocked:
                continue
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return tuple(sorted(seen))


def component_of(tree: WeightedTree, vertices) -> Component:
    """Summarise a vertex set as a Component."""
    vs = tuple(sorted(vertices))
    return Component(rep=vs[0],
                     weight=sum(tree.weights[v] for v in vs),
                     size=len(vs), vertices=vs)
