"""Single-edge splits with a certified component weight.

Given slack parameters (eta, gamma) satisfying

    gamma >= omega3        (when a degree-3 vertex exists)
    max{(omega1 - gamma) / 2, omega2 - gamma} <= eta <= total / 2

there is always an edge one of whose sides weighs between eta and
2*eta + gamma.  ``find_split_edge`` locates one constructively: per edge
the *candidate* side is the side of weight >= eta (ties between two
qualifying sides break toward the side with fewer vertices), and the
returned edge is the one whose candidate has globally minimal vertex
count.  The upper bound on that candidate's weight is asserted rather
than proved again; a violation can only mean a bug.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalContradictionError, ParamError
from .tree import (Number, WeightedTree, degree_profile, div,
                   edge_side_table, tol_for)


@dataclass(frozen=True)
class SplitParams:
    eta: Number
    gamma: Number


@dataclass(frozen=True)
class ParamReport:
    """Evaluation of the three split-parameter inequalities.

    Margins are (satisfied side) - (required side); negative means the
    inequality failed by that amount.  ``gamma_margin`` is None when no
    degree-3 vertex exists (the gamma constraint is then vacuous).
    """

    ok: bool
    gamma_ok: bool
    gamma_margin: Number | None
    lower_ok: bool
    lower_margin: Number
    upper_ok: bool
    upper_margin: Number
    eta_lower: Number
    eta_upper: Number


def eta_bounds(tree: WeightedTree, gamma: Number):
    """Admissible eta interval [lower, upper] for this tree and gamma."""
    prof = degree_profile(tree)
    lower = div(prof.omega1 - gamma, 2)
    if prof.omega2 is not None:
        alt = prof.omega2 - gamma
        if alt > lower:
            lower = alt
    return lower, div(tree.total_weight, 2)


def check_split_params(tree: WeightedTree, params: SplitParams) -> ParamReport:
    """Report whether (eta, gamma) satisfy the split hypotheses."""
    tree.require_valid()
    prof = degree_profile(tree)
    eta, gamma = params.eta, params.gamma
    tol = tol_for(*tree.weights, eta, gamma)

    if prof.omega3 is None:
        gamma_ok, gamma_margin = True, None
    else:
        gamma_margin = gamma - prof.omega3
        gamma_ok = gamma_margin >= -tol

    lower, upper = eta_bounds(tree, gamma)
    lower_margin = eta - lower
    upper_margin = upper - eta

    return ParamReport(
        ok=gamma_ok and lower_margin >= -tol and upper_margin >= -tol,
        gamma_ok=gamma_ok, gamma_margin=gamma_margin,
        lower_ok=lower_margin >= -tol, lower_margin=lower_margin,
        upper_ok=upper_margin >= -tol, upper_margin=upper_margin,
        eta_lower=lower, eta_upper=upper)


@dataclass(frozen=True)
class SplitResult:
    """An edge plus the side whose weight carries the guarantee."""

    edge_id: int
    edge: tuple[int, int]
    certified_end: int          # endpoint inside the certified side
    certified_weight: Number
    certified_size: int
    other_end: int
    other_weight: Number
    other_size: int


def find_split_edge(tree: WeightedTree, params: SplitParams) -> SplitResult:
    """Return an edge whose certified side weighs in [eta, 2*eta + gamma].

    Selection rule: for each edge take the side of weight >= eta as the
    candidate, preferring the side with fewer vertices when both qualify
    (equal sizes break toward the lighter side, then toward the side away
    from vertex 0).  Among all edges, return the one whose candidate has
    the fewest vertices; ties go to the smallest edge id.  The chosen
    candidate is guaranteed to also satisfy the upper bound, which is
    asserted.

    Raises ParamError when check_split_params fails, and
    InternalContradictionError if no side qualifies anywhere or the
    certified side exceeds 2*eta + gamma (both impossible for admissible
    parameters unless there is a bug).
    """
    report = check_split_params(tree, params)
    if not report.ok:
        raise ParamError(
            f"split parameters rejected: eta={params.eta!r} "
            f"gamma={params.gamma!r}", report)

    eta, gamma = params.eta, params.gamma
    tol = tol_for(*tree.weights, eta, gamma)
    table = edge_side_table(tree, 0)

    best = None  # (size, edge_id, weight, end, other_w, other_s, other_end)
    for eid in range(len(tree.edges)):
        distal, near = table.sides(eid)
        dq = distal[0] >= eta - tol
        nq = near[0] >= eta - tol
        if dq and nq:
            # prefer fewer vertices, then lighter, then the distal side
            if (near[1], near[0]) < (distal[1], distal[0]):
                cand, other = near, distal
            else:
                cand, other = distal, near
        elif dq:
            cand, other = distal, near
        elif nq:
            cand, other = near, distal
        else:
            continue
        key = (cand[1], eid)
        if best is None or key < best[0]:
            best = (key, eid, cand, other)

    if best is None:
        raise InternalContradictionError(
            f"no side of any edge reaches eta={eta!r}; total weight "
            f"{tree.total_weight!r} contradicts eta <= total/2")

    _, eid, cand, other = best
    upper = 2 * eta + gamma
    if not cand[0] <= upper + tol:
        raise InternalContradictionError(
            f"certified side of edge {eid} weighs {cand[0]!r} "
            f"> 2*eta+gamma = {upper!r}; selection rule violated")

    return SplitResult(edge_id=eid, edge=tree.edges[eid],
                       certified_end=cand[2], certified_weight=cand[0],
                       certified_size=cand[1], other_end=other[2],
                       other_weight=other[0], other_size=other[1])
