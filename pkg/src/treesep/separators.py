"""Balanced k-way edge separators built by iterative peeling.

Three constructions, each returning the separator together with a
machine-checkable certificate:

* ``bisect``          -- one cut; both components land in
                         [(W - gamma)/3, (2W + gamma)/3].
* ``max_min_separator`` -- k-1 cuts with a fixed per-step target, so the
                         lightest component is at least
                         (W - (k-1)*gamma) / (2k - 1).
* ``min_max_separator`` -- k-1 cuts with a per-step target schedule, so
                         the heaviest component is at most
                         (2W + k*gamma) / (k + 1).

W is the tree's total weight and gamma a slack parameter that must
dominate the heaviest degree-3 vertex.  Every construction peels one
certified component per step off the shrinking residual tree; the
residual's weight is tracked against an analytic window so a failure of
the underlying guarantees surfaces as a hard error, never as a silently
bad separator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (DegenerateIntervalError, DegenerateScheduleError,
                     InternalContradictionError, ParamError, PeelStepError)
from .split import SplitParams, eta_bounds, find_split_edge
from .tree import (ABS_TOL, Component, Number, WeightedTree, component_of,
                   degree_profile, div, is_exact, side_vertices, tol_for)


# ---------------------------------------------------------------------------
# preconditions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PreconditionCheck:
    name: str
    ok: bool
    margin: Number | None   # None when the check is vacuous


@dataclass(frozen=True)
class PreconditionReport:
    ok: bool
    checks: tuple[PreconditionCheck, ...]


def _report(checks) -> PreconditionReport:
    return PreconditionReport(ok=all(c.ok for c in checks),
                              checks=tuple(checks))


def default_gamma(tree: WeightedTree) -> Number:
    """Smallest admissible slack: omega3, or 0 when no degree-3 vertex."""
    om3 = degree_profile(tree).omega3
    return 0 if om3 is None else om3


def _gamma_check(prof, gamma, tol) -> PreconditionCheck:
    if prof.omega3 is None:
        return PreconditionCheck("gamma-vs-omega3", True, None)
    margin = gamma - prof.omega3
    return PreconditionCheck("gamma-vs-omega3", margin >= -tol, margin)


def bisect_precondition(tree: WeightedTree, gamma: Number) -> PreconditionReport:
    """Hypothesis for the single-cut construction."""
    tree.require_valid()
    prof = degree_profile(tree)
    total = tree.total_weight
    tol = tol_for(*tree.weights, gamma)

    checks = [_gamma_check(prof, gamma, tol)]
    m1 = total - div(3 * prof.omega1 - gamma, 2)
    checks.append(PreconditionCheck("weight-vs-omega1", m1 >= -tol, m1))
    if prof.omega2 is None:
        checks.append(PreconditionCheck("weight-vs-omega2", True, None))
    else:
        m2 = total - (3 * prof.omega2 - 2 * gamma)
        checks.append(PreconditionCheck("weight-vs-omega2", m2 >= -tol, m2))
    return _report(checks)


def max_min_precondition(tree: WeightedTree, k: int,
                         gamma: Number) -> PreconditionReport:
    """Hypothesis for the max-min peeling construction."""
    _check_k(k)
    tree.require_valid()
    prof = degree_profile(tree)
    total = tree.total_weight
    tol = tol_for(*tree.weights, gamma)

    checks = [PreconditionCheck("enough-vertices", tree.n >= k, tree.n - k),
              _gamma_check(prof, gamma, tol)]
    m1 = total - div((2 * k - 1) * prof.omega1 - gamma, 2)
    checks.append(PreconditionCheck("weight-vs-omega1", m1 >= -tol, m1))
    if prof.omega2 is None:
        checks.append(PreconditionCheck("weight-vs-omega2", True, None))
    else:
        m2 = total - ((2 * k - 1) * prof.omega2 - k * gamma)
        checks.append(PreconditionCheck("weight-vs-omega2", m2 >= -tol, m2))
    return _report(checks)


def min_max_precondition(tree: WeightedTree, k: int,
                         gamma: Number) -> PreconditionReport:
    """Hypothesis for the min-max peeling construction.

    k = 2 delegates to the single cut, so its (stronger) hypothesis is
    the one reported.
    """
    _check_k(k)
    if k == 2:
        tree.require_valid()
        checks = [PreconditionCheck("enough-vertices", tree.n >= 2,
                                    tree.n - 2)]
        checks.extend(bisect_precondition(tree, gamma).checks)
        return _report(checks)

    tree.require_valid()
    prof = degree_profile(tree)
    total = tree.total_weight
    tol = tol_for(*tree.weights, gamma)

    checks = [PreconditionCheck("enough-vertices", tree.n >= k, tree.n - k),
              _gamma_check(prof, gamma, tol)]
    m1 = total - div((k + 1) * (k - 2) * prof.omega1 - 2 * gamma, k - 1)
    checks.append(PreconditionCheck("weight-vs-omega1", m1 >= -tol, m1))
    if prof.omega2 is None:
        checks.append(PreconditionCheck("weight-vs-omega2", True, None))
    else:
        m2 = total - (div(2 * (k + 1) * (k - 2) * prof.omega2, k - 1)
                      - k * gamma)
        checks.append(PreconditionCheck("weight-vs-omega2", m2 >= -tol, m2))
    return _report(checks)


def _check_k(k):
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")


# ---------------------------------------------------------------------------
# the analytic schedule and residue windows
# ---------------------------------------------------------------------------

def eta_schedule(j: int, k: int, total_weight: Number,
                 current_weight: Number, gamma: Number) -> Number:
    """Per-step split target for the min-max peeling, step j of k.

    eta_j =   (k-3) / (2(2k-j-3)) * current
            - (j-3)(k-1) / (2(2k-j-3)(k+1)) * total
            - ((k+3)(k-2) - j(k-1)) / (2(2k-j-3)(k+1)) * gamma

    Meaningful for 2 <= j <= k with k >= 4; callers clamp the value into
    the admissible split interval before use.  The denominator vanishes
    at j = 2k - 3, which raises DegenerateScheduleError.
    """
    d = 2 * k - j - 3
    if d == 0:
        raise DegenerateScheduleError(
            f"eta schedule undefined at j = 2k - 3 (j={j}, k={k})")
    t1 = div((k - 3) * current_weight, 2 * d)
    t2 = div((j - 3) * (k - 1) * total_weight, 2 * d * (k + 1))
    t3 = div(((k + 3) * (k - 2) - j * (k - 1)) * gamma, 2 * d * (k + 1))
    return t1 - t2 - t3


def suitable_interval(j: int, k: int, total_weight: Number,
                      gamma: Number) -> tuple[Number, Number]:
    """Window the residual tree's weight must occupy after peeling to j.

    lower = (j-1)(k-1) / ((k+1)(k-2)) * total
            + (2(j-1) / ((k+1)(k-2)) - 1) * gamma
    upper = (j+1) / (k+1) * total + (k-j) / (k+1) * gamma

    Undefined at k = 2 (the single-cut case never consults it).
    """
    if k == 2:
        raise DegenerateIntervalError(
            "residue window undefined at k = 2")
    denom = (k + 1) * (k - 2)
    lower = div((j - 1) * (k - 1) * total_weight, denom) \
        + div(2 * (j - 1) * gamma, denom) - gamma
    upper = div((j + 1) * total_weight, k + 1) + div((k - j) * gamma, k + 1)
    return lower, upper


# ---------------------------------------------------------------------------
# results
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Separator:
    """k-1 removed edges and the k components they induce."""

    removed_edges: tuple[int, ...]      # canonical edge ids, ascending
    components: tuple[Component, ...]   # sorted by representative vertex
    objective: str                      # "max-min" | "min-max" | "both"
    k: int


@dataclass(frozen=True)
class PeelStep:
    """One step of a peeling run (also the error payload on failure)."""

    j: int
    eta: Number
    clamped: bool
    edge_id: int
    peeled: Component
    remaining_weight: Number
    remaining_size: int
    window: tuple[Number, Number] | None


@dataclass(frozen=True)
class BoundCertificate:
    """Which construction ran, its hypothesis margins, and the bounds.

    ``claimed_min``/``claimed_max`` are the guarantees this run certifies
    (checked against the achieved extremes under ``ok``).  For min-max
    runs, ``alt_max_bound`` carries the variant of the guarantee with a
    (k-1) gamma coefficient instead of k; it is evaluated and reported
    but never asserted.  ``proven`` is False when the bound was only
    checked at runtime rather than backed by the construction's
    guarantee (the k = 3 min-max schedule).
    """

    method: str                 # "bisect" | "max-min-peel" | "min-max-peel"
    objective: str
    k: int
    gamma: Number
    precondition: PreconditionReport
    claimed_min: Number | None
    claimed_max: Number | None
    achieved_min: Number
    achieved_max: Number
    ok: bool
    proven: bool
    alt_max_bound: Number | None = None
    alt_max_ok: bool | None = None
    clamped_steps: tuple[int, ...] = ()
    steps: tuple[PeelStep, ...] = ()
    notes: tuple[str, ...] = ()


def _slack(bound, *context):
    """Certificate tolerance: zero when exact, else 1e-9 relative."""
    if is_exact(bound, *context):
        return 0
    return ABS_TOL * max(1.0, abs(bound))


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def bisect(tree: WeightedTree, gamma: Number | None = None
           ) -> tuple[Separator, BoundCertificate]:
    """Cut one edge so both components weigh within a third of ideal.

    Splits with target eta = (W - gamma)/3, which the hypothesis makes
    admissible; both sides then land in [(W - gamma)/3, (2W + gamma)/3],
    so the certificate carries a lower claim on the lighter side and an
    upper claim on the heavier one.
    """
    tree.require_valid()
    if gamma is None:
        gamma = default_gamma(tree)
    pre = bisect_precondition(tree, gamma)
    if not pre.ok:
        raise ParamError("bisect hypothesis rejected", pre)

    total = tree.total_weight
    tol = tol_for(*tree.weights, gamma)
    if not total + 2 * gamma >= -tol:
        raise InternalContradictionError(
            f"total + 2*gamma = {total + 2 * gamma!r} < 0 despite the "
            "hypothesis holding")

    eta = div(total - gamma, 3)
    try:
        res = find_split_edge(tree, SplitParams(eta, gamma))
    except ParamError as exc:
        raise InternalContradictionError(
            f"eta = (W-gamma)/3 inadmissible despite hypothesis: {exc}"
        ) from exc

    certified = component_of(tree, side_vertices(tree, res.edge_id,
                                                 res.certified_end))
    other = component_of(tree, side_vertices(tree, res.edge_id,
                                             res.other_end))
    comps = tuple(sorted((certified, other), key=lambda c: c.rep))
    sep = Separator(removed_edges=(res.edge_id,), components=comps,
                    objective="both", k=2)

    claimed_min = eta
    claimed_max = div(2 * total + gamma, 3)
    amin = min(c.weight for c in comps)
    amax = max(c.weight for c in comps)
    ok = (amin >= claimed_min - _slack(claimed_min, amin)
          and amax <= claimed_max + _slack(claimed_max, amax))
    step = PeelStep(j=2, eta=eta, clamped=False, edge_id=res.edge_id,
                    peeled=certified,
                    remaining_weight=total - certified.weight,
                    remaining_size=tree.n - certified.size, window=None)
    cert = BoundCertificate(method="bisect", objective="both", k=2,
                            gamma=gamma, precondition=pre,
                            claimed_min=claimed_min, claimed_max=claimed_max,
                            achieved_min=amin, achieved_max=amax,
                            ok=ok, proven=True, steps=(step,))
    return sep, cert


def max_min_separator(tree: WeightedTree, k: int,
                      gamma: Number | None = None
                      ) -> tuple[Separator, BoundCertificate]:
    """Peel k-1 components so the lightest weighs >= (W-(k-1)g)/(2k-1).

    Every step splits the residual tree with the same fixed target
    eta = (W - (k-1)*gamma) / (2k - 1); the certified side is set aside
    and peeling continues on the remainder, whose weight provably never
    drops below eta before the last step.  k = 2 delegates to ``bisect``.
    """
    _check_k(k)
    tree.require_valid()
    if gamma is None:
        gamma = default_gamma(tree)
    if k == 2:
        return bisect(tree, gamma)

    pre = max_min_precondition(tree, k, gamma)
    if not pre.ok:
        raise ParamError(f"max-min hypothesis rejected for k={k}", pre)
    total = tree.total_weight
    _assert_positivity(total, k, gamma, tree)

    eta = div(total - (k - 1) * gamma, 2 * k - 1)
    run = _peel(tree, k, gamma, lambda j, cur: eta,
                clamp=False, windows=False)

    tol = tol_for(*tree.weights, gamma)
    if not run.residual_weight >= eta - tol:
        raise InternalContradictionError(
            f"final residue weighs {run.residual_weight!r} < eta={eta!r}; "
            f"trace: {run.steps}")

    sep = Separator(removed_edges=run.removed, components=run.components,
                    objective="max-min", k=k)
    amin = min(c.weight for c in run.components)
    amax = max(c.weight for c in run.components)
    cert = BoundCertificate(
        method="max-min-peel", objective="max-min", k=k, gamma=gamma,
        precondition=pre, claimed_min=eta, claimed_max=None,
        achieved_min=amin, achieved_max=amax,
        ok=amin >= eta - _slack(eta, amin), proven=True,
        clamped_steps=run.clamped, steps=run.steps)
    return sep, cert


def min_max_separator(tree: WeightedTree, k: int,
                      gamma: Number | None = None
                      ) -> tuple[Separator, BoundCertificate]:
    """Peel k-1 components so the heaviest weighs <= (2W+k*g)/(k+1).

    Per-step targets come from ``eta_schedule`` (clamped into the
    admissible split interval; clamps are recorded on the certificate),
    and after every peel the residual weight is asserted to sit inside
    ``suitable_interval``.  k = 2 delegates to ``bisect``.  At k = 3 the
    schedule's denominator vanishes; the unique target consistent with
    the residue windows is the constant (W - gamma)/4, which is used
    instead and flagged as proven=False: its certificate is checked at
    runtime rather than guaranteed a priori.

    The certified claim uses the k*gamma form of the guarantee; the
    (k-1)*gamma variant is evaluated into ``alt_max_bound``/``alt_max_ok``
    for reporting only.
    """
    _check_k(k)
    tree.require_valid()
    if gamma is None:
        gamma = default_gamma(tree)
    if k == 2:
        return bisect(tree, gamma)

    pre = min_max_precondition(tree, k, gamma)
    if not pre.ok:
        raise ParamError(f"min-max hypothesis rejected for k={k}", pre)
    total = tree.total_weight
    _assert_positivity(total, k, gamma, tree)

    notes = ()
    if k == 3:
        const = div(total - gamma, 4)
        eta_fn = lambda j, cur: const
        notes = ("schedule denominator vanishes at k=3; using the "
                 "constant eta=(total-gamma)/4 consistent with the "
                 "residue windows; bound checked a posteriori",)
        proven = False
    else:
        eta_fn = lambda j, cur: eta_schedule(j, k, total, cur, gamma)
        proven = True

    run = _peel(tree, k, gamma, eta_fn, clamp=True, windows=True)

    sep = Separator(removed_edges=run.removed, components=run.components,
                    objective="min-max", k=k)
    claimed_max = div(2 * total + k * gamma, k + 1)
    alt_max = div(2 * total + (k - 1) * gamma, k + 1)
    amin = min(c.weight for c in run.components)
    amax = max(c.weight for c in run.components)
    cert = BoundCertificate(
        method="min-max-peel", objective="min-max", k=k, gamma=gamma,
        precondition=pre, claimed_min=None, claimed_max=claimed_max,
        achieved_min=amin, achieved_max=amax,
        ok=amax <= claimed_max + _slack(claimed_max, amax), proven=proven,
        alt_max_bound=alt_max,
        alt_max_ok=amax <= alt_max + _slack(alt_max, amax),
        clamped_steps=run.clamped, steps=run.steps, notes=notes)
    return sep, cert


def _assert_positivity(total, k, gamma, tree):
    # both peeling guarantees silently rely on W + k*gamma > 0
    tol = tol_for(*tree.weights, gamma)
    if not total + k * gamma > -tol:
        raise InternalContradictionError(
            f"total + k*gamma = {total + k * gamma!r} <= 0 despite the "
            "hypothesis holding")


# ---------------------------------------------------------------------------
# the peeling engine
# ---------------------------------------------------------------------------

@dataclass
class _PeelRun:
    removed: tuple[int, ...]
    components: tuple[Component, ...]
    residual_weight: Number
    clamped: tuple[int, ...]
    steps: tuple[PeelStep, ...]


def _induced(sub: WeightedTree, orig_of, keep):
    keep = sorted(keep)
    idx = {v: i for i, v in enumerate(keep)}
    weights = [sub.weights[v] for v in keep]
    edges = [(idx[u], idx[v]) for u, v in sub.edges
             if u in idx and v in idx]
    return WeightedTree(weights, edges), tuple(orig_of[v] for v in keep)


def _peel(tree, k, gamma, eta_fn, clamp, windows) -> _PeelRun:
    """Shared peeling loop: one certified component removed per step."""
    total = tree.total_weight
    tol = tol_for(*tree.weights, gamma)
    sub, orig_of = tree, tuple(range(tree.n))
    current = total

    steps = []
    removed = []
    peeled = []
    clamped_steps = []

    if windows:
        lo, hi = suitable_interval(k, k, total, gamma)
        if not (lo - tol <= current <= hi + tol):
            raise InternalContradictionError(
                f"initial weight {current!r} outside residue window "
                f"[{lo!r}, {hi!r}] for k={k}")

    for j in range(k, 1, -1):
        if sub.n < 2:
            raise InternalContradictionError(
                f"residual tree has a single vertex at step j={j}; "
                f"cannot split further; trace: {tuple(steps)}")

        eta = eta_fn(j, current)
        was_clamped = False
        if clamp:
            lo_eta, hi_eta = eta_bounds(sub, gamma)
            if lo_eta > hi_eta + tol:
                raise PeelStepError(
                    f"admissible split interval empty at step j={j}: "
                    f"[{lo_eta!r}, {hi_eta!r}]", steps)
            clamped_eta = min(max(eta, lo_eta), hi_eta)
            if clamped_eta != eta:
                was_clamped = abs(clamped_eta - eta) > tol
                eta = clamped_eta
            if was_clamped:
                clamped_steps.append(j)

        try:
            res = find_split_edge(sub, SplitParams(eta, gamma))
        except ParamError as exc:
            raise InternalContradictionError(
                f"split parameters inadmissible at step j={j} "
                f"(eta={eta!r}): {exc}; trace: {tuple(steps)}") from exc

        side_sub = set(side_vertices(sub, res.edge_id, res.certified_end))
        rest_sub = [v for v in range(sub.n) if v not in side_sub]
        comp = component_of(tree, tuple(orig_of[v] for v in side_sub))
        su, sv = sub.edges[res.edge_id]
        orig_eid = tree.edge_id(orig_of[su], orig_of[sv])

        current = current - res.certified_weight
        window = None
        if windows:
            window = suitable_interval(j - 1, k, total, gamma)
            if not (window[0] - tol <= current <= window[1] + tol):
                raise InternalContradictionError(
                    f"residual weight {current!r} left window "
                    f"[{window[0]!r}, {window[1]!r}] after step j={j}; "
                    f"trace: {tuple(steps)}")

        peeled.append(comp)
        removed.append(orig_eid)
        steps.append(PeelStep(j=j, eta=eta, clamped=was_clamped,
                              edge_id=orig_eid, peeled=comp,
                              remaining_weight=current,
                              remaining_size=sub.n - res.certified_size,
                              window=window))
        sub, orig_of = _induced(sub, orig_of, rest_sub)

    residue = component_of(tree, orig_of)
    comps = tuple(sorted(peeled + [residue], key=lambda c: c.rep))
    return _PeelRun(removed=tuple(sorted(removed)), components=comps,
                    residual_weight=current,
                    clamped=tuple(clamped_steps), steps=tuple(steps))
