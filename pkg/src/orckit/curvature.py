"""Edge curvature on finite simple graphs, all values exact rationals.

For an edge x ~ y and idleness alpha in [0, 1], the curvature is
1 - W1(mu_x^alpha, mu_y^alpha). The Lin-Lu-Yau curvature kappa is the
normalized value on the final linear stretch of the idleness function,
evaluated at alpha = 1/(max(d_x, d_y) + 1). Where both endpoints have the
same degree, kappa and kappa_0 also reduce to min-cost bipartite
assignments between neighborhood sets, which this module computes as an
independent second route and checks against the transport route on every
call. Disagreement between routes raises ConsistencyError.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import transport
from .graphs import Graph, INFINITY, distances_from


class ConsistencyError(Exception):
    """Two independent computation routes produced different values."""


def _require_edge(g: Graph, x: int, y: int) -> None:
    if not g.has_edge(x, y):
        raise ValueError(f"({x}, {y}) is not an edge")


def _require_equal_degrees(g: Graph, x: int, y: int) -> int:
    dx, dy = len(g.adj[x]), len(g.adj[y])
    if dx != dy:
        raise ValueError(f"vertices {x} and {y} have unequal degrees {dx} != {dy}")
    return dx


def kappa_alpha(g: Graph, x: int, y: int, alpha) -> Fraction:
    """Transport curvature of the edge x ~ y at the given idleness."""
    _require_edge(g, x, y)
    alpha = Fraction(alpha)
    mu = transport.mu_alpha(g, x, alpha)
    nu = transport.mu_alpha(g, y, alpha)
    return 1 - transport.wasserstein1(g, mu, nu)


def _cost_matrix(g: Graph, left: list[int], right: list[int]) -> transport.CostMatrix:
    """Pairwise hop distances between two disjoint neighborhood sets.

    Both sets sit inside the 1-balls of adjacent vertices, so every entry
    is in {1, 2, 3}; that bound is asserted, not assumed.
    """
    rows = []
    for z in left:
        dist = distances_from(g, z, cap=3)
        row = []
        for w in right:
            d = dist[w]
            if d is INFINITY or not (1 <= d <= 3):
                raise AssertionError(f"distance d({z},{w})={d} outside 1..3")
            row.append(d)
        rows.append(row)
    return rows


def assignment_instance(g: Graph, x: int, y: int):
    """Moving sets S1(x)\\B1(y) and S1(y)\\B1(x) with their cost matrix."""
    _require_edge(g, x, y)
    bx, by = set(g.adj[x]) | {x}, set(g.adj[y]) | {y}
    left = sorted(set(g.adj[x]) - by)
    right = sorted(set(g.adj[y]) - bx)
    return left, right, _cost_matrix(g, left, right)


def zero_assignment_instance(g: Graph, x: int, y: int):
    """Moving sets S1(x)\\S1(y) and S1(y)\\S1(x) (these include y and x)."""
    _require_edge(g, x, y)
    left = sorted(set(g.adj[x]) - set(g.adj[y]))
    right = sorted(set(g.adj[y]) - set(g.adj[x]))
    return left, right, _cost_matrix(g, left, right)


def kappa_lly_assignment(g: Graph, x: int, y: int) -> Fraction:
    """Assignment route for kappa, valid on equal-degree edges only:
    kappa = (d + 1 - C*)/d with C* the optimal assignment cost between
    S1(x)\\B1(y) and S1(y)\\B1(x)."""
    _require_edge(g, x, y)
    d = _require_equal_degrees(g, x, y)
    _, _, cost = assignment_instance(g, x, y)
    return Fraction(d + 1 - transport.assignment_cost(cost), d)


def kappa_zero_assignment(g: Graph, x: int, y: int) -> Fraction:
    """Assignment route for kappa_0 on equal-degree edges:
    kappa_0 = (d - C*)/d over bijections S1(x)\\S1(y) -> S1(y)\\S1(x)."""
    _require_edge(g, x, y)
    d = _require_equal_degrees(g, x, y)
    _, _, cost = zero_assignment_instance(g, x, y)
    return Fraction(d - transport.assignment_cost(cost), d)


def kappa_lly(g: Graph, x: int, y: int) -> Fraction:
    """Lin-Lu-Yau curvature: the idleness function is linear on
    [1/(D+1), 1] with endpoint value 0, so kappa equals
    kappa_alpha / (1 - alpha) evaluated at alpha = 1/(D+1), D = max degree.

    On equal-degree edges the independent assignment route is computed as
    well and must agree exactly.
    """
    _require_edge(g, x, y)
    dx, dy = len(g.adj[x]), len(g.adj[y])
    a = Fraction(1, max(dx, dy) + 1)
    value = kappa_alpha(g, x, y, a) / (1 - a)
    if dx == dy:
        alt = kappa_lly_assignment(g, x, y)
        if alt != value:
            raise ConsistencyError(
                f"kappa({x},{y}): transport route {value} != assignment route {alt}")
    return value


def kappa_zero(g: Graph, x: int, y: int) -> Fraction:
    """Curvature at idleness 0, cross-checked against the assignment route
    whenever both endpoints have the same degree."""
    _require_edge(g, x, y)
    value = kappa_alpha(g, x, y, Fraction(0))
    if len(g.adj[x]) == len(g.adj[y]):
        alt = kappa_zero_assignment(g, x, y)
        if alt != value:
            raise ConsistencyError(
                f"kappa_0({x},{y}): transport route {value} != assignment route {alt}")
    return value


def gap_formula(g: Graph, x: int, y: int) -> tuple[Fraction, Optional[int]]:
    """Closed form for kappa - kappa_0 on an equal-degree edge.

    With k = |S1(x)\\B1(y)| = 0 (the endpoints share d-1 neighbors) the gap
    is 2/d and no pair statistic exists. Otherwise the gap is
    (3 - supsup)/d where supsup is the largest pair distance realized by
    any optimal assignment.
    """
    _require_edge(g, x, y)
    d = _require_equal_degrees(g, x, y)
    nxy = len(set(g.adj[x]) & set(g.adj[y]))
    if nxy == d - 1:
        return Fraction(2, d), None
    _, _, cost = assignment_instance(g, x, y)
    support = transport.optimal_pair_support(cost)
    supsup = max(cost[i][j] for i, j in support)
    return Fraction(3 - supsup, d), supsup


def curvature_gap(g: Graph, x: int, y: int) -> tuple[Fraction, Optional[int]]:
    """Gap between kappa and kappa_0 via the closed form, verified against
    the two curvatures computed independently."""
    value, supsup = gap_formula(g, x, y)
    direct = kappa_lly(g, x, y) - kappa_zero(g, x, y)
    if value != direct:
        raise ConsistencyError(
            f"gap({x},{y}): formula {value} != direct difference {direct}")
    return value, supsup


def equality_holds(g: Graph, x: int, y: int) -> bool:
    """Whether kappa == kappa_0, equivalently whether some optimal
    assignment moves a vertex across distance 3."""
    _require_edge(g, x, y)
    d = _require_equal_degrees(g, x, y)
    nxy = len(set(g.adj[x]) & set(g.adj[y]))
    if nxy == d - 1:
        return False
    _, _, cost = assignment_instance(g, x, y)
    best = transport.assignment_cost(cost)
    k = len(cost)
    return any(cost[i][j] == 3 and transport.forced_assignment_cost(cost, i, j) == best
               for i in range(k) for j in range(k))


def is_bone_idle_edge(g: Graph, x: int, y: int) -> bool:
    """An edge is bone-idle when its curvature vanishes for every idleness,
    which happens exactly when kappa_0 = 0 and kappa = 0."""
    return kappa_zero(g, x, y) == 0 and kappa_lly(g, x, y) == 0


def is_bone_idle(g: Graph) -> bool:
    return all(is_bone_idle_edge(g, x, y) for x, y in g.edges())


def is_ricci_flat(g: Graph) -> bool:
    return all(kappa_lly(g, x, y) == 0 for x, y in g.edges())


def is_zero_ricci_flat(g: Graph) -> bool:
    return all(kappa_zero(g, x, y) == 0 for x, y in g.edges())


@dataclass(frozen=True)
class LocalStructure:
    """Assignment statistics of an equal-degree edge.

    For any assignment with N_c pairs at distance c, the total cost is
    N1 + 2*N2 + 3*N3 and the pair count is k, so 2*N1 + N2 = 3k - cost is
    the same for every optimal assignment. A pair at distance 1 closes a
    4-cycle through the edge, a pair at distance 2 a 5-cycle.
    """

    k: int
    optimal_cost: int
    two_n1_plus_n2: int
    has_distance3_optimal: bool
    bone_idle: bool
    flat_case: Optional[str]  # triangle-free edges: "flat-distance3" / "flat-no-distance3" / "not-flat"


def local_structure(g: Graph, x: int, y: int) -> LocalStructure:
    _require_edge(g, x, y)
    d = _require_equal_degrees(g, x, y)
    nxy = len(set(g.adj[x]) & set(g.adj[y]))
    _, _, cost = assignment_instance(g, x, y)
    k = len(cost)
    c_star = transport.assignment_cost(cost)
    two_n1 = 3 * k - c_star
    has3 = any(cost[i][j] == 3 and transport.forced_assignment_cost(cost, i, j) == c_star
               for i in range(k) for j in range(k))
    bone = (2 * d - 4 - 3 * nxy == two_n1) and has3
    flat_case = None
    if nxy == 0:
        if c_star == d + 1:  # kappa == 0
            flat_case = "flat-distance3" if has3 else "flat-no-distance3"
        else:
            flat_case = "not-flat"
    return LocalStructure(k, c_star, two_n1, has3, bone, flat_case)


@dataclass(frozen=True)
class PiecewiseLinearFn:
    """Piecewise linear function on [0, 1]: breakpoints with values,
    linear in between. Construction enforces the shape facts used here:
    at most 3 segments, concave, value 0 at the right end."""

    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        bp, vals = self.breakpoints, self.values
        if len(bp) != len(vals) or len(bp) < 2:
            raise ValueError("need matching breakpoints and values, at least two")
        if bp[0] != 0 or bp[-1] != 1:
            raise ValueError("breakpoints must span [0, 1]")
        if any(a >= b for a, b in zip(bp, bp[1:])):
            raise ValueError("breakpoints must strictly increase")
        if len(bp) - 1 > 3:
            raise ConsistencyError("more than 3 linear segments")
        slopes = self.slopes()
        if any(s1 <= s2 for s1, s2 in zip(slopes, slopes[1:])):
            raise ConsistencyError("segments not strictly concave")
        if vals[-1] != 0:
            raise ConsistencyError("value at idleness 1 must be 0")

    def slopes(self) -> tuple[Fraction, ...]:
        return tuple((v2 - v1) / (b2 - b1)
                     for b1, b2, v1, v2 in zip(self.breakpoints, self.breakpoints[1:],
                                               self.values, self.values[1:]))

    @property
    def segments(self) -> int:
        return len(self.breakpoints) - 1

    def value_at(self, alpha) -> Fraction:
        alpha = Fraction(alpha)
        if not (0 <= alpha <= 1):
            raise ValueError("alpha outside [0, 1]")
        bp, vals = self.breakpoints, self.values
        for i in range(len(bp) - 1):
            if alpha <= bp[i + 1]:
                t = (alpha - bp[i]) / (bp[i + 1] - bp[i])
                return vals[i] + t * (vals[i + 1] - vals[i])
        raise AssertionError("unreachable")


_PROBE_BUDGET = 64


def idleness_function(g: Graph, x: int, y: int) -> PiecewiseLinearFn:
    """Exact reconstruction of alpha -> kappa_alpha(x, y).

    The function is concave and piecewise linear with at most 3 parts, and
    is linear on [1/(D+1), 1] with slope -kappa. For a concave piecewise
    linear f, f((a+b)/2) == (f(a)+f(b))/2 certifies linearity on all of
    [a, b], so bisection on rational midpoints pins each remaining slope
    down exactly; breakpoints then fall out as line intersections. Every
    reconstructed breakpoint value is re-checked against a direct
    evaluation. More than 64 evaluations would contradict the 3-piece
    structure and raises ConsistencyError.
    """
    _require_edge(g, x, y)
    cache: dict[Fraction, Fraction] = {}

    def f(a: Fraction) -> Fraction:
        if a not in cache:
            if len(cache) >= _PROBE_BUDGET:
                raise ConsistencyError(f"idleness_function({x},{y}) did not stabilize "
                                       f"within {_PROBE_BUDGET} evaluations")
            cache[a] = kappa_alpha(g, x, y, a)
        return cache[a]

    def linear_on(a: Fraction, b: Fraction) -> bool:
        return 2 * f((a + b) / 2) == f(a) + f(b)

    big_d = max(len(g.adj[x]), len(g.adj[y]))
    a_star = Fraction(1, big_d + 1)
    kap = kappa_lly(g, x, y)
    zero, one = Fraction(0), Fraction(1)
    f0 = f(zero)

    h = a_star
    while not linear_on(zero, h):
        h /= 2
    s1 = (f(h) - f0) / h

    if s1 == -kap:
        # one slope throughout; it must be the final line kappa*(1-alpha)
        if f0 != kap:
            raise ConsistencyError("single-slope function missing value kappa at 0")
        return PiecewiseLinearFn((zero, one), (f0, Fraction(0)))

    # f0 + s1*a  meets  kap*(1-a)
    cross = (kap - f0) / (s1 + kap)
    v_cross = f(cross)
    if v_cross == f0 + s1 * cross:
        return PiecewiseLinearFn((zero, cross, one), (f0, v_cross, Fraction(0)))

    # a middle piece is active strictly around `cross`
    delta = (a_star - cross) / 2
    while not linear_on(cross, cross + delta):
        delta /= 2
    s2 = (f(cross + delta) - v_cross) / delta
    if not (s1 > s2 > -kap):
        raise ConsistencyError("middle slope not strictly between outer slopes")
    b1 = (v_cross - s2 * cross - f0) / (s1 - s2)
    b2 = (kap + s2 * cross - v_cross) / (s2 + kap)
    if not (0 < b1 < b2 < 1):
        raise ConsistencyError("breakpoints out of order")
    v1, v2 = f(b1), f(b2)
    if v1 != f0 + s1 * b1 or v2 != kap * (1 - b2):
        raise ConsistencyError("reconstructed breakpoints disagree with direct evaluation")
    return PiecewiseLinearFn((zero, b1, b2, one), (f0, v1, v2, Fraction(0)))


@dataclass(frozen=True)
class EdgeCurvatureRecord:
    """Per-edge curvature bundle as reported by curvature_profile."""

    x: int
    y: int
    dx: int
    dy: int
    nxy: int
    kappa0: Fraction
    kappa_lly: Fraction
    gap_c: Optional[int]      # d*(kappa - kappa_0), present iff dx == dy
    supsup: Optional[int]     # largest optimal pair distance, present iff dx == dy and nxy < d-1
    bone_idle: bool


def edge_record(g: Graph, x: int, y: int) -> EdgeCurvatureRecord:
    dx, dy = g.degree(x), g.degree(y)
    nxy = len(set(g.adj[x]) & set(g.adj[y]))
    k0 = kappa_zero(g, x, y)
    k = kappa_lly(g, x, y)
    gap_c: Optional[int] = None
    supsup: Optional[int] = None
    if dx == dy:
        gap, supsup = curvature_gap(g, x, y)
        scaled = gap * dx
        if scaled.denominator != 1 or scaled not in (0, 1, 2):
            raise ConsistencyError(f"gap class {scaled} outside {{0,1,2}} on edge ({x},{y})")
        gap_c = int(scaled)
    return EdgeCurvatureRecord(x, y, dx, dy, nxy, k0, k, gap_c, supsup,
                               bone_idle=(k0 == 0 and k == 0))


def curvature_profile(g: Graph) -> list[EdgeCurvatureRecord]:
    """One record per edge, in sorted edge order."""
    edges = g.edges()
    if not edges:
        warnings.warn("graph has no edges; curvature profile is empty", stacklevel=2)
    return [edge_record(g, x, y) for x, y in edges]
