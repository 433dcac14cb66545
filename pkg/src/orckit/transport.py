"""Exact optimal transport on graphs.

Everything here is exact: masses and results are `fractions.Fraction`,
solver internals are arbitrary-precision integers obtained by scaling all
masses with the common denominator. No floating point enters any
computation in this module.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Optional

from .graphs import Graph, INFINITY, distances_from

Measure = dict[int, Fraction]
CostMatrix = list[list[int]]

_INT_INF = 1 << 60


def mu_alpha(g: Graph, x: int, alpha) -> Measure:
    """Lazy random-walk measure of x: mass alpha stays at x, the rest is
    spread uniformly over the neighbors."""
    alpha = Fraction(alpha)
    if not (0 <= alpha <= 1):
        raise ValueError("idleness must lie in [0, 1]")
    g.check_vertex(x)
    if alpha == 1:
        return {x: Fraction(1)}
    d = len(g.adj[x])
    if d == 0:
        raise ValueError(f"vertex {x} is isolated; only idleness 1 is defined")
    out: Measure = {}
    if alpha > 0:
        out[x] = alpha
    share = (1 - alpha) / d
    for w in g.adj[x]:
        out[w] = share
    return out


def validate_measure(g: Graph, mu: Measure) -> None:
    if not mu:
        raise ValueError("measure has empty support")
    total = Fraction(0)
    for v, mass in mu.items():
        g.check_vertex(v)
        mass = Fraction(mass)
        if mass <= 0:
            raise ValueError(f"non-positive mass {mass} at vertex {v}")
        total += mass
    if total != 1:
        raise ValueError(f"masses sum to {total}, not 1")


class _MinCostFlow:
    """Successive shortest augmenting paths with SPFA label correction.

    Integer capacities and costs only; exact by construction. Small
    instances (tens of nodes) are all this artifact ever solves.
    """

    def __init__(self, n: int) -> None:
        self.n = n
        self.arcs: list[list[list[int]]] = [[] for _ in range(n)]

    def add_arc(self, u: int, v: int, cap: int, cost: int) -> None:
        self.arcs[u].append([v, cap, cost, len(self.arcs[v])])
        self.arcs[v].append([u, 0, -cost, len(self.arcs[u]) - 1])

    def run(self, s: int, t: int, need: int) -> tuple[int, int]:
        """Push up to `need` units from s to t; returns (flow, cost)."""
        arcs = self.arcs
        sent = 0
        total_cost = 0
        while need > 0:
            dist = [_INT_INF] * self.n
            prev: list[Optional[tuple[int, int]]] = [None] * self.n
            in_queue = [False] * self.n
            dist[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                in_queue[u] = False
                du = dist[u]
                for i, (v, cap, cost, _) in enumerate(arcs[u]):
                    if cap > 0 and du + cost < dist[v]:
                        dist[v] = du + cost
                        prev[v] = (u, i)
                        if not in_queue[v]:
                            in_queue[v] = True
                            queue.append(v)
            if dist[t] >= _INT_INF:
                break
            push = need
            v = t
            while v != s:
                u, i = prev[v]
                push = min(push, arcs[u][i][1])
                v = u
            v = t
            while v != s:
                u, i = prev[v]
                arc = arcs[u][i]
                arc[1] -= push
                arcs[v][arc[3]][1] += push
                v = u
            sent += push
            need -= push
            total_cost += push * dist[t]
        return sent, total_cost


def _scaled_supplies(masses: dict[int, Fraction], scale: int) -> dict[int, int]:
    out = {}
    for v, m in masses.items():
        num = m.numerator * scale
        assert num % m.denominator == 0
        out[v] = num // m.denominator
    return out


def wasserstein1(g: Graph, mu: Measure, nu: Measure, fix_shared_mass: bool = True) -> Fraction:
    """Exact Wasserstein-1 distance between two probability measures.

    Masses are scaled by the common denominator to integer supplies and
    demands, and the resulting transportation problem is solved by exact
    integer min-cost flow over hop-distance costs. With fix_shared_mass,
    mass shared by both measures is fixed in place first; an optimal plan
    with that property always exists, so the value is unchanged.
    """
    validate_measure(g, mu)
    validate_measure(g, nu)
    if fix_shared_mass:
        sources: dict[int, Fraction] = {}
        sinks: dict[int, Fraction] = {}
        for v in set(mu) | set(nu):
            r = mu.get(v, Fraction(0)) - nu.get(v, Fraction(0))
            if r > 0:
                sources[v] = r
            elif r < 0:
                sinks[v] = -r
        if not sources:
            return Fraction(0)
    else:
        sources = dict(mu)
        sinks = dict(nu)

    scale = math.lcm(*(m.denominator for m in sources.values()),
                     *(m.denominator for m in sinks.values()))
    supply = _scaled_supplies(sources, scale)
    demand = _scaled_supplies(sinks, scale)
    total = sum(supply.values())
    assert total == sum(demand.values())

    src = sorted(supply)
    snk = sorted(demand)
    n_nodes = len(src) + len(snk) + 2
    s, t = n_nodes - 2, n_nodes - 1
    net = _MinCostFlow(n_nodes)
    for i, u in enumerate(src):
        net.add_arc(s, i, supply[u], 0)
        dist = distances_from(g, u)
        for j, v in enumerate(snk):
            d = dist[v]
            if d is not INFINITY:
                net.add_arc(i, len(src) + j, total, d)
    for j, v in enumerate(snk):
        net.add_arc(len(src) + j, t, demand[v], 0)
    sent, cost = net.run(s, t, total)
    if sent < total:
        raise ValueError("supports are not mutually reachable (infinite distance)")
    return Fraction(cost, scale)


def wasserstein1_oracle(g: Graph, mu: Measure, nu: Measure, max_tokens: int = 8) -> Fraction:
    """Brute-force check value: scale both measures to unit tokens and try
    every bijection between the two token multisets."""
    validate_measure(g, mu)
    validate_measure(g, nu)
    scale = math.lcm(*(m.denominator for m in mu.values()),
                     *(m.denominator for m in nu.values()))
    if scale > max_tokens:
        raise ValueError(f"token count {scale} exceeds oracle bound {max_tokens}")
    left = [v for v in sorted(mu) for _ in range(int(mu[v] * scale))]
    right = [v for v in sorted(nu) for _ in range(int(nu[v] * scale))]
    assert len(left) == len(right) == scale
    dist = {u: distances_from(g, u) for u in set(left)}
    best = None
    for perm in permutations(right):
        cost = 0
        for u, v in zip(left, perm):
            d = dist[u][v]
            if d is INFINITY:
                cost = None
                break
            cost += d
        if cost is not None and (best is None or cost < best):
            best = cost
    if best is None:
        raise ValueError("supports are not mutually reachable (infinite distance)")
    return Fraction(best, scale)


def _check_square(cost: CostMatrix) -> int:
    k = len(cost)
    for row in cost:
        if len(row) != k:
            raise ValueError("cost matrix must be square")
        for c in row:
            if not isinstance(c, int) or c < 0:
                raise ValueError("cost entries must be non-negative integers")
    return k


def assignment_cost(cost: CostMatrix) -> int:
    """Minimum total cost of a perfect matching (Hungarian algorithm with
    row/column potentials; exact on integer costs)."""
    k = _check_square(cost)
    if k == 0:
        return 0
    u = [0] * (k + 1)
    v = [0] * (k + 1)
    match = [0] * (k + 1)  # match[j] = row assigned to column j (1-based)
    way = [0] * (k + 1)
    for i in range(1, k + 1):
        match[0] = i
        j0 = 0
        minv = [_INT_INF] * (k + 1)
        used = [False] * (k + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta = _INT_INF
            j1 = 0
            for j in range(1, k + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(k + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0 != 0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    return sum(cost[match[j] - 1][j - 1] for j in range(1, k + 1))


def _minor(cost: CostMatrix, row: int, col: int) -> CostMatrix:
    return [[c for j, c in enumerate(r) if j != col] for i, r in enumerate(cost) if i != row]


def forced_assignment_cost(cost: CostMatrix, row: int, col: int) -> int:
    """Cheapest perfect matching that maps `row` to `col`."""
    return cost[row][col] + assignment_cost(_minor(cost, row, col))


@dataclass(frozen=True)
class Assignment:
    """A perfect matching row i -> column perm[i] with its total cost."""

    perm: tuple[int, ...]
    cost: int

    def __post_init__(self) -> None:
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("perm is not a bijection")


def min_cost_assignment(cost: CostMatrix) -> Assignment:
    """Optimal assignment with a deterministic tie-break: among all optimal
    permutations, the lexicographically smallest. Built row by row: fix the
    smallest column whose forced completion still achieves the optimum."""
    k = _check_square(cost)
    best = assignment_cost(cost)
    cols = list(range(k))
    sub = [row[:] for row in cost]
    target = best
    perm = []
    for i in range(k):
        for idx in range(len(cols)):
            rest = [[r[j] for j in range(len(cols)) if j != idx] for r in sub[1:]]
            if sub[0][idx] + assignment_cost(rest) == target:
                perm.append(cols[idx])
                target -= sub[0][idx]
                cols.pop(idx)
                sub = [[r[j] for j in range(len(r)) if j != idx] for r in sub[1:]]
                break
        else:
            raise AssertionError("no extendable column; Hungarian result inconsistent")
    result = Assignment(tuple(perm), best)
    assert best == sum(cost[i][result.perm[i]] for i in range(k))
    return result


def optimal_pair_support(cost: CostMatrix) -> set[tuple[int, int]]:
    """All pairs (i, j) used by at least one optimal assignment: forcing
    i -> j and re-solving must still reach the unforced optimum."""
    k = _check_square(cost)
    if k == 0:
        return set()
    best = assignment_cost(cost)
    return {(i, j) for i in range(k) for j in range(k)
            if forced_assignment_cost(cost, i, j) == best}
