"""Shared brute-force oracles and random instance builders for the tests.

Everything here is deliberately independent of the library's own
algorithms: girth by explicit cycle enumeration, connectivity by plain
DFS, optimal assignments by full permutation scans.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

from orckit.graphs import Graph


def brute_girth(g: Graph):
    """Shortest cycle length by checking every vertex subset for an
    induced-or-not cycle ordering. Exponential; fine for n <= 8."""
    best = None
    for length in range(3, g.n + 1):
        for subset in combinations(range(g.n), length):
            first = subset[0]
            rest = subset[1:]
            for order in permutations(rest):
                ring = (first,) + order
                if all(g.has_edge(ring[i], ring[(i + 1) % length]) for i in range(length)):
                    return length
        if best is not None:
            break
    return float("inf")


def brute_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def brute_assignment_optimum(cost) -> int:
    k = len(cost)
    return min((sum(cost[i][p[i]] for i in range(k)) for p in permutations(range(k))),
               default=0)


def brute_optimal_permutations(cost):
    k = len(cost)
    best = brute_assignment_optimum(cost)
    return [p for p in permutations(range(k)) if sum(cost[i][p[i]] for i in range(k)) == best]


def random_connected_graph(rng: random.Random, n: int, extra_p: float = 0.3) -> Graph:
    """Random spanning tree plus independent extra edges."""
    verts = list(range(n))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, n):
        j = rng.randrange(i)
        u, v = verts[i], verts[j]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra_p:
                edges.add((u, v))
    return Graph(n, edges)


def random_token_measure(rng: random.Random, g: Graph, tokens: int) -> dict[int, Fraction]:
    """A measure whose masses are multiples of 1/tokens."""
    support = rng.sample(range(g.n), rng.randint(1, min(g.n, tokens)))
    weights = [0] * len(support)
    for _ in range(tokens):
        weights[rng.randrange(len(support))] += 1
    return {v: Fraction(w, tokens) for v, w in zip(support, weights) if w}
