"""Generators for named graph families, random regular graphs, and
exhaustive enumeration of small labeled graphs."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .graphs import Graph, cartesian_product


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete(n) requires n >= 1")
    return Graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle(n) requires n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path(n) requires n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Hub vertex 0 plus n leaves."""
    if n < 1:
        raise ValueError("star(n) requires n >= 1")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("complete_bipartite(m, n) requires m, n >= 1")
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def hypercube(k: int) -> Graph:
    """k-dimensional cube, built as an iterated box product with K_2."""
    if k < 1:
        raise ValueError("hypercube(k) requires k >= 1")
    g = complete(2)
    for _ in range(k - 1):
        g = cartesian_product(g, complete(2))
    return g


def cocktail_party(k: int) -> Graph:
    """2k vertices, (2k-2)-regular: vertex 2i is non-adjacent only to 2i+1."""
    if k < 2:
        raise ValueError("cocktail_party(k) requires k >= 2")
    n = 2 * k
    edges = [(u, v) for u, v in combinations(range(n), 2) if not (u // 2 == v // 2)]
    return Graph(n, edges)


def near_cocktail(n: int) -> Graph:
    """Degree sequence (n-1, n-2, ..., n-2): one dominating vertex, the
    rest paired so each misses exactly its partner. Exists only for odd n."""
    if n < 3 or n % 2 == 0:
        raise ValueError("near_cocktail(n) requires odd n >= 3")
    edges = [(0, v) for v in range(1, n)]
    for u, v in combinations(range(1, n), 2):
        if not (u % 2 == 1 and v == u + 1):  # (1,2), (3,4), ... are the missing pairs
            edges.append((u, v))
    return Graph(n, edges)


def petersen() -> Graph:
    """Kneser graph K(5,2): the 2-subsets of a 5-set, adjacent iff disjoint."""
    pairs = list(combinations(range(5), 2))
    index = {p: i for i, p in enumerate(pairs)}
    edges = []
    for p, q in combinations(pairs, 2):
        if not (set(p) & set(q)):
            edges.append((index[p], index[q]))
    return Graph(10, edges)


def dodecahedral() -> Graph:
    """Generalized Petersen graph GP(10, 2): outer 10-cycle 0..9, inner
    vertices 10..19 with spokes and step-2 inner cycle."""
    edges = []
    for i in range(10):
        edges.append((i, (i + 1) % 10))
        edges.append((i, 10 + i))
        edges.append((10 + i, 10 + (i + 2) % 10))
    return Graph(20, edges)


# 4-regular polyhedron: 30 vertices, 60 edges, 20 triangular and 12
# pentagonal faces, every edge on exactly one of each. Shipped as a vetted
# constant edge list; the face counts are asserted by the test suite.
_ICOSIDODECAHEDRON_EDGES = (
    (1, 2), (1, 3), (2, 4), (3, 5), (4, 5), (1, 6), (2, 6), (2, 7), (4, 7),
    (1, 8), (3, 8), (3, 9), (5, 9), (5, 10), (4, 10), (11, 12), (12, 13),
    (11, 14), (14, 16), (13, 15), (15, 17), (16, 18), (18, 19), (17, 20),
    (19, 20), (19, 6), (20, 6), (12, 9), (13, 9), (11, 10), (14, 10),
    (15, 8), (17, 8), (18, 7), (16, 7), (11, 21), (12, 21), (13, 22),
    (15, 22), (22, 23), (23, 24), (21, 23), (21, 24), (24, 25), (25, 16),
    (25, 14), (22, 26), (23, 26), (24, 27), (25, 27), (27, 28), (26, 28),
    (28, 29), (27, 29), (29, 19), (30, 20), (30, 28), (30, 26), (29, 18),
    (30, 17),
)


def icosidodecahedron() -> Graph:
    return Graph(30, [(u - 1, v - 1) for u, v in _ICOSIDODECAHEDRON_EDGES])


def bi_antiprism(n: int) -> Graph:
    """Two concentric n-cycles; outer vertex y_k joins inner x_{k-1} and
    x_{k+1} (indices mod n). 4-regular on 2n vertices."""
    if n < 6:
        raise ValueError("bi_antiprism(n) requires n >= 6")
    edges = []
    for k in range(n):
        edges.append((k, (k + 1) % n))              # inner cycle
        edges.append((n + k, n + (k + 1) % n))      # outer cycle
        edges.append((n + k, (k - 1) % n))
        edges.append((n + k, (k + 1) % n))
    return Graph(2 * n, edges)


def _wrapped_grid(n: int, m: int, seam: list[tuple[int, int]]) -> Graph:
    """n x m grid with the i-direction closed into a cycle plus the given
    seam edges joining column 0 to column m-1. Vertex (i, j) -> i*m + j."""
    edges = []
    for i in range(n):
        for j in range(m):
            edges.append((i * m + j, ((i + 1) % n) * m + j))
            if j + 1 < m:
                edges.append((i * m + j, i * m + j + 1))
    edges.extend(seam)
    return Graph(n * m, edges)


def twisted_torus(n: int, m: int, l: int) -> Graph:
    """Cyclic n x m grid whose final column wraps back to column 0 with a
    shift of l rows. l = 0 gives the plain torus."""
    if n < 6:
        raise ValueError("twisted_torus requires n >= 6")
    if not (0 <= 2 * l <= n):
        raise ValueError("twisted_torus requires 0 <= l <= n/2")
    if m + l < 6:
        raise ValueError("twisted_torus requires m + l >= 6")
    seam = [(i * m + 0, ((i + l) % n) * m + (m - 1)) for i in range(n)]
    return _wrapped_grid(n, m, seam)


def torus_grid(n: int, m: int) -> Graph:
    """Plain n x m torus (twist 0); isomorphic to C_n box C_m."""
    if m < 6:
        raise ValueError("torus_grid requires m >= 6")
    return twisted_torus(n, m, 0)


def klein_bottle(n: int, m: int) -> Graph:
    """Cyclic n x m grid whose final column wraps back reflected."""
    if n < 6 or m < 6:
        raise ValueError("klein_bottle requires n, m >= 6")
    seam = [(i * m + 0, (n - 1 - i) * m + (m - 1)) for i in range(n)]
    return _wrapped_grid(n, m, seam)


_MAX_RESTARTS = 10_000


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Uniform-ish d-regular simple graph from the pairing model: pair up
    n*d stubs at random and restart on any loop or repeated edge.
    Deterministic for a fixed seed."""
    if d < 0 or d >= n:
        raise ValueError("random_regular requires 0 <= d < n")
    if (n * d) % 2 != 0:
        raise ValueError("random_regular requires n*d even")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(_MAX_RESTARTS):
        rng.shuffle(stubs)
        seen = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            key = (u, v) if u < v else (v, u)
            if key in seen:
                ok = False
                break
            seen.add(key)
        if ok:
            return Graph(n, seen)
    raise RuntimeError(f"pairing model failed after {_MAX_RESTARTS} restarts (n={n}, d={d})")


def _mask_connected(n: int, nbr: list[int]) -> bool:
    reach = 1
    while True:
        grown = reach
        rest = reach
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            grown |= nbr[v]
        if grown == reach:
            break
        reach = grown
    return reach == (1 << n) - 1


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled simple graphs on n vertices in ascending
    edge-mask order, optionally filtered to connected ones. Refuses n > 7."""
    if not (1 <= n <= 7):
        raise ValueError("enumerate_graphs supports 1 <= n <= 7")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        if connected_only:
            nbr = [0] * n
            bits = mask
            while bits:
                b = (bits & -bits).bit_length() - 1
                bits &= bits - 1
                u, v = pairs[b]
                nbr[u] |= 1 << v
                nbr[v] |= 1 << u
            if not _mask_connected(n, nbr):
                continue
        yield Graph(n, (pairs[b] for b in range(len(pairs)) if (mask >> b) & 1))
