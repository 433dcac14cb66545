import random
from fractions import Fraction as F
from itertools import permutations

import pytest

from orckit.curvature import (ConsistencyError, curvature_gap, curvature_profile,
                              equality_holds, is_bone_idle,
                              is_bone_idle_edge, is_ricci_flat, is_zero_ricci_flat,
                              kappa_alpha, kappa_lly, kappa_lly_assignment, kappa_zero,
                              kappa_zero_assignment, local_structure,
                              zero_assignment_instance)
from orckit.families import (cocktail_party, complete, complete_bipartite, cycle,
                             dodecahedral, hypercube, icosidodecahedron, near_cocktail,
                             path, petersen, random_regular, star, torus_grid)
from orckit.graphs import Graph


def test_kappa_alpha_examples():
    for g in (cycle(6), complete(4), petersen()):
        x, y = g.edges()[0]
        assert kappa_alpha(g, x, y, 1) == 0
    assert kappa_alpha(cycle(6), 0, 1, 0) == 0
    assert kappa_alpha(complete(2), 0, 1, 0) == 0
    with pytest.raises(ValueError):
        kappa_alpha(cycle(6), 0, 2, 0)  # not an edge


def test_kappa_lly_closed_forms():
    for n in range(3, 11):
        g = complete(n)
        assert kappa_lly(g, 0, 1) == F(n, n - 1)
    for k in range(2, 7):
        q = hypercube(k)
        assert kappa_lly(q, *q.edges()[0]) == F(2, k)
        b = complete_bipartite(k, k)
        assert kappa_lly(b, 0, k) == F(2, k)
    assert kappa_lly(cycle(5), 0, 1) == F(1, 2)
    assert kappa_lly(complete(2), 0, 1) == 2


def test_kappa_lly_assignment_route():
    for k in range(2, 6):
        g = cocktail_party(k)
        assert kappa_lly_assignment(g, 0, 2) == 1
    p = petersen()
    assert kappa_lly_assignment(p, *p.edges()[0]) == 0
    assert kappa_lly_assignment(complete_bipartite(3, 3), 0, 3) == F(2, 3)
    with pytest.raises(ValueError, match="unequal"):
        kappa_lly_assignment(star(3), 0, 1)


def test_kappa_zero_examples():
    for k in range(2, 6):
        q = hypercube(k)
        assert kappa_zero(q, *q.edges()[0]) == 0
    st = star(4)
    assert kappa_zero(st, 0, 1) == 0
    p = petersen()
    assert kappa_zero(p, *p.edges()[0]) == F(-1, 3)
    assert kappa_zero_assignment(p, *p.edges()[0]) == F(-1, 3)


def test_petersen_kappa_zero_by_brute_force_bijections():
    # independent oracle: enumerate all bijections on the explicit 3x3 instance
    p = petersen()
    x, y = p.edges()[0]
    left, right, cost = zero_assignment_instance(p, x, y)
    assert len(left) == len(right) == 3
    best = min(sum(cost[i][perm[i]] for i in range(3)) for perm in permutations(range(3)))
    assert F(3 - best, 3) == F(-1, 3)
    assert kappa_zero(p, x, y) == F(3 - best, 3)


def test_route_agreement_across_small_graphs():
    rng = random.Random(12)
    graphs = [cocktail_party(3), petersen(), hypercube(3), cycle(7),
              random_regular(10, 4, 0), random_regular(12, 3, 1)]
    for g in graphs:
        for x, y in g.edges():
            assert kappa_lly(g, x, y) == kappa_lly_assignment(g, x, y)
            assert kappa_zero(g, x, y) == kappa_zero_assignment(g, x, y)
        _ = rng  # sampled corpus is already deterministic


def test_gap_examples():
    for n in range(3, 8):
        gap, supsup = curvature_gap(complete(n), 0, 1)
        assert gap == F(2, n - 1) and supsup is None
    p = petersen()
    assert curvature_gap(p, *p.edges()[0]) == (F(1, 3), 2)
    assert curvature_gap(cycle(6), 0, 1) == (F(0), 3)
    with pytest.raises(ValueError, match="unequal"):
        curvature_gap(star(3), 0, 1)


def test_gap_class_in_range():
    for g in (petersen(), cocktail_party(4), hypercube(4), cycle(9), complete(6)):
        for x, y in g.edges():
            gap, _ = curvature_gap(g, x, y)
            scaled = gap * g.degree(x)
            assert scaled.denominator == 1 and int(scaled) in (0, 1, 2)


def test_equality_condition_examples():
    assert equality_holds(cycle(6), 0, 1)
    q3 = hypercube(3)
    assert not equality_holds(q3, *q3.edges()[0])
    assert not equality_holds(complete(4), 0, 1)
    # equality iff the two curvatures agree
    for g in (cycle(5), petersen(), cocktail_party(3), hypercube(4)):
        for x, y in g.edges():
            assert equality_holds(g, x, y) == (kappa_lly(g, x, y) == kappa_zero(g, x, y))


def test_bone_idle_examples():
    assert is_bone_idle(torus_grid(6, 6))
    assert is_bone_idle(icosidodecahedron())
    assert not is_bone_idle(complete_bipartite(3, 3))
    assert is_bone_idle_edge(cycle(8), 0, 1)
    assert not is_bone_idle_edge(cycle(5), 0, 1)
    assert is_bone_idle(Graph(3))  # vacuous: no edges


def test_flatness_predicates():
    assert is_ricci_flat(petersen())
    assert not is_zero_ricci_flat(petersen())
    assert is_ricci_flat(dodecahedral())
    assert is_zero_ricci_flat(cycle(5))
    assert not is_ricci_flat(cycle(5))
    assert is_zero_ricci_flat(path(5))
    assert is_zero_ricci_flat(star(5))


def test_local_structure_torus_case():
    t = torus_grid(6, 6)
    ls = local_structure(t, *t.edges()[0])
    # flat with a distance-3 pair: some optimal assignment has N1 = d-2 = 2, N2 = 0
    assert ls.flat_case == "flat-distance3"
    assert ls.bone_idle
    assert ls.k == 3 and ls.optimal_cost == 5
    assert ls.two_n1_plus_n2 == 2 * 4 - 4  # = 2*N1 + N2 with N1=2, N2=0


def test_local_structure_hypercube_matching():
    q3 = hypercube(3)
    x, y = q3.edges()[0]
    ls = local_structure(q3, x, y)
    assert not ls.bone_idle and not ls.has_distance3_optimal
    # kappa_0 = 0 via a perfect matching between the full 1-spheres
    left, right, cost = zero_assignment_instance(q3, x, y)
    from orckit.transport import assignment_cost
    assert assignment_cost(cost) == len(left)  # every pair matched at distance 1
    assert kappa_zero(q3, x, y) == 0


def test_local_structure_k33():
    ls = local_structure(complete_bipartite(3, 3), 0, 3)
    assert not ls.has_distance3_optimal  # diameter 2
    assert ls.flat_case == "not-flat"


def test_local_structure_identity_enumerated():
    from orckit.curvature import assignment_instance
    for g in (petersen(), cocktail_party(3), torus_grid(6, 6), icosidodecahedron()):
        for x, y in list(g.edges())[:8]:
            ls = local_structure(g, x, y)
            _, _, cost = assignment_instance(g, x, y)
            assert ls.k <= 5
            for perm in permutations(range(ls.k)):
                dists = [cost[i][perm[i]] for i in range(ls.k)]
                if sum(dists) == ls.optimal_cost:
                    assert 2 * dists.count(1) + dists.count(2) == ls.two_n1_plus_n2


def test_curvature_profile():
    records = curvature_profile(cycle(6))
    assert len(records) == 6 and all(r.bone_idle for r in records)
    records = curvature_profile(petersen())
    assert len(records) == 15
    assert all(r.kappa_lly == 0 and r.kappa0 == F(-1, 3) for r in records)
    assert all(r.gap_c == 1 and r.supsup == 2 for r in records)
    records = curvature_profile(complete(4))
    assert len(records) == 6 and all(r.kappa_lly == F(4, 3) for r in records)
    assert all(r.gap_c == 2 and r.supsup is None for r in records)


def test_curvature_profile_unequal_degrees():
    rec = curvature_profile(star(3))[0]
    assert rec.gap_c is None and rec.supsup is None
    assert rec.kappa0 == 0


def test_curvature_profile_empty_graph_warns():
    with pytest.warns(UserWarning, match="no edges"):
        assert curvature_profile(Graph(4)) == []


def test_upper_bound_on_sample():
    for g in (complete(5), petersen(), star(4), near_cocktail(7), random_regular(12, 4, 7)):
        for x, y in g.edges():
            nxy = len(set(g.adj[x]) & set(g.adj[y]))
            bound = F(nxy + 2, max(g.degree(x), g.degree(y)))
            assert kappa_lly(g, x, y) <= bound
    # K_5 attains the bound with equality
    assert kappa_lly(complete(5), 0, 1) == F(2 + 3, 4)


def test_corrupted_assignment_is_caught():
    # off-by-one in the assignment optimum must break route agreement
    from orckit import transport
    original = transport.assignment_cost

    def corrupted(cost):
        return original(cost) + 1

    transport.assignment_cost = corrupted
    try:
        with pytest.raises(ConsistencyError):
            kappa_lly(petersen(), *petersen().edges()[0])
    finally:
        transport.assignment_cost = original
