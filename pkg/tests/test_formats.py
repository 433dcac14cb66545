import pytest

from orckit.families import (complete, cycle, dodecahedral, hypercube,
                             icosidodecahedron, petersen, random_regular, star)
from orckit.formats import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from orckit.graphs import Graph


def test_graph6_k4_frozen():
    # hand-encoded: header chr(4+63)='C', upper triangle all ones -> 63+63='~'
    assert write_graph6(complete(4)) == "C~"
    assert parse_graph6("C~") == complete(4)


def test_graph6_small_values():
    assert write_graph6(Graph(0)) == "?"
    assert write_graph6(Graph(1)) == "@"
    assert write_graph6(Graph(2, [(0, 1)])) == "A_"
    assert parse_graph6("A_") == Graph(2, [(0, 1)])


def test_graph6_round_trips():
    for g in (petersen(), dodecahedral(), icosidodecahedron(), hypercube(4),
              star(5), cycle(12), Graph(5), Graph(1)):
        assert parse_graph6(write_graph6(g)) == g


def test_graph6_large_n_header():
    g = random_regular(70, 3, 42)
    text = write_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


def test_graph6_optional_prefix_and_whitespace():
    g = petersen()
    assert parse_graph6(">>graph6<<" + write_graph6(g)) == g
    assert parse_graph6(write_graph6(g) + "\n") == g


def test_graph6_malformed():
    with pytest.raises(ValueError, match="position"):
        parse_graph6("C!")  # '!' is below the graph6 byte range
    with pytest.raises(ValueError, match="body bytes"):
        parse_graph6("C~~")
    with pytest.raises(ValueError, match="body bytes"):
        parse_graph6("C")
    with pytest.raises(ValueError, match="empty"):
        parse_graph6("")
    with pytest.raises(ValueError, match="padding"):
        # n=3 needs 3 bits; set a padding bit: value 1 -> chr(64)
        parse_graph6("B" + chr(63 + 1))


def test_edge_list_round_trips():
    for g in (petersen(), Graph(4, [(0, 1)]), Graph(3), star(4)):
        assert parse_edge_list(write_edge_list(g)) == g


def test_edge_list_parsing():
    assert parse_edge_list("0 1\n1 2") == Graph(3, [(0, 1), (1, 2)])
    assert parse_edge_list("# comment\n0 1   # trailing\n\nn 5\n") == Graph(5, [(0, 1)])
    assert parse_edge_list("") == Graph(0)


def test_edge_list_errors_carry_line_numbers():
    with pytest.raises(ValueError, match="line 2.*self-loop"):
        parse_edge_list("0 1\n2 2")
    with pytest.raises(ValueError, match="line 3.*duplicate edge"):
        parse_edge_list("0 1\n1 2\n1 0")
    with pytest.raises(ValueError, match="line 1"):
        parse_edge_list("0 1 2")
    with pytest.raises(ValueError, match="line 2"):
        parse_edge_list("0 1\nx y")
    with pytest.raises(ValueError, match="duplicate header"):
        parse_edge_list("n 3\nn 4")
    with pytest.raises(ValueError, match="header declares"):
        parse_edge_list("n 2\n0 5")
    with pytest.raises(ValueError, match="negative"):
        parse_edge_list("-1 2")


def test_formats_round_trip_generator_sweep():
    graphs = [complete(n) for n in range(1, 7)]
    graphs += [cycle(n) for n in range(3, 9)]
    graphs += [random_regular(12, 3, s) for s in range(4)]
    for g in graphs:
        assert parse_graph6(write_graph6(g)) == g
        assert parse_edge_list(write_edge_list(g)) == g
