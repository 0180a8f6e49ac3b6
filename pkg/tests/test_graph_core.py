import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wreg.graph_core import (
    Graph,
    closed_neighborhood_deleted,
    complement,
    complete,
    cycle,
    g_sub_e,
    induced_matching_number,
    induced_subgraph,
    is_chordal,
    path,
    remove_edge,
    star,
    whisker_all,
    whiskered_cycle,
)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def brute_indmatch(g):
    edges = g.edges()
    best = 0
    for k in range(1, len(edges) + 1):
        for sub in itertools.combinations(edges, k):
            ok = True
            for (a, b), (c, d) in itertools.combinations(sub, 2):
                if {a, b} & {c, d} or any(g.has_edge(x, y) for x in (a, b) for y in (c, d)):
                    ok = False
                    break
            if ok:
                best = k
                break
        else:
            break
    return best


def test_cycle_basic():
    c3 = cycle(3)
    assert c3.edges() == [(0, 1), (0, 2), (1, 2)]
    c5 = cycle(5)
    assert c5.n == 5 and c5.edge_count == 5 and c5.degrees() == [2] * 5
    with pytest.raises(ValueError):
        cycle(2)


def test_whisker_all():
    w3 = whisker_all(cycle(3))
    assert (w3.n, w3.edge_count) == (6, 6)
    w5 = whiskered_cycle(5)
    assert (w5.n, w5.edge_count) == (10, 10)
    assert w5.degrees() == [3] * 5 + [1] * 5
    assert w5.labels == tuple(f"x{i}" for i in range(1, 11))
    assert all(w5.has_edge(i, 5 + i) for i in range(5))
    p4 = whisker_all(path(2))
    assert nx.is_isomorphic(to_nx(p4), nx.path_graph(4))


def test_whisker_custom_labels():
    g = Graph.from_edges(2, [(0, 1)], ["a", "b"])
    assert whisker_all(g).labels == ("a", "b", "a'", "b'")


def test_induced_subgraph():
    p = induced_subgraph(cycle(5), {0, 1, 2})
    assert p.edges() == [(0, 1), (1, 2)]
    assert p.labels == ("x1", "x2", "x3")
    assert p.origin == (0, 1, 2)
    g = whiskered_cycle(4)
    same = induced_subgraph(g, range(g.n))
    assert same.edge_key() == g.edge_key()
    assert induced_subgraph(g, set()).n == 0
    with pytest.raises(IndexError):
        induced_subgraph(g, {99})


def test_remove_edge():
    p3 = remove_edge(cycle(3), (0, 2))
    assert p3.n == 3 and p3.edge_count == 2
    assert not p3.has_edge(0, 2)
    with pytest.raises(ValueError):
        remove_edge(p3, (0, 2))


def test_g_sub_e():
    h = g_sub_e(cycle(5), (0, 1))
    assert h.labels == ("x4",) and h.edge_count == 0
    assert g_sub_e(cycle(3), (0, 1)).n == 0
    h = g_sub_e(whiskered_cycle(5), (0, 1))
    assert h.labels == ("x4", "x8", "x9", "x10")
    assert [(h.labels[u], h.labels[v]) for u, v in h.edges()] == [("x4", "x9")]
    with pytest.raises(ValueError):
        g_sub_e(cycle(5), (0, 2))


def test_closed_neighborhood_deleted():
    h = closed_neighborhood_deleted(cycle(4), 0)
    assert h.labels == ("x3",)
    assert closed_neighborhood_deleted(star(4), 0).n == 0
    g = Graph.from_edges(3, [(0, 1)])
    h = closed_neighborhood_deleted(g, 2)
    assert h.labels == ("x1", "x2") and h.edge_count == 1
    with pytest.raises(IndexError):
        closed_neighborhood_deleted(g, 3)


@pytest.mark.parametrize("n,expected", [(3, 1), (4, 2), (5, 2), (6, 3)])
def test_indmatch_whiskered_cycle(n, expected):
    assert induced_matching_number(whiskered_cycle(n)) == expected


def test_indmatch_small():
    assert induced_matching_number(path(2)) == 1
    assert induced_matching_number(cycle(5)) == brute_indmatch(cycle(5)) == 1
    assert induced_matching_number(Graph.from_edges(3, [])) == 0


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_indmatch_matches_brute_force(g):
    assert induced_matching_number(g) == brute_indmatch(g)


@settings(max_examples=60, deadline=None)
@given(graphs(), st.data())
def test_indmatch_monotone_under_induced(g, data):
    keep = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    assert induced_matching_number(induced_subgraph(g, keep)) <= induced_matching_number(g)


def test_chordal_examples():
    assert is_chordal(complement(whiskered_cycle(3)))
    assert not is_chordal(cycle(4))
    assert is_chordal(star(5)) and is_chordal(path(7))


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_chordal_matches_networkx(g):
    assert is_chordal(g) == nx.is_chordal(to_nx(g))


def test_complement():
    assert complement(complete(3)).edge_count == 0
    assert nx.is_isomorphic(to_nx(complement(cycle(5))), to_nx(cycle(5)))


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_complement_involution_and_json(g):
    assert complement(complement(g)).edge_key() == g.edge_key()
    text = g.to_json()
    back = Graph.from_json(text)
    assert back == g and back.to_json() == text


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_whisker_degrees(g):
    w = whisker_all(g)
    assert w.degrees() == [d + 1 for d in g.degrees()] + [1] * g.n
    assert w.edge_count == g.edge_count + g.n


@settings(max_examples=60, deadline=None)
@given(graphs(), st.data())
def test_g_sub_e_from_neighborhoods(g, data):
    if not g.edges():
        return
    u, v = data.draw(st.sampled_from(g.edges()))
    drop = {u, v} | set(g.neighbors(u)) | set(g.neighbors(v))
    expect = induced_subgraph(g, [x for x in range(g.n) if x not in drop])
    assert g_sub_e(g, (u, v)) == expect


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))
    with pytest.raises(ValueError):
        Graph(1, (0b1,))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 5)])
    with pytest.raises(ValueError):
        Graph.from_edges(65, [])


def test_json_shape():
    assert cycle(3).to_json() == '{"n":3,"labels":["x1","x2","x3"],"edges":[[1,2],[1,3],[2,3]]}'
