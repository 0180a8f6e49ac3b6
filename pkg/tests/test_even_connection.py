import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wreg.even_connection import (
    EvenConnectionWitness,
    colon_generators_banerjee,
    colon_graph_all_factorizations,
    colon_graph_to_json,
    even_connected_to,
    is_even_connected,
    quadrics,
    validate_witness,
)
from wreg.graph_core import Graph, cycle, path, whiskered_cycle
from wreg.monomial_algebra import Monomial, colon, edge_factorizations, edge_ideal, power


def fact(g, text, s):
    facts = edge_factorizations(Monomial.parse(text, g.labels), g, s)
    assert facts, text
    return facts[0]


def brute_walks(g, f):
    """Every (u, v, length) reachable by an explicit walk enumeration.

    A walk with l odd steps from f uses at most s factorization edges, so
    lengths beyond 2s + 1 never need checking.
    """
    budget = Counter(tuple(sorted(e)) for e in f.edges)
    found = {}

    def extend(walk):
        steps = len(walk) - 1
        if steps >= 3 and steps % 2 == 1:
            used = Counter(
                tuple(sorted((walk[k], walk[k + 1]))) for k in range(1, steps, 2)
            )
            if all(c <= budget[e] for e, c in used.items()):
                key = (walk[0], walk[-1])
                found[key] = min(found.get(key, steps), steps)
        if steps == 2 * f.s + 1:
            return
        for y in g.neighbors(walk[-1]):
            if steps % 2 == 1 and tuple(sorted((walk[-1], y))) not in budget:
                continue
            extend(walk + [y])

    for u in range(g.n):
        extend([u])
    return found


@st.composite
def graphs_with_factorization(draw, max_n=7, max_s=3):
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1, max_size=9))
    g = Graph.from_edges(n, chosen)
    es = g.edges()
    s = draw(st.integers(1, max_s))
    picks = draw(st.lists(st.sampled_from(es), min_size=s, max_size=s))
    exps = [0] * n
    for u, v in picks:
        exps[u] += 1
        exps[v] += 1
    m = Monomial(g.labels, tuple(exps))
    f = draw(st.sampled_from(edge_factorizations(m, g, s)))
    return g, f


def test_wcycle5_example():
    g = whiskered_cycle(5)
    f = fact(g, "x1*x2", 1)
    w = is_even_connected(g, f, g.index("x5"), g.index("x3"))
    assert [g.labels[v] for v in w.path] == ["x5", "x1", "x2", "x3"]
    assert w.assignment == (0,)
    assert w.render(g) == "x5 - x1 = x2 - x3"
    assert validate_witness(g, f, g.index("x5"), g.index("x3"), w)


def test_wcycle3_self_connected():
    g = whiskered_cycle(3)
    f = fact(g, "x1*x2", 1)
    x3 = g.index("x3")
    w = is_even_connected(g, f, x3, x3)
    assert [g.labels[v] for v in w.path] == ["x3", "x1", "x2", "x3"]
    _, squares = colon_generators_banerjee(g, f)
    assert x3 in squares


def test_single_edge_walk_back_and_forth():
    # walks may revisit vertices: 1 - 2 = 1 - 2 uses the edge once
    g = path(2)
    f = fact(g, "x1*x2", 1)
    w = is_even_connected(g, f, 0, 1)
    assert w is not None and w.path == (0, 1, 0, 1)


def test_path3_endpoint_not_self_connected():
    g = path(3)
    f = fact(g, "x1*x2", 1)
    assert is_even_connected(g, f, 2, 2) is None
    assert is_even_connected(g, f, 2, 0) is None
    # x3 - x2 = x1 - x2 exists, but that pair is an edge already
    assert is_even_connected(g, f, 2, 1).path == (2, 1, 0, 1)


def test_wcycle4_s1_no_squares():
    g = whiskered_cycle(4)
    for f in edge_factorizations(Monomial.parse("x1*x2", g.labels), g, 1):
        _, squares = colon_generators_banerjee(g, f)
        assert not squares


def test_other_graph_rejected():
    f = fact(cycle(4), "x1*x2", 1)
    with pytest.raises(ValueError):
        is_even_connected(path(4), f, 0, 1)


def test_validate_rejects_bad_witnesses():
    g = whiskered_cycle(5)
    f = fact(g, "x1*x2", 1)
    u, v = g.index("x5"), g.index("x3")
    assert not validate_witness(g, f, u, v, EvenConnectionWitness((u, 0, 1), (0,)))
    assert not validate_witness(g, f, u, v, EvenConnectionWitness((u, 0, 1, 2), (1,)))
    assert not validate_witness(g, f, u, v, EvenConnectionWitness((u, 3, 2, v), (0,)))
    # edge x1x2 would be used twice but occurs once
    walk = (u, 0, 1, 0, 1, 2)
    assert not validate_witness(g, f, u, v, EvenConnectionWitness(walk, (0, 0)))


@settings(max_examples=60, deadline=None)
@given(graphs_with_factorization())
def test_search_matches_brute_force(gf):
    g, f = gf
    found = brute_walks(g, f)
    for u, v in itertools.product(range(g.n), repeat=2):
        w = is_even_connected(g, f, u, v)
        if (u, v) in found:
            assert w is not None
            assert validate_witness(g, f, u, v, w)
            assert len(w.path) - 1 == found[(u, v)]
        else:
            assert w is None
        assert (w is None) == (is_even_connected(g, f, v, u) is None)
    for u in range(g.n):
        mask = even_connected_to(g, f, u)
        assert mask == sum(1 << v for v in range(g.n) if (u, v) in found)


def quadric_part(ideal):
    return {g for g in ideal.gens if sum(g) == 2}


@pytest.mark.parametrize("g", [whiskered_cycle(3), whiskered_cycle(4), whiskered_cycle(5), cycle(5), path(5)])
@pytest.mark.parametrize("s", [1, 2])
def test_colon_oracle(g, s):
    i = edge_ideal(g)
    big = power(i, s + 1)
    for m in power(i, s).monomials():
        c = colon(big, m)
        h, squares = colon_graph_all_factorizations(g, m, s)
        assert quadrics(h, squares) == set(c.gens)
        for f in edge_factorizations(m, g, s):
            h1, sq1 = colon_generators_banerjee(g, f)
            assert quadrics(h1, sq1) == quadric_part(c)


def test_colon_graph_json():
    g = whiskered_cycle(3)
    h, squares = colon_graph_all_factorizations(g, Monomial.parse("x1*x2", g.labels), 1)
    data = colon_graph_to_json(h, squares)
    assert '"squares":["x3"]' in data
    with pytest.raises(ValueError):
        colon_graph_all_factorizations(g, Monomial.parse("x1*x5", g.labels), 1)
