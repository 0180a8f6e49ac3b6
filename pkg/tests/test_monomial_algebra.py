import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wreg.graph_core import Graph, cycle, path, whiskered_cycle
from wreg.monomial_algebra import (
    Monomial,
    MonomialIdeal,
    colon,
    contains,
    divides,
    edge_factorizations,
    edge_ideal,
    polarize,
    power,
    product,
)

V3 = ("x1", "x2", "x3")


def ideal(vars_, *texts):
    return MonomialIdeal.from_monomials(vars_, [Monomial.parse(t, vars_) for t in texts])


def strs(i):
    return [str(m) for m in i.monomials()]


@st.composite
def ideals(draw, nv=6, top=3, max_gens=5):
    vars_ = tuple(f"x{k + 1}" for k in range(nv))
    vec = st.tuples(*[st.integers(0, top)] * nv).filter(any)
    gens = draw(st.lists(vec, min_size=0, max_size=max_gens))
    return MonomialIdeal(vars_, gens)


@st.composite
def edge_ideals(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1, max_size=8))
    return edge_ideal(Graph.from_edges(n, chosen))


def test_parse_and_format():
    vars_ = ("x1", "x2", "x3", "y2_1")
    m = Monomial.parse("x1^2*x3*y2_1", vars_)
    assert m.exps == (2, 0, 1, 1)
    assert str(m) == "x1^2*x3*y2_1"
    assert str(Monomial.parse("1", vars_)) == "1"
    with pytest.raises(ValueError):
        Monomial.parse("x9", vars_)
    with pytest.raises(ValueError):
        Monomial.parse("x1^^2", vars_)


def test_edge_ideal():
    assert len(edge_ideal(whiskered_cycle(3)).gens) == 6
    assert edge_ideal(Graph.from_edges(4, [])).is_zero()
    assert set(strs(edge_ideal(cycle(5)))) == {"x1*x2", "x2*x3", "x3*x4", "x4*x5", "x1*x5"}


def test_canonical_order():
    i = ideal(V3, "x3^3", "x2*x3", "x1*x2", "x1^2*x3^5")
    assert strs(i) == ["x1*x2", "x2*x3", "x3^3"]


def test_power_examples():
    i = ideal(V3, "x1*x2", "x2*x3")
    # products: (x1x2)^2, (x1x2)(x2x3), (x2x3)^2 -- none divides another
    assert strs(power(i, 2)) == ["x1^2*x2^2", "x1*x2^2*x3", "x2^2*x3^2"]
    assert power(i, 1) == i
    assert power(i, 0) == MonomialIdeal.unit(V3)
    p = power(edge_ideal(whiskered_cycle(5)), 2)
    assert all(sum(g) == 4 for g in p.gens)


def test_power_minimalizes():
    i = ideal(V3, "x1", "x1*x2")
    assert strs(i) == ["x1"]
    i = ideal(V3, "x1", "x2^2")
    assert strs(power(i, 2)) == ["x1^2", "x1*x2^2", "x2^4"]


def test_colon_examples():
    i = ideal(V3, "x1*x2", "x2*x3")
    m = Monomial.parse("x1*x2", V3)
    assert colon(power(i, 2), m) == i
    assert colon(i, Monomial.one(V3)) == i
    assert colon(MonomialIdeal(V3, []), m).is_zero()
    w3 = edge_ideal(whiskered_cycle(3))
    m = Monomial.parse("x1*x2", w3.vars)
    assert contains(colon(power(w3, 2), m), Monomial.parse("x3^2", w3.vars))


def test_contains():
    i = ideal(V3, "x1*x2")
    assert contains(i, Monomial.parse("x1^2*x2*x3", V3))
    assert not contains(MonomialIdeal(V3, []), Monomial.parse("x1", V3))
    assert all(contains(i, g) for g in i.monomials())
    with pytest.raises(ValueError):
        contains(i, Monomial.parse("x1", ("x1",)))


def all_monomials(nv, max_deg):
    for exps in itertools.product(range(max_deg + 1), repeat=nv):
        if sum(exps) <= max_deg:
            yield exps


@settings(max_examples=40, deadline=None)
@given(ideals(), st.tuples(*[st.integers(0, 3)] * 6))
def test_colon_membership_oracle(j, mexp):
    vars_ = j.vars
    m = Monomial(vars_, mexp)
    c = colon(j, m)
    for u in all_monomials(6, 4):
        um = tuple(a + b for a, b in zip(u, mexp))
        brute = any(divides(g, um) for g in j.gens)
        assert contains(c, Monomial(vars_, u)) == brute


@settings(max_examples=40, deadline=None)
@given(ideals(top=3, max_gens=6))
def test_minimality(i):
    for a, b in itertools.permutations(i.gens, 2):
        assert not divides(a, b)
    assert list(i.gens) == sorted(i.gens, key=lambda e: (sum(e), [-x for x in e]))


@settings(max_examples=25, deadline=None)
@given(edge_ideals(), st.integers(1, 2), st.integers(1, 2))
def test_power_additive(i, a, b):
    assert power(i, a + b) == product(power(i, a), power(i, b))


def test_polarize_examples():
    vars_ = ("x1", "x2")
    i = ideal(vars_, "x1^2", "x1*x2")
    j = polarize(i)
    assert j.vars == ("x1", "x2", "y1_1")
    assert set(strs(j)) == {"x1*y1_1", "x1*x2"}
    sq = edge_ideal(cycle(5))
    assert polarize(sq) == sq
    w3 = edge_ideal(whiskered_cycle(3))
    c = colon(power(w3, 2), Monomial.parse("x1*x2", w3.vars))
    pc = polarize(c)
    assert len(pc.gens) == len(c.gens)
    assert "x3*y3_1" in strs(pc)
    assert pc.is_squarefree()


@settings(max_examples=40, deadline=None)
@given(ideals(top=3))
def test_polarize_preserves_shape(i):
    j = polarize(i)
    assert j.is_squarefree()
    assert len(j.gens) == len(i.gens)
    assert sorted(sum(g) for g in j.gens) == sorted(sum(g) for g in i.gens)


def fact_sets(facts):
    return {tuple(f"{f.graph.labels[u]}{f.graph.labels[v]}" for u, v in f.edges) for f in facts}


def test_edge_factorizations():
    c4 = cycle(4)
    m = Monomial.parse("x1*x2*x3*x4", c4.labels)
    assert fact_sets(edge_factorizations(m, c4, 2)) == {("x1x2", "x3x4"), ("x1x4", "x2x3")}
    p2 = path(2)
    facts = edge_factorizations(Monomial.parse("x1^2*x2^2", p2.labels), p2, 2)
    assert fact_sets(facts) == {("x1x2", "x1x2")}
    c5 = cycle(5)
    facts = edge_factorizations(Monomial.parse("x1*x2*x3*x5", c5.labels), c5, 2)
    assert fact_sets(facts) == {("x1x5", "x2x3")}
    assert edge_factorizations(Monomial.parse("x1*x3", c5.labels), c5, 1) == []


@pytest.mark.parametrize("g", [whiskered_cycle(3), whiskered_cycle(4), cycle(5), path(5)])
@pytest.mark.parametrize("s", [1, 2, 3])
def test_every_power_generator_factors(g, s):
    for m in power(edge_ideal(g), s).monomials():
        facts = edge_factorizations(m, g, s)
        assert facts
        for f in facts:
            assert f.monomial() == m
        assert len({f.edges for f in facts}) == len(facts)


def test_ideal_json_roundtrip():
    i = power(edge_ideal(whiskered_cycle(3)), 2)
    text = i.to_json()
    assert MonomialIdeal.from_json(text) == i
    assert MonomialIdeal.from_json(text).to_json() == text


def test_gen_array_shape_of_zero_ideal():
    z = MonomialIdeal(V3, [])
    assert z.gen_array().shape == (0, 3)
    assert isinstance(z.max_exponents(), tuple) and np.sum(z.max_exponents()) == 0
