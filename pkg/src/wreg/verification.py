"""Executable checks of the whiskered-cycle regularity formula and the
statements it rests on, with seeded random families for the inequalities.

Every check returns :class:`VerificationReport` objects whose ``params`` are
enough to rerun it (see :func:`replay`).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

import numpy as np

from ._parallel import pmap
from .even_connection import colon_graph_all_factorizations, colon_generators_banerjee, quadrics
from .graph_core import (
    Graph,
    closed_neighborhood_deleted,
    delete_vertices,
    edge,
    g_sub_e,
    induced_matching_number,
    remove_edge,
    whiskered_cycle,
    whiskered_path,
)
from .homology_engine import DEFAULT_CAP, GF2, SizeCapError, as_field
from .monomial_algebra import (
    Monomial,
    MonomialIdeal,
    colon,
    contains,
    edge_factorizations,
    edge_ideal,
    polarization_vars,
    polarize,
    power,
)
from .regularity import regularity


@dataclass
class VerificationReport:
    claim: str
    params: dict
    value_name: str
    computed: Any
    expected: Any
    passed: bool
    runtime_ms: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        out = {"claim": self.claim}
        out.update(self.params)
        out[self.value_name] = self.computed
        out["expected"] = self.expected
        out["pass"] = self.passed
        return out

    def to_json(self) -> str:
        # runtime stays out so that output bytes do not depend on scheduling
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def summary_line(self) -> str:
        keys = ",".join(f"{k}={v}" for k, v in self.params.items() if k not in ("edges",))
        flag = "PASS" if self.passed else "FAIL"
        return f"{self.claim:<22} {keys:<40} {flag} {self.runtime_ms:9.1f} ms"


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        out = fn(*args, **kwargs)
        ms = (time.perf_counter() - t0) * 1000
        for r in out if isinstance(out, list) else [out]:
            r.runtime_ms = ms
        return out

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def ceil_half(k: int) -> int:
    return -(-k // 2)


def wcycle_value(n: int, s: int) -> int:
    return 2 * s + ceil_half(n - 1) - 1


def _edges_param(g: Graph) -> list[list[int]]:
    return [[u + 1, v + 1] for u, v in g.edges()]


def _graph_from_param(n: int, edges) -> Graph:
    return Graph.from_edges(n, [(u - 1, v - 1) for u, v in edges])


@lru_cache(maxsize=200_000)
def _reg_cached(key: tuple, p: int) -> int:
    n, edges = key
    return regularity(edge_ideal(Graph.from_edges(n, edges)), p)


EDGELESS_REG = 1


def reg0(g: Graph, f=GF2) -> int:
    """reg of the edge ideal; graphs without edges count as 1.

    That is ``reg(R/I) + 1`` with ``R/I = R``, the value under which the
    vertex and edge splitting inequalities hold for edgeless remainders.
    Used only by the inequality checks, never by :func:`regularity`.
    """
    if g.edge_count == 0:
        return EDGELESS_REG
    return _reg_cached(g.edge_key(), as_field(f).p)


# -- formula and induced matching --------------------------------------------

def wcycle_polarized_size(n: int, s: int) -> int:
    i = power(edge_ideal(whiskered_cycle(n)), s)
    return len(polarization_vars(i.vars, i.max_exponents()))


@_timed
def verify_wcycle_formula(n: int, s: int, f=GF2, threads: int = 1, cap: int = DEFAULT_CAP) -> VerificationReport:
    if n < 3 or s < 1:
        raise ValueError("need n >= 3 and s >= 1")
    f = as_field(f)
    i = power(edge_ideal(whiskered_cycle(n)), s)
    r = regularity(i, f, threads=threads, cap=cap)
    expected = wcycle_value(n, s)
    return VerificationReport("thm-main", {"n": n, "s": s, "field": f.p}, "reg", r, expected, r == expected)


@_timed
def verify_prop_indmatch(n: int) -> VerificationReport:
    k = induced_matching_number(whiskered_cycle(n))
    expected = ceil_half(n - 1)
    return VerificationReport("indmatch-wcycle", {"n": n}, "indmatch", k, expected, k == expected)


# -- Ha's inequalities and the lower bound -----------------------------------

@_timed
def check_ha_bounds(g: Graph, f=GF2, seed: int | None = None) -> list[VerificationReport]:
    """Induced-subgraph monotonicity, vertex split and edge split bounds."""
    if g.edge_count == 0:
        raise ValueError("graph has no edges")
    f = as_field(f)
    base = {"n": g.n, "edges": _edges_param(g), "field": f.p}
    if seed is not None:
        base["seed"] = seed
    r = reg0(g, f)
    out = []
    for x in range(g.n):
        minus = reg0(delete_vertices(g, [x]), f)
        closed = reg0(closed_neighborhood_deleted(g, x), f)
        params = dict(base, vertex=x + 1)
        out.append(VerificationReport("ha-induced", params, "reg", [minus, r], "reg(G-x) <= reg(G)", minus <= r))
        bound = max(minus, closed + 1)
        out.append(VerificationReport("ha-vertex", params, "reg", [r, bound],
                                      "reg(G) <= max(reg(G-x), reg(G-N[x])+1)", r <= bound))
    for u, v in g.edges():
        drop = reg0(remove_edge(g, (u, v)), f)
        ge = reg0(g_sub_e(g, (u, v)), f)
        bound = max(2, drop, ge + 1)
        params = dict(base, edge=[u + 1, v + 1])
        out.append(VerificationReport("ha-edge", params, "reg", [r, bound],
                                      "reg(G) <= max(2, reg(G-e), reg(G_e)+1)", r <= bound))
    return out


@_timed
def check_bht_lower_bound(g: Graph, s: int, f=GF2, equality: bool = False, seed: int | None = None,
                          cap: int = DEFAULT_CAP) -> VerificationReport:
    f = as_field(f)
    r = regularity(power(edge_ideal(g), s), f, cap=cap)
    bound = 2 * s + induced_matching_number(g) - 1
    params = {"n": g.n, "edges": _edges_param(g), "s": s, "field": f.p}
    if seed is not None:
        params["seed"] = seed
    ok = r == bound if equality else r >= bound
    return VerificationReport("bht-equality" if equality else "bht-lower", params, "reg", r, bound, ok)


# -- squares in the colon ideals ---------------------------------------------

def _wcycle_data(n: int, s: int):
    g = whiskered_cycle(n)
    i = edge_ideal(g)
    return g, i, power(i, s), power(i, s + 1)


def _unit(nv: int, *idx: int) -> tuple[int, ...]:
    e = [0] * nv
    for k in idx:
        e[k] += 1
    return tuple(e)


def _prefix_test(i: MonomialIdeal, m: Monomial, prefix: tuple[int, ...], rest: int) -> bool:
    """Is ``m = prefix * N`` with ``N`` in ``i**rest``?"""
    p = Monomial(m.vars, prefix)
    if not p.divides(m):
        return False
    return contains(power(i, rest), m / p)


def _square_check(claim: str, n: int, s: int, vertex: int, shape) -> VerificationReport:
    g, i, ps, ps1 = _wcycle_data(n, s)
    nv = g.n
    gens = ps1.gen_array()

    def member(e):
        return bool((gens <= np.array(e)).all(axis=1).any())

    mismatches, allj_fail, members = [], [], 0
    for mexp in ps.gens:
        m = Monomial(g.labels, mexp)
        square = tuple(a + b for a, b in zip(mexp, _unit(nv, vertex, vertex)))
        lhs = member(square)
        rhs = shape(i, m)
        if lhs != rhs:
            mismatches.append(str(m))
        if lhs:
            members += 1
            for j in range(nv):
                e = tuple(a + b for a, b in zip(mexp, _unit(nv, vertex, j)))
                if not member(e):
                    allj_fail.append(f"{m}:{g.labels[j]}")
    computed = {"generators": len(ps.gens), "members": members,
                "mismatches": mismatches, "allj_failures": allj_fail}
    expected = {"mismatches": [], "allj_failures": []}
    ok = not mismatches and not allj_fail
    return VerificationReport(claim, {"n": n, "s": s}, "result", computed, expected, ok)


@_timed
def check_lemma_strong(n: int, s: int) -> VerificationReport:
    """``x_n^2`` in ``(I^{s+1} : M)`` exactly for the odd-cycle prefix shape."""
    nv = 2 * n

    def shape(i, m):
        if n % 2 == 0:
            return False
        half = (n - 1) // 2
        if not 1 <= half <= s:
            return False
        prefix = _unit(nv, *range(2 * half))
        return _prefix_test(i, m, prefix, s - half)

    return _square_check("square-cycle-vertex", n, s, n - 1, shape)


@_timed
def check_lemma_stable(n: int, s: int) -> VerificationReport:
    """``x_{n+1}^2`` in ``(I^{s+1} : M)`` exactly for the closed odd-cycle shape."""
    nv = 2 * n

    def shape(i, m):
        if n % 2 == 0:
            return False
        half = (n + 1) // 2
        if not 2 <= half <= s:
            return False
        # (x1x2)(x3x4)...(x_{n-2}x_{n-1})(x_n x1)
        prefix = _unit(nv, *range(n), 0)
        return _prefix_test(i, m, prefix, s - half)

    return _square_check("square-whisker-vertex", n, s, n, shape)


# -- hypothesis families ------------------------------------------------------

def _forced_choose(g_adj: list[int], n: int) -> list[tuple[int, int]]:
    """Edges demanded by the whiskered-path closure rules (0-based)."""

    def w(i):  # whisker of path vertex i (1-based)
        return n + i - 1

    def x(i):
        return i - 1

    def adj(a, b):
        return bool(g_adj[a] >> b & 1)

    need = []
    for i in range(2, n):
        for j in range(2, n):
            if i != j and adj(w(i), w(j)):
                need += [(w(i), x(j - 1)), (w(i), x(j + 1)), (w(j), x(i - 1)), (w(j), x(i + 1))]
        if adj(w(i), w(1)):
            need += [(w(i), x(2)), (w(1), x(i - 1)), (w(1), x(i + 1))]
        if adj(w(i), w(n)):
            need += [(w(i), x(n - 1)), (x(i - 1), w(n)), (x(i + 1), w(n))]
    if n >= 2 and adj(w(1), w(n)):
        need += [(w(1), x(n - 1)), (x(2), w(n))]
    return [edge(a, b) for a, b in need if not adj(a, b)]


def _forced_main(g_adj: list[int], n: int) -> list[tuple[int, int]]:
    """Edges demanded by the whiskered-cycle closure rule (0-based, cyclic)."""

    def w(i):
        return n + (i - 1) % n

    def x(i):
        return (i - 1) % n

    need = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j and g_adj[w(i)] >> w(j) & 1:
                need += [(w(i), x(j - 1)), (w(i), x(j + 1)), (w(j), x(i - 1)), (w(j), x(i + 1))]
    return [edge(a, b) for a, b in need if not g_adj[a] >> b & 1]


def _base_edges_ok(g: Graph, n: int, cyclic: bool) -> bool:
    if g.n != 2 * n:
        return False
    steps = range(n) if cyclic else range(n - 1)
    if any(not g.has_edge(i, (i + 1) % n) for i in steps):
        return False
    return all(g.has_edge(i, n + i) for i in range(n))


def satisfies_choose_hypotheses(g: Graph, n: int) -> bool:
    """Whiskered path x1..xn (whisker x_{n+i} on x_i) plus the four closure rules."""
    return _base_edges_ok(g, n, cyclic=False) and not _forced_choose(list(g.adj), n)


def satisfies_main_hypotheses(g: Graph, n: int) -> bool:
    """Whiskered cycle x1..xn plus the cyclic closure rule."""
    return n >= 3 and _base_edges_ok(g, n, cyclic=True) and not _forced_main(list(g.adj), n)


def _close(g: Graph, n: int, forced) -> Graph:
    adj = list(g.adj)
    while True:
        need = forced(adj, n)
        if not need:
            return Graph(g.n, tuple(adj), g.labels)
        for a, b in need:
            adj[a] |= 1 << b
            adj[b] |= 1 << a


def _sample_family(start: Graph, n: int, count: int, seed: int, forced, extra_p: float = 0.5) -> list[Graph]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        g = start
        # geometric number of seed edges, zero allowed
        k = int(rng.geometric(extra_p)) - 1
        for _ in range(k):
            missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
            if not missing:
                break
            u, v = missing[int(rng.integers(len(missing)))]
            adj = list(g.adj)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            g = _close(Graph(g.n, tuple(adj), g.labels), n, forced)
        out.append(g)
    return out


def sample_lemma_choose_graphs(n: int, count: int, seed: int) -> list[Graph]:
    if n < 2:
        raise ValueError("need n >= 2")
    return _sample_family(whiskered_path(n), n, count, seed, _forced_choose)


def sample_lemma_main_graphs(n: int, count: int, seed: int) -> list[Graph]:
    if n < 3:
        raise ValueError("need n >= 3")
    return _sample_family(whiskered_cycle(n), n, count, seed, _forced_main)


@_timed
def check_family_bound(family: str, g: Graph, n: int, f=GF2, seed: int | None = None,
                       index: int | None = None) -> VerificationReport:
    f = as_field(f)
    if family == "choose":
        valid = satisfies_choose_hypotheses(g, n)
        bound = ceil_half(n + 2)
    elif family == "main":
        valid = satisfies_main_hypotheses(g, n)
        bound = ceil_half(n + 1)
    else:
        raise ValueError(f"unknown family {family!r}")
    r = reg0(g, f)
    params = {"n": n, "edges": _edges_param(g), "field": f.p}
    if seed is not None:
        params.update(seed=seed, index=index)
    return VerificationReport(f"{family}-family-bound", params, "reg", r, bound, valid and r <= bound)


# -- colon graphs -------------------------------------------------------------

@_timed
def check_banerjee_oracle(g: Graph, s: int, name: str | None = None) -> VerificationReport:
    """Degree-two even-connection generators versus the directly computed colon."""
    i = edge_ideal(g)
    ps, ps1 = power(i, s), power(i, s + 1)
    bad, high, per_fact = [], [], []
    for mexp in ps.gens:
        m = Monomial(g.labels, mexp)
        direct = colon(ps1, m)
        quad = {e for e in direct.gens if sum(e) == 2}
        if any(sum(e) != 2 for e in direct.gens):
            high.append(str(m))
        h, sq = colon_graph_all_factorizations(g, m, s)
        if quadrics(h, sq) != quad:
            bad.append(str(m))
        for fct in edge_factorizations(m, g, s):
            if quadrics(*colon_generators_banerjee(g, fct)) != quad:
                per_fact.append(str(fct))
    params = {"graph": name or repr(g), "n": g.n, "edges": _edges_param(g), "s": s}
    computed = {"generators": len(ps.gens), "mismatches": bad, "non_quadratic": high,
                "single_factorization_mismatches": per_fact}
    expected = {"mismatches": [], "non_quadratic": []}
    return VerificationReport("banerjee-colon", params, "result", computed, expected, not bad and not high)


@_timed
def check_colon_graph_hypotheses(n: int, s: int, f=GF2) -> VerificationReport:
    f = as_field(f)
    g, _, ps, _ = _wcycle_data(n, s)
    bound = ceil_half(n + 1)
    bad_hyp, bad_reg, regs = [], [], []
    for mexp in ps.gens:
        m = Monomial(g.labels, mexp)
        h, _ = colon_graph_all_factorizations(g, m, s)
        if not satisfies_main_hypotheses(h, n):
            bad_hyp.append(str(m))
        r = reg0(h, f)
        regs.append(r)
        if r > bound:
            bad_reg.append(str(m))
    computed = {"generators": len(ps.gens), "max_reg": max(regs), "hypothesis_failures": bad_hyp,
                "bound_failures": bad_reg}
    expected = {"max_reg_at_most": bound, "hypothesis_failures": [], "bound_failures": []}
    return VerificationReport("colon-graph", {"n": n, "s": s, "field": f.p}, "result", computed, expected,
                              not bad_hyp and not bad_reg)


def chain_graphs(h: Graph, squares) -> list[Graph]:
    """``H_0 = G'`` and ``H_j`` = ``G'`` plus pendant edges ``x_{i_t} y_{i_t}``, t <= j."""
    order = sorted(squares)
    vars_ = list(h.labels) + [f"y{k + 1}_1" for k in order]
    out = []
    for j in range(len(order) + 1):
        edges = h.edges() + [(k, h.n + t) for t, k in enumerate(order[:j])]
        out.append(Graph.from_edges(len(vars_), edges, vars_))
    return out


@_timed
def check_colon_chain(n: int, s: int, f=GF2) -> VerificationReport:
    """reg of the polarized colon equals reg(G'), through every intermediate graph."""
    f = as_field(f)
    g, _, ps, ps1 = _wcycle_data(n, s)
    failures, squares_seen = [], 0
    for mexp in ps.gens:
        m = Monomial(g.labels, mexp)
        c = colon(ps1, m)
        j = polarize(c)
        h, sq = colon_graph_all_factorizations(g, m, s)
        squares_seen += len(sq)
        chain = chain_graphs(h, sq)
        top = chain[-1]
        # the last chain graph is the polarization itself, up to names
        same = edge_ideal(top) == j
        regs = [reg0(x, f) for x in chain]
        rj = regularity(j, f)
        if not same or len(set(regs)) != 1 or rj != regs[0]:
            failures.append({"M": str(m), "reg_J": rj, "chain": regs, "J_is_last_graph": same})
    computed = {"generators": len(ps.gens), "squares": squares_seen, "failures": failures}
    return VerificationReport("colon-chain", {"n": n, "s": s, "field": f.p}, "result", computed,
                              {"failures": []}, not failures)


# -- random instances and the suite ------------------------------------------

def random_connected_graph(seed: int, max_n: int, min_n: int = 2) -> Graph:
    rng = np.random.default_rng(seed)
    n = int(rng.integers(min_n, max_n + 1))
    order = rng.permutation(n)
    edges = set()
    for k in range(1, n):
        edges.add(edge(int(order[k]), int(order[int(rng.integers(k))])))
    p = float(rng.uniform(0.1, 0.6))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def instance_seeds(seed: int, count: int) -> list[int]:
    return [int(x) for x in np.random.default_rng(seed).integers(0, 2**63 - 1, size=count)]


NAMED_GRAPHS = {
    "W(C3)": lambda: whiskered_cycle(3),
    "W(C4)": lambda: whiskered_cycle(4),
    "W(C5)": lambda: whiskered_cycle(5),
}


def named_graph(name: str) -> Graph:
    from .graph_core import cycle, path

    extra = {"C4": lambda: cycle(4), "C5": lambda: cycle(5), "P5": lambda: path(5)}
    table = dict(NAMED_GRAPHS, **extra)
    if name not in table:
        raise KeyError(f"unknown graph {name!r}")
    return table[name]()


def run_job(job: tuple) -> list[VerificationReport]:
    """Execute one suite job ``(kind, kwargs)``; always returns a list."""
    kind, kw = job
    if kind == "thm-main":
        return [verify_wcycle_formula(kw["n"], kw["s"], kw.get("field", 2))]
    if kind == "indmatch-wcycle":
        return [verify_prop_indmatch(kw["n"])]
    if kind == "ha":
        g = random_connected_graph(kw["seed"], kw["max_n"])
        if g.edge_count == 0:
            return []
        return check_ha_bounds(g, kw.get("field", 2), seed=kw["seed"])
    if kind == "bht-lower":
        g = random_connected_graph(kw["seed"], kw["max_n"])
        return [check_bht_lower_bound(g, kw["s"], kw.get("field", 2), seed=kw["seed"])]
    if kind == "bht-equality":
        return [check_bht_lower_bound(whiskered_cycle(kw["n"]), kw["s"], kw.get("field", 2), equality=True)]
    if kind == "square-cycle-vertex":
        return [check_lemma_strong(kw["n"], kw["s"])]
    if kind == "square-whisker-vertex":
        return [check_lemma_stable(kw["n"], kw["s"])]
    if kind == "banerjee-colon":
        return [check_banerjee_oracle(named_graph(kw["graph"]), kw["s"], kw["graph"])]
    if kind == "family":
        sampler = sample_lemma_choose_graphs if kw["family"] == "choose" else sample_lemma_main_graphs
        graphs = sampler(kw["n"], kw["count"], kw["seed"])
        return [check_family_bound(kw["family"], g, kw["n"], kw.get("field", 2), seed=kw["seed"], index=t)
                for t, g in enumerate(graphs)]
    if kind == "colon-graph":
        return [check_colon_graph_hypotheses(kw["n"], kw["s"], kw.get("field", 2))]
    if kind == "colon-chain":
        return [check_colon_chain(kw["n"], kw["s"], kw.get("field", 2))]
    raise ValueError(f"unknown job kind {kind!r}")


def criterion_jobs(seed: int = 0) -> dict[int, list[tuple]]:
    """Jobs for each numbered acceptance criterion (1-10)."""
    jobs: dict[int, list[tuple]] = {}
    jobs[1] = [("thm-main", {"n": n, "s": 1, "field": p}) for p in (2, 3) for n in range(3, 8)]
    jobs[1] += [("indmatch-wcycle", {"n": n}) for n in range(3, 8)]
    jobs[2] = [("thm-main", {"n": n, "s": 2, "field": 2}) for n in (3, 4, 5)]
    jobs[3] = [("thm-main", {"n": 3, "s": 3, "field": 2})]
    grid = [(n, s) for n in (3, 4, 5, 6, 7, 9) for s in (1, 2, 3)]
    jobs[4] = [("square-cycle-vertex", {"n": n, "s": s}) for n, s in grid]
    jobs[5] = [("square-whisker-vertex", {"n": n, "s": s}) for n, s in grid]
    jobs[6] = [("banerjee-colon", {"graph": g, "s": s})
               for g in ("W(C3)", "W(C4)", "W(C5)", "C4", "C5", "P5") for s in (1, 2)]
    jobs[7] = [("ha", {"seed": x, "max_n": 9, "field": 2}) for x in instance_seeds(seed + 7, 200)]
    jobs[8] = [("bht-lower", {"seed": x, "max_n": 6, "s": s, "field": 2})
               for x in instance_seeds(seed + 8, 50) for s in (1, 2)]
    jobs[8] += [("bht-equality", {"n": n, "s": 1}) for n in range(3, 8)]
    jobs[8] += [("bht-equality", {"n": n, "s": 2}) for n in (3, 4, 5)]
    jobs[8] += [("bht-equality", {"n": 3, "s": 3})]
    jobs[9] = [("family", {"family": "choose", "n": 4, "count": 50, "seed": seed + 91})]
    jobs[9] += [("family", {"family": "main", "n": n, "count": 50, "seed": seed + 90 + n}) for n in (4, 5)]
    jobs[10] = [(kind, {"n": n, "s": 1, "field": 2}) for kind in ("colon-graph", "colon-chain") for n in (3, 4, 5)]
    return jobs


def suite_jobs(seed: int = 0, max_n: int = 9, max_s: int = 3, cap: int = DEFAULT_CAP) -> tuple[list, list]:
    """All criterion jobs filtered by ``max_n``/``max_s``; returns (jobs, skipped)."""
    keep, skipped = [], []
    for _, js in sorted(criterion_jobs(seed).items()):
        for kind, kw in js:
            if kw.get("n", 0) > max_n or kw.get("s", 0) > max_s:
                continue
            if kw.get("max_n", 0) > max_n:
                kw = dict(kw, max_n=max_n)
            if kind in ("thm-main", "bht-equality") and wcycle_polarized_size(kw["n"], kw["s"]) > cap:
                skipped.append((kind, kw))
                continue
            keep.append((kind, kw))
    return keep, skipped


def run_jobs(jobs: list, threads: int = 1) -> list[VerificationReport]:
    out = []
    for part in pmap(run_job, jobs, threads):
        out.extend(part)
    return out


def run_suite(seed: int = 0, max_n: int = 9, max_s: int = 3, threads: int = 1) -> list[VerificationReport]:
    jobs, _ = suite_jobs(seed, max_n, max_s)
    return run_jobs(jobs, threads)


def replay(report: VerificationReport) -> VerificationReport:
    """Recompute a report from its recorded parameters."""
    p = report.params
    c = report.claim
    if c == "thm-main":
        return verify_wcycle_formula(p["n"], p["s"], p["field"])
    if c == "indmatch-wcycle":
        return verify_prop_indmatch(p["n"])
    if c in ("ha-induced", "ha-vertex", "ha-edge"):
        g = _graph_from_param(p["n"], p["edges"])
        for r in check_ha_bounds(g, p["field"], seed=p.get("seed")):
            if r.claim == c and r.params == p:
                return r
        raise LookupError("instance not regenerated")
    if c in ("bht-lower", "bht-equality"):
        g = _graph_from_param(p["n"], p["edges"])
        return check_bht_lower_bound(g, p["s"], p["field"], equality=c == "bht-equality", seed=p.get("seed"))
    if c == "square-cycle-vertex":
        return check_lemma_strong(p["n"], p["s"])
    if c == "square-whisker-vertex":
        return check_lemma_stable(p["n"], p["s"])
    if c == "banerjee-colon":
        return check_banerjee_oracle(_graph_from_param(p["n"], p["edges"]), p["s"], p["graph"])
    if c.endswith("-family-bound"):
        g = _graph_from_param(2 * p["n"], p["edges"])
        return check_family_bound(c.split("-")[0], g, p["n"], p["field"], seed=p.get("seed"), index=p.get("index"))
    if c == "colon-graph":
        return check_colon_graph_hypotheses(p["n"], p["s"], p["field"])
    if c == "colon-chain":
        return check_colon_chain(p["n"], p["s"], p["field"])
    raise ValueError(f"unknown claim {c!r}")


__all__ = [
    "VerificationReport", "SizeCapError", "verify_wcycle_formula", "verify_prop_indmatch", "check_ha_bounds",
    "check_bht_lower_bound", "check_lemma_strong", "check_lemma_stable", "check_banerjee_oracle",
    "check_colon_graph_hypotheses", "check_colon_chain", "sample_lemma_choose_graphs",
    "sample_lemma_main_graphs", "satisfies_choose_hypotheses", "satisfies_main_hypotheses",
    "check_family_bound", "random_connected_graph", "criterion_jobs", "suite_jobs", "run_jobs", "run_suite",
    "replay",
]
