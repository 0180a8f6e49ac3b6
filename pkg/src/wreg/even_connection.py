"""Even-connected vertex pairs and the degree-two colon generators they give.

A witness is a walk ``p0, p1, ..., p_{2l+1}`` (l >= 1) in the graph.  The
steps ``p_{2k+1} p_{2k+2}`` must be edges of the chosen factorization, each
used at most as often as it occurs there; the other steps are arbitrary
edges of the graph.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .graph_core import Edge, Graph, bits, edge
from .monomial_algebra import EdgeFactorization, Monomial, edge_factorizations


@dataclass(frozen=True)
class EvenConnectionWitness:
    path: tuple[int, ...]
    assignment: tuple[int, ...]  # factorization slot used by each odd step

    @property
    def l(self) -> int:
        return (len(self.path) - 1) // 2

    def render(self, g: Graph) -> str:
        lab = g.labels
        out = lab[self.path[0]]
        for k in range(1, len(self.path)):
            out += (" = " if k % 2 == 0 else " - ") + lab[self.path[k]]
        return out

    def to_dict(self, g: Graph) -> dict:
        return {"path": [g.labels[v] for v in self.path], "assignment": list(self.assignment)}

    def to_json(self, g: Graph) -> str:
        return json.dumps(self.to_dict(g), separators=(",", ":"))


def validate_witness(g: Graph, f: EdgeFactorization, u: int, v: int, w: EvenConnectionWitness) -> bool:
    """Re-check a witness against the definition, independently of the search."""
    p = w.path
    if len(p) < 4 or len(p) % 2 != 0 or p[0] != u or p[-1] != v:
        return False
    if any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
        return False
    l = (len(p) - 1) // 2
    if len(w.assignment) != l:
        return False
    for k in range(l):
        slot = w.assignment[k]
        if not 0 <= slot < f.s or f.edges[slot] != edge(p[2 * k + 1], p[2 * k + 2]):
            return False
    used: dict[Edge, int] = {}
    for k in range(l):
        e = edge(p[2 * k + 1], p[2 * k + 2])
        used[e] = used.get(e, 0) + 1
    mult = f.multiplicity()
    return all(c <= mult[e] for e, c in used.items())


def _search(g: Graph, f: EdgeFactorization, u: int):
    """Breadth-first search from ``u``; returns parent links and the first
    arrival (state) for every reachable endpoint."""
    distinct = sorted(set(f.edges))
    mult = f.multiplicity()
    budget0 = tuple(mult[e] for e in distinct)
    at_vertex = {}
    for k, (a, b) in enumerate(distinct):
        at_vertex.setdefault(a, []).append((k, b))
        at_vertex.setdefault(b, []).append((k, a))

    # phase 0: next step is free; phase 1: next step spends factorization budget
    start = (u, 0, budget0, False)
    parent = {start: None}
    arrivals: dict[int, tuple] = {}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        x, phase, budget, spent = state
        if phase == 0:
            for y in bits(g.adj[x]):
                nxt = (y, 1, budget, spent)
                if nxt not in parent:
                    parent[nxt] = (state, None)
                    queue.append(nxt)
                    if spent and y not in arrivals:
                        arrivals[y] = nxt
        else:
            for k, y in at_vertex.get(x, ()):
                if budget[k] == 0:
                    continue
                left = budget[:k] + (budget[k] - 1,) + budget[k + 1:]
                nxt = (y, 0, left, True)
                if nxt not in parent:
                    parent[nxt] = (state, distinct[k])
                    queue.append(nxt)
    return parent, arrivals


def _witness(f: EdgeFactorization, parent: dict, state) -> EvenConnectionWitness:
    walk = []
    used = []
    while state is not None:
        walk.append(state[0])
        link = parent[state]
        if link is None:
            break
        state, e = link
        if e is not None:
            used.append(e)
    walk.reverse()
    used.reverse()
    # distinct slot per occurrence of a repeated edge, lowest first
    slots = []
    taken: dict[Edge, int] = {}
    for e in used:
        hits = [k for k, fe in enumerate(f.edges) if fe == e]
        slots.append(hits[taken.get(e, 0)])
        taken[e] = taken.get(e, 0) + 1
    return EvenConnectionWitness(tuple(walk), tuple(slots))


def is_even_connected(g: Graph, f: EdgeFactorization, u: int, v: int) -> EvenConnectionWitness | None:
    """Shortest witness that ``u`` and ``v`` are even-connected, or None."""
    if f.graph.edge_key() != g.edge_key():
        raise ValueError("factorization is over a different graph")
    parent, arrivals = _search(g, f, u)
    if v not in arrivals:
        return None
    return _witness(f, parent, arrivals[v])


def even_connected_to(g: Graph, f: EdgeFactorization, u: int) -> int:
    """Bitmask of all vertices even-connected to ``u`` (possibly ``u`` itself)."""
    _, arrivals = _search(g, f, u)
    mask = 0
    for v in arrivals:
        mask |= 1 << v
    return mask


def colon_generators_banerjee(g: Graph, f: EdgeFactorization) -> tuple[Graph, frozenset[int]]:
    """Graph of g-edges plus even-connected pairs, and the self-connected vertices."""
    if f.graph.edge_key() != g.edge_key():
        raise ValueError("factorization is over a different graph")
    adj = list(g.adj)
    squares = set()
    for u in range(g.n):
        reach = even_connected_to(g, f, u)
        if reach >> u & 1:
            squares.add(u)
        adj[u] |= reach & ~(1 << u)
    # reach is symmetric (reverse the walk) but symmetrize anyway so Graph validates
    for u in range(g.n):
        for v in bits(adj[u]):
            adj[v] |= 1 << u
    return Graph(g.n, tuple(adj), g.labels, g.origin), frozenset(squares)


def colon_graph_all_factorizations(g: Graph, m: Monomial, s: int) -> tuple[Graph, frozenset[int]]:
    """Union of :func:`colon_generators_banerjee` over every factorization of ``m``."""
    facts = edge_factorizations(m, g, s)
    if not facts:
        raise ValueError(f"{m} is not a product of {s} edges of the graph")
    adj = list(g.adj)
    squares: set[int] = set()
    for f in facts:
        h, sq = colon_generators_banerjee(g, f)
        adj = [a | b for a, b in zip(adj, h.adj)]
        squares |= sq
    return Graph(g.n, tuple(adj), g.labels, g.origin), frozenset(squares)


def quadrics(h: Graph, squares) -> set[tuple[int, ...]]:
    """Exponent vectors of the degree-two monomials encoded by (G', squares)."""
    out = set()
    for u, v in h.edges():
        e = [0] * h.n
        e[u] = e[v] = 1
        out.add(tuple(e))
    for u in squares:
        e = [0] * h.n
        e[u] = 2
        out.add(tuple(e))
    return out


def colon_graph_to_json(h: Graph, squares) -> str:
    return json.dumps(
        {"graph": json.loads(h.to_json()), "squares": [h.labels[u] for u in sorted(squares)]},
        separators=(",", ":"),
    )
