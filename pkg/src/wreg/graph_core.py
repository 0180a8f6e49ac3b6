"""Finite simple graphs on at most 64 vertices.

Vertices are 0-based indices internally; neighbor sets are packed into
integer bitmasks.  The JSON form uses 1-based indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

MAX_VERTICES = 64

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Canonical (smaller index first) edge; rejects loops."""
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``origin[k]`` is the index vertex ``k`` had in the graph this one was cut
    out of (identity for freshly built graphs), so induced subgraphs can be
    read back in the parent's labels.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] = field(default=())
    origin: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"graphs are limited to {MAX_VERTICES} vertices")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.n))
        if not self.origin:
            object.__setattr__(self, "origin", tuple(range(self.n)))
        if len(self.labels) != self.n or len(set(self.labels)) != self.n:
            raise ValueError("labels must be n distinct names")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbor out of range")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] = ()) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} out of range for {n} vertices")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no vertex named {label!r}") from None

    def edge_key(self) -> tuple:
        """Hashable description of the labelled graph (ignores ``origin``)."""
        return (self.n, tuple(self.edges()))

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "labels": list(self.labels), "edges": [[u + 1, v + 1] for u, v in self.edges()]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        data = json.loads(text)
        n = int(data["n"])
        labels = data.get("labels") or default_labels(n)
        return cls.from_edges(n, [(int(u) - 1, int(v) - 1) for u, v in data["edges"]], labels)

    def __repr__(self):
        shown = " ".join(f"{self.labels[u]}{self.labels[v]}" for u, v in self.edges())
        return f"Graph(n={self.n}, edges=[{shown}])"


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, k) for k in range(1, leaves + 1)])


def empty(n: int = 0) -> Graph:
    return Graph.from_edges(n, [])


def whisker_all(g: Graph) -> Graph:
    """Attach a pendant vertex to every vertex.

    Vertex ``n + i`` is the whisker of vertex ``i``; with default labels this
    is ``x{n+i}`` hanging off ``x{i}``.
    """
    n = g.n
    if g.labels == default_labels(n):
        labels = default_labels(2 * n)
    else:
        labels = g.labels + tuple(f"{lab}'" for lab in g.labels)
    return Graph.from_edges(2 * n, g.edges() + [(i, n + i) for i in range(n)], labels)


def whiskered_cycle(n: int) -> Graph:
    return whisker_all(cycle(n))


def whiskered_path(n: int) -> Graph:
    return whisker_all(path(n))


def _mask_of(g: Graph, keep) -> int:
    if isinstance(keep, int):
        mask = keep
    else:
        mask = 0
        for v in keep:
            if not 0 <= v < g.n:
                raise IndexError(f"vertex {v} out of range")
            mask |= 1 << v
    if mask & ~g.vertex_mask:
        raise IndexError("vertex set out of range")
    return mask


def induced_subgraph(g: Graph, keep) -> Graph:
    """Induced subgraph on ``keep`` (an iterable of indices or a bitmask)."""
    mask = _mask_of(g, keep)
    old = bits(mask)
    new_index = {v: k for k, v in enumerate(old)}
    adj = []
    for v in old:
        nb = 0
        for u in bits(g.adj[v] & mask):
            nb |= 1 << new_index[u]
        adj.append(nb)
    return Graph(len(old), tuple(adj), tuple(g.labels[v] for v in old), tuple(g.origin[v] for v in old))


def delete_vertices(g: Graph, drop) -> Graph:
    return induced_subgraph(g, g.vertex_mask & ~_mask_of(g, drop))


def remove_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ValueError(f"{tuple(e)} is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj), g.labels, g.origin)


def g_sub_e(g: Graph, e: Sequence[int]) -> Graph:
    """Induced subgraph away from the closed neighborhood of edge ``e``."""
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ValueError(f"{tuple(e)} is not an edge")
    return delete_vertices(g, g.closed_neighborhood(u) | g.closed_neighborhood(v))


def closed_neighborhood_deleted(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range")
    return delete_vertices(g, g.closed_neighborhood(v))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    adj = tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj))
    return Graph(g.n, adj, g.labels, g.origin)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    edges = g.edges() + [(u + shift, v + shift) for u, v in h.edges()]
    return Graph.from_edges(g.n + h.n, edges)


def add_isolated(g: Graph, k: int) -> Graph:
    return Graph.from_edges(g.n + k, g.edges())


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.vertex_mask


def induced_matching_number(g: Graph) -> int:
    """Largest set of edges with no two joined by a vertex or an edge.

    Exact branch and bound: either take the first remaining edge (which kills
    every edge touching its closed neighborhood) or drop it.
    """
    all_edges = g.edges()
    if not all_edges:
        return 0
    blocked = [g.closed_neighborhood(u) | g.closed_neighborhood(v) for u, v in all_edges]
    emask = [1 << u | 1 << v for u, v in all_edges]
    best = 0

    def search(cand: list[int], size: int, free: int):
        nonlocal best
        if size > best:
            best = size
        if not cand:
            return
        # each further matched edge uses two still-free vertices
        if size + min(len(cand), free.bit_count() // 2) <= best:
            return
        k = cand[0]
        rest = cand[1:]
        kill = blocked[k]
        search([j for j in rest if not emask[j] & kill], size + 1, free & ~kill)
        search(rest, size, free)

    search(list(range(len(all_edges))), 0, g.vertex_mask)
    return best


def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search, then check the elimination ordering."""
    n = g.n
    weight = [0] * n
    numbered = 0
    order = []
    for _ in range(n):
        v = max((u for u in range(n) if not numbered >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        numbered |= 1 << v
        for u in bits(g.adj[v] & ~numbered):
            weight[u] += 1
    # order reversed is a perfect elimination ordering iff g is chordal
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in bits(g.adj[v]) if position[u] < position[v]]
        if not earlier:
            continue
        parent = max(earlier, key=lambda u: position[u])
        rest = 0
        for u in earlier:
            if u != parent:
                rest |= 1 << u
        if rest & ~g.adj[parent]:
            return False
    return True
