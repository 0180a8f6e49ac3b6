"""Monomials and monomial ideals as exponent vectors.

Everything here is combinatorial: products, lcms and divisibility of
exponent vectors.  Generating sets are always kept minimal and in canonical
order (total degree, then lex with x1 > x2 > ...).
"""

from __future__ import annotations

import itertools
import json
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph_core import Edge, Graph

Exps = tuple[int, ...]


def _canon_key(e: Exps):
    return (sum(e), tuple(-a for a in e))


def divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(gens: Iterable[Exps]) -> tuple[Exps, ...]:
    """Drop duplicates and every generator divisible by another one."""
    ordered = sorted(set(gens), key=_canon_key)
    if len(ordered) < 2:
        return tuple(ordered)
    arr = np.array(ordered, dtype=np.int32)
    keep = []
    for k, g in enumerate(ordered):
        # anything dividing g sorts before it (smaller or equal degree)
        if keep and (arr[keep] <= arr[k]).all(axis=1).any():
            continue
        keep.append(k)
    return tuple(ordered[k] for k in keep)


@dataclass(frozen=True)
class Monomial:
    vars: tuple[str, ...]
    exps: Exps

    def __post_init__(self):
        if len(self.exps) != len(self.vars):
            raise ValueError("exponent vector does not match the ambient ring")
        if any(a < 0 for a in self.exps):
            raise ValueError("negative exponent")

    @classmethod
    def one(cls, vars: Sequence[str]) -> "Monomial":
        return cls(tuple(vars), (0,) * len(vars))

    @classmethod
    def parse(cls, text: str, vars: Sequence[str]) -> "Monomial":
        """Parse ``x1^2*x3*y2_1``; ``1`` is the unit monomial."""
        vars = tuple(vars)
        exps = [0] * len(vars)
        text = text.strip().replace(" ", "")
        if text in ("", "1"):
            return cls(vars, tuple(exps))
        where = {v: k for k, v in enumerate(vars)}
        for factor in text.split("*"):
            m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_']*)(?:\^(\d+))?", factor)
            if not m:
                raise ValueError(f"malformed monomial factor {factor!r}")
            name, power = m.group(1), int(m.group(2) or 1)
            if name not in where:
                raise ValueError(f"unknown variable {name!r}")
            exps[where[name]] += power
        return cls(vars, tuple(exps))

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k, a in enumerate(self.exps) if a)

    def is_squarefree(self) -> bool:
        return all(a <= 1 for a in self.exps)

    def _check(self, other: "Monomial"):
        if other.vars != self.vars:
            raise ValueError("monomials live in different rings")

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.vars, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return divides(self.exps, other.exps)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(self.vars, tuple(a - b for a, b in zip(self.exps, other.exps)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.vars, tuple(map(min, self.exps, other.exps)))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.vars, tuple(map(max, self.exps, other.exps)))

    def __str__(self):
        parts = []
        for name, a in zip(self.vars, self.exps):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts) or "1"

    def __repr__(self):
        return f"Monomial({self})"


def variable(vars: Sequence[str], name: str, power: int = 1) -> Monomial:
    vars = tuple(vars)
    exps = [0] * len(vars)
    exps[vars.index(name)] = power
    return Monomial(vars, tuple(exps))


@dataclass(frozen=True, init=False)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators in canonical order."""

    vars: tuple[str, ...]
    gens: tuple[Exps, ...]

    def __init__(self, vars: Sequence[str], gens: Iterable[Sequence[int]]):
        vars = tuple(vars)
        clean = []
        for g in gens:
            g = tuple(int(a) for a in g)
            if len(g) != len(vars) or any(a < 0 for a in g):
                raise ValueError(f"bad exponent vector {g}")
            clean.append(g)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "gens", minimalize(clean))

    @classmethod
    def from_monomials(cls, vars: Sequence[str], monomials: Iterable[Monomial]) -> "MonomialIdeal":
        return cls(vars, [m.exps for m in monomials])

    @classmethod
    def unit(cls, vars: Sequence[str]) -> "MonomialIdeal":
        return cls(vars, [(0,) * len(vars)])

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def is_zero(self) -> bool:
        return not self.gens

    def is_squarefree(self) -> bool:
        return all(a <= 1 for g in self.gens for a in g)

    def monomials(self) -> list[Monomial]:
        return [Monomial(self.vars, g) for g in self.gens]

    def max_exponents(self) -> Exps:
        if not self.gens:
            return (0,) * self.nvars
        return tuple(int(a) for a in np.max(np.array(self.gens), axis=0))

    def gen_array(self) -> np.ndarray:
        return np.array(self.gens, dtype=np.int32).reshape(len(self.gens), self.nvars)

    def to_json(self) -> str:
        return json.dumps({"vars": list(self.vars), "gens": [str(m) for m in self.monomials()]},
                          separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "MonomialIdeal":
        data = json.loads(text)
        vars = tuple(data["vars"])
        return cls(vars, [Monomial.parse(s, vars).exps for s in data["gens"]])

    def __str__(self):
        return "(" + ", ".join(str(m) for m in self.monomials()) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self}"


def edge_monomial(vars: Sequence[str], e: Edge) -> Monomial:
    exps = [0] * len(vars)
    exps[e[0]] += 1
    exps[e[1]] += 1
    return Monomial(tuple(vars), tuple(exps))


def edge_ideal(g: Graph) -> MonomialIdeal:
    return MonomialIdeal(g.labels, [edge_monomial(g.labels, e).exps for e in g.edges()])


def product(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    if i.vars != j.vars:
        raise ValueError("ideals live in different rings")
    return MonomialIdeal(i.vars, [tuple(a + b for a, b in zip(g, h)) for g in i.gens for h in j.gens])


def power(i: MonomialIdeal, s: int) -> MonomialIdeal:
    """Minimal generators of ``i**s`` from multisets of ``s`` generators."""
    if s < 0:
        raise ValueError("negative power")
    if s == 0:
        return MonomialIdeal.unit(i.vars)
    if not i.gens:
        return i
    arr = i.gen_array()
    prods = set()
    for combo in itertools.combinations_with_replacement(range(len(i.gens)), s):
        prods.add(tuple(int(a) for a in arr[list(combo)].sum(axis=0)))
    return MonomialIdeal(i.vars, prods)


def contains(i: MonomialIdeal, m: Monomial) -> bool:
    if m.vars != i.vars:
        raise ValueError("monomial and ideal live in different rings")
    if not i.gens:
        return False
    return bool((i.gen_array() <= np.array(m.exps)).all(axis=1).any())


def colon(j: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """``(j : m)``, generated by ``g / gcd(g, m)`` over the generators ``g``."""
    if m.vars != j.vars:
        raise ValueError("monomial and ideal live in different rings")
    return MonomialIdeal(j.vars, [tuple(max(a - b, 0) for a, b in zip(g, m.exps)) for g in j.gens])


def polarization_vars(vars: Sequence[str], max_exps: Sequence[int]) -> tuple[str, ...]:
    extra = [f"y{k + 1}_{t}" for k, a in enumerate(max_exps) for t in range(1, a)]
    clash = set(extra) & set(vars)
    if clash:
        raise ValueError(f"polarization variable names already in use: {sorted(clash)}")
    return tuple(vars) + tuple(extra)


def polarize_exponents(e: Sequence[int], max_exps: Sequence[int]) -> Exps:
    """Squarefree image of one exponent vector.

    ``x_k^a`` becomes ``x_k * y{k}_1 * ... * y{k}_{a-1}``; the ``y`` block of
    each ``k`` has ``max_exps[k] - 1`` slots and follows all original variables.
    """
    head = [1 if a else 0 for a in e]
    tail = []
    for a, top in zip(e, max_exps):
        tail.extend(1 if t < a else 0 for t in range(1, top))
    return tuple(head + tail)


def polarize(i: MonomialIdeal) -> MonomialIdeal:
    top = i.max_exponents()
    return MonomialIdeal(polarization_vars(i.vars, top), [polarize_exponents(g, top) for g in i.gens])


def polarized_support(vars: Sequence[str], e: Sequence[int], max_exps: Sequence[int]) -> list[str]:
    """Names of the polarized variables covering exponent vector ``e``."""
    pv = polarization_vars(vars, max_exps)
    return [name for name, bit in zip(pv, polarize_exponents(e, max_exps)) if bit]


@dataclass(frozen=True)
class EdgeFactorization:
    """A multiset of edges of ``graph`` times a residual monomial."""

    graph: Graph
    edges: tuple[Edge, ...]
    residual: Exps

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        for u, v in self.edges:
            if not self.graph.has_edge(u, v):
                raise ValueError(f"{(u, v)} is not an edge of the graph")

    @property
    def s(self) -> int:
        return len(self.edges)

    def multiplicity(self) -> Counter:
        return Counter(self.edges)

    def monomial(self) -> Monomial:
        exps = list(self.residual)
        for u, v in self.edges:
            exps[u] += 1
            exps[v] += 1
        return Monomial(self.graph.labels, tuple(exps))

    def __str__(self):
        lab = self.graph.labels
        body = "".join(f"({lab[u]}{lab[v]})" for u, v in self.edges)
        if any(self.residual):
            body += "*" + str(Monomial(lab, self.residual))
        return body


def edge_factorizations(m: Monomial, g: Graph, s: int) -> list[EdgeFactorization]:
    """All multisets of ``s`` edges of ``g`` whose product is ``m``.

    Empty when ``m`` is not such a product.
    """
    if m.vars != g.labels:
        raise ValueError("monomial is not over the graph's vertices")
    if m.degree != 2 * s:
        return []
    all_edges = g.edges()
    out = []

    def go(start: int, rest: list[int], chosen: list[Edge]):
        if len(chosen) == s:
            out.append(EdgeFactorization(g, tuple(chosen), (0,) * g.n))
            return
        for k in range(start, len(all_edges)):
            u, v = all_edges[k]
            if rest[u] and rest[v]:
                rest[u] -= 1
                rest[v] -= 1
                chosen.append((u, v))
                go(k, rest, chosen)
                chosen.pop()
                rest[u] += 1
                rest[v] += 1

    go(0, list(m.exps), [])
    return out
