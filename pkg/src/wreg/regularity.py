"""Graded Betti numbers and Castelnuovo-Mumford regularity of monomial ideals.

Squarefree ideals go through Hochster's formula: ``beta_{i,j}`` is the sum
over vertex sets ``W`` with ``|W| = j`` of ``dim H~_{j-i-2}`` of the
restricted Stanley-Reisner complex.  Only unions of generator supports can
contribute, every other ``W`` has a cone point.

Ideals with higher powers are by default handled through the upper Koszul
complexes ``K^b = {F squarefree : x^(b-F) in I}`` for ``b`` in the lcm
lattice, which give ``beta_{i,b} = dim H~_{i-1}(K^b)``.  These are the
multigraded Betti numbers of the polarization, read off in the original
variables; ``method="polarize"`` runs Hochster on the polarized ideal
instead.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np

from ._parallel import pmap
from .graph_core import Graph, bits
from .homology_engine import (
    DEFAULT_CAP,
    GF2,
    FieldPrime,
    SizeCapError,
    as_field,
    homology_from_levels,
    restrict,
    stanley_reisner,
)
from .monomial_algebra import (
    MonomialIdeal,
    edge_ideal,
    polarization_vars,
    polarize,
    polarized_support,
)


@dataclass
class BettiTable:
    entries: dict[tuple[int, int], int]
    field: FieldPrime = GF2

    @property
    def regularity(self) -> int:
        return max(j - i for (i, j) in self.entries)

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "beta"])
        for (i, j), b in sorted(self.entries.items()):
            w.writerow([i, j, b])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, field: FieldPrime = GF2) -> "BettiTable":
        rows = csv.DictReader(io.StringIO(text))
        return cls({(int(r["i"]), int(r["j"])): int(r["beta"]) for r in rows}, field)


@dataclass
class RegularityResult:
    ideal: MonomialIdeal
    field: FieldPrime
    reg: int
    witness_subset: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(
            {"ideal": json.loads(self.ideal.to_json()), "field": self.field.p,
             "reg": self.reg, "witness_subset": self.witness_subset},
            separators=(",", ":"),
        )


def _check_nonzero(i: MonomialIdeal):
    if i.is_zero():
        raise ValueError("regularity of the zero ideal is not defined here")


def _polarized_size(i: MonomialIdeal) -> int:
    return len(polarization_vars(i.vars, i.max_exponents()))


def _check_cap(i: MonomialIdeal, cap: int):
    size = _polarized_size(i)
    if size > cap:
        raise SizeCapError(f"polarized ambient has {size} variables, cap is {cap}")


# -- Hochster route ---------------------------------------------------------

def support_unions(nonfaces) -> list[int]:
    """All nonempty unions of the given masks, largest first then by value."""
    seen = set(nonfaces)
    frontier = list(seen)
    while frontier:
        fresh = []
        for w in frontier:
            for m in nonfaces:
                u = w | m
                if u not in seen:
                    seen.add(u)
                    fresh.append(u)
        frontier = fresh
    return sorted(seen, key=lambda w: (-w.bit_count(), w))


def _hochster_chunk(args):
    delta, subsets, p, full = args
    best, witness = -1, None
    table: dict[tuple[int, int], int] = {}
    for w in subsets:
        levels = restrict(delta, w).faces_by_dim(DEFAULT_CAP)
        size = w.bit_count()
        top = len(levels) - 2
        if full:
            for d, h in homology_from_levels(levels, p).items():
                i = size - d - 2
                if i >= 0:
                    table[(i, size)] = table.get((i, size), 0) + h
                    if d + 2 > best:
                        best, witness = d + 2, w
            continue
        # a class in degree d only matters if d + 2 beats the current best
        if min(top, size - 2) + 2 <= best:
            continue
        dims = homology_from_levels(levels, p, min_dim=max(best - 1, -1), max_dim=size - 2)
        if dims:
            r = max(dims) + 2
            if r > best:
                best, witness = r, w
    return best, witness, table


def _hochster(i: MonomialIdeal, f: FieldPrime, full: bool, threads: int, cap: int):
    if not i.is_squarefree():
        raise ValueError("Hochster's formula needs a squarefree ideal")
    _check_nonzero(i)
    if i.nvars > cap:
        raise SizeCapError(f"ideal has {i.nvars} variables, cap is {cap}")
    delta = stanley_reisner(i)
    subsets = support_unions(delta.nonfaces)
    chunks = _split(subsets, threads)
    parts = pmap(_hochster_chunk, [(delta, c, f.p, full) for c in chunks], threads)
    return _merge(parts)


def _split(items: list, threads: int) -> list[list]:
    k = max(1, min(threads, len(items)))
    size = -(-len(items) // k)
    return [items[t:t + size] for t in range(0, len(items), size)]


def _merge(parts):
    best, witness = -1, None
    table: dict = {}
    for b, w, t in parts:
        if b > best:
            best, witness = b, w
        for key, val in t.items():
            table[key] = table.get(key, 0) + val
    return best, witness, table


def regularity_squarefree(i: MonomialIdeal, f=GF2, threads: int = 1, cap: int = DEFAULT_CAP) -> int:
    return regularity_report(i, f, threads=threads, cap=cap, method="hochster").reg


# -- Koszul route -----------------------------------------------------------

def lcm_lattice(i: MonomialIdeal) -> np.ndarray:
    """Exponent vectors of all lcms of nonempty sets of generators."""
    gens = i.gen_array()
    seen = {tuple(g) for g in gens.tolist()}
    frontier = gens
    while len(frontier):
        cand = np.maximum(frontier[:, None, :], gens[None, :, :]).reshape(-1, gens.shape[1])
        cand = np.unique(cand, axis=0)
        fresh = [t for t in map(tuple, cand.tolist()) if t not in seen]
        seen.update(fresh)
        frontier = np.array(fresh, dtype=gens.dtype).reshape(-1, gens.shape[1])
    out = np.array(sorted(seen, key=lambda e: (-sum(e), e)), dtype=np.int32)
    return out.reshape(-1, gens.shape[1])


def koszul_levels(gens: np.ndarray, b: np.ndarray):
    """Faces of ``K^b`` grouped by size, on the support of ``b``.

    Returns None when ``K^b`` is a cone (some vertex lies in every facet).
    """
    support = np.nonzero(b)[0]
    below = gens[(gens <= b).all(axis=1)]
    # facet of generator g: the support positions where g stays strictly below b
    strict = below[:, support] < b[support]
    weights = 1 << np.arange(len(support))
    facets = np.unique((strict * weights).sum(axis=1))
    full = (1 << len(support)) - 1
    common = full
    for fm in facets.tolist():
        common &= fm
    if common:
        return None
    masks = np.arange(1 << len(support))
    is_face = ((masks[:, None] & ~facets[None, :]) == 0).any(axis=1)
    faces = masks[is_face]
    pop = np.array([int(m).bit_count() for m in faces.tolist()])
    levels = [faces[pop == k].tolist() for k in range(int(pop.max()) + 1)]
    return levels


def _koszul_chunk(args):
    gens, lattice, p, full = args
    best, witness = -1, None
    table: dict[tuple[int, int], int] = {}
    for b in lattice:
        deg = int(b.sum())
        # beta_{i,b} with i - 1 = d contributes deg - i = deg - d - 1
        if not full and deg - best - 2 < -1:
            continue
        levels = koszul_levels(gens, b)
        if levels is None:
            continue
        max_dim = None if full else deg - best - 2
        dims = homology_from_levels(levels, p, max_dim=max_dim)
        for d, h in dims.items():
            i = d + 1
            if full:
                table[(i, deg)] = table.get((i, deg), 0) + h
            if deg - i > best:
                best, witness = deg - i, tuple(int(a) for a in b)
    return best, witness, table


def _koszul(i: MonomialIdeal, f: FieldPrime, full: bool, threads: int):
    _check_nonzero(i)
    gens = i.gen_array()
    lattice = lcm_lattice(i)
    chunks = _split(list(lattice), threads)
    parts = pmap(_koszul_chunk, [(gens, c, f.p, full) for c in chunks], threads)
    return _merge(parts)


# -- public entry points ----------------------------------------------------

def _route(i: MonomialIdeal, method: str) -> str:
    if method not in ("auto", "hochster", "koszul", "polarize"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        return "hochster" if i.is_squarefree() else "koszul"
    return method


def regularity_report(i: MonomialIdeal, f=GF2, threads: int = 1, cap: int = DEFAULT_CAP,
                      method: str = "auto") -> RegularityResult:
    """Regularity plus a vertex set (in polarized variables) that attains it."""
    f = as_field(f)
    _check_nonzero(i)
    _check_cap(i, cap)
    route = _route(i, method)
    if route == "polarize":
        j = polarize(i)
        res = regularity_report(j, f, threads, cap, "hochster")
        return RegularityResult(i, f, res.reg, res.witness_subset)
    if route == "hochster":
        best, w, _ = _hochster(i, f, False, threads, cap)
        return RegularityResult(i, f, best, [i.vars[k] for k in bits(w)])
    best, b, _ = _koszul(i, f, False, threads)
    return RegularityResult(i, f, best, polarized_support(i.vars, b, i.max_exponents()))


def regularity(i: MonomialIdeal, f=GF2, threads: int = 1, cap: int = DEFAULT_CAP,
               method: str = "auto") -> int:
    return regularity_report(i, f, threads, cap, method).reg


def betti_table(i: MonomialIdeal, f=GF2, threads: int = 1, cap: int = DEFAULT_CAP,
                method: str = "auto") -> BettiTable:
    f = as_field(f)
    _check_nonzero(i)
    _check_cap(i, cap)
    route = _route(i, method)
    if route == "polarize":
        i, route = polarize(i), "hochster"
    if route == "hochster":
        _, _, table = _hochster(i, f, True, threads, cap)
    else:
        _, _, table = _koszul(i, f, True, threads)
    return BettiTable(dict(sorted(table.items())), f)


def reg_graph(g: Graph, f=GF2, threads: int = 1) -> int:
    if g.edge_count == 0:
        raise ValueError("graph has no edges")
    return regularity(edge_ideal(g), f, threads)
