"""Reduced simplicial homology over prime fields.

Complexes are described by their minimal nonfaces, stored as vertex
bitmasks; faces are produced on demand, one dimension at a time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .graph_core import bits
from .monomial_algebra import MonomialIdeal

DEFAULT_CAP = 24


class SizeCapError(ValueError):
    """Input is larger than the configured enumeration cap."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldPrime:
    p: int = 2

    def __post_init__(self):
        if not (2 <= self.p <= 1 << 16) or not _is_prime(self.p):
            raise ValueError(f"field modulus must be a prime in [2, 65536], got {self.p}")


GF2 = FieldPrime(2)
GF3 = FieldPrime(3)
GF32003 = FieldPrime(32003)


def as_field(f) -> FieldPrime:
    if isinstance(f, FieldPrime):
        return f
    return FieldPrime(int(f))


def _minimal_sets(masks: Iterable[int]) -> tuple[int, ...]:
    ordered = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    keep: list[int] = []
    for m in ordered:
        if not any(k & m == k for k in keep):
            keep.append(m)
    return tuple(sorted(keep))


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on the vertex set ``ground`` (a bitmask) given by minimal nonfaces."""

    ground: int
    nonfaces: tuple[int, ...]
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if any(m & ~self.ground for m in self.nonfaces):
            raise ValueError("nonface outside the ground set")
        object.__setattr__(self, "nonfaces", _minimal_sets(self.nonfaces))

    @classmethod
    def from_sets(cls, ground: Iterable[int], nonfaces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        g = 0
        for v in ground:
            g |= 1 << v
        nf = []
        for s in nonfaces:
            m = 0
            for v in s:
                m |= 1 << v
            nf.append(m)
        return cls(g, tuple(nf))

    @property
    def ground_size(self) -> int:
        return self.ground.bit_count()

    def is_void(self) -> bool:
        return 0 in self.nonfaces

    def is_face(self, mask: int) -> bool:
        return mask & ~self.ground == 0 and not any(m & mask == m for m in self.nonfaces)

    def faces_by_dim(self, cap: int = DEFAULT_CAP) -> list[list[int]]:
        """Faces grouped by dimension: entry ``d + 1`` lists the ``d``-faces."""
        if self.ground_size > cap:
            raise SizeCapError(f"complex has {self.ground_size} vertices, cap is {cap}")
        if self.is_void():
            return []
        verts = bits(self.ground)
        # nonfaces indexed by their largest vertex: only those can newly fit
        by_top: dict[int, list[int]] = {}
        for m in self.nonfaces:
            by_top.setdefault(m.bit_length() - 1, []).append(m)
        levels = [[0]]
        current = [0]
        while current:
            nxt = []
            for face in current:
                start = face.bit_length()
                for v in verts:
                    if v < start:
                        continue
                    cand = face | 1 << v
                    if any(m & cand == m for m in by_top.get(v, ())):
                        continue
                    nxt.append(cand)
            if not nxt:
                break
            levels.append(nxt)
            current = nxt
        return levels

    def f_vector(self) -> list[int]:
        return [len(level) for level in self.faces_by_dim()]

    @property
    def dim(self) -> int:
        return len(self.faces_by_dim()) - 2

    def to_json(self) -> str:
        return json.dumps(
            {"ground": self.ground_size, "nonfaces": [bits(m) for m in self.nonfaces]},
            separators=(",", ":"),
        )


def stanley_reisner(i: MonomialIdeal) -> SimplicialComplex:
    if not i.is_squarefree():
        raise ValueError("Stanley-Reisner complex needs a squarefree ideal")
    nonfaces = []
    for g in i.gens:
        m = 0
        for k, a in enumerate(g):
            if a:
                m |= 1 << k
        nonfaces.append(m)
    return SimplicialComplex((1 << i.nvars) - 1, tuple(nonfaces), i.vars)


def restrict(c: SimplicialComplex, w) -> SimplicialComplex:
    if not isinstance(w, int):
        mask = 0
        for v in w:
            mask |= 1 << v
        w = mask
    if w & ~c.ground:
        raise ValueError("restriction set is not inside the ground set")
    return SimplicialComplex(w, tuple(m for m in c.nonfaces if m & ~w == 0), c.names)


def has_cone_point(c: SimplicialComplex) -> bool:
    covered = 0
    for m in c.nonfaces:
        covered |= m
    return bool(c.ground & ~covered)


def _boundary_rows(faces_k: Sequence[int], faces_km1: Sequence[int]):
    where = {f: t for t, f in enumerate(faces_km1)}
    for f in faces_k:
        yield [(where[f & ~(1 << v)], t) for t, v in enumerate(bits(f))]


def _rank_gf2(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            low = r & -r
            hit = pivots.get(low)
            if hit is None:
                pivots[low] = r
                break
            r ^= hit
    return len(pivots)


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p) by row reduction."""
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank] = a[rank] * inv % p
        below = np.nonzero(a[rank + 1:, c])[0] + rank + 1
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[rank])) % p
        rank += 1
    return rank


def boundary_rank(faces_k: Sequence[int], faces_km1: Sequence[int], f=GF2) -> int:
    """Rank of the boundary map from ``faces_k`` to ``faces_km1``.

    Signs follow sorted vertex order: dropping the t-th vertex gives ``(-1)^t``.
    """
    p = as_field(f).p
    if not faces_k or not faces_km1:
        return 0
    if p == 2:
        rows = []
        for entries in _boundary_rows(faces_k, faces_km1):
            r = 0
            for col, _ in entries:
                r |= 1 << col
            rows.append(r)
        return _rank_gf2(rows)
    mat = np.zeros((len(faces_k), len(faces_km1)), dtype=np.int64)
    for row, entries in enumerate(_boundary_rows(faces_k, faces_km1)):
        for col, t in entries:
            mat[row, col] = 1 if t % 2 == 0 else p - 1
    if mat.shape[0] > mat.shape[1]:
        mat = mat.T
    return rank_mod_p(mat, p)


def homology_from_levels(levels: Sequence[Sequence[int]], f=GF2, min_dim: int = -1,
                         max_dim: int | None = None) -> dict[int, int]:
    """Nonzero reduced Betti numbers from faces grouped by size.

    ``levels[k]`` holds the faces with ``k`` vertices; it must be complete up
    to size ``max_dim + 2`` (or entirely, when ``max_dim`` is None).
    """
    f = as_field(f)
    if not levels:
        return {}
    top = len(levels) - 2
    if max_dim is not None and max_dim < top:
        top = max_dim
    out = {}
    rank_above = None
    for d in range(top, min_dim - 1, -1):
        k = d + 1
        if rank_above is None:
            rank_above = boundary_rank(levels[k + 1], levels[k], f) if k + 1 < len(levels) else 0
        rank_here = boundary_rank(levels[k], levels[k - 1], f) if k >= 1 else 0
        h = len(levels[k]) - rank_here - rank_above
        if h:
            out[d] = h
        rank_above = rank_here
    return out


def reduced_homology_dims(c: SimplicialComplex, f=GF2, cap: int = DEFAULT_CAP,
                          min_dim: int = -1) -> dict[int, int]:
    """Nonzero reduced Betti numbers ``{d: dim H~_d}`` for ``d >= min_dim``.

    The complex ``{empty set}`` has ``H~_{-1}`` of dimension one; the void
    complex has no homology at all.
    """
    return homology_from_levels(c.faces_by_dim(cap), f, min_dim)


def reduced_euler_characteristic(c: SimplicialComplex) -> int:
    return sum((-1) ** (k - 1) * len(level) for k, level in enumerate(c.faces_by_dim()))
