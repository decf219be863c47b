"""Reduced simplicial homology dimensions over GF(p).

Chains use the augmented convention: the empty face spans ``C_{-1}``, so
``H~_{-1}(EMPTY) = 1`` and every complex with a vertex has ``H~_{-1} = 0``.
Orientation signs come from the sorted vertex order: deleting the k-th
smallest vertex (0-based) contributes ``(-1)^k``.
"""
from __future__ import annotations

from functools import lru_cache

from .complex import VOID, DomainError, SimplicialComplex, members
from .linalg import ExactMatrix, PrimeField, as_field, rank_of_rows


def _faces_by_size(facets: tuple[int, ...]) -> list[list[int]]:
    seen: set[int] = set()
    for f in facets:
        s = f
        while True:
            seen.add(s)
            if s == 0:
                break
            s = (s - 1) & f
    top = max(f.bit_count() for f in facets)
    by = [[] for _ in range(top + 1)]
    for s in sorted(seen):
        by[s.bit_count()].append(s)
    return by


def _boundary_rank(rows: list[int], cols: list[int], p: int) -> int:
    if not rows or not cols:
        return 0
    index = {r: k for k, r in enumerate(rows)}
    if p == 2:
        basis: dict[int, int] = {}
        for sigma in cols:
            v = 0
            s = sigma
            while s:
                low = s & -s
                v |= 1 << index[sigma ^ low]
                s ^= low
            while v:
                top = v.bit_length() - 1
                b = basis.get(top)
                if b is None:
                    basis[top] = v
                    break
                v ^= b
        return len(basis)
    mat = []
    for sigma in cols:
        col = [0] * len(rows)
        for k, v in enumerate(members(sigma)):
            col[index[sigma & ~(1 << v)]] = 1 if k % 2 == 0 else p - 1
        mat.append(col)
    return rank_of_rows(mat, p)


@lru_cache(maxsize=1 << 16)
def _betti(facets: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Reduced Betti numbers for i = -1..dim, as a tuple offset by one."""
    by = _faces_by_size(facets)
    top = len(by) - 1  # largest face size
    # ranks[k] = rank of the boundary map from size-k faces to size-(k-1) faces
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        ranks[k] = _boundary_rank(by[k - 1], by[k], p)
    return tuple(len(by[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1))


def boundary_matrix(delta: SimplicialComplex, i: int, field: PrimeField | int) -> ExactMatrix:
    """Matrix of the boundary map from i-faces to (i-1)-faces.

    Rows are indexed by ``faces_of_dim(delta, i - 1)`` and columns by
    ``faces_of_dim(delta, i)``; ``i = 0`` is the augmentation onto the
    empty face.
    """
    if delta.kind == VOID:
        raise DomainError("boundary matrix of the void complex")
    p = as_field(field).p
    rows = [f for f in delta.faces if f.bit_count() == i]
    cols = [f for f in delta.faces if f.bit_count() == i + 1]
    index = {r: k for k, r in enumerate(rows)}
    ent = [[0] * len(cols) for _ in rows]
    for c, sigma in enumerate(cols):
        for k, v in enumerate(members(sigma)):
            ent[index[sigma & ~(1 << v)]][c] = 1 if k % 2 == 0 else p - 1
    return ExactMatrix.from_rows(ent, p, cols=len(cols))


def reduced_betti(delta: SimplicialComplex, i: int, field: PrimeField | int) -> int:
    """dim H~_i(delta; GF(p))."""
    if delta.kind == VOID:
        return 0
    b = _betti(delta.facets, as_field(field).p)
    k = i + 1
    return b[k] if 0 <= k < len(b) else 0


def reduced_betti_all(delta: SimplicialComplex, field: PrimeField | int) -> dict[int, int]:
    """``{i: dim H~_i}`` for ``-1 <= i <= dim``; empty for VOID."""
    if delta.kind == VOID:
        return {}
    b = _betti(delta.facets, as_field(field).p)
    return {k - 1: x for k, x in enumerate(b)}


def lowest_homology(delta: SimplicialComplex, field: PrimeField | int) -> int | None:
    """Least i with H~_i nonzero, or None when the complex is acyclic."""
    if delta.kind == VOID:
        return None
    b = _betti(delta.facets, as_field(field).p)
    for k, x in enumerate(b):
        if x:
            return k - 1
    return None


def euler_characteristic(delta: SimplicialComplex) -> int:
    """Reduced Euler characteristic sum_{i>=-1} (-1)^i f_i."""
    if delta.kind == VOID:
        return 0
    total = 0
    for f in delta.faces:
        total += -1 if f.bit_count() % 2 == 0 else 1
    return total
