"""Ring invariants of Stanley-Reisner rings through Hochster's formulas.

Local cohomology and depth come from the reduced homology of links,
graded Betti numbers of a squarefree ideal from the reduced homology of
induced subcomplexes.  Nothing here builds a free resolution.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .complex import (VOID, DomainError, SimplicialComplex, f_vector, induced, is_face, link,
                      skeleton)
from .homology import _betti, reduced_betti_all
from .linalg import PrimeField, as_field
from .monomial import MonomialIdeal, complex_of_ideal


def _require_nonvoid(delta: SimplicialComplex) -> None:
    if delta.kind == VOID:
        raise DomainError("the void complex has no Stanley-Reisner ring")


def _link_betti(delta: SimplicialComplex, sigma: int, p: int) -> tuple[int, ...]:
    return _betti(link(delta, sigma).facets, p)


@lru_cache(maxsize=4096)
def _link_depths(facets: tuple[int, ...], n: int, p: int) -> dict[int, int]:
    """depth of the link of every face, keyed by face.

    Uses depth(lk s) = min over faces F >= s of low(F) + |F| - |s| + 1, where
    low(F) is the lowest degree of nonvanishing reduced homology of lk F.
    """
    delta = SimplicialComplex(n, facets)
    inf = 1 << 30
    best: dict[int, int] = {}  # min over F >= s of low(F) + |F|
    for s in sorted(delta.faces, key=lambda f: -f.bit_count()):
        b = _link_betti(delta, s, p)
        low = next((k - 1 for k, x in enumerate(b) if x), None)
        m = inf if low is None else low + s.bit_count()
        rest = delta.ground & ~s
        while rest:
            bit = rest & -rest
            rest ^= bit
            up = best.get(s | bit)
            if up is not None and up < m:
                m = up
        best[s] = m
    return {s: m - s.bit_count() + 1 for s, m in best.items()}


def link_depths(delta: SimplicialComplex, field_: PrimeField | int) -> dict[int, int]:
    """``{face: depth of K[lk face]}`` for every face."""
    _require_nonvoid(delta)
    return _link_depths(delta.facets, delta.n, as_field(field_).p)


# --------------------------------------------------------------------------
# local cohomology, depth, Cohen-Macaulayness

@dataclass(frozen=True)
class LocalCohomologyTable:
    """``h[i] = sum over faces s of dim H~_{i-|s|-1}(lk s)`` for ``0 <= i <= krull_dim``."""

    h: tuple[int, ...]
    p: int

    def nonzero(self) -> list[int]:
        return [i for i, x in enumerate(self.h) if x]


def local_cohomology(delta: SimplicialComplex, field_: PrimeField | int) -> LocalCohomologyTable:
    _require_nonvoid(delta)
    p = as_field(field_).p
    h = [0] * (delta.krull_dim + 1)
    for s in delta.faces:
        for k, x in enumerate(_link_betti(delta, s, p)):
            if x:
                # homology degree k - 1 contributes to h_{k - 1 + |s| + 1}
                h[k + s.bit_count()] += x
    return LocalCohomologyTable(tuple(h), p)


def depth(delta: SimplicialComplex, field_: PrimeField | int) -> int:
    """Depth of K[delta]: least i with nonzero local cohomology."""
    return link_depths(delta, field_)[0]


def depth_from_local_cohomology(delta: SimplicialComplex, field_: PrimeField | int) -> int:
    return local_cohomology(delta, field_).nonzero()[0]


def is_cm(delta: SimplicialComplex, field_: PrimeField | int) -> tuple[bool, tuple[int, int] | None]:
    """Reisner's criterion.

    Returns ``(ok, witness)``; the witness is the first ``(face, i)`` with
    ``i < dim lk(face)`` and ``H~_i(lk face) != 0``.
    """
    _require_nonvoid(delta)
    p = as_field(field_).p
    for s in delta.faces:
        lk = link(delta, s)
        b = _betti(lk.facets, p)
        for k in range(lk.dim + 1):  # homology degree k - 1 < dim lk
            if b[k]:
                return False, (s, k - 1)
    return True, None


def depth_via_skeleton(delta: SimplicialComplex, field_: PrimeField | int) -> int:
    """``1 + max{b : the b-skeleton is Cohen-Macaulay}``, b capped at dim."""
    _require_nonvoid(delta)
    best = -1
    for b in range(0, delta.dim + 1):
        if is_cm(skeleton(delta, b), field_)[0]:
            best = b
    return best + 1


# --------------------------------------------------------------------------
# graded Betti numbers

@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers ``beta_{i, s}`` of a squarefree ideal.

    ``i`` is the homological degree of the ideal itself (generators sit in
    ``i = 0``) and ``s`` is the squarefree multidegree as a bit set.
    """

    n: int
    p: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict, hash=False)

    def totals(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for (i, s), x in self.entries.items():
            key = (i, s.bit_count())
            out[key] = out.get(key, 0) + x
        return out

    def total(self, i: int, b: int) -> int:
        return self.totals().get((i, b), 0)

    def rows(self) -> list[tuple[int, int, int]]:
        return sorted((i, b, x) for (i, b), x in self.totals().items())

    def to_text(self) -> str:
        return "".join(f"{i} {b} {x}\n" for i, b, x in self.rows())

    def max_homological_degree(self) -> int | None:
        return max((i for i, _ in self.entries), default=None)

    def pd_quotient(self) -> int | None:
        """pd(S/I) = 1 + pd(I); None for the zero ideal."""
        top = self.max_homological_degree()
        return None if top is None else top + 1

    def reg(self) -> int | None:
        return max((s.bit_count() - i for i, s in self.entries), default=None)


def parse_betti_rows(text: str) -> dict[tuple[int, int], int]:
    out = {}
    for line in text.splitlines():
        if line.strip():
            i, b, x = (int(t) for t in line.split())
            out[(i, b)] = x
    return out


def betti_of_complex(delta: SimplicialComplex, field_: PrimeField | int) -> BettiTable:
    """Betti numbers of I_delta: ``beta_{i,s} = dim H~_{|s|-i-2}(delta|_s)``."""
    _require_nonvoid(delta)
    p = as_field(field_).p
    entries = {}
    for s in sorted(range(1 << delta.n), key=lambda m: (m.bit_count(), m)):
        if is_face(delta, s):
            continue  # induced subcomplex is a simplex or EMPTY at s = 0
        sub = induced(delta, s)
        k_size = s.bit_count()
        for i_h, x in reduced_betti_all(sub, p).items():
            if x:
                i = k_size - i_h - 2
                if i >= 0:
                    entries[(i, s)] = x
    return BettiTable(delta.n, p, entries)


def graded_betti(ideal: MonomialIdeal, field_: PrimeField | int) -> BettiTable:
    if ideal.is_unit:
        raise DomainError("Betti numbers of the unit ideal")
    return betti_of_complex(complex_of_ideal(ideal), field_)


def pd(ideal: MonomialIdeal, field_: PrimeField | int) -> int | None:
    """Projective dimension of S/I; None (undefined) for zero or unit ideals."""
    if ideal.is_zero or ideal.is_unit:
        return None
    return graded_betti(ideal, field_).pd_quotient()


def reg(ideal: MonomialIdeal, field_: PrimeField | int) -> int | None:
    """Castelnuovo-Mumford regularity of the ideal; None for zero or unit ideals."""
    if ideal.is_zero or ideal.is_unit:
        return None
    return graded_betti(ideal, field_).reg()


def has_linear_resolution(table: BettiTable) -> bool:
    """All nonzero ``beta_{i,b}`` lie on one line ``b = i + c``."""
    shifts = {s.bit_count() - i for i, s in table.entries}
    return len(shifts) <= 1


def satisfies_n(idual: MonomialIdeal, c: int, ell: int, j: int,
                field_: PrimeField | int, table: BettiTable | None = None
                ) -> tuple[bool, tuple[int, int] | None]:
    """Vanishing of ``[Tor_g(I, K)]_b`` for ``g < ell`` and ``c + j + g < b <= n``.

    Returns ``(ok, witness)`` with witness the first offending ``(g, b)``.
    """
    if table is None:
        table = graded_betti(idual, field_)
    tot = table.totals()
    for g in range(ell):
        for b in range(c + j + g + 1, idual.n + 1):
            if tot.get((g, b), 0):
                return False, (g, b)
    return True, None


def describe(delta: SimplicialComplex, field_: PrimeField | int) -> dict:
    """Invariant block used by reports; degenerate values are None."""
    if delta.kind == VOID:
        return {"dim": None, "krull_dim": None, "depth": None, "pd": None, "reg": None,
                "f_vector": [], "cohen_macaulay": None}
    table = betti_of_complex(delta, field_)
    return {
        "dim": delta.dim,
        "krull_dim": delta.krull_dim,
        "depth": depth(delta, field_),
        "pd": table.pd_quotient(),
        "reg": table.reg(),
        "f_vector": list(f_vector(delta)),
        "cohen_macaulay": is_cm(delta, field_)[0],
    }

