"""Exact rank over prime fields GF(p)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

CROSS_CHECK_PRIME = 32003


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    q = 3
    while q * q <= p:
        if p % q == 0:
            return False
        q += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not (2 <= self.p < 2**31) or not _is_prime(self.p):
            raise ValueError(f"{self.p} is not a prime below 2^31")

    def __int__(self) -> int:
        return self.p


GF2 = PrimeField(2)


def as_field(field: PrimeField | int) -> PrimeField:
    return field if isinstance(field, PrimeField) else PrimeField(int(field))


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix of residues, row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], field: PrimeField | int,
                  cols: int | None = None) -> "ExactMatrix":
        p = as_field(field).p
        if cols is None:
            cols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(x % p for x in r)
        return cls(len(rows), cols, tuple(flat))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows,
                           tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def matmul(self, other: "ExactMatrix", field: PrimeField | int) -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        p = as_field(field).p
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                out.append(sum(r[k] * other[k, j] for k in range(self.cols)) % p)
        return ExactMatrix(self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.entries)


def _rank_gf2(rows: Sequence[Sequence[int]]) -> int:
    # rows packed into ints; xor basis keyed by leading bit
    basis: dict[int, int] = {}
    for r in rows:
        v = 0
        for k, x in enumerate(r):
            if x & 1:
                v |= 1 << k
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                break
            v ^= b
    return len(basis)


def rank_of_rows(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over GF(p) of a matrix given as a list of rows (any integers)."""
    if p == 2:
        return _rank_gf2(rows)
    work = [[x % p for x in r] for r in rows]
    work = [r for r in work if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        inv = pow(prow[c], -1, p)
        if inv != 1:
            prow = work[rank] = [x * inv % p for x in prow]
        for i in range(rank + 1, len(work)):
            f = work[i][c]
            if f:
                row = work[i]
                work[i] = [(x - f * y) % p for x, y in zip(row, prow)]
        rank += 1
        if rank == len(work):
            break
    return rank


def rank(m: ExactMatrix, field: PrimeField | int) -> int:
    """Rank of ``m`` over GF(p); entries are expected to be reduced mod p."""
    p = as_field(field).p
    return rank_of_rows([m.row(i) for i in range(m.rows)], p)


def nullity(m: ExactMatrix, field: PrimeField | int) -> int:
    return m.cols - rank(m, field)
