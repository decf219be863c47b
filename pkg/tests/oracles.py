"""Slow, independent reference computations used only by the tests.

Nothing here imports the rank, homology or Betti code of the package:
ranks use exact rationals, faces are enumerated with itertools, and Betti
numbers of arbitrary monomial ideals come from upper Koszul simplicial
complexes rather than from Hochster's formula.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product


def rational_rank(rows) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def all_faces(facets):
    """Faces as sorted vertex tuples, from facets given as vertex tuples."""
    out = set()
    for f in facets:
        for k in range(len(f) + 1):
            out.update(combinations(sorted(f), k))
    return out


def rational_betti(faces) -> dict[int, int]:
    """Reduced Betti numbers over Q of the complex with the given face set."""
    faces = set(faces)
    if not faces:
        return {}
    by = {}
    for f in faces:
        by.setdefault(len(f), []).append(f)
    top = max(by)
    ranks = {}
    for k in range(1, top + 1):
        lo = sorted(by.get(k - 1, []))
        hi = sorted(by.get(k, []))
        idx = {f: i for i, f in enumerate(lo)}
        mat = []
        for sigma in hi:
            row = [0] * len(lo)
            for pos in range(len(sigma)):
                row[idx[sigma[:pos] + sigma[pos + 1:]]] = (-1) ** pos
            mat.append(row)
        ranks[k] = rational_rank(mat) if mat and lo else 0
    return {k - 1: len(by.get(k, [])) - ranks.get(k, 0) - ranks.get(k + 1, 0)
            for k in range(top + 1)}


def koszul_betti(gens, n) -> dict[tuple[int, int], int]:
    """Total graded Betti numbers beta_{i,b} of a monomial ideal.

    beta_{i,a}(I) = dim H~_{i-1}(K^a), where K^a is the complex of squarefree
    F within supp(a) with x^(a - F) in I; only multidegrees a below the lcm
    of all generators can contribute.
    """
    def in_ideal(m):
        return any(all(x <= y for x, y in zip(g, m)) for g in gens)

    top = [max(g[k] for g in gens) for k in range(n)]
    out: dict[tuple[int, int], int] = {}
    for a in product(*(range(t + 1) for t in top)):
        supp = [k for k in range(n) if a[k]]
        faces = set()
        for size in range(len(supp) + 1):
            for F in combinations(supp, size):
                m = list(a)
                for k in F:
                    m[k] -= 1
                if in_ideal(m):
                    faces.add(F)
        for h, x in rational_betti(faces).items():
            if x:
                key = (h + 1, sum(a))
                out[key] = out.get(key, 0) + x
    return out


def minimal_primes_brute(gens, n) -> list[frozenset]:
    """Variable sets P, minimal among those meeting the support of every generator."""
    supps = [frozenset(k for k in range(n) if g[k]) for g in gens]
    hits = [frozenset(P) for r in range(n + 1) for P in combinations(range(n), r)
            if all(s & set(P) for s in supps)]
    return sorted((P for P in hits if not any(Q < P for Q in hits)), key=sorted)


def depth_from_scratch(facets, n) -> int:
    """Depth of K[delta] from Hochster's local cohomology formula, rationally."""
    faces = all_faces(facets)
    best = None
    for s in faces:
        lk = {t for t in faces if not set(t) & set(s) and tuple(sorted(set(t) | set(s))) in faces}
        for i, x in rational_betti(lk).items():
            if x:
                deg = i + len(s) + 1
                best = deg if best is None else min(best, deg)
    return best
