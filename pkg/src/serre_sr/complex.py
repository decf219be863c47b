"""Simplicial complexes over a ground set of at most 63 vertices.

Faces are plain ``int`` bit sets: bit ``v`` is set iff vertex ``v`` belongs
to the face.  A :class:`SimplicialComplex` stores only its facets; every
other face is implied by closure under subsets.

Three kinds of complex are distinguished:

* ``VOID``   -- no faces at all (Stanley-Reisner ideal is the unit ideal),
* ``EMPTY``  -- only the empty face (ideal generated by all variables),
* ``PROPER`` -- everything else.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

MAX_VERTICES = 63

VOID = "void"
EMPTY = "empty"
PROPER = "proper"


class MalformedInputError(ValueError):
    """Input that cannot describe a complex or ideal (bad indices, bad syntax)."""


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


# --------------------------------------------------------------------------
# bit-set helpers

def face(vertices: Iterable[int]) -> int:
    """Pack vertex indices into a bit set."""
    out = 0
    for v in vertices:
        if v < 0:
            raise MalformedInputError(f"negative vertex index {v}")
        out |= 1 << v
    return out


def members(f: int) -> list[int]:
    """Vertex indices of a face, ascending."""
    out = []
    v = 0
    while f:
        if f & 1:
            out.append(v)
        f >>= 1
        v += 1
    return out


def size(f: int) -> int:
    return f.bit_count()


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(f: int) -> Iterable[int]:
    """All subsets of ``f`` (including 0 and ``f`` itself)."""
    s = f
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & f


def maximal_sets(sets: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal members of ``sets``, sorted ascending."""
    uniq = sorted(set(sets), key=lambda s: -s.bit_count())
    kept: list[int] = []
    for s in uniq:
        if not any(s & ~k == 0 for k in kept):
            kept.append(s)
    return tuple(sorted(kept))


def minimal_sets(sets: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal members of ``sets``, sorted ascending."""
    uniq = sorted(set(sets), key=lambda s: s.bit_count())
    kept: list[int] = []
    for s in uniq:
        if not any(k & ~s == 0 for k in kept):
            kept.append(s)
    return tuple(sorted(kept))


# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its facets on the ground set ``0..n-1``.

    Build instances with :func:`from_facets`; the constructor assumes the
    facet tuple is already a sorted antichain.
    """

    n: int
    facets: tuple[int, ...]
    names: tuple[str, ...] | None = None

    @property
    def kind(self) -> str:
        if not self.facets:
            return VOID
        if self.facets == (0,):
            return EMPTY
        return PROPER

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    @property
    def dim(self) -> int | None:
        """Dimension, ``-1`` for EMPTY, ``None`` for VOID."""
        if not self.facets:
            return None
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def krull_dim(self) -> int | None:
        d = self.dim
        return None if d is None else d + 1

    @cached_property
    def faces(self) -> tuple[int, ...]:
        """Every face, sorted by bit pattern."""
        out: set[int] = set()
        for f in self.facets:
            out.update(submasks(f))
        return tuple(sorted(out))

    @cached_property
    def _face_set(self) -> frozenset[int]:
        return frozenset(self.faces)

    @property
    def vertices(self) -> int:
        """Union of all facets as a bit set."""
        out = 0
        for f in self.facets:
            out |= f
        return out

    def is_pure(self) -> bool:
        return len({f.bit_count() for f in self.facets}) <= 1

    def label(self, v: int) -> str:
        return self.names[v] if self.names else str(v)

    def __repr__(self) -> str:
        if self.kind == VOID:
            body = "void"
        elif self.kind == EMPTY:
            body = "empty"
        else:
            body = ", ".join(
                "{" + ",".join(self.label(v) for v in members(f)) + "}" for f in self.facets
            )
        return f"SimplicialComplex(n={self.n}, [{body}])"


def from_facets(candidates: Iterable[int | Iterable[int]], n: int,
                names: Sequence[str] | None = None) -> SimplicialComplex:
    """Complex generated by ``candidates`` (bit sets or vertex iterables).

    An empty candidate list gives the VOID complex, ``[0]`` (the empty face)
    gives EMPTY.
    """
    if not 0 <= n <= MAX_VERTICES:
        raise MalformedInputError(f"ground set size {n} outside 0..{MAX_VERTICES}")
    if names is not None and len(names) != n:
        raise MalformedInputError("need exactly one name per vertex")
    masks = []
    for c in candidates:
        m = c if isinstance(c, int) else face(c)
        if m < 0 or m >> n:
            raise MalformedInputError(f"face {members(m) if m >= 0 else m} has a vertex >= {n}")
        masks.append(m)
    return SimplicialComplex(n, maximal_sets(masks), tuple(names) if names is not None else None)


def simplex(n: int) -> SimplicialComplex:
    """The full simplex on ``n`` vertices."""
    return from_facets([(1 << n) - 1], n)


def boundary_of_simplex(n: int) -> SimplicialComplex:
    full = (1 << n) - 1
    return from_facets([full & ~(1 << v) for v in range(n)], n)


def void(n: int = 0) -> SimplicialComplex:
    return SimplicialComplex(n, ())


def empty(n: int = 0) -> SimplicialComplex:
    return SimplicialComplex(n, (0,))


def _with_facets(delta: SimplicialComplex, facets: Iterable[int]) -> SimplicialComplex:
    return SimplicialComplex(delta.n, maximal_sets(facets), delta.names)


# --------------------------------------------------------------------------
# membership and enumeration

def is_face(delta: SimplicialComplex, sigma: int) -> bool:
    return any(sigma & ~f == 0 for f in delta.facets)


def faces_of_dim(delta: SimplicialComplex, k: int) -> list[int]:
    """Faces with ``k + 1`` vertices, ascending by bit pattern."""
    return [f for f in delta.faces if f.bit_count() == k + 1]


def f_vector(delta: SimplicialComplex) -> tuple[int, ...]:
    """``(f_{-1}, f_0, ..., f_dim)``; the VOID complex has the empty f-vector."""
    if delta.kind == VOID:
        return ()
    counts = [0] * (delta.dim + 2)
    for f in delta.faces:
        counts[f.bit_count()] += 1
    return tuple(counts)


# --------------------------------------------------------------------------
# constructions

def link(delta: SimplicialComplex, sigma: int) -> SimplicialComplex:
    """lk(sigma) = {tau : tau & sigma = 0, tau | sigma in delta}."""
    if not is_face(delta, sigma):
        raise DomainError(f"{members(sigma)} is not a face")
    # F, G facets containing sigma: F - sigma <= G - sigma forces F <= G, so no re-maximalization.
    return SimplicialComplex(
        delta.n,
        tuple(sorted(f & ~sigma for f in delta.facets if sigma & ~f == 0)),
        delta.names,
    )


def star(delta: SimplicialComplex, sigma: int) -> SimplicialComplex:
    if not is_face(delta, sigma):
        raise DomainError(f"{members(sigma)} is not a face")
    return SimplicialComplex(delta.n, tuple(f for f in delta.facets if sigma & ~f == 0), delta.names)


def induced(delta: SimplicialComplex, w: int) -> SimplicialComplex:
    """Restriction to the vertex set ``w``."""
    if w >> delta.n:
        raise MalformedInputError("restriction set leaves the ground set")
    if delta.kind == VOID:
        return delta
    return _with_facets(delta, (f & w for f in delta.facets))


def skeleton(delta: SimplicialComplex, i: int) -> SimplicialComplex:
    """Faces of dimension at most ``i``."""
    if i < -1:
        raise DomainError("skeleton index must be >= -1")
    if delta.kind == VOID or i >= delta.dim:
        return delta
    keep = i + 1
    out: set[int] = set()
    for f in delta.facets:
        if f.bit_count() <= keep:
            out.add(f)
        else:
            out.update(face(c) for c in combinations(members(f), keep))
    return _with_facets(delta, out)


def cone(delta: SimplicialComplex) -> SimplicialComplex:
    """Cone with a new apex appended as vertex ``n``."""
    apex = 1 << delta.n
    names = delta.names + (f"apex{delta.n}",) if delta.names else None
    return from_facets([f | apex for f in delta.facets], delta.n + 1, names)


def minimal_nonfaces(delta: SimplicialComplex) -> tuple[int, ...]:
    """Minimal subsets of the ground set that are not faces."""
    if delta.kind == VOID:
        return (0,)
    faces = delta._face_set
    out = set()
    for f in delta.faces:
        for v in range(delta.n):
            bit = 1 << v
            if f & bit:
                continue
            s = f | bit
            if s in faces:
                continue
            if all((s & ~(1 << u)) in faces for u in members(s)):
                out.add(s)
    return tuple(sorted(out))


def alexander_dual(delta: SimplicialComplex) -> SimplicialComplex:
    """{sigma : complement(sigma) not in delta}, on the same ground set.

    The full simplex dualizes to VOID and VOID to the full simplex; callers
    that care should inspect ``kind`` of the result.
    """
    full = delta.ground
    return SimplicialComplex(
        delta.n,
        maximal_sets(full & ~m for m in minimal_nonfaces(delta)),
        delta.names,
    )


# --------------------------------------------------------------------------
# graphs

def _components(nodes: Sequence[int], adjacent) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for start in nodes:
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adjacent(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def is_connected(delta: SimplicialComplex) -> bool:
    """Connectivity of the underlying space.

    VOID and EMPTY count as disconnected (EMPTY has nonzero reduced
    homology in degree -1).
    """
    if delta.kind != PROPER:
        return False
    verts = members(delta.vertices)
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for f in delta.facets:
        vs = members(f)
        for v in vs:
            adj[v].update(vs)
    return len(_components(verts, adj.__getitem__)) == 1


@dataclass(frozen=True)
class FacetGraph:
    """Graph on facet indices with edges ``1 <= h(F, G) <= j``."""

    facets: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    j: int

    @property
    def vertices(self) -> range:
        return range(len(self.facets))

    def is_connected(self) -> bool:
        if not self.facets:
            return False
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return len(_components(list(self.vertices), adj.__getitem__)) == 1


def facet_height(delta: SimplicialComplex, a: int, b: int) -> int:
    """Height of the monomial prime of ``a & b`` in the Stanley-Reisner ring.

    Equal to the size of the largest facet through ``a & b`` minus ``|a & b|``.
    """
    meet = a & b
    top = max(f.bit_count() for f in delta.facets if meet & ~f == 0)
    return top - meet.bit_count()


def facet_graph(delta: SimplicialComplex, j: int) -> FacetGraph:
    if j < 1:
        raise DomainError("facet graph threshold j must be >= 1")
    if not delta.facets:
        raise DomainError("facet graph of the void complex")
    fs = delta.facets
    edges = []
    for x in range(len(fs)):
        for y in range(x + 1, len(fs)):
            if 1 <= facet_height(delta, fs[x], fs[y]) <= j:
                edges.append((x, y))
    return FacetGraph(fs, tuple(edges), j)


def is_j_locally_connected(delta: SimplicialComplex, j: int) -> tuple[bool, int | None]:
    """Whether every link (``lk(empty)`` included) has a connected ``G^j``.

    Returns ``(ok, witness)`` where ``witness`` is the first face, in bit
    order, whose link graph is disconnected.
    """
    for sigma in delta.faces:
        if not facet_graph(link(delta, sigma), j).is_connected():
            return False, sigma
    return True, None


# --------------------------------------------------------------------------
# facet file format

_SPLIT = re.compile(r"[\s,]+")


def parse_facets(text: str) -> SimplicialComplex:
    """Read the facet text format.

    One facet per line, vertices separated by whitespace or commas; labels
    are numbered in order of first appearance.  ``#`` starts a comment line,
    the line ``empty`` is the empty face, and an optional ``vertices:`` line
    fixes the ground set (needed when some vertex lies in no facet).
    A file without facet lines describes the VOID complex.
    """
    labels: dict[str, int] = {}
    rows: list[list[str]] = []
    declared = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.lower().startswith("vertices:"):
            if declared or labels:
                raise MalformedInputError(f"line {lineno}: vertices: header must come first")
            declared = True
            for tok in _SPLIT.split(line.split(":", 1)[1].strip()):
                if tok:
                    if tok in labels:
                        raise MalformedInputError(f"line {lineno}: duplicate vertex {tok!r}")
                    labels[tok] = len(labels)
            continue
        if line == "empty":
            rows.append([])
            continue
        toks = [t for t in _SPLIT.split(line) if t]
        for tok in toks:
            if tok not in labels:
                if declared:
                    raise MalformedInputError(f"line {lineno}: undeclared vertex {tok!r}")
                labels[tok] = len(labels)
        rows.append(toks)
    if len(labels) > MAX_VERTICES:
        raise MalformedInputError(f"more than {MAX_VERTICES} vertices")
    names = list(labels)
    return from_facets([face(labels[t] for t in r) for r in rows], len(names), names)


def format_facets(delta: SimplicialComplex) -> str:
    """Canonical facet text; round-trips through :func:`parse_facets`."""
    lines = []
    seen: list[int] = []
    for f in delta.facets:
        seen.extend(v for v in members(f) if v not in seen)
    # the header is needed when first appearance would number vertices differently
    if seen != list(range(delta.n)) or delta.kind != PROPER:
        lines.append("vertices: " + " ".join(delta.label(v) for v in range(delta.n)))
    for f in delta.facets:
        lines.append(" ".join(delta.label(v) for v in members(f)) if f else "empty")
    return "\n".join(lines) + "\n"
