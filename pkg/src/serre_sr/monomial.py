"""Monomial ideals, the Stanley-Reisner dictionary, duals, polarization, radicals.

A monomial is a tuple of exponents of length ``n``.  Ideals keep a minimal
generating set, sorted, so equal ideals compare equal.  The zero ideal has
no generators and the unit ideal has the single generator ``(0, ..., 0)``.
Squarefree ideals translate to and from :class:`SimplicialComplex` through
supports as bit sets.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complex import (MAX_VERTICES, DomainError, MalformedInputError, SimplicialComplex,
                      face, maximal_sets, members, minimal_nonfaces, minimal_sets)

Monomial = tuple[int, ...]


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def support(m: Monomial) -> int:
    return face(k for k, e in enumerate(m) if e)


def from_support(mask: int, n: int) -> Monomial:
    return tuple((mask >> k) & 1 for k in range(n))


def minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    uniq = sorted(set(gens), key=lambda g: (sum(g), g))
    kept: list[Monomial] = []
    for g in uniq:
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    # reversed exponent order makes squarefree generators sort like their bit sets
    return tuple(sorted(kept, key=lambda g: g[::-1]))


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple[Monomial, ...]
    names: tuple[str, ...] | None = None

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], n: int,
                        names: Sequence[str] | None = None) -> "MonomialIdeal":
        out = []
        for g in gens:
            g = tuple(int(e) for e in g)
            if len(g) != n or any(e < 0 for e in g):
                raise MalformedInputError(f"generator {g} is not an exponent vector of length {n}")
            out.append(g)
        if names is not None and len(names) != n:
            raise MalformedInputError("need exactly one name per variable")
        return cls(n, minimalize(out), tuple(names) if names is not None else None)

    @classmethod
    def from_supports(cls, masks: Iterable[int], n: int,
                      names: Sequence[str] | None = None) -> "MonomialIdeal":
        return cls.from_generators((from_support(m, n) for m in masks), n, names)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    @property
    def supports(self) -> tuple[int, ...]:
        return tuple(sorted(support(g) for g in self.gens))

    @property
    def max_exponent(self) -> int:
        return max((e for g in self.gens for e in g), default=0)

    def name(self, k: int) -> str:
        return self.names[k] if self.names else f"x{k}"

    def degrees(self) -> set[int]:
        return {sum(g) for g in self.gens}

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g, self) for g in self.gens) + ")"


def format_monomial(g: Monomial, ideal: MonomialIdeal) -> str:
    parts = []
    for k, e in enumerate(g):
        if e == 1:
            parts.append(ideal.name(k))
        elif e > 1:
            parts.append(f"{ideal.name(k)}^{e}")
    return "*".join(parts) if parts else "1"


def _require_squarefree(ideal: MonomialIdeal) -> None:
    if not ideal.is_squarefree:
        raise DomainError(f"{ideal} is not squarefree")


# --------------------------------------------------------------------------
# Stanley-Reisner dictionary

def stanley_reisner_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """Ideal of minimal non-faces; VOID maps to the unit ideal."""
    return MonomialIdeal.from_supports(minimal_nonfaces(delta), delta.n, delta.names)


def minimal_transversals(edges: Iterable[int]) -> tuple[int, ...]:
    """Minimal vertex sets meeting every edge (Berge's incremental method).

    An empty edge has no transversal, so the result is ``()``.
    """
    trans = [0]
    for e in minimal_sets(edges):
        grown = []
        for t in trans:
            if t & e:
                grown.append(t)
            else:
                grown.extend(t | (1 << v) for v in members(e))
        trans = list(minimal_sets(grown))
    return tuple(sorted(trans))


def complex_of_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """Complex of squarefree monomials outside ``ideal``; unit ideal gives VOID."""
    _require_squarefree(ideal)
    if ideal.n > MAX_VERTICES:
        raise MalformedInputError(f"more than {MAX_VERTICES} variables")
    full = (1 << ideal.n) - 1
    facets = maximal_sets(full & ~t for t in minimal_transversals(ideal.supports))
    return SimplicialComplex(ideal.n, facets, ideal.names)


def minimal_primes(ideal: MonomialIdeal) -> list[int]:
    """Variable supports of the minimal primes, as bit sets."""
    _require_squarefree(ideal)
    if ideal.is_unit:
        raise DomainError("the unit ideal has no primes")
    delta = complex_of_ideal(ideal)
    return sorted(delta.ground & ~f for f in delta.facets)


def alexander_dual_ideal(ideal: MonomialIdeal) -> MonomialIdeal:
    """``(m : p_m minimal prime of ideal)``.

    Degenerate inputs are accepted: the zero ideal dualizes to the unit
    ideal and the unit ideal to the zero ideal.
    """
    _require_squarefree(ideal)
    if ideal.is_unit:
        return MonomialIdeal(ideal.n, (), ideal.names)
    return MonomialIdeal.from_supports(minimal_primes(ideal), ideal.n, ideal.names)


def codim(ideal: MonomialIdeal) -> int:
    """Height of a squarefree ideal, ``n - krull_dim``."""
    delta = complex_of_ideal(ideal)
    if delta.krull_dim is None:
        raise DomainError("codimension of the unit ideal")
    return ideal.n - delta.krull_dim


# --------------------------------------------------------------------------
# polarization and radical

def polarize(ideal: MonomialIdeal) -> MonomialIdeal:
    """Squarefree polarization in ``n * N`` variables, ``N`` the largest exponent.

    Variable ``x_{k,l}`` (``1 <= l <= N``) sits at index ``k * N + l - 1`` and
    is named ``<name of x_k>_<l>``.
    """
    if ideal.is_unit:
        raise DomainError("polarization of the unit ideal")
    width = max(ideal.max_exponent, 1)
    names = [f"{ideal.name(k)}_{l}" for k in range(ideal.n) for l in range(1, width + 1)]
    gens = []
    for g in ideal.gens:
        out = [0] * (ideal.n * width)
        for k, e in enumerate(g):
            for l in range(e):
                out[k * width + l] = 1
        gens.append(out)
    return MonomialIdeal.from_generators(gens, ideal.n * width, names)


def depolarize(ideal: MonomialIdeal, n: int, width: int,
               names: Sequence[str] | None = None) -> MonomialIdeal:
    """Substitute ``x_{k,l} -> x_k`` in an ideal on ``n * width`` variables."""
    if ideal.n != n * width:
        raise DomainError("variable count does not match n * width")
    gens = []
    for g in ideal.gens:
        gens.append([sum(g[k * width:(k + 1) * width]) for k in range(n)])
    return MonomialIdeal.from_generators(gens, n, names)


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    if ideal.is_unit:
        raise DomainError("radical of the unit ideal")
    return MonomialIdeal.from_supports(ideal.supports, ideal.n, ideal.names)


def drop_unused(ideal: MonomialIdeal) -> tuple[MonomialIdeal, list[str]]:
    """Remove variables that divide no generator.

    Such variables are cone points of the Stanley-Reisner complex, which
    changes neither depth deficits nor any Serre condition.  Returns the
    smaller ideal and the dropped variable names.
    """
    used = 0
    for s in ideal.supports:
        used |= s
    keep = members(used)
    dropped = [ideal.name(k) for k in range(ideal.n) if not (used >> k) & 1]
    gens = [[g[k] for k in keep] for g in ideal.gens]
    return MonomialIdeal.from_generators(gens, len(keep), [ideal.name(k) for k in keep]), dropped


# --------------------------------------------------------------------------
# ideal file format

_TERM = re.compile(r"^([^\s*^]+)(?:\^(\d+))?$")


def parse_ideal(text: str) -> MonomialIdeal:
    """Read the ideal text format.

    A ``vars:`` header lists the variables; each further line is one
    generator written as ``x1^2*x3`` (``1`` is the unit monomial).
    ``#`` starts a comment line.
    """
    names: list[str] | None = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.lower().startswith("vars:"):
            if names is not None:
                raise MalformedInputError(f"line {lineno}: second vars: header")
            names = line.split(":", 1)[1].split()
            if len(set(names)) != len(names):
                raise MalformedInputError(f"line {lineno}: repeated variable name")
            continue
        if names is None:
            raise MalformedInputError(f"line {lineno}: generator before the vars: header")
        index = {v: k for k, v in enumerate(names)}
        g = [0] * len(names)
        if line != "1":
            for tok in line.replace(" ", "").split("*"):
                m = _TERM.match(tok)
                if not m or m.group(1) not in index:
                    raise MalformedInputError(f"line {lineno}: cannot read factor {tok!r}")
                g[index[m.group(1)]] += int(m.group(2) or 1)
        gens.append(g)
    if names is None:
        raise MalformedInputError("missing vars: header")
    return MonomialIdeal.from_generators(gens, len(names), names)


def format_ideal(ideal: MonomialIdeal) -> str:
    lines = ["vars: " + " ".join(ideal.name(k) for k in range(ideal.n))]
    lines.extend(format_monomial(g, ideal) for g in ideal.gens)
    return "\n".join(lines) + "\n"
