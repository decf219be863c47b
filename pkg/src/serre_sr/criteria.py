"""Deciders for the generalized Serre condition (S_l^j) on Stanley-Reisner rings.

K[delta] satisfies (S_l^j) when every localization has
``depth >= min(l, dim - j)``.  Localizing at monomial primes is enough, and
the localization at the prime of a face ``s`` is the Stanley-Reisner ring of
``lk s``; :func:`slj_definition` checks exactly that and is the reference
every other criterion here is compared with.

Each decider returns a :class:`SerreVerdict` carrying a witness whenever
the answer is negative.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

from .complex import (EMPTY, PROPER, VOID, SimplicialComplex, face, facet_graph, is_connected,
                      link, members)
from .homology import _betti
from .invariants import betti_of_complex, link_depths, satisfies_n
from .linalg import PrimeField, as_field
from .monomial import MonomialIdeal, alexander_dual_ideal, complex_of_ideal, stanley_reisner_ideal


class Criterion(str, enum.Enum):
    DEFINITION = "definition"
    REISNER_GEN = "reisner"
    LEMMA63_NECESSARY = "lemma63"
    DUAL_GRAPH = "dual-graph"
    ALEXANDER_DUAL = "alexander"


class InvariantViolation(RuntimeError):
    """Two formulations that must agree did not; indicates a bug."""


@dataclass(frozen=True)
class SerreVerdict:
    criterion: Criterion
    ell: int
    j: int
    p: int | None
    satisfied: bool
    applicable: bool = True
    witness: tuple | int | None = None
    note: str = ""

    def status(self) -> str:
        if not self.applicable:
            return "not applicable"
        return "satisfied" if self.satisfied else "violated"

    def to_dict(self, delta: SimplicialComplex | None = None) -> dict:
        return {
            "criterion": self.criterion.value,
            "ell": self.ell,
            "j": self.j,
            "field": self.p,
            "applicable": self.applicable,
            "satisfied": self.satisfied if self.applicable else None,
            "witness": _witness_json(self.witness, delta),
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SerreVerdict":
        w = d["witness"]
        if isinstance(w, dict):
            w = _witness_from_json(w)
        return cls(Criterion(d["criterion"]), d["ell"], d["j"], d["field"],
                   bool(d["satisfied"]) if d["applicable"] else False,
                   d["applicable"], w, d.get("note", ""))


def _witness_json(w, delta):
    if w is None:
        return None
    if isinstance(w, int):
        return {"face": members(w)}
    kind = w[0]
    if kind == "face":
        return {"face": members(w[1])}
    if kind == "homology":
        return {"face": members(w[1]), "i": w[2]}
    if kind == "tor":
        return {"gamma": w[1], "beta": w[2]}
    raise ValueError(f"unknown witness {w!r}")


def _witness_from_json(d):
    if "gamma" in d:
        return ("tor", d["gamma"], d["beta"])
    if "i" in d:
        return ("homology", face(d["face"]), d["i"])
    return ("face", face(d["face"]))


def _na(criterion, ell, j, p, note) -> SerreVerdict:
    return SerreVerdict(criterion, ell, j, p, False, False, None, note)


def _check_args(ell: int, j: int) -> None:
    if ell < 1 or j < 0:
        raise ValueError("need ell >= 1 and j >= 0")


# --------------------------------------------------------------------------

def slj_definition(delta: SimplicialComplex, ell: int, j: int,
                   field_: PrimeField | int) -> SerreVerdict:
    """depth(lk s) >= min(ell, krull_dim(lk s) - j) for every face s."""
    _check_args(ell, j)
    p = as_field(field_).p
    c = Criterion.DEFINITION
    if delta.kind == VOID:
        return _na(c, ell, j, p, "void complex")
    if ell == 1 or j >= delta.krull_dim:
        return SerreVerdict(c, ell, j, p, True, note="holds without homology")
    depths = link_depths(delta, p)
    for s in delta.faces:
        dim_lk = max(f.bit_count() for f in delta.facets if s & ~f == 0) - s.bit_count()
        if depths[s] < min(ell, dim_lk - j):
            return SerreVerdict(c, ell, j, p, False, witness=("face", s))
    return SerreVerdict(c, ell, j, p, True)


def _homology_condition(delta: SimplicialComplex, ell: int, j: int, p: int,
                        top_of) -> tuple | None:
    """First (face, i) with H~_i(lk F) != 0, -1 <= i <= ell-2, |F| <= top_of(F)-i-j-2."""
    for s in delta.faces:
        budget = top_of(s) - j - 2 - s.bit_count()  # i may go up to this
        hi = min(ell - 2, budget)
        if hi < -1:
            continue
        b = _betti(link(delta, s).facets, p)
        for i in range(-1, hi + 1):
            if i + 1 < len(b) and b[i + 1]:
                return ("homology", s, i)
    return None


def slj_reisner(delta: SimplicialComplex, ell: int, j: int,
                field_: PrimeField | int) -> SerreVerdict:
    """Link-homology vanishing with the global dimension; pure complexes only."""
    _check_args(ell, j)
    p = as_field(field_).p
    c = Criterion.REISNER_GEN
    if delta.kind == VOID:
        return _na(c, ell, j, p, "void complex")
    if not delta.is_pure():
        return _na(c, ell, j, p, "requires pure complex")
    d = delta.krull_dim
    w = _homology_condition(delta, ell, j, p, lambda s: d)
    return SerreVerdict(c, ell, j, p, w is None, witness=w)


def slj_lemma63(delta: SimplicialComplex, ell: int, j: int,
                field_: PrimeField | int) -> SerreVerdict:
    """Link-homology vanishing with the size of the largest facet through each face.

    Necessary for (S_l^j) on any complex: ``satisfied=False`` certifies
    failure, while ``True`` settles nothing unless the complex is pure.
    """
    _check_args(ell, j)
    p = as_field(field_).p
    c = Criterion.LEMMA63_NECESSARY
    if delta.kind == VOID:
        return _na(c, ell, j, p, "void complex")

    def top_of(s):
        return max(f.bit_count() for f in delta.facets if s & ~f == 0)

    w = _homology_condition(delta, ell, j, p, top_of)
    note = "" if delta.is_pure() else "necessary condition only (non-pure)"
    return SerreVerdict(c, ell, j, p, w is None, witness=w, note=note)


def terai_condition(delta: SimplicialComplex, ell: int,
                    field_: PrimeField | int) -> tuple[bool, tuple | None]:
    """(S_l) test through link homology with the global dimension, any purity."""
    p = as_field(field_).p
    d = delta.krull_dim
    w = _homology_condition(delta, ell, 0, p, lambda s: d)
    return w is None, w


def _connected_link_condition(delta: SimplicialComplex, j: int) -> int | None:
    """First face whose link has dimension >= 1 + j and is disconnected."""
    for s in delta.faces:
        lk = link(delta, s)
        if lk.dim >= 1 + j and not is_connected(lk):
            return s
    return None


def s2j_dual_graph(delta: SimplicialComplex, j: int) -> SerreVerdict:
    """(S_2^j) through connectivity; independent of the field.

    Evaluates both the (j+1)-local connectivity of the facet graphs and the
    connectivity of links of dimension >= 1 + j, and insists they agree.
    """
    _check_args(2, j)
    c = Criterion.DUAL_GRAPH
    if delta.kind == VOID:
        return _na(c, 2, j, None, "void complex")
    if not delta.is_pure():
        return _na(c, 2, j, None, "requires pure complex")
    bad_link = _connected_link_condition(delta, j)
    bad_graph = None
    for s in delta.faces:
        if not facet_graph(link(delta, s), j + 1).is_connected():
            bad_graph = s
            break
    if (bad_link is None) != (bad_graph is None):
        raise InvariantViolation(
            f"{delta!r}: link connectivity gives {bad_link}, facet graphs give {bad_graph} at j={j}")
    w = None if bad_link is None else ("face", bad_link)
    return SerreVerdict(c, 2, j, None, bad_link is None, witness=w)


def slj_alexander(delta: SimplicialComplex, ell: int, j: int,
                  field_: PrimeField | int) -> SerreVerdict:
    """Betti-number vanishing for the Alexander dual ideal; pure complexes, ell >= 2."""
    _check_args(ell, j)
    p = as_field(field_).p
    c = Criterion.ALEXANDER_DUAL
    if delta.kind == VOID:
        return _na(c, ell, j, p, "void complex")
    if not delta.is_pure():
        return _na(c, ell, j, p, "requires pure complex")
    if ell < 2:
        return _na(c, ell, j, p, "requires ell >= 2")
    ideal = stanley_reisner_ideal(delta)
    if ideal.is_zero:
        return SerreVerdict(c, ell, j, p, True, note="zero ideal (full simplex)")
    dual = alexander_dual_ideal(ideal)
    codim = delta.n - delta.krull_dim
    ok, w = satisfies_n(dual, codim, ell, j, p, table=_dual_betti(dual, p))
    return SerreVerdict(c, ell, j, p, ok, witness=None if ok else ("tor",) + w)


def _dual_betti(dual: MonomialIdeal, p: int):
    return betti_of_complex(complex_of_ideal(dual), p)


# --------------------------------------------------------------------------

ALL_CRITERIA = (Criterion.DEFINITION, Criterion.REISNER_GEN, Criterion.LEMMA63_NECESSARY,
                Criterion.DUAL_GRAPH, Criterion.ALEXANDER_DUAL)


def evaluate(delta: SimplicialComplex, criterion: Criterion, ell: int, j: int,
             field_: PrimeField | int) -> SerreVerdict:
    if criterion is Criterion.DEFINITION:
        return slj_definition(delta, ell, j, field_)
    if criterion is Criterion.REISNER_GEN:
        return slj_reisner(delta, ell, j, field_)
    if criterion is Criterion.LEMMA63_NECESSARY:
        return slj_lemma63(delta, ell, j, field_)
    if criterion is Criterion.ALEXANDER_DUAL:
        return slj_alexander(delta, ell, j, field_)
    if criterion is Criterion.DUAL_GRAPH:
        if ell != 2:
            return _na(criterion, ell, j, None, "only decides ell = 2")
        return s2j_dual_graph(delta, j)
    raise ValueError(criterion)


def conflicts(verdicts: Iterable[SerreVerdict]) -> list[SerreVerdict]:
    """Verdicts contradicting the definitional one for the same cell.

    The necessary-only criterion conflicts only when the definition holds
    and it fails.
    """
    verdicts = list(verdicts)
    truth = {(v.ell, v.j): v.satisfied for v in verdicts
             if v.criterion is Criterion.DEFINITION and v.applicable}
    out = []
    for v in verdicts:
        t = truth.get((v.ell, v.j))
        if t is None or not v.applicable or v.criterion is Criterion.DEFINITION:
            continue
        if v.criterion is Criterion.LEMMA63_NECESSARY:
            if t and not v.satisfied:
                out.append(v)
        elif v.satisfied != t:
            out.append(v)
    return out


@dataclass
class SerreProfile:
    """Satisfaction grid over ``1 <= ell <= d`` and ``0 <= j <= d``."""

    complex_id: str
    p: int
    krull_dim: int
    grid: dict[tuple[int, int], bool] = field(default_factory=dict)
    agreeing: dict[tuple[int, int], list[str]] = field(default_factory=dict)
    verdicts: list[SerreVerdict] = field(default_factory=list)
    disagreements: list[SerreVerdict] = field(default_factory=list)

    def monotonicity_errors(self) -> list[str]:
        errs = []
        for (ell, j), ok in self.grid.items():
            if ok and self.grid.get((ell, j + 1)) is False:
                errs.append(f"(S_{ell}^{j}) holds but (S_{ell}^{j + 1}) fails")
            if ok and self.grid.get((ell - 1, j)) is False:
                errs.append(f"(S_{ell}^{j}) holds but (S_{ell - 1}^{j}) fails")
            if ell == 1 and not ok:
                errs.append(f"(S_1^{j}) fails")
        return errs

    def format_grid(self) -> str:
        d = self.krull_dim
        head = "ell\\j " + " ".join(f"{j:>2}" for j in range(d + 1))
        lines = [head]
        for ell in range(1, d + 1):
            cells = " ".join(" +" if self.grid[(ell, j)] else " -" for j in range(d + 1))
            lines.append(f"{ell:>5} {cells}")
        return "\n".join(lines) + "\n"


def serre_profile(delta: SimplicialComplex, field_: PrimeField | int,
                  criteria: Iterable[Criterion] = ALL_CRITERIA,
                  complex_id: str = "") -> SerreProfile:
    if delta.kind not in (PROPER, EMPTY):
        raise ValueError("profile needs a non-void complex")
    p = as_field(field_).p
    d = delta.krull_dim
    criteria = [Criterion(c) for c in criteria]
    prof = SerreProfile(complex_id or repr(delta), p, d)
    for ell in range(1, d + 1):
        for j in range(0, d + 1):
            cell = [slj_definition(delta, ell, j, p)]
            cell += [evaluate(delta, c, ell, j, p) for c in criteria if c is not Criterion.DEFINITION]
            prof.grid[(ell, j)] = cell[0].satisfied
            bad = conflicts(cell)
            prof.disagreements.extend(bad)
            prof.agreeing[(ell, j)] = [v.criterion.value for v in cell
                                       if v.applicable and v not in bad]
            prof.verdicts.extend(cell)
    return prof


def min_j(delta: SimplicialComplex, ell: int, field_: PrimeField | int) -> int:
    """Least j with (S_ell^j); at most the Krull dimension."""
    if delta.kind == VOID:
        raise ValueError("void complex")
    for j in range(0, delta.krull_dim + 1):
        if slj_definition(delta, ell, j, field_).satisfied:
            return j
    raise InvariantViolation("(S_l^d) failed, which cannot happen")

