"""Instance generators and the property harness.

Every property is a function ``prop(delta, params) -> None | str | SKIP``:
``None`` means the instance passed, a string describes a failure, and
``SKIP`` means the instance does not meet the property's hypotheses.
Properties live in :data:`PROPERTIES` so suites can refer to them by name
and worker processes can look them up.
"""
from __future__ import annotations

import configparser
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .complex import (PROPER, SimplicialComplex, face, format_facets, from_facets, skeleton)
from .criteria import (InvariantViolation, s2j_dual_graph, serre_profile, slj_alexander,
                       slj_definition, slj_lemma63, slj_reisner, terai_condition)
from .homology import boundary_matrix, euler_characteristic, reduced_betti_all
from .invariants import (betti_of_complex, depth, depth_via_skeleton, graded_betti,
                         has_linear_resolution, is_cm, satisfies_n)
from .linalg import CROSS_CHECK_PRIME, PrimeField, as_field
from .monomial import (MonomialIdeal, alexander_dual_ideal, complex_of_ideal, drop_unused,
                       polarize, radical, stanley_reisner_ideal)

EXHAUSTIVE = "exhaustive"
RANDOM = "random"

EXHAUSTIVE_MAX_N = 8
RANDOM_MAX_N = 12
MAX_FAMILY_BITS = 20

SKIP = "skip"


class CapError(ValueError):
    """A corpus request exceeds the generation caps."""


class VacuousSuiteError(ValueError):
    """A suite was configured so that it cannot check anything."""


# --------------------------------------------------------------------------
# corpora

@dataclass(frozen=True)
class CorpusSpec:
    """Which complexes to generate.

    ``facet_dim`` fixes the facet dimension (facets of size ``facet_dim + 1``);
    for RANDOM corpora ``None`` draws a size per instance.  With ``pure``
    false, RANDOM draws facets of mixed sizes.  ``n`` is the ground set size
    for EXHAUSTIVE and the largest ground set for RANDOM.
    """

    n: int
    facet_dim: int | None = None
    mode: str = EXHAUSTIVE
    sample_count: int = 0
    seed: int = 0
    pure: bool = True
    min_n: int = 2

    def validate(self) -> None:
        if self.mode == EXHAUSTIVE:
            if self.facet_dim is None or not self.pure:
                raise CapError("exhaustive corpora need a fixed facet dimension")
            k = self.facet_dim + 1
            if not 1 <= k <= self.n <= EXHAUSTIVE_MAX_N:
                raise CapError(f"exhaustive enumeration needs 1 <= k <= n <= {EXHAUSTIVE_MAX_N} "
                               f"(got n={self.n}, k={k}); use mode=random for larger n")
            if comb(self.n, k) > MAX_FAMILY_BITS:
                raise CapError(f"C({self.n},{k}) = {comb(self.n, k)} candidate facets gives more "
                               f"than 2^{MAX_FAMILY_BITS} facet sets; use mode=random")
        elif self.mode == RANDOM:
            if not 1 <= self.n <= RANDOM_MAX_N:
                raise CapError(f"random corpora need 1 <= n <= {RANDOM_MAX_N}")
            if self.sample_count < 1:
                raise CapError("random corpora need sample_count >= 1")
        else:
            raise CapError(f"unknown mode {self.mode!r}")

    def describe(self) -> str:
        k = "mixed" if self.facet_dim is None else self.facet_dim + 1
        if self.mode == EXHAUSTIVE:
            return f"exhaustive pure n={self.n} k={k}"
        purity = "pure" if self.pure else "any"
        return f"random {purity} n<={self.n} k={k} samples={self.sample_count} seed={self.seed}"


def _instance_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"{seed}/{index}")


def enumerate_pure(n: int, k: int, mode: str = EXHAUSTIVE, sample_count: int = 0,
                   seed: int = 0) -> Iterator[SimplicialComplex]:
    """Pure complexes whose facets are ``k``-subsets of ``range(n)``.

    EXHAUSTIVE yields every nonempty family once; RANDOM keeps each
    ``k``-subset with probability 1/2 (redrawing empty families).
    """
    CorpusSpec(n, k - 1, mode, sample_count, seed).validate()
    cands = [face(c) for c in combinations(range(n), k)]
    if mode == EXHAUSTIVE:
        for bits in range(1, 1 << len(cands)):
            yield from_facets([c for t, c in enumerate(cands) if bits >> t & 1], n)
        return
    for index in range(sample_count):
        rng = _instance_rng(seed, index)
        while True:
            chosen = [c for c in cands if rng.random() < 0.5]
            if chosen:
                break
        yield from_facets(chosen, n)


def random_pure(n_max: int, rng: random.Random, min_n: int = 2) -> SimplicialComplex:
    n = rng.randint(min_n, n_max)
    k = rng.randint(1, n)
    cands = [face(c) for c in combinations(range(n), k)]
    while True:
        chosen = [c for c in cands if rng.random() < 0.5]
        if chosen:
            return from_facets(chosen, n)


def random_complex(n_max: int, rng: random.Random, min_n: int = 2) -> SimplicialComplex:
    """A few facets of random sizes below ``n``; often non-pure.

    A facet on all ``n`` vertices would swallow the others, so sizes stop
    at ``n - 1``.
    """
    n = rng.randint(max(min_n, 2), n_max)
    facets = []
    for _ in range(rng.randint(1, 4)):
        size = rng.randint(1, n - 1)
        facets.append(face(rng.sample(range(n), size)))
    return from_facets(facets, n)


def generate(corpus: CorpusSpec) -> Iterator[SimplicialComplex]:
    corpus.validate()
    if corpus.mode == EXHAUSTIVE:
        yield from enumerate_pure(corpus.n, corpus.facet_dim + 1, EXHAUSTIVE)
        return
    for index in range(corpus.sample_count):
        rng = _instance_rng(corpus.seed, index)
        if not corpus.pure:
            yield random_complex(corpus.n, rng, corpus.min_n)
        elif corpus.facet_dim is None:
            yield random_pure(corpus.n, rng, corpus.min_n)
        else:
            k = corpus.facet_dim + 1
            cands = [face(c) for c in combinations(range(corpus.n), k)]
            while True:
                chosen = [c for c in cands if rng.random() < 0.5]
                if chosen:
                    break
            yield from_facets(chosen, corpus.n)


def random_monomial_ideal(n: int, max_deg: int, gen_count: int, seed: int) -> MonomialIdeal:
    """Minimalized random ideal with exponents uniform in ``0..max_deg``.

    Generators equal to 1 are redrawn, so the result is neither zero nor
    the unit ideal.
    """
    if n < 1 or max_deg < 1 or gen_count < 1:
        raise CapError("need n, max_deg, gen_count >= 1")
    if n * max_deg > 24:
        raise CapError("n * max_deg must stay <= 24 to keep the polarization small")
    rng = random.Random(f"ideal/{n}/{max_deg}/{gen_count}/{seed}")
    gens = []
    while len(gens) < gen_count:
        g = [rng.randint(0, max_deg) for _ in range(n)]
        if any(g):
            gens.append(g)
    return MonomialIdeal.from_generators(gens, n)


# --------------------------------------------------------------------------
# single-instance checks with hypotheses

@dataclass
class BoundCheck:
    clause: int
    j: int
    applicable: bool
    value: int | None = None
    bound: int | None = None

    @property
    def slack(self) -> int | None:
        return None if self.value is None else self.bound - self.value

    @property
    def ok(self) -> bool:
        return not self.applicable or self.value <= self.bound


def _floor_bound(n: int, shift: int, j: int, c: int) -> int:
    return n - shift - (n - 1 - shift - j) // c


def check_pd_bound(delta: SimplicialComplex, j: int, field_: PrimeField | int) -> list[BoundCheck]:
    """Projective-dimension bounds for (S_2^j) and (S_3^j) pure complexes.

    Clause 1: (S_2^j) and dim >= 1 + j give pd <= n - 1 - floor((n - 2 - j) / c).
    Clause 2: (S_3^j) and dim >= 2 + j give pd <= n - 2 - floor((n - 3 - j) / c).
    """
    out = []
    ideal = stanley_reisner_ideal(delta)
    usable = delta.kind == PROPER and delta.is_pure() and not ideal.is_zero
    n, d = delta.n, delta.krull_dim
    table = None
    for clause, ell in ((1, 2), (2, 3)):
        if not usable or d < clause + j or not slj_definition(delta, ell, j, field_).satisfied:
            out.append(BoundCheck(clause, j, False))
            continue
        if table is None:
            table = betti_of_complex(delta, field_)
        c = n - d
        out.append(BoundCheck(clause, j, True, table.pd_quotient(), _floor_bound(n, clause, j, c)))
    return out


def check_reg_bound(idual: MonomialIdeal, j: int, field_: PrimeField | int,
                    literal: bool = False) -> list[BoundCheck]:
    """Regularity bounds for an equigenerated squarefree ideal of degree c.

    Clause 1 needs (N_{c,2}^j), clause 2 needs (N_{c,3}^j).  The codimension
    side condition is ``c <= n - 1 - j`` (resp. ``n - 2 - j``), i.e. the dual
    ring has dimension at least ``1 + j`` (resp. ``2 + j``); pass
    ``literal=True`` for the weaker ``c <= n - 1`` (resp. ``n - 2``), which
    admits counterexamples once ``j > 0``.
    """
    out = []
    degs = idual.degrees()
    usable = idual.is_squarefree and idual.is_proper and not idual.is_zero and len(degs) == 1
    table = graded_betti(idual, field_) if usable else None
    n = idual.n
    for clause, ell in ((1, 2), (2, 3)):
        if not usable:
            out.append(BoundCheck(clause, j, False))
            continue
        (c,) = degs
        limit = n - clause - (0 if literal else j)
        if c > limit or not satisfies_n(idual, c, ell, j, field_, table)[0]:
            out.append(BoundCheck(clause, j, False))
            continue
        out.append(BoundCheck(clause, j, True, table.reg(), _floor_bound(n, clause, j, c)))
    return out


@dataclass
class SkeletonCheck:
    ell: int
    j: int
    i: int
    applicable: bool
    general_ok: bool = True
    pure_ok: bool | None = None
    pure_exponent: int | None = None

    @property
    def ok(self) -> bool:
        return self.general_ok and self.pure_ok is not False


def check_skeleton_theorems(delta: SimplicialComplex, ell: int, j: int, i: int,
                            field_: PrimeField | int) -> SkeletonCheck:
    """If (S_ell^j) holds and 2 <= ell <= i+1, the i-skeleton keeps (S_ell^j);
    for pure complexes it is pure with (S_ell^{max(0, j+i+1-d)})."""
    if not 2 <= ell <= i + 1 or not slj_definition(delta, ell, j, field_).satisfied:
        return SkeletonCheck(ell, j, i, False)
    sk = skeleton(delta, i)
    res = SkeletonCheck(ell, j, i, True)
    res.general_ok = slj_definition(sk, ell, j, field_).satisfied
    if delta.is_pure():
        e = max(0, j + i + 1 - delta.krull_dim)
        res.pure_exponent = e
        res.pure_ok = sk.is_pure() and slj_definition(sk, ell, e, field_).satisfied
    return res


@dataclass
class RadicalCheck:
    ell: int
    j: int
    polarization_holds: bool
    radical_holds: bool
    dropped: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.radical_holds or not self.polarization_holds


def check_radical_transfer(ideal: MonomialIdeal, ell: int, j: int,
                           field_: PrimeField | int) -> RadicalCheck:
    """(S_ell^j) of the polarization must pass to the radical."""
    pol, dropped = drop_unused(polarize(ideal))
    rad, _ = drop_unused(radical(ideal))
    a = slj_definition(complex_of_ideal(pol), ell, j, field_).satisfied
    b = slj_definition(complex_of_ideal(rad), ell, j, field_).satisfied
    return RadicalCheck(ell, j, a, b, dropped)


# --------------------------------------------------------------------------
# property registry

@dataclass(frozen=True)
class Params:
    p: int = 2
    ells: tuple[int, ...] = (2, 3, 4)
    js: tuple[int, ...] = (0, 1, 2, 3)
    cross_p: int | None = None


def _pure_only(delta):
    return delta.kind != PROPER or not delta.is_pure()


def prop_reisner(delta, prm: Params):
    if _pure_only(delta):
        return SKIP
    for ell in prm.ells:
        for j in prm.js:
            a = slj_reisner(delta, ell, j, prm.p).satisfied
            b = slj_definition(delta, ell, j, prm.p).satisfied
            if a != b:
                return f"ell={ell} j={j}: reisner={a} definition={b}"
    return None


def prop_dual_graph(delta, prm: Params):
    if _pure_only(delta):
        return SKIP
    for j in prm.js:
        try:
            a = s2j_dual_graph(delta, j).satisfied
        except InvariantViolation as exc:
            return f"j={j}: {exc}"
        b = slj_definition(delta, 2, j, prm.p).satisfied
        if a != b:
            return f"j={j}: dual-graph={a} definition={b}"
        if prm.cross_p is not None:
            c = slj_definition(delta, 2, j, prm.cross_p).satisfied
            if c != b:
                return f"j={j}: GF({prm.p}) gives {b}, GF({prm.cross_p}) gives {c}"
    return None


def prop_alexander(delta, prm: Params):
    if _pure_only(delta):
        return SKIP
    for ell in prm.ells:
        for j in prm.js:
            a = slj_alexander(delta, ell, j, prm.p).satisfied
            b = slj_definition(delta, ell, j, prm.p).satisfied
            if a != b:
                return f"ell={ell} j={j}: alexander={a} definition={b}"
    return None


def prop_necessity(delta, prm: Params):
    if delta.kind != PROPER:
        return SKIP
    for ell in prm.ells:
        for j in prm.js:
            if slj_definition(delta, ell, j, prm.p).satisfied and \
                    not slj_lemma63(delta, ell, j, prm.p).satisfied:
                return f"ell={ell} j={j}: definition holds, necessary condition fails"
    return None


def prop_terai(delta, prm: Params):
    if delta.kind != PROPER:
        return SKIP
    for ell in prm.ells:
        a = slj_definition(delta, ell, 0, prm.p).satisfied
        b = terai_condition(delta, ell, prm.p)[0]
        if a != b:
            return f"ell={ell}: definition={a} terai={b}"
    return None


def prop_reisner_cm(delta, prm: Params):
    if _pure_only(delta):
        return SKIP
    d = delta.krull_dim
    a = slj_definition(delta, d, 0, prm.p).satisfied
    b = is_cm(delta, prm.p)[0]
    return None if a == b else f"(S_{d}) gives {a}, Reisner gives {b}"


def prop_pd_bound(delta, prm: Params):
    if _pure_only(delta) or stanley_reisner_ideal(delta).is_zero:
        return SKIP
    seen = False
    for j in prm.js:
        for chk in check_pd_bound(delta, j, prm.p):
            seen |= chk.applicable
            if not chk.ok:
                return f"clause {chk.clause} j={j}: pd={chk.value} > bound {chk.bound}"
    return None if seen else SKIP


def prop_reg_bound(delta, prm: Params):
    if _pure_only(delta):
        return SKIP
    ideal = stanley_reisner_ideal(delta)
    if ideal.is_zero:
        return SKIP
    dual = alexander_dual_ideal(ideal)
    seen = False
    for j in prm.js:
        for chk in check_reg_bound(dual, j, prm.p):
            seen |= chk.applicable
            if not chk.ok:
                return f"clause {chk.clause} j={j}: reg={chk.value} > bound {chk.bound}"
    return None if seen else SKIP


def prop_skeleton(delta, prm: Params):
    if delta.kind != PROPER:
        return SKIP
    seen = False
    for ell in prm.ells:
        for j in prm.js:
            for i in range(1, delta.dim + 1):
                chk = check_skeleton_theorems(delta, ell, j, i, prm.p)
                seen |= chk.applicable
                if not chk.ok:
                    return (f"ell={ell} j={j} i={i}: general={chk.general_ok} "
                            f"pure(exponent {chk.pure_exponent})={chk.pure_ok}")
    return None if seen else SKIP


def prop_auslander_buchsbaum(delta, prm: Params):
    if delta.kind != PROPER:
        return SKIP
    pdq = betti_of_complex(delta, prm.p).pd_quotient() or 0
    dp = depth(delta, prm.p)
    return None if pdq + dp == delta.n else f"pd {pdq} + depth {dp} != n {delta.n}"


def prop_depth_skeleton(delta, prm: Params):
    if delta.kind != PROPER:
        return SKIP
    a, b = depth(delta, prm.p), depth_via_skeleton(delta, prm.p)
    return None if a == b else f"depth {a} != skeleton depth {b}"


def prop_eagon_reiner(delta, prm: Params):
    if delta.kind != PROPER:
        return SKIP
    ideal = stanley_reisner_ideal(delta)
    if ideal.is_zero:
        return SKIP
    dual = alexander_dual_ideal(ideal)
    linear = has_linear_resolution(graded_betti(dual, prm.p))
    cm = is_cm(delta, prm.p)[0]
    return None if linear == cm else f"CM={cm} but dual linear resolution={linear}"


def prop_euler(delta, prm: Params):
    if delta.kind != PROPER:
        return SKIP
    betti = reduced_betti_all(delta, prm.p)
    alt = sum((-1) ** (i % 2) * x for i, x in betti.items())
    chi = euler_characteristic(delta)
    return None if alt == chi else f"homology alternating sum {alt} != f-vector sum {chi}"


def prop_boundary_squared(delta, prm: Params):
    if delta.kind != PROPER:
        return SKIP
    for i in range(1, delta.dim + 1):
        lo, hi = boundary_matrix(delta, i - 1, prm.p), boundary_matrix(delta, i, prm.p)
        if not lo.matmul(hi, prm.p).is_zero():
            return f"boundary composite nonzero at i={i}"
    return None


def prop_profile(delta, prm: Params):
    if delta.kind != PROPER:
        return SKIP
    prof = serre_profile(delta, prm.p)
    errs = prof.monotonicity_errors()
    if prof.disagreements:
        v = prof.disagreements[0]
        return f"{v.criterion.value} disagrees at ell={v.ell} j={v.j}"
    return errs[0] if errs else None


PROPERTIES: dict[str, Callable] = {
    "reisner-equivalence": prop_reisner,
    "dual-graph-equivalence": prop_dual_graph,
    "alexander-equivalence": prop_alexander,
    "face-size-necessity": prop_necessity,
    "terai-degeneration": prop_terai,
    "reisner-cm-degeneration": prop_reisner_cm,
    "pd-bound": prop_pd_bound,
    "reg-bound": prop_reg_bound,
    "skeleton-theorems": prop_skeleton,
    "auslander-buchsbaum": prop_auslander_buchsbaum,
    "depth-via-skeleton": prop_depth_skeleton,
    "eagon-reiner": prop_eagon_reiner,
    "euler-poincare": prop_euler,
    "boundary-squared-zero": prop_boundary_squared,
    "profile-consistency": prop_profile,
}

SUITES: dict[str, tuple[str, ...]] = {
    "equivalence": ("reisner-equivalence", "dual-graph-equivalence", "alexander-equivalence"),
    "necessity": ("face-size-necessity",),
    "degeneration": ("terai-degeneration", "reisner-cm-degeneration"),
    "bounds": ("pd-bound", "reg-bound"),
    "skeleton": ("skeleton-theorems",),
    "classical": ("auslander-buchsbaum", "depth-via-skeleton", "eagon-reiner",
                  "euler-poincare", "boundary-squared-zero"),
    "profile": ("profile-consistency",),
}


# --------------------------------------------------------------------------
# reports

@dataclass
class PropertyReport:
    property_id: str
    checked: int = 0
    skipped: int = 0
    failures: list[dict] = field(default_factory=list)
    runtime: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures and self.checked > 0

    def to_dict(self) -> dict:
        return {"property": self.property_id, "checked": self.checked, "skipped": self.skipped,
                "failures": self.failures, "passed": self.passed,
                "runtime": round(self.runtime, 3)}

    @classmethod
    def from_dict(cls, d: dict) -> "PropertyReport":
        return cls(d["property"], d["checked"], d["skipped"], list(d["failures"]), d["runtime"])

    def line(self) -> str:
        status = "PASS" if self.passed else ("VACUOUS" if not self.failures else "FAIL")
        return (f"{status:7} {self.property_id}: {self.checked} checked, "
                f"{self.skipped} skipped, {len(self.failures)} failures")


@dataclass
class SuiteReport:
    label: str
    properties: dict[str, PropertyReport] = field(default_factory=dict)
    instances: int = 0

    @property
    def passed(self) -> bool:
        return bool(self.properties) and all(r.passed for r in self.properties.values())

    def merge(self, other: "SuiteReport") -> None:
        self.instances += other.instances
        for k, r in other.properties.items():
            mine = self.properties.setdefault(k, PropertyReport(k))
            mine.checked += r.checked
            mine.skipped += r.skipped
            mine.failures.extend(r.failures)
            mine.runtime += r.runtime
            mine.failures.sort(key=lambda f: (f["complex"], f["detail"]))

    def to_dict(self) -> dict:
        return {"label": self.label, "instances": self.instances, "passed": self.passed,
                "properties": [r.to_dict() for r in self.properties.values()]}

    def to_text(self) -> str:
        lines = [f"# {self.label} ({self.instances} instances)"]
        lines += [r.line() for r in self.properties.values()]
        for r in self.properties.values():
            for f in r.failures:
                lines.append(f"  {r.property_id}: {f['detail']}\n" +
                             "".join("    " + ln + "\n" for ln in f["complex"].splitlines()))
        return "\n".join(lines) + "\n"


def minimize(delta: SimplicialComplex, fails: Callable[[SimplicialComplex], bool]) -> SimplicialComplex:
    """Greedy facet removal that keeps ``fails`` true."""
    cur = delta
    changed = True
    while changed and len(cur.facets) > 1:
        changed = False
        for f in cur.facets:
            smaller = from_facets([g for g in cur.facets if g != f], cur.n)
            try:
                still = fails(smaller)
            except Exception:
                still = False
            if still:
                cur, changed = smaller, True
                break
    return cur


def _failure_record(delta, pid, detail, prm) -> dict:
    prop = PROPERTIES[pid]

    def fails(d):
        r = prop(d, prm)
        return r is not None and r != SKIP

    small = minimize(delta, fails)
    return {"complex": format_facets(delta), "minimized": format_facets(small), "detail": detail}


def _check_one(args) -> list[tuple[str, object, float]]:
    pids, prm, n, facets = args
    delta = SimplicialComplex(n, facets)
    out = []
    for pid in pids:
        t0 = time.perf_counter()
        try:
            res = PROPERTIES[pid](delta, prm)
        except InvariantViolation as exc:
            res = f"invariant violation: {exc}"
        if res is not None and res != SKIP:
            res = _failure_record(delta, pid, res, prm)
        out.append((pid, res, time.perf_counter() - t0))
    return out


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("SERRE_THREADS", "1")))
    except ValueError:
        return 1


def run_properties(complexes: Iterable[SimplicialComplex], property_ids: Iterable[str],
                   params: Params, label: str = "", workers: int | None = None) -> SuiteReport:
    pids = tuple(property_ids)
    unknown = [p for p in pids if p not in PROPERTIES]
    if unknown:
        raise KeyError(f"unknown properties {unknown}")
    if not pids:
        raise VacuousSuiteError("no properties selected")
    report = SuiteReport(label, {pid: PropertyReport(pid) for pid in pids})
    jobs = [(pids, params, d.n, d.facets) for d in complexes]
    report.instances = len(jobs)
    workers = workers or worker_count()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_check_one, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
    else:
        results = [_check_one(job) for job in jobs]
    for rows in results:
        for pid, res, dt in rows:
            rep = report.properties[pid]
            rep.runtime += dt
            if res == SKIP:
                rep.skipped += 1
            else:
                rep.checked += 1
                if res is not None:
                    rep.failures.append(res)
    for rep in report.properties.values():
        rep.failures.sort(key=lambda f: (f["complex"], f["detail"]))
    return report


def run_equivalence_suite(corpus: CorpusSpec, field_: PrimeField | int = 2,
                          ells: Iterable[int] = (2, 3, 4), js: Iterable[int] = (0, 1, 2, 3),
                          cross_field: PrimeField | int | None = CROSS_CHECK_PRIME,
                          suites: Iterable[str] = ("equivalence", "necessity"),
                          workers: int | None = None) -> SuiteReport:
    """Run the named suites over a corpus; see :data:`SUITES`."""
    ells, js = tuple(ells), tuple(js)
    if not ells or not js:
        raise VacuousSuiteError("empty (ell, j) grid")
    prm = Params(as_field(field_).p, ells, js,
                 None if cross_field is None else as_field(cross_field).p)
    pids = []
    for s in suites:
        if s not in SUITES:
            raise KeyError(f"unknown suite {s!r}")
        pids.extend(p for p in SUITES[s] if p not in pids)
    return run_properties(generate(corpus), pids, prm, corpus.describe(), workers)


def run_radical_suite(count: int, n_max: int = 4, max_deg: int = 3, seed: int = 0,
                      ells: Iterable[int] = (2, 3), js: Iterable[int] = (0, 1),
                      field_: PrimeField | int = 2, max_gens: int = 4) -> SuiteReport:
    """Polarization-to-radical transfer over random monomial ideals."""
    ells, js = tuple(ells), tuple(js)
    if not ells or not js or count < 1:
        raise VacuousSuiteError("empty radical suite")
    p = as_field(field_).p
    rep = PropertyReport("radical-transfer")
    t0 = time.perf_counter()
    rng = random.Random(f"radical/{seed}")
    for index in range(count):
        n = rng.randint(1, n_max)
        deg = rng.randint(1, max_deg)
        gens = rng.randint(1, max_gens)
        ideal = random_monomial_ideal(n, deg, gens, seed * 100003 + index)
        for ell in ells:
            for j in js:
                chk = check_radical_transfer(ideal, ell, j, p)
                rep.checked += 1
                if not chk.ok:
                    rep.failures.append({"complex": str(ideal), "minimized": str(ideal),
                                         "detail": f"ell={ell} j={j}: polarization satisfies, "
                                                   f"radical does not"})
    rep.runtime = time.perf_counter() - t0
    out = SuiteReport(f"radical transfer: {count} ideals n<={n_max} deg<={max_deg} seed={seed}",
                      {rep.property_id: rep})
    out.instances = count
    return out


# --------------------------------------------------------------------------
# configuration files

def _ints(text: str) -> tuple[int, ...]:
    out = []
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return tuple(out)


def load_config(text: str) -> list[dict]:
    """Parse a suite configuration.

    ``key = value`` lines; each ``[section]`` is one run and keys outside a
    section apply to all runs.  A file without sections is a single run.
    """
    if not any(line.strip().startswith("[") for line in text.splitlines()):
        text = "[run]\n" + text
    cp = configparser.ConfigParser(default_section="defaults", inline_comment_prefixes=("#",))
    lines = text.splitlines()
    head = []
    while lines and not lines[0].strip().startswith("["):
        head.append(lines.pop(0))
    cp.read_string("[defaults]\n" + "\n".join(head) + "\n" + "\n".join(lines))
    runs = []
    for name in cp.sections():
        sec = dict(cp[name])
        sec["name"] = name
        runs.append(sec)
    if not runs:
        raise VacuousSuiteError("configuration defines no runs")
    return runs


def run_config_section(sec: dict, workers: int | None = None) -> SuiteReport:
    field_ = int(sec.get("field", 2))
    ells = _ints(sec.get("ells", "2,3,4"))
    js = _ints(sec.get("js", "0,1,2,3"))
    suites = tuple(s.strip() for s in sec.get("suites", "equivalence").split(",") if s.strip())
    if "radical" in suites:
        rep = run_radical_suite(int(sec.get("samples", 300)), int(sec.get("n", 4)),
                                int(sec.get("max_deg", 3)), int(sec.get("seed", 0)),
                                ells, js, field_, int(sec.get("max_gens", 4)))
        rep.label = f"[{sec['name']}] " + rep.label
        return rep
    mode = sec.get("mode", EXHAUSTIVE).strip().lower()
    k = sec.get("k")
    corpus = CorpusSpec(
        n=int(sec["n"]),
        facet_dim=None if k in (None, "", "any") else int(k) - 1,
        mode=mode,
        sample_count=int(sec.get("samples", 0)),
        seed=int(sec.get("seed", 0)),
        pure=sec.get("pure", "yes").strip().lower() in ("1", "yes", "true"),
        min_n=int(sec.get("min_n", 2)),
    )
    cross = sec.get("cross_field")
    rep = run_equivalence_suite(corpus, field_, ells, js,
                                int(cross) if cross not in (None, "", "none") else None,
                                suites, workers)
    rep.label = f"[{sec['name']}] " + rep.label
    return rep


def bundled_config(name: str = "acceptance.cfg") -> str:
    return (Path(__file__).parent / "data" / name).read_text()

