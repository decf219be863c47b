"""Command-line front end: ``serre-sr <command> FILE``.

Every command reads one facet file or ideal file (``-`` for stdin); ideal
files are recognised by their ``vars:`` header.  Exit codes for ``check``
and ``verify``: 0 satisfied or passed, 1 violated, 2 not applicable or bad
input, 3 two criteria disagree.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from .complex import (VOID, DomainError, MalformedInputError, SimplicialComplex,
                      alexander_dual, format_facets, members, parse_facets, skeleton)
from .criteria import (ALL_CRITERIA, Criterion, InvariantViolation, SerreVerdict, conflicts,
                       evaluate, serre_profile)
from .invariants import betti_of_complex, describe, graded_betti
from .linalg import as_field
from .monomial import (MonomialIdeal, alexander_dual_ideal, complex_of_ideal, format_ideal,
                       parse_ideal, polarize)
from .verify import (CapError, SuiteReport, VacuousSuiteError, bundled_config, load_config,
                     run_config_section, worker_count)

SCHEMA = "serre-report/1"

EXIT_OK, EXIT_VIOLATED, EXIT_NA, EXIT_DISAGREE = 0, 1, 2, 3


class UsageError(Exception):
    """Bad input or arguments; maps to exit code 2."""


# --------------------------------------------------------------------------
# report

@dataclass
class Report:
    command: str
    input: str
    field: int | None
    vertices: list[str] = field(default_factory=list)
    invariants: dict = field(default_factory=dict)
    verdicts: list[SerreVerdict] = field(default_factory=list)
    profile: dict | None = None
    properties: list[dict] = field(default_factory=list)
    exit_code: int = 0
    schema: str = SCHEMA

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "command": self.command,
            "input": self.input,
            "field": self.field,
            "vertices": self.vertices,
            "invariants": self.invariants,
            "verdicts": [v.to_dict() for v in self.verdicts],
            "profile": self.profile,
            "properties": self.properties,
            "exit_code": self.exit_code,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        return cls(d["command"], d["input"], d["field"], list(d["vertices"]),
                   dict(d["invariants"]), [SerreVerdict.from_dict(v) for v in d["verdicts"]],
                   d["profile"], list(d["properties"]), d["exit_code"], d["schema"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _fmt_face(s: int, names: list[str]) -> str:
    return "{" + ",".join(names[v] if v < len(names) else str(v) for v in members(s)) + "}"


def _fmt_witness(w, names: list[str]) -> str:
    if w is None:
        return ""
    if isinstance(w, int):
        return "face " + _fmt_face(w, names)
    if w[0] == "face":
        return "face " + _fmt_face(w[1], names)
    if w[0] == "homology":
        return f"face {_fmt_face(w[1], names)} H~_{w[2]}(link) != 0"
    return f"Tor_{w[1]} of the dual ideal nonzero in degree {w[2]}"


def verdict_line(v: SerreVerdict, names: list[str]) -> str:
    field_txt = "any" if v.p is None else f"GF({v.p})"
    parts = [f"{v.criterion.value:<10}", f"ell={v.ell}", f"j={v.j}", f"field={field_txt}",
             v.status()]
    w = _fmt_witness(v.witness, names)
    if w:
        parts.append("witness " + w)
    if v.note:
        parts.append(f"({v.note})")
    return "  ".join(parts)


def report_text(rep: Report) -> str:
    lines = [f"input: {rep.input}" + ("" if rep.field is None else f"  field: GF({rep.field})")]
    for k, x in rep.invariants.items():
        lines.append(f"{k}: {'not applicable' if x is None else x}")
    lines += [verdict_line(v, rep.vertices) for v in rep.verdicts]
    if rep.profile is not None:
        lines.append(rep.profile["text"].rstrip("\n"))
    for suite in rep.properties:
        lines.append(suite["text"].rstrip("\n"))
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# input and output

def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def read_object(path: str) -> SimplicialComplex | MonomialIdeal:
    text = read_text(path)
    is_ideal = any(ln.strip().lower().startswith("vars:") for ln in text.splitlines())
    try:
        return parse_ideal(text) if is_ideal else parse_facets(text)
    except MalformedInputError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def read_complex(path: str) -> SimplicialComplex:
    obj = read_object(path)
    if isinstance(obj, SimplicialComplex):
        return obj
    if not obj.is_squarefree:
        raise UsageError(f"{path}: ideal is not squarefree; polarize it first")
    return complex_of_ideal(obj)


def write_output(text: str, out: str | None) -> None:
    """Write to ``out`` through a temporary file and rename, or to stdout."""
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    target = Path(out)
    fd, tmp = tempfile.mkstemp(dir=target.parent or Path("."), prefix=f".{target.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def _ints(values: list[str] | None, default: tuple[int, ...]) -> tuple[int, ...]:
    if not values:
        return default
    out: list[int] = []
    for v in values:
        for part in v.split(","):
            part = part.strip()
            if not part:
                continue
            try:
                if "-" in part[1:]:
                    lo, hi = part.split("-", 1)
                    out.extend(range(int(lo), int(hi) + 1))
                else:
                    out.append(int(part))
            except ValueError as exc:
                raise UsageError(f"cannot read integer range {part!r}") from exc
    return tuple(dict.fromkeys(out))


def _field(p: int) -> int:
    try:
        return as_field(p).p
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _names(delta: SimplicialComplex) -> list[str]:
    return [delta.label(v) for v in range(delta.n)]


def _emit(rep: Report, args) -> None:
    text = rep.to_json() if args.format == "json" else report_text(rep)
    write_output(text, args.output)


# --------------------------------------------------------------------------
# commands

def check_exit_code(verdicts: list[SerreVerdict], delta: SimplicialComplex) -> int:
    if conflicts(verdicts):
        return EXIT_DISAGREE
    decisive = []
    for v in verdicts:
        if not v.applicable:
            continue
        if v.criterion is Criterion.LEMMA63_NECESSARY and v.satisfied and not delta.is_pure():
            continue  # necessary only; a pass settles nothing here
        decisive.append(v)
    if not decisive:
        return EXIT_NA
    return EXIT_OK if all(v.satisfied for v in decisive) else EXIT_VIOLATED


def cmd_check(args) -> int:
    delta = read_complex(args.file)
    p = _field(args.field)
    ells = _ints(args.ell, (2,))
    js = _ints(args.j, (0,))
    if not ells or not js:
        raise UsageError("empty (ell, j) grid")
    if min(ells) < 1 or min(js) < 0:
        raise UsageError("need ell >= 1 and j >= 0")
    crits = ALL_CRITERIA if args.criterion == "all" else (Criterion(args.criterion),)
    verdicts = []
    try:
        for ell in ells:
            for j in js:
                verdicts.extend(evaluate(delta, c, ell, j, p) for c in crits)
    except InvariantViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    rep = Report("check", args.file, p, _names(delta), verdicts=verdicts)
    rep.exit_code = check_exit_code(verdicts, delta)
    for v in conflicts(verdicts):
        print(f"disagreement: {verdict_line(v, rep.vertices)}", file=sys.stderr)
    _emit(rep, args)
    return rep.exit_code


def cmd_profile(args) -> int:
    delta = read_complex(args.file)
    p = _field(args.field)
    if delta.kind == VOID:
        raise UsageError("the void complex has no profile")
    prof = serre_profile(delta, p, complex_id=args.file)
    grid = [[ell, j, ok] for (ell, j), ok in sorted(prof.grid.items())]
    rep = Report("profile", args.file, p, _names(delta), invariants=describe(delta, p))
    rep.profile = {"krull_dim": prof.krull_dim, "grid": grid,
                   "disagreements": [v.to_dict() for v in prof.disagreements],
                   "text": prof.format_grid()}
    rep.exit_code = EXIT_DISAGREE if prof.disagreements else EXIT_OK
    _emit(rep, args)
    return rep.exit_code


def cmd_betti(args) -> int:
    obj = read_object(args.file)
    p = _field(args.field)
    try:
        if isinstance(obj, SimplicialComplex):
            table = betti_of_complex(obj, p)
        else:
            # polarization keeps the graded Betti numbers
            table = graded_betti(obj if obj.is_squarefree else polarize(obj), p)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        write_output(json.dumps({"schema": SCHEMA, "command": "betti", "input": args.file,
                                 "field": p, "rows": [list(r) for r in table.rows()]},
                                indent=2) + "\n", args.output)
    else:
        write_output(table.to_text(), args.output)
    return EXIT_OK


def cmd_depth(args) -> int:
    delta = read_complex(args.file)
    p = _field(args.field)
    inv = describe(delta, p)
    rep = Report("depth", args.file, p, _names(delta), invariants=inv)
    if args.format == "json":
        write_output(rep.to_json(), args.output)
    else:
        def show(x):
            return "NA" if x is None else str(x)
        write_output(f"depth {show(inv['depth'])} pd {show(inv['pd'])} "
                     f"reg {show(inv['reg'])}\n", args.output)
    return EXIT_OK


def cmd_dual(args) -> int:
    obj = read_object(args.file)
    if isinstance(obj, SimplicialComplex):
        write_output(format_facets(alexander_dual(obj)), args.output)
        return EXIT_OK
    try:
        write_output(format_ideal(alexander_dual_ideal(obj)), args.output)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    return EXIT_OK


def cmd_polarize(args) -> int:
    obj = read_object(args.file)
    if isinstance(obj, SimplicialComplex):
        raise UsageError("polarize expects an ideal file")
    try:
        write_output(format_ideal(polarize(obj)), args.output)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    return EXIT_OK


def cmd_skeleton(args) -> int:
    delta = read_complex(args.file)
    if args.i < -1:
        raise UsageError("skeleton dimension must be >= -1")
    write_output(format_facets(skeleton(delta, args.i)), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        text = bundled_config(args.config) if not Path(args.config).exists() else \
            read_text(args.config)
    except OSError:
        raise UsageError(f"no config file or bundled config named {args.config!r}")
    workers = worker_count() if args.workers is None else args.workers
    suites: list[SuiteReport] = []
    try:
        for sec in load_config(text):
            rep = run_config_section(sec, workers)
            suites.append(rep)
            if not args.quiet:
                print(rep.to_text(), file=sys.stderr, end="")
    except (CapError, VacuousSuiteError, KeyError, ValueError) as exc:
        msg = str(exc).strip("'\"")
        if isinstance(exc, VacuousSuiteError):
            msg = f"vacuous suite: {msg}"
        raise UsageError(msg) from exc
    vacuous = any(not r.checked for s in suites for r in s.properties.values())
    failed = any(r.failures for s in suites for r in s.properties.values())
    rep = Report("verify", args.config, None)
    rep.properties = [dict(s.to_dict(), text=s.to_text()) for s in suites]
    rep.exit_code = EXIT_VIOLATED if failed else (EXIT_NA if vacuous else EXIT_OK)
    _emit(rep, args)
    return rep.exit_code


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="serre-sr",
                                 description="Serre-type conditions on Stanley-Reisner rings.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, fmt=True, fld=True):
        p.add_argument("file", help="facet file or ideal file, '-' for stdin")
        if fld:
            p.add_argument("--field", type=int, default=2, help="prime modulus (default 2)")
        if fmt:
            p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("-o", "--output", help="write here instead of stdout")

    p = sub.add_parser("check", help="decide (S_ell^j)")
    common(p)
    p.add_argument("--ell", action="append", help="ell values, e.g. 2 or 2-4 (repeatable)")
    p.add_argument("--j", action="append", help="j values, e.g. 0 or 0-3 (repeatable)")
    p.add_argument("--criterion", default="definition",
                   choices=[c.value for c in Criterion] + ["all"])
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("profile", help="grid of (S_ell^j) over all ell, j")
    common(p)
    p.set_defaults(run=cmd_profile)

    p = sub.add_parser("betti", help="graded Betti rows 'i b dim' of the ideal")
    common(p)
    p.set_defaults(run=cmd_betti)

    p = sub.add_parser("depth", help="depth, pd and reg")
    common(p)
    p.set_defaults(run=cmd_depth)

    p = sub.add_parser("dual", help="Alexander dual (complex or ideal)")
    common(p, fmt=False, fld=False)
    p.set_defaults(run=cmd_dual)

    p = sub.add_parser("polarize", help="polarization of an ideal")
    common(p, fmt=False, fld=False)
    p.set_defaults(run=cmd_polarize)

    p = sub.add_parser("skeleton", help="i-skeleton of a complex")
    common(p, fmt=False, fld=False)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(run=cmd_skeleton)

    p = sub.add_parser("verify", help="run property suites from a config file")
    p.add_argument("config", nargs="?", default="acceptance.cfg",
                   help="config path or bundled config name (default acceptance.cfg)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output")
    p.add_argument("--workers", type=int, help="worker processes (default SERRE_THREADS or 1)")
    p.add_argument("-q", "--quiet", action="store_true", help="no progress on stderr")
    p.set_defaults(run=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_NA if exc.code else EXIT_OK
    try:
        return args.run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NA
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NA


if __name__ == "__main__":
    sys.exit(main())
