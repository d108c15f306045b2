"""Command-line front end.

Exit codes: 0 ok, 1 fuzz mismatch or failed check, 2 argument error,
3 forbidden result under ``--strict``.
"""

from __future__ import annotations

import argparse
import itertools
import json
import logging
import os
import random
import sys
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, TextIO

from . import solve
from .core import (Coord, CShape, ForbiddenConditionError, LShape, PathError, Rect, Shape,
                   SupergridError, boundary_edge_count, validate_cycle,
                   validate_path)
from .oracle import (DEFAULT_MAX_NODES, BudgetExceededError, OracleBudget, oracle_hc_exists,
                     oracle_hp_exists, oracle_longest)
from .render import render_ascii, render_png, render_svg

log = logging.getLogger("supergrid")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_FORBIDDEN = 0, 1, 2, 3
BUDGET_ENV = "SUPERGRID_FUZZ_BUDGET"


class UsageError(Exception):
    pass


@dataclass
class InstanceSpec:
    kind: str
    params: dict
    s: Optional[Coord] = None
    t: Optional[Coord] = None
    command: str = "longest"
    fmt: str = "text"
    extra: dict = field(default_factory=dict)

    def shape(self) -> Shape:
        p = self.params
        try:
            if self.kind == "R":
                return Rect(p["m"], p["n"])
            if self.kind == "L":
                return LShape(p["m"], p["n"], p["k"], p["l"])
            if self.kind == "C":
                return CShape(p["m"], p["n"], p["k"], p["l"], p["c"], p.get("d"))
        except KeyError as e:
            raise UsageError(f"shape {self.kind} needs --{e.args[0]}") from None
        raise UsageError(f"unknown shape {self.kind}")

    def to_json(self) -> dict:
        return {"kind": self.kind, **{k: v for k, v in self.params.items() if v is not None}}

    @classmethod
    def from_json(cls, obj: dict, command: str = "longest") -> "InstanceSpec":
        shape = obj.get("shape", obj)
        params = {k: v for k, v in shape.items() if k != "kind"}
        s = tuple(obj["s"]) if obj.get("s") is not None else None
        t = tuple(obj["t"]) if obj.get("t") is not None else None
        return cls(shape["kind"], params, s, t, command)


def shape_json(shape: Shape) -> dict:
    if isinstance(shape, Rect):
        return {"kind": "R", "m": shape.m, "n": shape.n}
    if isinstance(shape, LShape):
        return {"kind": "L", "m": shape.m, "n": shape.n, "k": shape.k, "l": shape.l}
    return {"kind": "C", "m": shape.m, "n": shape.n, "k": shape.k, "l": shape.l,
            "c": shape.c, "d": shape.d}


# ---------------------------------------------------------------------------
# argument parsing


def _coord(text: str) -> Coord:
    try:
        x, y = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y but got {text!r}") from None
    return (x, y)


def _shape_args(p: argparse.ArgumentParser, ends: bool) -> None:
    p.add_argument("--shape", choices=("R", "L", "C"), required=True)
    for name in ("m", "n", "k", "l", "c", "d"):
        p.add_argument(f"--{name}", type=int)
    if ends:
        p.add_argument("--s", type=_coord, required=True, metavar="X,Y")
        p.add_argument("--t", type=_coord, required=True, metavar="X,Y")


def _out_args(p: argparse.ArgumentParser, formats=("text", "json", "svg")) -> None:
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--strict", action="store_true",
                   help="exit 3 when the result is a forbidden condition")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supergrid",
        description="Hamiltonian and longest paths in rectangular, L- and C-shaped "
                    "supergrid graphs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hc", help="Hamiltonian cycle")
    _shape_args(p, ends=False)
    _out_args(p)

    for name, text in (("hp", "Hamiltonian (s,t)-path"), ("longest", "longest (s,t)-path")):
        p = sub.add_parser(name, help=text)
        _shape_args(p, ends=True)
        _out_args(p)

    p = sub.add_parser("check", help="re-validate JSON emitted by hc, hp or longest")
    p.add_argument("input", nargs="?", default="-", help="JSON file (default stdin)")

    p = sub.add_parser("fuzz", help="compare the solvers with the exhaustive oracle")
    p.add_argument("--max-vertices", type=int, default=18)
    p.add_argument("--seed-file", help="one instance JSON per line instead of enumeration")
    p.add_argument("--sample", type=int, default=0,
                   help="check this many random instances instead of all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shapes", default="RLC", help="shape kinds to enumerate")

    p = sub.add_parser("render", help="draw a shape with its longest path or cycle")
    p.add_argument("--shape", choices=("R", "L", "C"), required=True)
    for name in ("m", "n", "k", "l", "c", "d"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--s", type=_coord, metavar="X,Y")
    p.add_argument("--t", type=_coord, metavar="X,Y")
    p.add_argument("--format", choices=("text", "svg", "png"), default="text")
    p.add_argument("--out", help="output file (required for png)")

    p = sub.add_parser("report", help="timing sweep of longest_c with CSV, JSON and PNG output")
    p.add_argument("--out", default="report")
    p.add_argument("--sizes", default="10000,40000,160000,640000")
    p.add_argument("--repeats", type=int, default=3)
    return parser


def _spec(args: argparse.Namespace) -> InstanceSpec:
    params = {k: getattr(args, k) for k in ("m", "n", "k", "l", "c", "d")}
    return InstanceSpec(args.shape, params, getattr(args, "s", None), getattr(args, "t", None),
                        args.command, getattr(args, "format", "text"))


# ---------------------------------------------------------------------------
# result records


def result_record(shape: Shape, s: Optional[Coord], t: Optional[Coord], case: Optional[str],
                  bound: Optional[int], verts: Sequence[Coord], forb: Sequence[str]) -> dict:
    rec = {"shape": shape_json(shape), "s": list(s) if s else None, "t": list(t) if t else None,
           "case": case, "upper_bound": bound, "length": len(verts),
           "path": [list(v) for v in verts], "forbidden": sorted(forb)}
    if s is None and isinstance(shape, Rect) and min(shape.m, shape.n) >= 2:
        rec["boundary_edges"] = boundary_edge_count(shape)
    return rec


def emit(rec: dict, fmt: str, shape: Shape, out: TextIO) -> None:
    closed = rec["s"] is None
    if fmt == "json":
        out.write(json.dumps(rec) + "\n")
        return
    if fmt == "svg":
        out.write(render_svg(shape, [tuple(v) for v in rec["path"]], closed))
        return
    for key in ("case", "upper_bound", "length", "boundary_edges"):
        if rec.get(key) is not None:
            out.write(f"# {key}: {rec[key]}\n")
    if rec["forbidden"]:
        out.write(f"# forbidden: {','.join(rec['forbidden'])}\n")
    for x, y in rec["path"]:
        out.write(f"{x},{y}\n")


# ---------------------------------------------------------------------------
# commands


def cmd_hc(args, out: TextIO) -> int:
    shape = _spec(args).shape()
    forb = solve.cycle_forbidden(shape)
    verts = [] if forb else solve.hamiltonian_cycle(shape).verts
    emit(result_record(shape, None, None, None, None, verts, forb), args.format, shape, out)
    return EXIT_FORBIDDEN if forb and args.strict else EXIT_OK


def cmd_hp(args, out: TextIO) -> int:
    spec = _spec(args)
    shape = spec.shape()
    forb = solve.forbidden(shape, spec.s, spec.t)
    verts = [] if forb else solve.hamiltonian_path(shape, spec.s, spec.t).verts
    rec = result_record(shape, spec.s, spec.t, None, None, verts, forb)
    emit(rec, args.format, shape, out)
    return EXIT_FORBIDDEN if forb and args.strict else EXIT_OK


def cmd_longest(args, out: TextIO) -> int:
    spec = _spec(args)
    shape = spec.shape()
    s, t = spec.s, spec.t
    forb = solve.forbidden(shape, s, t)
    p = solve.longest(shape, s, t)
    rec = result_record(shape, s, t, solve.classify(shape, s, t), solve.upper_bound(shape, s, t),
                        p.verts, forb)
    emit(rec, args.format, shape, out)
    return EXIT_FORBIDDEN if forb and args.strict else EXIT_OK


def check_record(rec: dict) -> Optional[str]:
    """``None`` when the record is consistent, else the reason."""
    spec = InstanceSpec.from_json(rec)
    shape = spec.shape()
    verts = [tuple(v) for v in rec["path"]]
    if rec.get("length") is not None and rec["length"] != len(verts):
        return f"length {rec['length']} but {len(verts)} vertices"
    if not verts:
        return None if rec.get("forbidden") else "empty path without a forbidden condition"
    try:
        if spec.s is None:
            validate_cycle(verts, shape, hamiltonian=True)
            return None
        validate_path(verts, shape)
    except PathError as e:
        return str(e)
    if verts[0] != spec.s or verts[-1] != spec.t:
        return "endpoints differ from s and t"
    if rec.get("upper_bound") is not None and rec["upper_bound"] != len(verts):
        return f"length {len(verts)} below the bound {rec['upper_bound']}"
    if rec.get("upper_bound") is None and len(verts) != shape.size:
        return "path is not Hamiltonian"
    return None


def cmd_check(args, out: TextIO) -> int:
    fh = sys.stdin if args.input == "-" else open(args.input)
    bad = 0
    with fh:
        for line in fh:
            if not line.strip():
                continue
            reason = check_record(json.loads(line))
            bad += reason is not None
            out.write("ok\n" if reason is None else f"invalid: {reason}\n")
    return EXIT_MISMATCH if bad else EXIT_OK


def fuzz_budget() -> OracleBudget:
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return OracleBudget(max_nodes_expanded=DEFAULT_MAX_NODES)
    try:
        return OracleBudget(max_nodes_expanded=int(raw))
    except ValueError:
        raise UsageError(f"{BUDGET_ENV} must be an integer") from None


def enumerate_shapes(max_vertices: int, kinds: str = "RLC") -> Iterator[Shape]:
    """Every legal R, L and C shape with at most ``max_vertices`` vertices."""
    for m in range(1, max_vertices + 1):
        for n in range(1, max_vertices + 1):
            if "R" in kinds and m * n <= max_vertices:
                yield Rect(m, n)
            if m < 2 or n < 2:
                continue
            for k in range(1, m):
                for l in range(1, n):
                    if "L" in kinds and m * n - k * l <= max_vertices:
                        yield LShape(m, n, k, l)
                    if "C" in kinds and m * n - k * l <= max_vertices:
                        for c in range(1, n - l):
                            yield CShape(m, n, k, l, c)


def fuzz_instance(shape: Shape, s: Coord, t: Coord, budget: OracleBudget) -> Optional[str]:
    """Compare one triple with the oracle.  ``None`` when they agree."""
    forb = solve.forbidden(shape, s, t)
    if bool(forb) == oracle_hp_exists(shape, s, t, budget):
        return f"forbidden={sorted(forb)} disagrees with the oracle"
    if not forb:
        validate_path(solve.hamiltonian_path(shape, s, t).verts, shape, hamiltonian=True)
    best, _ = oracle_longest(shape, s, t, budget)
    bound = solve.upper_bound(shape, s, t)
    p = solve.longest(shape, s, t)
    validate_path(p.verts, shape)
    if (p.start, p.end) != (s, t):
        return "longest path has wrong endpoints"
    if not (len(p) == bound == best):
        return f"length {len(p)}, bound {bound}, oracle {best}"
    return None


def fuzz_cycle(shape: Shape, budget: OracleBudget) -> Optional[str]:
    forb = solve.cycle_forbidden(shape)
    if bool(forb) == oracle_hc_exists(shape, budget):
        return f"cycle forbidden={sorted(forb)} disagrees with the oracle"
    if not forb:
        validate_cycle(solve.hamiltonian_cycle(shape).verts, shape, hamiltonian=True)
    return None


def _fuzz_jobs(args) -> Iterator[tuple[Shape, Optional[Coord], Optional[Coord]]]:
    if args.seed_file:
        with open(args.seed_file) as fh:
            for line in fh:
                if line.strip():
                    spec = InstanceSpec.from_json(json.loads(line))
                    yield spec.shape(), spec.s, spec.t
        return
    jobs: list[tuple[Shape, Optional[Coord], Optional[Coord]]] = []
    for shape in enumerate_shapes(args.max_vertices, args.shapes):
        jobs.append((shape, None, None))
        jobs.extend((shape, s, t) for s, t in itertools.permutations(sorted(shape.vertices()), 2))
    if args.sample:
        rng = random.Random(args.seed)
        jobs = rng.sample(jobs, min(args.sample, len(jobs)))
    yield from jobs


def cmd_fuzz(args, out: TextIO) -> int:
    budget = fuzz_budget()
    checked = mismatches = skipped = 0
    for shape, s, t in _fuzz_jobs(args):
        try:
            reason = fuzz_cycle(shape, budget) if s is None else fuzz_instance(shape, s, t, budget)
        except BudgetExceededError:
            skipped += 1
            continue
        except SupergridError as e:
            reason = f"{type(e).__name__}: {e}"
        checked += 1
        if reason is not None:
            mismatches += 1
            out.write(f"MISMATCH {shape!r} s={s} t={t}: {reason}\n")
    out.write(f"checked {checked} instances, {mismatches} mismatches, {skipped} over budget\n")
    return EXIT_MISMATCH if mismatches else EXIT_OK


def cmd_render(args, out: TextIO) -> int:
    spec = _spec(args)
    shape = spec.shape()
    if (spec.s is None) != (spec.t is None):
        raise UsageError("give both --s and --t, or neither for a cycle")
    closed = spec.s is None
    verts = solve.hamiltonian_cycle(shape).verts if closed else \
        solve.longest(shape, spec.s, spec.t).verts
    if args.format == "png":
        if not args.out:
            raise UsageError("--format png needs --out")
        render_png(shape, verts, args.out, closed, title=repr(shape))
        out.write(f"{args.out}\n")
        return EXIT_OK
    text = render_svg(shape, verts, closed, repr(shape)) if args.format == "svg" \
        else render_ascii(shape, verts, closed)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        out.write(f"{args.out}\n")
    else:
        out.write(text)
    return EXIT_OK


def cmd_report(args, out: TextIO) -> int:
    from . import bench
    from .render import write_timing_report

    try:
        sizes = tuple(int(v) for v in args.sizes.split(","))
    except ValueError:
        raise UsageError("--sizes must be comma-separated integers") from None
    timings, slope = bench.run(sizes, args.repeats)
    files = write_timing_report([t.row() for t in timings], slope, args.out)
    example = CShape(5, 5, 2, 1, 2)
    p = solve.longest(example, (1, 1), (5, 5))
    files.append(render_png(example, p.verts, f"{args.out}/example_longest.png",
                            title=f"{example!r} (1,1) to (5,5), length {len(p)}"))
    for t in timings:
        out.write(f"{t.mn}\t{t.vertices}\t{t.seconds:.4f}s\n")
    out.write(f"slope {slope:.3f}\n")
    for f in files:
        out.write(f"{f}\n")
    return EXIT_OK


COMMANDS = {"hc": cmd_hc, "hp": cmd_hp, "longest": cmd_longest, "check": cmd_check,
            "fuzz": cmd_fuzz, "render": cmd_render, "report": cmd_report}


def run(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout,
        err: TextIO = sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, SupergridError, ValueError) as e:
        if isinstance(e, ForbiddenConditionError):  # pragma: no cover
            err.write(f"forbidden: {','.join(e.conditions)}\n")
            return EXIT_FORBIDDEN
        err.write(f"error: {e}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
