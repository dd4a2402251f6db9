"""Command-line interface: ``axial build | axis-check | solidity-census | verify``.

Exit codes: 0 when every check passes, 1 on a failed check, 2 on usage,
parse or file errors.  Reports are JSON (or CSV) on stdout; the wall-clock
duration goes to stderr so the payload stays byte-identical across runs.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from .algebra import Algebra, dump_algebra, load_algebra
from .axes import axis_check
from .catalog import FieldExtensionError, jordan_pair, spin_factor, spin_idempotent, three_gen_universal
from .fischer import (GeneratorParseError, GroupCapError, enumerate_group, fischer_space,
                      g334_generators, involution_class, matsuo_algebra, parse_generators,
                      transpositions)
from .scalars import ScalarParseError, format_scalar, parse_scalar
from .solidity import SolidityCounterexample, solidity_census
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _scalar(text: str):
    try:
        return parse_scalar(text.strip())
    except ScalarParseError as e:
        raise UsageError(f"cannot parse scalar {e.text!r} at position {e.position}: {e.reason}")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}")


def _load(path: str) -> Algebra:
    try:
        return load_algebra(_read(path))
    except (ValueError, KeyError, json.JSONDecodeError) as e:
        raise UsageError(f"{path}: {e}")


def _group_points(group: str, generators_file: str | None, cap: int):
    if group == "g334":
        gens = g334_generators()
        return involution_class(gens, [gens[0]])
    if group.startswith("sym:"):
        try:
            n = int(group[4:])
        except ValueError:
            raise UsageError(f"bad symmetric group degree in {group!r}")
        if n < 2:
            raise UsageError("symmetric group degree must be at least 2")
        return transpositions(n)
    if group == "gens":
        if not generators_file:
            raise UsageError("group 'gens' needs --generators FILE")
        try:
            gens = parse_generators(_read(generators_file))
        except GeneratorParseError as e:
            raise UsageError(f"{generators_file}: {e}")
        if not gens:
            raise UsageError(f"{generators_file}: no generators")
        try:
            enumerate_group(gens, cap=cap)
            return involution_class(gens, gens)
        except (GroupCapError, ValueError) as e:
            raise UsageError(str(e))
    raise UsageError(f"unknown group {group!r}; use g334, sym:n or gens")


def build_algebra(spec: str, generators_file: str | None = None, cap: int = 100000) -> Algebra:
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise UsageError(f"build spec {spec!r} needs the form kind:parameters")
    if kind == "jordan-pair":
        return jordan_pair(_scalar(rest))
    if kind == "universal3":
        parts = rest.split(",")
        if len(parts) != 4:
            raise UsageError("universal3 needs four parameters alpha,beta,gamma,psi")
        return three_gen_universal(*(_scalar(p) for p in parts))
    if kind == "spin":
        # either whitespace-separated rows, a JSON matrix, or {"form": ..., "axes": [u, ...]}
        # where each u in V gives the idempotent (1 + u)/2
        text = _read(rest)
        try:
            data = json.loads(text)
        except json.JSONDecodeError:
            data = [line.split() for line in text.splitlines() if line.strip()]
        rows, us = (data.get("form", []), data.get("axes", [])) if isinstance(data, dict) else (data, [])
        B = [[_scalar(str(x)) for x in row] for row in rows]
        if not B or any(len(row) != len(B) for row in B):
            raise UsageError("spin form must be a non-empty square matrix")
        us = [[_scalar(str(x)) for x in u] for u in us]
        if any(len(u) != len(B) for u in us):
            raise UsageError(f"spin axes need {len(B)} coordinates")
        try:
            return spin_factor(B, axes=tuple(spin_idempotent(u) for u in us))
        except ValueError as e:
            raise UsageError(str(e))
    if kind == "matsuo":
        group, sep, eta = rest.rpartition(",")
        if not sep:
            raise UsageError("matsuo needs group,eta")
        eta = _scalar(eta)
        if eta in (0, 1):
            raise UsageError("eta must differ from 0 and 1")
        try:
            FS = fischer_space(_group_points(group, generators_file, cap))
        except ValueError as e:
            raise UsageError(str(e))
        return matsuo_algebra(FS, eta)
    raise UsageError(f"unknown algebra kind {kind!r}")


def _vector(A: Algebra, text: str):
    if text in A.labels:
        return A.basis(A.labels.index(text))
    if text.startswith("axis:"):
        k = int(text[5:])
        if not 0 <= k < len(A.axes):
            raise UsageError(f"axis index {k} out of range")
        return A.axes[k]
    parts = text.split(",")
    if len(parts) != A.dim:
        raise UsageError(f"vector needs {A.dim} comma-separated scalars or a basis label")
    return tuple(_scalar(p) for p in parts)


def _emit(payload: dict, fmt: str, rows: list | None, header: list | None, out):
    if fmt == "csv" and rows is not None:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        out.write(buf.getvalue())
    else:
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def cmd_build(args, out) -> int:
    A = build_algebra(args.spec, args.generators, args.cap)
    if args.field_ext == "forbid" and A.radicand is not None:
        raise UsageError(f"algebra needs sqrt({A.radicand}) but --field-ext forbid was given")
    data = dump_algebra(A)
    summary = {"command": "build", "parameters": {"spec": args.spec},
               "results": {"dim": A.dim, "field": "Q" if A.radicand is None
                           else f"Q(sqrt({A.radicand}))", "axes": len(A.axes)},
               "passed": True}
    if args.out:
        Path(args.out).write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
        summary["results"]["file"] = args.out
        rows = [[k, v] for k, v in summary["results"].items()]
        _emit(summary, args.output, rows, ["key", "value"], out)
    else:
        out.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_axis_check(args, out) -> int:
    A = _load(args.file)
    v = _vector(A, args.vector)
    eta = _scalar(args.eta)
    rep = axis_check(A, v, eta)
    payload = {"command": "axis-check",
               "parameters": {"file": args.file, "vector": args.vector, "eta": format_scalar(eta)},
               "results": rep.to_json(), "passed": rep.passed}
    rows = [[k, json.dumps(val, sort_keys=True)] for k, val in rep.to_json().items()]
    _emit(payload, args.output, rows, ["key", "value"], out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_solidity_census(args, out) -> int:
    A = _load(args.file)
    if not A.axes:
        raise UsageError("algebra file lists no axes")
    params = {"file": args.file, "samples": args.samples, "field_ext": args.field_ext}
    try:
        records = solidity_census(A, samples=args.samples,
                                  allow_extension=args.field_ext == "allow")
    except SolidityCounterexample as e:
        payload = {"command": "solidity-census", "parameters": params,
                   "results": {"counterexample": str(e)}, "passed": False}
        _emit(payload, "json", None, None, out)
        return EXIT_FAIL
    payload = {"command": "solidity-census", "parameters": params,
               "results": [r.to_json() for r in records], "passed": True}
    rows = [[f"{r.pair[0]}-{r.pair[1]}", " ".join(r.labels), r.orbit_size,
             r.to_json()["alpha"], r.classification.kind, r.classification.method]
            for r in records]
    _emit(payload, args.output, rows, ["pair", "labels", "orbit_size", "alpha", "kind", "method"],
          out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    res = run_suite(args.suite, samples=args.samples)
    payload = {"command": "verify", "parameters": {"suite": args.suite, "samples": args.samples},
               "results": res.to_json(), "passed": res.passed}
    rows = [[c.name, "pass" if c.passed else "fail", c.detail] for c in res.checks]
    _emit(payload, args.output, rows, ["check", "status", "detail"], out)
    return EXIT_OK if res.passed else EXIT_FAIL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "csv"), default="json")
    common.add_argument("--samples", type=int, default=12, help="size of the xi-family sample")
    common.add_argument("--cap", type=int, default=100000, help="group enumeration cap")
    common.add_argument("--field-ext", choices=("allow", "forbid"), default="allow")

    p = _Parser(prog="axial", description="Exact computations with axial algebras of Jordan type half.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", parents=[common], help="construct an algebra file")
    b.add_argument("spec", help="jordan-pair:A | spin:FILE | universal3:A,B,G,P | matsuo:GROUP,ETA")
    b.add_argument("-o", "--out", help="write the algebra here instead of stdout")
    b.add_argument("--generators", help="generator file for matsuo:gens,ETA")
    b.set_defaults(func=cmd_build)

    a = sub.add_parser("axis-check", parents=[common], help="check one vector")
    a.add_argument("file")
    a.add_argument("vector", help="basis label, axis:K, or comma-separated scalars")
    a.add_argument("--eta", default="1/2")
    a.set_defaults(func=cmd_axis_check)

    c = sub.add_parser("solidity-census", parents=[common], help="classify axis pairs by orbit")
    c.add_argument("file")
    c.set_defaults(func=cmd_solidity_census)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", help=", ".join(SUITES))
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if getattr(args, "samples", 12) < 3:
        sys.stderr.write("axial: error: --samples must be at least 3\n")
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        code = args.func(args, out)
    except (UsageError, FieldExtensionError) as e:
        sys.stderr.write(f"axial: error: {e}\n")
        return EXIT_USAGE
    sys.stderr.write(f"duration: {time.perf_counter() - start:.3f}s\n")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
