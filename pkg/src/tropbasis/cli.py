"""Command line front end.

Exit status: 0 on success, 1 when verification fails or the two bases
differ, 2 on parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from .basis import compute_basis, decompose
from .core import TropicalError
from .fileio import (
    ParseError,
    format_generator,
    format_vector,
    generator_record,
    parse_system,
    parse_vectors,
)
from .oracle import cross_check, random_system
from .system import is_solution

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(args, text_lines, doc):
    if args.format == "json":
        print(json.dumps(doc, indent=1))
    else:
        for line in text_lines:
            print(line)


def _read_system(path):
    return parse_system(Path(path).read_text())


def cmd_solve(args) -> int:
    system = _read_system(args.file)
    basis = compute_basis(system)
    lines = [format_generator(g) for g in basis]
    lines.append(f"basis size: {len(basis)}")
    doc = {
        "command": "solve",
        "n": system.n,
        "basis_size": len(basis),
        "generators": [generator_record(g) for g in basis],
    }
    _emit(args, lines, doc)
    return EXIT_OK


def cmd_verify(args) -> int:
    system = _read_system(args.file)
    vecs = parse_vectors(Path(args.basisfile).read_text(), system.n)
    not_solutions = [v for v in vecs if not is_solution(system, v)]
    dependent = [
        v for pos, v in enumerate(vecs)
        if decompose(v, vecs[:pos] + vecs[pos + 1:]) is not None
    ]
    # the given set generates the cone iff it generates the computed basis
    ungenerated = [g.vector for g in compute_basis(system) if decompose(g, vecs) is None]
    ok = not (not_solutions or dependent or ungenerated)
    lines = [
        f"vectors: {len(vecs)}",
        f"solutions: {'ok' if not not_solutions else f'{len(not_solutions)} violate the system'}",
        f"independent: {'ok' if not dependent else f'{len(dependent)} generated by the others'}",
        f"generating: {'ok' if not ungenerated else f'{len(ungenerated)} extremals not generated'}",
    ]
    lines += [f"not a solution: {format_vector(v)}" for v in not_solutions]
    lines += [f"dependent: {format_vector(v)}" for v in dependent]
    lines += [f"not generated: {format_vector(v)}" for v in ungenerated]
    lines.append(f"verified: {'true' if ok else 'false'}")
    doc = {
        "command": "verify",
        "n": system.n,
        "vectors": len(vecs),
        "verified": ok,
        "not_solutions": [format_vector(v) for v in not_solutions],
        "dependent": [format_vector(v) for v in dependent],
        "not_generated": [format_vector(v) for v in ungenerated],
    }
    _emit(args, lines, doc)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle(args) -> int:
    system = _read_system(args.file)
    rep = cross_check(system)
    ok = rep.basis_match and not rep.solution_violations and not rep.membership_failures
    lines = [
        f"basis_match: {'true' if rep.basis_match else 'false'}",
        f"fast basis size: {rep.fast_size}",
        f"oracle basis size: {rep.oracle_size}",
        f"missing: {len(rep.missing)}",
        f"extra: {len(rep.extra)}",
        f"solution_violations: {len(rep.solution_violations)}",
        f"membership_failures: {len(rep.membership_failures)}",
    ]
    lines += ["missing " + format_generator(g) for g in rep.missing]
    lines += ["extra " + format_generator(g) for g in rep.extra]
    lines += ["violation vec=" + format_vector(v) for v in rep.solution_violations]
    lines += ["not generated vec=" + format_vector(v) for v in rep.membership_failures]
    doc = {
        "command": "oracle",
        "n": system.n,
        "basis_match": rep.basis_match,
        "fast_basis_size": rep.fast_size,
        "oracle_basis_size": rep.oracle_size,
        "missing": [generator_record(g) for g in rep.missing],
        "extra": [generator_record(g) for g in rep.extra],
        "solution_violations": [format_vector(v) for v in rep.solution_violations],
        "membership_failures": [format_vector(v) for v in rep.membership_failures],
    }
    _emit(args, lines, doc)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bench(args) -> int:
    if args.n < 1:
        raise ParseError("--n must be positive")
    system = random_system(args.n, random.Random(args.seed), bottom_prob=0.0, low=-50, high=50)
    start = time.perf_counter()
    basis = compute_basis(system)
    ms = (time.perf_counter() - start) * 1000.0
    doc = {"command": "bench", "n": args.n, "seed": args.seed, "time_ms": round(ms, 1), "basis": len(basis)}
    _emit(args, [f"n={args.n} time_ms={ms:.1f} basis={len(basis)}"], doc)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="tropbasis",
        description="Basis of the max-plus cone {x : A x <= B x} for two inequalities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="print the basis of a system")
    p.add_argument("file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[common], help="check a claimed basis")
    p.add_argument("file")
    p.add_argument("basisfile")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="compare with the brute-force basis")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", parents=[common], help="time a random dense system")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (TropicalError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
