"""Command-line front end: charpoly, det, inverse, verify, bench.

Exit codes: 0 success, 1 expression parse error, 2 unsupported method or
dimension, 3 cross-check mismatch, 4 singular element.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from fractions import Fraction

from .closedform import (
    NotInvolutoryError,
    UnsupportedDimensionError,
    charpoly_closed,
    charpoly_explicit,
    charpoly_involutory,
)
from .core import Multivector, Signature, random_multivector, all_signatures
from .expr import ExpressionError, format_multivector, format_rational, parse_expression
from .golden import golden_cases
from .oracle import beta, build_representation, matrix_charpoly, oracle_compare
from .recursive import (
    CharPoly,
    SingularElementError,
    charpoly_recursive,
    charpoly_via_interpolation,
    inverse,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_UNSUPPORTED = 2
EXIT_MISMATCH = 3
EXIT_SINGULAR = 4

SEED_ENV_VAR = "CLIFFCHAR_SEED"

METHOD_NAMES = ("recursive", "closed", "explicit", "interp", "oracle")


def _signature_arg(text: str) -> Signature:
    try:
        p_str, q_str = text.split(",")
        return Signature(int(p_str), int(q_str))
    except (ValueError, TypeError) as ex:
        raise argparse.ArgumentTypeError(f"bad signature {text!r}: {ex}")


def _default_seed() -> int:
    return int(os.environ.get(SEED_ENV_VAR, "0"))


def _run_method(method: str, u: Multivector) -> CharPoly:
    if method == "recursive":
        return charpoly_recursive(u)[0]
    if method == "closed":
        return charpoly_closed(u)
    if method == "explicit":
        return charpoly_explicit(u)
    if method == "interp":
        return charpoly_via_interpolation(u)
    if method == "oracle":
        rep = build_representation(u.sig)
        return matrix_charpoly(beta(u, rep), u.sig)
    raise UnsupportedDimensionError(f"unknown method {method!r}")


def _applicable_methods(sig: Signature) -> list[str]:
    methods = ["recursive", "interp", "oracle"]
    if sig.n <= 6:
        methods.append("closed")
    if sig.n in (4, 5):
        methods.append("explicit")
    return methods


def _result_document(
    sig: Signature,
    u: Multivector,
    cp: CharPoly,
    method: str,
    micros: int,
    inverse_mv: Multivector | None = None,
) -> dict:
    doc = {
        "signature": [sig.p, sig.q],
        "input": format_multivector(u),
        "N": sig.N,
        "C": [format_rational(c) for c in cp.coeffs],
        "det": format_rational(cp.det),
        "method": method,
    }
    if inverse_mv is not None:
        doc["inverse"] = format_multivector(inverse_mv)
    doc["micros"] = micros
    return doc


def _read_expression(args) -> str:
    if args.stdin:
        return sys.stdin.read()
    if args.expression is None:
        raise ExpressionError("no expression given (pass one or use --stdin)", 0)
    return args.expression


def _emit(doc: dict, args, text_lines: list[str]):
    if args.json:
        print(json.dumps(doc))
    else:
        for line in text_lines:
            print(line)


def cmd_charpoly(args) -> int:
    sig = args.signature
    try:
        u = parse_expression(_read_expression(args), sig)
    except ExpressionError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_PARSE

    t0 = time.perf_counter()
    try:
        if args.method == "all":
            methods = _applicable_methods(sig)
            results = {m: _run_method(m, u) for m in methods}
            reference = results["recursive"]
            for name, cp in results.items():
                if cp.coeffs != reference.coeffs:
                    print(
                        f"error: method {name} disagrees with recursive", file=sys.stderr
                    )
                    return EXIT_MISMATCH
            cp = reference
        else:
            cp = _run_method(args.method, u)
    except UnsupportedDimensionError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    micros = int((time.perf_counter() - t0) * 1e6)

    doc = _result_document(sig, u, cp, args.method, micros)
    _emit(
        doc,
        args,
        [
            "C = [" + ",".join(doc["C"]) + "]",
            "det = " + doc["det"],
        ],
    )
    return EXIT_OK


def cmd_det(args) -> int:
    sig = args.signature
    try:
        u = parse_expression(_read_expression(args), sig)
    except ExpressionError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_PARSE
    t0 = time.perf_counter()
    cp = charpoly_recursive(u)[0]
    micros = int((time.perf_counter() - t0) * 1e6)
    doc = _result_document(sig, u, cp, "recursive", micros)
    _emit(doc, args, [doc["det"]])
    return EXIT_OK


def cmd_inverse(args) -> int:
    sig = args.signature
    try:
        u = parse_expression(_read_expression(args), sig)
    except ExpressionError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_PARSE
    t0 = time.perf_counter()
    try:
        inv = inverse(u)
    except SingularElementError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_SINGULAR
    e = Multivector.identity(sig)
    if u * inv != e or inv * u != e:
        print("error: inverse verification failed", file=sys.stderr)
        return EXIT_MISMATCH
    micros = int((time.perf_counter() - t0) * 1e6)
    cp = charpoly_recursive(u)[0]
    doc = _result_document(sig, u, cp, "recursive", micros, inverse_mv=inv)
    _emit(doc, args, [doc["inverse"]])
    return EXIT_OK


def _check_golden_case(case) -> list[str]:
    """Run one golden case through every applicable path; return mismatches."""
    problems = []
    sig = Signature(*case.signature)
    u = parse_expression(case.expr, sig)
    report = oracle_compare(u)
    if not report.ok:
        problems.append(f"{case.name}: coefficient paths disagree")
    got = report.results["recursive"]
    if case.expect_C is not None and tuple(got) != tuple(case.expect_C):
        problems.append(f"{case.name}: expected {case.expect_C}, got {got}")
    for k, val in case.expect_partial.items():
        if got[k - 1] != val:
            problems.append(f"{case.name}: C_({k}) expected {val}, got {got[k - 1]}")
    if case.reject_involutory:
        try:
            charpoly_involutory(u)
            problems.append(f"{case.name}: scalar-square precondition was not rejected")
        except NotInvolutoryError:
            pass
    return problems


def _load_corpus(path: str) -> list[dict]:
    cases = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                cases.append(json.loads(line))
    return cases


def cmd_verify(args) -> int:
    seed = args.seed
    report = {
        "max_n": args.max_n,
        "trials": args.trials,
        "seed": seed,
        "golden": {},
        "signatures": [],
        "total_mismatches": 0,
    }

    failures: list[str] = []
    cases = golden_cases(min(args.max_n, 6))
    for case in cases:
        failures.extend(_check_golden_case(case))
    report["golden"] = {"cases": len(cases), "mismatches": len(failures), "failures": failures}

    if args.corpus:
        corpus_failures = []
        corpus = _load_corpus(args.corpus)
        for idx, entry in enumerate(corpus):
            sig = Signature(*entry["signature"])
            u = parse_expression(entry["expr"], sig)
            cmp_report = oracle_compare(u)
            got = [format_rational(c) for c in cmp_report.results["recursive"]]
            if not cmp_report.ok:
                corpus_failures.append(f"case {idx}: coefficient paths disagree")
            if got != entry["expect_C"]:
                corpus_failures.append(
                    f"case {idx}: expected {entry['expect_C']}, got {got}"
                )
        report["corpus"] = {
            "cases": len(corpus),
            "mismatches": len(corpus_failures),
            "failures": corpus_failures,
        }

    for sig in all_signatures(args.max_n):
        rep = build_representation(sig)
        rng = random.Random(seed * 1_000_003 + sig.p * 131 + sig.q)
        mismatches = 0
        for _ in range(args.trials):
            u = random_multivector(sig, rng)
            if not oracle_compare(u, rep).ok:
                mismatches += 1
        report["signatures"].append(
            {"signature": [sig.p, sig.q], "trials": args.trials, "mismatches": mismatches}
        )

    total = report["golden"]["mismatches"] + sum(
        s["mismatches"] for s in report["signatures"]
    )
    if "corpus" in report:
        total += report["corpus"]["mismatches"]
    report["total_mismatches"] = total
    print(json.dumps(report, indent=2))
    return EXIT_MISMATCH if total else EXIT_OK


def cmd_bench(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    for m in methods:
        if m not in METHOD_NAMES:
            print(f"error: unknown method {m!r}", file=sys.stderr)
            return EXIT_UNSUPPORTED
    sig = args.signature
    applicable = _applicable_methods(sig)
    for m in methods:
        if m not in applicable:
            print(f"error: method {m!r} not applicable at n={sig.n}", file=sys.stderr)
            return EXIT_UNSUPPORTED

    rng = random.Random(args.seed)
    lines = ["method,trial,micros"]
    for trial in range(args.trials):
        u = random_multivector(sig, rng)
        reference = charpoly_recursive(u)[0].coeffs
        for method in methods:
            t0 = time.perf_counter()
            cp = _run_method(method, u)
            micros = int((time.perf_counter() - t0) * 1e6)
            if cp.coeffs != reference:
                print(f"error: method {method} disagrees on trial {trial}", file=sys.stderr)
                return EXIT_MISMATCH
            lines.append(f"{method},{trial},{micros}")
    print("\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffchar",
        description="Characteristic polynomial coefficients, determinants and "
        "inverses of Clifford algebra elements, computed exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_expr_command(name, help_text):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--signature", type=_signature_arg, required=True, metavar="p,q")
        cmd.add_argument("--json", action="store_true", help="emit a JSON document")
        cmd.add_argument("--text", action="store_true", help="emit plain text (default)")
        cmd.add_argument("--stdin", action="store_true", help="read the expression from stdin")
        cmd.add_argument("expression", nargs="?", help="multivector expression")
        return cmd

    charpoly = add_expr_command("charpoly", "all characteristic polynomial coefficients")
    charpoly.add_argument(
        "--method",
        choices=METHOD_NAMES + ("all",),
        default="recursive",
        help="computation path; 'all' cross-checks every applicable path",
    )
    charpoly.set_defaults(func=cmd_charpoly)

    det = add_expr_command("det", "determinant of an element")
    det.set_defaults(func=cmd_det)

    inv = add_expr_command("inverse", "inverse of an element")
    inv.set_defaults(func=cmd_inverse)

    verify = sub.add_parser("verify", help="cross-validate all paths on random elements")
    verify.add_argument("--max-n", type=int, default=6, dest="max_n")
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--seed", type=int, default=_default_seed())
    verify.add_argument("--corpus", help="JSON-lines file of extra cases")
    verify.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="time the coefficient paths")
    bench.add_argument("--signature", type=_signature_arg, required=True, metavar="p,q")
    bench.add_argument("--trials", type=int, default=10)
    bench.add_argument("--methods", default="recursive,closed")
    bench.add_argument("--seed", type=int, default=_default_seed())
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
