"""Command-line front end: classify, bottom, character, block-family, verify.

Output is machine-readable JSON by default (sorted, byte-identical across
runs and thread counts); --output text prints a human summary.  Domain
errors exit 1 with a structured payload, internal faults exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from .exactnum import NotDivisible, Weight, monomial
from .rootdata import (
    Algebra,
    FamilyMismatch,
    all_sequences,
    b_odd,
    borel_from_sequence,
    weyl_elements,
)
from .hook import (
    HookPartition,
    HookViolation,
    UnsupportedCase,
    highest_weight_via_reflections,
    hook_partitions,
    parse_partition,
)
from .atyp import NotTame, is_tame
from .blocks import InternalError, WrongRegime, bottom_of_block, lambda_x_family
from .characters import (
    JDivisibilityFailure,
    canonical_levi_roots,
    denominators,
    euler_char_character,
    kw_character,
    monomial_text,
)

DOMAIN_ERRORS = (HookViolation, NotTame, WrongRegime, FamilyMismatch, UnsupportedCase, ValueError)
INTERNAL_ERRORS = (NotDivisible, JDivisibilityFailure, InternalError)


def _emit(payload: dict, as_json: bool, text_lines: list[str] | None = None) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for line in text_lines or [json.dumps(payload, sort_keys=True, indent=2)]:
            print(line)


def _cmd_classify(args) -> int:
    alg = Algebra.parse(args.algebra)
    lam = HookPartition.of(parse_partition(args.partition), alg.n, alg.m)
    report = is_tame(lam, alg, minus=args.minus)
    payload = {
        "command": "classify",
        "algebra": alg.label(),
        "partition": list(lam.parts),
        "minus": args.minus,
        "report": report.to_json(),
    }
    lines = [
        f"{alg.osp_name()}  lambda = {lam}"
        + (" (minus twin)" if args.minus else ""),
        f"atypicality k = {report.atypicality_k}",
        f"tame: {report.tame}",
    ]
    if report.tame:
        lines.append(f"T = {{{', '.join(str(r) for r in report.distinguished_T)}}}")
        lines.append(f"j = {report.j_lambda}")
        if report.witness_borel is not None:
            lines.append(f"witness Borel: {report.witness_borel.sequence}")
    _emit(payload, args.output == "json", lines)
    return 0


def _cmd_bottom(args) -> int:
    alg = Algebra.parse(args.algebra)
    lam = HookPartition.of(parse_partition(args.partition), alg.n, alg.m)
    trace = bottom_of_block(lam, alg)
    payload = {
        "command": "bottom",
        "algebra": alg.label(),
        "partition": list(lam.parts),
        "trace": trace.to_json(),
    }
    lines = [f"{alg.osp_name()}  lambda = {lam}"]
    for step in trace.steps:
        lines.append(
            f"  {step.before.display()}  --[b={step.chosen_b} -> {step.b_tilde}]-->  "
            f"{step.after.display()}"
        )
    lines.append(f"bottom: {trace.result}")
    _emit(payload, args.output == "json", lines)
    return 0


def _cmd_character(args) -> int:
    alg = Algebra.parse(args.algebra)
    lam = HookPartition.of(parse_partition(args.partition), alg.n, alg.m)
    cr = kw_character(lam, alg, minus=args.minus, staged=args.staged, threads=args.threads)
    payload = {"command": "character", "algebra": alg.label(), "partition": list(lam.parts)}
    payload.update(cr.to_json())
    k = is_tame(lam, alg, minus=args.minus).atypicality_k
    payload["k"] = k
    lines = [
        f"{alg.osp_name()}  L({cr.highest_weight.display()})",
        f"k = {k}, j = {cr.j_used}, Borel = {cr.borel_used.sequence}, "
        f"T = {{{', '.join(str(r) for r in cr.T_used)}}}",
        f"dim = {cr.dimension}",
        f"ch = {monomial_text(cr.character, alg.n, alg.m)}",
    ]
    _emit(payload, args.output == "json", lines)
    return 0


def _cmd_block_family(args) -> int:
    alg = Algebra.parse(args.algebra)
    lam = HookPartition.of(parse_partition(args.partition), alg.n, alg.m)
    family = lambda_x_family(lam, alg)
    payload = {
        "command": "block-family",
        "algebra": alg.label(),
        "partition": list(lam.parts),
        "X": [x for x, _ in family],
        "members": [{"x": x, "partition": list(p.parts)} for x, p in family],
    }
    lines = [f"{alg.osp_name()}  X = {{{', '.join(str(x) for x, _ in family)}}}"]
    for x, p in family:
        lines.append(f"  lambda({x}) = {p}")
    _emit(payload, args.output == "json", lines)
    return 0


def _verify_checks(alg: Algebra, max_size: int, staged: bool, threads: int):
    """Identity suite: trivial characters, Euler constants, the Euler/KW
    equality, and the denominator invariances."""
    checks = []
    zero = Weight.zero(alg.n, alg.m)

    trivial = HookPartition.of((), alg.n, alg.m)
    cr = kw_character(trivial, alg, staged=staged, threads=threads)
    checks.append(("trivial-kw-is-one", cr.character == monomial(zero, 1), f"j={cr.j_used}"))

    # Euler constants for the shapes with a pinned value
    m, n = alg.m, alg.n
    expected = None
    if alg.family == "B" and m == n:
        expected = 2**m
    elif alg.family == "D" and m == n:
        expected = 2 ** (m - 1)
    elif alg.family == "D" and m == n + 1:
        expected = 2**n
    if expected is not None:
        b = b_odd(alg)
        levi = b.simple_roots[:-1]
        poly = euler_char_character(levi, zero, b, staged=staged, threads=threads)
        checks.append(("euler-trivial-constant", poly == monomial(zero, expected), f"= {expected}"))

    # Euler characteristic equals the character for small tame lambdas
    ok = True
    detail = []
    for lam in hook_partitions(alg.n, alg.m, max_size):
        report = is_tame(lam, alg)
        if not report.tame:
            continue
        crx = kw_character(lam, alg, staged=staged, threads=threads)
        b = report.witness_borel if report.atypicality_k else b_odd(alg)
        levi = canonical_levi_roots(b, report)
        lam_b = highest_weight_via_reflections(lam, b)
        euler = euler_char_character(levi, lam_b, b, staged=staged, threads=threads)
        if euler != crx.character:
            ok = False
            detail.append(str(lam))
    checks.append(("euler-equals-kw", ok, ",".join(detail) or f"|lambda| <= {max_size}"))

    # denominator invariances
    d0_ref, d1_ref = denominators(borel_from_sequence(alg, next(iter(all_sequences(alg)))))
    same_d1 = True
    same_d0 = True
    for seq in all_sequences(alg):
        d0, d1 = denominators(borel_from_sequence(alg, seq))
        same_d1 = same_d1 and d1 == d1_ref
        same_d0 = same_d0 and (d0 == d0_ref or d0 == -1 * d0_ref)
    checks.append(("odd-denominator-borel-independent", same_d1, ""))
    checks.append(("even-denominator-sign-stable", same_d0, ""))

    w_inv = all(
        d1_ref.map_exponents(w.apply_to_exponent) == d1_ref for w in weyl_elements(alg)
    )
    checks.append(("odd-denominator-weyl-invariant", w_inv, ""))
    return checks


def _cmd_verify(args) -> int:
    algebras = []
    if args.algebra:
        algebras.append(Algebra.parse(args.algebra))
    else:
        for m in range(1, args.max_rank + 1):
            for n in range(1, args.max_rank + 1):
                algebras.append(Algebra("B", m, n))
                if m >= 2:
                    algebras.append(Algebra("D", m, n))
    results = []
    all_ok = True
    for alg in algebras:
        for name, ok, detail in _verify_checks(alg, args.max_size, args.staged, args.threads):
            results.append({"algebra": alg.label(), "check": name, "pass": ok, "detail": detail})
            all_ok = all_ok and ok
    payload = {"command": "verify", "ok": all_ok, "checks": results}
    lines = [
        f"[{'PASS' if r['pass'] else 'FAIL'}] {r['algebra']}  {r['check']}"
        + (f"  ({r['detail']})" if r["detail"] else "")
        for r in results
    ]
    lines.append("all checks passed" if all_ok else "FAILURES present")
    _emit(payload, args.output == "json", lines)
    return 0 if all_ok else 1


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ospchar",
        description="Tame-module classification and exact character evaluation "
        "for ortho-symplectic Lie superalgebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, partition=True):
        p.add_argument("--algebra", required=True, help="B:m:n or D:m:n")
        if partition:
            p.add_argument("--partition", required=True, help="comma-separated parts, 0 for trivial")
        p.add_argument("--output", choices=("json", "text"), default="json")

    p = sub.add_parser("classify", help="tameness report for a highest weight")
    common(p)
    p.add_argument("--minus", action="store_true", help="use the minus twin (family D)")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("bottom", help="descend to the tame bottom of the block")
    common(p)
    p.set_defaults(func=_cmd_bottom)

    p = sub.add_parser("character", help="evaluate the character formula")
    common(p)
    p.add_argument("--minus", action="store_true")
    p.add_argument("--threads", type=_positive_int, default=1)
    p.add_argument("--staged", action="store_true", help="staged Weyl summation kernel")
    p.set_defaults(func=_cmd_character)

    p = sub.add_parser("block-family", help="the finite tame family of a D-type k=1 block")
    common(p)
    p.set_defaults(func=_cmd_block_family)

    p = sub.add_parser("verify", help="run the built-in identity suite")
    p.add_argument("--algebra", help="restrict to one algebra")
    p.add_argument("--max-rank", type=int, default=2, help="rank sweep bound without --algebra")
    p.add_argument("--max-size", type=int, default=4, help="partition size bound for equalities")
    p.add_argument("--threads", type=_positive_int, default=1)
    p.add_argument("--staged", action="store_true")
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DOMAIN_ERRORS as exc:
        _fail(args, exc, 1)
        return 1
    except INTERNAL_ERRORS as exc:
        _fail(args, exc, 2)
        return 2


def _fail(args, exc: Exception, code: int) -> None:
    payload = {"error": {"code": type(exc).__name__, "message": str(exc)}}
    as_json = getattr(args, "output", "json") == "json"
    if as_json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")), file=sys.stderr)
    else:
        print(f"error [{type(exc).__name__}]: {exc}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
