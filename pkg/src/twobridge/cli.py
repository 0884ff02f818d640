"""Command-line interface.

Every verb prints exact rational text (never floating point); --json
switches to a stable JSON rendering.  Answers are carried in the output,
never in the exit status: 0 means the command ran, 2 means malformed
input, 3 means an internal arithmetic or iteration error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verification
from .decide import ScanMode, has_umpp_epimorphism, is_null_homotopic, scan
from .reflections import CapExceededError, reduce_to_fundamental
from .seqs import (
    cyclic_s_sequence,
    decompose,
    format_sequence,
    s_sequence,
    t_sequence,
)
from .slopes import (
    ONE,
    ZERO,
    cf_expand,
    fundamental_endpoints,
    parse_slope,
    schubert_equivalent,
)
from .words import format_word, half_relator, relator

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_INTERNAL = 3


def _emit(args, text_lines, json_obj) -> None:
    if args.json:
        print(json.dumps(json_obj, indent=None, separators=(",", ":")))
    else:
        for line in text_lines:
            print(line)


def _cmd_word(args) -> int:
    r = parse_slope(args.r)
    u = relator(r)
    lines = [f"u = {format_word(u)}"]
    obj = {"r": str(r), "u": format_word(u)}
    if ZERO < r <= ONE:
        hat = half_relator(r)
        lines.append(f"uhat = {format_word(hat)}")
        obj["uhat"] = format_word(hat)
    _emit(args, lines, obj)
    return EXIT_OK


def _cmd_seq(args) -> int:
    r = parse_slope(args.r)
    if r.is_infinite or r <= ZERO:
        raise ValueError("seq needs a positive rational slope")
    s = s_sequence(r)
    cs = cyclic_s_sequence(r)
    lines = [f"S = {format_sequence(s)}", f"CS = {cs}"]
    obj = {"r": str(r), "s": list(s), "cs": list(cs.terms)}
    if len(cf_expand(r)) >= 2:
        t = t_sequence(r)
        lines.append(f"T = {format_sequence(t)}")
        obj["t"] = list(t)
    if ZERO < r < ONE:
        d = decompose(r)
        r1, r2 = fundamental_endpoints(r)
        lines += [
            f"S1 = {format_sequence(d.s1)}",
            f"S2 = {format_sequence(d.s2)}",
            f"r1 = {r1}",
            f"r2 = {r2}",
        ]
        obj.update({"s1": list(d.s1), "s2": list(d.s2),
                    "r1": str(r1), "r2": str(r2)})
    _emit(args, lines, obj)
    return EXIT_OK


def _cmd_reduce(args) -> int:
    s = parse_slope(args.s)
    r = parse_slope(args.r)
    trace = reduce_to_fundamental(s, r)
    lines = [f"representative = {trace.result}"]
    if args.trace:
        for refl, image in trace.steps:
            lines.append(f"  {refl} -> {image}")
    obj = {"s": str(s), "r": str(r), "representative": str(trace.result),
           "trace": trace.to_json_obj()}
    _emit(args, lines, obj)
    return EXIT_OK


def _cmd_null(args) -> int:
    s = parse_slope(args.s)
    r = parse_slope(args.r)
    verdict = is_null_homotopic(s, r)
    lines = [f"null-homotopic = {'true' if verdict.answer else 'false'}",
             f"representative = {verdict.canonical_representative}",
             f"route = {verdict.route.value}"]
    if args.trace:
        for refl, image in verdict.trace.steps:
            lines.append(f"  {refl} -> {image}")
    _emit(args, lines, verdict.to_json_obj())
    return EXIT_OK


def _cmd_epi(args) -> int:
    s = parse_slope(args.s)
    r = parse_slope(args.r)
    answer = has_umpp_epimorphism(s, r)
    lines = [f"epimorphism = {'true' if answer else 'false'}"]
    _emit(args, lines, {"s": str(s), "r": str(r), "answer": answer})
    return EXIT_OK


def _cmd_scan(args) -> int:
    r = parse_slope(args.r)
    mode = ScanMode.NULLHOMOTOPY if args.mode == "null" else ScanMode.EPIMORPHISM
    hits = scan(r, args.max_den, mode)
    lines = [" ".join(str(s) for s in hits)]
    _emit(args, lines, {"r": str(r), "mode": args.mode, "max_den": args.max_den,
                        "slopes": [str(s) for s in hits]})
    return EXIT_OK


def _cmd_equiv(args) -> int:
    r = parse_slope(args.r)
    r2 = parse_slope(args.r2)
    answer = schubert_equivalent(r, r2)
    lines = [f"equivalent = {'true' if answer else 'false'}"]
    _emit(args, lines, {"r": str(r), "r2": str(r2), "equivalent": answer})
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = verification.run_all(max_den=args.max_den)
    passed = all(res.passed for res in results)
    width = max(len(res.name) for res in results)
    lines = [
        f"{res.name.ljust(width)}  {'PASS' if res.passed else 'FAIL'}  {res.detail}"
        for res in results
    ]
    lines.append(f"overall: {'PASS' if passed else 'FAIL'}")
    obj = {"max_den": args.max_den,
           "checks": [{"name": res.name, "passed": res.passed,
                       "detail": res.detail} for res in results],
           "passed": passed}
    _emit(args, lines, obj)
    return EXIT_OK if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twobridge",
        description="Exact decision procedures for simple loops on 2-bridge spheres.")
    parser.add_argument("--json", action="store_true",
                        help="emit machine-readable JSON")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("word", help="relator word of a slope")
    p.add_argument("r")
    p.set_defaults(func=_cmd_word)

    p = sub.add_parser("seq", help="S/T-sequences and the (S1,S2) splitting")
    p.add_argument("r")
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("reduce", help="fundamental-domain representative of s at r")
    p.add_argument("s")
    p.add_argument("r")
    p.add_argument("--trace", action="store_true", help="print reflection steps")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("null", help="is the loop of slope s null-homotopic for K(r)?")
    p.add_argument("s")
    p.add_argument("r")
    p.add_argument("--trace", action="store_true", help="print reflection steps")
    p.set_defaults(func=_cmd_null)

    p = sub.add_parser("epi", help="is there an upper-meridian-pair-preserving "
                                   "epimorphism G(K(s)) -> G(K(r))?")
    p.add_argument("s")
    p.add_argument("r")
    p.set_defaults(func=_cmd_epi)

    p = sub.add_parser("scan", help="all slopes up to a denominator bound "
                                    "satisfying a predicate")
    p.add_argument("r")
    p.add_argument("--max-den", type=int, required=True)
    p.add_argument("--mode", choices=["null", "epi"], default="null")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("equiv", help="do two slopes present the same link?")
    p.add_argument("r")
    p.add_argument("r2")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("verify", help="run the invariant suites up to a bound")
    p.add_argument("--max-den", type=int, default=20)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (OverflowError, CapExceededError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
