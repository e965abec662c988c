"""Command line entry point: ``kohnert <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bijection, verify
from .diagrams import DEFAULT_MAX_STATES, Diagram, kd_closure, sorted_closure
from .errors import InputError, KohnertError
from .perm import DEFAULT_MAX_N, parse_permutation, rothe_diagram
from .poly import bjs_polynomial, kohnert_polynomial, schubert
from .words import (
    CompatiblePair,
    compatible_sequences,
    is_reduced,
    match_to_super_yamanouchi,
    parse_word,
    reduced_words,
    super_yamanouchi,
    word_to_permutation,
)

METHODS = {"schubert": lambda w, m: schubert(w), "bjs": bjs_polynomial, "kohnert": kohnert_polynomial}


def _emit(args, text: str, data) -> None:
    if args.json:
        print(json.dumps(data))
    else:
        print(text)


def _perm(args, text):
    return parse_permutation(text, args.max_n)


def cmd_compute(args) -> int:
    w = _perm(args, args.w)
    p = METHODS[args.method](w, args.max_states)
    _emit(args, str(p), {"permutation": str(w), "method": args.method, "polynomial": p.to_json(w.n)})
    return 0


def cmd_diagrams(args) -> int:
    w = _perm(args, args.w)
    every = sorted_closure(rothe_diagram(w), args.max_states)
    size = args.page_size or len(every) or 1
    pages = max(1, -(-len(every) // size))
    if not 1 <= args.page <= pages:
        raise InputError(f"page {args.page} out of range 1..{pages}")
    start = (args.page - 1) * size
    shown = every[start:start + size]
    if args.plot:
        from .report import plot_diagrams

        plot_diagrams(Path(args.plot), shown, title=f"KD({w})")
    if args.json:
        print(json.dumps({
            "permutation": str(w),
            "count": len(every),
            "page": args.page,
            "pages": pages,
            "diagrams": [d.to_json() for d in shown],
        }))
        return 0
    width, height = w.n, max(w.n - 1, 1)
    lines = [f"{len(every)} diagrams for {w} (page {args.page}/{pages})"]
    for i, d in enumerate(shown, start + 1):
        lines.append(f"#{i}")
        lines.append(d.ascii(width, height))
    print("\n".join(lines))
    return 0


def _pair_json(pair: CompatiblePair, t: Diagram) -> dict:
    return {"rho": list(pair.rho.letters), "alpha": list(pair.alpha.letters), "diagram": t.to_json()}


def cmd_forward(args) -> int:
    pair = CompatiblePair(parse_word(args.rho), parse_word(args.alpha))
    n = args.n or max(pair.rho.letters, default=0) + 1
    if n > args.max_n:
        raise InputError(f"size {n} exceeds --max-n {args.max_n}")
    t = bijection.forward(pair, n, strategy=args.swap, debug=args.debug_checks, max_states=args.max_states)
    _emit(args, f"{t}\n{t.ascii()}", _pair_json(pair, t))
    return 0


def _read_diagram(path: str) -> Diagram:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except ValueError:
        raise InputError(f"{path} is not JSON") from None
    # output of `forward --json` nests the diagram
    if isinstance(data, dict) and "cells" not in data and "diagram" in data:
        data = data["diagram"]
    return Diagram.from_json(data)


def cmd_backward(args) -> int:
    t = _read_diagram(args.diagram)
    w = _perm(args, args.w)
    pair = bijection.backward(t, w, strategy=args.swap, debug=args.debug_checks, max_states=args.max_states)
    a_t = bijection.alpha_of(t, w.n)
    data = _pair_json(pair, t) | {"alpha_of_t": list(a_t.letters)}
    _emit(args, f"rho: {pair.rho}\nalpha: {pair.alpha}\nalpha(T): {a_t}", data)
    return 0


def _rho_for(args, w):
    if not args.rho:
        raise InputError(f"--kind {args.kind} needs --rho")
    rho = parse_word(args.rho)
    if not is_reduced(rho, w.n) or word_to_permutation(rho, w.n) != w:
        raise InputError(f"({rho}) is not a reduced word for {w}")
    return rho


def cmd_words(args) -> int:
    w = _perm(args, args.w)
    if args.kind == "red":
        words = reduced_words(w, args.max_states)
        _emit(args, "\n".join(str(x) for x in words), {"permutation": str(w), "words": [list(x.letters) for x in words]})
    elif args.kind == "superY":
        pi = super_yamanouchi(w)
        _emit(args, str(pi), {"permutation": str(w), "word": list(pi.letters)})
    elif args.kind == "compatible":
        rho = _rho_for(args, w)
        seqs = compatible_sequences(rho)
        _emit(args, "\n".join(str(a) for a in seqs), {"rho": list(rho.letters), "alphas": [list(a.letters) for a in seqs]})
    else:
        rho = _rho_for(args, w)
        pi = super_yamanouchi(w)
        m = match_to_super_yamanouchi(rho, pi, w.n)
        text = "\n".join(f"{i} -> {m[i]}" for i in range(1, len(m) + 1))
        _emit(args, f"pi: {pi}\n{text}", {"rho": list(rho.letters), "pi": list(pi.letters), "p": list(m.p)})
    return 0


def cmd_verify(args) -> int:
    checks = verify.parse_checks(args.checks)
    if args.fixtures_only:
        checks, perms, scope = ["fixtures"], [], "fixtures"
    elif args.w:
        w = _perm(args, args.w)
        perms, scope = [w], str(w)
    elif args.all_n is not None:
        if not 1 <= args.all_n <= args.max_all_n:
            raise InputError(f"--all-n must be in 1..{args.max_all_n}")
        perms, scope = verify.scope_all(args.all_n), f"S{args.all_n}"
    else:
        raise InputError("give --w, --all-n or --fixtures-only")
    opt = verify.Options(max_states=args.max_states, debug=args.debug_checks, strategy=args.swap)
    report = verify.verify(perms, checks, scope, opt, workers=args.workers)
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        print("\n".join(report.lines()))
    print(f"wall time: {report.wall_time:.2f}s", file=sys.stderr)
    if args.report_dir:
        from .report import write_report

        sizes = {str(w): len(kd_closure(rothe_diagram(w), args.max_states)) for w in perms}
        for p in write_report(Path(args.report_dir), report, sizes):
            print(f"wrote {p}", file=sys.stderr)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES, help="state budget for searches")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--debug-checks", action="store_true", help="verify closure membership at every step")
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="largest accepted permutation size")
    common.add_argument("--swap", choices=("replay", "pairing"), default=bijection.DEFAULT_STRATEGY,
                        help="column swap used by the bijection")

    parser = argparse.ArgumentParser(prog="kohnert", description="Kohnert diagrams and Schubert polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="Schubert polynomial of a permutation")
    p.add_argument("w")
    p.add_argument("--method", choices=tuple(METHODS), default="kohnert")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("diagrams", parents=[common], help="list the Kohnert diagrams of a permutation")
    p.add_argument("w")
    p.add_argument("--page", type=int, default=1)
    p.add_argument("--page-size", type=int, default=50, help="0 shows everything")
    p.add_argument("--plot", metavar="FILE", help="also render the page as an image")
    p.set_defaults(func=cmd_diagrams)

    p = sub.add_parser("forward", parents=[common], help="compatible pair to Kohnert diagram")
    p.add_argument("--rho", required=True, help="comma-separated letters")
    p.add_argument("--alpha", required=True)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_forward)

    p = sub.add_parser("backward", parents=[common], help="Kohnert diagram to compatible pair")
    p.add_argument("diagram", help='JSON file {"cells": [[r, c], ...]} or - for stdin')
    p.add_argument("w")
    p.set_defaults(func=cmd_backward)

    p = sub.add_parser("words", parents=[common], help="reduced and compatible words")
    p.add_argument("w")
    p.add_argument("--kind", choices=("red", "superY", "compatible", "matching"), default="red")
    p.add_argument("--rho")
    p.set_defaults(func=cmd_words)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--w")
    p.add_argument("--all-n", type=int)
    p.add_argument("--max-all-n", type=int, default=6)
    p.add_argument("--checks", default="all", help=f"comma list of {','.join(verify.CHECKS)} or all")
    p.add_argument("--fixtures-only", action="store_true")
    p.add_argument("--report-dir", metavar="DIR", help="write report.tsv and figures here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.max_states < 1 or args.workers < 1:
            raise InputError("--max-states and --workers must be positive")
        return args.func(args)
    except KohnertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
