"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 invalid input or unsolvable.
All integers of unbounded size are emitted in JSON as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Sequence

from . import solver
from .bigmatrix import BigMat
from .cayham import gch_check
from .eisenstein import EisInt
from .errors import MatDiophError, Unsolvable, VerificationError
from .homopoly import HomoPoly
from .verifier import is_nontrivial, lemma_scan, verify_equation

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {text}")
    return v


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def _eisint(text: str) -> EisInt:
    try:
        return EisInt.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _poly(text: str) -> HomoPoly:
    try:
        return HomoPoly.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="matdioph",
        description="Integer-matrix solutions of X^n + Y^p = Z^q, with exact verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="construct and verify a solution for (n, p, q)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--q", type=_positive, required=True)
    p.add_argument("--r", type=int, help="r parameter of the 2x2 family (npq route)")
    p.add_argument("--s", type=int, help="s parameter of the 2x2 family (npq route)")
    p.add_argument("--base", type=_eisint, help="base element 'a,b' or 'a+b*w' (general route)")
    p.add_argument("--L", type=_positive, dest="L", help="common power, a multiple of lcm(n,p,q)")
    p.add_argument("--route", choices=("auto", "npq", "general"), default="auto")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", type=Path, help="write matrices and index.json to this directory")

    p = sub.add_parser("verify", help="check X^n + Y^p = Z^q for matrix files")
    p.add_argument("--x", type=Path, required=True)
    p.add_argument("--y", type=Path, required=True)
    p.add_argument("--z", type=Path, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--q", type=_positive, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("lemma", help="K-multiplicity of (x+y)^m - x^m - y^m over a range of m")
    p.add_argument("--range", type=_range, required=True, dest="mrange", metavar="LO..HI")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("chcheck", help="evaluate the two-variable Cayley-Hamilton identity")
    p.add_argument("--poly", type=_poly, required=True, help="coefficients 'c0,c1,...,cd'")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("family", help="emit several solutions with exponents (m, m, m)")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--size", choices=("2", "extended"), default="2")
    p.add_argument("--selector", help="divisor factors, e.g. 'x+y,K' or 'K^2' or 'C'")
    p.add_argument("--seed", type=int, help="draw (r, s) at random from [-1000, 1000]^2")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", type=Path)
    return parser


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _load_matrix(path: Path) -> BigMat:
    with open(path) as fh:
        return BigMat.from_json_rows(json.load(fh))


def _checked_json(triple: solver.SolutionTriple) -> tuple[dict, bool]:
    # re-verify here so "verified" never comes from the constructor
    report = verify_equation(triple.X, triple.Y, triple.Z, triple.n, triple.p, triple.q)
    ok = report.holds and is_nontrivial(report)
    return triple.to_json(verified=ok), ok


def _write_out(directory: Path, payloads: list[dict]) -> dict:
    directory.mkdir(parents=True, exist_ok=True)
    index = []
    for i, payload in enumerate(payloads):
        entry = {k: v for k, v in payload.items() if k not in ("X", "Y", "Z")}
        prefix = f"{i:03d}_" if len(payloads) > 1 else ""
        for name in ("X", "Y", "Z"):
            fname = f"{prefix}{name}.json"
            (directory / fname).write_text(json.dumps(payload[name]) + "\n")
            entry[name] = fname
        index.append(entry)
    doc = {"solutions": index}
    (directory / "index.json").write_text(_dump(doc) + "\n")
    return doc


def _print_triple(t: solver.SolutionTriple, ok: bool, out) -> None:
    print(f"X^{t.n} + Y^{t.p} = Z^{t.q}   ({t.dim}x{t.dim}, route {t.provenance['route']})", file=out)
    for name, mat in (("X", t.X), ("Y", t.Y), ("Z", t.Z)):
        print(f"{name} =", file=out)
        print(mat, file=out)
    print("verified: " + ("yes" if ok else "NO"), file=out)


def _cmd_solve(args, out) -> int:
    if args.route == "npq" and (args.base is not None or args.L is not None):
        raise ValueError("--base and --L apply to the general route only")
    if args.route == "general" and (args.r is not None or args.s is not None):
        raise ValueError("--r and --s apply to the npq route only")
    try:
        triple = solver.solve(
            args.n, args.p, args.q, route=args.route, r=args.r, s=args.s,
            base=args.base, L=args.L,
        )
    except Unsolvable as exc:
        if args.json:
            print(_dump({"n": args.n, "p": args.p, "q": args.q, "unsolvable": str(exc),
                         "evidence": exc.evidence, "verified": False}), file=out)
        else:
            print(f"UNSOLVABLE: {exc}", file=out)
            print(json.dumps(exc.evidence), file=out)
        return EXIT_INVALID
    payload, ok = _checked_json(triple)
    if args.out is not None:
        _write_out(args.out, [payload])
    if args.json:
        print(_dump(payload), file=out)
    else:
        _print_triple(triple, ok, out)
    return EXIT_OK if ok else EXIT_FAILED


def _cmd_verify(args, out) -> int:
    x, y, z = _load_matrix(args.x), _load_matrix(args.y), _load_matrix(args.z)
    report = verify_equation(x, y, z, args.n, args.p, args.q)
    if args.json:
        print(_dump(report.to_json(timing=False)), file=out)
    else:
        print(report.summary(), file=out)
    return EXIT_OK if report.holds else EXIT_FAILED


def _cmd_lemma(args, out) -> int:
    lo, hi = args.mrange
    reports = lemma_scan(lo, hi)
    if args.json:
        print(_dump([r.to_json() for r in reports]), file=out)
        return EXIT_OK

    def claim(v):
        return "-" if v is None else ("holds" if v else "FAILS")

    print(f"{'m':>5} {'m%6':>4} {'mult':>5} {'eq(1)':>6} {'eq(2)':>6}  quotient degrees", file=out)
    for r in reports:
        print(
            f"{r.m:>5} {r.residue:>4} {r.computed_multiplicity:>5} "
            f"{claim(r.paper_claim_eq1):>6} {claim(r.paper_claim_eq2):>6}  {r.quotient_degrees}",
            file=out,
        )
    flagged = [r.m for r in reports if r.discrepancy]
    if flagged:
        shown = ", ".join(map(str, flagged[:10])) + (" ..." if len(flagged) > 10 else "")
        print(f"K^2 does not divide T_m for m = {shown}", file=out)
    return EXIT_OK


def _cmd_chcheck(args, out) -> int:
    report = gch_check(args.poly, args.r, args.s)
    if args.json:
        print(_dump(report.to_json(timing=False)), file=out)
    else:
        print(report.summary(), file=out)
    return EXIT_OK if report.holds else EXIT_FAILED


def _family_params(args) -> list[tuple[int, int]]:
    if args.seed is None:
        return [(i, i + 1) for i in range(1, args.count + 1)]
    rng = random.Random(args.seed)
    params = []
    while len(params) < args.count:
        r, s = rng.randint(-1000, 1000), rng.randint(-1000, 1000)
        if (r, s) != (0, 0):
            params.append((r, s))
    return params


def _cmd_family(args, out) -> int:
    if args.size == "extended":
        if not args.selector:
            raise ValueError("--size extended needs --selector")
        sel = solver.Selector.parse(args.selector)
        build = lambda r, s: solver.extended_solution(args.m, sel, r, s)  # noqa: E731
    else:
        if args.selector:
            raise ValueError("--selector applies to --size extended only")
        build = lambda r, s: solver.power_identity(r, s, args.m)  # noqa: E731
    payloads, all_ok = [], True
    triples = [build(r, s) for r, s in _family_params(args)]
    for t in triples:
        payload, ok = _checked_json(t)
        payloads.append(payload)
        all_ok &= ok
    if args.out is not None:
        _write_out(args.out, payloads)
    if args.json:
        print(_dump({"m": args.m, "count": len(payloads), "solutions": payloads}), file=out)
    else:
        for t, payload in zip(triples, payloads):
            _print_triple(t, payload["verified"], out)
            print(file=out)
    return EXIT_OK if all_ok else EXIT_FAILED


_COMMANDS = {
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "lemma": _cmd_lemma,
    "chcheck": _cmd_chcheck,
    "family": _cmd_family,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (MatDiophError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
