"""Command line: ``constacyclic factor | ring-info | code ... | theorems run``.

Exit codes: 0 success (failing claims are findings, not errors), 1 usage,
2 mathematical precondition, 3 cap exceeded, 4 file or schema problem.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .codes import (
    DEFAULT_CAP,
    ConstaCodeR,
    LinearCodeFp,
    build_from_triple,
    check_divisors,
    dual_fp,
    dual_R,
    is_invariant,
    load_code,
    min_distance,
    save_code,
    single_generator,
    triple_from_polys,
)
from .errors import ConstacyclicError, ParameterError
from .gf_prime import check_prime, validate_params
from .graymaps import gray_image
from .polyring import factor_poly, parse_poly
from .ring_r import RingContext, idempotent_report, lambda_unit
from .theoremlab import CLAIMS, DEFAULT_GRID, Caps, run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(text: str, out=None):
    if not text.endswith("\n"):
        text += "\n"
    if out:
        try:
            with open(out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise _IOFailure(f"cannot write {out}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)


class _IOFailure(ConstacyclicError):
    exit_code = 4


def _save(code, path):
    try:
        save_code(code, path)
    except OSError as exc:
        raise _IOFailure(f"cannot write {path}: {exc.strerror}") from None


# -- subcommands -------------------------------------------------------------

def cmd_factor(args):
    check_prime(args.p, allow_two=True)
    f = parse_poly(args.poly, args.p)
    if f.is_zero():
        raise ParameterError("cannot factor the zero polynomial")
    fac = factor_poly(f, seed=args.seed)
    if args.format == "json":
        doc = {
            "p": args.p,
            "poly": str(f),
            "unit": fac.unit,
            "factors": [{"factor": str(g), "coeffs": list(g.coeffs), "multiplicity": e} for g, e in fac.factors],
        }
        _emit(json.dumps(doc, indent=2))
    else:
        _emit(f"{f} = {fac}")


def cmd_ring_info(args):
    validate_params(args.p, args.k, 1)
    if args.k < 2:
        raise ParameterError(f"ring-info needs k >= 2 (sigma2 uses u^(k-1)), got k = {args.k}")
    ctx = RingContext(args.p, args.k)
    rep = idempotent_report(ctx)
    verdicts = rep.verdicts
    if args.format == "json":
        doc = {
            "p": args.p,
            "k": args.k,
            "sigma": [list(s.coeffs) for s in rep.sigma],
            "lambda": list(lambda_unit(ctx).coeffs),
            "verdicts": verdicts,
            "sigma2_square": list(rep.squares[1].coeffs),
        }
        _emit(json.dumps(doc, indent=2))
        return
    lines = [f"R = F_{args.p}[u]/<u^{args.k + 1} - u>"]
    for i, s in enumerate(rep.sigma, 1):
        lines.append(f"sigma{i} = {s}")
    lines.append(f"lambda = {lambda_unit(ctx)}")
    width = max(map(len, verdicts))
    for name, ok in verdicts.items():
        lines.append(f"  {name:<{width}}  {'true' if ok else 'false'}")
    if rep.squares[1] != rep.sigma[1]:
        lines.append(f"sigma2^2 = {rep.squares[1]} (differs from sigma2 by {rep.sigma2_square_residual()})")
    _emit("\n".join(lines))


def _code_summary(code) -> str:
    if isinstance(code, LinearCodeFp):
        return f"F_{code.p} code, length {code.m}, dimension {code.dim}, size {code.size}"
    return (f"code over R (p={code.p}, k={code.ctx.k}), length {code.m}, "
            f"F_p-dimension {code.dim}, size {code.size}")


def cmd_code_build(args):
    validate_params(args.p, args.k, args.m)
    if args.k != 2:
        raise ParameterError("code build needs k = 2 (sigma decomposition)")
    hs = [parse_poly(h, args.p) for h in (args.h1, args.h2, args.h3)]
    check_divisors(*hs, args.m)
    ctx = RingContext(args.p, args.k)
    t = triple_from_polys(*hs, args.m)
    code = build_from_triple(t, ctx)
    h = single_generator(t, ctx)
    if args.out:
        _save(code, args.out)
    lines = [f"|L| = {code.size}", f"h(a) = {h}"]
    if args.out:
        lines.append(f"wrote {args.out}")
    _emit("\n".join(lines))


def cmd_code_dual(args):
    code = load_code(args.input)
    d = dual_fp(code) if isinstance(code, LinearCodeFp) else dual_R(code)
    if args.out:
        _save(d, args.out)
    _emit(_code_summary(d) + (f"\nwrote {args.out}" if args.out else ""))


def cmd_code_gray(args):
    code = load_code(args.input)
    if not isinstance(code, ConstaCodeR):
        raise ParameterError("the Gray map applies to codes over R")
    img = gray_image(code)
    _emit(json.dumps([list(map(int, r)) for r in img.basis]))


def cmd_code_distance(args):
    code = load_code(args.input)
    _emit(f"d = {min_distance(code, cap=args.cap)}")


def cmd_code_check(args):
    code = load_code(args.input)
    kinds = ("alpha", "beta") if isinstance(code, LinearCodeFp) else ("gamma", "alpha", "beta")
    names = {"gamma": "gamma-invariant", "alpha": "alpha-invariant (cyclic)", "beta": "beta-invariant (negacyclic)"}
    lines = [_code_summary(code)]
    lines += [f"{names[kd]}: {'true' if is_invariant(code, kd) else 'false'}" for kd in kinds]
    _emit("\n".join(lines))


def cmd_theorems_run(args):
    grid = [(p, k, m) for p in args.p for k in args.k for m in args.m]
    for p, k, m in grid:
        validate_params(p, k, m)
    claims = None
    if args.id:
        claims = [c.strip() for part in args.id for c in part.split(",") if c.strip()]
        unknown = [c for c in claims if c not in CLAIMS]
        if unknown:
            raise UsageError(f"unknown claim id(s): {', '.join(unknown)}")
    caps = Caps()
    if args.max_vectors is not None:
        caps = replace(caps, vectors=args.max_vectors)
    report = run_suite(grid, seed=args.seed, caps=caps, claims=claims)
    _emit(report.to_json() if args.format == "json" else report.to_text(), args.out)


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="constacyclic", description="Constacyclic codes over F_p[u]/<u^(k+1) - u>.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    f = sub.add_parser("factor", help="factor a polynomial over F_p")
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--poly", required=True, help="e.g. a^7-1")
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--format", choices=("text", "json"), default="text")
    f.set_defaults(func=cmd_factor)

    r = sub.add_parser("ring-info", help="idempotents and lambda of R")
    r.add_argument("--p", type=int, required=True)
    r.add_argument("--k", type=int, required=True)
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.set_defaults(func=cmd_ring_info)

    c = sub.add_parser("code", help="build and inspect codes")
    csub = c.add_subparsers(dest="action", required=True, parser_class=_Parser)
    b = csub.add_parser("build", help="code from generator polynomials h1, h2, h3")
    for name in ("p", "k", "m"):
        b.add_argument(f"--{name}", type=int, required=True)
    b.add_argument("--h1", required=True, help="divisor of a^m - 1")
    b.add_argument("--h2", required=True, help="divisor of a^m + 1")
    b.add_argument("--h3", required=True, help="divisor of a^m + 1")
    b.add_argument("--out", help="write the code file here")
    b.set_defaults(func=cmd_code_build)
    for name, fn, helptext in (
        ("dual", cmd_code_dual, "Euclidean dual"),
        ("gray", cmd_code_gray, "Gray image generator matrix"),
        ("distance", cmd_code_distance, "minimum distance"),
        ("check", cmd_code_check, "shift-invariance verdicts"),
    ):
        s = csub.add_parser(name, help=helptext)
        s.add_argument("--in", dest="input", required=True)
        if name == "dual":
            s.add_argument("--out")
        if name == "distance":
            s.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max codewords to enumerate")
        s.set_defaults(func=fn)

    t = sub.add_parser("theorems", help="mechanical claim checks")
    tsub = t.add_subparsers(dest="action", required=True, parser_class=_Parser)
    run = tsub.add_parser("run", help="run claims on a parameter grid")
    run.add_argument("--p", type=_int_list, default=sorted({g[0] for g in DEFAULT_GRID}))
    run.add_argument("--k", type=_int_list, default=sorted({g[1] for g in DEFAULT_GRID}))
    run.add_argument("--m", type=_int_list, default=sorted({g[2] for g in DEFAULT_GRID}))
    run.add_argument("--id", action="append", help="claim id(s), comma-separated or repeated")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--max-vectors", type=int, help="exhaustive enumeration limit for word spaces")
    run.add_argument("--format", choices=("text", "json"), default="text")
    run.add_argument("--out")
    run.set_defaults(func=cmd_theorems_run)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except ConstacyclicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
