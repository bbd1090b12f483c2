"""Command-line interface.

Exit status: 0 when the check holds or the command succeeds, 1 when a
verification comes out false, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from spgen import constructions as cons
from spgen.completion import CompletionFailed, complete_nilpotent
from spgen.genverify import (
    Certificate,
    consistent_check,
    generates_sp,
    vandermonde_closure,
    verify_certificate,
)
from spgen.linalg import Mat, charpoly
from spgen.sp_lie import ad_matrix, is_member, make_context

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _load(path: str, parse):
    data = _load_json(path)
    try:
        return parse(data)
    except (ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _write_json(path: str, data) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")


def _fmt(m: Mat) -> str:
    cells = [[str(v) for v in m.row(i)] for i in range(m.rows)]
    width = max(len(c) for r in cells for c in r)
    return "\n".join("  [" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)


class Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.data: dict = {}
        self.lines: list[str] = []

    def text(self, line: str = "") -> None:
        self.lines.append(line)

    def flush(self) -> None:
        if self.as_json:
            print(json.dumps(self.data, indent=1))
        else:
            print("\n".join(self.lines))


def _context(n: int):
    if n < 1:
        raise InputError("--n must be >= 1")
    return make_context(n)


def cmd_basis(args, out: Output) -> int:
    ctx = _context(args.n)
    out.data = {"n": ctx.n, "dimension": ctx.dim,
                "basis": [b.to_json() for b in ctx.basis]}
    out.text(f"sp_{ctx.size}: dimension {ctx.dim}")
    for i, b in enumerate(ctx.basis):
        out.text(f"b{i}:")
        out.text(_fmt(b))
    return EXIT_OK


def _report_generation(ctx, x, y, out: Output) -> int:
    ok, result = generates_sp(ctx, [x, y])
    if ok:
        verified = verify_certificate(result)
        out.data.update(generates=True, certificate_verified=verified,
                        dimension=ctx.dim, certificate=result.to_json())
        out.text(f"generates sp_{ctx.size}: yes (dimension {ctx.dim}), "
                 f"certificate {'verified' if verified else 'FAILED verification'}")
        return EXIT_OK if verified else EXIT_FALSE
    out.data.update(generates=False, dimension=result.dimension, target=ctx.dim)
    out.text(f"generates sp_{ctx.size}: no (closure dimension {result.dimension} "
             f"of {ctx.dim})")
    return EXIT_FALSE


def cmd_construct(args, out: Output) -> int:
    ctx = _context(args.n)
    pair = cons.construct(args.kind, args.n)
    out.data = {"pair": pair.to_json()}
    out.text(f"{args.kind} pair for sp_{ctx.size}")
    out.text("x =")
    out.text(_fmt(pair.x))
    out.text("y =")
    out.text(_fmt(pair.y))
    if args.out:
        _write_json(args.out, pair.to_json())
        out.text(f"pair written to {args.out}")
    if args.verify:
        return _report_generation(ctx, pair.x, pair.y, out)
    return EXIT_OK


def cmd_verify(args, out: Output) -> int:
    pair = _load(args.pair, cons.GeneratorPair.from_json)
    if args.n is not None and args.n != pair.n:
        raise InputError(f"--n {args.n} does not match pair n = {pair.n}")
    ctx = _context(pair.n)
    for name, v in (("x", pair.x), ("y", pair.y)):
        if v.shape != (ctx.size, ctx.size) or v.is_cyclotomic:
            raise InputError(f"{args.pair}: {name} must be a rational "
                             f"{ctx.size}x{ctx.size} matrix")
        if not is_member(ctx, v):
            out.data = {"generates": False, "reason": f"{name} not in sp"}
            out.text(f"{name} is not in sp_{ctx.size}")
            return EXIT_FALSE
    out.data = {"n": pair.n, "tag": pair.tag}
    return _report_generation(ctx, pair.x, pair.y, out)


def _load_member(path: str, ctx, what: str) -> Mat:
    m = _load(path, Mat.from_json)
    if m.shape != (ctx.size, ctx.size) or m.is_cyclotomic:
        raise InputError(f"{path}: {what} must be a rational {ctx.size}x{ctx.size} matrix")
    if not is_member(ctx, m):
        raise InputError(f"{path}: {what} is not in sp_{ctx.size}")
    return m


def cmd_consistent(args, out: Output) -> int:
    ctx = _context(args.n)
    t = _load_member(args.t, ctx, "t") if args.t else cons.lemma3_T(args.n)
    ok = consistent_check(ctx, t)
    p = charpoly(ad_matrix(ctx, t))
    out.data = {"n": ctx.n, "consistent": ok, "ad_charpoly": p.to_json()}
    out.text(f"consistent: {'yes' if ok else 'no'}")
    out.text(f"charpoly(ad t) = {p!r}")
    return EXIT_OK if ok else EXIT_FALSE


def _full_root_sum(ctx) -> Mat:
    x = Mat.zeros(ctx.size)
    for v in ctx.root_vectors():
        x = x + v
    return x


def cmd_vandermonde(args, out: Output) -> int:
    ctx = _context(args.n)
    if args.t:
        t = _load_member(args.t, ctx, "t")
    else:
        t = Mat.diag(cons.example2_diagonal(cons.example2_weights(args.n)))
    x = _load_member(args.x, ctx, "x") if args.x else _full_root_sum(ctx)
    if not consistent_check(ctx, t):
        out.data = {"n": ctx.n, "consistent": False, "independent": False}
        out.text("t is not consistent")
        return EXIT_FALSE
    iterates, independent = vandermonde_closure(ctx, t, x)
    out.data = {"n": ctx.n, "consistent": True, "independent": independent,
                "count": len(iterates)}
    out.text(f"{len(iterates)} iterates [t, ...[t, x]]: "
             f"{'linearly independent' if independent else 'dependent'}")
    return EXIT_OK if independent else EXIT_FALSE


def cmd_complete(args, out: Output) -> int:
    ctx = _context(args.n)
    x = _load(args.x, Mat.from_json)
    if x.shape != (ctx.size, ctx.size) or x.is_cyclotomic:
        raise InputError(f"{args.x}: x must be a rational {ctx.size}x{ctx.size} matrix")
    if args.max_trials < 1:
        raise InputError("--max-trials must be >= 1")
    try:
        res = complete_nilpotent(ctx, x, args.seed, args.max_trials)
    except ValueError as exc:
        raise InputError(f"{args.x}: {exc}") from None
    except CompletionFailed as exc:
        out.data = {"found": False, "trials": exc.trials}
        out.text(str(exc))
        return EXIT_FALSE
    pair = res.pair(ctx.n)
    if args.out:
        _write_json(args.out, pair.to_json())
    out.data = {"found": True, "trial": res.trial, "pair": pair.to_json(),
                "certificate": res.certificate.to_json()}
    out.text(f"found y at trial {res.trial}; certificate verified "
             f"({len(res.certificate.words)} words)")
    out.text("y =")
    out.text(_fmt(res.y))
    if args.out:
        out.text(f"pair written to {args.out}")
    return EXIT_OK


def cmd_conjugation_check(args, out: Output) -> int:
    if args.n < 1:
        raise InputError("--n must be >= 1")
    rep = cons.verify_lemma3_conjugation(args.n)
    out.data = rep.to_json()
    out.text(f"C invertible: {rep.invertible}")
    out.text(f"C^-1 T C diagonal with each 2n-th root of unity once: {rep.diagonalizes}")
    out.text(f"off-diagonal entries of C^-1 E_(n+1,1) C all nonzero: "
             f"{rep.off_diagonal_nonzero}")
    return EXIT_OK if rep.ok else EXIT_FALSE


def cmd_certificate_verify(args, out: Output) -> int:
    cert = _load(args.file, Certificate.from_json)
    try:
        ok = verify_certificate(cert)
    except (IndexError, ValueError) as exc:
        raise InputError(f"{args.file}: {exc}") from None
    out.data = {"valid": ok, "n": cert.n, "words": len(cert.words)}
    out.text(f"certificate {'valid' if ok else 'INVALID'}")
    return EXIT_OK if ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="spgen", description="Nilpotent generators of the symplectic Lie algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", parents=[common], help="list the standard basis of sp_2n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("construct", parents=[common], help="build an explicit pair")
    p.add_argument("kind", choices=cons.TAGS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="check generation, emit certificate")
    p.add_argument("--out", help="write the pair JSON here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check that a pair generates sp_2n")
    p.add_argument("--pair", required=True)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("consistent", parents=[common], help="consistency of an element")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", help="Mat JSON (default: the cyclic element T)")
    p.set_defaults(func=cmd_consistent)

    p = sub.add_parser("vandermonde", parents=[common],
                       help="independence of the iterates [t, ...[t, x]]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", help="Mat JSON (default: Example 2 diagonal)")
    p.add_argument("--x", help="Mat JSON (default: sum of all root vectors)")
    p.set_defaults(func=cmd_vandermonde)

    p = sub.add_parser("complete", parents=[common],
                       help="find a nilpotent partner generating sp_2n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", required=True, help="Mat JSON of a nonzero nilpotent member")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-trials", type=int, default=200)
    p.add_argument("--out", help="write the pair JSON here")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("conjugation-check", parents=[common],
                       help="diagonalize T over Q(xi_2n) and inspect E_(n+1,1)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_conjugation_check)

    p = sub.add_parser("certificate", help="certificate tools")
    csub = p.add_subparsers(dest="action", required=True)
    q = csub.add_parser("verify", parents=[common], help="re-check a certificate file")
    q.add_argument("file")
    q.set_defaults(func=cmd_certificate_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    out = Output(args.json)
    try:
        code = args.func(args, out)
    except InputError as exc:
        print(f"spgen: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    out.flush()
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
