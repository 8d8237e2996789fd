"""Command line interface: generate, reproduce, verify, sweep.

Exit codes: 0 success, 1 a certificate or check failed, 2 usage or scope error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .cyclotomic import DEFAULT_PRECISION
from .errors import ContextError, ScopeError, StructuralError, TrivialCaseError
from .kernel import CASES_ENV, assemble, default_cases_dir, global_rank, save_result, verify_document
from .reproduce import CASES
from .units import IN_SCOPE_LEVELS, make_ctx

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _ctx(args):
    return make_ctx(args.p, args.n, args.t)


def render_text(result) -> str:
    ctx = result.ctx
    lines = [
        f"U(ZC_{ctx.m}), p={ctx.p} n={ctx.n} t={ctx.t} kappa={ctx.kappa} r={ctx.r} k={ctx.k}",
        f"torsion: {result.torsion}",
        "",
        "Hoechsmann part (vartheta_i = g^e * vartheta_i'):",
    ]
    for i, (u, (e, sym)) in enumerate(zip(result.hoechsmann_part[1:], result.symmetric_parts()), 1):
        lines.append(f"  vartheta_{i} = {u}")
        lines.append(f"    = g^{e} * ({sym})")
    lines.append("")
    lines.append("kernel part (w = 1 + sum a_i g^i P):")
    if not result.kernel_elems:
        lines.append("  (trivial)")
    for i, ke in enumerate(result.kernel_elems, 1):
        lines.append(f"  w_{i}: a = ({', '.join(map(str, ke.a))})")
    lines.append("")
    hyp = result.hypothesis_cert
    if hyp is not None:
        w = hyp.witness
        detail = f"e = {_xtext(w['e'])}" if "e" in w else "f2(v) outside the image"
        lines.append(f"hypothesis: {hyp.verdict} (lambda = {w['lambda']}, {detail}, route {w['route']})")
    lines.append(f"total rank: {result.total_rank}")
    fails = [c for c in result.certificates if not c.passed]
    lines.append(f"certificates: {len(result.certificates) - len(fails)}/{len(result.certificates)} pass")
    for c in fails:
        lines.append(f"  FAIL {c.kind}: {c.witness}")
    return "\n".join(lines)


def _xtext(d) -> str:
    from .ring import XAdicElem

    return str(XAdicElem.from_json(d))


def cmd_generate(args) -> int:
    try:
        ctx = _ctx(args)
    except TrivialCaseError as exc:
        print(f"trivial case: {exc}")
        return EXIT_OK
    result = assemble(ctx, args.precision)
    if args.format == "json":
        print(json.dumps(result.to_json(), indent=1))
    else:
        print(render_text(result))
    if args.save:
        path = save_result(result, args.cases_dir)
        print(f"saved {path}", file=sys.stderr)
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_reproduce(args) -> int:
    checks = CASES[args.case]()
    if args.format == "json":
        print(json.dumps([c.__dict__ for c in checks], indent=1))
    else:
        for c in checks:
            print(f"{'PASS' if c.ok else 'FAIL'}  {c.name}" + ("" if c.ok else f": expected {c.expected}, got {c.got}"))
        print(f"{sum(c.ok for c in checks)}/{len(checks)} checks pass")
    return EXIT_OK if all(c.ok for c in checks) else EXIT_FAIL


def cmd_verify(args) -> int:
    try:
        doc = json.loads(Path(args.file).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        problems = verify_document(doc)
    except (KeyError, TypeError, ValueError) as exc:
        problems = [f"malformed document: {exc!r}"]
    for msg in problems:
        print(f"FAIL {msg}")
    if not problems:
        print(f"{args.file}: all checks pass")
    return EXIT_FAIL if problems else EXIT_OK


def cmd_sweep(args) -> int:
    rows = []
    ok = True
    for p, n in IN_SCOPE_LEVELS:
        start = time.perf_counter()
        ctx = make_ctx(p, n)
        try:
            result = assemble(ctx, args.precision)
            hyp = result.hypothesis_cert.verdict
            ranks = global_rank(result, args.precision) if args.global_rank else None
            row_ok = result.passed and (ranks is None or ranks == (result.total_rank,) * 2)
            if args.save:
                save_result(result, args.cases_dir)
            rows.append((ctx.m, p, n, ctx.t, ctx.kappa, len(result.kernel_part), result.total_rank, hyp, ranks, row_ok, time.perf_counter() - start))
        except StructuralError as exc:
            row_ok = False
            rows.append((ctx.m, p, n, ctx.t, ctx.kappa, "-", "-", f"error: {exc}", None, False, time.perf_counter() - start))
        ok &= row_ok
    if args.format == "json":
        keys = ("m", "p", "n", "t", "kappa", "kernel", "rank", "hypothesis", "log_ranks", "ok", "seconds")
        print(json.dumps([dict(zip(keys, r)) for r in rows], indent=1))
    else:
        print(f"{'m':>4} {'p':>2} {'n':>2} {'t':>2} {'kappa':>5} {'ker':>4} {'rank':>5}  hypothesis  ok   seconds")
        for m, p, n, t, kappa, ker, rank, hyp, _, row_ok, secs in rows:
            print(f"{m:>4} {p:>2} {n:>2} {t:>2} {kappa:>5} {ker:>4} {rank:>5}  {hyp:<10}  {'yes' if row_ok else 'NO':<3} {secs:8.2f}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zcpn", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="bits for log-rank checks")
    common.add_argument(
        "--cases-dir", type=Path, default=None, help=f"where case files live (default ${CASES_ENV} or ./cases)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", parents=[common], help="build and certify the generators for one case")
    gen.add_argument("--p", type=int, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--t", type=int, default=None, help="primitive root override (odd p)")
    gen.add_argument("--save", action="store_true", help="write the result to the cases directory")
    gen.set_defaults(func=cmd_generate)

    rep = sub.add_parser("reproduce", parents=[common], help="recompute a worked case")
    rep.add_argument("case", choices=sorted(CASES))
    rep.set_defaults(func=cmd_reproduce)

    ver = sub.add_parser("verify", parents=[common], help="re-check a saved case file")
    ver.add_argument("file")
    ver.set_defaults(func=cmd_verify)

    sw = sub.add_parser("sweep", parents=[common], help="run every in-scope case")
    sw.add_argument("--save", action="store_true")
    sw.add_argument("--global-rank", action="store_true", help="also compute the character log-rank of all generators")
    sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.precision < 53:
        parser.error("--precision must be at least 53 bits")
    if getattr(args, "cases_dir", None) is None:
        args.cases_dir = default_cases_dir()
    try:
        return args.func(args)
    except (ContextError, ScopeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
