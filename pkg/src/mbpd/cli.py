"""Command-line front end.

Subcommands: enumerate, phi, psi, groth, render, verify.  Enumeration
output is JSONL so downstream tools can stream it; all behavior is
controlled by flags.  Exit codes: 0 success, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import biwords, bijection, grid, groth, moves, perms, pipedreams

__all__ = ["main", "run"]


def _parse_perm(text: str) -> perms.Permutation:
    return perms.Permutation.from_string(text)


def _cmd_enumerate(args) -> int:
    n = args.n
    want = _parse_perm(args.perm) if args.perm else None
    out = sys.stdout
    if args.kind == "mbpd":
        for d in grid.enumerate_mbpd(n):
            if want and perms.mbpd_permutation(d) != want:
                continue
            if args.reduced and not bijection.is_reduced_mbpd(d):
                continue
            out.write(json.dumps(grid.to_json_dict(d)) + "\n")
    elif args.kind == "pd":
        for p in pipedreams.enumerate_pd(n):
            if want and pipedreams.pd_permutation(p) != want:
                continue
            if args.reduced and len(p.crossings) != pipedreams.pd_permutation(p).length:
                continue
            obj = {"n": n, "crossings": sorted(p.crossings)}
            out.write(json.dumps(obj) + "\n")
    else:  # rcp
        for b in biwords.enumerate_rcp(n):
            if want and biwords.rcp_permutation(b, n) != want:
                continue
            if args.reduced and not bijection.is_reduced_rcp(b, n):
                continue
            obj = {"n": n, "biletters": [[bl.i, bl.a] for bl in b.seq]}
            out.write(json.dumps(obj) + "\n")
    return 0


def _load_grid(path: str) -> grid.Mbpd:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return grid.from_json_dict(json.loads(text))
    return grid.parse(text)


def _cmd_phi(args) -> int:
    d = _load_grid(args.grid)
    b, records = bijection.phi_trace(d)
    if args.trace:
        for rec in records:
            print(rec)
    print(biwords.format_biword(b))
    return 0


def _cmd_psi(args) -> int:
    b = biwords.parse_biword(args.biword)
    d, records = bijection.psi_trace(b, args.n)
    if args.trace:
        for rec in records:
            print(rec)
    print(grid.serialize(d))
    return 0


def _cmd_groth(args) -> int:
    w = _parse_perm(args.perm)
    n = args.n
    if w.n != n:
        print(f"error: permutation {w} is not in S_{n}", file=sys.stderr)
        return 2
    if args.method == "recursion":
        g = groth.groth_recursive(w)
    elif args.method == "pd":
        g = groth.groth_from_pd(w, n)
    elif args.method == "rcp":
        g = groth.groth_from_rcp(w, n)
    else:
        g = groth.groth_from_mbpd(w, n)
    if args.json:
        print(json.dumps({"terms": g.to_json_terms()}))
    else:
        print(g)
    return 0


def _cmd_render(args) -> int:
    if args.grid:
        print(grid.render_ascii(_load_grid(args.grid)))
    else:
        print(pipedreams.render_pd(pipedreams.parse_pd(args.pd)))
    return 0


# verification suites


def _suite_counts(n: int):
    for m in range(1, n + 1):
        expected = 2 ** (m * (m - 1) // 2)
        got = (
            sum(1 for _ in grid.enumerate_mbpd(m)),
            sum(1 for _ in pipedreams.enumerate_pd(m)),
            sum(1 for _ in biwords.enumerate_rcp(m)),
        )
        ok = got == (expected,) * 3
        yield f"counts n={m} (mbpd,pd,rcp)={got}", ok


def _suite_bijection(n: int):
    ok_round = True
    ok_preserve = True
    for d in grid.enumerate_mbpd(n):
        b = bijection.phi(d)
        if bijection.psi(b, n) != d:
            ok_round = False
        if grid.weight(d) != biwords.rcp_weight(b, n):
            ok_preserve = False
        if perms.mbpd_permutation(d) != biwords.rcp_permutation(b, n):
            ok_preserve = False
    yield f"psi(phi(D)) = D over all MBPD({n})", ok_round
    yield f"phi preserves weight and permutation at n={n}", ok_preserve
    ok = all(bijection.phi(bijection.psi(b, n)) == b for b in biwords.enumerate_rcp(n))
    yield f"phi(psi(B)) = B over all RCP({n})", ok


def _suite_moves(n: int):
    ok_fe = ok_ef = ok_case = True
    for d in grid.enumerate_mbpd(n):
        for r in range(1, n):
            ft = moves.f_target_in_row(d, r)
            if ft is not None:
                d2 = moves.apply_f(d, ft)
                et = moves.find_e_target(d2, r)
                if et is None or et.window != ft.window:
                    ok_ef = False
                elif moves.F_TO_E_CASE[(ft.right_case, ft.left_case)] != (
                    et.right_case,
                    et.left_case,
                ):
                    ok_case = False
                elif moves.apply_e(d2, et) != d:
                    ok_ef = False
            et = moves.find_e_target(d, r)
            if et is not None:
                d2 = moves.apply_e(d, et)
                ft = moves.f_target_in_row(d2, r)
                if ft is None or ft.window != et.window:
                    ok_fe = False
                elif moves.apply_f(d2, ft) != d:
                    ok_fe = False
    yield f"e(f(D)) = D with matching windows at n={n}", ok_ef
    yield f"f(e(D)) = D with matching windows at n={n}", ok_fe
    yield f"nine-case correspondence at n={n}", ok_case


def _suite_polynomials(n: int):
    rec = groth.groth_table_recursive(n)
    pd_t = groth.groth_table_pd(n)
    rcp_t = groth.groth_table_rcp(n)
    mbpd_t = groth.groth_table_mbpd(n)
    ws = list(perms.all_permutations(n))
    ok_four = all(
        rec[w] == pd_t.get(w) == rcp_t.get(w) == mbpd_t.get(w) for w in ws
    )
    yield f"four-way equality over S_{n}", ok_four
    ok_pos = all(c > 0 for w in ws for c in rec[w].coefficients())
    yield f"coefficient positivity over S_{n}", ok_pos
    from .poly import Poly, pi_op

    ok_pi = True
    for w in ws:
        for i in w.right_descents():
            # the relation that defines the family: applying the operator at
            # a descent steps down to the shorter permutation
            if pi_op(rec[w], i) != rec[w.right_mult(i)]:
                ok_pi = False
        for i in w.right_ascents():
            # at an ascent the polynomial is symmetric in x_i, x_{i+1}, so
            # the operator acts as multiplication by -b
            if pi_op(rec[w], i) != Poly.const(-1, n) * Poly.b(n) * rec[w]:
                ok_pi = False
    yield f"defining relation for descents over S_{n}", ok_pi


_SUITES = {
    "counts": _suite_counts,
    "bijection": _suite_bijection,
    "moves": _suite_moves,
    "polynomials": _suite_polynomials,
}


def _cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    failures = 0
    for name in names:
        for label, ok in _SUITES[name](args.n):
            print(f"{'PASS' if ok else 'FAIL'}  {label}")
            failures += 0 if ok else 1
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mbpd",
        description="Bumpless pipedream bijections and Grothendieck polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list objects as JSONL")
    p.add_argument("--kind", choices=["mbpd", "pd", "rcp"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--perm", help="filter by associated permutation")
    p.add_argument("--reduced", action="store_true", help="keep reduced objects only")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("phi", help="grid to biword")
    p.add_argument("--grid", required=True, help="path to a grid file")
    p.add_argument("--trace", action="store_true", help="print one line per move")
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("psi", help="biword to grid")
    p.add_argument("--biword", required=True, help='e.g. "(3,4),(1,1)" or "()"')
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_psi)

    p = sub.add_parser("groth", help="Grothendieck polynomial of a permutation")
    p.add_argument("--perm", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--method",
        choices=["recursion", "pd", "rcp", "mbpd"],
        default="recursion",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_groth)

    p = sub.add_parser("render", help="pretty-print a grid or pipedream")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--grid", help="path to a grid file")
    group.add_argument("--pd", help='pipedream text, e.g. "n=3; (1,1),(2,1)"')
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--suite",
        choices=["counts", "bijection", "moves", "polynomials", "all"],
        default="all",
    )
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def main() -> None:
    sys.exit(run())
