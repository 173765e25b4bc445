"""Command-line entry point: ``recquint <command> [flags]``.

Exit codes: 0 success, 1 usage or mathematical error, 2 factoring budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance
from .dedekind import DEFAULT_BUDGET, Status
from .density import DEFAULT_TRUNCATION, FactoredPoly, density_report
from .galois import frobenius_fingerprint
from .lucas_pell import ab_from_pell, pell_solution, pr_squares
from .poly import discriminant
from .quintinomial import QuinParams, build, disc_formula, irreducible
from .search import (
    RESIDUE_FILTERS,
    classify,
    csv_summary,
    distinct_fields,
    dumps_record,
    grid_classify,
    item3_family,
    write_jsonl,
)

EXIT_OK, EXIT_ERROR, EXIT_BUDGET = 0, 1, 2


def _range(text: str) -> range:
    """``lo:hi`` inclusive."""
    try:
        lo, hi = (int(v) for v in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _header(args) -> dict:
    return {"command": args.command, "seed": args.seed, "budget": args.budget}


def _print_header(args, out):
    if args.json:
        return
    out.write(f"# recquint {args.command}  seed={args.seed}  budget={args.budget}\n")


# classify

def cmd_classify(args, out) -> int:
    params = QuinParams(args.n, args.A, args.B)
    f = build(params)
    rec = classify(params, args.seed, args.budget)
    ok, cert = irreducible(params)
    disc = disc_formula(params)
    cross = discriminant(f) if params.n <= 3 else None
    if cross is not None and cross != disc:
        raise AssertionError("discriminant formula disagrees with the subresultant")
    frob = None
    if params.n == 2 and params.in_hypothesis():
        frob = frobenius_fingerprint(params.A, params.B, args.prime_bound, args.seed)
    if args.json:
        doc = {
            "header": _header(args),
            "polynomial": list(f.coeffs),
            "disc_formula": disc,
            "disc_subresultant": cross,
            "irreducible": ok,
            "frobenius": frob.label.value if frob else None,
            "record": rec.to_dict(),
        }
        out.write(_dump(doc) + "\n")
    else:
        inv = rec.invariants
        out.write(f"F({params.n},{params.A},{params.B}) = {f}\n")
        out.write(f"W1={inv.W1} W2={inv.W2} W3={inv.W3}  P={inv.P} Q={inv.Q} R={inv.R}\n")
        check = "" if cross is None else "  (subresultant agrees)"
        out.write(f"disc = {disc}{check}\n")
        if ok:
            out.write("irreducible\n")
        else:
            out.write(f"reducible ({cert.kind.value}):\n")
            for g in cert.factors:
                out.write(f"  {g}\n")
        v = rec.verdict
        out.write(f"verdict: {v.status.value}")
        if v.obstruction_primes:
            out.write("{" + ",".join(map(str, v.obstruction_primes)) + "}")
        out.write(f"  ({v.reason})\n")
        for o in v.outcomes:
            out.write(f"  q={o.q}: divides index={o.divides_index}  gcd={list(o.gcd_witness.coeffs)}\n")
        out.write(f"galois: {rec.galois.label.value}\n")
        if frob is not None:
            out.write(f"frobenius fingerprint (primes <= {args.prime_bound}): {frob.label.value}\n")
    return EXIT_BUDGET if rec.verdict.status is Status.UNDECIDED else EXIT_OK


# search and family

def _emit_records(args, records, out):
    undecided = False
    kept = []
    if args.json:
        out.write(_dump({"header": _header(args)}) + "\n")
    for rec in records:
        kept.append(rec)
        undecided |= rec.verdict.status is Status.UNDECIDED
        if args.json:
            out.write(dumps_record(rec) + "\n")
        else:
            v = rec.verdict
            obs = ",".join(map(str, v.obstruction_primes))
            out.write(
                f"n={rec.params.n} A={rec.params.A} B={rec.params.B}  {v.status.value}"
                + (f"{{{obs}}}" if obs else "")
                + f"  {rec.galois.label.value}\n"
            )
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            write_jsonl(kept, fh)
    if getattr(args, "csv", None):
        with open(args.csv, "w") as fh:
            fh.write(csv_summary(kept))
    return kept, undecided


def cmd_search(args, out) -> int:
    records = grid_classify(args.n, args.A_range, args.B_range, args.filter, args.seed, args.budget, args.jobs)
    kept, undecided = _emit_records(args, records, out)
    if not args.json:
        counts: dict[str, int] = {}
        for r in kept:
            counts[r.verdict.status.value] = counts.get(r.verdict.status.value, 0) + 1
        out.write(f"# {len(kept)} records: " + ", ".join(f"{k}={counts[k]}" for k in sorted(counts)) + "\n")
    return EXIT_BUDGET if undecided else EXIT_OK


def _family_stream(args):
    found = 0
    for rec in item3_family(args.k, args.t_range, args.seed, args.budget, not args.all_integers):
        yield rec
        found += bool(rec.g_squarefree)
        if args.count and found >= args.count:
            return


def cmd_family(args, out) -> int:
    kept, undecided = _emit_records(args, _family_stream(args), out)
    mono = [r for r in kept if r.verdict.status is Status.MONOGENIC and r.g_squarefree]
    part = distinct_fields(mono)
    summary = {
        "squarefree_records": len(mono),
        "distinct_fields": len(part.classes),
        "unresolved": [
            {"field_disc": c.field_disc, "members": [list(m) for m in c.members], "equations_hold": c.equations_hold}
            for c in part.unresolved
        ],
    }
    if args.json:
        out.write(_dump({"summary": summary}) + "\n")
    else:
        out.write(
            f"# {len(mono)} records with G(t) squarefree, {len(part.classes)} distinct field discriminants"
            f", {len(part.unresolved)} unresolved\n"
        )
    return EXIT_BUDGET if undecided else EXIT_OK


# density

def cmd_density(args, out) -> int:
    G = FactoredPoly.parse(args.factors)
    rep = density_report(G, args.X, args.trunc_L, args.budget)
    if args.json:
        out.write(_dump({"header": _header(args), "factors": G.format(), "report": rep.to_dict()}) + "\n")
    else:
        obs = ", ".join(map(str, rep.obstruction_primes)) or "none"
        out.write(f"G = {' * '.join(f'({f})' for f in G.factors)}\n")
        out.write(f"local obstructions: {obs}\n")
        nonzero = [(ell, rho, phi) for ell, rho, phi in rep.rho_table if rho]
        out.write("rho(l^2) / (l(l-1)) where nonzero: " + ", ".join(f"{e}:{r}/{p}" for e, r, p in nonzero) + "\n")
        out.write(f"C_G truncated at L={rep.truncation_bound}: {float(rep.cg_truncated):.10f}\n")
        X, count = rep.ng_count
        cert = "certified" if rep.certified else "NOT certified (budget exhausted)"
        out.write(f"primes p <= {X} with G(p) squarefree: {count} ({cert})\n")
    return EXIT_OK if rep.certified else EXIT_BUDGET


# pell

def _pell_rows(max_n: int):
    for n in range(1, max_n + 1):
        X, Y = pell_solution(n)
        ab = ab_from_pell(n)
        sq = pr_squares(n)
        flag = None
        if sq is not None:
            flag = {"name": "P" if n % 6 == 1 else "R", "value": sq[0], "root": abs(sq[1])}
        yield {"n": n, "X": X, "Y": Y, "AB": list(ab) if ab else None, "square": flag}


def cmd_pell(args, out) -> int:
    rows = list(_pell_rows(args.max_n))
    if args.json:
        out.write(_dump({"header": _header(args), "rows": rows}) + "\n")
        return EXIT_OK
    out.write(f"{'n':>3} {'X=L(2n-1)':>14} {'Y=F(2n-1)':>14}  (A,B)\n")
    for r in rows:
        ab = "-" if r["AB"] is None else f"({r['AB'][0]},{r['AB'][1]})"
        sq = r["square"]
        extra = f"  {sq['name']}={sq['value']}={sq['root']}^2" if sq else ""
        out.write(f"{r['n']:>3} {r['X']:>14} {r['Y']:>14}  {ab}{extra}\n")
    return EXIT_OK


# verify

def cmd_verify(args, out) -> int:
    only = tuple(int(v) for v in args.only.split(",")) if args.only else None
    results = []
    for res in acceptance.run_all(args.seed, only):
        results.append(res)
        if not args.json:
            out.write(res.line() + "\n")
            out.flush()
    failed = [r.number for r in results if not r.passed]
    if args.json:
        doc = {
            "header": _header(args),
            "criteria": [{"number": r.number, "title": r.title, "passed": r.passed, "detail": r.detail} for r in results],
        }
        out.write(_dump(doc) + "\n")
    else:
        out.write(f"# {len(results) - len(failed)}/{len(results)} criteria passed\n")
    return EXIT_ERROR if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="Pollard-Brent iteration budget")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--prime-bound", type=int, default=500, help="largest prime for Frobenius scans")
    common.add_argument("--trunc-L", type=int, default=DEFAULT_TRUNCATION, help="Euler product truncation")

    p = argparse.ArgumentParser(prog="recquint", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="full report for one F(n, A, B)")
    c.add_argument("n", type=int)
    c.add_argument("A", type=int)
    c.add_argument("B", type=int)

    s = sub.add_parser("search", parents=[common], help="classify a grid of (A, B)")
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--A-range", type=_range, default=_range("-11:13"))
    s.add_argument("--B-range", type=_range, default=_range("-11:13"))
    s.add_argument("--filter", choices=RESIDUE_FILTERS, default="mod4-11")
    s.add_argument("--out", help="write JSON lines here")
    s.add_argument("--csv", help="write a CSV summary here")

    f = sub.add_parser("family", parents=[common], help="the D4 family A = 8k+1, B = 8t+1")
    f.add_argument("--k", type=int, default=0)
    f.add_argument("--t-range", type=_range, default=_range("2:1000"))
    f.add_argument("--count", type=int, default=10, help="stop after this many squarefree G(t); 0 = no limit")
    f.add_argument("--all-integers", action="store_true", help="let t run over all integers, not just primes")
    f.add_argument("--out")
    f.add_argument("--csv")

    d = sub.add_parser("density", parents=[common], help="squarefree values of a factored G at primes")
    d.add_argument("--factors", required=True, help='ascending coefficients per factor, e.g. "-1,4|5,12|5,-8,16"')
    d.add_argument("--X", type=int, default=10_000)

    pe = sub.add_parser("pell", parents=[common], help="Pell solutions and the (A, B) they give")
    pe.add_argument("--max-n", type=int, default=10)

    v = sub.add_parser("verify", parents=[common], help="run the acceptance suite")
    v.add_argument("--only", help="comma-separated criterion numbers")
    return p


COMMANDS = {
    "classify": cmd_classify,
    "search": cmd_search,
    "family": cmd_family,
    "density": cmd_density,
    "pell": cmd_pell,
    "verify": cmd_verify,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    _print_header(args, out)
    try:
        return COMMANDS[args.command](args, out)
    except (ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR
