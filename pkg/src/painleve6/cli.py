"""Command line front end.

Exit status: 0 success, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .catalog import CatalogError, load_catalog, parse_theta
from .pvi import ParamSolution

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _catalog(args):
    try:
        return load_catalog(args.catalog)
    except (OSError, CatalogError, ValueError) as exc:
        raise UsageError(f"cannot load catalog: {exc}") from None


def _entry(cat, ident):
    try:
        return cat[ident]
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None


def _emit(obj, fmt="json"):
    if fmt == "json":
        print(json.dumps(obj, indent=1, default=str))
    else:
        for k, v in obj.items():
            print(f"{k}: {v}")


def _params(items):
    out = {}
    for item in items or ():
        name, _, val = item.partition("=")
        if not name or not val:
            raise UsageError(f"bad parameter {item!r}, expected name=value")
        out[name.strip()] = Fraction(val.strip())
    return out


def _solution(entry, params=None, source="text") -> ParamSolution:
    if not params:
        return entry.solution(source)
    text = entry.theta_text if source == "text" else entry.theta_table
    return ParamSolution(entry.id, parse_theta(text, params), entry.x, entry.u,
                         genus_claim=entry.genus, family_params=tuple(sorted(params.items())))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------
def cmd_verify(args):
    from .report import default_jobs, run_entries

    cat = _catalog(args)
    ids = cat.ids() if args.all or not args.id else args.id
    for i in ids:
        _entry(cat, i)
    jobs = args.jobs or default_jobs()
    results = run_entries("verify", ids, args.catalog, jobs)
    bad = 0
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        bad += not r.ok
        extra = f"  [{'; '.join(r.flags)}]" if r.flags else ""
        print(f"{r.id:5s} {status}  verified with {'/'.join(r.verified_sources) or 'none'}  {r.seconds:.2f}s{extra}")
    print(f"{len(results) - bad}/{len(results)} entries have residual 0")
    return EXIT_OK if not bad else EXIT_FAIL


def cmd_implicitize(args):
    from .implicit import curve_stats, implicitize
    from .modular import modular_curve_stats

    cat = _catalog(args)
    e = _entry(cat, args.id)
    sol = _solution(e, _params(args.param))
    if args.modular:
        st = modular_curve_stats(sol)
        b, d = int(st.b), int(st.d)
        out = {"id": e.id, "method": "modular", "b": b, "d": d, "d_minus_b": d - b,
               "terms": int(st.terms), "primes": [int(p) for p in st.primes]}
    else:
        P = implicitize(sol, method="exact" if args.exact else "auto")
        cs = curve_stats(P)
        out = {"id": e.id, "method": "exact", "b": cs.b, "d": cs.d, "d_minus_b": cs.d - cs.b,
               "terms": cs.terms, "monic_in_u": cs.monic_in_u, "field": P.field, "curve": str(P)}
    if args.format == "csv":
        keys = [k for k in out if k not in ("curve", "primes")]
        print(",".join(keys))
        print(",".join(str(out[k]) for k in keys))
    else:
        _emit(out)
    return EXIT_OK


def cmd_transform(args):
    from .implicit import curve_stats, implicitize
    from .pvi import is_solution
    from .symmetry import TransformError, run_script

    cat = _catalog(args)
    e = _entry(cat, args.id)
    try:
        sol = run_script(_solution(e, _params(args.param)), args.script)
    except TransformError as exc:
        raise UsageError(f"transform failed: {exc}") from None
    ok = is_solution(sol)
    out = {"id": e.id, "script": args.script, "theta": str(sol.theta), "residual_zero": ok}
    if not args.no_curve:
        P = implicitize(sol)
        cs = curve_stats(P)
        out.update(b=cs.b, d_minus_b=cs.d - cs.b, terms=cs.terms, curve=str(P))
    _emit(out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_orbit(args):
    from .orbit import find_script, orbit_search
    from .symmetry import run_script

    cat = _catalog(args)
    e = _entry(cat, args.id)
    sol = _solution(e, _params(args.param))
    script = args.script
    if args.theta:
        target = parse_theta(args.theta)
        script = find_script(sol.theta, target)
        if script is None:
            raise UsageError(f"theta {args.theta} not reachable from {e.id}")
    if script:
        sol = run_script(sol, script)
    res = orbit_search(sol, max_okamoto_depth=args.depth, budget=args.budget, seed=args.seed)
    out = res.summary()
    out["start_script"] = script or ""
    out["start_theta"] = str(sol.theta)
    b, d, t = (int(v) for v in res.start.stats)
    out["start_stats"] = {"b": b, "d_minus_b": d - b, "terms": t}
    _emit(out)
    return EXIT_OK


def cmd_table(args):
    from .report import default_jobs, render_csv, render_markdown, report_table1

    cat = _catalog(args)
    rows, ok = report_table1(cat, jobs=args.jobs or default_jobs(), catalog_path=args.catalog)
    text = render_csv(rows) if args.format == "csv" else render_markdown(rows, compare=args.compare)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not args.compare:
        return EXIT_OK
    bad = [r.entry.id for r in rows if not r.ok]
    flagged = [r.entry.id for r in rows if r.invariance_status == "FLAG"]
    print(f"rows failing: {', '.join(bad) or 'none'}; published rows flagged inconsistent: {', '.join(flagged) or 'none'}",
          file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_fold_check(args):
    from .implicit import implicitize
    from .poly import PlaneCurve
    from .symmetry import HOMOGRAPHIES, fold_point_check

    cat = _catalog(args)
    folded = _solution(_entry(cat, args.folded))
    params = _params(args.param)
    if args.unfolded in cat:
        curve = implicitize(_solution(cat[args.unfolded], params or None))
    else:
        try:
            curve = PlaneCurve.parse(args.unfolded)
        except Exception as exc:
            raise UsageError(f"{args.unfolded!r} is neither an entry nor a curve: {exc}") from None
    if args.homography == "auto":
        rows = [None] + list(HOMOGRAPHIES)
    elif args.homography:
        rows = [int(args.homography)]
    else:
        rows = [None]
    res = None
    for k in rows:
        res = fold_point_check(folded, curve, samples=args.samples, precision=args.precision,
                               homography_index=k)
        res["homography"] = k
        if res["pass"]:
            break
    _emit({"folded": args.folded, "unfolded": args.unfolded, "curve": str(curve),
           "homography": res["homography"], "pass": res["pass"], "samples": res["samples"],
           "precision": res["precision"], "tolerance": str(res["tolerance"]),
           "worst": str(res["worst"])})
    return EXIT_OK if res["pass"] else EXIT_FAIL


def cmd_certify(args):
    from .certificates import radical_checks, space_curve_check, weierstrass_check

    cat = _catalog(args)
    ok = True
    for r in radical_checks(cat):
        ok &= r.ok
        print(f"radical  {r.id:5s} deg={r.degree} squarefree={r.squarefree} genus={r.genus} {'PASS' if r.ok else 'FAIL'}")
    for e in cat:
        if e.weierstrass:
            w = weierstrass_check(e)
            ok &= w.ok
            print(f"weierstr {e.id:5s} g2={w.g2} g3={w.g3} convention={w.convention} {'PASS' if w.ok else 'FAIL'}")
        if e.space_curve:
            s = space_curve_check(e)
            ok &= s.ok
            print(f"space    {e.id:5s} {len(s.identities)} identities {'PASS' if s.ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
def build_parser():
    ap = argparse.ArgumentParser(prog="painleve6", description="Algebraic solutions of Painleve VI: exact checks.")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--catalog", help="catalog JSON (default: bundled, or $PVI_CATALOG)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="exact residual check")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--id", action="append", help="entry id (repeatable)")
    g.add_argument("--all", action="store_true")
    p.add_argument("--jobs", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("implicitize", help="plane curve of an entry")
    p.add_argument("--id", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true")
    g.add_argument("--modular", action="store_true")
    p.add_argument("--param", action="append", help="family parameter, e.g. a=1/3")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_implicitize)

    p = sub.add_parser("transform", help="run a script of h<k>, s<mask>, ok, q4")
    p.add_argument("--id", required=True)
    p.add_argument("--script", required=True)
    p.add_argument("--param", action="append")
    p.add_argument("--no-curve", action="store_true")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("orbit", help="depth-limited search for a smaller representative")
    p.add_argument("--id", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--theta", help="start from the representative with this exact theta")
    g.add_argument("--script", help="start from the image under this script")
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--param", action="append")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("table", help="recompute the catalog table")
    p.add_argument("--compare", action="store_true", help="add expected values and flags")
    p.add_argument("--format", choices=("markdown", "csv"), default="markdown")
    p.add_argument("--jobs", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("fold-check", help="numeric check of the quadratic folding")
    p.add_argument("--folded", required=True)
    p.add_argument("--unfolded", required=True, help="entry id or a curve in u, x")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--precision", type=int, default=256)
    p.add_argument("--homography", help="row applied after unfolding, or 'auto'")
    p.add_argument("--param", action="append")
    p.set_defaults(func=cmd_fold_check)

    p = sub.add_parser("certify", help="radical, Weierstrass and space-curve certificates")
    p.set_defaults(func=cmd_certify)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
