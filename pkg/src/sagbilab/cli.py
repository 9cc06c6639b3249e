"""Command-line interface.

Exit codes: 0 success, 1 bad input, 2 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import ParseError, format_poly, order_from_name, parse
from .groebner import Ideal, ResourceLimitError, buchberger
from .harness import ALL_EXAMPLES, ExampleError, parse_example_id, reproduce
from .io import InputFileError, read_matrix, read_polynomials
from .monoid import (
    PreconditionError,
    construct_module_monoid,
    cone_of,
    irreducibles,
    is_finitely_generated,
    parse_spec,
)
from .plot import plot_monoid
from .sagbi import GeneratorSet, initial_algebra_monoid, sagbi_check, sagbi_construct, subduct
from .toric import format_binomial, toric_ideal

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_LIMIT = 2


def _emit(args, payload, text):
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _point(text):
    try:
        p = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a,b but got {text!r}") from None
    if len(p) != 2:
        raise argparse.ArgumentTypeError(f"expected a,b but got {text!r}")
    return p


def _points(text):
    return [_point(t) for t in text.replace(" ", "").split(";") if t]


def _load_gens(args, path=None):
    path = path or args.gens
    vars, polys = read_polynomials(path)
    if not polys:
        raise InputFileError(f"{path}: no generators")
    order = order_from_name(args.order, len(vars))
    return GeneratorSet(polys, order, vars)


# ---------------------------------------------------------------------------


def cmd_sagbi_check(args):
    F = _load_gens(args)
    res = sagbi_check(F, exhaustive=args.exhaustive)
    payload = {
        "is_sagbi": res.is_sagbi,
        "order": F.order.describe(F.vars),
        "relations": [format_binomial(p, res.relations.vars) for p in res.relations.pairs] if res.relations else [],
    }
    if res.is_sagbi:
        text = "IsSagbi"
        payload["certificate"] = [[str(rel), str(c)] for rel, c in res.certificate]
    else:
        wit = format_binomial(_pair_of(res.witness), res.witness.vars)
        payload["witness"] = wit
        payload["witness_remainder"] = format_poly(res.witness_remainder, F.order)
        text = f"NotSagbi\nwitness: {wit}\nremainder: {payload['witness_remainder']}"
    _emit(args, payload, text)
    return EXIT_OK


def _pair_of(binom):
    pos = [e for e, c in binom.terms.items() if c > 0]
    neg = [e for e, c in binom.terms.items() if c < 0]
    return pos[0], neg[0]


def cmd_sagbi_compute(args):
    F = _load_gens(args)
    rep = sagbi_construct(F, args.max_deg)
    order = F.order
    payload = {
        "status": rep.status,
        "order": order.describe(F.vars),
        "max_degree": rep.max_degree,
        "max_degree_reached": rep.max_degree_reached,
        "rounds": rep.rounds,
        "basis": [format_poly(g, order) for g in rep.basis],
        "initial_exponents": [list(e) for e in rep.initial_exponents],
    }
    if rep.witness_remainder is not None:
        payload["witness_remainder"] = format_poly(rep.witness_remainder, order)
    lines = [f"status: {rep.status}", f"order: {order.describe(F.vars)}", f"rounds: {rep.rounds}", "basis:"]
    lines += [f"  {g}    in = {e}" for g, e in zip(payload["basis"], rep.initial_exponents)]
    if args.plot:
        if len(F.vars) != 2:
            raise ValueError("plots need a ring in two variables")
        plot_monoid(rep.initial_exponents, args.bound, args.plot, title=f"initial monoid ({rep.status})")
        mono = initial_algebra_monoid(rep, args.bound)
        lines.append(f"plot: {args.plot} ({len(mono)} points{', partial' if mono.partial else ''})")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_subduce(args):
    F = _load_gens(args)
    f = parse(args.poly, F.vars)
    res = subduct(f, F)
    order = F.order
    payload = {
        "q": format_poly(res.q, order),
        "r": format_poly(res.r, order),
        "c": str(res.c),
        "expression": [[str(c), list(e)] for c, e in res.expression],
    }
    text = "\n".join(f"{k}: {payload[k]}" for k in ("q", "r", "c"))
    _emit(args, payload, text)
    return EXIT_OK


def cmd_toric(args):
    cols = read_matrix(args.matrix)
    ideal = toric_ideal(cols, degree_bound=args.degree_bound)
    gens = [format_binomial(p, ideal.vars) for p in ideal.pairs]
    payload = {"vars": list(ideal.vars), "generators": gens, "complete": ideal.complete}
    _emit(args, payload, "\n".join(gens) if gens else "(no relations)")
    return EXIT_OK


def cmd_groebner(args):
    vars, polys = read_polynomials(args.ideal)
    order = order_from_name(args.order, len(vars))
    gb = buchberger(Ideal(polys, vars), order)
    out = [format_poly(g, order) for g in gb]
    _emit(args, {"order": order.describe(vars), "basis": out}, "\n".join(out))
    return EXIT_OK


def cmd_monoid_irreducibles(args):
    M = parse_spec(args.gens)
    irr = irreducibles(M, args.bound)
    _emit(args, {"bound": args.bound, "irreducibles": [list(p) for p in irr]}, "\n".join(f"{a},{b}" for a, b in irr))
    return EXIT_OK


def cmd_monoid_cone(args):
    M = parse_spec(args.gens)
    gens = M.generators_in_box(args.bound)
    C = cone_of(gens)
    verdict = is_finitely_generated(M)
    payload = {
        "rays": [list(r) for r in C.rays],
        "normals": [list(w) for w in C.normals],
        "box_restricted": bool(M.families or M.stream),
        "finitely_generated": verdict.answer,
    }
    lines = ["rays: " + "  ".join(f"({a},{b})" for a, b in C.rays)]
    if payload["box_restricted"]:
        lines[0] += f"  (sampled in [0,{args.bound}]^2)"
    if C.normals:
        lines.append("normals: " + "  ".join(f"({a},{b})" for a, b in C.normals))
    lines.append(f"finitely generated: {verdict.answer} ({verdict.reason})")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_monoid_construct(args):
    M = construct_module_monoid(args.v1, args.v2, args.us)
    irr = irreducibles(M, args.bound)
    payload = {
        "finite_gens": [list(g) for g in M.finite_gens],
        "families": [[list(b), list(p)] for b, p in M.families],
        "bound": args.bound,
        "irreducibles": [list(p) for p in irr],
    }
    lines = [f"monoid generated by {M.finite_gens[0]} and " + ", ".join(f"{b}+m*{p}" for b, p in M.families)]
    lines.append(f"irreducibles in [0,{args.bound}]^2: " + " ".join(f"({a},{b})" for a, b in irr))
    if args.plot:
        plot_monoid(M, args.bound, args.plot)
        lines.append(f"plot: {args.plot}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_paper_reproduce(args):
    ids = ALL_EXAMPLES if args.all else [args.example]
    if not args.all and not args.example:
        raise ExampleError("give --example ID or --all")
    reports = [reproduce(parse_example_id(e), timed=not args.no_time, max_degree=args.max_deg) for e in ids]
    if args.json:
        payload = [r.to_json() for r in reports]
        print(json.dumps(payload if args.all else payload[0], indent=2, sort_keys=True))
    else:
        print("\n".join(r.render() for r in reports))
    return EXIT_OK


def cmd_paper_thm41(args):
    rep = reproduce(parse_example_id(f"T4.1({args.m},{args.k_max})"), timed=not args.no_time)
    if args.json:
        print(json.dumps(rep.to_json(), indent=2, sort_keys=True))
    else:
        lines = [rep.render()]
        for name, ok in rep.computed["checks"].items():
            lines.append(f"  [{'ok' if ok else 'FAIL'}] {name}")
        print("\n".join(lines))
    return EXIT_OK


def cmd_plot(args):
    if args.gens:
        M = parse_spec(args.gens)
    else:
        M = sagbi_construct(_load_gens(args, args.algebra), args.max_deg).initial_exponents
    svg = plot_monoid(M, args.bound, args.out)
    if not args.out:
        sys.stdout.write(svg)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="sagbilab", description="SAGBI bases, toric ideals and planar monoids.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, order=True):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if order:
            sp.add_argument("--order", default="grevlex", help="lex, grlex, grevlex or weight:w1,w2,...")

    sg = sub.add_parser("sagbi", help="SAGBI criterion and completion")
    sgs = sg.add_subparsers(dest="action", required=True)
    c = sgs.add_parser("check")
    c.add_argument("--gens", required=True)
    c.add_argument("--exhaustive", action="store_true", help="subduce every relation")
    common(c)
    c.set_defaults(func=cmd_sagbi_check)
    c = sgs.add_parser("compute")
    c.add_argument("--gens", required=True)
    c.add_argument("--max-deg", type=int, required=True)
    c.add_argument("--plot", help="write the initial monoid as SVG")
    c.add_argument("--bound", type=int, default=10)
    common(c)
    c.set_defaults(func=cmd_sagbi_compute)

    c = sub.add_parser("subduce", help="subduce a polynomial against generators")
    c.add_argument("--gens", required=True)
    c.add_argument("--poly", required=True)
    common(c)
    c.set_defaults(func=cmd_subduce)

    c = sub.add_parser("toric", help="toric ideal of an exponent matrix")
    c.add_argument("--matrix", required=True)
    c.add_argument("--degree-bound", type=int)
    common(c, order=False)
    c.set_defaults(func=cmd_toric)

    c = sub.add_parser("groebner", help="reduced Groebner basis")
    c.add_argument("--ideal", required=True)
    common(c)
    c.set_defaults(func=cmd_groebner)

    mo = sub.add_parser("monoid", help="planar monoids")
    mos = mo.add_subparsers(dest="action", required=True)
    c = mos.add_parser("irreducibles")
    c.add_argument("--gens", required=True, help='e.g. "1,0;1,1+m*0,1" or "(1,n^2)"')
    c.add_argument("--bound", type=int, required=True)
    common(c, order=False)
    c.set_defaults(func=cmd_monoid_irreducibles)
    c = mos.add_parser("cone")
    c.add_argument("--gens", required=True)
    c.add_argument("--bound", type=int, default=50, help="box used to sample infinite families")
    common(c, order=False)
    c.set_defaults(func=cmd_monoid_cone)
    c = mos.add_parser("construct")
    c.add_argument("--v1", type=_point, required=True)
    c.add_argument("--v2", type=_point, required=True)
    c.add_argument("--us", type=_points, required=True)
    c.add_argument("--plot")
    c.add_argument("--bound", type=int, default=10)
    common(c, order=False)
    c.set_defaults(func=cmd_monoid_construct)

    pa = sub.add_parser("paper", help="reproduce the worked examples")
    pas = pa.add_subparsers(dest="action", required=True)
    c = pas.add_parser("reproduce")
    c.add_argument("--example", help=f"one of {', '.join(ALL_EXAMPLES)} (parametric ids take arguments, e.g. E3.6(2))")
    c.add_argument("--all", action="store_true")
    c.add_argument("--max-deg", type=int)
    c.add_argument("--no-time", action="store_true", help="omit runtimes for byte-stable output")
    common(c, order=False)
    c.set_defaults(func=cmd_paper_reproduce)
    c = pas.add_parser("thm41")
    c.add_argument("--m", type=int, default=3)
    c.add_argument("--k-max", type=int, default=3)
    c.add_argument("--no-time", action="store_true")
    common(c, order=False)
    c.set_defaults(func=cmd_paper_thm41)

    c = sub.add_parser("plot", help="SVG drawing of a planar monoid")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--gens", help="monoid spec")
    src.add_argument("--from-algebra", dest="algebra", help="generator file; plots the initial monoid")
    c.add_argument("--max-deg", type=int, default=12)
    c.add_argument("--order", default="grevlex")
    c.add_argument("--bound", type=int, required=True)
    c.add_argument("--out")
    c.set_defaults(func=cmd_plot)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InputFileError, ParseError, ExampleError, PreconditionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
