"""``kodaira-kit``: every computation as a subcommand with exact JSON output.

Structured arguments (cocycles, divisors, functions, forms, section bases,
point lists) are JSON documents given inline, as ``@path`` to read a file,
or ``-`` for standard input. Exit codes: 0 success, 1 a mathematical verdict
came out false (or the computation is undefined at the input), 2 the input
does not match its schema or the command line is invalid.
"""

import argparse
import json
import sys
from itertools import combinations, permutations

from . import blowup, cech_engine, divisors, hermitian_curvature as hc, kodaira_map as km
from . import line_bundles as lb
from .documents import (
    SchemaError,
    dumps,
    read_affine_points,
    read_cocycle,
    read_divisor,
    read_form,
    read_function,
    read_point_list,
    read_polynomial,
    read_proj_point,
    read_section_basis,
    scalar_doc,
    to_document,
)
from .errors import KodairaKitError
from .symbolic import parse_rational

EXIT_OK, EXIT_FALSE, EXIT_SCHEMA = 0, 1, 2


class UsageError(Exception):
    pass


class ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def load_json_arg(text, stdin=None):
    if text == "-":
        raw = (stdin or sys.stdin).read()
    elif text.startswith("@"):
        try:
            with open(text[1:], encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise SchemaError(f"cannot read {text[1:]}: {exc.strerror}") from None
    else:
        raw = text
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg} at line {exc.lineno} column {exc.colno}") from None


def _function_arg(args, variables):
    if getattr(args, "expr", None) is not None:
        try:
            return parse_rational(args.expr, variables)
        except (ValueError, KeyError) as exc:
            raise SchemaError(f"cannot parse expression: {exc}") from None
    if getattr(args, "function", None) is None:
        raise UsageError("give --function DOC or --expr TEXT")
    return read_function(load_json_arg(args.function))


def _samples(text, n=1):
    if text in (None, "default"):
        if n != 1:
            raise UsageError("the default sample set lives on the projective line")
        return list(km.DEFAULT_SAMPLES)
    pts = read_point_list(load_json_arg(text))
    if any(p.n != n for p in pts):
        raise SchemaError(f"sample points must have {n + 1} coordinates")
    return pts


# -- command handlers: each returns (document, verdict or None) -------------------


def cmd_cohomology(args):
    s = cech_engine.TwistingSheaf(args.n, args.d)
    r = cech_engine.cohomology(s, args.q, window=args.window, threads=args.threads)
    return to_document(r), None


def cmd_picard(args):
    if args.action == "standard":
        return to_document(lb.standard_bundle(args.n, args.d)), None
    c = read_cocycle(load_json_arg(args.cocycle))
    if args.action == "check":
        ok = lb.check_cocycle(c)
        return {"kind": "cocycle_check", "cocycle": to_document(c), "verdict": ok}, ok
    if args.action == "dual":
        return to_document(lb.dual(c)), None
    if args.action == "tensor":
        if args.other is None:
            raise UsageError("picard tensor needs --other")
        return to_document(lb.tensor(c, read_cocycle(load_json_arg(args.other)))), None
    if args.action == "degree":
        try:
            d = lb.equivalence_degree(c)
        except KodairaKitError as exc:
            return {"kind": "picard_degree", "degree": None, "reason": str(exc), "verdict": False}, False
        consts = [str(x) for x in lb.coboundary_constants(c)]
        return {"kind": "picard_degree", "degree": d, "coboundary_constants": consts, "verdict": True}, True
    raise UsageError(f"unknown picard action {args.action}")


def cmd_divisor(args):
    var = (args.var,)
    if args.action == "ord":
        f = _function_arg(args, var)
        if args.point is None:
            raise UsageError("divisor ord needs --point")
        p = divisors.point(args.point)
        return {"kind": "divisor_order", "function": to_document(f), "point": str(p),
                "order": divisors.ord_at(f, p)}, None
    if args.action == "principal":
        f = _function_arg(args, var)
        return to_document(divisors.principal_divisor(f)), None
    if args.divisor is None:
        raise UsageError(f"divisor {args.action} needs --divisor")
    D = read_divisor(load_json_arg(args.divisor))
    if args.action == "bundle":
        b = divisors.bundle_of_divisor(D)
        return {"kind": "divisor_bundle", "divisor": to_document(D), "degree": b.degree,
                "witness": to_document(b.witness), "transition": to_document(b.transition)}, None
    if args.action == "sections":
        space = divisors.section_space(D, var)
        return {"kind": "section_space", "divisor": to_document(D), "dim": space.dim,
                "basis": to_document(list(space.basis))}, None
    if args.action == "effective":
        ok = divisors.is_effective(D)
        return {"kind": "effectiveness", "divisor": to_document(D), "verdict": ok}, ok
    if args.action == "equiv":
        if args.other is None:
            raise UsageError("divisor equiv needs --other")
        E = read_divisor(load_json_arg(args.other))
        ok = divisors.linearly_equivalent(D, E)
        w = divisors.linear_equivalence_witness(D, E, var) if ok else None
        return {"kind": "linear_equivalence", "divisor": to_document(D), "other": to_document(E),
                "witness": to_document(w), "verdict": ok}, ok
    raise UsageError(f"unknown divisor action {args.action}")


def _pairs(atlas, args):
    if args.j is not None and args.k is not None:
        return [(args.j, args.k)]
    if args.j is not None or args.k is not None:
        raise UsageError("give both --j and --k, or neither for all ordered pairs")
    return list(permutations(atlas.charts, 2))


def cmd_blowup(args):
    atlas = blowup.BlowupAtlas(args.n)
    if args.action == "transition":
        rows = []
        for j, k in _pairs(atlas, args):
            t = blowup.chart_transition(atlas, j, k)
            rows.append({"source": j, "target": k, "variables": list(t.variables),
                         "components": to_document(list(t.components))})
        return {"kind": "blowup_transitions", "n": args.n, "transitions": rows}, None
    if args.action == "jacobian":
        rows = []
        for j, k in _pairs(atlas, args):
            c = blowup.compare_jacobian(atlas, j, k)
            rows.append({"source": j, "target": k, "det": to_document(c.det),
                         "closed_form": to_document(c.closed_form), "sign": c.sign})
        ok = all(r["sign"] != 0 for r in rows)
        return {"kind": "blowup_jacobians", "n": args.n, "jacobians": rows, "verdict": ok}, ok
    if args.action == "verify-canonical":
        rep = blowup.verify_canonical_lemma(atlas, multiplicity=args.multiplicity)
        rows = [
            {"pair": [str(x) for x in e.pair], "canonical": to_document(e.canonical),
             "exceptional": to_document(e.exceptional), "pullback": to_document(e.pullback),
             "residual": to_document(e.residual), "sign": e.sign, "ok": e.ok}
            for e in rep.entries
        ]
        return {"kind": "canonical_lemma", "n": rep.n, "multiplicity": rep.multiplicity,
                "entries": rows, "verdict": rep.passed}, rep.passed
    if args.action == "exceptional":
        return to_document(blowup.exceptional_cocycle(atlas)), None
    raise UsageError(f"unknown blowup action {args.action}")


def _metric_arg(args):
    if args.metric_expr is not None:
        if args.n is None:
            raise UsageError("--metric-expr needs --n")
        try:
            return parse_rational(args.metric_expr, hc.herm_variables(args.n))
        except (ValueError, KeyError) as exc:
            raise SchemaError(f"cannot parse metric: {exc}") from None
    if args.metric is not None:
        h = read_function(load_json_arg(args.metric))
        try:
            hc.herm_dim(h)
        except KodairaKitError as exc:
            raise SchemaError(f"metric: {exc}") from None
        return h
    return None


def cmd_curvature(args):
    if args.fs is not None:
        m = hc.fubini_study(args.fs, args.chart)
        return to_document(m), None
    h = _metric_arg(args)
    if h is None:
        raise UsageError("curvature needs --metric, --metric-expr or --fs")
    return {"kind": "curvature", "metric": to_document(h), "real": hc.is_real(h),
            "theta": to_document(hc.chern_theta(h)), "form": to_document(hc.curvature(h))}, None


def cmd_positivity(args):
    if args.fs is not None:
        m = hc.fubini_study(args.fs, args.chart)
    elif args.form is not None:
        m = read_form(load_json_arg(args.form))
    else:
        h = _metric_arg(args)
        if h is None:
            raise UsageError("positivity needs --fs, --form, --metric or --metric-expr")
        m = hc.curvature(h)
    if args.points in (None, "default"):
        pts = hc.default_points(m.n, args.count)
    else:
        pts = read_affine_points(load_json_arg(args.points))
    rep = hc.positivity_sample(m, pts, threads=args.threads)
    doc = {
        "kind": "positivity",
        "form_kind": rep.kind,
        "orientation": rep.orientation,
        "scale": rep.scale,
        "points": [
            {"point": [scalar_doc(x) for x in v.point], "minors": [str(x) for x in v.minors],
             "positive": v.positive}
            for v in rep.verdicts
        ],
        "min_minor": None if rep.min_minor is None else str(rep.min_minor),
        "all_negative": rep.all_negative,
        "verdict": rep.all_positive,
    }
    return doc, rep.all_positive


def _basis(args):
    if args.sections is not None:
        b = read_section_basis(load_json_arg(args.sections))
        if b.n != args.n:
            raise SchemaError(f"section basis lives on P^{b.n}, not P^{args.n}")
        return b
    if args.d is None:
        raise UsageError("give --d (full monomial basis) or --sections DOC")
    return km.monomial_basis(args.n, args.d)


def cmd_kodaira(args):
    if args.action == "search":
        samples = _samples(args.samples, args.n)
        res = km.smallest_embedding_degree(args.d_max, samples, threads=args.threads)
        rows = [{"d": c.d, "base_point_free": c.base_point_free, "injective": c.injective,
                 "immersion": c.immersion, "two_point": c.two_point} for c in res.checks]
        ok = res.degree is not None
        return {"kind": "embedding_search", "degree": res.degree, "samples": to_document(list(res.samples)),
                "checks": rows, "verdict": ok}, ok
    b = _basis(args)
    if args.action == "basepoints":
        rep = km.base_points(b)
        ok = rep.complete and not rep.points
        return {"kind": "base_points", "basis": to_document(b), "points": to_document(list(rep.points)),
                "complete": rep.complete, "verdict": ok}, ok
    samples = _samples(args.samples, args.n)
    if args.action == "map":
        rows = [{"point": to_document(p), "image": to_document(km.eval_map(b, p))} for p in samples]
        return {"kind": "kodaira_map", "basis": to_document(b), "values": rows}, None
    if args.action == "inject":
        rep = km.check_injective(b, km.all_pairs(samples), threads=args.threads)
        rows = [{"p": to_document(v.p), "q": to_document(v.q), "separated": v.ok} for v in rep.verdicts]
        return {"kind": "injectivity", "basis": to_document(b), "pairs": rows, "verdict": rep.passed}, rep.passed
    if args.action == "immerse":
        rep = km.check_immersion(b, samples, threads=args.threads)
        rows = [{"point": to_document(v.point), "chart": v.chart, "rank": v.rank, "ok": v.ok}
                for v in rep.verdicts]
        return {"kind": "immersion", "basis": to_document(b), "samples": rows, "verdict": rep.passed}, rep.passed
    if args.action == "two-point":
        if args.sections is not None:
            raise UsageError("two-point uses the full monomial basis of O(d); drop --sections")
        if args.p is not None or args.q is not None:
            if args.p is None or args.q is None:
                raise UsageError("give both --p and --q")
            pairs = [(read_proj_point(load_json_arg(args.p)), read_proj_point(load_json_arg(args.q)))]
        else:
            pairs = list(combinations(samples, 2))
        rows = [{"p": to_document(p), "q": to_document(q), "surjective": km.two_point_surjectivity(args.d, p, q)}
                for p, q in pairs]
        ok = all(r["surjective"] for r in rows)
        return {"kind": "two_point", "d": args.d, "pairs": rows, "verdict": ok}, ok
    raise UsageError(f"unknown kodaira action {args.action}")


def cmd_selftest(args):
    from .selftest import run_selftest

    rep = run_selftest(threads=args.threads)
    return rep, rep["verdict"]


# -- parser ----------------------------------------------------------------------


def build_parser():
    common = ArgParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--threads", type=int, default=None,
                        help="worker cap (default: KODAIRA_KIT_THREADS or the CPU count)")

    p = ArgParser(prog="kodaira-kit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=ArgParser)

    c = sub.add_parser("cohomology", parents=[common], help="dimension of H^q(P^n, O(d))")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--window", type=int, default=None)
    c.set_defaults(handler=cmd_cohomology)

    c = sub.add_parser("picard", parents=[common], help="monomial cocycles and their degrees")
    c.add_argument("action", choices=("check", "tensor", "dual", "degree", "standard"))
    c.add_argument("--cocycle")
    c.add_argument("--other")
    c.add_argument("--n", type=int)
    c.add_argument("--d", type=int)
    c.set_defaults(handler=cmd_picard)

    c = sub.add_parser("divisor", parents=[common], help="divisors on the projective line")
    c.add_argument("action", choices=("ord", "principal", "bundle", "sections", "effective", "equiv"))
    c.add_argument("--function")
    c.add_argument("--expr")
    c.add_argument("--var", default="z")
    c.add_argument("--point")
    c.add_argument("--divisor")
    c.add_argument("--other")
    c.set_defaults(handler=cmd_divisor)

    c = sub.add_parser("blowup", parents=[common], help="blowup of C^n at the origin")
    c.add_argument("action", choices=("transition", "jacobian", "verify-canonical", "exceptional"))
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--j", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--multiplicity", type=int, default=None)
    c.set_defaults(handler=cmd_blowup)

    for name, handler, helptext in (
        ("curvature", cmd_curvature, "Chern curvature or Fubini-Study form"),
        ("positivity", cmd_positivity, "positive-definiteness at sample points"),
    ):
        c = sub.add_parser(name, parents=[common], help=helptext)
        c.add_argument("--metric")
        c.add_argument("--metric-expr")
        c.add_argument("--n", type=int)
        c.add_argument("--fs", type=int, metavar="N")
        c.add_argument("--chart", type=int, default=0)
        if name == "positivity":
            c.add_argument("--form")
            c.add_argument("--points", default="default")
            c.add_argument("--count", type=int, default=20)
        c.set_defaults(handler=handler)

    c = sub.add_parser("kodaira", parents=[common], help="maps given by sections")
    c.add_argument("action", choices=("basepoints", "map", "inject", "immerse", "two-point", "search"))
    c.add_argument("--n", type=int, default=1)
    c.add_argument("--d", type=int)
    c.add_argument("--sections")
    c.add_argument("--samples", default="default")
    c.add_argument("--p")
    c.add_argument("--q")
    c.add_argument("--d-max", type=int, default=6)
    c.set_defaults(handler=cmd_kodaira)

    c = sub.add_parser("selftest", parents=[common], help="deterministic invariant suite")
    c.set_defaults(handler=cmd_selftest)
    return p


# -- output ----------------------------------------------------------------------


def _flatten(doc, prefix=""):
    if isinstance(doc, dict):
        if doc.get("kind") == "rational_function":
            yield prefix, doc["text"]
            return
        if doc.get("kind") == "polynomial":
            yield prefix, str(read_polynomial(doc))
            return
        for k, v in doc.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else k)
    elif isinstance(doc, list) and doc and any(isinstance(v, (dict, list)) for v in doc):
        for i, v in enumerate(doc):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, json.dumps(doc, ensure_ascii=False)


def render_table(doc):
    rows = list(_flatten(doc))
    width = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def run(argv=None, stdout=None, stderr=None):
    """Parse ``argv``, run the command, write the document; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        doc, verdict = args.handler(args)
    except (UsageError, SchemaError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_SCHEMA
    except KodairaKitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_FALSE
    except ValueError as exc:
        # invalid parameters caught by constructors (e.g. n < 1)
        print(f"error: {exc}", file=stderr)
        return EXIT_SCHEMA
    stdout.write(render_table(doc) if args.format == "table" else dumps(doc))
    return EXIT_FALSE if verdict is False else EXIT_OK


def main(argv=None):
    try:
        code = run(argv)
    except SystemExit as exc:  # --help
        code = exc.code if isinstance(exc.code, int) else 0
    sys.exit(code)


if __name__ == "__main__":
    main()
