"""Command-line front end: ``resinterp <command> [file] [options]``.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success / "yes",
1 "no" (check, interpolate, failed selftest), 2 unreadable input, 3 a
well-formed problem that cannot be analysed (e.g. a positive-dimensional
ideal or inconsistent value data).
"""

import argparse
import json
import sys
from math import factorial

from . import corpus as corpus_mod
from .hermite import (
    InsufficientJetsError,
    JetData,
    NodeList,
    divided_difference,
    hermite_conditions,
    newton_interpolant,
)
from .ideal import ContainmentError, UnfactoredError, ZeroDimensionalError
from .interp import (
    betti_bound,
    degree_table,
    find_interpolant,
    interpolation_degree,
)
from .oracle import verify_theorem
from .parsing import ParseError
from .poly import DegreeError
from .problem import ProblemError, load_problem, parse_problem
from .residue import expand_as_points, moment_functionals
from .scalar import ONE, Scalar
from .scheme import ConversionError, FunctionOnX, Subscheme

EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_SEMANTIC = 0, 1, 2, 3
SEMANTIC_ERRORS = (
    ZeroDimensionalError,
    ContainmentError,
    UnfactoredError,
    ConversionError,
    InsufficientJetsError,
    DegreeError,
)


class UsageError(ValueError):
    pass


# rendering -----------------------------------------------------------------


def format_point(p):
    return "(" + ",".join(str(x) for x in p) + ")"


def derivative_label(names, alpha):
    if not any(alpha):
        return "g"
    return "g_" + "".join(name for name, a in zip(names, alpha) for _ in range(a))


def format_combination(pairs):
    """``[(coeff, label), ...]`` -> ``"1/2*a - b + (1+i)*c"``; zero coefficients skipped."""
    parts = []
    for c, label in pairs:
        if not c:
            continue
        neg = (c.re < 0) if c.re else (c.im < 0)
        if neg and not c.needs_parens():
            c = -c
        else:
            neg = False
        if c == ONE:
            body = label
        elif c.needs_parens():
            body = f"({c})*{label}"
        else:
            body = f"{c}*{label}"
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"


def condition_pairs(X, m):
    """Terms of a condition in g-values/jets when roots are known, else in coordinates."""
    names = X.ring.names
    if X.ci.roots is not None:
        pf = expand_as_points(m)
        return [
            (c / _alpha_factorial(alpha), derivative_label(names, alpha) + format_point(p))
            for p, alpha, c in pf.terms
        ]
    labels = X.basis.labels()
    return [(c, f"c[{s}]") for c, s in zip(m.coords, labels)]


def _alpha_factorial(alpha):
    out = 1
    for a in alpha:
        out *= factorial(a)
    return out


def hermite_label(var, k, nodes):
    inner = ",".join(str(p) for p in nodes)
    if k == 0:
        return f"g[{inner}]"
    mono = var if k == 1 else f"{var}^{k}"
    return f"({mono}*g)[{inner}]"


def hermite_coordinates(X, nodes, k):
    """Coordinates of ``g -> (z^k g)[p_0..p_r]`` over the quotient basis of X."""
    out = []
    for s in X.basis:
        mono = X.ring.monomial(tuple(a + b for a, b in zip(s, (k,))))
        out.append(divided_difference(JetData.from_poly(mono, nodes), nodes))
    return out


# problem -> objects ----------------------------------------------------------


def build_scheme(prob):
    ring = prob.ring
    if prob.kind == "points":
        return Subscheme.from_points(ring, prob.points, prob.order)
    if prob.kind == "hermite":
        return Subscheme.from_nodes(ring, prob.nodes)
    return Subscheme.from_generators(prob.ideal, prob.order)


def function_on(prob, X):
    if prob.g is not None:
        return FunctionOnX.from_poly(prob.g)
    if prob.values is not None:
        vals = prob.values
        if isinstance(vals, list):
            if prob.kind == "points":
                if len(vals) != len(prob.points):
                    raise ConversionError(f"expected {len(prob.points)} values, got {len(vals)}")
                vals = dict(zip(prob.points, vals))
            elif prob.kind == "hermite":
                distinct = NodeList(prob.nodes).distinct()
                if len(vals) != len(distinct):
                    raise ConversionError(f"expected {len(distinct)} values, got {len(vals)}")
                vals = {(p,): v for p, v in zip(distinct, vals)}
        return FunctionOnX.from_values(vals)
    if prob.jets is not None:
        return FunctionOnX.from_jets(prob.jets)
    raise UsageError("this command needs a function: give 'g', 'values' or 'jets'")


def hermite_jets(prob):
    nodes = NodeList(prob.nodes)
    if prob.g is not None:
        return JetData.from_poly(prob.g, nodes)
    if prob.values is not None:
        vals = prob.values
        if isinstance(vals, dict):
            return JetData({(p[0], 0): v for p, v in vals.items()})
        distinct = nodes.distinct()
        if len(vals) != len(distinct):
            raise ConversionError(f"expected {len(distinct)} values, got {len(vals)}")
        return JetData.from_values(distinct, vals)
    if prob.jets is not None:
        return JetData({(p[0], a[0]): v for (p, a), v in prob.jets.items()})
    raise UsageError("this command needs a function: give 'g', 'values' or 'jets'")


def target_degree(prob, args):
    d = args.d if args.d is not None else prob.d
    if d is None:
        raise UsageError("no target degree: give 'd:' in the file or --d")
    if d < 0:
        raise UsageError("target degree must be non-negative")
    return d


# commands --------------------------------------------------------------------


def cmd_conditions(prob, args, out):
    d = target_degree(prob, args)
    X = build_scheme(prob)
    if prob.kind == "hermite":
        nodes = NodeList(prob.nodes)
        ks = range(max(nodes.r - d, 0))
        conds = [
            {"k": k, "label": hermite_label(prob.vars[0], k, prob.nodes),
             "coefficients": hermite_coordinates(X, nodes, k)}
            for k in ks
        ]
        if args.json:
            _emit_json(out, X, d, [
                {"k": c["k"], "v_degree": None, "ell": None, "h": None, "v": None,
                 "label": c["label"], "coefficients": [str(x) for x in c["coefficients"]]}
                for c in conds
            ])
        elif not conds:
            out.write(f"no conditions; every g has an interpolant of degree <= {d}\n")
        else:
            for c in conds:
                out.write(f"{c['label']} = 0\n")
        return EXIT_OK
    conds = moment_functionals(X, d)
    if args.json:
        records = []
        for m in conds:
            rec = {
                "v_degree": m.v_degree,
                "ell": m.ell,
                "h": m.h_label(),
                "v": str(m.v),
                "coefficients": [str(x) for x in m.coords],
            }
            if X.ci.roots is not None:
                rec["terms"] = [
                    {"point": [str(x) for x in p], "derivative": list(alpha),
                     "coefficient": str(c / _alpha_factorial(alpha))}
                    for p, alpha, c in expand_as_points(m).terms
                ]
            records.append(rec)
        _emit_json(out, X, d, records)
    elif not conds:
        out.write(f"no conditions; every g has an interpolant of degree <= {d}\n")
    else:
        for m in conds:
            out.write(format_combination(condition_pairs(X, m)) + " = 0\n")
    return EXIT_OK


def _emit_json(out, X, d, records):
    try:
        points = [[str(x) for x in p] for p in X.points] if not X.empty and X.is_reduced() else None
    except (ValueError, UnfactoredError):
        points = None
    doc = {
        "vars": list(X.ring.names),
        "d": d,
        "basis": [] if X.empty else X.basis.labels(),
        "points": points,
        "conditions": records,
    }
    out.write(json.dumps(doc, indent=2) + "\n")


def read_conditions_json(text):
    """Coordinate vectors of the conditions in a ``conditions --json`` document."""
    doc = json.loads(text)
    return [[Scalar.coerce(x) for x in rec["coefficients"]] for rec in doc["conditions"]]


def cmd_check(prob, args, out):
    d = target_degree(prob, args)
    if prob.kind == "hermite":
        jets = hermite_jets(prob)
        bad = [(k, v) for k, v in hermite_conditions(jets, prob.nodes, d) if v]
        rows = [(hermite_label(prob.vars[0], k, prob.nodes), v) for k, v in bad]
    else:
        X = build_scheme(prob)
        c = function_on(prob, X).coordinates(X)
        rows = []
        for m in moment_functionals(X, d):
            v = m.on_coordinates(c)
            if v:
                rows.append((format_combination(condition_pairs(X, m)), v))
    if args.json:
        out.write(json.dumps({
            "d": d,
            "interpolable": not rows,
            "violated": [{"condition": lhs, "value": str(v)} for lhs, v in rows],
        }, indent=2) + "\n")
    elif not rows:
        out.write("interpolant exists\n")
    else:
        for lhs, v in rows:
            out.write(f"no interpolant: {lhs} = {v} != 0\n")
    return EXIT_NO if rows else EXIT_OK


def cmd_interpolate(prob, args, out):
    d = target_degree(prob, args)
    if prob.kind == "hermite":
        jets = hermite_jets(prob)
        ok = all(not v for _, v in hermite_conditions(jets, prob.nodes, d))
        G = newton_interpolant(jets, prob.nodes, prob.ring) if ok else None
    else:
        X = build_scheme(prob)
        G = find_interpolant(X, function_on(prob, X).coordinates(X), d)
    text = None if G is None else G.format(prob.order)
    if args.json:
        out.write(json.dumps({"d": d, "interpolant": text}, indent=2) + "\n")
    else:
        out.write(("none" if text is None else text) + "\n")
    return EXIT_NO if G is None else EXIT_OK


def cmd_degree(prob, args, out):
    X = build_scheme(prob)
    deg = interpolation_degree(X)
    bound = betti_bound(X)
    table = degree_table(X, deg)
    if args.json:
        out.write(json.dumps({
            "interpolation_degree": deg,
            "betti_bound": bound,
            "conditions": {str(d): k for d, k in table.items()},
        }, indent=2) + "\n")
    else:
        counts = ", ".join(f"d={d}:{k}" for d, k in table.items())
        out.write(f"interpolation degree: {deg}; betti bound: {bound}; conditions: {counts}\n")
    return EXIT_OK


def cmd_selftest(prob, args, out):
    if prob is not None:
        X = build_scheme(prob)
        bound = betti_bound(X)
        report = verify_theorem(X, bound + 1)
        if args.json:
            out.write(json.dumps({
                "ok": report.ok,
                "checks": [{"d": c.d, "conditions": c.conditions, "annihilator": c.annihilator,
                            "equal": c.equal} for c in report.checks],
            }, indent=2) + "\n")
        else:
            for line in report.lines():
                out.write(line + "\n")
            out.write("selftest: " + ("ok" if report.ok else "FAILED") + "\n")
        return EXIT_OK if report.ok else EXIT_NO
    seed = args.seed if args.seed is not None else 0
    bad = 0
    results = []
    for inst in corpus_mod.corpus(args.count, seed):
        bound = betti_bound(inst.X)
        report = verify_theorem(inst.X, bound + 1)
        bad += not report.ok
        results.append((inst, bound, report))
        if not args.json:
            out.write(f"{inst.describe()}: d=0..{bound + 1} {'ok' if report.ok else 'MISMATCH'}\n")
    if args.json:
        out.write(json.dumps({
            "seed": seed,
            "instances": len(results),
            "mismatches": bad,
            "results": [{"instance": i.describe(), "ok": r.ok} for i, _, r in results],
        }, indent=2) + "\n")
    else:
        out.write(f"selftest: {len(results)} instances, {bad} mismatches\n")
    return EXIT_OK if not bad else EXIT_NO


COMMANDS = {
    "conditions": cmd_conditions,
    "check": cmd_check,
    "interpolate": cmd_interpolate,
    "degree": cmd_degree,
    "selftest": cmd_selftest,
}


def build_parser():
    ap = argparse.ArgumentParser(
        prog="resinterp",
        description="Moment conditions and interpolation degree for finite schemes.",
    )
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("file", nargs="?", help="problem file ('-' for stdin; optional for selftest)")
    ap.add_argument("--d", type=int, help="target degree (overrides the file)")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--order", choices=("lex", "grevlex"), help="monomial order (overrides the file)")
    ap.add_argument("--seed", type=int, help="corpus seed for selftest")
    ap.add_argument("--count", type=int, default=100, help="corpus size for selftest")
    return ap


def _read_problem(path):
    if path == "-":
        return parse_problem(sys.stdin.read())
    return load_problem(path)


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.file is None:
            if args.command != "selftest":
                raise UsageError(f"'{args.command}' needs a problem file")
            prob = None
        else:
            prob = _read_problem(args.file)
            if args.order:
                prob.order = args.order
        return COMMANDS[args.command](prob, args, out)
    except (ProblemError, ParseError, OSError, UnicodeDecodeError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except SEMANTIC_ERRORS + (UsageError,) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
