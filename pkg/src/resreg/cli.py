"""Command line interface.

Exit status: 0 all checks passed, 1 a mathematical check failed,
2 bad input or usage.
"""

import argparse
import json
import os
import sys

from . import checks
from .families import parse_family
from .formats import format_edge_list, encode_graph6, parse_edge_list, parse_graph6, read_graph6_file
from .graph import PRODUCTS, GraphError
from .linalg import format_rational
from .oracle import BudgetExceeded
from .spectral import DEFAULT_BOUND_TOL, complete_cartesian_k2_spectrum_exact

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def default_tol():
    env = os.environ.get("RESIST_TOL")
    if env is None:
        return DEFAULT_BOUND_TOL
    try:
        return float(env)
    except ValueError:
        raise UsageError(f"RESIST_TOL={env!r} is not a number") from None


def positive_float(text):
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return x


def positive_int(text):
    x = int(text)
    if x < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return x


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("input")
    src.add_argument("--family", help="family such as complete:4, cocktail:3, bipartite:2,3, figure2")
    src.add_argument("--graph6", help="inline graph6 string")
    src.add_argument("--input", help="file to read (see --format)")
    src.add_argument("--format", choices=("graph6", "edgelist", "family"), default=None,
                     help="format of --input (default: graph6, or edgelist for *.txt/*.edges)")
    src.add_argument("--line", type=positive_int, default=None,
                     help="1-based line of a graph6 file to use (default: first graph)")
    common.add_argument("--product", choices=sorted(PRODUCTS), help="apply a K2 product first")
    common.add_argument("--tol", type=positive_float, default=None,
                        help="tolerance for float checks (default 1e-8, env RESIST_TOL)")
    common.add_argument("--output", choices=("json", "csv", "text"), default="text")
    common.add_argument("--out", dest="out_path", help="write the report here instead of stdout")

    p = argparse.ArgumentParser(prog="resreg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="profile, R-spectrum and bounds of one graph")
    sub.add_parser("classify", parents=[common], help="resistance regularity label only")
    c = sub.add_parser("construct", parents=[common], help="emit a family/product graph")
    c.add_argument("--emit", choices=("graph6", "edgelist"), default="graph6")
    sub.add_parser("verify", parents=[common],
                   help="closed-form spectra, Q polynomial, energy identities and bounds")
    s = sub.add_parser("scan", parents=[common], help="verify every graph of a graph6 file")
    s.add_argument("--jobs", type=positive_int, default=1, help="worker processes")
    sub.add_parser("oracle-check", parents=[common],
                   help="compare exact resistances with spanning-forest counts")
    return p


def _input_format(args):
    if args.format:
        return args.format
    if args.input and args.input.endswith((".txt", ".edges", ".edgelist")):
        return "edgelist"
    return "graph6"


def load_graphs(args):
    """List of graphs named on the command line (several only for whole graph6 files)."""
    given = [x for x in (args.family, args.graph6, args.input) if x]
    if len(given) != 1:
        raise UsageError("give exactly one of --family, --graph6, --input")
    if args.family:
        graphs = [parse_family(args.family)]
    elif args.graph6:
        graphs = [parse_graph6(args.graph6, label=args.graph6)]
    else:
        fmt = _input_format(args)
        if fmt == "edgelist":
            with open(args.input) as fh:
                graphs = [parse_edge_list(fh.read(), label=args.input)]
        elif fmt == "family":
            with open(args.input) as fh:
                graphs = [parse_family(line) for line in fh if line.strip()]
        else:
            graphs = [g for ln, g in read_graph6_file(args.input) if args.line in (None, ln)]
            if not graphs:
                raise UsageError(f"no graph found in {args.input}" +
                                 (f" at line {args.line}" if args.line else ""))
    if args.product:
        graphs = [PRODUCTS[args.product](g) for g in graphs]
    return graphs


def first_graph(args):
    return load_graphs(args)[0]


def emit(args, text):
    if args.out_path:
        with open(args.out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj):
    return json.dumps(obj, indent=2) + "\n"


def _checks_text(name, cs):
    lines = [f"{'PASS' if c.ok else 'FAIL'}  {name}  {c.id}  {c.detail}".rstrip() for c in cs]
    return "\n".join(lines) + "\n"


# -- commands ----------------------------------------------------------------

def cmd_analyze(args, tol):
    g = first_graph(args)
    a = checks.analyze(g, tol)
    if args.output == "json":
        emit(args, _dump(a.to_dict()))
    elif args.output == "csv":
        emit(args, a.profile.R.to_csv())
    else:
        p, sp = a.profile, a.spectrum
        out = [f"graph      {g.name}  (n={g.n}, m={g.m})",
               f"label      {p.label}",
               f"row sums   {' '.join(map(str, p.rdeg))}",
               f"Kirchhoff  {p.kf}",
               f"S(G)       {p.s_sum}",
               f"energy     {sp.energy:.12g}",
               f"radius     {sp.radius:.12g}",
               "spectrum   " + ", ".join(f"{v:.10g}^{m}" for v, m in sp.groups)]
        for e in a.bounds.entries:
            out.append(f"{e.id:<22} lhs={e.lhs:.12g} rhs={e.rhs:.12g} holds={e.holds} "
                       f"equality={e.equality} [{e.condition_label}={e.condition_holds}]")
        emit(args, "\n".join(out) + "\n")
    return EXIT_OK if not (a.bounds.violations() or a.bounds.mismatches()) else EXIT_FAIL


def cmd_classify(args, tol):
    from .resistance import classify
    g = first_graph(args)
    label = classify(g)
    if args.output == "json":
        emit(args, _dump({"graph": g.name, "label": label.to_dict()}))
    else:
        emit(args, f"{g.name}: {label}\n")
    return EXIT_OK


def cmd_construct(args, tol):
    g = first_graph(args)
    emit(args, format_edge_list(g) if args.emit == "edgelist" else encode_graph6(g) + "\n")
    return EXIT_OK


def cmd_verify(args, tol):
    product = args.product
    args.product = None
    g = first_graph(args)
    report = {"graph": g.name}
    if product:
        prod, expected, a, cs = checks.verify_product(g, product, tol)
        report["product"] = prod.name
        if expected is not None:
            report["expected_spectrum"] = expected.to_dict()
        if product == "cartesian_k2" and g.is_complete() and g.n >= 2:
            report["expected_spectrum_exact"] = [
                [format_rational(v), m] for v, m in complete_cartesian_k2_spectrum_exact(g.n)]
        name = prod.name
    else:
        a, cs = checks.verify_graph(g, tol)
        name = g.name
    report["profile"] = a.profile.to_dict()
    report["spectrum"] = a.spectrum.to_dict()
    report["checks"] = [c.to_dict() for c in cs]
    ok = all(c.ok for c in cs)
    report["ok"] = ok
    if args.output == "json":
        emit(args, _dump(report))
    else:
        head = f"spectrum {name}: " + ", ".join(f"{v:.10g}^{m}" for v, m in a.spectrum.groups) + "\n"
        if "expected_spectrum_exact" in report:
            head += "closed form: " + ", ".join(
                f"{v}^{m}" for v, m in complete_cartesian_k2_spectrum_exact(g.n)) + "\n"
        emit(args, head + _checks_text(name, cs))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_scan(args, tol):
    if not args.input:
        raise UsageError("scan needs --input FILE.g6")
    summary = checks.scan(args.input, tol, args.jobs)
    if args.output == "json":
        emit(args, _dump(summary.to_dict()))
    else:
        out = [f"graphs     {summary.total}"]
        out += [f"  {k:<24}{v}" for k, v in sorted(summary.labels.items())]
        out.append(f"violations {len(summary.violations)}")
        out += [f"  {gid} {cid}" for gid, cid in summary.violations]
        out.append(f"mismatches {len(summary.mismatches)}")
        out += [f"  {gid} {cid}" for gid, cid in summary.mismatches]
        out.append(f"failures   {len(summary.failures)}")
        out += [f"  {gid} {cid}" for gid, cid in summary.failures]
        out.append(f"elapsed    {summary.elapsed:.2f}s")
        emit(args, "\n".join(out) + "\n")
    return EXIT_OK if summary.ok else EXIT_FAIL


def cmd_oracle_check(args, tol):
    results = []
    for g in load_graphs(args):
        results.append((g.name, checks.oracle_check(g)))
    if args.output == "json":
        emit(args, _dump([{"graph": n, **c.to_dict()} for n, c in results]))
    else:
        emit(args, "".join(_checks_text(n, [c]) for n, c in results))
    return EXIT_OK if all(c.ok for _, c in results) else EXIT_FAIL


COMMANDS = {
    "analyze": cmd_analyze,
    "classify": cmd_classify,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "oracle-check": cmd_oracle_check,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        tol = args.tol if args.tol is not None else default_tol()
        return COMMANDS[args.command](args, tol)
    except (UsageError, GraphError, BudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
