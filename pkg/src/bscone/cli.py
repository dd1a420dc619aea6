"""Command line entry point.

Exit codes: 0 success, 1 usage or input-format error, 2 domain error
(table not in the cone, bad chain, oracle bounds exceeded, ...).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .cohomology import (
    SupernaturalTable,
    TruncationSpec,
    facet_functional,
    pairing,
    truncated_pairing,
)
from .core import BettiTable, ChainTriple, format_rational, rational_str, render_table, table_from_json, table_to_json
from .decompose import Decomposition, decompose
from .errors import DomainError, NotInCone
from .hilbert import codimension, hilbert_function, hilbert_numerator, multiplicity, multiplicity_bounds_check
from .koszul import betti_table, format_monomial, parse_ideal, random_ideal
from .pure import pure_diagram


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _window(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected kmin:kmax, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError("empty window")
    return lo, hi


def _kappa(text: str):
    if text.lower() in ("inf", "+inf", "infinity"):
        return math.inf
    return int(text)


def _read_table(path: str, stdin) -> BettiTable:
    try:
        if path == "-":
            text = stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
        obj = json.loads(text)
        if isinstance(obj, dict) and "table" in obj and "entries" not in obj:
            obj = obj["table"]
        return table_from_json(obj)
    except (OSError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot read Betti table from {path}: {exc}")


def dumps(obj, indent: int = 0) -> str:
    """JSON with objects spread over lines and scalar lists kept inline."""
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{pad}  {json.dumps(k)}: {dumps(v, indent + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
        if all(isinstance(x, list) and not any(isinstance(y, (dict, list)) for y in x) for x in obj):
            rows = [pad + "  " + json.dumps(x) for x in obj]
        else:
            rows = [pad + "  " + dumps(x, indent + 1) for x in obj]
        return "[\n" + ",\n".join(rows) + "\n" + pad + "]"
    return json.dumps(obj)


class _Out:
    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream

    def emit(self, obj, text: str):
        if self.fmt in ("json", "both"):
            self.stream.write(dumps(obj) + "\n")
        if self.fmt in ("paper", "both"):
            self.stream.write(text.rstrip("\n") + "\n")


def _indent(text: str, prefix: str = "  ") -> str:
    return "\n".join(prefix + line for line in text.splitlines())


# ---------------------------------------------------------------------------
# subcommands


def _decomposition_json(D: Decomposition, normalization: str) -> dict:
    parts = []
    for p in D.parts:
        coeff = p.coefficient if normalization == "canonical" else p.normalized_coefficient
        table = p.diagram.canonical_integer_table if normalization == "canonical" else p.diagram.normalized_table
        parts.append({
            "coefficient": format_rational(coeff),
            "degrees": list(p.degrees),
            "diagram": table_to_json(table),
        })
    return {"normalization": normalization, "source": table_to_json(D.source), "parts": parts}


def _decomposition_text(D: Decomposition, normalization: str) -> str:
    blocks = [render_table(D.source), "="]
    for n, p in enumerate(D.parts):
        coeff = p.coefficient if normalization == "canonical" else p.normalized_coefficient
        table = p.diagram.canonical_integer_table if normalization == "canonical" else p.diagram.normalized_table
        head = ("  " if n == 0 else "+ ") + f"{rational_str(coeff)} * {p.diagram.degree_sequence}"
        blocks.append(head + "\n" + _indent(render_table(table), "    "))
    return "\n".join(blocks)


def cmd_decompose(args, out: _Out, stdin):
    beta = _read_table(args.table, stdin)
    D = decompose(beta)
    out.emit(_decomposition_json(D, args.normalization), _decomposition_text(D, args.normalization))


def cmd_pure(args, out: _Out, stdin):
    try:
        pi = pure_diagram(args.degrees, args.vars)
    except ValueError as exc:
        raise UsageError(str(exc))
    obj = {
        "degrees": list(pi.degree_sequence),
        "normalized": table_to_json(pi.normalized_table),
        "canonical": table_to_json(pi.canonical_integer_table),
        "scale": format_rational(pi.scale),
    }
    text = (
        f"pure diagram {pi.degree_sequence}\nnormalized:\n{render_table(pi.normalized_table)}\n"
        f"canonical ({rational_str(pi.scale)} * normalized):\n{render_table(pi.canonical_integer_table)}"
    )
    out.emit(obj, text)


def _supernatural(args) -> SupernaturalTable:
    try:
        return SupernaturalTable(args.roots, args.rank)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc))


def cmd_supernatural(args, out: _Out, stdin):
    T = _supernatural(args)
    lo, hi = args.window
    rows = []
    for j in range(T.dim + 1):
        rows.append([format_rational(T.gamma(j, k)) for k in range(lo, hi + 1)])
    obj = {
        "roots": list(T.roots),
        "rank": format_rational(T.rank),
        "window": [lo, hi],
        "gamma": rows,
    }
    width = max(len(str(x)) for x in [*range(lo, hi + 1), *(v for row in rows for v in row)])
    lines = ["k:   " + " ".join(str(k).rjust(width) for k in range(lo, hi + 1))]
    for j in reversed(range(T.dim + 1)):
        lines.append(f"h^{j}: " + " ".join(str(v).rjust(width) for v in rows[j]))
    out.emit(obj, "\n".join(lines))


def cmd_pair(args, out: _Out, stdin):
    beta = _read_table(args.table, stdin)
    T = _supernatural(args)
    if args.tau is None:
        if args.kappa is not None:
            raise UsageError("--kappa requires --tau")
        value = pairing(beta, T)
        obj = {"roots": list(T.roots), "rank": format_rational(T.rank), "value": format_rational(value)}
        text = f"<beta, gamma> = {rational_str(value)}"
    else:
        kappa = math.inf if args.kappa is None else args.kappa
        value = truncated_pairing(beta, T, TruncationSpec(args.tau, kappa))
        obj = {
            "roots": list(T.roots),
            "rank": format_rational(T.rank),
            "tau": args.tau,
            "kappa": "inf" if kappa == math.inf else kappa,
            "value": format_rational(value),
        }
        text = f"<beta, gamma>_(tau={args.tau}, kappa={obj['kappa']}) = {rational_str(value)}"
    out.emit(obj, text)


def cmd_facet(args, out: _Out, stdin):
    try:
        chain = ChainTriple(args.a, args.b, args.c)
    except ValueError as exc:
        raise UsageError(str(exc))
    vars = args.vars if args.vars is not None else max(len(args.a), len(args.b), len(args.c)) - 1
    F = facet_functional(chain, max(vars, 1))
    obj = {"a": list(chain.a), "b": list(chain.b), "c": list(chain.c), "vars": max(vars, 1)}
    if F.coordinate is not None:
        obj["kind"] = "coordinate"
        obj["coordinate"] = list(F.coordinate)
        text = f"facet functional: beta -> beta[{F.coordinate[0]},{F.coordinate[1]}]"
    else:
        obj["kind"] = "truncated_pairing"
        obj["roots"] = list(F.table.roots)
        obj["rank"] = format_rational(F.table.rank)
        obj["tau"] = F.trunc.tau
        obj["kappa"] = F.trunc.kappa
        text = (
            f"facet functional: <-, gamma(roots={F.table.roots}, rank={rational_str(F.table.rank)})>"
            f"_(tau={F.trunc.tau}, kappa={F.trunc.kappa})"
        )
    evals = {}
    for name, seq in (("a", chain.a), ("b", chain.b), ("c", chain.c)):
        evals[name] = format_rational(F(pure_diagram(seq, obj["vars"]).canonical_integer_table))
    obj["values_on_chain"] = evals
    text += "\nvalues on canonical diagrams: " + ", ".join(f"{k}: {v}" for k, v in evals.items())
    if args.eval is not None:
        beta = _read_table(args.eval, stdin)
        value = F(beta)
        obj["value"] = format_rational(value)
        text += f"\nvalue on {args.eval}: {rational_str(value)}"
    out.emit(obj, text)


def cmd_betti(args, out: _Out, stdin):
    if args.ideal is not None:
        names = [v.strip() for v in args.vars.split(",") if v.strip()]
        if not names:
            raise UsageError("--vars needs at least one variable name")
        try:
            I = parse_ideal(args.ideal, names)
        except ValueError as exc:
            raise UsageError(str(exc))
    else:
        I = random_ideal(args.random, args.nvars, args.max_gens, args.max_deg)
        names = [f"x{i + 1}" for i in range(I.vars)]
    beta = betti_table(I)
    obj = table_to_json(beta)
    obj["ideal"] = [format_monomial(g, names) for g in I.generators]
    out.emit(obj, "ideal: (" + ", ".join(obj["ideal"]) + ")\n" + render_table(beta))


def cmd_hilbert(args, out: _Out, stdin):
    beta = _read_table(args.table, stdin)
    N = hilbert_numerator(beta)
    obj = {"numerator": {str(e): format_rational(c) for e, c in N.coefficients.items()}}
    lines = [f"numerator: {N}"]
    if not N.is_zero():
        s, mult = codimension(beta), multiplicity(beta)
        obj["codimension"] = s
        obj["multiplicity"] = format_rational(mult)
        lines.append(f"codimension: {s}")
        lines.append(f"multiplicity: {rational_str(mult)}")
    if args.at is not None:
        value = hilbert_function(beta, args.at)
        obj["at"] = {"k": args.at, "value": format_rational(value)}
        lines.append(f"h({args.at}) = {rational_str(value)}")
    if args.series is not None:
        series = [format_rational(hilbert_function(beta, k)) for k in range(args.series + 1)]
        obj["series"] = series
        lines.append("h(0..{}) = {}".format(args.series, ", ".join(str(v) for v in series)))
    out.emit(obj, "\n".join(lines))


def cmd_check_bounds(args, out: _Out, stdin):
    beta = _read_table(args.table, stdin)
    rep = multiplicity_bounds_check(beta, args.window)
    obj = {
        "minimal_shifts": list(rep.shifts.minimal),
        "maximal_shifts": list(rep.shifts.maximal),
        "projective_dimension": rep.shifts.projective_dimension,
        "codimension": rep.shifts.codimension,
        "multiplicity": format_rational(rep.multiplicity),
        "bound": format_rational(rep.bound),
        "bound_holds": rep.bound_holds,
        "equality": rep.equality,
        "pure": rep.pure,
        "parts": rep.parts,
        "window": rep.window,
        "series_lower_ok": rep.series_lower_ok,
        "series_upper_ok": rep.series_upper_ok,
    }
    out.emit(obj, "\n".join(rep.lines()))


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "paper", "both"), default="json",
                        help="output format (default: json)")

    parser = _Parser(prog="bscone", description="Exact Boij-Soederberg computations on Betti tables.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", parents=[common], help="greedy decomposition into pure diagrams")
    p.add_argument("table", help="Betti table JSON file, or - for stdin")
    p.add_argument("--normalization", choices=("canonical", "product"), default="canonical",
                   help="report coefficients against canonical integer diagrams or the 1/|d_j-d_i| normalization")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("pure", parents=[common], help="pure diagram of a degree sequence")
    p.add_argument("degrees", type=_ints, help="comma separated degrees, e.g. 0,2,3,5 (use -- before negatives)")
    p.add_argument("--vars", type=int, default=None, help="number of ring variables (default len(d)-1)")
    p.set_defaults(func=cmd_pure)

    sn = argparse.ArgumentParser(add_help=False)
    sn.add_argument("--roots", type=_ints, required=True,
                    help="strictly decreasing roots, e.g. --roots=0,-4 (empty for P^0)")
    sn.add_argument("--rank", default=None, help="rank as integer or num/den (default: smallest integral)")

    p = sub.add_parser("supernatural", parents=[common, sn], help="print a supernatural cohomology table")
    p.add_argument("--window", type=_window, required=True, help="twist range kmin:kmax, e.g. --window=-7:3")
    p.set_defaults(func=cmd_supernatural)

    p = sub.add_parser("pair", parents=[common, sn], help="pair a Betti table with a supernatural table")
    p.add_argument("table", help="Betti table JSON file, or - for stdin")
    p.add_argument("--tau", type=int, default=None, help="truncation position")
    p.add_argument("--kappa", type=_kappa, default=None, help="truncation degree (default inf)")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("facet", parents=[common], help="facet functional of a chain a > b > c")
    p.add_argument("--a", type=_ints, required=True)
    p.add_argument("--b", type=_ints, required=True)
    p.add_argument("--c", type=_ints, required=True)
    p.add_argument("--vars", type=int, default=None)
    p.add_argument("--eval", default=None, metavar="TABLE", help="also evaluate on this Betti table")
    p.set_defaults(func=cmd_facet)

    p = sub.add_parser("betti", parents=[common], help="Betti table of S/I for a monomial ideal I")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--ideal", help='generators, e.g. "x^2,x*y,x*z^2"')
    src.add_argument("--random", type=int, metavar="SEED", help="use a seeded random ideal")
    p.add_argument("--vars", default=None, help="variable names for --ideal, e.g. x,y,z")
    p.add_argument("--nvars", type=int, default=3, help="variables for --random")
    p.add_argument("--max-gens", type=int, default=4, help="generators for --random")
    p.add_argument("--max-deg", type=int, default=4, help="generator degree for --random")
    p.add_argument("--field", choices=("QQ",), default="QQ", help="ground field (only QQ)")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert numerator, function and multiplicity")
    p.add_argument("table")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--at", type=int, default=None, help="evaluate the Hilbert function at k")
    g.add_argument("--series", type=int, default=None, metavar="K", help="Hilbert function for k = 0..K")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("check-bounds", parents=[common], help="multiplicity and Hilbert series bounds")
    p.add_argument("table")
    p.add_argument("--window", type=int, default=None, help="largest k compared (default max shift + 2n)")
    p.set_defaults(func=cmd_check_bounds)
    return parser


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    if args.command == "betti" and args.ideal is not None and not args.vars:
        stderr.write("bscone betti: error: --ideal requires --vars\n")
        return 1
    try:
        args.func(args, _Out(args.format, stdout), stdin)
    except UsageError as exc:
        stderr.write(f"bscone {args.command}: error: {exc}\n")
        return 1
    except NotInCone as exc:
        stderr.write(f"bscone {args.command}: NotInCone: {exc} (after {len(exc.partial)} part(s))\n")
        return 2
    except DomainError as exc:
        stderr.write(f"bscone {args.command}: {type(exc).__name__}: {exc}\n")
        return 2
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
