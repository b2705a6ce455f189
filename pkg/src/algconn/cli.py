"""Command-line front end.

Subcommands: compute, family, perron, charset, verify, census.  All numeric
logic lives in the library modules; this layer parses arguments, loads
graphs, applies the order cap and renders reports.  Exit codes: 0 success,
1 verification counterexample, 2 cap exceeded or vacuous verification,
64 usage error, 65 malformed graph file.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Any, Optional

import numpy as np

from . import extremal, formats, perron, spectral
from .errors import CapExceededError, EmptyClassError, FormatError, GraphError
from .families import CONSTRUCTORS, FamilySpec, build_family
from .graph import Graph, is_cut_vertex

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_CAP = 2
EXIT_USAGE = 64
EXIT_BAD_FILE = 65

CLI_ORDER_CAP = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _json_scalar(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        text = format(value, ".17g")
        if not any(ch in text for ch in ".eE"):
            text += ".0"
        return text
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        out = value.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{out}"'
    raise TypeError(f"cannot serialize {type(value)}")


def to_json(value: Any) -> str:
    """JSON text with floats at 17 significant digits (lossless)."""
    if isinstance(value, dict):
        items = ", ".join(f'{_json_scalar(str(k))}: {to_json(v)}' for k, v in value.items())
        return "{" + items + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in value) + "]"
    if isinstance(value, np.ndarray):
        return to_json([float(x) for x in value])
    return _json_scalar(value)


def _load_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    g = formats.parse_auto(text)
    if g.n > CLI_ORDER_CAP:
        raise CapExceededError(f"CLI supports n <= {CLI_ORDER_CAP}, got {g.n}")
    return g


def _emit(report: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(to_json(report))
    else:
        for line in lines:
            print(line)


def _cmd_compute(args: argparse.Namespace) -> int:
    g = _load_graph(args.graphfile)
    mu, mult, fiedler = spectral.algebraic_connectivity(g, mult_tol=args.mult_tol)
    spec = spectral.eigen_sym(spectral.laplacian(g), mult_tol=args.mult_tol)
    report = {
        "command": "compute",
        "inputs": {"graphfile": args.graphfile, "n": g.n, "m": g.m},
        "results": {
            "mu": mu,
            "multiplicity": mult,
            "fiedler": fiedler,
            "eigenvalues": spec.eigenvalues,
        },
        "tolerances": {"multiplicity": args.mult_tol},
    }
    lines = [
        f"order {g.n}, size {g.m}",
        f"mu = {mu:.12g} (multiplicity {mult})",
        "fiedler = " + " ".join(f"{x:.9g}" for x in fiedler),
        "eigenvalues = " + " ".join(f"{x:.9g}" for x in spec.eigenvalues),
    ]
    _emit(report, args.json, lines)
    return EXIT_OK


def _cmd_family(args: argparse.Namespace) -> int:
    spec = FamilySpec(args.family_id, tuple(args.params))
    g = build_family(spec)
    if args.format == "graph6":
        print(formats.write_graph6(g))
    else:
        sys.stdout.write(formats.write_edge_list(g))
    return EXIT_OK


def _cmd_perron(args: argparse.Namespace) -> int:
    g = _load_graph(args.graphfile)
    decomp = perron.perron_components_at(g, args.vertex, tie_tol=args.tie_tol)
    comps = [
        {
            "vertices": sorted(c.vertices),
            "perron_value": c.perron_value,
            "is_perron": c.is_perron,
        }
        for c in decomp.components
    ]
    balance = None
    if len(decomp.components) >= 2:
        x, mu_est = perron.solve_balance(g, args.vertex)
        balance = {"x": x, "mu_estimate": mu_est}
    report = {
        "command": "perron",
        "inputs": {"graphfile": args.graphfile, "vertex": args.vertex, "n": g.n},
        "results": {"components": comps, "balance": balance},
        "tolerances": {"tie": args.tie_tol},
    }
    lines = [f"components at vertex {args.vertex}:"]
    for c in comps:
        mark = " *" if c["is_perron"] else ""
        lines.append(
            f"  {c['vertices']} rho = {c['perron_value']:.12g}{mark}"
        )
    if balance is not None:
        lines.append(
            f"balance: x = {balance['x']:.12g}, mu estimate = {balance['mu_estimate']:.12g}"
        )
    else:
        lines.append("not a cut vertex; no balance equation")
    _emit(report, args.json, lines)
    return EXIT_OK


def _cmd_charset(args: argparse.Namespace) -> int:
    g = _load_graph(args.graphfile)
    _, _, fiedler = spectral.algebraic_connectivity(g)
    cs = perron.characteristic_set(g, fiedler, zero_tol=args.zero_tol)
    report = {
        "command": "charset",
        "inputs": {"graphfile": args.graphfile, "n": g.n},
        "results": {
            "vertices": list(cs.vertices),
            "edges": [list(e) for e in cs.edges],
            "mu_multiplicity": cs.mu_multiplicity,
        },
        "tolerances": {"zero_coordinate": args.zero_tol},
    }
    lines = [
        f"characteristic vertices: {list(cs.vertices)}",
        f"characteristic edges: {[tuple(e) for e in cs.edges]}",
        f"mu multiplicity: {cs.mu_multiplicity}",
    ]
    _emit(report, args.json, lines)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    report = extremal.verify_theorem(args.theorem_id, args.n_min, args.n_max, k=args.k)
    payload = {
        "command": "verify",
        "inputs": {
            "theorem": args.theorem_id,
            "n_min": args.n_min,
            "n_max": args.n_max,
            "k": args.k,
        },
        "results": {
            "status": report.status,
            "cases": [
                {
                    "label": c.label,
                    "status": c.status,
                    "detail": c.detail,
                    "counterexample": (
                        formats.write_graph6(c.counterexample)
                        if c.counterexample
                        else None
                    ),
                }
                for c in report.cases
            ],
        },
        "tolerances": {"tie": extremal.TIE_TOL},
    }
    lines = [f"{args.theorem_id}: {report.status}"]
    for c in report.cases:
        lines.append(f"  [{c.status}] {c.label}  {c.detail}")
        if c.counterexample is not None:
            lines.append(
                "    counterexample edges: "
                f"{c.counterexample.edge_list()}"
            )
    _emit(payload, args.json, lines)
    if report.status == "fail":
        return EXIT_COUNTEREXAMPLE
    if report.status == "vacuous":
        return EXIT_CAP
    return EXIT_OK


def _cmd_census(args: argparse.Namespace) -> int:
    c = extremal.GraphClass(args.class_id, args.n, k=args.k, d=args.d)
    try:
        report = extremal.extremal_mu(c, args.objective, workers=args.workers)
    except EmptyClassError:
        print(f"class {c} is empty", file=sys.stderr)
        return EXIT_CAP
    payload = {
        "command": "census",
        "inputs": {
            "class": args.class_id,
            "n": args.n,
            "k": args.k,
            "d": args.d,
            "objective": args.objective,
        },
        "results": {
            "class_size": report.class_size,
            "optimum": report.optimum,
            "unique": report.unique,
            "extremizers": [
                formats.write_graph6(g) for g in report.extremizer_graphs
            ],
            "claimed_family": (
                str(report.claimed_family) if report.claimed_family else None
            ),
            "claimed_value": report.claimed_value,
        },
        "tolerances": {"tie": extremal.TIE_TOL},
    }
    lines = [
        f"{c}: {report.class_size} members",
        f"{args.objective} mu = {report.optimum:.12g} "
        f"({'unique' if report.unique else f'{len(report.extremizers)}-way tie'})",
    ]
    for g in report.extremizer_graphs:
        lines.append(f"  extremizer: {formats.write_graph6(g)}")
    if report.claimed_family is not None:
        lines.append(
            f"claimed family {report.claimed_family} has mu = {report.claimed_value:.12g}"
        )
    _emit(payload, args.json, lines)
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="algconn", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="algebraic connectivity and spectrum")
    p.add_argument("graphfile")
    p.add_argument("--json", action="store_true")
    p.add_argument("--mult-tol", type=float, default=spectral.MULTIPLICITY_TOL)
    p.set_defaults(fn=_cmd_compute)

    p = sub.add_parser("family", help="emit a named family graph")
    p.add_argument("family_id", choices=sorted(CONSTRUCTORS))
    p.add_argument("params", nargs="+", type=int)
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    p.set_defaults(fn=_cmd_family)

    p = sub.add_parser("perron", help="Perron components at a vertex")
    p.add_argument("graphfile")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--tie-tol", type=float, default=perron.PERRON_TIE_TOL)
    p.set_defaults(fn=_cmd_perron)

    p = sub.add_parser("charset", help="characteristic set of the Fiedler vector")
    p.add_argument("graphfile")
    p.add_argument("--json", action="store_true")
    p.add_argument("--zero-tol", type=float, default=perron.ZERO_COORD_TOL)
    p.set_defaults(fn=_cmd_charset)

    p = sub.add_parser("verify", help="certify a registered statement by enumeration")
    p.add_argument("theorem_id", choices=extremal.theorem_ids())
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("census", help="extremal table over a graph class")
    p.add_argument("class_id", choices=extremal.CLASS_IDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--objective", choices=("min", "max"), required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument(
        "--workers",
        type=int,
        default=int(os.environ.get("SPECTRAL_WORKERS", "1")),
    )
    p.set_defaults(fn=_cmd_census)
    return parser


def run(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_FILE
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
