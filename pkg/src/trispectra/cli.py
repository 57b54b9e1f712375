"""Command-line front door.

Subcommands: triangulate, metrics, transfer, spectrum, verify,
pseudofractal.  Exit codes: 0 ok, 1 verification failure, 2 input
error, 3 numerical failure.  Tolerances can be overridden with
TRISPECTRA_TOL_EIG, TRISPECTRA_TOL_TRANSFER, etc.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import verify
from .errors import ConvergenceFailure, TrispectraError
from .graph import (
    EdgeListParseError,
    builtin_graph,
    format_edge_list,
    parse_edge_list,
)
from .iterated import pseudofractal_metrics
from .metrics import compute_metrics
from .spectral import eigendecompose, lift_spectrum
from .transfer import GraphSummary, NewNode, OldNode, transfer_hitting, transfer_resistance
from .triangulation import predicted_counts, q_triangulate

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_NUMERICAL = 3


class CliInputError(Exception):
    pass


def _load_graph(args):
    if getattr(args, "input", None):
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise CliInputError(f"cannot read {args.input}: {exc.strerror}") from exc
        return parse_edge_list(text)
    if getattr(args, "graph", None):
        try:
            return builtin_graph(args.graph)
        except ValueError as exc:
            raise CliInputError(str(exc)) from exc
    raise CliInputError("one of --graph or --input is required")


def _f12(x) -> str:
    return f"{float(x):.12g}"


def _f17(x) -> float:
    # floats survive JSON round-trips exactly at 17 significant digits
    return float(f"{float(x):.17g}")


# ---- subcommands ------------------------------------------------------


def cmd_triangulate(args, out) -> int:
    g = _load_graph(args)
    tri = q_triangulate(g, args.q)
    r = tri.result
    out.write(f"# R_{args.q}(G): {r.n} nodes, {r.m} edges\n")
    out.write(format_edge_list(r))
    out.write("# provenance: new_node generator_edge copy\n")
    for x in tri.new_nodes:
        e, f = tri.provenance[x]
        out.write(f"{x} {e} {f}\n")
    return EXIT_OK


def cmd_metrics(args, out) -> int:
    g = _load_graph(args)
    spectral_report = compute_metrics(g, "spectral")
    oracle_report = compute_metrics(g, "oracle")
    max_dev = max(
        np.abs(spectral_report.hitting - oracle_report.hitting).max(),
        np.abs(spectral_report.resistance - oracle_report.resistance).max(),
        abs(spectral_report.kemeny - oracle_report.kemeny),
    )
    foster = sum(oracle_report.resistance[i - 1, j - 1] for i, j in g.edges)
    if args.format == "json":
        payload = {
            "n": g.n,
            "m": g.m,
            "routes": {},
            "max_route_deviation": _f17(max_dev),
            "foster_edge_sum": _f17(foster),
        }
        for rep in (spectral_report, oracle_report):
            payload["routes"][rep.route] = {
                "kemeny": _f17(rep.kemeny),
                "kirchhoff": _f17(rep.kirchhoff),
                "additive": _f17(rep.additive),
                "multiplicative": _f17(rep.multiplicative),
                "hitting": [[_f17(x) for x in row] for row in rep.hitting],
                "resistance": [[_f17(x) for x in row] for row in rep.resistance],
            }
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        for name, mat in (
            ("hitting", oracle_report.hitting),
            ("resistance", oracle_report.resistance),
        ):
            out.write(f"# {name}\n")
            w = csv.writer(out)
            for row in mat:
                w.writerow([_f12(x) for x in row])
    else:
        out.write(f"graph: n={g.n} m={g.m}\n")
        for rep in (spectral_report, oracle_report):
            out.write(
                f"{rep.route:>8}: kemeny {_f12(rep.kemeny)}  "
                f"kirchhoff {_f12(rep.kirchhoff)}  "
                f"additive {_f12(rep.additive)}  "
                f"multiplicative {_f12(rep.multiplicative)}\n"
            )
        out.write(f"max spectral/oracle deviation: {_f12(max_dev)}\n")
        out.write(f"foster check: sum over edges r = {_f12(foster)}\n")
    return EXIT_OK


def cmd_spectrum(args, out) -> int:
    g = _load_graph(args)
    spec = eigendecompose(g)
    if args.q:
        lifted = lift_spectrum(spec, g, args.q)
        payload = {
            "eigenvalues": [_f17(x) for x in lifted.spectrum.eigenvalues],
            "branch": list(lifted.branches),
        }
    else:
        payload = {
            "eigenvalues": [_f17(x) for x in spec.eigenvalues],
            "branch": ["input"] * g.n,
        }
    json.dump(payload, out, indent=2)
    out.write("\n")
    return EXIT_OK


def cmd_transfer(args, out) -> int:
    g = _load_graph(args)
    q = args.q
    summ = GraphSummary.from_graph(g)
    tri = q_triangulate(g, q)
    r = tri.result
    from .metrics import hitting_oracle, kirchhoff_indices, resistance_oracle

    hit = hitting_oracle(r)
    res = resistance_oracle(r)
    pi = r.stationary_distribution()
    kir, add, mul = kirchhoff_indices(r, res)

    from . import transfer as tr

    rows = [
        ("kemeny", tr.transfer_kemeny(q, summ), float(hit[0, :] @ pi)),
        ("kirchhoff", tr.transfer_kirchhoff(q, summ), kir),
        ("additive", tr.transfer_additive(q, summ), add),
        ("multiplicative", tr.transfer_multiplicative(q, summ), mul),
        ("cross-sum", tr.new_old_resistance_sum(q, summ), res[g.n:, :g.n].sum()),
        ("new-pair-sum", tr.new_pair_resistance_sum(q, summ),
         float(np.triu(res[g.n:, g.n:], 1).sum())),
    ]
    s, t = g.edges[0]
    x1 = tri.new_node_index(1, 1)
    j = 2 if g.n >= 2 else 1
    rows.append(("hit old->old" if g.n >= 2 else "n/a",
                 transfer_hitting(q, summ, OldNode(1), OldNode(j)), hit[0, j - 1]))
    rows.append(("hit new->old",
                 transfer_hitting(q, summ, NewNode(s, t), OldNode(j)),
                 hit[x1 - 1, j - 1]))
    rows.append(("hit old->new",
                 transfer_hitting(q, summ, OldNode(j), NewNode(s, t)),
                 hit[j - 1, x1 - 1]))
    rows.append(("res new->old",
                 transfer_resistance(q, summ, NewNode(s, t), OldNode(j)),
                 res[x1 - 1, j - 1]))
    out.write(f"{'quantity':<16}{'transfer':>20}{'oracle':>20}{'|dev|':>12}\n")
    worst = 0.0
    for name, got, want in rows:
        dev = abs(float(got) - float(want))
        worst = max(worst, dev)
        out.write(f"{name:<16}{_f12(got):>20}{_f12(want):>20}{dev:>12.3e}\n")
    out.write(f"max |deviation|: {worst:.3e}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.graph or args.input:
        g = _load_graph(args)
        results = verify.run_single(g, args.q or 1)
    else:
        results = verify.run_all(
            seed=args.seed, trials=args.trials, nmax=args.nmax, qmax=args.qmax
        )
    ok = True
    for r in results:
        status = "pass" if r.passed else "FAIL"
        out.write(
            f"[{status}] {r.name}: max deviation {r.max_deviation:.3e} "
            f"(tol {r.tolerance:.1e}, {r.cases} checks)\n"
        )
        if not r.passed:
            ok = False
            out.write(f"       worst case: {r.worst_case}\n")
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def cmd_pseudofractal(args, out) -> int:
    rows = []
    for k in range(args.kmax + 1):
        n_qk, m_qk = predicted_counts(3, 3, args.q, k)
        kem, mul, add, kir = pseudofractal_metrics(args.q, k)
        rows.append((k, n_qk, m_qk, kem, mul, add, kir))
    header = ("k", "n", "m", "kemeny", "multiplicative", "additive", "kirchhoff")
    if args.format == "json":
        payload = [
            {
                "k": k, "n": n, "m": m,
                "kemeny": _f17(kem), "multiplicative": _f17(mul),
                "additive": _f17(add), "kirchhoff": _f17(kir),
            }
            for k, n, m, kem, mul, add, kir in rows
        ]
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out)
        w.writerow(header)
        for k, n, m, kem, mul, add, kir in rows:
            w.writerow([k, n, m, _f12(kem), _f12(mul), _f12(add), _f12(kir)])
    else:
        out.write(
            f"{'k':>3}{'n':>10}{'m':>10}{'kemeny':>18}"
            f"{'multiplicative':>18}{'additive':>18}{'kirchhoff':>18}\n"
        )
        for k, n, m, kem, mul, add, kir in rows:
            out.write(
                f"{k:>3}{n:>10}{m:>10}{_f12(kem):>18}"
                f"{_f12(mul):>18}{_f12(add):>18}{_f12(kir):>18}\n"
            )
    return EXIT_OK


# ---- argument parsing -------------------------------------------------


def _add_graph_args(p):
    p.add_argument("--graph", help="builtin: k2, k3, cycle:N, path:N, star:N")
    p.add_argument("--input", help="edge-list file ('n m' header, then 'i j' lines)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trispectra",
        description="q-triangulation graphs: closed-form transfers vs numerical oracles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangulate", help="construct R_q(G) with provenance")
    _add_graph_args(p)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_triangulate)

    p = sub.add_parser("metrics", help="walk/resistance metrics, both routes")
    _add_graph_args(p)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("spectrum", help="spectrum of P, or of P(R_q(G)) via the lift")
    _add_graph_args(p)
    p.add_argument("--q", type=int, default=0)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("transfer", help="transfer formulas vs oracle, side by side")
    _add_graph_args(p)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("verify", help="run the cross-validation suites")
    _add_graph_args(p)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--trials", type=int, default=30)
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--qmax", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pseudofractal", help="table of pseudofractal-web quantities")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_pseudofractal)

    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (CliInputError, EdgeListParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConvergenceFailure as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except TrispectraError as exc:
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
