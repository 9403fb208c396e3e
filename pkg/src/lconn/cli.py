"""Command-line front end: ``lconn <subcommand> ...``.

Exit status is 0 on success or a confirmed verdict, 1 when a counterexample
(or a failed lemma conclusion) is found, and 2 for usage errors, malformed
input and infeasible parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .families import (
    InfeasibleParameters,
    family_B,
    family_digraph,
    family_digraph_extremal,
    family_edge,
    family_join_cliques,
    family_vertex,
)
from .graph import FormatError, Graph, decode_any, encode
from .invariants import invariant_record
from .quotient import digraph_family_charpoly, largest_real_root
from .spectral import TIE_TOL, digraph_spectral_radius, spectral_radius, symmetric_spectrum
from .verify.enumeration import DIGRAPH_CAP, GRAPH_CAP, ScaleError
from .verify.lemmas import LEMMAS, HypothesisError, check_lemma
from .verify.report import CONFIRMED, COUNTEREXAMPLE
from .verify.theorems import THEOREMS, verify_theorem

WORKERS_ENV = "LCONN_WORKERS"
FORMATS = ("json", "csv", "text")
CSV_COLUMNS = ("graph6", "l", "rho", "kappa_l", "kappa_edge_l",
               "toughness_num", "toughness_den", "tau", "alpha", "delta")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    tolerance: float = TIE_TOL
    graph_cap: int = GRAPH_CAP
    digraph_cap: int = DIGRAPH_CAP
    workers: int = 1
    out: str | None = None
    fmt: str = "text"

    def __post_init__(self) -> None:
        if not self.tolerance > 0:
            raise UsageError("tolerance must be positive")
        if not 1 <= self.graph_cap <= GRAPH_CAP or not 1 <= self.digraph_cap <= DIGRAPH_CAP:
            raise UsageError(f"caps must satisfy graph n <= {GRAPH_CAP}, digraph n <= {DIGRAPH_CAP}")
        if self.workers < 1:
            raise UsageError("worker count must be at least 1")
        if self.fmt not in FORMATS:
            raise UsageError(f"format must be one of {', '.join(FORMATS)}")


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


# -- formatting ---------------------------------------------------------------

def fmt_float(x: float) -> str:
    return f"{x:.10g}"


def rounded(obj):
    """Round every float in a JSON-ready structure to 10 significant digits."""
    if isinstance(obj, float):
        return float(fmt_float(obj))
    if isinstance(obj, dict):
        return {k: rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [rounded(v) for v in obj]
    return obj


def dump_json(obj) -> str:
    return json.dumps(rounded(obj), indent=2, sort_keys=True) + "\n"


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _read_inputs(source: str, stdin: TextIO) -> list[str]:
    lines = stdin.read().splitlines() if source == "-" else [source]
    codes = [ln.strip() for ln in lines if ln.strip()]
    if not codes:
        raise UsageError("no graph given")
    return codes


# -- subcommands ----------------------------------------------------------------

def _invariant_rows(g: Graph, ls: list[int]) -> tuple[dict, list[list]]:
    rec = invariant_record(g, ls)
    rho = spectral_radius(g)
    t = rec.toughness
    record = {
        "graph6": encode(g),
        "rho": rho,
        "kappa_l": {str(k): v for k, v in rec.kappa_l.items()},
        "kappa_edge_l": {str(k): v for k, v in rec.kappa_edge_l.items()},
        "toughness": None if t is None else f"{t.numerator}/{t.denominator}",
        "tau": rec.tau,
        "alpha": rec.alpha,
        "delta": rec.delta,
    }
    rows = []
    for l in sorted(rec.kappa_l):
        rows.append([encode(g), l, fmt_float(rho), rec.kappa_l[l], rec.kappa_edge_l[l],
                     "" if t is None else t.numerator, "" if t is None else t.denominator,
                     "" if rec.tau is None else rec.tau, rec.alpha, rec.delta])
    return record, rows


def cmd_invariants(args, cfg: Config, out: TextIO, stdin: TextIO) -> int:
    records, rows = [], []
    for code in _read_inputs(args.graph, stdin):
        g = decode_any(code)
        if not isinstance(g, Graph):
            raise UsageError("invariants expects undirected graphs")
        if g.n > 16:
            raise ScaleError("invariants are exhaustive and capped at n <= 16")
        rec, r = _invariant_rows(g, args.l)
        records.append(rec)
        rows.extend(r)
    if cfg.fmt == "json":
        out.write(dump_json(records if len(records) > 1 else records[0]))
    elif cfg.fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        w.writerows(rows)
    else:
        for rec in records:
            out.write(f"graph6 {rec['graph6']}\n")
            out.write(f"rho {fmt_float(rec['rho'])}\n")
            out.write(f"delta {rec['delta']}\n")
            for key in ("kappa_l", "kappa_edge_l"):
                for l, v in rec[key].items():
                    out.write(f"{key}[{l}] {v}\n")
            out.write(f"toughness {rec['toughness'] if rec['toughness'] is not None else '-'}\n")
            out.write(f"tau {rec['tau'] if rec['tau'] is not None else '-'}\n")
            out.write(f"alpha {rec['alpha']}\n")
    return 0


def cmd_spectrum(args, cfg: Config, out: TextIO, stdin: TextIO) -> int:
    results = []
    for code in _read_inputs(args.graph, stdin):
        g = decode_any(code)
        if isinstance(g, Graph):
            s = symmetric_spectrum(g)
            results.append({"graph6": code, "rho": s.rho, "eigenvalues": list(s.eigs),
                            "laplacian": list(s.lap), "lambda_abs": s.lambda_abs,
                            "perron": None if s.perron is None else list(s.perron)})
        else:
            results.append({"graph6": code, "rho": digraph_spectral_radius(g)})
    if cfg.fmt == "json":
        out.write(dump_json(results if len(results) > 1 else results[0]))
    elif cfg.fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["graph6", "rho"])
        for r in results:
            w.writerow([r["graph6"], fmt_float(r["rho"])])
    else:
        for r in results:
            out.write(f"rho {fmt_float(r['rho'])}\n")
            for key in ("eigenvalues", "laplacian", "perron"):
                if r.get(key) is not None:
                    out.write(f"{key} " + " ".join(fmt_float(x) for x in r[key]) + "\n")
            if r.get("lambda_abs") is not None:
                out.write(f"lambda_abs {fmt_float(r['lambda_abs'])}\n")
    return 0


def _need_args(args, names: Sequence[str]) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.kind} needs --{', --'.join(m.replace('_', '-') for m in missing)}")


def cmd_family(args, cfg: Config, out: TextIO, stdin: TextIO) -> int:
    kind = args.kind
    if kind == "vertex":
        _need_args(args, ("n", "kappa", "delta", "l"))
        inst = family_vertex(args.n, args.kappa, args.delta, args.l)
    elif kind == "edge":
        _need_args(args, ("n", "a", "b"))
        inst = family_edge(args.n, args.a, args.b)
    elif kind == "B":
        _need_args(args, ("n", "delta", "kappa_prime"))
        inst = family_B(args.n, args.delta, args.kappa_prime)
    elif kind == "join":
        _need_args(args, ("s", "parts"))
        inst = family_join_cliques(args.s, args.parts)
    elif kind == "digraph":
        _need_args(args, ("k", "parts"))
        inst = family_digraph(args.k, args.parts)
    else:
        _need_args(args, ("n", "kappa", "l"))
        inst = family_digraph_extremal(args.n, args.kappa, args.l)
    code = encode(inst.graph)
    if cfg.fmt == "json":
        out.write(dump_json({"family": kind, "graph": code, "params": inst.params,
                             "partition": [list(b) for b in inst.partition]}))
    else:
        out.write(code + "\n")
    return 0


def cmd_charpoly(args, cfg: Config, out: TextIO, stdin: TextIO) -> int:
    poly = digraph_family_charpoly(args.k, args.parts)
    root = largest_real_root(poly)
    if cfg.fmt == "json":
        out.write(dump_json({"k": args.k, "parts": args.parts, "coefficients": list(poly.coeffs), "root": root}))
    else:
        out.write("coefficients " + " ".join(str(c) for c in poly.coeffs) + "\n")
        out.write(f"root {fmt_float(root)}\n")
    return 0


def _theorem_params(args) -> dict:
    names = {"T1.1": ("n", "delta", "kappa", "l"), "T1.2": ("n", "kappa", "l"), "T1.3": ("n", "kappa_edge", "l")}[args.theorem]
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.theorem} needs --{', --'.join(m.replace('_', '-') for m in missing)}")
    params = {}
    for name in names:
        params["kappa_l" if name == "kappa" else name] = getattr(args, name)
    return params


def cmd_verify(args, cfg: Config, out: TextIO, stdin: TextIO) -> int:
    report = verify_theorem(args.theorem, _theorem_params(args), tol=cfg.tolerance, workers=cfg.workers)
    payload = dump_json(report.to_dict())
    column = "kappa_edge_l" if args.theorem == "T1.3" else "kappa_l"
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(report.members_csv(column))
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    if cfg.fmt == "json":
        out.write(payload)
    elif cfg.fmt == "csv":
        out.write(report.members_csv(column))
    else:
        out.write(f"theorem {report.theorem_id}\n")
        out.write(f"verdict {report.verdict}\n")
        out.write(f"class_size {report.class_size}\n")
        for key in ("extremal_rho", "family_rho"):
            val = getattr(report, key)
            out.write(f"{key} {'-' if val is None else fmt_float(val)}\n")
        out.write(f"family_graph {report.family_graph or '-'}\n")
        out.write(f"argmax {' '.join(report.argmax_graphs) or '-'}\n")
        if report.counterexample:
            out.write(f"counterexample {report.counterexample}\n")
        if report.note:
            out.write(f"note {report.note}\n")
    if report.verdict == CONFIRMED:
        return 0
    return 1 if report.verdict == COUNTEREXAMPLE else 2


def _read_instance(text: str, stdin: TextIO) -> dict:
    if text == "-":
        text = stdin.read()
    elif text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        inst = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"instance is not valid JSON: {exc}") from None
    if not isinstance(inst, dict):
        raise UsageError("instance must be a JSON object")
    return inst


def cmd_check(args, cfg: Config, out: TextIO, stdin: TextIO) -> int:
    result = check_lemma(args.lemma, _read_instance(args.instance, stdin), tol=cfg.tolerance)
    if cfg.fmt == "json":
        out.write(dump_json({"lemma": result.lemma_id, "holds": result.holds, "witness": result.witness}))
    else:
        out.write(f"lemma {result.lemma_id}\n")
        out.write(f"holds {str(result.holds).lower()}\n")
        for key in sorted(result.witness):
            val = result.witness[key]
            out.write(f"{key} {fmt_float(val) if isinstance(val, float) else json.dumps(rounded(val))}\n")
    return 0 if result.holds else 1


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text", help="output format (default text)")

    parser = argparse.ArgumentParser(prog="lconn", description="l-connectivity, spectral radius and extremal graph checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="connectivity invariants of a graph")
    p.add_argument("graph", help="graph6/sparse6 string, or - for one graph per stdin line")
    p.add_argument("--l", type=_int_list, default=None, help="comma-separated l values (default all)")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("spectrum", parents=[common], help="adjacency and Laplacian spectra")
    p.add_argument("graph", help="graph6/sparse6/digraph6 string, or -")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("family", parents=[common], help="build an extremal family member")
    p.add_argument("kind", choices=("vertex", "edge", "B", "join", "digraph", "digraph-extremal"))
    for name in ("n", "kappa", "delta", "l", "a", "b", "kappa-prime", "k", "s"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--parts", type=_int_list)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("charpoly", parents=[common], help="characteristic polynomial of the digraph family quotient")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--parts", type=_int_list, required=True)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("verify", parents=[common], help="exhaustive theorem verification")
    p.add_argument("theorem", choices=THEOREMS)
    for name in ("n", "l", "delta", "kappa", "kappa-edge"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--csv", help="write per-graph rows here")
    p.add_argument("--workers", type=int, default=None, help=f"worker processes (default ${WORKERS_ENV} or 1)")
    p.add_argument("--tolerance", type=float, default=TIE_TOL)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", parents=[common], help="check a lemma on one instance")
    p.add_argument("lemma", choices=LEMMAS)
    p.add_argument("--instance", required=True, help="JSON object, @file, or - for stdin")
    p.add_argument("--tolerance", type=float, default=TIE_TOL)
    p.set_defaults(func=cmd_check)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    saved = sys.stderr
    sys.stderr = err
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    finally:
        sys.stderr = saved
    try:
        workers = getattr(args, "workers", None)
        cfg = Config(
            tolerance=getattr(args, "tolerance", TIE_TOL),
            workers=workers if workers is not None else default_workers(),
            out=getattr(args, "out", None),
            fmt=args.format,
        )
        buf = io.StringIO()
        code = args.func(args, cfg, buf, stdin)
        out.write(buf.getvalue())
        return code
    except (UsageError, FormatError, InfeasibleParameters, ScaleError, HypothesisError, ValueError, OSError) as exc:
        err.write(f"lconn {args.command}: {exc}\n")
        if isinstance(exc, UsageError):
            parser.print_usage(err)
        return 2


def main() -> None:
    sys.exit(run())
