"""Command-line entry point.

JSON output is JSON-lines: a header carrying the run configuration and tool
version, then records, then (for batch commands) a summary as the last line.
Exit status reports operational success only; a failed claim is data.

Environment:
  CHDIGRAPH_SWEEP_CAP      max n for exhaustive oriented sweeps (default 5)
  CHDIGRAPH_COMPLETE_CAP   max n for complete-digraph enumeration (default 9)
  CHDIGRAPH_SPARSE_CAP     max n for cycle enumeration on inputs (default 12)
  SOURCE_DATE_EPOCH        fixes the header timestamp for reproducible output
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path
from typing import Any, Callable, TextIO

from . import __version__
from .audits import contraction_audit, labeling_claims_audit
from .conjectures import (
    DEFAULT_SWEEP_CAP,
    HypothesisError,
    check_ch,
    check_seymour,
    exhaustive_sweep,
    search_counterexamples,
)
from .constructions import FAMILIES, ConstructionSpec
from .counting import COMPLETE_CAP, SPARSE_CAP, CapExceeded, audit_counting_formulas, enumerate_directed_cycles
from .digraph import (
    Digraph,
    DigraphError,
    complete_digraph,
    difference_profile,
    max_out_degree,
    min_out_degree,
)
from .io import ParseError, parse_edge_list, to_dot, to_edge_list
from .reports import dumps
from .transparency import (
    audit_contraction,
    compute_transparency,
    contract_graph,
    girth,
    neighborhood_counts,
    shortest_cycle_certificate,
)


class UsageError(Exception):
    """Operational failure: bad input, precondition, or cap."""


def _cap(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


def _timestamp() -> str:
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    t = float(epoch) if epoch else time.time()
    return time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime(t))


def run_config(args: argparse.Namespace) -> dict:
    cfg = {k: v for k, v in vars(args).items() if k not in ("func",) and not k.startswith("_")}
    return {k: (str(v) if isinstance(v, Path) else v) for k, v in sorted(cfg.items())}


class Writer:
    """Single output sink so records stay in canonical order."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self._fh: TextIO = open(args.output, "w") if getattr(args, "output", None) else sys.stdout

    def header(self) -> None:
        self.record({"type": "header", "version": __version__, "run_config": run_config(self.args), "timestamp": _timestamp()})

    def record(self, obj: Any) -> None:
        self._fh.write(dumps(obj) + "\n")

    def text(self, s: str) -> None:
        self._fh.write(s)

    def close(self) -> None:
        if self._fh is not sys.stdout:
            self._fh.close()


def _load(path: str, oriented: bool = False) -> Digraph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        return parse_edge_list(text, oriented=oriented)
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _spec_from_args(args: argparse.Namespace) -> ConstructionSpec:
    if args.spec:
        raw = Path(args.spec).read_text() if Path(args.spec).exists() else args.spec
        try:
            spec = ConstructionSpec.from_json(json.loads(raw))
        except (json.JSONDecodeError, KeyError) as exc:
            raise UsageError(f"bad spec: {exc}") from None
        return spec
    if args.family is None or args.n is None or args.r is None:
        raise UsageError("need --spec or all of --family, --n, --r")
    extras = json.loads(args.extras) if args.extras else {}
    spec = ConstructionSpec(args.family, args.n, args.r, args.seed, extras)
    spec.validate()
    return spec


def _cert(g: Digraph) -> dict:
    c = shortest_cycle_certificate(g)
    return {"girth": None if c is None else c.length, "certificate": None if c is None else c.to_json()}


# -- subcommands ---------------------------------------------------------------

def cmd_generate(args: argparse.Namespace, out: Writer) -> None:
    spec = _spec_from_args(args)
    g = spec.build()
    fmt = args.format or "edge-list"
    if fmt == "json":
        out.header()
        out.record({"type": "digraph", "spec": spec.to_json(), "n": g.n, "arcs": [list(a) for a in g.arcs()]})
    elif fmt == "dot":
        out.text(f"// {spec.dumps()}\n" + to_dot(g))
    else:
        out.text(f"# {spec.dumps()}\n" + to_edge_list(g))


def cmd_analyze(args: argparse.Namespace, out: Writer) -> None:
    g = _load(args.input)
    t = compute_transparency(g)
    d = min_out_degree(g)
    report: dict[str, Any] = {
        "type": "analysis",
        "n": g.n,
        "arcs": g.num_arcs,
        "min_out_degree": d,
        "max_out_degree": max_out_degree(g),
        **_cert(g),
        "difference_profile": difference_profile(g).to_json(),
        "neighborhood_counts": [list(neighborhood_counts(t, v)) for v in range(g.n)],
    }
    if d >= 1:
        ch = check_ch(g)
        report["ch"] = {"r": ch.r, "bound": ch.bound, "holds": ch.holds}
    if args.matrix:
        report["transparency"] = t.to_json()
    out.header()
    out.record(report)


def cmd_girth(args: argparse.Namespace, out: Writer) -> None:
    g = _load(args.input)
    gi = girth(compute_transparency(g))
    out.header()
    out.record({"type": "girth", **_cert(g), "pair": None if gi is None else list(gi.pair)})


def cmd_contract(args: argparse.Namespace, out: Writer) -> None:
    g = _load(args.input)
    arc = tuple(args.arc)
    if not g.has_arc(*arc):
        raise UsageError(f"arc {arc} not present")
    res = contract_graph(g, arc)
    if (args.format or "edge-list") == "json":
        out.header()
        rep = audit_contraction(g, arc)
        out.record({"type": "contraction", "mapping": list(res.mapping), "result": to_edge_list(res.graph), "audit": rep.to_json()})
    elif args.format == "dot":
        out.text(to_dot(res.graph))
    else:
        out.text(to_edge_list(res.graph))


def cmd_verify_ch(args: argparse.Namespace, out: Writer) -> None:
    g = _load(args.input)
    try:
        rep = check_ch(g, args.r)
    except HypothesisError as exc:
        raise UsageError(str(exc)) from None
    out.header()
    out.record(rep.to_json())


def cmd_verify_seymour(args: argparse.Namespace, out: Writer) -> None:
    g = _load(args.input)
    try:
        rep = check_seymour(g)
    except HypothesisError as exc:
        raise UsageError(str(exc)) from None
    out.header()
    out.record(rep.to_json())


def cmd_sweep(args: argparse.Namespace, out: Writer) -> None:
    try:
        summary = exhaustive_sweep(
            args.n, args.predicate, cap=_cap("CHDIGRAPH_SWEEP_CAP", DEFAULT_SWEEP_CAP), force=args.force, threads=args.threads
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.header()
    for inst in summary.pop("violations"):
        out.record({"type": "violation", "instance": inst})
    out.record({"type": "summary", **summary})


def cmd_search(args: argparse.Namespace, out: Writer) -> None:
    template = _spec_from_args(args)
    found = search_counterexamples(template, args.trials, seed=args.seed, checker=args.checker, threads=args.threads)
    out.header()
    for rep in found:
        out.record({"type": "violation", **rep.to_json()})
    out.record({"type": "summary", "trials": args.trials, "violations": len(found), "checker": args.checker})


def cmd_count_cycles(args: argparse.Namespace, out: Writer) -> None:
    if args.complete is not None:
        g = complete_digraph(args.complete)
        cap = _cap("CHDIGRAPH_COMPLETE_CAP", COMPLETE_CAP)
    elif args.input:
        g = _load(args.input)
        cap = _cap("CHDIGRAPH_SPARSE_CAP", SPARSE_CAP)
    else:
        raise UsageError("need an input file or --complete N")
    try:
        cycles = enumerate_directed_cycles(g, args.max_len, cap=cap, force=args.force)
    except (CapExceeded, ValueError) as exc:
        raise UsageError(str(exc)) from None
    out.header()
    counts: dict[str, int] = {}
    for c in cycles:
        if args.list:
            out.record({"type": "cycle", **c.to_json()})
        counts[str(c.length)] = counts.get(str(c.length), 0) + 1
    out.record({"type": "summary", "total": len(cycles), "by_length": counts})


def cmd_audit(args: argparse.Namespace, out: Writer) -> None:
    if args.kind == "formulas":
        try:
            ledger = audit_counting_formulas(
                args.n_max, args.j_max, cap=_cap("CHDIGRAPH_COMPLETE_CAP", COMPLETE_CAP), force=args.force
            )
        except CapExceeded as exc:
            raise UsageError(str(exc)) from None
        out.header()
        for row in ledger:
            out.record(row.to_json())
        mism = sum(1 for row in ledger if row.verdict == "mismatch")
        out.record({"type": "summary", "audit": "formulas", "rows": len(ledger), "equal": len(ledger) - mism, "mismatch": mism})
        return
    if args.kind == "contraction":
        reports, summary = contraction_audit(args.trials, args.n, args.seed, threads=args.threads)
    else:
        if args.r is None or not 1 <= args.r < args.n:
            raise UsageError("labeling-claims needs 1 <= --r < --n")
        reports, summary = labeling_claims_audit(args.n, args.r, args.seeds, args.seed, threads=args.threads)
    out.header()
    for rep in reports:
        out.record(rep)
    out.record(summary)


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    common.add_argument("--format", choices=("edge-list", "dot", "json"), default=None)
    common.add_argument("--threads", type=int, default=1, help="worker processes (output is identical for any value)")
    common.add_argument("--force", action="store_true", help="allow sizes beyond the configured caps")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="chdigraph",
        description="Digraph girth, transparency matrices and conjecture audits.",
        epilog="Environment:" + __doc__.split("Environment:", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    def spec_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", choices=FAMILIES)
        p.add_argument("--n", type=int)
        p.add_argument("--r", type=int)
        p.add_argument("--extras", help="family options as JSON, e.g. '{\"surplus\": [1,0,0]}'")
        p.add_argument("--spec", help="ConstructionSpec JSON (inline or path)")

    p = add("generate", cmd_generate, "build a digraph from a construction spec")
    spec_args(p)

    p = add("analyze", cmd_analyze, "girth, degrees, differences and neighbourhood counts")
    p.add_argument("input", help="edge-list file, or - for stdin")
    p.add_argument("--matrix", action="store_true", help="include the distance matrix")

    p = add("girth", cmd_girth, "shortest circuit and its certificate")
    p.add_argument("input")

    p = add("contract", cmd_contract, "contract one arc")
    p.add_argument("input")
    p.add_argument("--arc", type=int, nargs=2, required=True, metavar=("TAIL", "HEAD"))

    p = add("verify-ch", cmd_verify_ch, "check the ceil(n/r) circuit bound")
    p.add_argument("input")
    p.add_argument("--r", type=int, default=None, help="test a weaker bound with r <= min out-degree")

    p = add("verify-seymour", cmd_verify_seymour, "check the second-neighbourhood condition")
    p.add_argument("input")

    p = add("sweep", cmd_sweep, "exhaustive sweep over labeled oriented digraphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--predicate", choices=("ch", "seymour"), required=True)

    p = add("search", cmd_search, "seeded counterexample search over a family")
    spec_args(p)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--checker", choices=("ch", "ch-equivalent", "seymour"), default="ch")

    p = add("count-cycles", cmd_count_cycles, "enumerate directed circuits")
    p.add_argument("input", nargs="?")
    p.add_argument("--complete", type=int, metavar="N", help="use the complete digraph on N vertices")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--list", action="store_true", help="emit every circuit, not just counts")

    p = add("audit", cmd_audit, "audit printed formulas and rules against oracles")
    p.add_argument("kind", choices=("contraction", "formulas", "labeling-claims"))
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--j-max", type=int, default=7)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--seeds", type=int, default=100)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    out = Writer(args)
    try:
        args.func(args, out)
    except (UsageError, ValueError, DigraphError) as exc:
        print(f"chdigraph {args.command}: {exc}", file=sys.stderr)
        return 2
    finally:
        out.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
