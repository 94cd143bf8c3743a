"""Command-line front end.

Subcommands: `generate` builds an iterate series and writes the final graph
(or a bundle directory that export-plots can consume), `analyze` reports on a
single graph file, `verify` runs the claim-verification campaign, and
`export-plots` emits plot-ready CSV series. Exit codes: 0 success, 1 a
verification check failed, 2 usage error, 3 capacity exceeded.
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from . import io as gio
from .config import RunConfig, load_config
from .errors import CapacityError, UsageError
from .graph import Graph, named_graph
from .harness import (
    CorpusSpec,
    campaign_failed,
    campaign_meta,
    clustering_plot_csv,
    density_plot_csv,
    fmt,
    resolve_theorem_ids,
    run_campaign,
    specgap_plot_csv,
    summary_text,
    write_reports,
)
from .metrics import clustering_coefficient
from .model import generate_series
from .params import parameter_report
from .sequence import resolve_sequence
from .spectral import mixing_sweep, spectrum
from .structure import hamiltonian


def _load_seed(spec: str) -> Graph:
    p = Path(spec)
    if p.is_file():
        return gio.read_edge_list(p)
    return named_graph(spec)


def _looks_like_dir(path: str) -> bool:
    p = Path(path)
    return p.is_dir() or path.endswith(("/", "\\")) or p.suffix == ""


def _cmd_generate(args) -> int:
    config = load_config(args.config)
    g0 = _load_seed(args.graph)
    seq = resolve_sequence(args.sequence)
    cap = args.max_vertices or config.resolved_max_vertices()
    series, trace = generate_series(g0, seq, args.steps, max_vertices=cap)
    final = series[-1]
    if _looks_like_dir(args.out):
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        gio.write_edge_list(final, out / "graph.txt")
        gio.write_trace_csv(trace, out / "trace.csv")
        gio.write_lineage(final, out / "lineage.json")
        meta = {
            "seed": args.graph,
            "seed_edges": gio.edge_list_text(g0),
            "sequence": seq.text,
            "steps": args.steps,
        }
        (out / "meta.json").write_text(json.dumps(meta, sort_keys=True, indent=2) + "\n")
    else:
        gio.write_edge_list(final, args.out)
        if args.trace_out:
            gio.write_trace_csv(trace, args.trace_out)
        if args.lineage_out:
            gio.write_lineage(final, args.lineage_out)
        if args.dot_out:
            gio.write_dot(final, args.dot_out)
    print(f"generated t={args.steps}: n={final.n} e={final.edge_count}")
    return 0


def _analyze_doc(g: Graph, args, config: RunConfig) -> dict:
    explicit = args.metrics or args.params or args.spectral or args.structure
    want = lambda flag: flag or not explicit
    doc: dict = {"n": g.n, "e": g.edge_count}
    if want(args.metrics):
        c = clustering_coefficient(g)
        doc["metrics"] = {
            "avg_degree": fmt(2 * g.edge_count / g.n),
            "clustering": fmt(float(c)),
            "clustering_exact": fmt(c),
        }
    if want(args.params):
        if g.n > config.corpus_params_cap:
            if args.params:
                raise CapacityError(
                    f"parameter report needs n <= {config.corpus_params_cap}, got {g.n}"
                )
            doc["params"] = {"skipped": f"n > {config.corpus_params_cap}"}
        else:
            doc["params"] = parameter_report(g).to_dict()
    if want(args.spectral):
        try:
            sp = spectrum(g, cap=config.spectral_cap)
            sweep = mixing_sweep(
                g,
                subsets=config.mixing_subsets,
                seed=config.seed,
                tol=config.mixing_tol,
                lam=sp.gap,
            )
            doc["spectral"] = {"spectrum": sp.to_dict(), "mixing": sweep.to_dict()}
        except CapacityError as exc:
            if args.spectral:
                raise
            doc["spectral"] = {"skipped": str(exc)}
    if want(args.structure):
        if g.n >= 3:
            res = hamiltonian(
                g,
                greedy_budget=config.cycle_search_budget,
                exact_cap=config.exact_hamilton_cap,
            )
            doc["structure"] = res.to_dict()
        else:
            doc["structure"] = {"skipped": "hamiltonicity needs n >= 3"}
    return doc


def _cmd_analyze(args) -> int:
    config = load_config(args.config)
    p = Path(args.infile)
    if not p.is_file():
        raise UsageError(f"no such graph file: {p}")
    g = gio.read_edge_list(p)
    doc = _analyze_doc(g, args, config)
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    config = load_config(args.config)
    if args.workers:
        config.workers = args.workers
    if args.corpus == "builtin":
        corpus = CorpusSpec.builtin()
    else:
        corpus = CorpusSpec.from_file(args.corpus)
    ids = resolve_theorem_ids(args.theorems)
    reports = run_campaign(corpus, ids, config)
    meta = campaign_meta(corpus, ids, config)
    write_reports(args.out, reports, meta, corpus.name, timings=args.timings)
    sys.stdout.write(summary_text(reports, corpus.name))
    return 1 if campaign_failed(reports) else 0


def _cmd_export_plots(args) -> int:
    config = load_config(args.config)
    src = Path(args.indir)
    meta_path = src / "meta.json"
    if not meta_path.is_file():
        raise UsageError(
            f"{src} has no meta.json; create it with `generate --out <dir>`"
        )
    try:
        meta = json.loads(meta_path.read_text())
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad JSON in {meta_path}: {exc}") from exc
    for key in ("seed_edges", "sequence", "steps"):
        if key not in meta:
            raise UsageError(f"meta.json is missing {key!r}")
    g0 = gio.parse_edge_list(meta["seed_edges"])
    seq = resolve_sequence(meta["sequence"])
    series, _ = generate_series(
        g0, seq, int(meta["steps"]), max_vertices=config.resolved_max_vertices()
    )
    dest = Path(args.out) if args.out else src
    dest.mkdir(parents=True, exist_ok=True)
    (dest / "density.csv").write_text(density_plot_csv(series, seq))
    (dest / "clustering.csv").write_text(
        clustering_plot_csv(series, cap=config.corpus_metrics_cap)
    )
    (dest / "specgap.csv").write_text(
        specgap_plot_csv(series, seq, cap=config.corpus_spectral_cap)
    )
    print(f"wrote density.csv, clustering.csv, specgap.csv to {dest}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ilm",
        description="Generate and analyze iterated local transitive/anti-transitive cloning graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build an iterate and write it to disk")
    g.add_argument("--graph", required=True, help="seed graph name or edge-list file")
    g.add_argument("--sequence", required=True, help="bit sequence, e.g. ones or '(01)*'")
    g.add_argument("--steps", required=True, type=int, help="number of steps t")
    g.add_argument("--out", required=True, help="edge-list file, or a directory for a full bundle")
    g.add_argument("--trace-out", help="also write the per-step edge-count trace CSV")
    g.add_argument("--lineage-out", help="also write vertex lineage JSON")
    g.add_argument("--dot-out", help="also write a DOT rendering")
    g.add_argument("--max-vertices", type=int, help="override the vertex cap")
    g.add_argument("--config", help="JSON config file")
    g.set_defaults(func=_cmd_generate)

    a = sub.add_parser("analyze", help="report on a graph file")
    a.add_argument("--in", dest="infile", required=True, help="edge-list file")
    a.add_argument("--metrics", action="store_true", help="clustering and degree metrics")
    a.add_argument("--params", action="store_true", help="diameter, coloring, domination")
    a.add_argument("--spectral", action="store_true", help="spectrum and mixing audit")
    a.add_argument("--structure", action="store_true", help="hamiltonicity with certificate")
    a.add_argument("--out", help="write the JSON report here instead of stdout")
    a.add_argument("--config", help="JSON config file")
    a.set_defaults(func=_cmd_analyze)

    v = sub.add_parser("verify", help="run the claim-verification campaign")
    v.add_argument("--corpus", default="builtin", help="'builtin' or a corpus JSON file")
    v.add_argument("--theorems", default="all", help="'all' or a comma-separated id list")
    v.add_argument("--out", required=True, help="output directory for reports")
    v.add_argument("--timings", action="store_true", help="also write timings.csv")
    v.add_argument("--workers", type=int, help="parallel instance workers")
    v.add_argument("--config", help="JSON config file")
    v.set_defaults(func=_cmd_verify)

    e = sub.add_parser("export-plots", help="emit plot-ready CSV series")
    e.add_argument("--in", dest="indir", required=True, help="bundle directory from generate")
    e.add_argument("--out", help="directory for the CSV files (default: the bundle)")
    e.add_argument("--config", help="JSON config file")
    e.set_defaults(func=_cmd_export_plots)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
