"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 I/O, 3 data/parse, 4 resource limit.
The default output directory comes from ``$MBAGROW_OUTPUT_DIR``.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from . import analytic
from .errors import (
    EdgeListParseError,
    InvalidArgumentError,
    InvalidConfigError,
    InvalidStateError,
    ResourceLimitError,
)
from .experiments import Experiment, ExperimentSpec, parse_apl_mode, run_experiment
from .graph import read_edge_list, write_edge_list
from .growth import GrowthConfig, grow
from .metrics import (
    average_path_length,
    clustering_spectrum,
    degree_distribution,
    global_clustering,
    neighbor_edge_counts,
)
from .oracle import compare_to_montecarlo, enumerate_local

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_DATA, EXIT_RESOURCE = 0, 1, 2, 3, 4
OUTPUT_DIR_ENV = "MBAGROW_OUTPUT_DIR"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_dir() -> Path:
    return Path(os.environ.get(OUTPUT_DIR_ENV, "."))


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


# -- grow -----------------------------------------------------------------


def cmd_grow(args) -> int:
    cfg = GrowthConfig(m=args.m, m0=args.m0, t_final=args.nodes, seed=args.seed, model=args.model)
    g = grow(cfg)
    out = Path(args.out) if args.out else _default_dir() / f"{cfg.model.value}_m{cfg.m}_t{cfg.t_final}_s{cfg.seed}.txt"
    write_edge_list(g, out)
    print(f"nodes {g.node_count}")
    print(f"edges {g.edge_count}")
    print(f"mean_degree {g.total_degree() / g.node_count!r}")
    print(f"wrote {out}")
    return EXIT_OK


# -- metrics --------------------------------------------------------------


def metrics_report(g, apl: str = "auto", seed: int = 0) -> dict:
    mode, sources = parse_apl_mode(apl)
    e = neighbor_edge_counts(g)
    hist = degree_distribution(g)
    spec = clustering_spectrum(g, e)
    est = average_path_length(g, mode, sources=min(sources, g.node_count), rng=seed)
    return {
        "nodes": g.node_count,
        "edges": g.edge_count,
        "mean_degree": g.total_degree() / g.node_count if g.node_count else 0.0,
        "degree_histogram": [[k, c] for k, c in hist.items()],
        "clustering_global": global_clustering(g, e),
        "clustering_spectrum": [[k, c, n] for k, c, n in spec.items()],
        "apl": est.as_dict(),
    }


def _write_csv(path: Path, header, rows) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([repr(v) if isinstance(v, float) else ("" if v is None else v) for v in r])


def cmd_metrics(args) -> int:
    g = read_edge_list(args.input)
    report = metrics_report(g, args.apl, args.seed)
    if args.format == "json":
        text = json.dumps(report, indent=1) + "\n"
        if args.out:
            Path(args.out).write_text(text, encoding="ascii")
        else:
            sys.stdout.write(text)
        return EXIT_OK
    out_dir = Path(args.out) if args.out else _default_dir()
    out_dir.mkdir(parents=True, exist_ok=True)
    apl = report["apl"]
    _write_csv(
        out_dir / "summary.csv",
        ["nodes", "edges", "mean_degree", "clustering_global", "apl_mode", "apl_value", "apl_stderr"],
        [[report["nodes"], report["edges"], report["mean_degree"], report["clustering_global"],
          apl["mode"], apl["value"], apl.get("stderr")]],
    )
    _write_csv(out_dir / "degree_histogram.csv", ["k", "count"], report["degree_histogram"])
    _write_csv(out_dir / "clustering_spectrum.csv", ["k", "mean_c", "count"], report["clustering_spectrum"])
    print(f"wrote {out_dir}/summary.csv, degree_histogram.csv, clustering_spectrum.csv")
    return EXIT_OK


# -- experiment -----------------------------------------------------------


def cmd_experiment(args) -> int:
    sizes = args.sizes
    if sizes is None:
        sizes = [250, 500, 1000, 2000, 4000, 8000, 16000] if args.name == "fig4" else [10_000]
    spec = ExperimentSpec(
        experiment=Experiment(args.name),
        realizations=args.realizations,
        sizes=tuple(sizes),
        m=args.m,
        m0=args.m0,
        seed=args.seed,
        out_dir=Path(args.out_dir) if args.out_dir else _default_dir(),
        apl=args.apl,
        workers=args.workers,
    )
    table, csv_path, svg_path = run_experiment(spec)
    print(f"wrote {csv_path} ({len(table.rows)} rows) and {svg_path}")
    return EXIT_OK


# -- analytic -------------------------------------------------------------


def analytic_table(args) -> list[tuple[str, float]]:
    rows: list[tuple[str, float]] = []
    any_flag = False
    if args.global_clustering:
        any_flag = True
        rows.append(("global_clustering", analytic.predicted_global_clustering()))
    for k in args.pk or []:
        any_flag = True
        rows.append((f"pk[{k}]", analytic.predicted_pk(k)))
    for k in args.ck or []:
        any_flag = True
        rows.append((f"ck[{k}]", analytic.predicted_ck(k)))
    for k in args.ei_bound or []:
        any_flag = True
        rows.append((f"ei_bound[m={args.m},k={k}]", analytic.predicted_ei_bound(args.m, k)))
    if args.degree:
        any_flag = True
        if args.ti is None:
            raise UsageError("--degree needs --ti")
        rows.append((f"degree[m={args.m},t={args.t},ti={args.ti}]", analytic.predicted_degree(args.m, args.t, args.ti)))
    if args.apl_line:
        any_flag = True
        rows.append((f"apl_line[t={args.t},m={args.m}]", analytic.predicted_apl_line(args.t, args.m)))
    if not any_flag:
        rows.append(("global_clustering", analytic.predicted_global_clustering()))
        rows.append((f"apl_line[t={args.t},m={args.m}]", analytic.predicted_apl_line(args.t, args.m)))
        rows.extend((f"pk[{k}]", analytic.predicted_pk(k)) for k in (2, 3, 4))
        rows.extend((f"ck[{k}]", analytic.predicted_ck(k)) for k in (2, 3, 4))
    return rows


def cmd_analytic(args) -> int:
    try:
        rows = analytic_table(args)
    except InvalidArgumentError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps(dict(rows), indent=1))
    else:
        for name, value in rows:
            print(f"{name}\t{value:.{args.precision}f}")
    return EXIT_OK


# -- oracle ---------------------------------------------------------------


def cmd_oracle(args) -> int:
    dist = enumerate_local(args.m0, args.m, args.steps, branch_cap=args.branch_cap)
    print("probability\tdegree_sequence")
    for sig, p in sorted(dist.outcomes(), key=lambda sp: -sp[1]):
        degs = sorted((k for k, _ in sig[0]), reverse=True)
        print(f"{p}\t{','.join(map(str, degs))}")
    hist = dist.expected_degree_histogram()
    print("expected_degree_histogram\t" + " ".join(f"{k}:{v}" for k, v in hist.items()))
    print(f"expected_global_clustering\t{dist.expected_global_clustering()}")
    if args.runs:
        cfg = GrowthConfig(m=args.m, m0=args.m0, t_final=args.m0 + args.steps, seed=args.seed)
        fit = compare_to_montecarlo(dist, cfg, args.runs)
        verdict = "pass" if fit.passed(args.alpha) else "fail"
        print(f"chi2\t{fit.statistic!r}\tdof\t{fit.dof}\tp_value\t{fit.p_value!r}\t{verdict}")
    return EXIT_OK


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mbagrow", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("grow", help="grow one graph and write its edge list")
    g.add_argument("--model", choices=["local", "ba"], default="local")
    g.add_argument("--m", type=int, default=2)
    g.add_argument("--m0", type=int, default=None)
    g.add_argument("--nodes", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", default=None)
    g.set_defaults(func=cmd_grow)

    mt = sub.add_parser("metrics", help="compute a metrics report for an edge list")
    mt.add_argument("input")
    mt.add_argument("--apl", default="auto", help="exact | auto | sampled:N")
    mt.add_argument("--seed", type=int, default=0, help="seed for sampled path lengths")
    mt.add_argument("--format", choices=["json", "csv"], default="json")
    mt.add_argument("--out", default=None, help="JSON file, or directory for CSV tables")
    mt.set_defaults(func=cmd_metrics)

    ex = sub.add_parser("experiment", help="run an ensemble experiment")
    ex.add_argument("name", choices=[e.value for e in Experiment])
    ex.add_argument("--realizations", type=int, default=100)
    ex.add_argument("--sizes", type=_int_list, default=None)
    ex.add_argument("--m", type=int, default=2)
    ex.add_argument("--m0", type=int, default=None)
    ex.add_argument("--seed", type=int, default=0)
    ex.add_argument("--out-dir", default=None)
    ex.add_argument("--apl", default="auto")
    ex.add_argument("--workers", type=int, default=1)
    ex.set_defaults(func=cmd_experiment)

    an = sub.add_parser("analytic", help="print closed-form predictions")
    an.add_argument("--global-clustering", action="store_true")
    an.add_argument("--pk", type=int, action="append")
    an.add_argument("--ck", type=int, action="append")
    an.add_argument("--ei-bound", type=float, action="append", metavar="K")
    an.add_argument("--degree", action="store_true")
    an.add_argument("--apl-line", action="store_true")
    an.add_argument("--m", type=int, default=2)
    an.add_argument("--t", type=int, default=10_000)
    an.add_argument("--ti", type=int, default=None)
    an.add_argument("--format", choices=["text", "json"], default="text")
    an.add_argument("--precision", type=int, default=4)
    an.set_defaults(func=cmd_analytic)

    orc = sub.add_parser("oracle", help="exact outcome distribution of a tiny growth")
    orc.add_argument("--m0", type=int, default=2)
    orc.add_argument("--m", type=int, default=2)
    orc.add_argument("--steps", type=int, default=3)
    orc.add_argument("--runs", type=int, default=0, help="also run a chi-square check")
    orc.add_argument("--seed", type=int, default=0)
    orc.add_argument("--alpha", type=float, default=0.01)
    orc.add_argument("--branch-cap", type=int, default=1_000_000)
    orc.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidConfigError) as exc:
        print(f"mbagrow: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EdgeListParseError as exc:
        print(f"mbagrow: parse error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (InvalidArgumentError, InvalidStateError) as exc:
        print(f"mbagrow: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ResourceLimitError as exc:
        print(f"mbagrow: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"mbagrow: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
