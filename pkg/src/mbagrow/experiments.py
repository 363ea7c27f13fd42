"""Ensemble experiments behind the degree, clustering and path-length figures.

Each experiment returns a :class:`Table` and can be written out as a CSV
file plus an SVG plot. Local and BA realization ``r`` share the seed
``derive_seed(master, r)``; larger sizes of one realization extend smaller
ones, because a run to size ``t`` is exactly the prefix of a longer run
with the same seed.
"""

from __future__ import annotations

import csv
import enum
import io
import os
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path

import numpy as np

from .analytic import predicted_apl_line, predicted_ck
from .ensemble import EnsembleStats, run_ensemble
from .errors import InvalidConfigError
from .graph import Graph
from .growth import GrowthConfig, Model, grow_snapshots
from .metrics import (
    ClusteringSpectrum,
    DegreeHistogram,
    average_path_length,
    clustering_spectrum,
    degree_distribution,
)
from .rng import RandomSource, derive_seed
from .svg import Series, write_plot

__all__ = [
    "Experiment",
    "ExperimentSpec",
    "Table",
    "fig2a",
    "fig2b",
    "fig3",
    "fig4",
    "run_experiment",
    "parse_apl_mode",
]


class Experiment(str, enum.Enum):
    FIG2A = "fig2a"
    FIG2B = "fig2b"
    FIG3 = "fig3"
    FIG4 = "fig4"


@dataclass
class Table:
    header: list[str]
    rows: list[list]

    def column(self, name: str) -> list:
        j = self.header.index(name)
        return [r[j] for r in self.rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.header)
        for row in self.rows:
            w.writerow([_cell(v) for v in row])
        return buf.getvalue()


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


DEFAULT_SIZES_FIG4 = (250, 500, 1000, 2000, 4000, 8000, 16000)


@dataclass
class ExperimentSpec:
    experiment: Experiment
    realizations: int = 100
    sizes: tuple[int, ...] = (10_000,)
    m: int = 2
    m0: int | None = None
    seed: int = 0
    out_dir: Path = field(default_factory=lambda: Path(os.environ.get("MBAGROW_OUTPUT_DIR", ".")))
    apl: str = "auto"
    workers: int = 1

    def __post_init__(self) -> None:
        self.experiment = Experiment(self.experiment)
        self.sizes = tuple(sorted(set(int(t) for t in self.sizes)))
        self.out_dir = Path(self.out_dir)
        if self.realizations < 1:
            raise InvalidConfigError("realizations must be >= 1")
        if not self.sizes:
            raise InvalidConfigError("sizes must be nonempty")
        # validates m, m0 and every size against the seed
        for t in self.sizes:
            self.config(Model.LOCAL, t)
        parse_apl_mode(self.apl)

    def config(self, model: Model, t: int) -> GrowthConfig:
        return GrowthConfig(m=self.m, m0=self.m0, t_final=t, seed=self.seed, model=model)


def parse_apl_mode(text: str) -> tuple[str, int]:
    """``"exact"``, ``"auto"`` or ``"sampled:N"`` -> (mode, sources)."""
    if text in ("exact", "auto"):
        return text, 1000
    if text.startswith("sampled"):
        _, _, n = text.partition(":")
        try:
            sources = int(n) if n else 1000
        except ValueError:
            raise InvalidConfigError(f"bad source count in {text!r}") from None
        if sources < 1:
            raise InvalidConfigError("sources must be >= 1")
        return "sampled", sources
    raise InvalidConfigError(f"unknown path-length mode {text!r}")


# -- per-realization observables (top level so they pickle) ---------------


def _degrees_at(cfg: GrowthConfig, sizes: tuple[int, ...]) -> list[np.ndarray]:
    return grow_snapshots(cfg, sizes, lambda g: g.degrees())


def _histograms_at(cfg: GrowthConfig, sizes: tuple[int, ...]) -> list[DegreeHistogram]:
    return grow_snapshots(cfg, sizes, degree_distribution)


def _spectra_at(cfg: GrowthConfig, sizes: tuple[int, ...]) -> list[ClusteringSpectrum]:
    return grow_snapshots(cfg, sizes, clustering_spectrum)


def _apl_at(cfg: GrowthConfig, sizes: tuple[int, ...], apl: str) -> list[float]:
    mode, sources = parse_apl_mode(apl)
    rng = RandomSource(derive_seed(cfg.seed, 1))

    def observe(g: Graph) -> float:
        n = g.node_count
        return average_path_length(g, mode, sources=min(sources, n), rng=rng).value

    return grow_snapshots(cfg, sizes, observe)


def _both(spec: ExperimentSpec, fn):
    t_max = spec.sizes[-1]
    out = {}
    for model in (Model.LOCAL, Model.BA):
        out[model] = run_ensemble(
            partial(fn, sizes=spec.sizes), spec.config(model, t_max), spec.realizations, spec.workers
        )
    return out


# -- experiments ----------------------------------------------------------


def fig2a(spec: ExperimentSpec) -> Table:
    """Mean degree of each node (paired by birth time) in the local and BA models."""
    res = _both(spec, _degrees_at)
    rows = []
    for j, t in enumerate(spec.sizes):
        mean = {
            model: np.mean([runs[j] for runs in res[model]], axis=0) for model in res
        }
        for node in range(t):
            kl = float(mean[Model.LOCAL][node])
            rows.append([t, node + 1, kl, float(mean[Model.BA][node]), kl])
    return Table(["t", "birth_time", "k_local", "k_ba", "bisector"], rows)


def fig2b(spec: ExperimentSpec) -> Table:
    """Pooled degree distributions with a ``k^-3`` reference column."""
    res = _both(spec, _histograms_at)
    amp = 2 * spec.m * (spec.m + 1)
    rows = []
    for j, t in enumerate(spec.sizes):
        hl = DegreeHistogram.merge(r[j] for r in res[Model.LOCAL])
        hb = DegreeHistogram.merge(r[j] for r in res[Model.BA])
        for k in sorted(set(hl.counts) | set(hb.counts)):
            rows.append(
                [t, k, hl.counts.get(k, 0), hl.p(k), hb.counts.get(k, 0), hb.p(k), amp * float(k) ** -3]
            )
    return Table(["t", "k", "count_local", "p_local", "count_ba", "p_ba", "power_law_ref"], rows)


def fig3(spec: ExperimentSpec) -> Table:
    """Pooled clustering spectrum of the local model; analytic ``2/k`` for m = 2."""
    cfg = spec.config(Model.LOCAL, spec.sizes[-1])
    res = run_ensemble(partial(_spectra_at, sizes=spec.sizes), cfg, spec.realizations, spec.workers)
    rows = []
    for j, t in enumerate(spec.sizes):
        s = ClusteringSpectrum.merge(r[j] for r in res)
        for k, c, n in s.items():
            rows.append([t, k, c, n, predicted_ck(k) if spec.m == 2 else None])
    return Table(["t", "k", "c_measured", "count", "c_analytic"], rows)


def fig4(spec: ExperimentSpec) -> Table:
    """Ensemble-mean path length versus size for both models."""
    res = _both(spec, partial(_apl_at, apl=spec.apl))
    rows = []
    for j, t in enumerate(spec.sizes):
        sl = EnsembleStats.from_samples([r[j] for r in res[Model.LOCAL]])
        sb = EnsembleStats.from_samples([r[j] for r in res[Model.BA]])
        rows.append([t, sl.mean, sl.stderr, sb.mean, sb.stderr, predicted_apl_line(t, spec.m)])
    return Table(["t", "L_local", "stderr_local", "L_ba", "stderr_ba", "L_line"], rows)


_RUNNERS = {Experiment.FIG2A: fig2a, Experiment.FIG2B: fig2b, Experiment.FIG3: fig3, Experiment.FIG4: fig4}


def _plot(spec: ExperimentSpec, table: Table, path: Path) -> None:
    t = spec.sizes[-1]
    rows = [r for r in table.rows if r[0] == t] if spec.experiment is not Experiment.FIG4 else table.rows
    col = {h: [r[i] for r in rows] for i, h in enumerate(table.header)}
    if spec.experiment is Experiment.FIG2A:
        lo, hi = min(col["k_local"] + col["k_ba"]), max(col["k_local"] + col["k_ba"])
        series = [Series("nodes", col["k_local"], col["k_ba"]), Series("bisector", [lo, hi], [lo, hi], "line")]
        kw = dict(title=f"node degree, local vs BA (t={t}, m={spec.m})", xlabel="k_i local", ylabel="k_i BA")
    elif spec.experiment is Experiment.FIG2B:
        series = [
            Series("local", col["k"], col["p_local"]),
            Series("BA", col["k"], col["p_ba"]),
            Series("k^-3", col["k"], col["power_law_ref"], "dashed"),
        ]
        kw = dict(title=f"degree distribution (t={t}, m={spec.m})", xlabel="k", ylabel="p(k)", xlog=True, ylog=True)
    elif spec.experiment is Experiment.FIG3:
        series = [Series("measured", col["k"], col["c_measured"])]
        if spec.m == 2:
            series.append(Series("2/k", col["k"], col["c_analytic"], "line"))
        kw = dict(title=f"clustering spectrum (t={t}, m={spec.m})", xlabel="k", ylabel="C(k)", xlog=True, ylog=True)
    else:
        series = [
            Series("local", col["t"], col["L_local"]),
            Series("BA", col["t"], col["L_ba"]),
            Series(f"ln t / ln {2 * spec.m}", col["t"], col["L_line"], "line"),
        ]
        kw = dict(title=f"average path length (m={spec.m})", xlabel="t", ylabel="L", xlog=True)
    write_plot(path, series, **kw)


def run_experiment(spec: ExperimentSpec) -> tuple[Table, Path, Path]:
    """Run ``spec`` and write ``<name>.csv`` and ``<name>.svg`` to its output directory."""
    table = _RUNNERS[spec.experiment](spec)
    spec.out_dir.mkdir(parents=True, exist_ok=True)
    name = spec.experiment.value
    csv_path = spec.out_dir / f"{name}.csv"
    svg_path = spec.out_dir / f"{name}.svg"
    with open(csv_path, "w", encoding="ascii", newline="") as fh:
        fh.write(table.to_csv())
    _plot(spec, table, svg_path)
    return table, csv_path, svg_path
