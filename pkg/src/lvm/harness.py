"""Replication orchestration, aggregation, sweeps, and CSV emission.

Replication i of a cell runs with rng_seed = seed_base + i; because each
simulation derives its true-parameter and pre-seed draws from dedicated
streams, replication i sees the identical environment under every method —
aggregates across methods are paired comparisons. Workers > 1 fan
replications out to a process pool; output order is by replication index
either way.
"""

from __future__ import annotations

import csv
import hashlib
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .datasets import REGISTRY, fetch_dataset
from .engine import SimConfig, SimTrace, run_simulation
from .graph import CentralityVector, Graph, build_graph, eigenvector_centrality, \
    parse_edge_list, sample_induced
from .strategies import SeederKind, ViewMode

AGGREGATE_HEADER = ("method", "dimension", "value", "replications", "mean_success_ratio",
                    "std", "ci95_half_width", "mean_runtime_ms", "mean_fallback_rate")
ATTEMPTS_HEADER = ("run_id", "method", "period", "node_id", "centrality", "n_plus",
                   "probability", "success", "fallback")

# RNG stream for network sampling; distinct from the per-run streams 0-4.
_SAMPLE_STREAM = 9


def _fmt(x: float) -> str:
    return "%.9g" % x


def _quant(x: float) -> float:
    return float(_fmt(x))


def load_network(network: str, cache_dir: Path | None = None,
                 sample_size: int | None = None, seed: int = 0) -> Graph:
    """Load a registry dataset or an edge-list file, optionally sampling an
    induced subgraph of sample_size nodes (deterministic in seed)."""
    path = fetch_dataset(network, cache_dir) if network in REGISTRY else Path(network)
    with open(path) as f:
        g = build_graph(parse_edge_list(f))
    if sample_size is not None and sample_size < g.n:
        rng = np.random.Generator(np.random.PCG64(
            np.random.SeedSequence(seed, spawn_key=(_SAMPLE_STREAM,))))
        g = sample_induced(g, sample_size, rng)
    return g


@dataclass(frozen=True)
class RunSummary:
    rng_seed: int
    attempts: int
    successes: int
    failures: int
    success_ratio: float
    periods_elapsed: int
    terminated_by: str
    runtime_ms: float
    fallback_rate: float
    f_init_digest: str
    true_param_digest: str


def _digest(*arrays: np.ndarray) -> str:
    h = hashlib.sha256()
    for a in arrays:
        h.update(np.ascontiguousarray(a).tobytes())
    return h.hexdigest()[:16]


def summarize(trace: SimTrace, rng_seed: int, runtime_ms: float) -> RunSummary:
    n_att = len(trace.attempts)
    fallback = sum(a.fallback for a in trace.attempts) / n_att if n_att else 0.0
    tp = trace.true_params
    return RunSummary(
        rng_seed=rng_seed,
        attempts=n_att,
        successes=trace.successes,
        failures=trace.failures,
        success_ratio=trace.success_ratio,
        periods_elapsed=trace.periods_elapsed,
        terminated_by=trace.terminated_by.value,
        runtime_ms=runtime_ms,
        fallback_rate=fallback,
        f_init_digest=_digest(trace.f_init),
        true_param_digest=_digest(tp.p_max, tp.theta, tp.p_min) if tp is not None else "",
    )


# Per-process context for pool workers: the graph and centrality are shipped
# once via the initializer instead of with every task.
_POOL_CTX: dict = {}


def _pool_init(g: Graph, centrality: CentralityVector) -> None:
    _POOL_CTX["g"] = g
    _POOL_CTX["centrality"] = centrality


def _run_one(cfg: SimConfig, g: Graph, centrality: CentralityVector,
             keep_trace: bool) -> tuple[RunSummary, SimTrace | None]:
    t0 = time.perf_counter()
    try:
        trace = run_simulation(cfg, g, centrality)
    except Exception as exc:
        raise RuntimeError(f"replication with rng_seed={cfg.rng_seed} failed: {exc}") from exc
    ms = (time.perf_counter() - t0) * 1e3
    return summarize(trace, cfg.rng_seed, ms), (trace if keep_trace else None)


def _run_one_pooled(args: tuple[SimConfig, bool]) -> tuple[RunSummary, SimTrace | None]:
    cfg, keep_trace = args
    return _run_one(cfg, _POOL_CTX["g"], _POOL_CTX["centrality"], keep_trace)


def run_replications(template: SimConfig, g: Graph, centrality: CentralityVector,
                     n_reps: int, seed_base: int, workers: int = 1,
                     keep_traces: bool = False,
                     ) -> tuple[list[RunSummary], list[SimTrace] | None]:
    """Run n_reps simulations with rng_seed = seed_base + i, ordered by i."""
    if n_reps < 1:
        raise ValueError("n_reps must be >= 1")
    cfgs = [replace(template, rng_seed=seed_base + i) for i in range(n_reps)]
    if workers <= 1:
        results = [_run_one(cfg, g, centrality, keep_traces) for cfg in cfgs]
    else:
        with ProcessPoolExecutor(max_workers=workers, initializer=_pool_init,
                                 initargs=(g, centrality)) as pool:
            results = list(pool.map(_run_one_pooled,
                                    [(cfg, keep_traces) for cfg in cfgs]))
    summaries = [r[0] for r in results]
    traces = [r[1] for r in results] if keep_traces else None
    return summaries, traces


@dataclass(frozen=True)
class AggregateRow:
    method: str
    dimension: str
    value: str  # formatted dimension value (or dataset name for network sweeps)
    replications: int
    mean_success_ratio: float
    std: float
    ci95_half_width: float
    mean_runtime_ms: float
    mean_fallback_rate: float


def aggregate(method: str, dimension: str, value: str,
              summaries: Sequence[RunSummary]) -> AggregateRow:
    """Mean/σ/CI over replications; floats quantized to 9 significant digits
    so CSV round-trips are exact."""
    if not summaries:
        raise ValueError("no summaries to aggregate")
    ratios = np.array([s.success_ratio for s in summaries])
    std = float(ratios.std(ddof=1)) if len(summaries) > 1 else 0.0
    return AggregateRow(
        method=method,
        dimension=dimension,
        value=value,
        replications=len(summaries),
        mean_success_ratio=_quant(float(ratios.mean())),
        std=_quant(std),
        ci95_half_width=_quant(1.96 * std / np.sqrt(len(summaries))),
        mean_runtime_ms=_quant(float(np.mean([s.runtime_ms for s in summaries]))),
        mean_fallback_rate=_quant(float(np.mean([s.fallback_rate for s in summaries]))),
    )


def relative_improvement(method_row: AggregateRow, baseline_row: AggregateRow) -> float:
    """(mean_method - mean_baseline) / mean_baseline, as a fraction."""
    b = baseline_row.mean_success_ratio
    if b <= 0:
        raise ValueError("baseline mean_success_ratio must be > 0")
    return (method_row.mean_success_ratio - b) / b


def write_aggregate_csv(rows: Iterable[AggregateRow], path: Path) -> None:
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(AGGREGATE_HEADER)
        for r in rows:
            w.writerow([r.method, r.dimension, r.value, r.replications,
                        _fmt(r.mean_success_ratio), _fmt(r.std), _fmt(r.ci95_half_width),
                        _fmt(r.mean_runtime_ms), _fmt(r.mean_fallback_rate)])


def write_timings_csv(rows: Iterable[AggregateRow], path: Path) -> None:
    """Wall-clock report per sweep cell (not covered by determinism contracts)."""
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["method", "dimension", "value", "replications", "mean_runtime_ms"])
        for r in rows:
            w.writerow([r.method, r.dimension, r.value, r.replications,
                        _fmt(r.mean_runtime_ms)])


def read_aggregate_csv(path: Path) -> list[AggregateRow]:
    with open(path, newline="") as f:
        reader = csv.reader(f)
        header = tuple(next(reader))
        if header != AGGREGATE_HEADER:
            raise ValueError(f"unexpected aggregate CSV header: {header}")
        out = []
        for row in reader:
            out.append(AggregateRow(
                method=row[0], dimension=row[1], value=row[2], replications=int(row[3]),
                mean_success_ratio=float(row[4]), std=float(row[5]),
                ci95_half_width=float(row[6]), mean_runtime_ms=float(row[7]),
                mean_fallback_rate=float(row[8])))
        return out


def write_attempts_csv(rows: Iterable[tuple], path: Path) -> None:
    """rows: (run_id, method, trace) triples flattened into per-attempt lines."""
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(ATTEMPTS_HEADER)
        for run_id, method, trace in rows:
            for a in trace.attempts:
                w.writerow([run_id, method, a.period, a.node, _fmt(a.node_centrality),
                            a.n_plus_at_attempt, _fmt(a.probability_used),
                            int(a.success), int(a.fallback)])


@dataclass
class SweepSpec:
    """One-dimension-at-a-time sweep over a set of methods."""

    network: str
    dimension: str
    values: Sequence
    methods: Sequence[SeederKind]
    base: SimConfig
    replications: int = 400
    seed: int = 0
    sample_size: int | None = None
    cache_dir: Path | None = None
    workers: int = 1
    emit_attempts: bool = False


_DIMENSIONS = ("f_init", "budget", "m_s", "t_inf", "theta_mean", "pmax_mean", "p_min",
               "theta_std", "pmax_std", "theta_std_true", "pmax_std_true",
               "sample_size", "network")


def _apply_dimension(cfg: SimConfig, dimension: str, value) -> SimConfig:
    ps, vs = cfg.param_spec, cfg.view_spec
    if dimension == "f_init":
        return replace(cfg, f_init_size=int(value))
    if dimension == "budget":
        return replace(cfg, budget=int(value))
    if dimension == "m_s":
        return replace(cfg, m_s=int(value))
    if dimension == "t_inf":
        return replace(cfg, t_inf=int(value))
    if dimension == "theta_mean":
        return replace(cfg, param_spec=replace(ps, mu_theta=float(value)))
    if dimension == "pmax_mean":
        return replace(cfg, param_spec=replace(ps, mu_pmax=float(value)))
    if dimension == "p_min":
        return replace(cfg, param_spec=replace(ps, p_min=float(value)))
    if dimension == "theta_std":
        return replace(cfg, view_spec=replace(vs, mode=ViewMode.ESTIMATED,
                                              sigma_theta_est=float(value)))
    if dimension == "pmax_std":
        return replace(cfg, view_spec=replace(vs, mode=ViewMode.ESTIMATED,
                                              sigma_pmax_est=float(value)))
    if dimension == "theta_std_true":
        return replace(cfg, param_spec=replace(ps, sigma_theta=float(value)))
    if dimension == "pmax_std_true":
        return replace(cfg, param_spec=replace(ps, sigma_pmax=float(value)))
    if dimension in ("sample_size", "network"):
        return cfg  # graph-level dimensions; handled by the sweep loop
    raise ValueError(f"unknown sweep dimension {dimension!r}; "
                     f"known: {', '.join(_DIMENSIONS)}")


def _fmt_value(v) -> str:
    return v if isinstance(v, str) else _fmt(float(v))


def run_sweep(spec: SweepSpec, out_dir: Path) -> dict[str, Path]:
    """Aggregate one row per (method x value) into out_dir/aggregate.csv.

    With emit_attempts, every attempt of every replication also lands in
    out_dir/attempts.csv (bulky; meant for figure inputs).
    """
    if not spec.values:
        raise ValueError("sweep values must be non-empty")
    if spec.dimension not in _DIMENSIONS:
        raise ValueError(f"unknown sweep dimension {spec.dimension!r}; "
                         f"known: {', '.join(_DIMENSIONS)}")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    graphs: dict[tuple, tuple[Graph, CentralityVector]] = {}

    def graph_for(value) -> tuple[Graph, CentralityVector]:
        network = value if spec.dimension == "network" else spec.network
        size = int(value) if spec.dimension == "sample_size" else spec.sample_size
        key = (network, size)
        if key not in graphs:
            g = load_network(network, spec.cache_dir, size, spec.seed)
            graphs[key] = (g, eigenvector_centrality(g))
        return graphs[key]

    rows: list[AggregateRow] = []
    attempt_rows: list[tuple] = []
    run_id = 0
    for value in spec.values:
        g, centrality = graph_for(value)
        for method in spec.methods:
            cfg = _apply_dimension(replace(spec.base, seeder=method),
                                   spec.dimension, value)
            summaries, traces = run_replications(
                cfg, g, centrality, spec.replications, spec.seed,
                workers=spec.workers, keep_traces=spec.emit_attempts)
            rows.append(aggregate(method.value, spec.dimension, _fmt_value(value),
                                  summaries))
            if traces is not None:
                for trace in traces:
                    attempt_rows.append((run_id, method.value, trace))
                    run_id += 1

    paths = {"aggregate": out_dir / "aggregate.csv", "timings": out_dir / "timings.csv"}
    # aggregate.csv is the deterministic artifact (same config + seed ->
    # identical bytes); wall-clock noise goes to the timings.csv sidecar, so
    # the runtime column is zeroed here and reported there.
    write_aggregate_csv([replace(r, mean_runtime_ms=0.0) for r in rows],
                        paths["aggregate"])
    write_timings_csv(rows, paths["timings"])
    if spec.emit_attempts:
        paths["attempts"] = out_dir / "attempts.csv"
        write_attempts_csv(attempt_rows, paths["attempts"])
    return paths
