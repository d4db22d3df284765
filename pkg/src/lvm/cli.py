"""Command-line interface: fetch, net-stats, run, sweep, centrality."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import replace
from pathlib import Path

from .datasets import REGISTRY, default_cache_dir, fetch_dataset
from .engine import ParamSpec, SimConfig, ViewSpec
from .graph import build_graph, eigenvector_centrality, graph_stats, parse_edge_list
from .harness import (SweepSpec, aggregate, load_network, run_replications, run_sweep,
                      write_aggregate_csv, write_attempts_csv, write_timings_csv)
from .strategies import SeederKind, ViewMode


def _method_from_config(cfg: dict) -> SeederKind:
    name = cfg.get("method", "social")
    if name == "social":
        name = f"social_{int(cfg.get('social_depth', 1))}"
    return SeederKind(name)


def _view_from_config(cfg: dict) -> ViewSpec:
    view = cfg.get("view", {"mode": "known"})
    mode = ViewMode(view.get("mode", "known"))
    if mode is ViewMode.KNOWN:
        return ViewSpec(mode=mode)
    return ViewSpec(mode=mode, sigma_theta_est=float(view.get("theta_std", 0.0)),
                    sigma_pmax_est=float(view.get("pmax_std", 0.0)))


def _sim_config_from_json(cfg: dict, seeder: SeederKind) -> SimConfig:
    return SimConfig(
        seeder=seeder,
        budget=int(cfg.get("budget", 200)),
        f_init_size=int(cfg.get("f_init", 200)),
        t_inf=int(cfg.get("t_inf", 50)),
        m_s=int(cfg.get("m_s", 1)),
        param_spec=ParamSpec(
            mu_theta=float(cfg.get("theta_mean", 5.0)),
            sigma_theta=float(cfg.get("theta_std_true", 0.0)),
            mu_pmax=float(cfg.get("pmax_mean", 0.5)),
            sigma_pmax=float(cfg.get("pmax_std_true", 0.0)),
            p_min=float(cfg.get("p_min", 0.0)),
        ),
        view_spec=_view_from_config(cfg),
        rng_seed=int(cfg.get("seed", 0)),
    )


def _load_json(path: str) -> dict:
    with open(path) as f:
        return json.load(f)


def _cmd_fetch(args: argparse.Namespace) -> int:
    path = fetch_dataset(args.dataset, Path(args.cache) if args.cache else None)
    print(path)
    return 0


def _cmd_net_stats(args: argparse.Namespace) -> int:
    if args.dataset:
        path = fetch_dataset(args.dataset, Path(args.cache) if args.cache else None)
    else:
        path = Path(args.edges)
    with open(path) as f:
        g = build_graph(parse_edge_list(f))
    s = graph_stats(g)
    w = csv.writer(sys.stdout)
    w.writerow(["n", "edge_count", "avg_degree", "avg_clustering"])
    w.writerow([s.n, s.edge_count, "%.9g" % s.avg_degree, "%.9g" % s.avg_clustering])
    return 0


def _cmd_run(args: argparse.Namespace) -> int:
    cfg = _load_json(args.config)
    method = _method_from_config(cfg)
    sim_cfg = _sim_config_from_json(cfg, method)
    seed = int(cfg.get("seed", 0))
    cache = Path(args.cache) if args.cache else None
    g = load_network(cfg["network"], cache, cfg.get("sample_size"), seed)
    sim_cfg.validate(g)
    centrality = eigenvector_centrality(g)
    n_reps = int(cfg.get("replications", 400))
    summaries, traces = run_replications(sim_cfg, g, centrality, n_reps, seed,
                                         workers=args.workers, keep_traces=args.trace)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    row = aggregate(method.value, "none", "", summaries)
    write_aggregate_csv([replace(row, mean_runtime_ms=0.0)], out / "aggregate.csv")
    write_timings_csv([row], out / "timings.csv")
    if args.trace:
        write_attempts_csv([(i, method.value, t) for i, t in enumerate(traces)],
                           out / "attempts.csv")
    print(f"mean_success_ratio={row.mean_success_ratio:.9g} "
          f"ci95={row.ci95_half_width:.9g} replications={row.replications}")
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _load_json(args.config)
    methods = [SeederKind(m) for m in cfg["methods"]]
    base = _sim_config_from_json(cfg, methods[0])
    spec = SweepSpec(
        network=cfg["network"],
        dimension=cfg["dimension"],
        values=cfg["values"],
        methods=methods,
        base=base,
        replications=int(cfg.get("replications", 400)),
        seed=int(cfg.get("seed", 0)),
        sample_size=cfg.get("sample_size"),
        cache_dir=Path(args.cache) if args.cache else None,
        workers=args.workers,
        emit_attempts=args.trace,
    )
    paths = run_sweep(spec, Path(args.out))
    for name, path in paths.items():
        print(f"{name}: {path}")
    return 0


def _cmd_centrality(args: argparse.Namespace) -> int:
    with open(args.edges) as f:
        g = build_graph(parse_edge_list(f))
    cv = eigenvector_centrality(g)
    with open(args.out, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["node_id", "centrality"])
        for v in range(g.n):
            w.writerow([v, "%.9g" % cv.scores[v]])
    print(args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lvm",
        description="Latent viral marketing seeding simulator and strategy benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fetch", help="download a dataset into the cache")
    p.add_argument("--dataset", required=True, choices=sorted(REGISTRY))
    p.add_argument("--cache", default=None, help=f"cache dir (default {default_cache_dir()})")
    p.set_defaults(func=_cmd_fetch)

    p = sub.add_parser("net-stats", help="print node/edge/degree/clustering stats")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--dataset", choices=sorted(REGISTRY))
    src.add_argument("--edges", help="edge-list file")
    p.add_argument("--cache", default=None)
    p.set_defaults(func=_cmd_net_stats)

    p = sub.add_parser("run", help="replicate one configuration")
    p.add_argument("--config", required=True, help="JSON config file")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--trace", action="store_true", help="also write attempts.csv")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cache", default=None)
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("sweep", help="sweep one parameter across methods")
    p.add_argument("--config", required=True, help="JSON config file")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--trace", action="store_true", help="also write attempts.csv")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cache", default=None)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("centrality", help="write eigenvector centrality per node")
    p.add_argument("--edges", required=True, help="edge-list file")
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=_cmd_centrality)

    return parser


def entrypoint(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(entrypoint())
