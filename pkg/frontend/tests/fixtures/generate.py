"""Regenerate the CSV fixtures by driving the lvm command-line interface.

Run from this directory:  python3 generate.py

Everything goes through the public CLI so these files are exactly what the
figure pipeline sees in production. Graphs are tiny and replication counts
small to keep the fixtures a few KB.
"""

import json
import subprocess
from pathlib import Path

import numpy as np

HERE = Path(__file__).parent

BASE = {
    "f_init": 12,
    "budget": 15,
    "m_s": 1,
    "t_inf": 50,
    "theta_mean": 5,
    "pmax_mean": 0.5,
    "p_min": 0,
    "replications": 4,
    "seed": 3,
}


def write_edges(name: str, n: int, seed: int) -> None:
    rng = np.random.default_rng(seed)
    lines = [f"{i}\t{j}" for i in range(n) for j in range(i + 1, n)
             if rng.random() < 8.0 / n]
    lines.append(f"0\t{n - 1}")
    (HERE / name).write_text("\n".join(lines) + "\n")


def sweep(out: str, dimension, values, methods, trace=False, **overrides) -> None:
    cfg = dict(BASE, network="net.txt", dimension=dimension, values=values,
               methods=methods, **overrides)
    cfg_path = HERE / f"{out}.json"
    cfg_path.write_text(json.dumps(cfg, indent=2) + "\n")
    cmd = ["lvm", "sweep", "--config", cfg_path.name, "--out", out]
    if trace:
        cmd.append("--trace")
    subprocess.run(cmd, cwd=HERE, check=True)


def main() -> None:
    write_edges("net.txt", 120, 1)
    write_edges("netB.txt", 120, 2)

    methods = ["picky_gec", "social_1"]
    sweep("sweep_finit", "f_init", [6, 12, 24], methods)
    sweep("sweep_pmin", "p_min", [0, 0.3, 0.6], methods)
    sweep("sweep_pmax", "pmax_mean", [0.3, 0.6, 0.9], methods)
    sweep("sweep_theta", "theta_mean", [2, 5, 8], methods)
    sweep("sweep_noise", "theta_std", [0, 2, 4], methods)
    sweep("sweep_size", "sample_size", [60, 90, 120], methods)
    sweep("sweep_net", "network", ["net.txt", "netB.txt"], methods)
    sweep("trace", "m_s", [1], ["picky_gec", "social_1", "random"], trace=True,
          replications=3, budget=12)


if __name__ == "__main__":
    main()
