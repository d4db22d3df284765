"""Shared fixtures: tiny analytic graphs, dataset access, acceptance summary."""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np
import pytest

from lvm import NodeParams, NodeState, build_graph, init_states
from lvm.datasets import DatasetError, fetch_dataset

# ---------------------------------------------------------------------------
# Tiny graphs with known analytic properties


@pytest.fixture
def star3():
    """S3: center 0, leaves 1..3."""
    return build_graph([(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def triangle():
    return build_graph([(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path3():
    """P3: 0 - 1 - 2."""
    return build_graph([(0, 1), (1, 2)])


@pytest.fixture
def path4():
    """P4: 0 - 1 - 2 - 3."""
    return build_graph([(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def k4():
    return build_graph([(i, j) for i in range(4) for j in range(i + 1, 4)])


def complete_graph(n: int):
    return build_graph([(i, j) for i in range(n) for j in range(i + 1, n)])


def random_graph(n: int, p: float, rng: np.random.Generator):
    """Erdos-Renyi G(n, p) built through the public constructor."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    pairs.append((0, n - 1))  # guarantee every id appears so n is exact
    return build_graph(pairs)


def random_state(g, rng: np.random.Generator, p_infectious=0.25, p_failed=0.1,
                 p_expired=0.1, t_inf=50):
    """Random legal DiffusionState over g."""
    ds = init_states(g, t_inf)
    draws = rng.random(g.n)
    infectious = draws < p_infectious
    expired = (draws >= p_infectious) & (draws < p_infectious + p_expired)
    failed = ((draws >= p_infectious + p_expired)
              & (draws < p_infectious + p_expired + p_failed))
    ds.states[infectious] = NodeState.INFECTED_INFECTIOUS
    ds.infected_at[infectious] = 0
    ds.states[expired] = NodeState.INFECTED_NON_INFECTIOUS
    ds.infected_at[expired] = -t_inf
    ds.states[failed] = NodeState.SEEDING_FAILED
    return ds


def random_params(n: int, rng: np.random.Generator, p_min_max=0.3) -> NodeParams:
    return NodeParams(
        p_max=rng.uniform(0.05, 1.0, size=n),
        theta=rng.integers(1, 8, size=n),
        p_min=rng.uniform(0.0, p_min_max, size=n),
    )


# ---------------------------------------------------------------------------
# Benchmark datasets (network-gated)

_DATASET_CACHE: dict[str, Path | None] = {}


def dataset_path(name: str) -> Path | None:
    """Local path for a benchmark network, or None when unobtainable.

    Tries the warm cache first, then one short-timeout download; failures are
    remembered so the suite pays the probe cost once per dataset.
    """
    if name not in _DATASET_CACHE:
        try:
            _DATASET_CACHE[name] = fetch_dataset(name, timeout=20.0)
        except DatasetError:
            _DATASET_CACHE[name] = None
    return _DATASET_CACHE[name]


def require_dataset(name: str) -> Path:
    path = dataset_path(name)
    if path is None:
        pytest.skip(f"benchmark network {name!r} unavailable: no warm cache and "
                    "no network access to snap.stanford.edu")
    return path


# ---------------------------------------------------------------------------
# Acceptance summary: one line per criterion at the end of the run

_ACCEPTANCE: dict[str, tuple[str, str]] = {}
_CRIT_RE = re.compile(r"test_(a\d+)")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if "acceptance" not in item.keywords:
        return
    m = _CRIT_RE.match(item.name)
    if not m:
        return
    crit = m.group(1).upper()
    doc = (item.function.__doc__ or "").strip().splitlines()
    desc = doc[0] if doc else item.name
    if report.when == "setup" and report.skipped:
        reason = report.longrepr[2] if isinstance(report.longrepr, tuple) else ""
        _ACCEPTANCE[crit] = ("SKIP", f"{desc} [{reason}]")
    elif report.when == "call":
        status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
        if report.skipped and isinstance(report.longrepr, tuple):
            desc = f"{desc} [{report.longrepr[2]}]"
        _ACCEPTANCE[crit] = (status, desc)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(_ACCEPTANCE, key=lambda c: int(c[1:])):
        status, desc = _ACCEPTANCE[crit]
        tr.write_line(f"{crit}: {status} — {desc}")
