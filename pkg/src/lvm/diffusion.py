"""Per-node LVM lifecycle state, infectious timers, acceptance probability.

Node lifecycle: NonInfected(0) → InfectedInfectious(1) on accepted offer,
NonInfected(0) → SeedingFailed(3) on rejected offer, and
InfectedInfectious(1) → InfectedNonInfectious(2) when the t_inf timer runs
out. States 2 and 3 are absorbing; there is no re-offer and no recovery.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable

import numpy as np

from . import kernels
from .graph import Graph


class NodeState(IntEnum):
    NON_INFECTED = 0
    INFECTED_INFECTIOUS = 1
    INFECTED_NON_INFECTIOUS = 2
    SEEDING_FAILED = 3


# infected_at value for nodes that have never been infected
_UNSET = np.iinfo(np.int64).min


@dataclass
class NodeParams:
    """Per-node acceptance parameters (arrays of length n)."""

    p_max: np.ndarray  # float64 in [0, 1]
    theta: np.ndarray  # int64 >= 1
    p_min: np.ndarray  # float64 in [0, 1]

    def __post_init__(self):
        self.p_max = np.asarray(self.p_max, dtype=np.float64)
        self.theta = np.asarray(self.theta, dtype=np.int64)
        self.p_min = np.asarray(self.p_min, dtype=np.float64)
        if np.any(self.theta < 1):
            raise ValueError("theta must be >= 1")
        for name, arr in (("p_max", self.p_max), ("p_min", self.p_min)):
            if np.any((arr < 0.0) | (arr > 1.0)):
                raise ValueError(f"{name} must lie in [0, 1]")

    @property
    def n(self) -> int:
        return self.p_max.shape[0]

    @classmethod
    def constant(cls, n: int, p_max: float, theta: int, p_min: float = 0.0) -> "NodeParams":
        return cls(p_max=np.full(n, p_max), theta=np.full(n, theta, dtype=np.int64),
                   p_min=np.full(n, p_min))


def infection_probability(params: NodeParams, v: int, n_plus: int) -> float:
    """Acceptance probability of node v with n_plus infectious neighbors.

    p = p_min + (1 - p_min) * p_max * min(theta, n_plus) / theta.
    p_min = 0 recovers the base linear-saturating form; this is the single
    code path for both.
    """
    if n_plus < 0:
        raise ValueError("n_plus must be >= 0")
    frac = min(int(params.theta[v]), n_plus) / int(params.theta[v])
    return float(params.p_min[v] + (1.0 - params.p_min[v]) * params.p_max[v] * frac)


@dataclass(eq=False)
class DiffusionState:
    """Mutable state of one simulation run; owned by a single engine loop."""

    states: np.ndarray  # int8 NodeState codes, length n
    infected_at: np.ndarray  # int64, _UNSET where state in {0, 3}
    current_period: int
    t_inf: int

    def n_plus(self, g: Graph) -> np.ndarray:
        """Infectious-neighbor counts |N_v^+| for all nodes at once."""
        return kernels.count_infectious(g.indptr, g.indices, self.states)

    def check_invariants(self) -> None:
        s = self.states
        inf_set = self.infected_at != _UNSET
        assert np.all(inf_set == np.isin(s, (1, 2))), "infected_at set iff state in {1,2}"
        age = self.current_period - self.infected_at
        assert np.all(age[s == NodeState.INFECTED_INFECTIOUS] < self.t_inf)
        assert np.all(age[s == NodeState.INFECTED_NON_INFECTIOUS] >= self.t_inf)


def init_states(g: Graph, t_inf: int) -> DiffusionState:
    """Fresh all-NonInfected state at period 0."""
    if t_inf < 1:
        raise ValueError("t_inf must be >= 1")
    return DiffusionState(
        states=np.zeros(g.n, dtype=np.int8),
        infected_at=np.full(g.n, _UNSET, dtype=np.int64),
        current_period=0,
        t_inf=int(t_inf),
    )


def pre_seed(ds: DiffusionState, g: Graph, f_init_size: int, rng: np.random.Generator) -> np.ndarray:
    """Infect f_init_size nodes uniformly without replacement; returns F^init.

    Infection timestamps are drawn uniformly (with replacement) from
    {-(t_inf-1), ..., 0} so the initial cohort's remaining lifetimes are
    staggered across the first t_inf periods instead of expiring together.
    """
    if not 0 <= f_init_size <= g.n:
        raise ValueError(f"f_init_size must be in [0, {g.n}], got {f_init_size}")
    if f_init_size == 0:
        return np.zeros(0, dtype=np.int64)
    chosen = np.sort(rng.choice(g.n, size=f_init_size, replace=False))
    ds.states[chosen] = NodeState.INFECTED_INFECTIOUS
    ds.infected_at[chosen] = rng.integers(-(ds.t_inf - 1), 1, size=f_init_size)
    return chosen


def infectious_neighbor_count(ds: DiffusionState, g: Graph, v: int,
                              hypothetical: Iterable[int] = ()) -> int:
    """|N_v^+|: neighbors in state 1, plus hypothetical nodes adjacent to v.

    Hypothetical members are treated as infectious regardless of their real
    state; the SSH recursion uses this for its conditional probabilities.
    """
    nbrs = g.neighbors(v)
    count = int(np.count_nonzero(ds.states[nbrs] == NodeState.INFECTED_INFECTIOUS))
    for u in hypothetical:
        if u != v and g.has_edge(v, u) and ds.states[u] != NodeState.INFECTED_INFECTIOUS:
            count += 1
    return count


def record_attempt(ds: DiffusionState, v: int, success: bool) -> None:
    """Apply a seeding attempt's outcome to node v (must be NonInfected)."""
    if ds.states[v] != NodeState.NON_INFECTED:
        raise ValueError(
            f"seeding attempt on node {v} in state {NodeState(ds.states[v]).name}; "
            "only NonInfected nodes may be offered"
        )
    if success:
        ds.states[v] = NodeState.INFECTED_INFECTIOUS
        ds.infected_at[v] = ds.current_period
    else:
        ds.states[v] = NodeState.SEEDING_FAILED


def advance_period(ds: DiffusionState) -> None:
    """Increment the period counter, then expire infectious nodes.

    A node infected at period t is infectious through period t + t_inf - 1
    and moves to InfectedNonInfectious at the start of period t + t_inf.
    """
    ds.current_period += 1
    infectious = ds.states == NodeState.INFECTED_INFECTIOUS
    expired = infectious & (ds.current_period - ds.infected_at >= ds.t_inf)
    ds.states[expired] = NodeState.INFECTED_NON_INFECTIOUS
