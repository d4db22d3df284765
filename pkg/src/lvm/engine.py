"""One full seeding campaign: pre-seed, period loop, budget accounting.

Period structure: advance the clock (expiring infectious timers), pick up to
m_s candidates with the configured seeder, then attempt them in descending
score order. Outcomes are Bernoulli draws against the TRUE per-node
parameters; scores always come from the seeder's view. A success updates
state immediately, so it can raise a later same-period attempt's true
probability, but scores are computed once per period unless
rescore_within_period is set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .diffusion import (DiffusionState, NodeParams, NodeState, advance_period,
                        infection_probability, infectious_neighbor_count, init_states,
                        pre_seed, record_attempt)
from .graph import CentralityVector, Graph
from .strategies import ParamView, SeederKind, ViewMode, draw_estimates, select

# Independent named RNG streams derived from one root seed. Keeping the
# true-parameter and pre-seed draws on their own streams means two runs with
# the same rng_seed but different seeders face the identical environment —
# the basis for paired method comparisons.
_STREAM_TRUE = 0
_STREAM_VIEW = 1
_STREAM_PRESEED = 2
_STREAM_TIEBREAK = 3
_STREAM_OUTCOMES = 4


@dataclass(frozen=True)
class ParamSpec:
    """Population distribution of the true acceptance parameters."""

    mu_theta: float = 5.0
    sigma_theta: float = 0.0
    mu_pmax: float = 0.5
    sigma_pmax: float = 0.0
    p_min: float = 0.0


@dataclass(frozen=True)
class ViewSpec:
    """What the seeder knows: the truth, or an independent estimate draw."""

    mode: ViewMode = ViewMode.KNOWN
    sigma_theta_est: float = 0.0
    sigma_pmax_est: float = 0.0


@dataclass(frozen=True)
class SimConfig:
    seeder: SeederKind
    budget: int
    f_init_size: int
    t_inf: int
    m_s: int = 1
    param_spec: ParamSpec = ParamSpec()
    view_spec: ViewSpec = ViewSpec()
    rng_seed: int = 0
    rescore_within_period: bool = False
    redraw_view_each_period: bool = False

    def validate(self, g: Graph) -> None:
        if self.budget < 1:
            raise ValueError("budget must be >= 1")
        if self.m_s < 1:
            raise ValueError("m_s must be >= 1")
        if self.t_inf < 1:
            raise ValueError("t_inf must be >= 1")
        if not 0 <= self.f_init_size <= g.n:
            raise ValueError(f"f_init_size must be in [0, {g.n}], got {self.f_init_size}")
        if not 0.0 <= self.param_spec.p_min <= 1.0:
            raise ValueError("p_min must lie in [0, 1]")


@dataclass(frozen=True)
class AttemptRecord:
    period: int
    node: int
    n_plus_at_attempt: int
    probability_used: float
    success: bool
    node_centrality: float
    fallback: bool


class Termination(Enum):
    BUDGET_EXHAUSTED = "BudgetExhausted"
    NO_UNINFECTED_LEFT = "NoUninfectedLeft"


@dataclass
class SimTrace:
    attempts: list[AttemptRecord]
    successes: int
    failures: int
    success_ratio: float
    periods_elapsed: int
    terminated_by: Termination
    # environment realization, kept for paired-replication checks
    f_init: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int64))
    true_params: NodeParams | None = None


def _streams(rng_seed: int) -> list[np.random.Generator]:
    return [np.random.Generator(np.random.PCG64(np.random.SeedSequence(
        rng_seed, spawn_key=(k,)))) for k in range(5)]


def run_simulation(cfg: SimConfig, g: Graph, centrality: CentralityVector) -> SimTrace:
    """Run one campaign to budget exhaustion or state-0 exhaustion.

    Deterministic in (cfg, g): every random draw comes from named PCG64
    streams derived from cfg.rng_seed.
    """
    cfg.validate(g)
    rng_true, rng_view, rng_preseed, rng_tie, rng_out = _streams(cfg.rng_seed)

    ps = cfg.param_spec
    true_params = draw_estimates(ps.mu_theta, ps.sigma_theta, ps.mu_pmax, ps.sigma_pmax,
                                 g.n, rng_true, p_min=ps.p_min)

    def draw_view() -> ParamView:
        if cfg.view_spec.mode is ViewMode.KNOWN:
            return ParamView(mode=ViewMode.KNOWN, params=true_params)
        vs = cfg.view_spec
        est = draw_estimates(ps.mu_theta, vs.sigma_theta_est, ps.mu_pmax, vs.sigma_pmax_est,
                             g.n, rng_view, p_min=ps.p_min)
        return ParamView(mode=ViewMode.ESTIMATED, params=est)

    view = draw_view()
    ds = init_states(g, cfg.t_inf)
    f_init = pre_seed(ds, g, cfg.f_init_size, rng_preseed)

    attempts: list[AttemptRecord] = []
    budget = cfg.budget
    terminated_by = Termination.BUDGET_EXHAUSTED
    while budget > 0:
        advance_period(ds)
        if not np.any(ds.states == NodeState.NON_INFECTED):
            terminated_by = Termination.NO_UNINFECTED_LEFT
            break
        if cfg.redraw_view_each_period and cfg.view_spec.mode is ViewMode.ESTIMATED:
            view = draw_view()

        room = min(cfg.m_s, budget)
        picks_per_call = 1 if cfg.rescore_within_period else room
        while room > 0:
            sel = select(cfg.seeder, min(picks_per_call, room), ds, g, view,
                         centrality, rng_tie)
            if sel.nodes.size == 0:
                break
            for v in sel.nodes:
                v = int(v)
                n_plus_now = infectious_neighbor_count(ds, g, v)
                p = infection_probability(true_params, v, n_plus_now)
                success = bool(rng_out.random() < p)
                record_attempt(ds, v, success)
                attempts.append(AttemptRecord(
                    period=ds.current_period, node=v, n_plus_at_attempt=n_plus_now,
                    probability_used=p, success=success,
                    node_centrality=float(centrality.scores[v]), fallback=sel.fallback,
                ))
                budget -= 1
                room -= 1

    successes = sum(a.success for a in attempts)
    failures = len(attempts) - successes
    return SimTrace(
        attempts=attempts,
        successes=successes,
        failures=failures,
        success_ratio=successes / len(attempts) if attempts else 0.0,
        periods_elapsed=ds.current_period,
        terminated_by=terminated_by,
        f_init=f_init,
        true_params=true_params,
    )


def mean_seeded_centrality(trace: SimTrace, window: tuple[int, int]) -> float:
    """Mean node_centrality of attempts with period in [window[0], window[1]]."""
    lo, hi = window
    vals = [a.node_centrality for a in trace.attempts if lo <= a.period <= hi]
    if not vals:
        raise ValueError(f"no attempts in period window [{lo}, {hi}]")
    return float(np.mean(vals))


def cumulative_success_curve(trace: SimTrace) -> list[tuple[int, float]]:
    """(period, cumulative successes / cumulative attempts) per active period."""
    curve: list[tuple[int, float]] = []
    succ = 0
    total = 0
    i = 0
    attempts = trace.attempts
    while i < len(attempts):
        period = attempts[i].period
        while i < len(attempts) and attempts[i].period == period:
            succ += attempts[i].success
            total += 1
            i += 1
        curve.append((period, succ / total))
    return curve
