"""Seeding strategies: Random, GEC, their picky variants, and Social-k.

Social-k ranks candidates by a recursive attractiveness score: the node's own
acceptance probability times one plus the scores of its still-seedable
neighbors, each evaluated as if all nodes earlier in the chain had already
accepted (a growing hypothetical-infected set). Depth 0 is the greedy
probability itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .diffusion import DiffusionState, NodeParams, NodeState, infection_probability, \
    infectious_neighbor_count
from .graph import CentralityVector, Graph


class ViewMode(Enum):
    KNOWN = "known"
    ESTIMATED = "estimated"


class SeederKind(Enum):
    RANDOM = "random"
    GEC = "gec"
    PICKY_RANDOM = "picky_random"
    PICKY_GEC = "picky_gec"
    SOCIAL_0 = "social_0"
    SOCIAL_1 = "social_1"
    SOCIAL_2 = "social_2"

    @property
    def picky(self) -> bool:
        return self is not SeederKind.RANDOM and self is not SeederKind.GEC

    @property
    def social_depth(self) -> int | None:
        return {SeederKind.SOCIAL_0: 0, SeederKind.SOCIAL_1: 1,
                SeederKind.SOCIAL_2: 2}.get(self)


@dataclass
class ParamView:
    """Acceptance parameters as the seeder sees them.

    Known mode shares the true per-node params; estimated mode holds an
    independent per-node draw from the same (mu, sigma) Normals, made once
    per run.
    """

    mode: ViewMode
    params: NodeParams


def draw_estimates(mu_theta: float, sigma_theta: float, mu_pmax: float, sigma_pmax: float,
                   n: int, rng: np.random.Generator, p_min: float = 0.0) -> NodeParams:
    """One Normal draw per node: theta rounded half-up and clamped to >= 1,
    p_max clamped to [0, 1]. p_min is policy, not a personal trait, so it is
    copied through unperturbed."""
    if mu_theta < 1:
        raise ValueError("mu_theta must be >= 1")
    if not 0.0 <= mu_pmax <= 1.0:
        raise ValueError("mu_pmax must lie in [0, 1]")
    if sigma_theta < 0 or sigma_pmax < 0:
        raise ValueError("sigmas must be >= 0")
    theta = np.floor(rng.normal(mu_theta, sigma_theta, size=n) + 0.5)
    theta = np.maximum(theta, 1.0).astype(np.int64)
    p_max = np.clip(rng.normal(mu_pmax, sigma_pmax, size=n), 0.0, 1.0)
    return NodeParams(p_max=p_max, theta=theta, p_min=np.full(n, p_min))


def candidate_set(kind: SeederKind, ds: DiffusionState, g: Graph) -> np.ndarray:
    """Seedable nodes for the method: every state-0 node, or for the picky
    methods only state-0 nodes with at least one infectious neighbor."""
    uninfected = ds.states == NodeState.NON_INFECTED
    if kind.picky:
        uninfected &= ds.n_plus(g) >= 1
    return np.flatnonzero(uninfected).astype(np.int64)


def social_score(v: int, k: int, ds: DiffusionState, g: Graph, view: ParamView,
                 hypothetical: frozenset[int] = frozenset()) -> float:
    """Reference recursion for the Social-k score.

    Score(v, 0, hyp) = p(v | hyp)
    Score(v, k, hyp) = p(v | hyp) * (1 + sum over u in N0(v) \\ hyp of
                                          Score(u, k-1, hyp + {v}))
    where p(v | hyp) uses the view's params with hypothetical nodes counted
    as infectious, and N0(v) is the state-0 neighbors of v (SeedingFailed
    neighbors can never be seeded, so they contribute nothing).

    Exponential in k; production scoring goes through score_candidates.
    """
    if ds.states[v] != NodeState.NON_INFECTED:
        raise ValueError(f"social_score of node {v} not in state NonInfected")
    if v in hypothetical:
        raise ValueError(f"node {v} already in the hypothetical set")
    p_v = infection_probability(view.params, v,
                                infectious_neighbor_count(ds, g, v, hypothetical))
    if k == 0:
        return p_v
    hyp_v = hypothetical | {v}
    acc = 1.0
    for u in g.neighbors(v):
        u = int(u)
        if ds.states[u] == NodeState.NON_INFECTED and u not in hypothetical:
            acc += social_score(u, k - 1, ds, g, view, hyp_v)
    return p_v * acc


def score_candidates(depth: int, ds: DiffusionState, g: Graph, view: ParamView,
                     cand: np.ndarray) -> np.ndarray:
    """Batch Social-k scores for the candidate array (kernel-backed)."""
    if depth not in (0, 1, 2):
        raise ValueError("depth must be 0, 1 or 2")
    return kernels.social_scores(
        g.indptr, g.indices, ds.states, ds.n_plus(g),
        view.params.theta, view.params.p_max, view.params.p_min,
        np.asarray(cand, dtype=np.int64), depth,
    )


@dataclass
class Selection:
    """Chosen nodes in descending key order, with the keys used to rank."""

    nodes: np.ndarray
    scores: np.ndarray
    fallback: bool


def select(kind: SeederKind, m_s: int, ds: DiffusionState, g: Graph, view: ParamView,
           centrality: CentralityVector, rng: np.random.Generator) -> Selection:
    """Pick up to m_s nodes for this period's seeding attempts.

    Ranking keys: constant for the random methods (ordering is then pure
    random tie-break), static centrality for GEC variants, Social-k scores
    otherwise; ties always break uniformly at random. An empty candidate set
    with state-0 nodes remaining degrades to uniform random over those,
    flagged as fallback.
    """
    if m_s < 1:
        raise ValueError("m_s must be >= 1")
    cand = candidate_set(kind, ds, g)
    fallback = False
    if cand.size == 0:
        cand = np.flatnonzero(ds.states == NodeState.NON_INFECTED).astype(np.int64)
        if cand.size == 0:
            empty = np.zeros(0, dtype=np.int64)
            return Selection(nodes=empty, scores=np.zeros(0), fallback=False)
        fallback = True

    depth = kind.social_depth
    if fallback or kind in (SeederKind.RANDOM, SeederKind.PICKY_RANDOM):
        keys = np.zeros(cand.size)
    elif kind in (SeederKind.GEC, SeederKind.PICKY_GEC):
        keys = centrality.scores[cand]
    else:
        keys = score_candidates(depth, ds, g, view, cand)

    order = np.lexsort((rng.random(cand.size), -keys))[:min(m_s, cand.size)]
    return Selection(nodes=cand[order], scores=keys[order], fallback=fallback)


def brute_force_expected_value(v: int, k: int, ds: DiffusionState, g: Graph,
                               view: ParamView) -> float:
    """Oracle for the Social-k score: explicit chain enumeration.

    Sums, over every seeding chain (v), (v,u), (v,u,w) with u a state-0
    neighbor of v and w a state-0 neighbor of u other than v, the product of
    conditional acceptance probabilities in which each link counts all
    earlier chain members as infectious. Test-only: refuses graphs with more
    than 12 nodes.
    """
    if g.n > 12:
        raise ValueError("brute-force oracle is for graphs with <= 12 nodes")
    if ds.states[v] != NodeState.NON_INFECTED:
        raise ValueError(f"node {v} not in state NonInfected")

    def p(node: int, hyp: frozenset[int]) -> float:
        return infection_probability(view.params, node,
                                     infectious_neighbor_count(ds, g, node, hyp))

    def n0(node: int, hyp: frozenset[int]) -> list[int]:
        return [int(u) for u in g.neighbors(node)
                if ds.states[u] == NodeState.NON_INFECTED and int(u) not in hyp]

    total = p(v, frozenset())
    if k >= 1:
        for u in n0(v, frozenset()):
            p_u = p(v, frozenset()) * p(u, frozenset({v}))
            total += p_u
            if k >= 2:
                for w in n0(u, frozenset({v})):
                    total += p_u * p(w, frozenset({v, u}))
    return total
