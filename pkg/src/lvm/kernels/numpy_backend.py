"""Vectorized numpy fallbacks for the numba kernels.

Same signatures and semantics as numba_backend; slower on the depth-2
score and triangle loops, which fall back to per-node Python iteration
with vectorized inner steps.
"""

import numpy as np


def _prob(pmax, theta, pmin, n):
    return pmin + (1.0 - pmin) * pmax * (np.minimum(theta, n) / theta)


def _row_sums(contrib, indptr, indices):
    # cumsum-difference segment sums; robust to empty rows
    if indices.size == 0:
        return np.zeros(indptr.size - 1, dtype=np.float64)
    csum = np.concatenate(([0.0], np.cumsum(contrib[indices], dtype=np.float64)))
    return csum[indptr[1:]] - csum[indptr[:-1]]


def adj_matvec(indptr, indices, x):
    """y[v] = sum of x over the neighbors of v."""
    return _row_sums(np.asarray(x, dtype=np.float64), indptr, indices)


def _sorted_member(haystack, needles):
    # membership of each needle in a sorted array
    if haystack.size == 0:
        return np.zeros(needles.shape, dtype=bool)
    pos = np.searchsorted(haystack, needles)
    return haystack[np.minimum(pos, haystack.size - 1)] == needles


def triangle_counts(indptr, indices):
    """Per-node triangle counts; adjacency rows must be sorted."""
    n = indptr.size - 1
    tri = np.zeros(n, dtype=np.int64)
    for v in range(n):
        nv = indices[indptr[v]:indptr[v + 1]]
        for u in nv[nv > v]:
            nu = indices[indptr[u]:indptr[u + 1]]
            nu = nu[nu > u]
            if nu.size == 0:
                continue
            ws = nu[_sorted_member(nv, nu)]
            if ws.size:
                # one triangle (v, u, w) per common neighbor w with v < u < w
                tri[v] += ws.size
                tri[u] += ws.size
                np.add.at(tri, ws, 1)
    return tri


def count_infectious(indptr, indices, states):
    """Per-node count of neighbors in state 1."""
    if indices.size == 0:
        return np.zeros(indptr.size - 1, dtype=np.int64)
    flags = (states == 1).astype(np.int64)
    csum = np.concatenate(([0], np.cumsum(flags[indices])))
    return csum[indptr[1:]] - csum[indptr[:-1]]


def _gather_rows(indptr, indices, rows):
    """Concatenated neighbor lists of `rows` plus the owning-row repeat counts."""
    starts = indptr[rows]
    counts = (indptr[rows + 1] - starts).astype(np.int64)
    total = int(counts.sum())
    if total == 0:
        return np.zeros(0, dtype=indices.dtype), counts
    offsets = np.cumsum(counts) - counts
    flat = np.repeat(starts, counts) + np.arange(total) - np.repeat(offsets, counts)
    return indices[flat], counts


def social_scores(indptr, indices, states, n_plus, theta, pmax, pmin, cand, depth):
    """Batch recursive attractiveness scores for candidate nodes, depth 0..2.

    Same factorization as the numba backend: with P1[x] the acceptance of
    state-0 x given one extra infectious neighbor and S1[x] its sum over
    x's state-0 neighbors, the depth-2 inner sum for a pair (v, u) is
    S1[u] - P1[v] plus a D2 correction over state-0 common neighbors.
    """
    pv = _prob(pmax[cand], theta[cand], pmin[cand], n_plus[cand])
    if depth == 0:
        return pv

    state0 = states == 0
    p1 = np.where(state0, _prob(pmax, theta, pmin, n_plus + 1), 0.0)
    s1 = _row_sums(p1, indptr, indices)
    if depth == 1:
        return pv * (1.0 + s1[cand])

    d2 = np.where(state0, _prob(pmax, theta, pmin, n_plus + 2) - p1, 0.0)
    out = np.empty(cand.size, dtype=np.float64)
    for i in range(cand.size):
        v = int(cand[i])
        nv = indices[indptr[v]:indptr[v + 1]]
        u_arr = nv[state0[nv]].astype(np.int64)
        if u_arr.size == 0:
            out[i] = pv[i]
            continue
        acc1 = float((p1[u_arr] * (1.0 + s1[u_arr] - p1[v])).sum())
        w, counts = _gather_rows(indptr, indices, u_arr)
        if w.size:
            # triangle corrections: state-0 second hops that are also
            # neighbors of v (v and u never match - no self-loops)
            in_nv = state0[w] & _sorted_member(nv, w)
            acc1 += float((np.repeat(p1[u_arr], counts)[in_nv] * d2[w[in_nv]]).sum())
        out[i] = pv[i] * (1.0 + acc1)
    return out
