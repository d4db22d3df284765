"""Numba-compiled inner loops over CSR adjacency arrays.

Pure-numpy twins with identical signatures live in numpy_backend; the
dispatcher in __init__ picks one per the LVM_BACKEND env flag.
"""

import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def _prob(pmax, theta, pmin, n):
    # acceptance probability: pmin floor, then pmax scaled by saturating
    # neighbor fraction min(theta, n)/theta
    frac = n / theta if n < theta else 1.0
    return pmin + (1.0 - pmin) * pmax * frac


@njit(cache=True)
def adj_matvec(indptr, indices, x):
    """y[v] = sum of x over the neighbors of v."""
    n = indptr.shape[0] - 1
    out = np.zeros(n, dtype=np.float64)
    for v in range(n):
        acc = 0.0
        for j in range(indptr[v], indptr[v + 1]):
            acc += x[indices[j]]
        out[v] = acc
    return out


@njit(cache=True)
def triangle_counts(indptr, indices):
    """Per-node triangle counts; adjacency rows must be sorted."""
    n = indptr.shape[0] - 1
    tri = np.zeros(n, dtype=np.int64)
    for v in range(n):
        vs, ve = indptr[v], indptr[v + 1]
        if ve - vs < 2:
            continue
        cnt = 0
        for j in range(vs, ve):
            u = indices[j]
            a, b = vs, indptr[u]
            ue = indptr[u + 1]
            while a < ve and b < ue:
                x, y = indices[a], indices[b]
                if x == y:
                    cnt += 1
                    a += 1
                    b += 1
                elif x < y:
                    a += 1
                else:
                    b += 1
        tri[v] = cnt // 2  # each triangle at v seen via both its other corners
    return tri


@njit(cache=True)
def count_infectious(indptr, indices, states):
    """Per-node count of neighbors in state 1."""
    n = indptr.shape[0] - 1
    out = np.zeros(n, dtype=np.int64)
    for v in range(n):
        c = 0
        for j in range(indptr[v], indptr[v + 1]):
            if states[indices[j]] == 1:
                c += 1
        out[v] = c
    return out


@njit(cache=True)
def _plus_one_probs(indptr, indices, states, n_plus, theta, pmax, pmin):
    """P1[x] = acceptance of state-0 x with one extra infectious neighbor;
    S1[x] = sum of P1 over x's state-0 neighbors (0 elsewhere)."""
    n = indptr.shape[0] - 1
    p1 = np.zeros(n, dtype=np.float64)
    for x in range(n):
        if states[x] == 0:
            p1[x] = _prob(pmax[x], theta[x], pmin[x], n_plus[x] + 1)
    s1 = np.zeros(n, dtype=np.float64)
    for x in range(n):
        if states[x] != 0:
            continue
        acc = 0.0
        for j in range(indptr[x], indptr[x + 1]):
            acc += p1[indices[j]]  # p1 is already 0 for non-state-0 neighbors
        s1[x] = acc
    return p1, s1


@njit(cache=True)
def social_scores(indptr, indices, states, n_plus, theta, pmax, pmin, cand, depth):
    """Batch recursive attractiveness scores for candidate nodes, depth 0..2.

    The recursion counts earlier chain members as hypothetically infectious,
    so a depth-1 neighbor u is scored with one extra infectious neighbor (the
    candidate v), and a depth-2 node w with u plus, when w closes a triangle,
    v as well. Expanding that dependence: the inner sum over w equals
    S1[u] - P1[v] plus a correction D2[w] for every state-0 common neighbor
    w of u and v, which is all that has to be computed per (v, u) pair.
    """
    m = cand.shape[0]
    out = np.empty(m, dtype=np.float64)
    if depth == 0:
        for i in range(m):
            v = cand[i]
            out[i] = _prob(pmax[v], theta[v], pmin[v], n_plus[v])
        return out

    n = indptr.shape[0] - 1
    p1, s1 = _plus_one_probs(indptr, indices, states, n_plus, theta, pmax, pmin)
    if depth == 1:
        for i in range(m):
            v = cand[i]
            pv = _prob(pmax[v], theta[v], pmin[v], n_plus[v])
            out[i] = pv * (1.0 + s1[v])
        return out

    d2 = np.zeros(n, dtype=np.float64)  # prob at +2 minus prob at +1
    for x in range(n):
        if states[x] == 0:
            d2[x] = _prob(pmax[x], theta[x], pmin[x], n_plus[x] + 2) - p1[x]

    for i in range(m):
        v = cand[i]
        pv = _prob(pmax[v], theta[v], pmin[v], n_plus[v])
        vs, ve = indptr[v], indptr[v + 1]
        p1v = p1[v]
        acc1 = 0.0
        for j in range(vs, ve):
            u = indices[j]
            if states[u] != 0:
                continue
            us, ue = indptr[u], indptr[u + 1]
            # triangle correction: iterate the smaller sorted row, binary
            # search the larger; u and v exclude themselves automatically
            if ue - us <= ve - vs:
                it_s, it_e, bs_s, bs_e = us, ue, vs, ve
            else:
                it_s, it_e, bs_s, bs_e = vs, ve, us, ue
            c = 0.0
            for jj in range(it_s, it_e):
                w = indices[jj]
                if states[w] != 0:
                    continue
                lo, hi = bs_s, bs_e
                while lo < hi:
                    mid = (lo + hi) >> 1
                    if indices[mid] < w:
                        lo = mid + 1
                    else:
                        hi = mid
                if lo < bs_e and indices[lo] == w:
                    c += d2[w]
            acc1 += p1[u] * (1.0 + s1[u] - p1v + c)
        out[i] = pv * (1.0 + acc1)
    return out
