"""Numba kernels for the annealers and the exhaustive enumerator.

These are internal: they work on plain dense arrays, keep their own RNG
seeded per read, and report raw labels/bits.  Exact energies are recomputed
by the callers in solvers.py, so accumulated float drift inside a read never
leaks into reported results.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def anneal_qubo_read(quad, lin, sweeps, beta0, ratio, seed):
    """One restart of single-bit-flip Metropolis on a dense QUBO.

    quad: symmetric off-diagonal coefficient matrix (zero diagonal);
    lin: linear coefficients.  Returns the final bit vector.
    """
    nv = lin.size
    np.random.seed(seed)
    x = np.empty(nv, np.int8)
    for p in range(nv):
        x[p] = 1 if np.random.random() < 0.5 else 0
    # local fields: f[p] = lin[p] + sum_q quad[p, q] * x[q]
    f = lin.copy()
    for p in range(nv):
        acc = 0.0
        for q in range(nv):
            if x[q] == 1:
                acc += quad[p, q]
        f[p] += acc
    beta = beta0
    for _ in range(sweeps):
        for p in range(nv):
            delta = f[p] if x[p] == 0 else -f[p]
            if delta <= 0.0 or np.random.random() < np.exp(-beta * delta):
                sign = 1.0 if x[p] == 0 else -1.0
                x[p] = 1 - x[p]
                for q in range(nv):
                    f[q] += sign * quad[q, p]
        beta *= ratio
    return x


@njit(cache=True)
def anneal_discrete_read(B, k, sweeps, beta0, ratio, seed):
    """One restart of single-bus-reassignment Metropolis on energy -Q_e.

    Maintains T[u, c] = sum of B[u, j] over buses j currently in c, giving
    O(1) move deltas and O(n) accepted-move updates.
    """
    n = B.shape[0]
    np.random.seed(seed)
    labels = np.empty(n, np.int64)
    for i in range(n):
        labels[i] = np.random.randint(0, k)
    T = np.zeros((n, k))
    for j in range(n):
        c = labels[j]
        for u in range(n):
            T[u, c] += B[u, j]
    beta = beta0
    for _ in range(sweeps):
        for v in range(n):
            a = labels[v]
            b = np.random.randint(0, k)
            if b == a:
                continue
            delta = -2.0 * (T[v, b] - T[v, a] + B[v, v])
            if delta <= 0.0 or np.random.random() < np.exp(-beta * delta):
                labels[v] = b
                for u in range(n):
                    T[u, a] -= B[u, v]
                    T[u, b] += B[u, v]
        beta *= ratio
    return labels


@njit(cache=True)
def exhaustive_search_kernel(B, k):
    """Exact max-modularity over all set partitions into at most k blocks.

    Depth-first enumeration of restricted-growth strings (bus i may open at
    most one new block), with an incremental gain table F[c, i] = sum of
    B[j, i] over buses j already placed in block c.  Returns (score, labels).
    """
    n = B.shape[0]
    a = np.zeros(n, np.int64)
    choice = np.zeros(n, np.int64)
    blocks_before = np.zeros(n + 1, np.int64)
    partial = np.zeros(n + 1)
    F = np.zeros((k, n))
    best = -1e300
    best_a = np.zeros(n, np.int64)
    i = 0
    while i >= 0:
        limit = min(blocks_before[i], k - 1)
        if choice[i] > limit:
            i -= 1
            if i >= 0:
                c = a[i]
                for q in range(n):
                    F[c, q] -= B[i, q]
                choice[i] += 1
            continue
        c = choice[i]
        gain = B[i, i] + 2.0 * F[c, i]
        score = partial[i] + gain
        if i == n - 1:
            if score > best:
                best = score
                a[i] = c
                best_a[:] = a
            choice[i] += 1
        else:
            a[i] = c
            for q in range(n):
                F[c, q] += B[i, q]
            partial[i + 1] = score
            blocks_before[i + 1] = max(blocks_before[i], c + 1)
            i += 1
            choice[i] = 0
    return best, best_a
