"""Shamos-Hoey sweep for polygon simplicity.

Events are the polygon vertices in lexicographic ``(x, y)`` order, which
amounts to a sweep line tilted by an infinitesimal angle, so vertical
edges need no special casing. The status structure is a treap over edge
ids with parent pointers: insertion descends with exact orientation
tests against the new edge's left endpoint, deletion works on the node
handle directly and never compares.

The same kernel source is built twice: once under ``numba.njit`` for
int64 coordinates whose spread keeps every cross product below 2^63, and
once as plain Python for arbitrary-size ints.
"""
from __future__ import annotations

import numpy as np

try:  # pragma: no cover - exercised implicitly
    import numba
except ImportError:  # pragma: no cover
    numba = None

# spread below 2^31 keeps |dx*dy - dy*dx| < 2^63
INT64_SAFE_SPREAD = (1 << 31) - 1
JIT_MIN_VERTICES = 4096


def _build(jit):
    @jit
    def orient(X, Y, a, b, c):
        d = (X[b] - X[a]) * (Y[c] - Y[a]) - (Y[b] - Y[a]) * (X[c] - X[a])
        if d > 0:
            return 1
        if d < 0:
            return -1
        return 0

    @jit
    def between(X, Y, p, a, b):
        # p collinear with a, b
        return (min(X[a], X[b]) <= X[p] <= max(X[a], X[b])
                and min(Y[a], Y[b]) <= Y[p] <= max(Y[a], Y[b]))

    @jit
    def overlap_at(X, Y, s, u, w):
        if orient(X, Y, s, u, w) != 0:
            return False
        return (X[u] - X[s]) * (X[w] - X[s]) + (Y[u] - Y[s]) * (Y[w] - Y[s]) > 0

    @jit
    def conflict(X, Y, a, b, c, d):
        if a == c:
            return overlap_at(X, Y, a, b, d)
        if a == d:
            return overlap_at(X, Y, a, b, c)
        if b == c:
            return overlap_at(X, Y, b, a, d)
        if b == d:
            return overlap_at(X, Y, b, a, c)
        d1 = orient(X, Y, a, b, c)
        d2 = orient(X, Y, a, b, d)
        d3 = orient(X, Y, c, d, a)
        d4 = orient(X, Y, c, d, b)
        if d1 * d2 < 0 and d3 * d4 < 0:
            return True
        if d1 == 0 and between(X, Y, c, a, b):
            return True
        if d2 == 0 and between(X, Y, d, a, b):
            return True
        if d3 == 0 and between(X, Y, a, c, d):
            return True
        if d4 == 0 and between(X, Y, b, c, d):
            return True
        return False

    @jit
    def rotate_up(x, left, right, parent, state):
        p = parent[x]
        g = parent[p]
        if left[p] == x:
            left[p] = right[x]
            if right[x] != -1:
                parent[right[x]] = p
            right[x] = p
        else:
            right[p] = left[x]
            if left[x] != -1:
                parent[left[x]] = p
            left[x] = p
        parent[p] = x
        parent[x] = g
        if g == -1:
            state[0] = x
        elif left[g] == p:
            left[g] = x
        else:
            right[g] = x

    @jit
    def pred(x, left, right, parent):
        if left[x] != -1:
            x = left[x]
            while right[x] != -1:
                x = right[x]
            return x
        p = parent[x]
        while p != -1 and left[p] == x:
            x = p
            p = parent[x]
        return p

    @jit
    def succ(x, left, right, parent):
        if right[x] != -1:
            x = right[x]
            while left[x] != -1:
                x = left[x]
            return x
        p = parent[x]
        while p != -1 and right[p] == x:
            x = p
            p = parent[x]
        return p

    @jit
    def kernel(X, Y, L, R, events, pos, prio, left, right, parent, state, out):
        n = len(L)
        for k in range(len(events)):
            v = events[k]
            e0 = pos[v] - 1
            if e0 < 0:
                e0 = n - 1
            e1 = pos[v]
            # removals first: edges whose right endpoint is v
            for e in (e0, e1):
                if R[e] != v:
                    continue
                a = pred(e, left, right, parent)
                b = succ(e, left, right, parent)
                while left[e] != -1 or right[e] != -1:
                    if left[e] == -1:
                        c = right[e]
                    elif right[e] == -1:
                        c = left[e]
                    elif prio[left[e]] > prio[right[e]]:
                        c = left[e]
                    else:
                        c = right[e]
                    rotate_up(c, left, right, parent, state)
                p = parent[e]
                if p == -1:
                    state[0] = -1
                elif left[p] == e:
                    left[p] = -1
                else:
                    right[p] = -1
                parent[e] = -1
                if a != -1 and b != -1 and conflict(X, Y, L[a], R[a], L[b], R[b]):
                    out[0] = a
                    out[1] = b
                    return
            for s in (e0, e1):
                if L[s] != v:
                    continue
                t = state[0]
                if t == -1:
                    state[0] = s
                    parent[s] = -1
                    continue
                while True:
                    if L[t] == v:
                        o = orient(X, Y, v, R[t], R[s])
                    else:
                        o = orient(X, Y, L[t], R[t], v)
                    if o == 0:
                        out[0] = t
                        out[1] = s
                        return
                    if o > 0:
                        if right[t] == -1:
                            right[t] = s
                            break
                        t = right[t]
                    else:
                        if left[t] == -1:
                            left[t] = s
                            break
                        t = left[t]
                parent[s] = t
                while parent[s] != -1 and prio[s] > prio[parent[s]]:
                    rotate_up(s, left, right, parent, state)
                for u in (pred(s, left, right, parent), succ(s, left, right, parent)):
                    if u != -1 and conflict(X, Y, L[u], R[u], L[s], R[s]):
                        out[0] = u
                        out[1] = s
                        return

    return kernel


_py_kernel = _build(lambda f: f)
_jit_kernel = None


def _get_jit_kernel():
    global _jit_kernel
    if _jit_kernel is None and numba is not None:
        _jit_kernel = _build(numba.njit(cache=False, nogil=True))
    return _jit_kernel


def _priorities(n: int) -> np.ndarray:
    # fixed splitmix64 hash of the edge id: deterministic treap shape
    z = np.arange(1, n + 1, dtype=np.uint64) * np.uint64(0x9E3779B97F4A7C15)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    z = z ^ (z >> np.uint64(31))
    return (z >> np.uint64(1)).astype(np.int64)


def find_violation(points, order, use_jit: bool | None = None):
    """Return ``None`` for a simple polygon, else the offending edge pair.

    ``order`` must already be a valid permutation of ``range(len(points))``.
    Edges are reported as ``(u, v)`` vertex-index pairs in polygon order.
    """
    n = len(order)
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    spread = max(max(xs) - min(xs), max(ys) - min(ys))
    if use_jit is None:
        use_jit = n >= JIT_MIN_VERTICES and spread <= INT64_SAFE_SPREAD
    if use_jit and (spread > INT64_SAFE_SPREAD or _get_jit_kernel() is None):
        use_jit = False

    order_arr = np.asarray(order, dtype=np.int64)
    nxt = np.roll(order_arr, -1)
    if use_jit:
        X = np.asarray(xs, dtype=np.int64)
        Y = np.asarray(ys, dtype=np.int64)
        X -= X.min()
        Y -= Y.min()
        # lexicographic rank of each vertex
        events = np.lexsort((Y, X)).astype(np.int64)
    else:
        X, Y = xs, ys
        events = np.asarray(sorted(range(n), key=lambda i: (xs[i], ys[i])), dtype=np.int64)
    rank = np.empty(n, dtype=np.int64)
    rank[events] = np.arange(n, dtype=np.int64)
    first = rank[order_arr] < rank[nxt]
    L = np.where(first, order_arr, nxt)
    R = np.where(first, nxt, order_arr)
    pos = np.empty(n, dtype=np.int64)
    pos[order_arr] = np.arange(n, dtype=np.int64)
    prio = _priorities(n)
    left = np.full(n, -1, dtype=np.int64)
    right = np.full(n, -1, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    state = np.full(1, -1, dtype=np.int64)
    out = np.full(2, -1, dtype=np.int64)

    if use_jit:
        _get_jit_kernel()(X, Y, L, R, events, pos, prio, left, right, parent, state, out)
    else:
        _py_kernel(X, Y, L.tolist(), R.tolist(), events.tolist(), pos.tolist(), prio.tolist(),
                   left.tolist(), right.tolist(), parent.tolist(), _Cell(), out)
    if out[0] == -1:
        return None
    e, f = sorted((int(out[0]), int(out[1])))
    return ((int(order[e]), int(order[(e + 1) % n])), (int(order[f]), int(order[(f + 1) % n])))


class _Cell(list):
    """Mutable one-slot root holder for the pure-Python kernel."""

    def __init__(self):
        super().__init__([-1])
