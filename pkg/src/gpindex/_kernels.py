"""Hot numeric kernels: unweighted BFS distances, the Djokovic-Winkler scan
and edge-masked connected components.

Every kernel exists twice. The numba versions are compiled with ``@njit``;
the numpy versions are level-synchronous / label-propagation formulations
that need nothing beyond numpy. Set ``GPINDEX_PURE_NUMPY=1`` before import
to force the numpy path (numba is also skipped when it cannot be imported).

All kernels return identical integer arrays on both paths.
"""

from __future__ import annotations

import os

import numpy as np

UNREACHABLE = -1


def _numba_wanted() -> bool:
    flag = os.environ.get("GPINDEX_PURE_NUMPY", "").strip().lower()
    return flag not in ("1", "true", "yes", "on")


try:
    if not _numba_wanted():
        raise ImportError("numba disabled by GPINDEX_PURE_NUMPY")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f


# --------------------------------------------------------------------------
# numba path
# --------------------------------------------------------------------------


@njit(cache=True)
def _bfs_row_nb(indptr, indices, n, source):
    row = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    row[source] = 0
    queue[0] = source
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        du = row[u] + 1
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            if row[v] < 0:
                row[v] = du
                queue[tail] = v
                tail += 1
    return row


@njit(cache=True)
def _apsp_nb(indptr, indices, n):
    dist = np.full((n, n), -1, np.int64)
    queue = np.empty(n, np.int64)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = row[u] + 1
            for p in range(indptr[u], indptr[u + 1]):
                v = indices[p]
                if row[v] < 0:
                    row[v] = du
                    queue[tail] = v
                    tail += 1
    return dist


@njit(cache=True)
def _find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


@njit(cache=True)
def _union_min(parent, a, b):
    ra = _find(parent, a)
    rb = _find(parent, b)
    if ra < rb:
        parent[rb] = ra
    elif rb < ra:
        parent[ra] = rb


@njit(cache=True)
def _dense_from_roots(parent):
    # roots are component minima, so first-seen order == order of smallest member
    n = parent.shape[0]
    out = np.empty(n, np.int64)
    dense = np.full(n, -1, np.int64)
    nxt = 0
    for x in range(n):
        r = _find(parent, x)
        if dense[r] < 0:
            dense[r] = nxt
            nxt += 1
        out[x] = dense[r]
    return out


@njit(cache=True)
def _theta_classes_nb(dist, eu, ev):
    m = eu.shape[0]
    parent = np.arange(m)
    for a in range(m):
        u1 = eu[a]
        v1 = ev[a]
        for b in range(a + 1, m):
            u2 = eu[b]
            v2 = ev[b]
            if dist[u1, u2] + dist[v1, v2] != dist[u1, v2] + dist[v1, u2]:
                _union_min(parent, a, b)
    return _dense_from_roots(parent)


@njit(cache=True)
def _components_nb(n, eu, ev, keep):
    parent = np.arange(n)
    for e in range(eu.shape[0]):
        if keep[e]:
            _union_min(parent, eu[e], ev[e])
    return _dense_from_roots(parent)


# --------------------------------------------------------------------------
# numpy path
# --------------------------------------------------------------------------


def _dense_adjacency(indptr, indices, n):
    a = np.zeros((n, n), dtype=np.float64)
    rows = np.repeat(np.arange(n), np.diff(indptr))
    a[rows, indices] = 1.0
    return a


def _bfs_levels_np(adj, frontier):
    """Level-synchronous BFS for every row of ``frontier`` at once."""
    dist = np.where(frontier, 0, UNREACHABLE).astype(np.int64)
    visited = frontier.copy()
    level = 0
    while frontier.any():
        level += 1
        frontier = (frontier.astype(np.float64) @ adj > 0.5) & ~visited
        dist[frontier] = level
        visited |= frontier
    return dist


def _bfs_row_np(indptr, indices, n, source):
    adj = _dense_adjacency(indptr, indices, n)
    start = np.zeros((1, n), dtype=bool)
    start[0, source] = True
    return _bfs_levels_np(adj, start)[0]


def _apsp_np(indptr, indices, n):
    adj = _dense_adjacency(indptr, indices, n)
    return _bfs_levels_np(adj, np.eye(n, dtype=bool))


def _min_label_dense(labels):
    # labels hold component minima; sorted unique values give smallest-member order
    _, inv = np.unique(labels, return_inverse=True)
    return inv.astype(np.int64).reshape(-1)


def _theta_classes_np(dist, eu, ev):
    m = eu.shape[0]
    if m == 0:
        return np.zeros(0, dtype=np.int64)
    related = (dist[np.ix_(eu, eu)] + dist[np.ix_(ev, ev)]) != (
        dist[np.ix_(eu, ev)] + dist[np.ix_(ev, eu)]
    )
    labels = np.arange(m, dtype=np.int64)
    while True:
        new = np.where(related, labels[None, :], m).min(axis=1)
        new = np.minimum(new, labels)
        new = new[new]  # pointer jumping
        if np.array_equal(new, labels):
            break
        labels = new
    return _min_label_dense(labels)


def _components_np(n, eu, ev, keep):
    labels = np.arange(n, dtype=np.int64)
    a = eu[keep]
    b = ev[keep]
    while True:
        new = labels.copy()
        np.minimum.at(new, a, labels[b])
        np.minimum.at(new, b, labels[a])
        new = new[new]
        if np.array_equal(new, labels):
            break
        labels = new
    return _min_label_dense(labels)


NUMPY_KERNELS = {
    "bfs_row": _bfs_row_np,
    "apsp": _apsp_np,
    "theta_classes": _theta_classes_np,
    "components": _components_np,
}

NUMBA_KERNELS = {
    "bfs_row": _bfs_row_nb,
    "apsp": _apsp_nb,
    "theta_classes": _theta_classes_nb,
    "components": _components_nb,
}

_ACTIVE = NUMBA_KERNELS if HAVE_NUMBA else NUMPY_KERNELS
BACKEND = "numba" if HAVE_NUMBA else "numpy"


def bfs_row(indptr, indices, n, source):
    return _ACTIVE["bfs_row"](indptr, indices, n, source)


def apsp(indptr, indices, n):
    return _ACTIVE["apsp"](indptr, indices, n)


def theta_classes(dist, eu, ev):
    """Dense Theta*-class id per edge, classes numbered by smallest edge index."""
    return _ACTIVE["theta_classes"](dist, eu, ev)


def components(n, eu, ev, keep):
    """Dense component id per vertex using only edges with ``keep`` set."""
    return _ACTIVE["components"](n, eu, ev, keep)
