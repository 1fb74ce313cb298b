"""Numba kernels for all-pairs BFS and local-navigation path sums.

All kernels take CSR adjacency (``indptr``, ``indices`` as int32, neighbor
lists sorted ascending) and accumulate exact integer hop sums in int64, so
results are bit-reproducible regardless of thread count.

Navigation kernels evaluate one destination at a time.  For a fixed
destination the move out of every node is a pure function of the node, so
hop counts for all sources are recovered by resolving nodes in an order
that follows the progress measure of the policy (ring distance for greedy
and committed two-hop moves, best-reachable-endpoint distance for one-hop
re-decision).
"""

import numpy as np
from numba import njit, prange


@njit(cache=True)
def _bfs_fill(indptr, indices, src, dist, queue):
    dist[src] = 0
    queue[0] = src
    head = 0
    tail = 1
    while head < tail:
        v = queue[head]
        head += 1
        dnext = dist[v] + 1
        for p in range(indptr[v], indptr[v + 1]):
            w = indices[p]
            if dist[w] < 0:
                dist[w] = dnext
                queue[tail] = w
                tail += 1


@njit(cache=True)
def bfs_distances(indptr, indices, L, src):
    """Exact hop distances from ``src`` to every node."""
    dist = np.full(L, -1, np.int32)
    queue = np.empty(L, np.int32)
    _bfs_fill(indptr, indices, src, dist, queue)
    return dist


@njit(cache=True, parallel=True)
def all_pairs_distance_stats(indptr, indices, L):
    """(sum of distances over ordered pairs, diameter) via one BFS per source."""
    total = np.int64(0)
    diameter = np.int64(0)
    for s in prange(L):
        dist = np.full(L, -1, np.int32)
        queue = np.empty(L, np.int32)
        _bfs_fill(indptr, indices, s, dist, queue)
        ssum = np.int64(0)
        smax = np.int64(0)
        for x in range(L):
            d = np.int64(dist[x])
            ssum += d
            smax = max(smax, d)
        total += ssum
        diameter = max(diameter, smax)
    return total, diameter


@njit(cache=True)
def _ring_dist_fill(L, t, dist):
    for x in range(L):
        d = x - t
        if d < 0:
            d = -d
        if L - d < d:
            d = L - d
        dist[x] = d


@njit(cache=True)
def _greedy_moves(indptr, indices, L, t, dist, nxt):
    """Greedy move for every node: neighbor closest to t, ties to smaller label."""
    for v in range(L):
        if v == t:
            nxt[v] = t
            continue
        best_d = np.int32(L)
        best_e = np.int32(-1)
        for p in range(indptr[v], indptr[v + 1]):
            e = indices[p]
            if dist[e] < best_d:
                best_d = dist[e]
                best_e = e
        nxt[v] = best_e


@njit(cache=True)
def _resolve_by_ring_distance(L, t, nxt, cost, hops):
    """Fill hop counts when every move strictly reduces ring distance to t."""
    hops[t] = 0
    total = np.int64(0)
    for d in range(1, L // 2 + 1):
        v = t + d
        if v >= L:
            v -= L
        hops[v] = hops[nxt[v]] + cost[v]
        total += hops[v]
        if 2 * d != L:
            v = t - d
            if v < 0:
                v += L
            hops[v] = hops[nxt[v]] + cost[v]
            total += hops[v]
    return total


@njit(cache=True)
def _greedy_target_hops(indptr, indices, L, t, dist, nxt, cost, hops):
    _ring_dist_fill(L, t, dist)
    _greedy_moves(indptr, indices, L, t, dist, nxt)
    for v in range(L):
        cost[v] = 1
    return _resolve_by_ring_distance(L, t, nxt, cost, hops)


@njit(cache=True, parallel=True)
def greedy_total(indptr, indices, L):
    """Sum of greedy navigation hops over all ordered (source, target) pairs."""
    grand = np.int64(0)
    for t in prange(L):
        dist = np.empty(L, np.int32)
        nxt = np.empty(L, np.int32)
        cost = np.empty(L, np.int32)
        hops = np.empty(L, np.int64)
        grand += _greedy_target_hops(indptr, indices, L, t, dist, nxt, cost, hops)
    return grand


@njit(cache=True)
def _two_level_target_hops(indptr, indices, L, t, commit, dist, gbd, gbe, nxt, cost, phi, hops, order):
    """Hop counts to target t for the two-level policy, all sources at once.

    Move rule per node v (t not adjacent): over candidate two-hop subpaths
    (w, e), w in N(v), e in N(w), pick minimal (ring distance of e to t,
    w, e).  ``commit`` walks both hops of the chosen subpath; otherwise the
    walk advances one hop to w and re-decides.
    """
    _ring_dist_fill(L, t, dist)
    # Best endpoint reachable from each node in one hop; candidates where the
    # endpoint equals the walker's own position are never competitive (a ring
    # step toward t is always strictly better), so the table can be shared.
    _greedy_moves(indptr, indices, L, t, dist, gbe)
    for w in range(L):
        gbd[w] = dist[gbe[w]]
    for v in range(L):
        if v == t:
            nxt[v] = t
            cost[v] = 0
            phi[v] = 0
            continue
        adjacent = False
        for p in range(indptr[v], indptr[v + 1]):
            if indices[p] == t:
                adjacent = True
                break
        if adjacent:
            nxt[v] = t
            cost[v] = 1
            phi[v] = 0
            continue
        best_w = np.int32(-1)
        best_d = np.int32(L)
        for p in range(indptr[v], indptr[v + 1]):
            w = indices[p]
            if gbd[w] < best_d:
                best_d = gbd[w]
                best_w = w
        if commit:
            nxt[v] = gbe[best_w]
            cost[v] = 2
        else:
            nxt[v] = best_w
            cost[v] = 1
        phi[v] = best_d
    if commit:
        # committed endpoints strictly reduce ring distance to t
        return _resolve_by_ring_distance(L, t, nxt, cost, hops)
    # One-hop moves may step away from t on the ring, but the best endpoint
    # distance phi drops by at least one per move until a t-adjacent node is
    # reached, so resolving in ascending phi order meets every dependency.
    counts = np.zeros(L // 2 + 2, np.int32)
    for v in range(L):
        counts[phi[v]] += 1
    offset = 0
    for b in range(len(counts)):
        c = counts[b]
        counts[b] = offset
        offset += c
    for v in range(L):
        order[counts[phi[v]]] = v
        counts[phi[v]] += 1
    # nodes adjacent to t resolve first: same-phi nodes may point at them
    hops[t] = 0
    for v in range(L):
        if v != t and nxt[v] == t:
            hops[v] = 1
    for idx in range(L):
        v = order[idx]
        if v == t or nxt[v] == t:
            continue
        hops[v] = hops[nxt[v]] + cost[v]
    total = np.int64(0)
    for v in range(L):
        if v != t:
            total += hops[v]
    return total


@njit(cache=True, parallel=True)
def two_level_total(indptr, indices, L, commit):
    """Sum of two-level navigation hops over all ordered pairs."""
    grand = np.int64(0)
    for t in prange(L):
        dist = np.empty(L, np.int32)
        gbd = np.empty(L, np.int32)
        gbe = np.empty(L, np.int32)
        nxt = np.empty(L, np.int32)
        cost = np.empty(L, np.int32)
        phi = np.empty(L, np.int32)
        hops = np.empty(L, np.int64)
        order = np.empty(L, np.int32)
        grand += _two_level_target_hops(
            indptr, indices, L, t, commit, dist, gbd, gbe, nxt, cost, phi, hops, order
        )
    return grand


@njit(cache=True)
def greedy_histogram(indptr, indices, L):
    """Histogram of greedy hop counts over all ordered pairs."""
    hist = np.zeros(L // 2 + 2, np.int64)
    dist = np.empty(L, np.int32)
    nxt = np.empty(L, np.int32)
    cost = np.empty(L, np.int32)
    hops = np.empty(L, np.int64)
    for t in range(L):
        _greedy_target_hops(indptr, indices, L, t, dist, nxt, cost, hops)
        for v in range(L):
            if v != t:
                hist[hops[v]] += 1
    return hist


@njit(cache=True)
def two_level_histogram(indptr, indices, L, commit):
    """Histogram of two-level hop counts over all ordered pairs."""
    hist = np.zeros(L + 4, np.int64)
    dist = np.empty(L, np.int32)
    gbd = np.empty(L, np.int32)
    gbe = np.empty(L, np.int32)
    nxt = np.empty(L, np.int32)
    cost = np.empty(L, np.int32)
    phi = np.empty(L, np.int32)
    hops = np.empty(L, np.int64)
    order = np.empty(L, np.int32)
    for t in range(L):
        _two_level_target_hops(
            indptr, indices, L, t, commit, dist, gbd, gbe, nxt, cost, phi, hops, order
        )
        for v in range(L):
            if v != t:
                hist[hops[v]] += 1
    return hist


@njit(cache=True)
def max_distance_pair(indptr, indices, L):
    """Pair at maximal graph distance; ties broken by minimal lattice
    distance, then by smallest (i, j)."""
    best_graph = np.int64(-1)
    best_lat = np.int64(0)
    best_i = np.int64(-1)
    best_j = np.int64(-1)
    dist = np.full(L, -1, np.int32)
    queue = np.empty(L, np.int32)
    for i in range(L):
        dist[:] = -1
        _bfs_fill(indptr, indices, i, dist, queue)
        for j in range(i + 1, L):
            g = np.int64(dist[j])
            d = j - i
            lat = min(d, L - d)
            if g > best_graph or (g == best_graph and lat < best_lat):
                best_graph = g
                best_lat = np.int64(lat)
                best_i = np.int64(i)
                best_j = np.int64(j)
    return best_i, best_j, best_graph
