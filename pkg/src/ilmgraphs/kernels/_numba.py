"""Numba kernel implementations; semantics mirror _numpy.py exactly."""

import numpy as np
from numba import njit

U0 = np.uint64(0)
U1 = np.uint64(1)
M1 = np.uint64(0x5555555555555555)
M2 = np.uint64(0x3333333333333333)
M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
H01 = np.uint64(0x0101010101010101)
FULLW = np.uint64(0xFFFFFFFFFFFFFFFF)


@njit(cache=True, inline="always")
def _popcnt(x):
    x = x - ((x >> U1) & M1)
    x = (x & M2) + ((x >> np.uint64(2)) & M2)
    x = (x + (x >> np.uint64(4))) & M4
    return np.int64((x * H01) >> np.uint64(56))


@njit(cache=True, inline="always")
def _lowbit_index(w):
    low = w & (~w + U1)
    return _popcnt(low - U1)


@njit(cache=True, inline="always")
def _tail_mask(n):
    r = n % 64
    if r == 0:
        return FULLW
    return (U1 << np.uint64(r)) - U1


@njit(cache=True)
def degrees(adj, n):
    W = adj.shape[1]
    out = np.zeros(n, dtype=np.int64)
    for v in range(n):
        acc = np.int64(0)
        for k in range(W):
            acc += _popcnt(adj[v, k])
        out[v] = acc
    return out


@njit(cache=True)
def neighbor_edge_counts(adj, n):
    W = adj.shape[1]
    out = np.zeros(n, dtype=np.int64)
    for v in range(n):
        acc = np.int64(0)
        for k in range(W):
            w = adj[v, k]
            base = k * 64
            while w != U0:
                u = base + _lowbit_index(w)
                w &= w - U1
                for j in range(W):
                    acc += _popcnt(adj[u, j] & adj[v, j])
        out[v] = acc
    return out


@njit(cache=True)
def bfs_distances(adj, n, src):
    W = adj.shape[1]
    dist = np.full(n, -1, dtype=np.int32)
    dist[src] = 0
    visited = np.zeros(W, dtype=np.uint64)
    visited[src // 64] |= U1 << np.uint64(src % 64)
    frontier = visited.copy()
    nxt = np.zeros(W, dtype=np.uint64)
    d = np.int32(0)
    while True:
        for k in range(W):
            nxt[k] = U0
        for k in range(W):
            w = frontier[k]
            base = k * 64
            while w != U0:
                v = base + _lowbit_index(w)
                w &= w - U1
                for j in range(W):
                    nxt[j] |= adj[v, j]
        any_new = False
        for k in range(W):
            nxt[k] &= ~visited[k]
            if nxt[k] != U0:
                any_new = True
        if not any_new:
            break
        d += 1
        for k in range(W):
            w = nxt[k]
            base = k * 64
            visited[k] |= w
            while w != U0:
                v = base + _lowbit_index(w)
                w &= w - U1
                dist[v] = d
        frontier, nxt = nxt, frontier
    return dist


@njit(cache=True)
def eccentricities(adj, n):
    out = np.empty(n, dtype=np.int32)
    for v in range(n):
        dist = bfs_distances(adj, n, v)
        ecc = np.int32(0)
        infinite = False
        for i in range(n):
            if dist[i] < 0:
                infinite = True
                break
            if dist[i] > ecc:
                ecc = dist[i]
        out[v] = np.int32(-1) if infinite else ecc
    return out


@njit(cache=True)
def distance_matrix(adj, n):
    out = np.empty((n, n), dtype=np.int16)
    for v in range(n):
        dist = bfs_distances(adj, n, v)
        for i in range(n):
            out[v, i] = np.int16(dist[i])
    return out


@njit(cache=True)
def edges_between(adj, n, xmask, ymask):
    W = adj.shape[1]
    acc = np.int64(0)
    for k in range(W):
        w = xmask[k]
        base = k * 64
        while w != U0:
            v = base + _lowbit_index(w)
            w &= w - U1
            for j in range(W):
                acc += _popcnt(adj[v, j] & ymask[j])
    return acc


@njit(cache=True)
def dominating_pair(closed, n):
    W = closed.shape[1]
    out = np.empty(2, dtype=np.int64)
    tail = _tail_mask(n)
    for u in range(n):
        for v in range(u + 1, n):
            ok = True
            for k in range(W):
                merged = closed[u, k] | closed[v, k]
                want = tail if k == W - 1 else FULLW
                if merged != want:
                    ok = False
                    break
            if ok:
                out[0] = u
                out[1] = v
                return out
    out[0] = -1
    out[1] = -1
    return out


@njit(cache=True)
def partition_pair(closed, n):
    W = closed.shape[1]
    out = np.empty(2, dtype=np.int64)
    tail = _tail_mask(n)
    for u in range(n):
        for v in range(u + 1, n):
            ok = True
            for k in range(W):
                want = tail if k == W - 1 else FULLW
                if closed[v, k] != (want & ~closed[u, k]):
                    ok = False
                    break
            if ok:
                out[0] = u
                out[1] = v
                return out
    out[0] = -1
    out[1] = -1
    return out


@njit(cache=True)
def dominating_triple(closed, n):
    W = closed.shape[1]
    out = np.empty(3, dtype=np.int64)
    tail = _tail_mask(n)
    rem_a = np.empty(W, dtype=np.uint64)
    rem = np.empty(W, dtype=np.uint64)
    for a in range(n - 2):
        for k in range(W):
            want = tail if k == W - 1 else FULLW
            rem_a[k] = want & ~closed[a, k]
        for b in range(a + 1, n - 1):
            empty = True
            for k in range(W):
                rem[k] = rem_a[k] & ~closed[b, k]
                if rem[k] != U0:
                    empty = False
            if empty:
                out[0] = a
                out[1] = b
                out[2] = b + 1
                return out
            w0 = -1
            for k in range(W):
                if rem[k] != U0:
                    w0 = k * 64 + _lowbit_index(rem[k])
                    break
            for k in range(W):
                w = closed[w0, k]
                base = k * 64
                while w != U0:
                    c = base + _lowbit_index(w)
                    w &= w - U1
                    if c <= b:
                        continue
                    covers = True
                    for j in range(W):
                        if (rem[j] & ~closed[c, j]) != U0:
                            covers = False
                            break
                    if covers:
                        out[0] = a
                        out[1] = b
                        out[2] = c
                        return out
    out[0] = -1
    out[1] = -1
    out[2] = -1
    return out


@njit(cache=True, inline="always")
def _adj_bit(adj, u, v):
    return (adj[u, v // 64] >> np.uint64(v % 64)) & U1 != U0


@njit(cache=True)
def _lowest_unvisited_neighbor(adj, v, visited):
    W = adj.shape[1]
    for k in range(W):
        w = adj[v, k] & ~visited[k]
        if w != U0:
            return k * 64 + _lowbit_index(w)
    return np.int64(-1)


@njit(cache=True)
def _has_unvisited_neighbor(adj, v, visited):
    W = adj.shape[1]
    for k in range(W):
        if adj[v, k] & ~visited[k] != U0:
            return True
    return False


@njit(cache=True)
def _reverse_segment(path, lo, hi):
    # reverse path[lo:hi] in place
    i = lo
    j = hi - 1
    while i < j:
        tmp = path[i]
        path[i] = path[j]
        path[j] = tmp
        i += 1
        j -= 1


@njit(cache=True)
def greedy_cycle(adj, n, budget):
    if n < 3:
        return np.empty(0, dtype=np.int64)
    W = adj.shape[1]
    degs = degrees(adj, n)
    maxdeg = 0
    for v in range(1, n):
        if degs[v] > degs[maxdeg]:
            maxdeg = v
    starts = np.empty(3, dtype=np.int64)
    nstarts = 0
    for s in (0, maxdeg, n - 1):
        seen = False
        for i in range(nstarts):
            if starts[i] == s:
                seen = True
        if not seen:
            starts[nstarts] = s
            nstarts += 1
    path = np.empty(n, dtype=np.int64)
    visited = np.zeros(W, dtype=np.uint64)
    for si in range(nstarts):
        start = int(starts[si])
        path[0] = start
        plen = 1
        for k in range(W):
            visited[k] = U0
        visited[start // 64] |= U1 << np.uint64(start % 64)
        rot_counter = 0
        steps = 0
        while steps < budget:
            steps += 1
            end = int(path[plen - 1])
            if plen < n:
                ext = _lowest_unvisited_neighbor(adj, end, visited)
                if ext >= 0:
                    path[plen] = ext
                    visited[ext // 64] |= U1 << np.uint64(ext % 64)
                    plen += 1
                    continue
            else:
                if _adj_bit(adj, end, start):
                    return path.copy()
                closed_at = -1
                for i in range(1, n - 1):
                    if _adj_bit(adj, end, int(path[i])) and _adj_bit(
                        adj, int(path[i + 1]), start
                    ):
                        closed_at = i
                        break
                if closed_at >= 0:
                    _reverse_segment(path, closed_at + 1, n)
                    return path.copy()
            chosen = -1
            if plen < n:
                for i in range(plen - 2):
                    if _adj_bit(adj, end, int(path[i])) and _has_unvisited_neighbor(
                        adj, int(path[i + 1]), visited
                    ):
                        chosen = i
                        break
            if chosen < 0:
                n_eligible = 0
                for i in range(plen - 2):
                    if _adj_bit(adj, end, int(path[i])):
                        n_eligible += 1
                if n_eligible == 0:
                    break
                pick = rot_counter % n_eligible
                seen_e = 0
                for i in range(plen - 2):
                    if _adj_bit(adj, end, int(path[i])):
                        if seen_e == pick:
                            chosen = i
                            break
                        seen_e += 1
                rot_counter += 1
            _reverse_segment(path, chosen + 1, plen)
    return np.empty(0, dtype=np.int64)
