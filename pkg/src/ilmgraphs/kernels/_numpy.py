"""Pure-numpy kernel implementations.

Reference backend: every function here has a numba twin in _numba.py with
identical semantics, and the test suite asserts the two agree bit-for-bit.
Inputs are packed uint64 adjacency rows (see bitset.py for the layout).
"""

from typing import List

import numpy as np

from .. import bitset

_U1 = np.uint64(1)


def _row_ids(words: np.ndarray, n: int) -> np.ndarray:
    bits8 = np.unpackbits(words.view(np.uint8), bitorder="little")[:n]
    return np.nonzero(bits8)[0]


def degrees(adj: np.ndarray, n: int) -> np.ndarray:
    return np.bitwise_count(adj).sum(axis=1).astype(np.int64)


def neighbor_edge_counts(adj: np.ndarray, n: int) -> np.ndarray:
    """For each v: sum over u in N(v) of |N(u) & N(v)|.

    Each edge inside N(v) contributes twice, so callers halve this to get
    the edge count of the open neighborhood.
    """
    out = np.zeros(n, dtype=np.int64)
    for v in range(n):
        ids = _row_ids(adj[v], n)
        if ids.size >= 2:
            out[v] = int(np.bitwise_count(adj[ids] & adj[v]).sum())
    return out


def bfs_distances(adj: np.ndarray, n: int, src: int) -> np.ndarray:
    dist = np.full(n, -1, dtype=np.int32)
    dist[src] = 0
    W = adj.shape[1]
    visited = np.zeros(W, dtype=np.uint64)
    visited[src // 64] |= _U1 << np.uint64(src % 64)
    frontier = visited.copy()
    d = 0
    while True:
        ids = _row_ids(frontier, n)
        if ids.size == 0:
            break
        nxt = np.bitwise_or.reduce(adj[ids], axis=0)
        nxt &= ~visited
        if not nxt.any():
            break
        d += 1
        visited |= nxt
        dist[_row_ids(nxt, n)] = d
        frontier = nxt
    return dist


def eccentricities(adj: np.ndarray, n: int) -> np.ndarray:
    """Eccentricity per vertex; -1 where some vertex is unreachable."""
    out = np.empty(n, dtype=np.int32)
    for v in range(n):
        dist = bfs_distances(adj, n, v)
        out[v] = -1 if (dist < 0).any() else int(dist.max())
    return out


def distance_matrix(adj: np.ndarray, n: int) -> np.ndarray:
    out = np.empty((n, n), dtype=np.int16)
    for v in range(n):
        out[v] = bfs_distances(adj, n, v).astype(np.int16)
    return out


def edges_between(adj: np.ndarray, n: int, xmask: np.ndarray, ymask: np.ndarray) -> int:
    """Sum over v in X of |N(v) & Y| (edges inside X&Y count twice)."""
    ids = _row_ids(xmask, n)
    if ids.size == 0:
        return 0
    return int(np.bitwise_count(adj[ids] & ymask).sum())


def dominating_pair(closed: np.ndarray, n: int) -> np.ndarray:
    """Lexicographically first pair (u < v) with N[u] | N[v] = V, else (-1,-1)."""
    fullmask = bitset.full(n)
    for u in range(n):
        ok = ((closed | closed[u]) == fullmask).all(axis=1)
        ok[: u + 1] = False
        hits = np.nonzero(ok)[0]
        if hits.size:
            return np.array([u, int(hits[0])], dtype=np.int64)
    return np.array([-1, -1], dtype=np.int64)


def partition_pair(closed: np.ndarray, n: int) -> np.ndarray:
    """First pair (u < v) with N[u], N[v] disjoint and covering V, else (-1,-1)."""
    fullmask = bitset.full(n)
    for u in range(n):
        target = fullmask & ~closed[u]
        ok = (closed == target).all(axis=1)
        ok[: u + 1] = False
        hits = np.nonzero(ok)[0]
        if hits.size:
            return np.array([u, int(hits[0])], dtype=np.int64)
    return np.array([-1, -1], dtype=np.int64)


def dominating_triple(closed: np.ndarray, n: int) -> np.ndarray:
    """Lexicographically first triple (a < b < c) dominating V, else (-1,-1,-1)."""
    fullmask = bitset.full(n)
    for a in range(n - 2):
        rem_a = fullmask & ~closed[a]
        for b in range(a + 1, n - 1):
            rem = rem_a & ~closed[b]
            if not rem.any():
                # (a, b) already dominate; smallest completion is b + 1
                return np.array([a, b, b + 1], dtype=np.int64)
            w = bitset.to_indices(rem)[0]
            cand = closed[w]
            # c must cover w, hence lie in N[w]; scan ids > b in ascending order
            for c in bitset.iter_bits(cand):
                if c <= b:
                    continue
                if not (rem & ~closed[c]).any():
                    return np.array([a, b, c], dtype=np.int64)
    return np.array([-1, -1, -1], dtype=np.int64)


def _lowest_unvisited_neighbor(adj: np.ndarray, v: int, visited: np.ndarray) -> int:
    avail = adj[v] & ~visited
    for k in range(len(avail)):
        w = int(avail[k])
        if w:
            return k * 64 + ((w & -w).bit_length() - 1)
    return -1


def _has_unvisited_neighbor(adj: np.ndarray, v: int, visited: np.ndarray) -> bool:
    return bool((adj[v] & ~visited).any())


def _adj_bit(adj: np.ndarray, u: int, v: int) -> bool:
    return bool((adj[u, v // 64] >> np.uint64(v % 64)) & _U1)


def greedy_cycle(adj: np.ndarray, n: int, budget: int) -> np.ndarray:
    """Rotation-extension heuristic; returns a vertex order of length n or empty.

    Deterministic: lowest-id extension, first useful rotation, rolling
    escape counter. Finding nothing proves nothing.
    """
    if n < 3:
        return np.empty(0, dtype=np.int64)
    degs = degrees(adj, n)
    starts = []
    for s in (0, int(np.argmax(degs)), n - 1):
        if s not in starts:
            starts.append(s)
    for start in starts:
        path = np.empty(n, dtype=np.int64)
        path[0] = start
        plen = 1
        visited = bitset.zeros(n)
        visited[start // 64] |= _U1 << np.uint64(start % 64)
        rot_counter = 0
        steps = 0
        while steps < budget:
            steps += 1
            end = int(path[plen - 1])
            if plen < n:
                ext = _lowest_unvisited_neighbor(adj, end, visited)
                if ext >= 0:
                    path[plen] = ext
                    visited[ext // 64] |= _U1 << np.uint64(ext % 64)
                    plen += 1
                    continue
            else:
                if _adj_bit(adj, end, start):
                    return path.copy()
                closed_at = -1
                for i in range(1, n - 1):
                    if _adj_bit(adj, end, int(path[i])) and _adj_bit(adj, int(path[i + 1]), start):
                        closed_at = i
                        break
                if closed_at >= 0:
                    path[closed_at + 1 :] = path[closed_at + 1 :][::-1]
                    return path.copy()
            # rotation: prefer one whose new endpoint can extend (only useful below n)
            chosen = -1
            if plen < n:
                for i in range(plen - 2):
                    if _adj_bit(adj, end, int(path[i])) and _has_unvisited_neighbor(
                        adj, int(path[i + 1]), visited
                    ):
                        chosen = i
                        break
            if chosen < 0:
                eligible = [
                    i for i in range(plen - 2) if _adj_bit(adj, end, int(path[i]))
                ]
                if not eligible:
                    break
                chosen = eligible[rot_counter % len(eligible)]
                rot_counter += 1
            path[chosen + 1 : plen] = path[chosen + 1 : plen][::-1]
    return np.empty(0, dtype=np.int64)
