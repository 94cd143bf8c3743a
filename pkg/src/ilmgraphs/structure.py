"""Hamiltonicity with certificates, edge switches, star experiments, and
induced-subgraph search.

Every positive answer ships a cycle that is re-verified edge by edge, and
every certified negative ships a cut whose removal leaves more components
than cut vertices. Heuristics may return Unknown; they never lie.
"""

import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import kernels
from .errors import UsageError
from .graph import Graph, star_graph
from .model import generate_series
from .sequence import SequenceSpec, resolve_sequence

HAMILTONIAN = "hamiltonian"
NON_HAMILTONIAN = "non-hamiltonian"
UNKNOWN = "unknown"


# -- cycle and cut verification ------------------------------------------------


def verify_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """True iff cycle is a spanning cycle of g (every vertex once, edges real)."""
    n = g.n
    if len(cycle) != n or n < 3:
        return False
    if sorted(cycle) != list(range(n)):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n))


def components_after_removal(g: Graph, cut: Sequence[int]) -> int:
    keep = sorted(set(range(g.n)) - set(cut))
    if not keep:
        return 0
    sub = g.induced(keep)
    labels = np.full(sub.n, -1, dtype=np.int64)
    count = 0
    for v in range(sub.n):
        if labels[v] >= 0:
            continue
        dist = kernels.bfs_distances(sub.words, sub.n, v)
        labels[dist >= 0] = count
        count += 1
    return count


def verify_cut_certificate(g: Graph, cut: Sequence[int]) -> Tuple[bool, int]:
    """A cut disproves Hamiltonicity when removal leaves > |cut| components.

    The empty cut certifies only disconnected graphs (>= 2 components), not
    every connected graph with its single component.
    """
    ncomp = components_after_removal(g, cut)
    return ncomp > max(len(cut), 1), ncomp


@dataclass(frozen=True)
class HamiltonicityResult:
    status: str  # hamiltonian | non-hamiltonian | unknown
    method: str
    cycle: Optional[Tuple[int, ...]] = None
    cut: Optional[Tuple[int, ...]] = None
    components: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "method": self.method,
            "cycle": list(self.cycle) if self.cycle is not None else None,
            "cut": list(self.cut) if self.cut is not None else None,
            "components": self.components,
        }


def _hamiltonian_answer(g: Graph, cycle: Sequence[int], method: str) -> HamiltonicityResult:
    if not verify_cycle(g, cycle):
        raise AssertionError(f"method {method} produced an invalid cycle")
    return HamiltonicityResult(HAMILTONIAN, method, cycle=tuple(int(v) for v in cycle))


def _non_hamiltonian_answer(g: Graph, cut: Sequence[int], method: str) -> HamiltonicityResult:
    ok, ncomp = verify_cut_certificate(g, cut)
    if not ok:
        raise AssertionError(f"method {method} produced an invalid cut certificate")
    return HamiltonicityResult(
        NON_HAMILTONIAN, method, cut=tuple(int(v) for v in cut), components=ncomp
    )


# -- constructive cycle for minimum degree >= n/2 -------------------------------


def dirac_cycle(g: Graph) -> List[int]:
    """Spanning cycle for graphs with min degree >= n/2 (always exists there).

    Grows a maximal path, closes it through the pigeonhole rotation, and
    re-opens the cycle at an outside vertex until everything is covered.
    """
    n = g.n
    if n < 3:
        raise UsageError("cycles need at least 3 vertices")
    if 2 * int(g.degrees.min()) < n:
        raise UsageError("construction requires min degree >= n/2")
    masks = g.masks()
    in_path = [False] * n
    path = [0]
    in_path[0] = True

    def lowest_outside(v: int) -> int:
        m = masks[v]
        while m:
            low = m & -m
            u = low.bit_length() - 1
            if not in_path[u]:
                return u
            m ^= low
        return -1

    while True:
        # extend at the tail, then at the head
        extended = True
        while extended:
            extended = False
            u = lowest_outside(path[-1])
            if u >= 0:
                path.append(u)
                in_path[u] = True
                extended = True
                continue
            u = lowest_outside(path[0])
            if u >= 0:
                path.insert(0, u)
                in_path[u] = True
                extended = True
        # close the maximal path into a cycle
        head, tail = path[0], path[-1]
        if g.has_edge(head, tail):
            cycle = path
        else:
            cycle = None
            for i in range(len(path) - 1):
                # head ~ path[i+1] and tail ~ path[i] always meet by pigeonhole
                if g.has_edge(head, path[i + 1]) and g.has_edge(tail, path[i]):
                    cycle = path[: i + 1] + path[i + 1 :][::-1]
                    break
            if cycle is None:
                raise AssertionError("pigeonhole rotation failed; degree bound violated")
        if len(cycle) == n:
            return cycle
        # splice in an outside vertex adjacent to the cycle (connectivity holds)
        entry = None
        for j, v in enumerate(cycle):
            u = lowest_outside(v)
            if u >= 0:
                entry = (j, u)
                break
        if entry is None:
            raise AssertionError("cycle not extendable; degree bound violated")
        j, u = entry
        path = [u] + cycle[j:] + cycle[:j]
        in_path[u] = True


# -- heuristic and exact solvers ------------------------------------------------


def greedy_cycle(g: Graph, budget: int = 200_000) -> Optional[List[int]]:
    """Rotation-extension heuristic (compiled kernel); verified by the caller."""
    out = kernels.greedy_cycle(g.words, g.n, budget)
    if len(out) == 0:
        return None
    return [int(v) for v in out]


def _rotate(path: List[int], i: int) -> List[int]:
    return path[: i + 1] + path[i + 1 :][::-1]


def posa_cycle(g: Graph, budget: int = 50_000) -> Optional[List[int]]:
    """Rotation search with full endpoint closure; for modest n only."""
    n = g.n
    if n < 3:
        return None
    masks = g.masks()

    def neighbors_of(v: int) -> Iterable[int]:
        m = masks[v]
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    ticks = 0
    starts = []
    for s in (0, int(np.argmax(g.degrees))):
        if s not in starts:
            starts.append(s)
    for start in starts:
        path = [start]
        used = 1 << start
        while ticks < budget:
            ticks += 1
            if len(path) == n and g.has_edge(path[-1], path[0]):
                return path
            end = path[-1]
            grown = False
            for u in neighbors_of(end):
                if not used >> u & 1:
                    path.append(u)
                    used |= 1 << u
                    grown = True
                    break
            if grown:
                continue
            # breadth-first over rotation-reachable endpoints of the fixed
            # vertex set; realize the first one that closes or extends
            seen = {end}
            frontier = [path]
            target = None
            while frontier and target is None:
                nxt = []
                for p in frontier:
                    ticks += 1
                    idx = {v: i for i, v in enumerate(p)}
                    for u in neighbors_of(p[-1]):
                        i = idx.get(u)
                        if i is None or i + 2 >= len(p):
                            continue
                        q = _rotate(p, i)
                        ne = q[-1]
                        if ne in seen:
                            continue
                        seen.add(ne)
                        if len(q) == n and g.has_edge(ne, q[0]):
                            target = q
                            break
                        if any(not used >> w & 1 for w in neighbors_of(ne)):
                            target = q
                            break
                        nxt.append(q)
                    if target is not None:
                        break
                frontier = nxt if target is None else []
            if target is None:
                break
            path = target
        if len(path) == n and g.has_edge(path[-1], path[0]):
            return path
    return None


def hamiltonian_exact(g: Graph, node_budget: int = 5_000_000) -> Optional[HamiltonicityResult]:
    """Complete backtracking decision; None when the budget runs out."""
    n = g.n
    masks = g.masks()
    full = (1 << n) - 1
    path = [0]
    ticks = 0

    def dfs(v: int, used: int) -> Optional[bool]:
        nonlocal ticks
        ticks += 1
        if ticks > node_budget:
            return None
        if used == full:
            return bool(masks[v] >> 0 & 1)
        m = masks[v] & ~used
        # a vertex with no way in and out of the remaining path kills the branch;
        # the closing vertex only needs one way in plus the edge back to 0
        probe = full & ~used & ~masks[v]
        while probe:
            low = probe & -probe
            w = low.bit_length() - 1
            probe ^= low
            avail = (masks[w] & ~used).bit_count()
            if avail < 2 and not (avail == 1 and masks[w] & 1):
                return False
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            path.append(u)
            res = dfs(u, used | low)
            if res:
                return True
            path.pop()
            if res is None:
                return None
        return False

    res = dfs(0, 1)
    if res is None:
        return None
    if res:
        return _hamiltonian_answer(g, path, "exact")
    return HamiltonicityResult(NON_HAMILTONIAN, "exact-exhaustive")


def cut_certificate_search(g: Graph) -> Optional[Tuple[int, ...]]:
    """Cheap non-Hamiltonicity cuts: empty set, single vertices, degree-1
    neighbors, and lineage descendant classes."""
    if components_after_removal(g, []) >= 2:
        return ()
    deg = g.degrees
    one = np.nonzero(deg == 1)[0]
    for v in one[:8]:
        u = g.neighbors(int(v))[0]
        ok, _ = verify_cut_certificate(g, [u])
        if ok:
            return (int(u),)
    for v in range(g.n):
        ok, _ = verify_cut_certificate(g, [v])
        if ok:
            return (v,)
    for cls in g.descendant_classes():
        if 0 < len(cls) < g.n:
            ok, _ = verify_cut_certificate(g, cls)
            if ok:
                return tuple(cls)
    return None


def hamiltonian(
    g: Graph,
    greedy_budget: int = 200_000,
    posa_budget: int = 50_000,
    posa_cap: int = 256,
    exact_cap: int = 24,
    exact_budget: int = 5_000_000,
) -> HamiltonicityResult:
    """Solver cascade; every answer carries an independently checked witness."""
    if g.n < 3:
        raise UsageError("Hamiltonicity needs at least 3 vertices")
    deg = g.degrees
    if int(deg.min()) == 0 or components_after_removal(g, []) > 1:
        return _non_hamiltonian_answer(g, (), "disconnected")
    one = np.nonzero(deg == 1)[0]
    if len(one) > 0:
        u = g.neighbors(int(one[0]))[0]
        ok, _ = verify_cut_certificate(g, [u])
        if ok:
            return _non_hamiltonian_answer(g, (u,), "degree-one")
    if 2 * int(deg.min()) >= g.n:
        return _hamiltonian_answer(g, dirac_cycle(g), "dirac")
    cyc = greedy_cycle(g, greedy_budget)
    if cyc is not None and verify_cycle(g, cyc):
        return _hamiltonian_answer(g, cyc, "greedy")
    if g.n <= posa_cap:
        cyc = posa_cycle(g, posa_budget)
        if cyc is not None and verify_cycle(g, cyc):
            return _hamiltonian_answer(g, cyc, "posa")
    if g.n <= exact_cap:
        res = hamiltonian_exact(g, exact_budget)
        if res is not None:
            if res.status == NON_HAMILTONIAN:
                cut = cut_certificate_search(g)
                if cut is not None:
                    return _non_hamiltonian_answer(g, cut, "exact+cut")
            return res
    cut = cut_certificate_search(g)
    if cut is not None:
        return _non_hamiltonian_answer(g, cut, "cut")
    return HamiltonicityResult(UNKNOWN, "budget-exhausted")


# -- edge switches ---------------------------------------------------------------


@dataclass(frozen=True)
class EdgeSwitch:
    e: Tuple[int, int]  # consecutive pair on cycle 1
    f: Tuple[int, int]  # consecutive pair on cycle 2
    cross: Tuple[Tuple[int, int], Tuple[int, int]]

    def to_dict(self) -> dict:
        return {"e": list(self.e), "f": list(self.f), "cross": [list(c) for c in self.cross]}


def _is_cycle_in(g: Graph, cyc: Sequence[int]) -> bool:
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        return False
    return all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def _merge_on_switch(
    c1: Sequence[int], c2: Sequence[int], i: int, j: int, straight: bool
) -> List[int]:
    """Join cycles dropping c1[i]-c1[i+1] and c2[j]-c2[j+1].

    straight: cross edges (a,c),(b,d); else (a,d),(b,c), where a,b = c1[i..i+1]
    and c,d = c2[j..j+1].
    """
    n1, n2 = len(c1), len(c2)
    p1 = [c1[(i + 1 + k) % n1] for k in range(n1)]  # b ... a
    if straight:
        p2 = [c2[(j - k) % n2] for k in range(n2)]  # c ... d
    else:
        p2 = [c2[(j + 1 + k) % n2] for k in range(n2)]  # d ... c
    return p1 + p2


def find_edge_switch(
    g: Graph, c1: Sequence[int], c2: Sequence[int]
) -> Optional[Tuple[EdgeSwitch, List[int]]]:
    """First 4-cycle sharing one edge with each cycle, plus the merged cycle."""
    if not _is_cycle_in(g, c1) or not _is_cycle_in(g, c2):
        raise UsageError("inputs must be cycles in the graph")
    if set(c1) & set(c2):
        raise UsageError("cycles must be vertex-disjoint")
    n1, n2 = len(c1), len(c2)
    for i in range(n1):
        a, b = c1[i], c1[(i + 1) % n1]
        for j in range(n2):
            c, d = c2[j], c2[(j + 1) % n2]
            if g.has_edge(a, c) and g.has_edge(b, d):
                merged = _merge_on_switch(c1, c2, i, j, True)
                return EdgeSwitch((a, b), (c, d), ((a, c), (b, d))), merged
            if g.has_edge(a, d) and g.has_edge(b, c):
                merged = _merge_on_switch(c1, c2, i, j, False)
                return EdgeSwitch((a, b), (c, d), ((a, d), (b, c))), merged
    return None


# -- constructive cycles for iterate graphs --------------------------------------


def lift_cycle_transitive(cycle: Sequence[int], parent_n: int) -> List[int]:
    """Interleave each vertex with its clone: valid after a transitive step."""
    out: List[int] = []
    for v in cycle:
        out.append(v)
        out.append(v + parent_n)
    return out


def ilm_hamilton_applicable(seq: SequenceSpec, t: int) -> Optional[Tuple[int, int]]:
    """(tau1, beta) when the two-separated-zeros hypothesis covers time t."""
    tau1 = seq.tau(1)
    if tau1 is None or t < 1:
        return None
    beta = seq.beta(t - 1)
    if beta is None or beta < tau1 + 2:
        return None
    return tau1, beta


def ilm_hamiltonian_cycle(series: List[Graph], seq: SequenceSpec) -> List[int]:
    """Spanning cycle of the last graph in series, built the way the
    two-separated-zeros theorem builds it: complement cycle before the last
    anti-transitive step, clone extension, alternation with an edge switch,
    then transitive lifts.
    """
    t = len(series) - 1
    app = ilm_hamilton_applicable(seq, t)
    if app is None or series[0].n < 2:
        raise UsageError("hypothesis not met: need zeros at beta >= tau1 + 2 and n0 >= 2")
    _, beta = app

    # spanning cycle of the complement one step before the anti-transitive step
    base = series[beta - 1]
    comp = base.complement()
    cyc = dirac_cycle(comp)

    # extend through the fresh-vertex clique in the next complement
    mid = series[beta]
    comp_mid = mid.complement()
    N = base.n
    u, v = cyc[0], cyc[-1]
    clones = [N + x for x in range(N)]
    bit = seq.bit(beta - 1)
    if bit == 0:
        first, last = N + v, N + u
    else:
        first, last = N + u, N + v
    middle = [c for c in clones if c not in (first, last)]
    cyc2 = list(cyc) + [first] + middle + [last]
    if not _is_cycle_in(comp_mid, cyc2):
        raise AssertionError("complement extension failed")

    # rotate so four fresh vertices (independent in the graph) lead
    cyc2 = cyc2[N:] + cyc2[:N]

    # anti-transitive step: two alternating double-cover cycles plus a switch
    child = series[beta + 1]
    M = mid.n
    star = lambda x: M + x
    cyc_a = []
    cyc_b = []
    for i, x in enumerate(cyc2):
        if i % 2 == 0:
            cyc_a.append(x)
            cyc_b.append(star(x))
        else:
            cyc_a.append(star(x))
            cyc_b.append(x)
    v1, v2, v3, v4 = cyc2[0], cyc2[1], cyc2[2], cyc2[3]
    # drop v1-v2* from A and v3*-v4 from B; cross v1-v3* and v2*-v4
    if not (child.has_edge(v1, star(v3)) and child.has_edge(star(v2), v4)):
        raise AssertionError("switch edges missing; leading quad not independent")
    path_a = cyc_a[1:] + [cyc_a[0]]  # v2* ... v1
    jb = cyc_b.index(star(v3))
    path_b = [cyc_b[(jb - k) % M] for k in range(M)]  # v3* ... v4
    cycle = path_a + path_b
    if not _is_cycle_in(child, cycle):
        raise AssertionError("alternation merge failed")

    # transitive lifts up to t
    for step in range(beta + 1, t):
        cycle = lift_cycle_transitive(cycle, series[step].n)
        if not _is_cycle_in(series[step + 1], cycle):
            raise AssertionError("transitive lift failed")
    return cycle


# -- star experiments (Claims 1 and 2 machinery) ----------------------------------


def claim1_cycle(t: int) -> List[int]:
    """Spanning cycle of the t-th transitive iterate of a single vertex in
    which every vertex of the previous iterate sits next to its clone (t >= 2)."""
    if t < 2:
        raise UsageError("need t >= 2")
    cycle = [0, 2, 1, 3]
    for k in range(2, t):
        cycle = lift_cycle_transitive(cycle, 1 << k)
    return cycle


def claim2_matching(t: int) -> List[Tuple[int, int]]:
    """Perfect matching of the t-th transitive iterate of a single vertex
    matching even-rooted to odd-rooted vertices (t >= 1). For t >= 2 the
    edges at positions 2m, 2m+1 form switch pairs (x y', x' y)."""
    if t < 1:
        raise UsageError("need t >= 1")
    m: List[Tuple[int, int]] = [(0, 1)]
    for k in range(1, t):
        half = 1 << k
        nxt: List[Tuple[int, int]] = []
        for x, y in m:
            nxt.append((x, y + half))
            nxt.append((x + half, y))
        m = nxt
    return m


def _phi(n: int, i: int, ell: int) -> int:
    return n * ell + i


def _psi(n: int, j: int, block_id: int) -> int:
    if block_id % 2 == 0:
        return n * (block_id // 2)
    return n * (block_id // 2) + j


def star_hamiltonian_cycle(n: int, t: int) -> List[int]:
    """Spanning cycle of the t-th transitive iterate of the star on n
    vertices, assembled from per-block cycles joined by matched switches.
    Needs 2^(t-1) >= n-1 so each leaf gets its own switch pair."""
    if n < 3 or t < 2:
        raise UsageError("need n >= 3 and t >= 2")
    if (1 << (t - 1)) < n - 1:
        raise UsageError("need 2^(t-1) >= n-1")
    base = claim1_cycle(t)
    matching = claim2_matching(t + 1)
    cycle = [_phi(n, 0, ell) for ell in base]
    for j in range(1, n):
        block = [_phi(n, j, ell) for ell in base]
        xq, yq = matching[2 * (j - 1)]  # (x, y'): x even, y' odd
        xp, yp = matching[2 * (j - 1) + 1]  # (x', y)
        X = _psi(n, j, xq)
        Xc = _psi(n, j, xp)
        Y = _psi(n, j, yp)
        Yc = _psi(n, j, yq)
        cycle = _splice(cycle, block, X, Xc, Y, Yc)
    return cycle


def _splice(big: List[int], small: List[int], X: int, Xc: int, Y: int, Yc: int) -> List[int]:
    """Replace edge X-Xc of big and Y-Yc of small with X-Yc and Xc-Y."""
    bi = big.index(X)
    nb = len(big)
    if big[(bi + 1) % nb] == Xc:
        head = [big[(bi + 1 + k) % nb] for k in range(nb)]  # Xc ... X
    elif big[(bi - 1) % nb] == Xc:
        head = [big[(bi - 1 - k) % nb] for k in range(nb)]  # Xc ... X
    else:
        raise AssertionError("switch edge not on the assembled cycle")
    si = small.index(Y)
    ns = len(small)
    if small[(si + 1) % ns] == Yc:
        tail = [small[(si - k) % ns] for k in range(ns)]  # Y ... Yc
    elif small[(si - 1) % ns] == Yc:
        tail = [small[(si + k) % ns] for k in range(ns)]  # Y ... Yc
    else:
        raise AssertionError("switch edge not on the block cycle")
    # head ends at X, cross X-Yc happens by appending reversed tail
    return head + tail[::-1]


@dataclass(frozen=True)
class ZetaRow:
    t: int
    n_vertices: int
    status: str
    method: str
    cut_size: Optional[int]
    components: Optional[int]

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "n_vertices": self.n_vertices,
            "status": self.status,
            "method": self.method,
            "cut_size": self.cut_size,
            "components": self.components,
        }


def zeta_star_experiment(
    n: int,
    t_max: int,
    exact_cap: int = 24,
    greedy_budget: int = 400_000,
) -> List[ZetaRow]:
    """Status of the transitive iterates of the star on n vertices, t = 1..t_max.

    Small cuts certify the negatives below the 2^t >= n-1 threshold; verified
    cycles certify the positives (assembled, inherited from the previous t,
    found greedily, or exact at tiny sizes).
    """
    if n < 3:
        raise UsageError("star experiment needs n >= 3")
    g = star_graph(n)
    seq = resolve_sequence("ones")
    series, _ = generate_series(g, seq, t_max)
    rows: List[ZetaRow] = []
    prev_cycle: Optional[List[int]] = None
    for t in range(1, t_max + 1):
        gt = series[t]
        if (1 << t) < n - 1:
            cut = [v for v in range(gt.n) if v % n == 0]
            ok, ncomp = verify_cut_certificate(gt, cut)
            if not ok:
                raise AssertionError("descendant cut certificate failed")
            rows.append(ZetaRow(t, gt.n, NON_HAMILTONIAN, "descendant-cut", len(cut), ncomp))
            prev_cycle = None
            continue
        cycle: Optional[List[int]] = None
        method = ""
        if prev_cycle is not None:
            lifted = lift_cycle_transitive(prev_cycle, series[t - 1].n)
            if verify_cycle(gt, lifted):
                cycle, method = lifted, "lifted"
        if cycle is None and t >= 2 and (1 << (t - 1)) >= n - 1:
            built = star_hamiltonian_cycle(n, t)
            if verify_cycle(gt, built):
                cycle, method = built, "assembled"
        if cycle is None and gt.n <= exact_cap:
            res = hamiltonian_exact(gt)
            if res is not None and res.status == HAMILTONIAN:
                cycle, method = list(res.cycle), "exact"
            elif res is not None:
                rows.append(ZetaRow(t, gt.n, NON_HAMILTONIAN, "exact-exhaustive", None, None))
                prev_cycle = None
                continue
        if cycle is None:
            found = greedy_cycle(gt, greedy_budget)
            if found is not None and verify_cycle(gt, found):
                cycle, method = found, "greedy"
        if cycle is None:
            rows.append(ZetaRow(t, gt.n, UNKNOWN, "budget-exhausted", None, None))
            prev_cycle = None
            continue
        rows.append(ZetaRow(t, gt.n, HAMILTONIAN, method, None, None))
        prev_cycle = cycle
    return rows


def first_hamiltonian_t(rows: List[ZetaRow]) -> Optional[int]:
    for r in rows:
        if r.status == HAMILTONIAN:
            return r.t
    return None


def zeta_bracket(n: int) -> Tuple[int, int]:
    lo = math.ceil(math.log2(n - 1))
    return lo, lo + 1


# -- induced subgraphs -------------------------------------------------------------


def canonical_pattern(ell: int, edges: Iterable[Tuple[int, int]]) -> str:
    """Smallest adjacency bitstring over all vertex orderings."""
    import itertools

    adj = [[False] * ell for _ in range(ell)]
    for u, v in edges:
        adj[u][v] = adj[v][u] = True
    best = None
    for perm in itertools.permutations(range(ell)):
        s = "".join(
            "1" if adj[perm[i]][perm[j]] else "0" for i in range(ell) for j in range(i + 1, ell)
        )
        if best is None or s < best:
            best = s
    return best


def all_patterns(ell: int) -> List[Tuple[str, Tuple[Tuple[int, int], ...]]]:
    """One representative edge set per isomorphism class on ell vertices."""
    import itertools

    pairs = list(itertools.combinations(range(ell), 2))
    seen: Dict[str, Tuple[Tuple[int, int], ...]] = {}
    for bits in range(1 << len(pairs)):
        edges = tuple(pairs[i] for i in range(len(pairs)) if bits >> i & 1)
        key = canonical_pattern(ell, edges)
        if key not in seen:
            seen[key] = edges
    return sorted(seen.items())


def induced_subgraph_search(
    g: Graph, ell: int, edges: Iterable[Tuple[int, int]]
) -> Optional[List[int]]:
    """First embedding of the pattern as an induced subgraph, or None."""
    if ell > 8:
        raise UsageError("patterns capped at 8 vertices")
    adj = [[False] * ell for _ in range(ell)]
    for u, v in edges:
        adj[u][v] = adj[v][u] = True
    n = g.n
    masks = g.masks()
    fullmask = (1 << n) - 1
    image = [-1] * ell

    def dfs(q: int, used: int) -> bool:
        if q == ell:
            return True
        cands = fullmask & ~used
        for p in range(q):
            if adj[p][q]:
                cands &= masks[image[p]]
            else:
                cands &= ~masks[image[p]]
        while cands:
            low = cands & -cands
            w = low.bit_length() - 1
            cands ^= low
            image[q] = w
            if dfs(q + 1, used | low):
                return True
        image[q] = -1
        return False

    if dfs(0, 0):
        emb = list(image)
        sub = g.induced(emb)
        for i in range(ell):
            for j in range(i + 1, ell):
                if sub.has_edge(i, j) != adj[i][j]:
                    raise AssertionError("embedding verification failed")
        return emb
    return None


def induced_universality_check(
    g: Graph, ell: int
) -> Tuple[int, int, List[Tuple[str, Optional[List[int]]]]]:
    """Search every isomorphism class on ell vertices; (found, total, detail)."""
    results: List[Tuple[str, Optional[List[int]]]] = []
    found = 0
    pats = all_patterns(ell)
    for key, edges in pats:
        emb = induced_subgraph_search(g, ell, edges)
        if emb is not None:
            found += 1
        results.append((key, emb))
    return found, len(pats), results
