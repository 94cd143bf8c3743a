"""Classical graph parameters: distances, coloring, domination.

Exact solvers run on Python-int bitmasks (fine at the sizes where exactness
is promised); bulk distance and domination scans go through the packed
kernels. Infinite values are reported as math.inf in results and as -1 in
raw kernel arrays.
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from . import kernels
from .errors import CapacityError, UsageError
from .graph import Graph
from .sequence import SequenceSpec

INF = math.inf


def distances(g: Graph, v: int) -> np.ndarray:
    """BFS distances from v; -1 marks unreachable vertices."""
    if not 0 <= v < g.n:
        raise UsageError(f"vertex {v} out of range")
    return kernels.bfs_distances(g.words, g.n, v)


def distance_matrix(g: Graph) -> np.ndarray:
    return kernels.distance_matrix(g.words, g.n)


def component_labels(g: Graph) -> Tuple[np.ndarray, int]:
    labels = np.full(g.n, -1, dtype=np.int64)
    count = 0
    for v in range(g.n):
        if labels[v] >= 0:
            continue
        dist = kernels.bfs_distances(g.words, g.n, v)
        labels[dist >= 0] = count
        count += 1
    return labels, count


def component_count(g: Graph) -> int:
    return component_labels(g)[1]


def is_connected(g: Graph) -> bool:
    return component_count(g) == 1


@dataclass(frozen=True)
class DiameterRadius:
    diameter: Union[int, float]
    radius: Union[int, float]
    component_count: int
    per_component_radii: Tuple[Union[int, float], ...]

    def to_dict(self) -> dict:
        enc = lambda x: "inf" if x == INF else x
        return {
            "diameter": enc(self.diameter),
            "radius": enc(self.radius),
            "component_count": self.component_count,
            "per_component_radii": [enc(r) for r in self.per_component_radii],
        }


def diameter_radius(g: Graph) -> DiameterRadius:
    """Diameter/radius as max/min eccentricity; infinite when disconnected."""
    ecc = kernels.eccentricities(g.words, g.n)
    labels, ncomp = component_labels(g)
    if ncomp == 1:
        return DiameterRadius(
            diameter=int(ecc.max()),
            radius=int(ecc.min()),
            component_count=1,
            per_component_radii=(int(ecc.min()),),
        )
    radii = []
    for c in range(ncomp):
        ids = np.nonzero(labels == c)[0]
        sub = g.induced([int(i) for i in ids])
        sub_ecc = kernels.eccentricities(sub.words, sub.n)
        radii.append(int(sub_ecc.min()))
    return DiameterRadius(
        diameter=INF,
        radius=INF,
        component_count=ncomp,
        per_component_radii=tuple(radii),
    )


# -- coloring -----------------------------------------------------------------


@dataclass(frozen=True)
class ChromaticResult:
    lower: int
    upper: int
    exact: bool
    nodes: int
    coloring: Optional[Tuple[int, ...]]

    @property
    def value(self) -> int:
        if not self.exact:
            raise UsageError("chromatic number was not resolved exactly")
        return self.upper

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "nodes": self.nodes,
        }


def _greedy_clique(masks: List[int], order: Sequence[int]) -> List[int]:
    clique: List[int] = []
    common = -1  # all-ones
    for v in order:
        if common & (1 << v) or not clique:
            if all(masks[v] >> u & 1 for u in clique):
                clique.append(v)
                common &= masks[v]
    return clique


def _dsatur_greedy(masks: List[int], n: int) -> Tuple[int, List[int]]:
    color = [-1] * n
    neighbor_colors: List[set] = [set() for _ in range(n)]
    degs = [masks[v].bit_count() for v in range(n)]
    for _ in range(n):
        best, best_key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            key = (len(neighbor_colors[v]), degs[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        used = neighbor_colors[best]
        c = 0
        while c in used:
            c += 1
        color[best] = c
        m = masks[best]
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            if color[u] < 0:
                neighbor_colors[u].add(c)
    return max(color) + 1, color


class _Budget:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: int):
        self.nodes = 0
        self.limit = limit

    def tick(self) -> bool:
        self.nodes += 1
        return self.nodes <= self.limit


def _color_decision(
    masks: List[int], n: int, k: int, budget: _Budget
) -> Union[None, bool, List[int]]:
    """k-colorability: a coloring on success, False on failure, None on budget."""
    color = [-1] * n
    class_masks = [0] * k

    def feasible_colors(v: int) -> List[int]:
        out = []
        row = masks[v]
        max_used = -1
        for c in range(k):
            if class_masks[c]:
                max_used = c
                if not (class_masks[c] & row):
                    out.append(c)
        # allow exactly one fresh color class to break symmetry
        if max_used + 1 < k:
            out.append(max_used + 1)
        return out

    def pick_vertex() -> int:
        best, best_key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = 0
            for c in range(k):
                if class_masks[c] & masks[v]:
                    sat += 1
            key = (sat, masks[v].bit_count())
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def dfs(assigned: int) -> Union[None, bool, List[int]]:
        if not budget.tick():
            return None
        if assigned == n:
            return list(color)
        v = pick_vertex()
        for c in feasible_colors(v):
            color[v] = c
            class_masks[c] |= 1 << v
            res = dfs(assigned + 1)
            if res:
                return res
            if res is None:
                return None
            class_masks[c] &= ~(1 << v)
            color[v] = -1
        return False

    return dfs(0)


def chromatic_number(
    g: Graph,
    node_budget: int = 10_000_000,
    theorem_bounds: Optional[Tuple[int, int]] = None,
) -> ChromaticResult:
    """Exact chromatic number when the search fits the budget, else bounds.

    theorem_bounds, when given, tighten the reported bracket on budget
    exhaustion (they are trusted, not derived here).
    """
    n = g.n
    masks = g.masks()
    if g.edge_count == 0:
        return ChromaticResult(1, 1, True, 0, tuple([0] * n))
    orders = [sorted(range(n), key=lambda v: -masks[v].bit_count()), list(range(n))]
    clique_lb = max(len(_greedy_clique(masks, o)) for o in orders)
    ub, greedy = _dsatur_greedy(masks, n)
    lb = max(2, clique_lb)
    budget = _Budget(node_budget)
    best_coloring = greedy
    while lb < ub:
        res = _color_decision(masks, n, ub - 1, budget)
        if res is None:
            lo, hi = lb, ub
            if theorem_bounds is not None:
                lo = max(lo, theorem_bounds[0])
                hi = min(hi, theorem_bounds[1])
            return ChromaticResult(lo, hi, False, budget.nodes, None)
        if res is False:
            lb = ub
            break
        best_coloring = res
        ub -= 1
    return ChromaticResult(ub, ub, True, budget.nodes, tuple(best_coloring))


def verify_coloring(g: Graph, coloring: Sequence[int]) -> bool:
    if len(coloring) != g.n:
        return False
    return all(coloring[u] != coloring[v] for u, v in g.edges())


# -- domination ---------------------------------------------------------------


@dataclass(frozen=True)
class DominationResult:
    gamma: int
    witness: Tuple[int, ...]
    method: str

    def to_dict(self) -> dict:
        return {"gamma": self.gamma, "witness": list(self.witness), "method": self.method}


def dominating_vertex(g: Graph) -> Optional[int]:
    """Smallest vertex adjacent to everything else, if any."""
    full = (1 << g.n) - 1
    for v in range(g.n):
        if g.row_int(v) | (1 << v) == full:
            return v
    return None


def _closed_masks(g: Graph) -> List[int]:
    return [g.row_int(v) | (1 << v) for v in range(g.n)]


def _exact_domination_search(closed: List[int], n: int, k: int) -> Optional[Tuple[int, ...]]:
    """Lexicographically smallest dominating set of size exactly <= k slots left."""
    full = (1 << n) - 1
    max_cover = max(c.bit_count() for c in closed)

    def dfs(chosen: List[int], covered: int, last: int, slots: int) -> Optional[Tuple[int, ...]]:
        if covered == full:
            return tuple(chosen)
        if slots == 0:
            return None
        uncovered = full & ~covered
        if slots * max_cover < uncovered.bit_count():
            return None
        w = (uncovered & -uncovered).bit_length() - 1
        # any completion must cover w; candidates ordered ascending keeps lex order
        cand = closed[w]
        while cand:
            low = cand & -cand
            c = low.bit_length() - 1
            cand ^= low
            if c <= last:
                continue
            res = dfs(chosen + [c], covered | closed[c], c, slots - 1)
            if res is not None:
                return res
        return None

    return dfs([], 0, -1, k)


def domination_number(g: Graph, fast_k: int = 3, hard_cap: int = 12) -> DominationResult:
    """Exact domination number with lexicographically smallest witness."""
    n = g.n
    closed_rows = g.closed_rows()
    if fast_k >= 1:
        v = dominating_vertex(g)
        if v is not None:
            return DominationResult(1, (v,), "scan-k1")
    if fast_k >= 2:
        pair = kernels.dominating_pair(closed_rows, n)
        if pair[0] >= 0:
            return DominationResult(2, (int(pair[0]), int(pair[1])), "scan-k2")
    if fast_k >= 3 and n >= 3:
        tri = kernels.dominating_triple(closed_rows, n)
        if tri[0] >= 0:
            return DominationResult(3, (int(tri[0]), int(tri[1]), int(tri[2])), "scan-k3")
    cm = _closed_masks(g)
    for k in range(fast_k + 1, hard_cap + 1):
        res = _exact_domination_search(cm, n, k)
        if res is not None:
            return DominationResult(len(res), res, "search")
    raise CapacityError(f"domination number exceeds hard cap {hard_cap}")


def find_partition_pair(g: Graph) -> Optional[Tuple[int, int]]:
    """First (u, v) whose closed neighborhoods partition V, if any."""
    pair = kernels.partition_pair(g.closed_rows(), g.n)
    if pair[0] < 0:
        return None
    return (int(pair[0]), int(pair[1]))


def is_two_clique_union(g: Graph) -> bool:
    """Is g the disjoint union of exactly two complete graphs?"""
    labels, ncomp = component_labels(g)
    if ncomp != 2:
        return False
    for c in range(2):
        ids = np.nonzero(labels == c)[0]
        k = len(ids)
        sub = g.induced([int(i) for i in ids])
        if sub.edge_count != k * (k - 1) // 2:
            return False
    return True


def lat_disconnection_predicate(g: Graph) -> bool:
    """The anti-transitive step disconnects g iff this holds."""
    return dominating_vertex(g) is not None or is_two_clique_union(g)


@dataclass(frozen=True)
class Dom2Classification:
    predicted_gamma: int
    condition: Optional[int]  # 1, 2, 3 or None
    strict: bool  # False at the t = tau1 + 1 corner under condition 3

    def to_dict(self) -> dict:
        return {
            "predicted_gamma": self.predicted_gamma,
            "condition": self.condition,
            "strict": self.strict,
        }


def classify_domination_2(g0: Graph, seq: SequenceSpec, t: int) -> Dom2Classification:
    """Predict whether the t-th iterate has domination number exactly 2.

    Valid for t >= tau1 + 1 (first zero applied). Condition (3) carries its
    own t >= tau1 + 2 clause; at t = tau1 + 1 with a dominating vertex and
    s_(tau1+1) = 0 the prediction is flagged non-strict (recorded, not
    asserted, by the harness).
    """
    tau1 = seq.tau(1)
    if tau1 is None or t < tau1 + 1:
        raise UsageError("classification needs t >= tau1 + 1")
    has_pp = find_partition_pair(g0) is not None
    if has_pp:
        return Dom2Classification(2, 1, True)
    isolated = bool((g0.degrees == 0).any())
    if isolated and tau1 == 0:
        return Dom2Classification(2, 2, True)
    dv = dominating_vertex(g0) is not None
    zeros_ok = seq.defined_through(tau1 + 2) and seq.bit(tau1) == 0 and seq.bit(tau1 + 1) == 0
    if dv and zeros_ok:
        if t >= tau1 + 2:
            return Dom2Classification(2, 3, True)
        return Dom2Classification(3, 3, False)
    # No condition holds, so gamma != 2.  The value 3 is only certain once a
    # second anti-transitive step has been applied; before that the number can
    # exceed 3 and the prediction stays non-strict.
    tau2 = seq.tau(2)
    strict = tau2 is not None and t >= tau2 + 1
    return Dom2Classification(3, None, strict)


# -- aggregate report ---------------------------------------------------------


@dataclass(frozen=True)
class ParameterReport:
    n: int
    e: int
    diameter: Union[int, float]
    radius: Union[int, float]
    component_count: int
    chromatic: ChromaticResult
    domination: DominationResult
    partition_pair: Optional[Tuple[int, int]]
    dominating_vertex: Optional[int]

    def to_dict(self) -> dict:
        enc = lambda x: "inf" if x == INF else x
        return {
            "n": self.n,
            "e": self.e,
            "diameter": enc(self.diameter),
            "radius": enc(self.radius),
            "component_count": self.component_count,
            "chromatic": self.chromatic.to_dict(),
            "domination": self.domination.to_dict(),
            "partition_pair": list(self.partition_pair) if self.partition_pair else None,
            "dominating_vertex": self.dominating_vertex,
        }


def parameter_report(g: Graph, chromatic_budget: int = 2_000_000) -> ParameterReport:
    dr = diameter_radius(g)
    return ParameterReport(
        n=g.n,
        e=g.edge_count,
        diameter=dr.diameter,
        radius=dr.radius,
        component_count=dr.component_count,
        chromatic=chromatic_number(g, node_budget=chromatic_budget),
        domination=domination_number(g),
        partition_pair=find_partition_pair(g),
        dominating_vertex=dominating_vertex(g),
    )
