"""Clustering and density measurements, exact where the claims need it.

Local clustering is the edge density of the open neighborhood: vertices of
degree <= 1 score 0 by convention. The global coefficient is the plain mean
over all vertices. Both are computed in exact rational arithmetic; the
triangle counting underneath is integer kernel work.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from . import kernels
from .errors import UsageError
from .graph import Graph
from .sequence import SequenceSpec


def neighborhood_edge_counts(g: Graph) -> List[int]:
    """Edges inside N(v) for every v (exact integers)."""
    doubled = kernels.neighbor_edge_counts(g.words, g.n)
    return [int(x) // 2 for x in doubled]


def local_clustering(g: Graph) -> List[Fraction]:
    counts = neighborhood_edge_counts(g)
    out = []
    for v in range(g.n):
        d = g.degree(v)
        if d <= 1:
            out.append(Fraction(0))
        else:
            out.append(Fraction(counts[v], d * (d - 1) // 2))
    return out


def clustering_coefficient(g: Graph) -> Fraction:
    vals = local_clustering(g)
    return sum(vals, Fraction(0)) / g.n


def clustering_float(g: Graph) -> float:
    return float(clustering_coefficient(g))


# -- bound curves -------------------------------------------------------------


def lt_step_clustering_factor(delta: Union[int, float]) -> Union[Fraction, float]:
    """One transitive step keeps C(G') >= (7/8 - 3/(8 delta)) C(G); delta = min degree."""
    if delta == math.inf:
        return Fraction(7, 8)
    if delta < 1:
        raise UsageError("the one-step factor needs minimum degree >= 1")
    return Fraction(7, 8) - Fraction(3, 8 * int(delta))


def bounded_gap_clustering_floor(k: int) -> Fraction:
    """Eventual floor (7/8)^k / 4^(k+2) for sequences with 1-runs shorter than k."""
    if k < 1:
        raise UsageError("gap bound k must be >= 1")
    return Fraction(7, 8) ** k / Fraction(4) ** (k + 2)


def anti_step_clustering_floor(k: int) -> Fraction:
    """Floor 1/2^(2k+4) right after an anti-transitive step."""
    if k < 1:
        raise UsageError("gap bound k must be >= 1")
    return Fraction(1, 2 ** (2 * k + 4))


def ilt_clustering_curve(t: int) -> float:
    """Transitive-only envelope shape (7/8)^t * t^(-3/7), up to constants."""
    if t < 1:
        raise UsageError("t must be >= 1")
    return (7 / 8) ** t * t ** (-3 / 7)


@dataclass(frozen=True)
class BoundCurves:
    lt_step_factor: Optional[Union[Fraction, float]]
    bounded_gap_floor: Optional[Fraction]
    anti_step_floor: Optional[Fraction]
    ilt_curve: Optional[float]

    def to_dict(self) -> dict:
        def enc(x):
            if x is None:
                return None
            if isinstance(x, Fraction):
                return f"{x.numerator}/{x.denominator}"
            return float(x)

        return {
            "lt_step_factor": enc(self.lt_step_factor),
            "bounded_gap_floor": enc(self.bounded_gap_floor),
            "anti_step_floor": enc(self.anti_step_floor),
            "ilt_curve": enc(self.ilt_curve),
        }


def clustering_bound_curves(
    k: Optional[int] = None,
    t: Optional[int] = None,
    delta: Optional[Union[int, float]] = None,
) -> BoundCurves:
    return BoundCurves(
        lt_step_factor=None if delta is None else lt_step_clustering_factor(delta),
        bounded_gap_floor=None if k is None else bounded_gap_clustering_floor(k),
        anti_step_floor=None if k is None else anti_step_clustering_floor(k),
        ilt_curve=None if t is None else ilt_clustering_curve(t),
    )


# -- density ------------------------------------------------------------------


@dataclass(frozen=True)
class DensityRow:
    t: int
    n: int
    e: int
    per_vertex: float  # e_t / n_t
    per_pair: float  # e_t / C(n_t, 2)
    beta: Optional[int]
    envelope: Optional[float]  # 2^beta (3/2)^(t-beta) n_t, up to constants

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "n": self.n,
            "e": self.e,
            "per_vertex": self.per_vertex,
            "per_pair": self.per_pair,
            "beta": self.beta,
            "envelope": self.envelope,
        }


@dataclass(frozen=True)
class DensitySeries:
    seed: str
    sequence: str
    rows: Tuple[DensityRow, ...]

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "sequence": self.sequence,
            "rows": [r.to_dict() for r in self.rows],
        }


def density_series(
    series: List[Graph], seq: SequenceSpec, seed_name: str = ""
) -> DensitySeries:
    rows = []
    for t, g in enumerate(series):
        n, e = g.n, g.edge_count
        beta = seq.beta(t - 1) if t >= 1 else None
        envelope = None
        if beta is not None:
            envelope = (2.0**beta) * (1.5 ** (t - beta)) * n
        rows.append(
            DensityRow(
                t=t,
                n=n,
                e=e,
                per_vertex=e / n,
                per_pair=(2 * e / (n * (n - 1))) if n > 1 else 0.0,
                beta=beta,
                envelope=envelope,
            )
        )
    return DensitySeries(seed=seed_name, sequence=seq.text, rows=tuple(rows))


def densification_violations(series: List[Graph], seq: SequenceSpec) -> List[int]:
    """Times t >= tau1 + 2 where e_t/n_t failed to exceed e_(t-2)/n_(t-2)."""
    tau1 = seq.tau(1)
    if tau1 is None:
        return []
    bad = []
    for t in range(max(2, tau1 + 2), len(series)):
        now = Fraction(series[t].edge_count, series[t].n)
        before = Fraction(series[t - 2].edge_count, series[t - 2].n)
        if not now > before:
            bad.append(t)
    return bad
