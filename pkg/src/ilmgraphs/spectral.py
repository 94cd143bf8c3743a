"""Normalized Laplacian spectrum, spectral gap, and expansion audits.

The gap here is the distance of the extreme nontrivial eigenvalues from 1,
lambda = max(|lambda_1 - 1|, |lambda_{n-1} - 1|): large values mean bad
expansion, which is the regime these iterated graphs live in. Eigenvalues
come from a dense symmetric solve, so graphs above the configured cap are
rejected rather than silently approximated.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from . import kernels
from .bitset import popcount, unpack_to_bool
from .errors import CapacityError, UsageError
from .graph import Graph, VertexSet

DEFAULT_SPECTRAL_CAP = 4096
EIG_TOL = 1e-9


def normalized_laplacian(g: Graph) -> np.ndarray:
    """I - D^{-1/2} A D^{-1/2}, with all-zero rows for isolated vertices."""
    a = g.to_dense_bool().astype(np.float64)
    deg = g.degrees.astype(np.float64)
    inv_sqrt = np.zeros_like(deg)
    nz = deg > 0
    inv_sqrt[nz] = 1.0 / np.sqrt(deg[nz])
    lap = -a * inv_sqrt[:, None] * inv_sqrt[None, :]
    np.fill_diagonal(lap, np.where(nz, 1.0, 0.0))
    return lap


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: Tuple[float, ...]
    gap: float
    isolated_count: int
    residual: float
    degenerate: bool  # single vertex: lambda_1 does not exist

    def to_dict(self) -> dict:
        return {
            "n": len(self.eigenvalues),
            "gap": self.gap,
            "isolated_count": self.isolated_count,
            "residual": self.residual,
            "degenerate": self.degenerate,
            "lambda_1": self.eigenvalues[1] if len(self.eigenvalues) > 1 else None,
            "lambda_max": self.eigenvalues[-1],
        }


def spectrum(g: Graph, cap: int = DEFAULT_SPECTRAL_CAP) -> Spectrum:
    """Full spectrum with eigenpair residual; gap per the spread definition."""
    if g.n > cap:
        raise CapacityError(f"dense eigensolve needs n <= {cap}, got {g.n}")
    isolated = int((g.degrees == 0).sum())
    if g.n == 1:
        return Spectrum((0.0,), 1.0, isolated, 0.0, True)
    lap = normalized_laplacian(g)
    vals, vecs = np.linalg.eigh(lap)
    residual = float(np.abs(lap @ vecs - vecs * vals[None, :]).max())
    gap = max(abs(float(vals[1]) - 1.0), abs(float(vals[-1]) - 1.0))
    sp = Spectrum(tuple(float(v) for v in vals), gap, isolated, residual, False)
    _check_spectrum(sp, g.n)
    return sp


def _check_spectrum(sp: Spectrum, n: int, tol: float = 1e-7) -> None:
    vals = sp.eigenvalues
    if vals[0] < -tol or vals[-1] > 2.0 + tol:
        raise AssertionError(f"eigenvalues escape [0, 2]: {vals[0]}, {vals[-1]}")
    if abs(vals[0]) > tol:
        raise AssertionError(f"lambda_0 = {vals[0]} should be 0")
    trace = n - sp.isolated_count
    if abs(sum(vals) - trace) > tol * max(1, n):
        raise AssertionError(f"eigenvalue sum {sum(vals)} != trace {trace}")
    if not -tol <= sp.gap <= 1.0 + tol:
        raise AssertionError(f"gap {sp.gap} outside [0, 1]")


def spectral_gap(g: Graph, cap: int = DEFAULT_SPECTRAL_CAP) -> float:
    return spectrum(g, cap).gap


def step_gap_lower_bound(pre_n: int, pre_e: int, bit: int) -> float:
    """Lower bound on the child gap from the parent's (n, e): vol(X)/vol(X-bar)
    for X the fresh clone set, which is independent in both step kinds."""
    if pre_n < 1:
        raise UsageError("need at least one vertex")
    if bit == 1:
        return float(Fraction(2 * pre_e + pre_n, 4 * pre_e + pre_n))
    den = pre_n * pre_n - pre_n
    if den == 0:
        return 0.0
    return float(Fraction(pre_n * pre_n - 2 * pre_e - pre_n, den))


def mixing_audit(
    g: Graph,
    x: VertexSet,
    lam: Optional[float] = None,
    tol: float = 1e-6,
) -> Tuple[float, float, bool]:
    """One-subset expander mixing check:
    |e(X,X) - vol(X)^2/vol(G)| <= lambda vol(X) vol(X-bar) / vol(G).

    e(X,X) counts ordered endpoint pairs (edges inside X twice). Returns
    (lhs, rhs, holds). lam defaults to the graph's own gap.
    """
    deg = g.degrees.astype(np.float64)
    xmask = unpack_to_bool(x.words.reshape(1, -1), g.n)[0]
    vol_x = float(deg[xmask].sum())
    vol_rest = float(deg[~xmask].sum())
    if vol_x == 0.0 or vol_rest == 0.0:
        raise UsageError("subset and its complement both need positive volume")
    if lam is None:
        lam = spectrum(g).gap
    vol_g = float(g.volume)
    exx = float(kernels.edges_between(g.words, g.n, x.words, x.words))
    lhs = abs(exx - vol_x * vol_x / vol_g)
    rhs = lam * vol_x * vol_rest / vol_g
    return lhs, rhs, lhs <= rhs + tol


@dataclass(frozen=True)
class MixingSweep:
    subsets_checked: int
    subsets_skipped: int  # degenerate draws (zero-volume side)
    max_slack: float  # max over subsets of lhs - rhs (negative = comfortable)
    all_hold: bool

    def to_dict(self) -> dict:
        return {
            "subsets_checked": self.subsets_checked,
            "subsets_skipped": self.subsets_skipped,
            "max_slack": self.max_slack,
            "all_hold": self.all_hold,
        }


def mixing_sweep(
    g: Graph,
    subsets: int = 200,
    seed: int = 20260817,
    tol: float = 1e-6,
    lam: Optional[float] = None,
) -> MixingSweep:
    """Run the mixing audit on `subsets` seeded random vertex subsets."""
    if lam is None:
        lam = spectrum(g).gap
    rng = np.random.default_rng(seed)
    checked = skipped = 0
    max_slack = -np.inf
    ok = True
    for _ in range(subsets):
        size = int(rng.integers(1, g.n + 1))
        ids = sorted(int(i) for i in rng.choice(g.n, size=size, replace=False))
        xs = VertexSet.from_ids(g.n, ids)
        try:
            lhs, rhs, holds = mixing_audit(g, xs, lam=lam, tol=tol)
        except UsageError:
            skipped += 1
            continue
        checked += 1
        max_slack = max(max_slack, lhs - rhs)
        ok = ok and holds
    if checked == 0:
        return MixingSweep(0, skipped, 0.0, True)
    return MixingSweep(checked, skipped, float(max_slack), ok)


@dataclass(frozen=True)
class GapSeriesRow:
    t: int
    n: int
    gap: float
    step_lower_bound: Optional[float]  # None at t = 0
    residual: float
    degenerate: bool

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "n": self.n,
            "gap": self.gap,
            "step_lower_bound": self.step_lower_bound,
            "residual": self.residual,
            "degenerate": self.degenerate,
        }


def gap_series(
    series: List[Graph],
    bits: List[int],
    cap: int = DEFAULT_SPECTRAL_CAP,
) -> List[GapSeriesRow]:
    """Gap along an iterate series with each step's a-priori lower bound.

    Stops at the first graph over the eigensolve cap; callers see how far
    it got from the row count.
    """
    rows: List[GapSeriesRow] = []
    for t, g in enumerate(series):
        if g.n > cap:
            break
        sp = spectrum(g, cap)
        bound: Optional[float] = None
        if t >= 1:
            parent = series[t - 1]
            bound = step_gap_lower_bound(parent.n, parent.edge_count, bits[t - 1])
        rows.append(GapSeriesRow(t, g.n, sp.gap, bound, sp.residual, sp.degenerate))
    return rows
