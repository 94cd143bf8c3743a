import random
from fractions import Fraction

import numpy as np
import pytest

from ilmgraphs.errors import CapacityError
from ilmgraphs.graph import (
    VertexSet,
    complete_graph,
    cycle_graph,
    named_graph,
    petersen_graph,
    random_graph,
)
from ilmgraphs.model import apply_bit, generate_series
from ilmgraphs.sequence import parse_sequence
from ilmgraphs.spectral import (
    gap_series,
    mixing_audit,
    mixing_sweep,
    normalized_laplacian,
    spectral_gap,
    spectrum,
    step_gap_lower_bound,
)


def reference_gap(g):
    """Spread of the nonzero spectrum around 1, from scratch."""
    a = g.to_dense_bool().astype(float)
    d = a.sum(axis=1)
    inv = np.zeros_like(d)
    inv[d > 0] = d[d > 0] ** -0.5
    lap = np.eye(g.n) - a * inv[:, None] * inv[None, :]
    lap[d == 0, :] = 0.0
    lap[:, d == 0] = 0.0
    vals = np.sort(np.linalg.eigvalsh(lap))
    return max(abs(vals[1] - 1.0), abs(vals[-1] - 1.0))


def test_laplacian_shape_and_symmetry():
    g = petersen_graph()
    lap = normalized_laplacian(g)
    assert lap.shape == (10, 10)
    assert np.allclose(lap, lap.T)
    assert np.allclose(np.diag(lap), 1.0)
    # 3-regular: off-diagonal entries are -1/3 on edges
    assert lap[0, 1] == pytest.approx(-1 / 3) or lap[0, 1] == 0.0


def test_spectrum_known_graphs():
    # K_n: eigenvalues 0 and n/(n-1); spread n/(n-1) - 1 = 1/(n-1)
    for n in (2, 3, 6):
        s = spectrum(complete_graph(n))
        assert s.gap == pytest.approx(1 / (n - 1), abs=1e-12)
        assert s.eigenvalues[0] == pytest.approx(0.0, abs=1e-9)
    # bipartite graphs peg an eigenvalue at 2, so the spread is 1
    s = spectrum(cycle_graph(4))
    assert s.gap == pytest.approx(1.0, abs=1e-12)
    # Petersen: adjacency eigenvalues 3, 1, -2 -> laplacian 0, 2/3, 5/3
    s = spectrum(petersen_graph())
    assert s.gap == pytest.approx(2 / 3, abs=1e-12)


def test_spectrum_matches_reference():
    rng = random.Random(601)
    for _ in range(15):
        n = rng.randint(2, 50)
        g = random_graph(n, 0.2 + 0.6 * rng.random(), rng.randint(0, 10**6))
        if g.edge_count == 0:
            continue
        s = spectrum(g)
        assert s.gap == pytest.approx(reference_gap(g), abs=1e-9)
        assert s.residual <= 1e-8


def test_spectrum_edge_cases():
    s = spectrum(complete_graph(1))
    assert s.degenerate and s.gap == 1.0
    s = spectrum(named_graph("2K1"))
    assert s.isolated_count == 2
    with pytest.raises(CapacityError):
        spectrum(random_graph(60, 0.5, 1), cap=50)


def test_step_bound_formulas():
    # transitive step: (2e+n)/(4e+n), always above 1/2
    assert step_gap_lower_bound(4, 4, 1) == pytest.approx(Fraction(12, 20))
    assert step_gap_lower_bound(1, 0, 1) == pytest.approx(1.0)
    for e, n in ((0, 1), (5, 5), (100, 30), (4950, 100)):
        b = step_gap_lower_bound(n, e, 1)
        assert b > 0.5
    # anti step: (n^2 - 2e - n)/(n^2 - n); degenerate n = 1 gives 0
    assert step_gap_lower_bound(4, 4, 0) == pytest.approx(Fraction(4, 12))
    assert step_gap_lower_bound(1, 0, 0) == 0.0


def test_step_bound_holds_on_random_steps():
    rng = random.Random(607)
    for _ in range(25):
        n = rng.randint(2, 40)
        g = random_graph(n, rng.random(), rng.randint(0, 10**6))
        bit = rng.randint(0, 1)
        child = apply_bit(g, bit)
        bound = step_gap_lower_bound(g.n, g.edge_count, bit)
        gap = spectral_gap(child)
        assert gap >= bound - 1e-9, f"n={n} e={g.edge_count} bit={bit}"


def test_mixing_audit_single_subset():
    g = petersen_graph()
    lam = spectral_gap(g)
    x = VertexSet.from_ids(10, [0, 1, 2])
    slack, bound, ok = mixing_audit(g, x, lam=lam)
    assert ok
    assert slack <= bound + 1e-12


def test_mixing_sweep_holds():
    rng = random.Random(613)
    for _ in range(6):
        n = rng.randint(8, 60)
        g = random_graph(n, 0.3 + 0.4 * rng.random(), rng.randint(0, 10**6))
        if g.edge_count == 0:
            continue
        sweep = mixing_sweep(g, subsets=80, seed=rng.randint(0, 10**6))
        assert sweep.all_hold
        assert sweep.subsets_checked + sweep.subsets_skipped == 80


def test_mixing_sweep_deterministic():
    g = random_graph(30, 0.4, 617)
    a = mixing_sweep(g, subsets=50, seed=99)
    b = mixing_sweep(g, subsets=50, seed=99)
    assert a == b


def test_gap_series_tracks_bounds():
    g0 = cycle_graph(4)
    seq = parse_sequence("(01)*")
    series, trace = generate_series(g0, seq, 4)
    rows = gap_series(series, [r.bit for r in trace])
    assert len(rows) == 5
    for row in rows[1:]:
        assert row.gap >= row.step_lower_bound - 1e-9
