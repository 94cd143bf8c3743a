import random
from fractions import Fraction

import numpy as np
import pytest

from ilmgraphs.errors import CapacityError
from ilmgraphs.graph import complete_graph, cycle_graph, path_graph, random_graph
from ilmgraphs.model import (
    apply_bit,
    generate,
    generate_series,
    ilt_average_degree,
    lat_step,
    lt_step,
    predict_edge_series,
    predict_edges,
)
from ilmgraphs.sequence import parse_sequence


def brute_edges(g):
    dense = g.to_dense_bool()
    return int(dense.sum()) // 2


def test_lt_step_neighborhoods():
    g = cycle_graph(5)
    h = lt_step(g)
    assert h.n == 10
    # clone 5+i is adjacent to the closed neighborhood of i, nothing else
    for i in range(5):
        expected = sorted(g.neighbors(i) + [i])
        assert sorted(h.neighbors(5 + i)) == expected
    # original edges survive untouched
    for u in range(5):
        for v in range(u + 1, 5):
            assert h.has_edge(u, v) == g.has_edge(u, v)


def test_lat_step_neighborhoods():
    g = cycle_graph(5)
    h = lat_step(g)
    assert h.n == 10
    # anti-clone 5+i sees exactly the old vertices outside N[i]
    for i in range(5):
        banned = set(g.neighbors(i)) | {i}
        expected = sorted(set(range(5)) - banned)
        assert sorted(h.neighbors(5 + i)) == expected
    # anti-clones form an independent set
    for i in range(5):
        for j in range(i + 1, 5):
            assert not h.has_edge(5 + i, 5 + j)


def test_edge_count_recurrences_by_construction():
    rng = random.Random(101)
    for _ in range(25):
        n = rng.randint(1, 40)
        g = random_graph(n, rng.random(), rng.randint(0, 10**6))
        e = g.edge_count
        lt = lt_step(g)
        assert lt.edge_count == 3 * e + n
        assert brute_edges(lt) == 3 * e + n
        la = lat_step(g)
        assert la.edge_count == n * n - e - n
        assert brute_edges(la) == n * n - e - n


def test_predict_edges_matches_steps():
    g = random_graph(12, 0.5, 7)
    for bit in (0, 1):
        h = apply_bit(g, bit)
        assert h.edge_count == predict_edges(g.n, g.edge_count, bit)


def test_generate_series_trace():
    g0 = cycle_graph(4)
    seq = parse_sequence("(01)*")
    series, trace = generate_series(g0, seq, 4)
    assert len(series) == 5
    assert [g.n for g in series] == [4, 8, 16, 32, 64]
    assert [row.e for row in trace] == [8, 32, 208, 656]
    assert all(row.e == row.predicted_e for row in trace)
    assert [row.bit for row in trace] == [0, 1, 0, 1]
    assert [row.step for row in trace] == [1, 2, 3, 4]


def test_generate_returns_last():
    g0 = complete_graph(1)
    g, trace = generate(g0, parse_sequence("(1)*"), 3)
    assert g.n == 8
    assert g.edge_count == 19
    assert len(trace) == 3


def test_capacity_error():
    g0 = complete_graph(2)
    with pytest.raises(CapacityError):
        generate_series(g0, parse_sequence("(1)*"), 10, max_vertices=100)


def test_predict_edge_series_alternating():
    seq = parse_sequence("(10)*")
    rows = predict_edge_series(1, 0, seq, 16)
    assert rows[0] == (1, 0)
    # frozen checkpoints for the single-vertex seed
    frozen = {8: 13705, 10: 220261, 12: 3530449, 14: 56505229, 16: 904176985}
    for t, e in frozen.items():
        assert rows[t] == (2**t, e)


def test_predict_matches_construction_small():
    seq = parse_sequence("1(100)*")
    g0 = path_graph(3)
    series, _ = generate_series(g0, seq, 6)
    rows = predict_edge_series(3, 2, seq, 6)
    for g, (n, e) in zip(series, rows):
        assert (g.n, g.edge_count) == (n, e)


def test_ilt_average_degree_closed_form():
    # per-step check: LT multiplies (avg+2) by 3/2 exactly
    g = cycle_graph(5)
    series, _ = generate_series(g, parse_sequence("(1)*"), 5)
    for t, gt in enumerate(series):
        expected = ilt_average_degree(g.n, g.volume, t)
        assert Fraction(gt.volume, gt.n) == expected


def test_generation_counter():
    g0 = cycle_graph(4)
    series, _ = generate_series(g0, parse_sequence("(01)*"), 3)
    assert [g.generation for g in series] == [0, 1, 2, 3]


def test_lineage_growth():
    g0 = path_graph(3)
    series, _ = generate_series(g0, parse_sequence("(10)*"), 2)
    g2 = series[2]
    assert g2.n == 12
    assert len(g2.lineage) == 12
    # ids are append-only: vertex v of the previous graph keeps id v
    for v in range(6):
        assert g2.lineage[v] == series[1].lineage[v]
