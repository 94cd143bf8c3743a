"""The iterated cloning model.

One step doubles the graph. With bit 1 (transitive) each vertex x gains a
clone x' adjacent to the closed neighborhood N[x]; with bit 0
(anti-transitive) the copy is adjacent to V minus N[x]. New ids follow the
append-only convention: the copy of vertex i in an n-vertex graph gets id
n + i. Edge counts obey

    transitive:       e' = 3e + n
    anti-transitive:  e' = n^2 - e - n

and the generator asserts the constructed count against the recurrence at
every step.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from . import bitset
from .config import RunConfig
from .errors import CapacityError, UsageError
from .graph import ANTI_CLONE, CLONE, Graph, Origin
from .sequence import SequenceSpec


def predict_edges(n: int, e: int, bit: int) -> int:
    """Edge count after one step on an n-vertex, e-edge graph."""
    if bit == 1:
        return 3 * e + n
    if bit == 0:
        return n * n - e - n
    raise UsageError(f"step bit must be 0 or 1, got {bit!r}")


def _doubled_words(g: Graph, second_block: np.ndarray) -> np.ndarray:
    """Assemble the packed adjacency of the doubled graph.

    second_block holds, per original vertex i, the row of bits describing
    which originals the copy of i attaches to (symmetric across the two
    blocks; copies are pairwise non-adjacent).
    """
    n = g.n
    W2 = bitset.word_count(2 * n)
    out = np.zeros((2 * n, W2), dtype=np.uint64)
    W = g.words.shape[1]
    out[:n, :W] = g.words
    bitset.place_bits(out[:n], second_block, n)
    out[n:, :W] = second_block
    return out


def _extended_lineage(g: Graph, kind: str) -> Tuple[Origin, ...]:
    step = g.generation + 1
    return g.lineage + tuple(Origin(kind, i, step) for i in range(g.n))


def lt_step(g: Graph) -> Graph:
    """Transitive step: copy of x is adjacent to N[x] (x included)."""
    closed = g.closed_rows()
    words = _doubled_words(g, closed)
    return Graph(2 * g.n, words, _extended_lineage(g, CLONE), g.generation + 1, validate=False)


def lat_step(g: Graph) -> Graph:
    """Anti-transitive step: copy of x is adjacent to V minus N[x]."""
    anti = g.closed_rows()
    anti = ~anti
    anti[:, -1] &= bitset.tail_mask(g.n)
    words = _doubled_words(g, anti)
    return Graph(2 * g.n, words, _extended_lineage(g, ANTI_CLONE), g.generation + 1, validate=False)


def apply_bit(g: Graph, bit: int) -> Graph:
    if bit == 1:
        return lt_step(g)
    if bit == 0:
        return lat_step(g)
    raise UsageError(f"step bit must be 0 or 1, got {bit!r}")


@dataclass(frozen=True)
class TraceRow:
    """Per-step bookkeeping: the graph after step `step` and the prediction."""

    step: int
    bit: int
    n: int
    e: int
    predicted_e: int


def generate_series(
    g0: Graph,
    seq: SequenceSpec,
    steps: int,
    max_vertices: Optional[int] = None,
) -> Tuple[List[Graph], List[TraceRow]]:
    """All graphs G_0..G_steps plus the edge-count trace."""
    if steps < 0:
        raise UsageError("step count must be >= 0")
    if not seq.defined_through(steps):
        raise UsageError(
            f"sequence {seq.text!r} defines {len(seq.prefix)} bits, {steps} steps requested"
        )
    cap = max_vertices if max_vertices is not None else RunConfig().resolved_max_vertices()
    series = [g0]
    trace: List[TraceRow] = []
    g = g0
    for t in range(steps):
        if 2 * g.n > cap:
            raise CapacityError(
                f"step {t + 1} would create {2 * g.n} vertices, cap is {cap}"
            )
        bit = seq.bit(t)
        predicted = predict_edges(g.n, g.edge_count, bit)
        g = apply_bit(g, bit)
        if g.edge_count != predicted:
            raise AssertionError(
                f"edge recurrence broken at step {t + 1}: built {g.edge_count}, predicted {predicted}"
            )
        trace.append(TraceRow(step=t + 1, bit=bit, n=g.n, e=g.edge_count, predicted_e=predicted))
        series.append(g)
    return series, trace


def generate(
    g0: Graph,
    seq: SequenceSpec,
    steps: int,
    max_vertices: Optional[int] = None,
) -> Tuple[Graph, List[TraceRow]]:
    """Final graph after `steps` steps plus the trace."""
    series, trace = generate_series(g0, seq, steps, max_vertices)
    return series[-1], trace


def predict_edge_series(n0: int, e0: int, seq: SequenceSpec, steps: int) -> List[Tuple[int, int]]:
    """(n_t, e_t) for t = 0..steps from the recurrences alone."""
    out = [(n0, e0)]
    n, e = n0, e0
    for t in range(steps):
        e = predict_edges(n, e, seq.bit(t))
        n *= 2
        out.append((n, e))
    return out


def ilt_average_degree(n0: int, volume0: int, t: int) -> Fraction:
    """Exact average degree of the t-th transitive iterate.

    Closed form: (3/2)^t (Vol_0/n_0 + 2) - 2.
    """
    if t < 0:
        raise UsageError("t must be >= 0")
    return Fraction(3, 2) ** t * (Fraction(volume0, n0) + 2) - 2
