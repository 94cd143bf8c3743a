"""Immutable dense-bitset graphs with cloning lineage.

Vertices are 0..n-1; adjacency lives in packed uint64 rows. Ids are
append-only across cloning steps: the step that doubles an n-vertex graph
gives the copy of vertex i the id n + i, so the first n ids of any
generated graph induce the previous graph unchanged.
"""

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from . import bitset
from .errors import UsageError

#: constructor validates full symmetry up to this many vertices
VALIDATE_CAP = 4096

ORIGINAL = "original"
CLONE = "clone"
ANTI_CLONE = "anti_clone"


@dataclass(frozen=True)
class Origin:
    """Where a vertex came from: seed vertex, or a (anti-)clone of `parent`."""

    kind: str
    parent: Optional[int]
    step: int

    def to_dict(self, vid: int) -> dict:
        return {"id": vid, "kind": self.kind, "parent": self.parent, "step": self.step}


class VertexSet:
    """Fixed-universe vertex set over packed words."""

    __slots__ = ("n", "words")

    def __init__(self, n: int, words: Optional[np.ndarray] = None):
        self.n = n
        self.words = bitset.zeros(n) if words is None else words

    @classmethod
    def from_ids(cls, n: int, ids: Iterable[int]) -> "VertexSet":
        return cls(n, bitset.from_indices(n, ids))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, bitset.full(n))

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bitset.get_bit(self.words, v)

    def __len__(self) -> int:
        return bitset.popcount(self.words)

    def __iter__(self) -> Iterator[int]:
        return bitset.iter_bits(self.words)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.n == other.n
            and bool(np.array_equal(self.words, other.words))
        )

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.words & other.words)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.words | other.words)

    def __invert__(self) -> "VertexSet":
        return VertexSet(self.n, bitset.complement(self.words, self.n))

    def ids(self) -> List[int]:
        return bitset.to_indices(self.words)

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, ids={self.ids()})"


class Graph:
    """Undirected simple graph over packed adjacency rows (immutable)."""

    __slots__ = ("n", "words", "lineage", "generation", "_degrees", "_edge_count")

    def __init__(
        self,
        n: int,
        words: np.ndarray,
        lineage: Optional[Tuple[Origin, ...]] = None,
        generation: int = 0,
        validate: bool = True,
    ):
        if n < 1:
            raise UsageError("graphs must have at least one vertex")
        if words.shape != (n, bitset.word_count(n)):
            raise UsageError(f"adjacency shape {words.shape} does not match n={n}")
        if words.dtype != np.uint64:
            raise UsageError("adjacency must be uint64 words")
        if lineage is None:
            lineage = tuple(Origin(ORIGINAL, None, 0) for _ in range(n))
        if len(lineage) != n:
            raise UsageError("lineage length must equal vertex count")
        self.n = n
        self.words = words
        self.words.setflags(write=False)
        self.lineage = lineage
        self.generation = generation
        self._degrees = None
        self._edge_count = None
        if validate:
            self._validate()

    def _validate(self) -> None:
        n = self.n
        tail = bitset.tail_mask(n)
        if int(self.words[:, -1].max(initial=0)) & ~int(tail):
            raise UsageError("adjacency rows have bits beyond the vertex range")
        rows = np.arange(n)
        diag = (self.words[rows, rows // 64] >> (rows % 64).astype(np.uint64)) & np.uint64(1)
        if diag.any():
            raise UsageError("self-loops are not allowed")
        if n <= VALIDATE_CAP:
            dense = bitset.unpack_to_bool(self.words, n)
            if not np.array_equal(dense, dense.T):
                raise UsageError("adjacency must be symmetric")

    # -- basic accessors -------------------------------------------------

    @property
    def degrees(self) -> np.ndarray:
        if self._degrees is None:
            self._degrees = np.bitwise_count(self.words).sum(axis=1).astype(np.int64)
        return self._degrees

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    @property
    def edge_count(self) -> int:
        if self._edge_count is None:
            self._edge_count = int(self.degrees.sum()) // 2
        return self._edge_count

    @property
    def volume(self) -> int:
        return int(self.degrees.sum())

    def has_edge(self, u: int, v: int) -> bool:
        return bitset.get_bit(self.words[u], v)

    def row(self, v: int) -> np.ndarray:
        return self.words[v]

    def closed_row(self, v: int) -> np.ndarray:
        out = self.words[v].copy()
        out[v // 64] |= np.uint64(1) << np.uint64(v % 64)
        return out

    def closed_rows(self) -> np.ndarray:
        out = self.words.copy()
        rows = np.arange(self.n)
        out[rows, rows // 64] |= np.uint64(1) << (rows % 64).astype(np.uint64)
        return out

    def neighbors(self, v: int) -> List[int]:
        return bitset.to_indices(self.words[v])

    def neighbor_set(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.words[v].copy())

    def closed_neighbor_set(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.closed_row(v))

    def row_int(self, v: int) -> int:
        return bitset.to_int(self.words[v])

    def masks(self) -> List[int]:
        """Adjacency rows as Python ints, for the small exact solvers."""
        return [bitset.to_int(self.words[v]) for v in range(self.n)]

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges (u, v) with u < v, lexicographically sorted."""
        for u in range(self.n):
            for v in bitset.iter_bits(self.words[u]):
                if v > u:
                    yield (u, v)

    def to_dense_bool(self) -> np.ndarray:
        return bitset.unpack_to_bool(self.words, self.n)

    # -- derived graphs ---------------------------------------------------

    def complement(self) -> "Graph":
        out = ~self.words
        out[:, -1] &= bitset.tail_mask(self.n)
        rows = np.arange(self.n)
        out[rows, rows // 64] &= ~(np.uint64(1) << (rows % 64).astype(np.uint64))
        return Graph(self.n, out, self.lineage, self.generation, validate=False)

    def induced_prefix(self, k: int) -> "Graph":
        """Induced subgraph on ids 0..k-1 (the embedded earlier generation)."""
        if not 0 < k <= self.n:
            raise UsageError(f"prefix size {k} out of range")
        W = bitset.word_count(k)
        sub = self.words[:k, :W].copy()
        sub[:, -1] &= bitset.tail_mask(k)
        return Graph(k, sub, self.lineage[:k], self.generation, validate=False)

    def induced(self, ids: Sequence[int]) -> "Graph":
        ids = list(ids)
        if len(set(ids)) != len(ids):
            raise UsageError("induced subgraph ids must be distinct")
        k = len(ids)
        dense = self.to_dense_bool()[np.ix_(ids, ids)]
        return Graph(k, bitset.pack_bool_matrix(dense), validate=False)

    def relabeled(self) -> "Graph":
        """Copy with fresh seed lineage (drops cloning history)."""
        return Graph(self.n, self.words.copy(), None, 0, validate=False)

    # -- misc ---------------------------------------------------------------

    def structurally_equal(self, other: "Graph") -> bool:
        return self.n == other.n and bool(np.array_equal(self.words, other.words))

    def descendant_classes(self) -> List[List[int]]:
        """Vertices grouped by the seed vertex they trace back to."""
        root = [0] * self.n
        n_orig = 0
        for v, org in enumerate(self.lineage):
            if org.kind == ORIGINAL:
                root[v] = v
                n_orig += 1
            else:
                root[v] = root[org.parent]
        classes: dict = {}
        for v in range(self.n):
            classes.setdefault(root[v], []).append(v)
        return [classes[k] for k in sorted(classes)]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count}, t={self.generation})"


def from_edges(
    n: int,
    edges: Iterable[Tuple[int, int]],
    lineage: Optional[Tuple[Origin, ...]] = None,
    generation: int = 0,
) -> Graph:
    words = np.zeros((n, bitset.word_count(n)), dtype=np.uint64)
    one = np.uint64(1)
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise UsageError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise UsageError(f"self-loop at {u}")
        words[u, v // 64] |= one << np.uint64(v % 64)
        words[v, u // 64] |= one << np.uint64(u % 64)
    return Graph(n, words, lineage, generation)


def from_dense_bool(dense: np.ndarray) -> Graph:
    n = dense.shape[0]
    return Graph(n, bitset.pack_bool_matrix(dense))


# -- seed graph factory ------------------------------------------------------

_KN_RE = re.compile(r"^K(\d+)$")
_CN_RE = re.compile(r"^C(\d+)$")
_PN_RE = re.compile(r"^P(\d+)$")
_STAR_RE = re.compile(r"^star(\d+)$")
_RAND_RE = re.compile(r"^rand\((\d+),(0?\.\d+|1|1\.0|0),(\d+)\)$")


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise UsageError("cycles need at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star on n vertices: center 0, leaves 1..n-1."""
    if n < 2:
        raise UsageError("stars need at least 2 vertices")
    return from_edges(n, [(0, i) for i in range(1, n)])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    n = a.n + b.n
    edges = list(a.edges()) + [(u + a.n, v + a.n) for u, v in b.edges()]
    return from_edges(n, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return from_edges(10, outer + inner + spokes)


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    dense = np.zeros((n, n), dtype=bool)
    iu = np.triu_indices(n, k=1)
    hits = rng.random(len(iu[0])) < p
    dense[iu[0][hits], iu[1][hits]] = True
    dense |= dense.T
    return from_dense_bool(dense)


def named_graph(name: str) -> Graph:
    """Build a seed graph from a compact name.

    Accepted: K<n>, C<n>, P<n>, star<n>, 2K1, K1uK2, K2uK3, petersen,
    rand(<n>,<p>,<seed>).
    """
    key = name.strip()
    if key == "2K1":
        return from_edges(2, [])
    if key == "K1uK2":
        return disjoint_union(complete_graph(1), complete_graph(2))
    if key == "K2uK3":
        return disjoint_union(complete_graph(2), complete_graph(3))
    if key.lower() == "petersen":
        return petersen_graph()
    m = _KN_RE.match(key)
    if m:
        return complete_graph(int(m.group(1)))
    m = _CN_RE.match(key)
    if m:
        return cycle_graph(int(m.group(1)))
    m = _PN_RE.match(key)
    if m:
        return path_graph(int(m.group(1)))
    m = _STAR_RE.match(key)
    if m:
        return star_graph(int(m.group(1)))
    m = _RAND_RE.match(key)
    if m:
        return random_graph(int(m.group(1)), float(m.group(2)), int(m.group(3)))
    raise UsageError(f"unknown graph name {name!r}")
