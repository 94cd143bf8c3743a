"""Kernel backend selection.

Hot loops (popcounts, BFS sweeps, domination scans, cycle search) have two
interchangeable implementations: numba-compiled and pure numpy. The active
backend is chosen at import time from the ILM_BACKEND environment variable:

    ILM_BACKEND=numba   use the JIT kernels (default; falls back to numpy
                        with a warning if numba is unavailable)
    ILM_BACKEND=numpy   force the pure-numpy path

Both modules stay importable for benchmarks and equivalence tests.
"""

import os
import warnings

from . import _numpy

_requested = os.environ.get("ILM_BACKEND", "numba").strip().lower()

if _requested not in ("numba", "numpy"):
    raise RuntimeError(f"ILM_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

if _requested == "numba":
    try:
        from . import _numba as _impl

        BACKEND = "numba"
    except ImportError as exc:  # pragma: no cover - numba is a declared dep
        warnings.warn(f"numba backend unavailable ({exc}); using numpy fallback")
        _impl = _numpy
        BACKEND = "numpy"
else:
    _impl = _numpy
    BACKEND = "numpy"

degrees = _impl.degrees
neighbor_edge_counts = _impl.neighbor_edge_counts
bfs_distances = _impl.bfs_distances
eccentricities = _impl.eccentricities
distance_matrix = _impl.distance_matrix
edges_between = _impl.edges_between
dominating_pair = _impl.dominating_pair
partition_pair = _impl.partition_pair
dominating_triple = _impl.dominating_triple
greedy_cycle = _impl.greedy_cycle

KERNEL_NAMES = [
    "degrees",
    "neighbor_edge_counts",
    "bfs_distances",
    "eccentricities",
    "distance_matrix",
    "edges_between",
    "dominating_pair",
    "partition_pair",
    "dominating_triple",
    "greedy_cycle",
]
