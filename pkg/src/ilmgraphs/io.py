"""File formats: edge lists, DOT, lineage sidecars, generation traces.

Edge-list text format (golden-test stable):
    line 1:     "n m"
    lines 2..:  "u v" with u < v, 0-based, sorted lexicographically
"""

import csv
import json
from pathlib import Path
from typing import List, Sequence, Union

from .errors import UsageError
from .graph import Graph, Origin, from_edges

PathLike = Union[str, Path]


def edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: PathLike) -> None:
    Path(path).write_text(edge_list_text(g))


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise UsageError("empty edge-list input")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError as exc:
        raise UsageError(f"bad edge-list header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise UsageError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    prev = (-1, -1)
    for ln in lines[1:]:
        try:
            u, v = (int(x) for x in ln.split())
        except ValueError as exc:
            raise UsageError(f"bad edge line {ln!r}") from exc
        if not u < v:
            raise UsageError(f"edge {ln!r} must have u < v")
        if (u, v) <= prev:
            raise UsageError("edges must be sorted lexicographically without repeats")
        prev = (u, v)
        edges.append((u, v))
    return from_edges(n, edges)


def read_edge_list(path: PathLike) -> Graph:
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"no such file: {p}")
    return parse_edge_list(p.read_text())


def to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(g: Graph, path: PathLike) -> None:
    Path(path).write_text(to_dot(g))


def lineage_records(g: Graph) -> List[dict]:
    return [org.to_dict(v) for v, org in enumerate(g.lineage)]


def write_lineage(g: Graph, path: PathLike) -> None:
    Path(path).write_text(json.dumps(lineage_records(g), indent=2, sort_keys=True) + "\n")


def read_lineage(path: PathLike) -> List[Origin]:
    records = json.loads(Path(path).read_text())
    out = []
    for rec in sorted(records, key=lambda r: r["id"]):
        out.append(Origin(rec["kind"], rec["parent"], rec["step"]))
    return out


TRACE_HEADER = ["step", "bit", "n", "e", "predicted_e"]


def write_trace_csv(rows: Sequence, path: PathLike) -> None:
    """rows: iterable of objects with step/bit/n/e/predicted_e attributes."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(TRACE_HEADER)
        for r in rows:
            w.writerow([r.step, r.bit, r.n, r.e, r.predicted_e])
