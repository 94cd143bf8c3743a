"""Run configuration: size caps, solver budgets, seeds.

Defaults live here; a JSON config file can override any field, and the
ILM_MAX_VERTICES environment variable wins over both for the global cap.
"""

import json
import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Optional

from .errors import UsageError

DEFAULT_MAX_VERTICES = 32768


@dataclass
class RunConfig:
    max_vertices: int = DEFAULT_MAX_VERTICES
    spectral_cap: int = 4096
    exact_hamilton_cap: int = 24
    cycle_search_budget: int = 200_000
    chromatic_node_budget: int = 10_000_000
    domination_fast_k: int = 3
    mixing_subsets: int = 200
    mixing_tol: float = 1e-6
    corpus_generate_cap: int = 1024
    corpus_spectral_cap: int = 512
    corpus_params_cap: int = 1024
    corpus_domination_cap: int = 128
    corpus_chromatic_cap: int = 40
    corpus_hamilton_cap: int = 1024
    corpus_metrics_cap: int = 1024
    seed: int = 20260817
    workers: int = 1

    def resolved_max_vertices(self) -> int:
        env = os.environ.get("ILM_MAX_VERTICES")
        if env is not None:
            try:
                return int(env)
            except ValueError as exc:
                raise UsageError(f"ILM_MAX_VERTICES must be an integer, got {env!r}") from exc
        return self.max_vertices


def load_config(path: Optional[str] = None) -> RunConfig:
    cfg = RunConfig()
    if path is None:
        return cfg
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"no such config file: {p}")
    try:
        data = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad JSON in config {p}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("config JSON must be an object")
    known = {f.name for f in fields(RunConfig)}
    for key, value in data.items():
        if key not in known:
            raise UsageError(f"unknown config key {key!r}")
        setattr(cfg, key, value)
    return cfg
