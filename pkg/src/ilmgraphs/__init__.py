"""Iterated local cloning graphs.

Build graph sequences by repeatedly cloning every-vertex neighborhoods,
either transitively (the clone keeps the closed neighborhood) or
anti-transitively (the clone gets the complement), steered by a binary
sequence. The subpackages measure densification, clustering, classical
parameters, spectral expansion, and Hamiltonicity, and `harness` checks the
analytical claims about those quantities over a reproducible corpus.
"""

from .config import RunConfig, load_config
from .errors import CapacityError, SequenceParseError, UsageError
from .graph import (
    Graph,
    VertexSet,
    complete_graph,
    cycle_graph,
    disjoint_union,
    named_graph,
    path_graph,
    petersen_graph,
    random_graph,
    star_graph,
)
from .harness import (
    CorpusInstance,
    CorpusSpec,
    TheoremReport,
    THEOREM_IDS,
    run_campaign,
    summary_text,
)
from .metrics import (
    anti_step_clustering_floor,
    bounded_gap_clustering_floor,
    clustering_coefficient,
    clustering_float,
    density_series,
    ilt_clustering_curve,
    local_clustering,
    lt_step_clustering_factor,
)
from .model import (
    apply_bit,
    generate,
    generate_series,
    ilt_average_degree,
    lat_step,
    lt_step,
    predict_edge_series,
    predict_edges,
)
from .params import (
    ChromaticResult,
    DominationResult,
    chromatic_number,
    classify_domination_2,
    diameter_radius,
    domination_number,
    find_partition_pair,
    parameter_report,
)
from .sequence import NAMED_SEQUENCES, SequenceSpec, parse_sequence, resolve_sequence
from .spectral import (
    Spectrum,
    mixing_audit,
    mixing_sweep,
    spectral_gap,
    spectrum,
    step_gap_lower_bound,
)
from .structure import (
    HamiltonicityResult,
    hamiltonian,
    ilm_hamiltonian_cycle,
    induced_subgraph_search,
    induced_universality_check,
    star_hamiltonian_cycle,
    verify_cut_certificate,
    verify_cycle,
    zeta_bracket,
    zeta_star_experiment,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ChromaticResult",
    "CorpusInstance",
    "CorpusSpec",
    "DominationResult",
    "Graph",
    "HamiltonicityResult",
    "NAMED_SEQUENCES",
    "RunConfig",
    "SequenceParseError",
    "SequenceSpec",
    "Spectrum",
    "THEOREM_IDS",
    "TheoremReport",
    "UsageError",
    "VertexSet",
    "anti_step_clustering_floor",
    "apply_bit",
    "bounded_gap_clustering_floor",
    "chromatic_number",
    "classify_domination_2",
    "clustering_coefficient",
    "clustering_float",
    "complete_graph",
    "cycle_graph",
    "density_series",
    "diameter_radius",
    "disjoint_union",
    "domination_number",
    "find_partition_pair",
    "generate",
    "generate_series",
    "hamiltonian",
    "ilm_hamiltonian_cycle",
    "ilt_average_degree",
    "ilt_clustering_curve",
    "induced_subgraph_search",
    "induced_universality_check",
    "lat_step",
    "load_config",
    "local_clustering",
    "lt_step",
    "lt_step_clustering_factor",
    "mixing_audit",
    "mixing_sweep",
    "named_graph",
    "parameter_report",
    "parse_sequence",
    "path_graph",
    "petersen_graph",
    "predict_edge_series",
    "predict_edges",
    "random_graph",
    "resolve_sequence",
    "run_campaign",
    "spectral_gap",
    "spectrum",
    "star_graph",
    "star_hamiltonian_cycle",
    "step_gap_lower_bound",
    "summary_text",
    "verify_cut_certificate",
    "verify_cycle",
    "zeta_bracket",
    "zeta_star_experiment",
]
