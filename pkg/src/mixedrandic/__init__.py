"""Spectral analysis of mixed graphs through the sixth-root Hermitian
Randic matrix: exact characteristic polynomials, energy bounds, switching
certificates and enumeration campaigns over all small graphs."""

from .graphs import (
    EdgeKind,
    EdgeRecord,
    MixedGraph,
    ParseError,
    arc,
    cycle_graph,
    directed_cycle,
    general_randic_index,
    parse_graph,
    path_graph,
    serialize_graph,
    undirected,
)
from .gains import (
    CycleClass,
    GainView,
    SixthRoot,
    apply_switching,
    are_switching_equivalent,
    classify_cycle,
    cycle_gain,
    gain_view,
    is_positive,
    switching_certificate_to_constant,
)
from .enumeration import (
    ElementarySubgraph,
    enumerate_cycles,
    enumerate_elementary_subgraphs,
    enumerate_mixed_graphs,
    sample_mixed_graphs,
    spanning_elementary_subgraphs,
)
from .matrices import (
    hermitian_adjacency,
    incidence_matrix,
    laplacian,
    normalized_laplacian,
    quadratic_form,
    randic_matrix,
    randic_via_incidence,
)
from .spectra import (
    CharPoly,
    Spectrum,
    char_poly_combinatorial,
    char_poly_numeric,
    determinant_combinatorial,
    eigendecompose,
    randic_spectrum,
)
from .theorems import (
    BoundsReport,
    CheckRecord,
    InterlacingResult,
    TheoremSuite,
    check_eigenvalue_one,
    check_minus_one,
    check_spectral_symmetry,
    check_spectrum_equals_underlying,
    check_unit_interval,
    energy_bounds_report,
    entry_sum_bounds,
    interlacing_check,
    run_theorem_suite,
    smallest_eigenvalue_bound,
)
from .campaign import (
    CampaignConfig,
    population,
    render_csv,
    render_json,
    run_campaign,
    summary_text,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "CampaignConfig",
    "CharPoly",
    "CheckRecord",
    "CycleClass",
    "EdgeKind",
    "EdgeRecord",
    "ElementarySubgraph",
    "GainView",
    "InterlacingResult",
    "MixedGraph",
    "ParseError",
    "SixthRoot",
    "Spectrum",
    "TheoremSuite",
    "apply_switching",
    "arc",
    "are_switching_equivalent",
    "char_poly_combinatorial",
    "char_poly_numeric",
    "check_eigenvalue_one",
    "check_minus_one",
    "check_spectral_symmetry",
    "check_spectrum_equals_underlying",
    "check_unit_interval",
    "classify_cycle",
    "cycle_gain",
    "cycle_graph",
    "determinant_combinatorial",
    "directed_cycle",
    "eigendecompose",
    "energy_bounds_report",
    "entry_sum_bounds",
    "enumerate_cycles",
    "enumerate_elementary_subgraphs",
    "enumerate_mixed_graphs",
    "gain_view",
    "general_randic_index",
    "hermitian_adjacency",
    "incidence_matrix",
    "interlacing_check",
    "is_positive",
    "laplacian",
    "normalized_laplacian",
    "parse_graph",
    "path_graph",
    "population",
    "quadratic_form",
    "randic_matrix",
    "randic_spectrum",
    "randic_via_incidence",
    "render_csv",
    "render_json",
    "run_campaign",
    "run_theorem_suite",
    "sample_mixed_graphs",
    "serialize_graph",
    "smallest_eigenvalue_bound",
    "spanning_elementary_subgraphs",
    "summary_text",
    "switching_certificate_to_constant",
    "undirected",
]
