"""cgk: chain graphs, AMP Markov equivalence classes, and essential graphs."""

from .core import EdgeState, GraphError, MixedGraph, VertexPartition
from .equivalence import (
    EdgeStrength,
    EquivalenceClass,
    StrengthLabeledGraph,
    adg_essential_graph,
    amp_equivalent,
    class_contains_adg,
    enumerate_class,
    essential_graph,
    essential_graph_of,
    reduced_graph,
    strength_parent_sets,
    strong_equivalence_classes,
)
from .patterns import (
    Biflag,
    ClassifiedTriple,
    TripleShape,
    Triplex,
    classify_triples,
    find_antiflags,
    find_biflags,
    find_chordless_undirected_cycles,
    find_flags,
    find_immoralities,
    find_triplexes,
    is_chordal,
    is_perfect_orientation,
    mcs_order,
    mcs_perfect_orientation,
)
from .validate import (
    ComponentClass,
    SPropertyWitness,
    ValidationFailure,
    ValidationVerdict,
    classify_chain_components,
    is_irreversible_arrow,
    is_protected_arrow,
    is_well_protected_arrow,
    property_s,
    property_s_prime,
    validate_directed_essential,
    validate_essential,
)
from .census import (
    CensusReport,
    CrossValidationReport,
    census,
    cross_validate,
    enumerate_chain_graphs,
    equivalence_classes,
)
from .graphio import (
    ParseError,
    ParsedGraph,
    parse_graph,
    render_dot,
    render_graph,
    render_json,
    render_text,
)

__version__ = "0.1.0"

__all__ = [
    "Biflag",
    "CensusReport",
    "ClassifiedTriple",
    "ComponentClass",
    "CrossValidationReport",
    "EdgeState",
    "EdgeStrength",
    "EquivalenceClass",
    "GraphError",
    "MixedGraph",
    "ParseError",
    "ParsedGraph",
    "SPropertyWitness",
    "StrengthLabeledGraph",
    "TripleShape",
    "Triplex",
    "ValidationFailure",
    "ValidationVerdict",
    "VertexPartition",
    "adg_essential_graph",
    "amp_equivalent",
    "census",
    "class_contains_adg",
    "classify_chain_components",
    "classify_triples",
    "cross_validate",
    "enumerate_chain_graphs",
    "enumerate_class",
    "equivalence_classes",
    "essential_graph",
    "essential_graph_of",
    "find_antiflags",
    "find_biflags",
    "find_chordless_undirected_cycles",
    "find_flags",
    "find_immoralities",
    "find_triplexes",
    "is_chordal",
    "is_irreversible_arrow",
    "is_perfect_orientation",
    "is_protected_arrow",
    "is_well_protected_arrow",
    "mcs_order",
    "mcs_perfect_orientation",
    "parse_graph",
    "property_s",
    "property_s_prime",
    "reduced_graph",
    "render_dot",
    "render_graph",
    "render_json",
    "render_text",
    "strength_parent_sets",
    "strong_equivalence_classes",
    "validate_directed_essential",
    "validate_essential",
]
