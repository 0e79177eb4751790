"""Counting maximal independent sets against the matching number.

Small-graph toolkit: graph6 I/O, canonical forms, exhaustive generation,
maximal-independent-set counting, blossom matchings, the extremal bounds
with their extremal families, and an exhaustive verifier.
"""

from .bounds import (
    BoundValue,
    chang_q,
    connected_bound_h,
    connected_trianglefree_bound_f,
    general_bound,
    griggs_c,
    hujter_bound,
    moon_moser,
    trianglefree_bound_m,
)
from .canon import CanonicalForm, are_isomorphic, canonical_form, certificate
from .families import FamilyId, enumerate_family, recognize
from .generate import GenerationLimitError, generate_nonisomorphic
from .graph import (
    Graph,
    GraphFormatError,
    VertexSet,
    components,
    delete_vertices,
    disjoint_union,
    from_edges,
    induced_subgraph,
    is_connected,
    is_triangle_free,
    make_basic,
    neighborhood,
    parse_graph6,
    to_graph6,
)
from .matching import (
    GEDecomposition,
    find_augmenting_path,
    gallai_edmonds,
    is_factor_critical,
    is_induced_matching,
    is_saturated_by_all_maximum_matchings,
    matching_number,
    maximum_matching,
)
from .mis import count_independent_sets, count_mis, enumerate_mis, is_independent, is_maximal_independent
from .verify import TheoremId, VerificationReport

__version__ = "0.1.0"

__all__ = [
    "BoundValue",
    "CanonicalForm",
    "FamilyId",
    "GEDecomposition",
    "GenerationLimitError",
    "Graph",
    "GraphFormatError",
    "TheoremId",
    "VerificationReport",
    "VertexSet",
    "are_isomorphic",
    "canonical_form",
    "certificate",
    "chang_q",
    "components",
    "connected_bound_h",
    "connected_trianglefree_bound_f",
    "count_independent_sets",
    "count_mis",
    "delete_vertices",
    "disjoint_union",
    "enumerate_family",
    "enumerate_mis",
    "find_augmenting_path",
    "from_edges",
    "gallai_edmonds",
    "general_bound",
    "generate_nonisomorphic",
    "griggs_c",
    "hujter_bound",
    "induced_subgraph",
    "is_connected",
    "is_factor_critical",
    "is_independent",
    "is_induced_matching",
    "is_maximal_independent",
    "is_saturated_by_all_maximum_matchings",
    "is_triangle_free",
    "make_basic",
    "matching_number",
    "maximum_matching",
    "moon_moser",
    "neighborhood",
    "parse_graph6",
    "recognize",
    "to_graph6",
    "trianglefree_bound_m",
]
