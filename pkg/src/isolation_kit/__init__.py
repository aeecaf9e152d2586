"""F-isolation numbers for patterns with a dominating vertex.

An F-isolating set of ``G`` is a vertex set ``D`` such that ``G - N[D]`` has
no subgraph isomorphic to ``F``.  For a connected ``m``-edge graph and a
``k``-edge pattern with a dominating vertex, some isolating set has at most
``floor((m+1)/(k+2))`` vertices unless ``G`` is itself a copy of ``F`` or
``(G, F)`` is (6-cycle, 3-path).
"""

from .constructions import BuiltSpecial, SpecialGraphSpec, build_special, verify_special
from .estimators import GraphIsolator
from .exact import ExactResult, gamma, iota_exact, is_isolating
from .exceptions import (
    EdgeListError,
    GraphValidationError,
    IsolationError,
    PatternTooSmall,
    ProofInvariantViolated,
    SolverError,
    SpecialPairInput,
    UnsupportedError,
)
from .graph import (
    Graph,
    SubgraphHandle,
    canonical_form,
    closed_neighborhood,
    components,
    delete_edges,
    delete_vertices,
    edges_between,
    is_isomorphic,
    make_graph,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from .harness import Corpus, VerificationReport, enumerate_connected, find_extremal, random_connected, verify_corpus
from .patterns import CopyWitness, Pattern, builtin_pattern, contains_copy, find_copy_centers, is_special_pair, make_pattern
from .proof import CaseStep, Certificate, bound, isolate
from .validation import check_graph, check_pattern

__version__ = "0.1.0"
