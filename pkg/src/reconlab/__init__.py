"""Exact checks for vertex-deleted decks, hypomorphism and path-count claims."""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    Graph,
    GraphError,
    block_count_at,
    build_graph,
    component_count,
    degree,
    delete_vertex,
    edge_count,
    is_cutnode,
    is_eulerian,
    relabel,
)
from .canon import CanonicalForm, CapacityError, Deck, are_isomorphic, canonical_form, deck  # noqa: E402
from .paths import (  # noqa: E402
    check_path_sum_identity,
    count_paths_at,
    count_paths_at_oracle,
    count_paths_pair,
)
from .hypo import (  # noqa: E402
    Matching,
    are_hypomorphic,
    card_valid_matchings,
    enumerate_graphs,
    find_hypomorphic_pairs,
)
from .claims import (  # noqa: E402
    ClaimId,
    aggregate_over_matchings,
    verify_claims,
    verify_single_graph_claims,
)
from .graph6 import emit_graph6, parse_graph6  # noqa: E402
