"""Tree cubes at desk scale: structure, roots, and deck reconstruction.

The library characterizes graphs isomorphic to the third power of a tree,
extracts cube roots (unique except for complete graphs), and runs the
deck-based recognition/weak-reconstruction pipeline, with exhaustive
verification sweeps over all free trees up to a configurable order.
"""

from .cubes import (
    CliqueRecord,
    RootKind,
    RootResult,
    clique_edges_of_tree,
    cliques_of_cube,
    cube_root,
    cube_root_oracle,
    is_tree_cube,
    kth_order_terminal_cliques,
    maximal_cliques,
    terminal_cliques,
    terminal_vertices,
    tree_of_cliques,
)
from .deck import (
    CardSelection,
    Deck,
    ReconstructionReport,
    SelectedCard,
    deck,
    deck_check,
    deck_to_text,
    parse_deck,
    recognize,
    reconstruct,
    select_cube_cards,
    tree_from_endpoint_deck,
)
from .errors import (
    AmbiguousStructureError,
    DisconnectedError,
    EnumerationLimitError,
    GraphParseError,
    NotACubeError,
    NotATreeDeckError,
    NotATreeError,
    OrderTooSmallError,
    TreecubeError,
)
from .graphs import (
    CanonicalForm,
    DistanceMatrix,
    LabeledGraph,
    all_pairs_distances,
    canonical_form,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    delete_vertex,
    delete_vertices,
    diameter,
    eccentricity,
    edge_distance,
    edge_span,
    edge_vertex_distance,
    induced_subgraph,
    is_complete,
    is_connected,
    is_isomorphic,
    isomorphism,
    parse_graph,
    path_graph,
    peripheral_vertices,
    power,
    relabel,
    serialize_graph,
    star_graph,
    to_edgelist,
    to_graph6,
    vertex_span,
)
from .harness import (
    CollisionPair,
    CollisionResult,
    VerificationReport,
    collide,
    endpoint_precision_counterexamples,
    internal_cube_cards,
    noncube_corpus,
    run_suite,
)
from .trees import (
    LeafOrderPartition,
    Tree,
    WeightedTree,
    ahu_code,
    centers,
    core_vertices,
    end_deleted,
    enumerate_trees,
    expand,
    is_tree,
    k_periphery,
    kth_order_terminal_edges,
    leaf_orders,
    leaves,
    max_enumeration_order,
    terminal_edges,
    weighted_form,
)

__version__ = "0.1.0"
