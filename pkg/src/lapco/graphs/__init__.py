from .canonical import canonical_form, canonical_graph, canonical_labeling, is_isomorphic
from .families import (
    FamilySpec,
    FamilySpecError,
    RootedTree,
    build_bst,
    build_u,
    compose_cycle_trees,
    cycle_graph,
    max_minimal_tail,
    path_graph,
    recognize_u,
    star_graph,
)
from .graph import (
    DuplicateEdgeError,
    Graph,
    GraphError,
    NotATreeError,
    SelfLoopError,
    VertexRangeError,
    from_networkx,
    make_graph,
)
from .structure import (
    PendantPath,
    StructuralReport,
    UnicyclicLayout,
    classify,
    pendant_path_from,
    pendant_paths,
    unicyclic_layout,
)
