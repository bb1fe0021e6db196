from .category import (
    FinCategory,
    FinFunctor,
    check_category,
    check_functor,
    opposite,
    same_category,
    terminal_category,
    discrete_category,
    graph_indexing_category,
    poset_category,
    chain_category,
    commutative_square,
    monoid_category,
    free_category,
    random_category,
    monotone_map_category,
)
from .copresheaf import (
    Copresheaf,
    check_copresheaf,
    check_copresheaf_map,
    identity_map,
    compose_maps,
    representable,
    terminal_copresheaf,
    empty_copresheaf,
    set_copresheaf,
    terminal,
    restrict_along,
    coproduct,
)
from .graphs import (
    G,
    graph,
    vec,
    ul,
    disjoint_paths,
    disjoint_edges,
    underlying_graph,
    to_networkx,
    longest_path_length,
)
from .elements import (
    ElementsDiagram,
    Colimit,
    Limit,
    category_of_elements,
    colimit_over_elements,
    limit_over_elements,
)
from .homs import iter_copresheaf_maps, enumerate_copresheaf_maps, count_maps, element_order, map_weight
from .iso import find_isomorphism, is_isomorphism

__all__ = [
    "FinCategory",
    "FinFunctor",
    "check_category",
    "check_functor",
    "opposite",
    "same_category",
    "terminal_category",
    "discrete_category",
    "graph_indexing_category",
    "poset_category",
    "chain_category",
    "commutative_square",
    "monoid_category",
    "free_category",
    "random_category",
    "monotone_map_category",
    "Copresheaf",
    "check_copresheaf",
    "check_copresheaf_map",
    "identity_map",
    "compose_maps",
    "representable",
    "terminal_copresheaf",
    "empty_copresheaf",
    "set_copresheaf",
    "terminal",
    "restrict_along",
    "coproduct",
    "G",
    "graph",
    "vec",
    "ul",
    "disjoint_paths",
    "disjoint_edges",
    "underlying_graph",
    "to_networkx",
    "longest_path_length",
    "ElementsDiagram",
    "Colimit",
    "Limit",
    "category_of_elements",
    "colimit_over_elements",
    "limit_over_elements",
    "iter_copresheaf_maps",
    "enumerate_copresheaf_maps",
    "count_maps",
    "element_order",
    "map_weight",
    "find_isomorphism",
    "is_isomorphism",
]
