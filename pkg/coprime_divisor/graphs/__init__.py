from .formats import format_edge_list, graph_to_dict, graph_to_json, parse_edge_list, read_edge_list, to_dot
from .graph import (
    Graph,
    StandardKind,
    graph_join,
    graph_union,
    induced_subgraph,
    is_isomorphic_small,
    lex_product,
    product_label,
    standard_graphs,
)

__all__ = [
    'Graph',
    'StandardKind',
    'format_edge_list',
    'graph_join',
    'graph_to_dict',
    'graph_to_json',
    'graph_union',
    'induced_subgraph',
    'is_isomorphic_small',
    'lex_product',
    'parse_edge_list',
    'product_label',
    'read_edge_list',
    'standard_graphs',
    'to_dot',
]
