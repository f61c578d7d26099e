from .coprime import (
    IDENTITY_LABEL,
    RadicalGraph,
    coprime_graph,
    decompose_coprime,
    radical_graph,
    radical_graph_from_radicals,
    structure_graph,
    verify_structure_bijection,
)
from .power import (
    l_graph,
    order_class_graph,
    order_graph,
    oriented_order_graph,
    oriented_power_graph,
    oriented_reduced_power_graph,
    power_graph,
    reduced_power_graph,
)

__all__ = [
    'IDENTITY_LABEL',
    'RadicalGraph',
    'coprime_graph',
    'decompose_coprime',
    'l_graph',
    'order_class_graph',
    'order_graph',
    'oriented_order_graph',
    'oriented_power_graph',
    'oriented_reduced_power_graph',
    'power_graph',
    'radical_graph',
    'radical_graph_from_radicals',
    'reduced_power_graph',
    'structure_graph',
    'verify_structure_bijection',
]
