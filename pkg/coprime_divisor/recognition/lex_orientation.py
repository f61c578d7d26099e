from collections.abc import Mapping

from coprime_divisor.errors import MissingFiberError
from coprime_divisor.graphs import Graph, lex_product, product_label

from .orientation import Orientation


def lex_orientation(
    h: Graph,
    h_orientation: Orientation,
    fibers: Mapping[str, Graph],
    fiber_orientations: Mapping[str, Orientation],
) -> tuple[Graph, Orientation]:
    """Orient a lexicographic product from orientations of its outer graph and fibers.

    Every arc ``u->v`` of ``h`` becomes all arcs from the fiber at ``u`` to the fiber
    at ``v``, and fiber arcs stay inside their copy. The result is transitive when
    every input orientation is.

    Returns:
        ``lex_product(h, fibers)`` and its orientation.

    Raises:
        MissingFiberError: If a vertex of ``h`` has no fiber or no fiber orientation.
    """
    for v in h.vertices:
        if v not in fiber_orientations:
            raise MissingFiberError(v)
    product = lex_product(h, fibers)
    arcs = [
        (product_label(u, a), product_label(v, b))
        for u, v in h_orientation.arcs
        for a in fibers[u].vertices
        for b in fibers[v].vertices
    ]
    arcs += [(product_label(v, a), product_label(v, b)) for v in h.vertices for a, b in fiber_orientations[v].arcs]
    return product, Orientation.from_arcs(product, arcs)
