import itertools
from collections.abc import Callable, Sequence

from coprime_divisor.graphs import Graph, product_label
from coprime_divisor.groups import EnumeratedGroup, GroupSpec, enumerate_elements
from coprime_divisor.recognition import Orientation, lex_orientation

# Decides, for element indices i < j, whether they are adjacent and in which direction.
_ArcRule = Callable[[int, int], tuple[int, int] | None]


def _element_graph(group: EnumeratedGroup, rule: _ArcRule) -> tuple[Graph, Orientation]:
    labels = [group.label(i) for i in range(group.size)]
    arcs: list[tuple[str, str]] = []
    for i in range(group.size):
        for j in range(i + 1, group.size):
            if (arc := rule(i, j)) is not None:
                arcs.append((labels[arc[0]], labels[arc[1]]))
    graph = Graph(labels, arcs)
    return graph, Orientation.from_arcs(graph, arcs)


def _subgroups(group: EnumeratedGroup) -> list[frozenset[int]]:
    return [group.cyclic_subgroup(i) for i in range(group.size)]


def oriented_power_graph(spec: GroupSpec, element_cap: int | None = None) -> tuple[Graph, Orientation]:
    """Power graph with its canonical transitive orientation.

    Arcs run from the element generating the larger cyclic subgroup to the one
    generating the smaller; elements generating the same subgroup form a clique
    oriented by element index.
    """
    group = enumerate_elements(spec, element_cap)
    subgroups = _subgroups(group)

    def rule(i: int, j: int) -> tuple[int, int] | None:
        if subgroups[i] == subgroups[j]:
            return (i, j)
        if j in subgroups[i]:
            return (i, j)
        if i in subgroups[j]:
            return (j, i)
        return None

    return _element_graph(group, rule)


def oriented_reduced_power_graph(spec: GroupSpec, element_cap: int | None = None) -> tuple[Graph, Orientation]:
    """Reduced power graph, oriented from the strictly larger cyclic subgroup to the smaller."""
    group = enumerate_elements(spec, element_cap)
    subgroups = _subgroups(group)

    def rule(i: int, j: int) -> tuple[int, int] | None:
        if subgroups[j] < subgroups[i]:
            return (i, j)
        if subgroups[i] < subgroups[j]:
            return (j, i)
        return None

    return _element_graph(group, rule)


def _order_classes(orders: Sequence[int]) -> tuple[Graph, Orientation]:
    distinct = sorted(set(orders))
    arcs = [(str(a), str(b)) for i, a in enumerate(distinct) for b in distinct[i + 1 :] if b % a == 0]
    graph = Graph((str(m) for m in distinct), arcs)
    return graph, Orientation.from_arcs(graph, arcs)


def _index_clique(labels: Sequence[str]) -> tuple[Graph, Orientation]:
    arcs = list(itertools.combinations(labels, 2))
    graph = Graph(labels, arcs)
    return graph, Orientation.from_arcs(graph, arcs)


def oriented_order_graph(spec: GroupSpec, element_cap: int | None = None) -> tuple[Graph, Orientation]:
    """Order graph, oriented from divisor order to multiple order.

    The order graph is the lexicographic product of the order class graph with one
    clique per order, so its orientation is assembled from the class orientation
    and the cliques, each oriented by element index.
    """
    group = enumerate_elements(spec, element_cap)
    labels = [group.label(i) for i in range(group.size)]
    classes, class_orientation = _order_classes(group.orders)
    cliques = {
        m: _index_clique([label for label, order in zip(labels, group.orders, strict=True) if str(order) == m])
        for m in classes.vertices
    }
    _, product_orientation = lex_orientation(
        classes,
        class_orientation,
        {m: clique for m, (clique, _) in cliques.items()},
        {m: orientation for m, (_, orientation) in cliques.items()},
    )
    element = {product_label(str(order), label): label for label, order in zip(labels, group.orders, strict=True)}
    arcs = [(element[u], element[v]) for u, v in product_orientation.arcs]
    graph = Graph(labels, arcs)
    return graph, Orientation.from_arcs(graph, arcs)


def power_graph(spec: GroupSpec, element_cap: int | None = None) -> Graph:
    """Elements adjacent when one is a power of the other.

    Raises:
        ElementCapExceededError: If the group is larger than the element cap.
        SupportOnlySpectrumError: For a group known only by its element orders.
    """
    return oriented_power_graph(spec, element_cap)[0]


def reduced_power_graph(spec: GroupSpec, element_cap: int | None = None) -> Graph:
    """Elements adjacent when one generated cyclic subgroup strictly contains the other."""
    return oriented_reduced_power_graph(spec, element_cap)[0]


def order_graph(spec: GroupSpec, element_cap: int | None = None) -> Graph:
    """Elements adjacent when one order divides the other."""
    return oriented_order_graph(spec, element_cap)[0]


def l_graph(spec: GroupSpec, element_cap: int | None = None) -> tuple[Graph, Orientation]:
    """Strict-containment graph on the distinct cyclic subgroups.

    Each subgroup is labelled by the least index among its generators, and vertices
    are ordered by that index. Arcs run from the larger subgroup to the smaller.

    Returns:
        The graph and its transitive orientation.
    """
    group = enumerate_elements(spec, element_cap)
    representatives: dict[frozenset[int], int] = {}
    for i, subgroup in enumerate(_subgroups(group)):
        representatives.setdefault(subgroup, i)
    subgroups = list(representatives.items())
    arcs = [
        (str(i), str(j))
        for big, i in subgroups
        for small, j in subgroups
        if small < big
    ]
    graph = Graph((str(i) for _, i in subgroups), arcs)
    return graph, Orientation.from_arcs(graph, arcs)


def order_class_graph(spec: GroupSpec, element_cap: int | None = None) -> tuple[Graph, Orientation]:
    """Divisibility graph on the distinct element orders, oriented from divisor to multiple.

    Vertices are the orders as decimal strings, increasing.
    """
    return _order_classes(enumerate_elements(spec, element_cap).orders)
