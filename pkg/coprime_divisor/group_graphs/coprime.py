from collections import Counter
from dataclasses import dataclass
from math import gcd

from coprime_divisor.graphs import Graph, graph_join, lex_product, product_label, standard_graphs
from coprime_divisor.groups import GroupSpec, OrderSpectrum, enumerate_elements, order_spectrum, radical
from coprime_divisor.logger import logger
from coprime_divisor.rendering import dumps_json

IDENTITY_LABEL = 'e'


def coprime_graph(spec: GroupSpec, element_cap: int | None = None) -> Graph:
    """Coprime graph: one vertex per element, adjacent when the element orders are coprime.

    Vertices are labelled ``'<index>:<order>'``; the identity is adjacent to every
    other element.

    Raises:
        ElementCapExceededError: If the group is larger than the element cap.
        SupportOnlySpectrumError: For a group known only by its element orders.
    """
    group = enumerate_elements(spec, element_cap)
    labels = [group.label(i) for i in range(group.size)]
    orders = group.orders
    edges = [
        (labels[i], labels[j])
        for i in range(group.size)
        for j in range(i + 1, group.size)
        if gcd(orders[i], orders[j]) == 1
    ]
    return Graph(labels, edges)


@dataclass(frozen=True)
class RadicalGraph:
    """Coprimality graph on the radicals of the non-identity element orders.

    Attributes:
        graph: Vertices are the radicals as decimal strings, in increasing order.
        radicals: The radicals, increasing; every one is squarefree and greater than 1.
    """

    graph: Graph
    radicals: tuple[int, ...]

    def to_dict(self) -> dict[str, list[int] | list[list[int]]]:
        return {
            'radicals': list(self.radicals),
            'edges': [[int(u), int(v)] for u, v in self.graph.edges],
        }

    def to_json(self) -> bytes:
        """``{"radicals": [...], "edges": [[x, y], ...]}``."""
        return dumps_json(self.to_dict())


def radical_graph_from_radicals(radicals: set[int] | frozenset[int] | tuple[int, ...]) -> RadicalGraph:
    """Coprimality graph on the given squarefree integers."""
    ordered = tuple(sorted(set(radicals)))
    edges = [
        (str(x), str(y)) for i, x in enumerate(ordered) for y in ordered[i + 1 :] if gcd(x, y) == 1
    ]
    return RadicalGraph(graph=Graph((str(x) for x in ordered), edges), radicals=ordered)


def radical_graph(spectrum: OrderSpectrum) -> RadicalGraph:
    """Quotient of the coprime graph: one vertex per radical of a non-identity element order.

    Args:
        spectrum: Element orders; only the support is needed.

    Returns:
        The radical graph, whose divisor-graph status equals that of the coprime graph.
    """
    return radical_graph_from_radicals({radical(m) for m in spectrum.pi_e})


def decompose_coprime(spec: GroupSpec, element_cap: int | None = None) -> tuple[RadicalGraph, dict[int, int]]:
    """Split the coprime graph into its radical graph and the size of each radical class.

    The coprime graph is isomorphic to the identity joined with the lexicographic
    product of the radical graph and edgeless fibers of these sizes.

    Raises:
        SupportOnlySpectrumError: When multiplicities are unknown.
    """
    spectrum = order_spectrum(spec, element_cap)
    sizes: Counter[int] = Counter()
    for m, count in spectrum.require_counts().items():
        if m > 1:
            sizes[radical(m)] += count
    return radical_graph(spectrum), dict(sorted(sizes.items()))


def structure_graph(radicals: RadicalGraph, class_sizes: dict[int, int]) -> Graph:
    """``K1`` joined with the radical graph blown up by edgeless fibers of the class sizes."""
    fibers = {str(r): standard_graphs('edgeless', class_sizes[r]) for r in radicals.radicals}
    return graph_join(Graph([IDENTITY_LABEL]), lex_product(radicals.graph, fibers))


def verify_structure_bijection(spec: GroupSpec, element_cap: int | None = None) -> bool:
    """Check the coprime graph against its radical decomposition through an explicit bijection.

    The identity maps to the joined vertex, and the k-th element (by index) whose
    order has radical ``r`` maps to ``(r, k)``. Adjacency is compared on every pair,
    so no isomorphism search is needed.
    """
    group = enumerate_elements(spec, element_cap)
    coprime = coprime_graph(spec, element_cap)
    radicals, sizes = decompose_coprime(spec, element_cap)
    target = structure_graph(radicals, sizes)

    seen: Counter[int] = Counter()
    image: list[str] = []
    for i in range(group.size):
        if i == 0:
            image.append(IDENTITY_LABEL)
            continue
        r = radical(group.orders[i])
        image.append(product_label(str(r), str(seen[r])))
        seen[r] += 1

    labels = coprime.vertices
    for i in range(group.size):
        for j in range(i + 1, group.size):
            if coprime.has_edge(labels[i], labels[j]) != target.has_edge(image[i], image[j]):
                logger.error(
                    'structure_bijection_mismatch',
                    extra={'group': spec.describe(), 'pair': (labels[i], labels[j])},
                )
                return False
    return True
