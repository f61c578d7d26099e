from collections.abc import Iterable, Iterator, Mapping
from typing import Literal

import networkx as nx

from coprime_divisor.config import CoprimeDivisorConfig
from coprime_divisor.errors import (
    InvalidGraphError,
    MissingFiberError,
    OverlappingLabelsError,
    ParameterOutOfBoundsError,
    SizeCapExceededError,
    UnknownVertexError,
)

StandardKind = Literal['complete', 'edgeless', 'path', 'cycle']


class Graph:
    """Finite simple undirected graph with ordered string vertex labels.

    The adjacency lives in a frozen networkx graph; vertex order is the insertion
    order and every iteration (vertices, neighbors, edges) follows it.

    Args:
        vertices: Distinct vertex labels, in order.
        edges: Unordered label pairs; repeated pairs collapse into one edge.

    Raises:
        InvalidGraphError: On duplicate labels or a loop.
        UnknownVertexError: When an edge endpoint is not a vertex.
    """

    __slots__ = ('_graph', '_neighbors', '_position', '_vertices')

    _graph: nx.Graph
    _vertices: tuple[str, ...]
    _position: dict[str, int]
    _neighbors: dict[str, tuple[str, ...]]

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()) -> None:
        self._vertices = tuple(vertices)
        self._position = {v: i for i, v in enumerate(self._vertices)}
        if len(self._position) != len(self._vertices):
            duplicates = sorted({v for v in self._vertices if self._vertices.count(v) > 1})
            msg = f'Duplicate vertex labels {duplicates}.'
            raise InvalidGraphError(msg)

        graph = nx.Graph()
        graph.add_nodes_from(self._vertices)
        for u, v in edges:
            if unknown := {u, v} - self._position.keys():
                raise UnknownVertexError(unknown)
            if u == v:
                msg = f'Loop at vertex {u!r}.'
                raise InvalidGraphError(msg)
            graph.add_edge(u, v)
        self._graph = nx.freeze(graph)
        self._neighbors = {
            v: tuple(sorted(graph.adj[v], key=self._position.__getitem__)) for v in self._vertices
        }

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> 'Graph':
        """Wrap a networkx graph, labelling nodes by ``str(node)`` in sorted node order."""
        nodes = sorted(graph.nodes)  # pyright: ignore[reportUnknownArgumentType, reportUnknownVariableType]
        return cls(
            (str(node) for node in nodes),  # pyright: ignore[reportUnknownVariableType]
            ((str(u), str(v)) for u, v in graph.edges),  # pyright: ignore[reportUnknownVariableType]
        )

    @property
    def vertices(self) -> tuple[str, ...]:
        """Vertex labels in order."""
        return self._vertices

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        """Edges as ``(earlier, later)`` pairs, sorted by vertex position."""
        pairs = [(u, w) for u in self._vertices for w in self._neighbors[u] if self._position[u] < self._position[w]]
        return tuple(pairs)

    @property
    def nx_graph(self) -> nx.Graph:
        """The frozen networkx view of the adjacency."""
        return self._graph

    def number_of_edges(self) -> int:
        return self._graph.number_of_edges()

    def position(self, v: str) -> int:
        """Index of ``v`` in the vertex order."""
        try:
            return self._position[v]
        except KeyError as e:
            raise UnknownVertexError([v]) from e

    def neighbors(self, v: str) -> tuple[str, ...]:
        """Neighbors of ``v`` in vertex order."""
        try:
            return self._neighbors[v]
        except KeyError as e:
            raise UnknownVertexError([v]) from e

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: str, v: str) -> bool:
        return self._graph.has_edge(u, v)

    def relabel(self, mapping: Mapping[str, str]) -> 'Graph':
        """Rename vertices, keeping their order; unmapped labels stay as they are."""
        rename = {v: mapping.get(v, v) for v in self._vertices}
        return Graph(rename.values(), ((rename[u], rename[v]) for u, v in self.edges))

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._position

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and set(self.edges) == set(other.edges)

    def __hash__(self) -> int:
        return hash((self._vertices, frozenset(self.edges)))

    def __repr__(self) -> str:
        return f'Graph(vertices={len(self)}, edges={self.number_of_edges()})'


def induced_subgraph(g: Graph, keep: Iterable[str]) -> Graph:
    """Subgraph of ``g`` induced by ``keep``, in ``g``'s vertex order.

    Raises:
        UnknownVertexError: If ``keep`` names a label outside ``g``.
    """
    kept = set(keep)
    if unknown := [v for v in kept if v not in g]:
        raise UnknownVertexError(unknown)
    return Graph(
        (v for v in g.vertices if v in kept),
        ((u, v) for u, v in g.edges if u in kept and v in kept),
    )


def _check_disjoint(g1: Graph, g2: Graph) -> None:
    if shared := set(g1.vertices) & set(g2.vertices):
        raise OverlappingLabelsError(shared)


def graph_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; ``g1``'s vertices come first.

    Raises:
        OverlappingLabelsError: If the label sets intersect.
    """
    _check_disjoint(g1, g2)
    return Graph((*g1.vertices, *g2.vertices), (*g1.edges, *g2.edges))


def graph_join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between ``g1`` and ``g2``.

    Raises:
        OverlappingLabelsError: If the label sets intersect.
    """
    _check_disjoint(g1, g2)
    cross = ((u, v) for u in g1.vertices for v in g2.vertices)
    return Graph((*g1.vertices, *g2.vertices), (*g1.edges, *g2.edges, *cross))


def product_label(v: str, w: str) -> str:
    """Vertex label of ``(v, w)`` in a lexicographic product."""
    return f'({v},{w})'


def lex_product(h: Graph, fibers: Mapping[str, Graph]) -> Graph:
    """Generalized lexicographic product ``h[F]``.

    ``(v1, w1)`` and ``(v2, w2)`` are adjacent when ``{v1, v2}`` is an edge of ``h``,
    or ``v1 == v2`` and ``{w1, w2}`` is an edge of the fiber at ``v1``. Vertices
    are ordered by ``h`` first and by fiber second.

    Args:
        h: The outer graph.
        fibers: A graph for every vertex of ``h``; fiber labels may repeat across fibers.

    Returns:
        The product, with vertices labelled ``'(v,w)'``.

    Raises:
        MissingFiberError: If a vertex of ``h`` has no fiber.
    """
    for v in h.vertices:
        if v not in fibers:
            raise MissingFiberError(v)
    vertices = [product_label(v, w) for v in h.vertices for w in fibers[v].vertices]
    inner = [(product_label(v, a), product_label(v, b)) for v in h.vertices for a, b in fibers[v].edges]
    outer = [
        (product_label(u, a), product_label(v, b))
        for u, v in h.edges
        for a in fibers[u].vertices
        for b in fibers[v].vertices
    ]
    return Graph(vertices, inner + outer)


def standard_graphs(kind: StandardKind, n: int, prefix: str = '') -> Graph:
    """Build a complete, edgeless, path or cycle graph on vertices ``prefix + '0'`` .. ``prefix + str(n - 1)``.

    Raises:
        ParameterOutOfBoundsError: If ``n < 1``, or ``n < 3`` for a cycle.
    """
    minimum = 3 if kind == 'cycle' else 1
    if n < minimum:
        raise ParameterOutOfBoundsError('n', n, f'n >= {minimum} for {kind} graphs')
    match kind:
        case 'complete':
            graph = nx.complete_graph(n)
        case 'edgeless':
            graph = nx.empty_graph(n)
        case 'path':
            graph = nx.path_graph(n)
        case 'cycle':
            graph = nx.cycle_graph(n)
    return Graph(
        (f'{prefix}{i}' for i in range(n)),
        ((f'{prefix}{u}', f'{prefix}{v}') for u, v in graph.edges),  # pyright: ignore[reportUnknownVariableType]
    )


def is_isomorphic_small(g1: Graph, g2: Graph, cap: int | None = None) -> bool:
    """Whether an adjacency-preserving bijection between ``g1`` and ``g2`` exists.

    Uses networkx's VF2 matcher, a backtracking search pruned by degree and
    neighbourhood feasibility.

    Raises:
        SizeCapExceededError: If either graph has more vertices than the cap.
    """
    limit = cap if cap is not None else CoprimeDivisorConfig.from_env().isomorphism_cap
    for g in (g1, g2):
        if len(g) > limit:
            raise SizeCapExceededError('is_isomorphic_small', len(g), limit)
    return nx.is_isomorphic(g1.nx_graph, g2.nx_graph)
