from collections.abc import Iterable, Sequence
from typing import Literal

from pydantic import BaseModel, ConfigDict

from coprime_divisor.errors import InvalidOrientationError
from coprime_divisor.graphs import Graph

Arc = tuple[str, str]
VertexKind = Literal['transmitter', 'receiver', 'transitive', 'intransitive']


class Orientation(BaseModel):
    """A direction for every edge of a graph.

    Attributes:
        arcs: Directed pairs ``(tail, head)``, one per undirected edge.
    """

    model_config = ConfigDict(frozen=True)

    arcs: tuple[Arc, ...]

    @classmethod
    def from_arcs(cls, g: Graph, arcs: Iterable[Arc]) -> 'Orientation':
        """Build an orientation of ``g``, sorting arcs by vertex position.

        Raises:
            InvalidOrientationError: If the arcs do not cover the edges of ``g`` exactly once.
        """
        orientation = cls(arcs=tuple(sorted(arcs, key=lambda arc: (g.position(arc[0]), g.position(arc[1])))))
        check_coverage(g, orientation)
        return orientation

    @classmethod
    def from_order(cls, g: Graph, order: Sequence[str]) -> 'Orientation':
        """Orient every edge of ``g`` from the earlier to the later vertex of ``order``."""
        rank = {v: i for i, v in enumerate(order)}
        return cls.from_arcs(g, ((u, v) if rank[u] < rank[v] else (v, u) for u, v in g.edges))

    def successors(self) -> dict[str, set[str]]:
        """Heads reachable by one arc, per tail."""
        result: dict[str, set[str]] = {}
        for tail, head in self.arcs:
            result.setdefault(tail, set()).add(head)
        return result

    def predecessors(self) -> dict[str, set[str]]:
        """Tails of the arcs entering each head."""
        result: dict[str, set[str]] = {}
        for tail, head in self.arcs:
            result.setdefault(head, set()).add(tail)
        return result


def check_coverage(g: Graph, o: Orientation) -> None:
    """Ensure ``o`` directs every edge of ``g`` exactly once and nothing else.

    Raises:
        InvalidOrientationError: On a missing, doubled or spurious arc.
    """
    seen: set[frozenset[str]] = set()
    for tail, head in o.arcs:
        if tail not in g or head not in g or not g.has_edge(tail, head):
            msg = f'Arc ({tail!r}, {head!r}) has no underlying edge.'
            raise InvalidOrientationError(msg)
        edge = frozenset((tail, head))
        if edge in seen:
            msg = f'Edge {{{tail!r}, {head!r}}} is directed more than once.'
            raise InvalidOrientationError(msg)
        seen.add(edge)
    if len(seen) != g.number_of_edges():
        missing = [(u, v) for u, v in g.edges if frozenset((u, v)) not in seen]
        msg = f'Edges without a direction: {missing}.'
        raise InvalidOrientationError(msg)


def find_transitivity_violation(g: Graph, o: Orientation) -> tuple[str, str, str] | None:
    """The first ``(x, y, z)``, in vertex order, with arcs ``x->y`` and ``y->z`` but no ``x->z``."""
    successors = o.successors()
    for x in g.vertices:
        out = successors.get(x, set())
        for y in sorted(out, key=g.position):
            for z in sorted(successors.get(y, set()), key=g.position):
                if z not in out:
                    return (x, y, z)
    return None


def validate_orientation(g: Graph, o: Orientation) -> bool:
    """Whether ``o`` is a transitive orientation of ``g``.

    Raises:
        InvalidOrientationError: If ``o`` does not cover exactly the edges of ``g``.
    """
    check_coverage(g, o)
    return find_transitivity_violation(g, o) is None


def classify_vertices(g: Graph, o: Orientation) -> dict[str, VertexKind]:
    """Tag each vertex as a transmitter, receiver, transitive or intransitive vertex.

    A transmitter has no entering arc (isolated vertices count as transmitters), a
    receiver has no leaving arc, and a transitive vertex has arcs both ways with
    ``u->w`` present for every ``u->v->w``. The orientation is transitive exactly
    when no vertex is intransitive.

    Raises:
        InvalidOrientationError: If ``o`` does not cover exactly the edges of ``g``.
    """
    check_coverage(g, o)
    successors = o.successors()
    predecessors = o.predecessors()
    kinds: dict[str, VertexKind] = {}
    for v in g.vertices:
        ins = predecessors.get(v, set())
        outs = successors.get(v, set())
        if not ins:
            kinds[v] = 'transmitter'
        elif not outs:
            kinds[v] = 'receiver'
        elif all(w in successors.get(u, set()) for u in ins for w in outs):
            kinds[v] = 'transitive'
        else:
            kinds[v] = 'intransitive'
    return kinds
