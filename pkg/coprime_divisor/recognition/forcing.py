from collections import deque

from coprime_divisor.graphs import Graph
from coprime_divisor.logger import logger

from .orientation import Arc, Orientation, find_transitivity_violation
from .verdict import ForcingContradiction, NotOrientable, TransitivityViolation


def _path_to(arc: Arc, parents: dict[Arc, Arc | None]) -> tuple[Arc, ...]:
    path = [arc]
    while (parent := parents[path[-1]]) is not None:
        path.append(parent)
    return tuple(reversed(path))


class _ImplicationClasses:
    """Decompose the edges of a graph into implication classes, peeling one class at a time.

    An arc ``a->b`` forces ``a->c`` whenever ``ac`` is an edge and ``bc`` is not,
    and forces ``c->b`` whenever ``cb`` is an edge and ``ac`` is not. Each class is
    grown inside the graph of the edges not yet assigned, then removed from it.
    """

    _g: Graph
    _remaining: dict[str, set[str]]

    def __init__(self, g: Graph) -> None:
        self._g = g
        self._remaining = {v: set(g.neighbors(v)) for v in g.vertices}

    def _ordered(self, vertices: set[str]) -> list[str]:
        return sorted(vertices, key=self._g.position)

    def _forced_by(self, arc: Arc) -> list[Arc]:
        a, b = arc
        rem = self._remaining
        forced = [(a, c) for c in self._ordered(rem[a]) if c != b and c not in rem[b]]
        forced += [(c, b) for c in self._ordered(rem[b]) if c != a and c not in rem[a]]
        return forced

    def grow(self, seed: Arc) -> dict[Arc, Arc | None] | ForcingContradiction:
        """Collect the implication class of ``seed``, with the arc that forced each member."""
        parents: dict[Arc, Arc | None] = {seed: None}
        queue = deque([seed])
        while queue:
            arc = queue.popleft()
            for forced in self._forced_by(arc):
                if forced in parents:
                    continue
                parents[forced] = arc
                reverse = (forced[1], forced[0])
                if reverse in parents:
                    return ForcingContradiction(
                        seed=seed,
                        forced=_path_to(forced, parents),
                        reverse=_path_to(reverse, parents),
                    )
                queue.append(forced)
        return parents

    def remove(self, arcs: list[Arc]) -> None:
        for u, v in arcs:
            self._remaining[u].discard(v)
            self._remaining[v].discard(u)

    def is_undecided(self, u: str, v: str) -> bool:
        return v in self._remaining[u]


def find_transitive_orientation(g: Graph) -> Orientation | NotOrientable:
    """Find a transitive orientation of ``g`` or explain why none exists.

    The least undecided edge (by vertex position) is oriented from its earlier to its
    later endpoint, its implication class is grown by forcing, and the class is
    removed before the next seed is picked. A class holding an edge in both
    directions proves ``g`` is not a comparability graph. The assembled orientation
    is checked for transitivity before it is returned.

    Args:
        g: Any graph.

    Returns:
        The orientation, or a ForcingContradiction / TransitivityViolation witness.
    """
    classes = _ImplicationClasses(g)
    arcs: list[Arc] = []
    class_count = 0
    for u, v in g.edges:
        if not classes.is_undecided(u, v):
            continue
        grown = classes.grow((u, v))
        if isinstance(grown, ForcingContradiction):
            logger.info(
                'forcing_contradiction',
                extra={'vertices': len(g), 'seed': grown.seed, 'steps': len(grown.forced) + len(grown.reverse)},
            )
            return grown
        class_arcs = list(grown)
        classes.remove(class_arcs)
        arcs.extend(class_arcs)
        class_count += 1

    orientation = Orientation.from_arcs(g, arcs)
    if (triple := find_transitivity_violation(g, orientation)) is not None:
        logger.warning('transitivity_violation', extra={'vertices': len(g), 'triple': triple})
        return TransitivityViolation(triple=triple)
    logger.debug('transitive_orientation_found', extra={'vertices': len(g), 'classes': class_count})
    return orientation
