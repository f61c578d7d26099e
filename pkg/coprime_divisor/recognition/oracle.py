from coprime_divisor.config import CoprimeDivisorConfig
from coprime_divisor.errors import SizeCapExceededError
from coprime_divisor.graphs import Graph


def _completes_cleanly(g: Graph, prefix: list[str], candidate: str) -> bool:
    # No x < y < candidate with x~y, y~candidate and x !~ candidate.
    for j, y in enumerate(prefix):
        if not g.has_edge(y, candidate):
            continue
        for x in prefix[:j]:
            if g.has_edge(x, y) and not g.has_edge(x, candidate):
                return False
    return True


def brute_force_order(g: Graph, cap: int | None = None) -> tuple[str, ...] | None:
    """Search the vertex orderings for one whose earlier-to-later orientation is transitive.

    Orderings are extended one vertex at a time, pruning any prefix that already
    contains a violating triple.

    Args:
        g: The graph.
        cap: Maximum number of vertices, defaults to the configured oracle cap.

    Returns:
        A witnessing order, or None when there is none.

    Raises:
        SizeCapExceededError: If ``g`` has more vertices than the cap.
    """
    limit = cap if cap is not None else CoprimeDivisorConfig.from_env().oracle_cap
    if len(g) > limit:
        raise SizeCapExceededError('brute_force_is_divisor', len(g), limit)

    prefix: list[str] = []
    unused = dict.fromkeys(g.vertices)

    def extend() -> bool:
        if not unused:
            return True
        for candidate in list(unused):
            if not _completes_cleanly(g, prefix, candidate):
                continue
            prefix.append(candidate)
            del unused[candidate]
            if extend():
                return True
            prefix.pop()
            unused[candidate] = None
        return False

    return tuple(prefix) if extend() else None


def brute_force_is_divisor(g: Graph, cap: int | None = None) -> bool:
    """Oracle for the divisor-graph property by exhaustive search over vertex orderings.

    Any transitive orientation is a strict partial order, and orienting along one of
    its linear extensions reproduces it, so searching orderings is complete.

    Raises:
        SizeCapExceededError: If ``g`` has more than ``cap`` (default 9) vertices.
    """
    return brute_force_order(g, cap) is not None
