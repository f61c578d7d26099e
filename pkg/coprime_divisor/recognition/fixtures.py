from coprime_divisor.graphs import Graph


def net_graph_fixture() -> Graph:
    """The net: triangle ``abc`` with pendants ``cx``, ``by`` and ``az``.

    It is the coprime structure of element orders ``p, q, r, pq, pr, qr`` (each
    composite order hangs off the one prime it is coprime to) and the smallest
    block graph that is not a divisor graph.
    """
    return Graph(
        ['a', 'b', 'c', 'x', 'y', 'z'],
        [('a', 'b'), ('a', 'c'), ('b', 'c'), ('c', 'x'), ('b', 'y'), ('a', 'z')],
    )
