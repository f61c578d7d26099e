import itertools
from dataclasses import dataclass

import pytest

from coprime_divisor.errors import InvalidOrientationError
from coprime_divisor.graphs import Graph, standard_graphs
from coprime_divisor.recognition import (
    Orientation,
    VertexKind,
    check_coverage,
    classify_vertices,
    find_transitivity_violation,
    validate_orientation,
)
from tests.helpers import graph_from_pairs


@dataclass
class OrientationCase:
    """An oriented graph and whether the orientation is transitive."""

    graph: Graph
    arcs: list[tuple[str, str]]
    transitive: bool


@pytest.mark.parametrize(
    'test_case',
    [
        OrientationCase(
            graph=graph_from_pairs('ab bc ac'), arcs=[('a', 'b'), ('b', 'c'), ('c', 'a')], transitive=False
        ),
        OrientationCase(
            graph=graph_from_pairs('ab bc ac'), arcs=[('a', 'b'), ('b', 'c'), ('a', 'c')], transitive=True
        ),
        OrientationCase(graph=graph_from_pairs('ab bc'), arcs=[('a', 'b'), ('c', 'b')], transitive=True),
        OrientationCase(graph=graph_from_pairs('ab bc'), arcs=[('a', 'b'), ('b', 'c')], transitive=False),
        OrientationCase(graph=Graph(['v']), arcs=[], transitive=True),
    ],
)
def test_validate_orientation(test_case: OrientationCase) -> None:
    """Test the transitivity check on small orientations."""
    orientation = Orientation.from_arcs(test_case.graph, test_case.arcs)
    assert validate_orientation(test_case.graph, orientation) is test_case.transitive
    violation = find_transitivity_violation(test_case.graph, orientation)
    assert (violation is None) is test_case.transitive


def test_violation_names_the_first_bad_triple() -> None:
    """Test the reported triple for a directed path."""
    g = graph_from_pairs('ab bc')
    orientation = Orientation.from_arcs(g, [('a', 'b'), ('b', 'c')])
    assert find_transitivity_violation(g, orientation) == ('a', 'b', 'c')


def test_from_arcs_sorts_by_vertex_position() -> None:
    """Test that arcs are stored in vertex order."""
    g = graph_from_pairs('ab bc ac')
    orientation = Orientation.from_arcs(g, [('c', 'b'), ('a', 'c'), ('a', 'b')])
    assert orientation.arcs == (('a', 'b'), ('a', 'c'), ('c', 'b'))


def test_from_order_orients_earlier_to_later(k4: Graph) -> None:
    """Test orientation along a vertex order."""
    orientation = Orientation.from_order(k4, ['3', '2', '1', '0'])
    assert ('3', '0') in orientation.arcs
    assert validate_orientation(k4, orientation)


@pytest.mark.parametrize(
    'arcs',
    [
        [('a', 'b')],
        [('a', 'b'), ('b', 'a'), ('b', 'c')],
        [('a', 'b'), ('b', 'c'), ('a', 'c')],
        [('a', 'b'), ('c', 'b'), ('a', 'z')],
    ],
)
def test_check_coverage_rejects_bad_arc_sets(arcs: list[tuple[str, str]]) -> None:
    """Test missing, doubled and spurious arcs."""
    g = graph_from_pairs('ab bc')
    with pytest.raises(InvalidOrientationError):
        check_coverage(g, Orientation(arcs=tuple(arcs)))


def test_classify_vertices_on_a_chain_and_a_cycle() -> None:
    """Test vertex kinds on a transitive and a cyclic triangle."""
    g = graph_from_pairs('ab bc ac', vertices='abcd')
    chain = Orientation.from_arcs(g, [('a', 'b'), ('b', 'c'), ('a', 'c')])
    assert classify_vertices(g, chain) == {'a': 'transmitter', 'b': 'transitive', 'c': 'receiver', 'd': 'transmitter'}
    cycle = Orientation.from_arcs(g, [('a', 'b'), ('b', 'c'), ('c', 'a')])
    kinds = classify_vertices(g, cycle)
    assert kinds['a'] == kinds['b'] == kinds['c'] == 'intransitive'


def _all_orientations(g: Graph) -> list[Orientation]:
    return [
        Orientation(arcs=tuple((u, v) if forward else (v, u) for (u, v), forward in zip(g.edges, choice, strict=True)))
        for choice in itertools.product((True, False), repeat=g.number_of_edges())
    ]


@pytest.mark.parametrize(
    'g',
    [
        standard_graphs('cycle', 4),
        standard_graphs('path', 4),
        standard_graphs('complete', 4),
        graph_from_pairs('ab bc cd da ac'),
        graph_from_pairs('ab ac ad be'),
    ],
)
def test_vertex_kinds_characterise_transitivity(g: Graph) -> None:
    """Test that an orientation is transitive exactly when no vertex is intransitive."""
    intransitive: VertexKind = 'intransitive'
    for orientation in _all_orientations(g):
        kinds = classify_vertices(g, orientation)
        assert validate_orientation(g, orientation) is (intransitive not in kinds.values())
