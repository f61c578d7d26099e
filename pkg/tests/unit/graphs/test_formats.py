from pathlib import Path

import orjson
import pytest

from coprime_divisor.errors import EdgeListEncodingError, EdgeListFormatError, InvalidGraphError
from coprime_divisor.graphs import (
    Graph,
    format_edge_list,
    graph_to_json,
    parse_edge_list,
    read_edge_list,
    standard_graphs,
    to_dot,
)
from tests.helpers import EdgeListFile


def test_parse_edge_list_skips_comments_and_declares_isolated_vertices() -> None:
    """Test comments, blank lines and single-label lines."""
    g = parse_edge_list('# a path plus an isolated vertex\na b\n\n  d  \nb c\n')
    assert g.vertices == ('a', 'b', 'd', 'c')
    assert g.edges == (('a', 'b'), ('b', 'c'))


def test_parse_edge_list_rejects_long_lines() -> None:
    """Test that a line with three labels is reported with its number."""
    with pytest.raises(EdgeListFormatError) as excinfo:
        _ = parse_edge_list('a b\na b c\n')
    assert excinfo.value.line_number == 2
    assert excinfo.value.line == 'a b c'


def test_parse_edge_list_rejects_loops() -> None:
    """Test that a loop line is invalid."""
    with pytest.raises(InvalidGraphError):
        _ = parse_edge_list('a a\n')


def test_format_edge_list_round_trips(net_graph: Graph) -> None:
    """Test that formatting declares every vertex so parsing restores the same graph."""
    isolated = Graph(['p', 'q', 'r'], [('q', 'r')])
    for g in (net_graph, isolated):
        assert parse_edge_list(format_edge_list(g)) == g


def test_read_edge_list(tmp_path: Path) -> None:
    """Test reading from a file."""
    path = EdgeListFile(name='k3.txt', text='0 1\n0 2\n1 2\n').write(tmp_path)
    assert read_edge_list(path) == standard_graphs('complete', 3)


def test_read_edge_list_rejects_invalid_utf8(tmp_path: Path) -> None:
    path = tmp_path / 'latin1.txt'
    _ = path.write_bytes(b'a b\nc \xff\n')
    with pytest.raises(EdgeListEncodingError) as exc_info:
        _ = read_edge_list(path)
    assert exc_info.value.offset == 6
    assert exc_info.value.path == path


def test_to_dot_undirected() -> None:
    """Test the undirected DOT rendering."""
    assert to_dot(standard_graphs('complete', 2)) == 'graph "G" {\n  "0";\n  "1";\n  "0" -- "1";\n}\n'


def test_to_dot_directed_quotes_labels() -> None:
    """Test arcs and label escaping in the directed rendering."""
    g = Graph(['say "hi"', 'b'], [('say "hi"', 'b')])
    dot = to_dot(g, arcs=[('b', 'say "hi"')], name='oriented')
    assert dot.startswith('digraph "oriented" {\n')
    assert '  "b" -> "say \\"hi\\"";\n' in dot


def test_graph_to_json() -> None:
    """Test the JSON export."""
    payload = orjson.loads(graph_to_json(standard_graphs('path', 3)))
    assert payload == {'vertices': ['0', '1', '2'], 'edges': [['0', '1'], ['1', '2']]}
