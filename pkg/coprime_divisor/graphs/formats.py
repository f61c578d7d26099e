from collections.abc import Iterable
from pathlib import Path

from coprime_divisor.errors import EdgeListEncodingError, EdgeListFormatError
from coprime_divisor.rendering import dumps_json, render_template

from .graph import Graph


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    One ``u v`` pair per line; a line holding a single label declares a (possibly
    isolated) vertex; blank lines and lines starting with ``#`` are ignored.
    Vertices are ordered by first appearance.

    Raises:
        EdgeListFormatError: For a line with more than two labels.
        InvalidGraphError: For a loop ``v v``.
    """
    vertices: dict[str, None] = {}
    edges: list[tuple[str, str]] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        labels = stripped.split()
        if len(labels) > 2:
            raise EdgeListFormatError(line_number, line)
        vertices.update(dict.fromkeys(labels))
        if len(labels) == 2:
            edges.append((labels[0], labels[1]))
    return Graph(vertices, edges)


def read_edge_list(path: Path) -> Graph:
    """Read a UTF-8 edge-list file.

    Raises:
        EdgeListEncodingError: When the file is not valid UTF-8.
    """
    try:
        text = path.read_text(encoding='utf-8')
    except UnicodeDecodeError as e:
        raise EdgeListEncodingError(path, e.start) from e
    return parse_edge_list(text)


def format_edge_list(g: Graph) -> str:
    """Render ``g`` as an edge list, declaring every vertex first so the order round-trips."""
    lines = [*g.vertices, *(f'{u} {v}' for u, v in g.edges)]
    return ''.join(f'{line}\n' for line in lines)


def to_dot(g: Graph, arcs: Iterable[tuple[str, str]] | None = None, name: str = 'G') -> str:
    """Render ``g`` in DOT; a ``digraph`` when ``arcs`` orients its edges."""
    return render_template(
        'graph.dot.j2',
        name=name,
        directed=arcs is not None,
        vertices=g.vertices,
        edges=sorted(arcs, key=lambda arc: (g.position(arc[0]), g.position(arc[1]))) if arcs is not None else g.edges,
    )


def graph_to_dict(g: Graph) -> dict[str, object]:
    return {'vertices': list(g.vertices), 'edges': [list(edge) for edge in g.edges]}


def graph_to_json(g: Graph) -> bytes:
    """``{"vertices": [...], "edges": [[u, v], ...]}``."""
    return dumps_json(graph_to_dict(g))
