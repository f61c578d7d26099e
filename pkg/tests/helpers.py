from dataclasses import dataclass
from pathlib import Path

from coprime_divisor.graphs import Graph
from coprime_divisor.recognition import Verdict, validate_labeling, validate_orientation


@dataclass
class EdgeListFile:
    """An edge-list file to be written into a test directory."""

    name: str
    text: str

    def write(self, directory: Path) -> Path:
        """Write the file and return its path."""
        path = directory / self.name
        _ = path.write_text(self.text, encoding='utf-8')
        return path


def graph_from_pairs(pairs: str, vertices: str = '') -> Graph:
    """Build a graph from ``'ab bc'`` style pairs of single-character labels.

    Vertices listed in ``vertices`` come first, then the rest by first appearance.
    """
    order = dict.fromkeys(vertices)
    edges = [(pair[0], pair[1]) for pair in pairs.split()]
    for u, v in edges:
        order.update(dict.fromkeys((u, v)))
    return Graph(order, edges)


def assert_certified(g: Graph, verdict: Verdict) -> None:
    """A positive verdict's certificate must validate against ``g``."""
    assert verdict.is_divisor
    assert verdict.certificate is not None
    assert validate_orientation(g, verdict.certificate.orientation)
    assert validate_labeling(g, verdict.certificate.labeling)
