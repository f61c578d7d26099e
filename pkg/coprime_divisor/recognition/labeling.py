from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, field_serializer
from sympy import prime

from coprime_divisor.errors import InvalidOrientationError, MissingLabelsError, UnknownVertexError
from coprime_divisor.graphs import Graph
from coprime_divisor.rendering import dumps_json

from .orientation import Orientation, check_coverage, find_transitivity_violation


class DivisorLabeling(BaseModel):
    """Positive integer labels such that adjacency matches divisibility.

    Labels are serialized as decimal strings, so arbitrarily large values survive
    a JSON round trip.

    Attributes:
        labels: Vertex label to positive integer.
    """

    model_config = ConfigDict(frozen=True)

    labels: dict[str, Annotated[int, Field(gt=0)]]

    @field_serializer('labels')
    def _labels_as_strings(self, labels: dict[str, int]) -> dict[str, str]:
        return {v: str(label) for v, label in labels.items()}

    def to_json(self) -> bytes:
        """``{"labels": {"v": "<decimal>"}}``."""
        return dumps_json(self)


def divisor_labeling_from_orientation(g: Graph, o: Orientation) -> DivisorLabeling:
    """Turn a transitive orientation into a divisor labeling.

    The i-th vertex (0-based) gets the (i+1)-th prime ``q_i``; each vertex is
    labelled by the product of its own prime and the primes of every vertex with
    an arc into it. On a complete graph with arcs in vertex order this yields
    ``2, 6, 30, 210, ...``.

    Raises:
        InvalidOrientationError: If ``o`` is not a transitive orientation of ``g``.
    """
    check_coverage(g, o)
    if (triple := find_transitivity_violation(g, o)) is not None:
        msg = f'Orientation is not transitive at {triple}.'
        raise InvalidOrientationError(msg)
    primes = {v: int(prime(i + 1)) for i, v in enumerate(g.vertices)}
    labels = dict(primes)
    for tail, head in o.arcs:
        labels[head] *= primes[tail]
    return DivisorLabeling(labels=labels)


def validate_labeling(g: Graph, labeling: DivisorLabeling) -> bool:
    """Whether ``labeling`` is injective and adjacency holds exactly where one label divides the other.

    Raises:
        MissingLabelsError: If a vertex of ``g`` has no label.
        UnknownVertexError: If a labelled vertex is not in ``g``.
    """
    labels = labeling.labels
    if missing := [v for v in g.vertices if v not in labels]:
        raise MissingLabelsError(missing)
    if unknown := [v for v in labels if v not in g]:
        raise UnknownVertexError(unknown)
    if len(set(labels.values())) != len(labels):
        return False
    vertices = g.vertices
    for i, u in enumerate(vertices):
        for v in vertices[i + 1 :]:
            a, b = labels[u], labels[v]
            if g.has_edge(u, v) != (b % a == 0 or a % b == 0):
                return False
    return True
