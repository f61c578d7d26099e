from coprime_divisor.errors import InvalidOrientationError
from coprime_divisor.graphs import Graph
from coprime_divisor.logger import logger

from .forcing import find_transitive_orientation
from .labeling import divisor_labeling_from_orientation, validate_labeling
from .oracle import brute_force_order
from .orientation import Orientation, validate_orientation
from .verdict import Certificate, NoLinearOrder, Verdict


def certify(g: Graph, orientation: Orientation) -> Certificate:
    """Label ``g`` from a transitive orientation and re-check both halves of the certificate.

    Raises:
        InvalidOrientationError: If either the orientation or the derived labeling fails validation.
    """
    if not validate_orientation(g, orientation):
        msg = 'Orientation is not transitive.'
        raise InvalidOrientationError(msg)
    labeling = divisor_labeling_from_orientation(g, orientation)
    if not validate_labeling(g, labeling):  # pragma: no cover
        msg = 'Derived labeling does not match the graph.'
        raise InvalidOrientationError(msg)
    return Certificate(orientation=orientation, labeling=labeling)


def is_divisor_graph(g: Graph) -> Verdict:
    """Decide whether ``g`` is a divisor graph by transitive-orientation recognition.

    Args:
        g: Any graph.

    Returns:
        A ``forcing`` verdict carrying a validated certificate, or the forcing witness.
    """
    result = find_transitive_orientation(g)
    if not isinstance(result, Orientation):
        logger.info('not_divisor_graph', extra={'vertices': len(g), 'witness': result.kind})
        return Verdict(is_divisor=False, method='forcing', obstruction=result)
    logger.info('divisor_graph_certified', extra={'vertices': len(g), 'arcs': len(result.arcs)})
    return Verdict(is_divisor=True, method='forcing', certificate=certify(g, result))


def brute_force_verdict(g: Graph, cap: int | None = None) -> Verdict:
    """Decide with the exhaustive oracle; a positive answer is certified from the witnessing order.

    Raises:
        SizeCapExceededError: If ``g`` exceeds the oracle cap.
    """
    order = brute_force_order(g, cap)
    if order is None:
        return Verdict(is_divisor=False, method='brute-force', obstruction=NoLinearOrder(vertices=len(g)))
    return Verdict(is_divisor=True, method='brute-force', certificate=certify(g, Orientation.from_order(g, order)))
