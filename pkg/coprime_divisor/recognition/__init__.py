from .fixtures import net_graph_fixture
from .forcing import find_transitive_orientation
from .labeling import DivisorLabeling, divisor_labeling_from_orientation, validate_labeling
from .lex_orientation import lex_orientation
from .oracle import brute_force_is_divisor, brute_force_order
from .orientation import (
    Arc,
    Orientation,
    VertexKind,
    check_coverage,
    classify_vertices,
    find_transitivity_violation,
    validate_orientation,
)
from .recognize import brute_force_verdict, certify, is_divisor_graph
from .verdict import (
    Certificate,
    ForbiddenConfiguration,
    ForbiddenPattern,
    ForcingContradiction,
    NoLinearOrder,
    NotOrientable,
    Obstruction,
    TransitivityViolation,
    Verdict,
)

__all__ = [
    'Arc',
    'Certificate',
    'DivisorLabeling',
    'ForbiddenConfiguration',
    'ForbiddenPattern',
    'ForcingContradiction',
    'NoLinearOrder',
    'NotOrientable',
    'Obstruction',
    'Orientation',
    'TransitivityViolation',
    'Verdict',
    'VertexKind',
    'brute_force_is_divisor',
    'brute_force_order',
    'brute_force_verdict',
    'certify',
    'check_coverage',
    'classify_vertices',
    'divisor_labeling_from_orientation',
    'find_transitive_orientation',
    'find_transitivity_violation',
    'is_divisor_graph',
    'lex_orientation',
    'net_graph_fixture',
    'validate_labeling',
    'validate_orientation',
]
