from collections.abc import Iterable
from pathlib import Path


class CoprimeDivisorError(ValueError):
    """Base class for every error raised by this package."""


class GroupSpecSyntaxError(CoprimeDivisorError):
    """Raised when a group spec string does not match the grammar.

    Attributes:
        position: 0-based character offset where parsing failed.
    """

    position: int

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f'{message} (at position {position})')
        self.position = position


class ParameterOutOfBoundsError(CoprimeDivisorError):
    """Raised when a numeric parameter lies outside its documented bounds.

    Attributes:
        parameter: Name of the parameter.
        value: The rejected value.
        bound: Human readable description of the accepted range.
    """

    parameter: str
    value: int
    bound: str

    def __init__(self, parameter: str, value: int, bound: str) -> None:
        super().__init__(f'Parameter {parameter}={value} is out of bounds, expected {bound}.')
        self.parameter = parameter
        self.value = value
        self.bound = bound


class InvalidPermutationError(CoprimeDivisorError):
    """Raised when a permutation is not a bijection of {1..k}."""


class SpectrumNotDivisorClosedError(CoprimeDivisorError):
    """Raised when a literal element-order set misses a divisor of one of its members.

    Attributes:
        missing: The divisors greater than 1 that are absent.
    """

    missing: tuple[int, ...]

    def __init__(self, missing: Iterable[int]) -> None:
        self.missing = tuple(sorted(set(missing)))
        super().__init__(f'Element orders are not divisor-closed, missing {list(self.missing)}.')


class ElementCapExceededError(CoprimeDivisorError):
    """Raised when enumerating a group would exceed the configured element cap.

    Attributes:
        cap: The configured element cap.
        size: The group order (or a lower bound on it) that triggered the error.
    """

    cap: int
    size: int

    def __init__(self, cap: int, size: int) -> None:
        super().__init__(f'Group has at least {size} elements, over the element cap of {cap}.')
        self.cap = cap
        self.size = size


class SupportOnlySpectrumError(CoprimeDivisorError):
    """Raised when element multiplicities are needed but only the order support is known.

    Attributes:
        name: Name of the group described by a literal spectrum.
    """

    name: str

    def __init__(self, name: str) -> None:
        super().__init__(f'Group {name} is known only by its element orders; multiplicities are unavailable.')
        self.name = name


class InvalidGraphError(CoprimeDivisorError):
    """Raised for loops, duplicate vertex labels or malformed edges."""


class UnknownVertexError(CoprimeDivisorError):
    """Raised when a vertex label is not part of the graph.

    Attributes:
        labels: The unknown labels.
    """

    labels: tuple[str, ...]

    def __init__(self, labels: Iterable[str]) -> None:
        self.labels = tuple(sorted(set(labels)))
        super().__init__(f'Unknown vertex labels: {list(self.labels)}.')


class OverlappingLabelsError(CoprimeDivisorError):
    """Raised when two graphs that must be disjoint share vertex labels.

    Attributes:
        labels: The shared labels.
    """

    labels: tuple[str, ...]

    def __init__(self, labels: Iterable[str]) -> None:
        self.labels = tuple(sorted(set(labels)))
        super().__init__(f'Vertex label sets overlap on {list(self.labels)}.')


class MissingFiberError(CoprimeDivisorError):
    """Raised when a lexicographic product has no fiber for a vertex.

    Attributes:
        vertex: The vertex of the outer graph without a fiber.
    """

    vertex: str

    def __init__(self, vertex: str) -> None:
        super().__init__(f'No fiber given for vertex {vertex!r}.')
        self.vertex = vertex


class SizeCapExceededError(CoprimeDivisorError):
    """Raised when an exponential-time check is asked to run on too large a graph.

    Attributes:
        operation: The operation that refused the input.
        size: Number of vertices of the input.
        cap: Maximum supported number of vertices.
    """

    operation: str
    size: int
    cap: int

    def __init__(self, operation: str, size: int, cap: int) -> None:
        super().__init__(f'{operation} supports at most {cap} vertices, got {size}.')
        self.operation = operation
        self.size = size
        self.cap = cap


class InvalidOrientationError(CoprimeDivisorError):
    """Raised when an orientation does not cover the edges of its graph, or is not transitive where required."""


class MissingLabelsError(CoprimeDivisorError):
    """Raised when a divisor labeling does not cover every vertex.

    Attributes:
        vertices: The unlabeled vertices.
    """

    vertices: tuple[str, ...]

    def __init__(self, vertices: Iterable[str]) -> None:
        self.vertices = tuple(sorted(set(vertices)))
        super().__init__(f'No label for vertices {list(self.vertices)}.')


class PreconditionError(CoprimeDivisorError):
    """Raised when a classification predicate is called outside its hypothesis.

    Attributes:
        operation: The predicate name.
        reason: What was violated.
    """

    operation: str
    reason: str

    def __init__(self, operation: str, reason: str) -> None:
        super().__init__(f'{operation}: {reason}')
        self.operation = operation
        self.reason = reason


class UnknownSporadicGroupError(CoprimeDivisorError):
    """Raised for a name that is not one of the 26 sporadic simple groups.

    Attributes:
        name: The rejected name.
    """

    name: str

    def __init__(self, name: str) -> None:
        super().__init__(f'{name!r} is not a sporadic simple group.')
        self.name = name


class EdgeListFormatError(CoprimeDivisorError):
    """Raised for an edge-list line with more than two labels.

    Attributes:
        line_number: 1-based line number.
        line: The offending line.
    """

    line_number: int
    line: str

    def __init__(self, line_number: int, line: str) -> None:
        super().__init__(f'Malformed edge-list line {line_number}: {line!r}')
        self.line_number = line_number
        self.line = line


class EdgeListEncodingError(CoprimeDivisorError):
    """Raised when an edge-list file is not valid UTF-8.

    Attributes:
        path: The file that failed to decode.
        offset: 0-based byte offset of the first undecodable byte.
    """

    path: Path
    offset: int

    def __init__(self, path: Path, offset: int) -> None:
        super().__init__(f'Edge-list file {path} is not valid UTF-8 (byte {offset}).')
        self.path = path
        self.offset = offset


class TheoremRecognizerDisagreementError(CoprimeDivisorError):
    """Raised when a closed-form theorem predicate contradicts the recognizer.

    Attributes:
        branch: Method tag of the predicate that fired.
        predicate: Verdict of the predicate.
        recognizer: Verdict of the recognizer on the radical graph.
    """

    branch: str
    predicate: bool
    recognizer: bool

    def __init__(self, branch: str, *, predicate: bool, recognizer: bool) -> None:
        super().__init__(f'{branch} answered {predicate} but the recognizer answered {recognizer}.')
        self.branch = branch
        self.predicate = predicate
        self.recognizer = recognizer
