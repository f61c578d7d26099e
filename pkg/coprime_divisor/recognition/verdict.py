from typing import Annotated, Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .labeling import DivisorLabeling
from .orientation import Arc, Orientation

ForbiddenPattern = Literal['pqr-radical', 'triangle', 'four-cycle', 'star']


class _FrozenModel(BaseModel):
    model_config = ConfigDict(frozen=True)


class ForcingContradiction(_FrozenModel):
    """An implication class that contains an edge in both directions.

    Attributes:
        seed: The arc the class was grown from.
        forced: Forcing steps from ``seed`` ending in the doubly forced arc.
        reverse: Forcing steps from ``seed`` ending in the reverse of that arc.
    """

    kind: Literal['forcing-contradiction'] = 'forcing-contradiction'
    seed: Arc
    forced: tuple[Arc, ...]
    reverse: tuple[Arc, ...]

    def describe(self) -> str:
        path = ' => '.join(f'{u}->{v}' for u, v in self.forced)
        back = ' => '.join(f'{u}->{v}' for u, v in self.reverse)
        return f'forcing contradiction: {path} but also {back}'


class TransitivityViolation(_FrozenModel):
    """Arcs ``x->y`` and ``y->z`` without ``x->z``."""

    kind: Literal['transitivity-violation'] = 'transitivity-violation'
    triple: tuple[str, str, str]

    def describe(self) -> str:
        x, y, z = self.triple
        return f'transitivity violation: {x}->{y}->{z} without {x}->{z}'


class ForbiddenConfiguration(_FrozenModel):
    """A radical pattern among element orders that rules out a divisor graph.

    Attributes:
        pattern: ``pqr-radical`` (an order with three prime factors), ``triangle``
            (``pq, pr, qr``), ``four-cycle`` (``pq, pr, rs, qs``) or ``star``
            (``pq, pr, ps``).
        primes: The primes involved, in the roles ``p, q, r[, s]``.
        radicals: The radicals that realise the pattern.
    """

    kind: Literal['forbidden-configuration'] = 'forbidden-configuration'
    pattern: ForbiddenPattern
    primes: tuple[int, ...]
    radicals: tuple[int, ...]

    def describe(self) -> str:
        return f'{self.pattern} on primes {list(self.primes)} via radicals {list(self.radicals)}'


class NoLinearOrder(_FrozenModel):
    """Exhaustive search found no vertex order inducing a transitive orientation."""

    kind: Literal['no-linear-order'] = 'no-linear-order'
    vertices: int

    def describe(self) -> str:
        return f'no transitive vertex order among all orderings of {self.vertices} vertices'


NotOrientable = ForcingContradiction | TransitivityViolation
Obstruction = Annotated[
    ForcingContradiction | TransitivityViolation | ForbiddenConfiguration | NoLinearOrder,
    Field(discriminator='kind'),
]


class Certificate(_FrozenModel):
    """A transitive orientation together with the divisor labeling derived from it."""

    orientation: Orientation
    labeling: DivisorLabeling


class Verdict(_FrozenModel):
    """Whether a graph is a divisor graph, with the evidence for the answer.

    Attributes:
        is_divisor: The answer.
        method: The theorem branch or algorithm (``forcing``, ``brute-force``, ...).
        certificate: Present exactly when ``is_divisor``.
        obstruction: Optional evidence for a negative answer.
    """

    is_divisor: bool
    method: str
    certificate: Certificate | None = None
    obstruction: Obstruction | None = None

    @model_validator(mode='after')
    def _check_evidence(self) -> Self:
        if self.is_divisor != (self.certificate is not None):
            msg = 'A certificate must be present exactly when the verdict is positive'
            raise ValueError(msg)
        if self.is_divisor and self.obstruction is not None:
            msg = 'A positive verdict cannot carry an obstruction'
            raise ValueError(msg)
        return self

    def describe_evidence(self) -> str:
        if self.obstruction is not None:
            return self.obstruction.describe()
        if self.certificate is not None:
            return f'certified by {len(self.certificate.orientation.arcs)} arcs'
        return 'no witness'
