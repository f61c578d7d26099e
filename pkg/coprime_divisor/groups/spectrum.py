from collections import Counter
from collections.abc import Iterable, Mapping
from math import factorial, lcm, prod
from typing import Literal, Self, assert_never

from pydantic import BaseModel, ConfigDict, model_validator
from sympy import divisors, primefactors, totient
from sympy.utilities.iterables import partitions

from coprime_divisor.errors import ParameterOutOfBoundsError, SupportOnlySpectrumError
from coprime_divisor.logger import logger

from .elements import enumerate_elements
from .spec import (
    Alternating,
    Cyclic,
    Dicyclic,
    Dihedral,
    DirectProduct,
    GroupSpec,
    PermGroup,
    SpectrumGroup,
    Symmetric,
)

Parity = Literal['all', 'even']

MAX_PARTITION_DEGREE = 64


class OrderSpectrum(BaseModel):
    """Element orders of a finite group.

    Attributes:
        support: Sorted distinct element orders, always including 1.
        counts: Multiplicity of each order, or None when only the support is known.
        total: The group order, or None when only the support is known.
        name: Display name of the group the spectrum belongs to.
    """

    model_config = ConfigDict(frozen=True)

    support: tuple[int, ...]
    counts: dict[int, int] | None = None
    total: int | None = None
    name: str = ''

    @model_validator(mode='after')
    def _check_consistency(self) -> Self:
        if not self.support or self.support[0] != 1 or list(self.support) != sorted(set(self.support)):
            msg = f'Support must be sorted, distinct and contain 1, got {list(self.support)}'
            raise ValueError(msg)
        if (self.counts is None) != (self.total is None):
            msg = 'counts and total must be given together'
            raise ValueError(msg)
        if self.counts is not None:
            if tuple(sorted(self.counts)) != self.support or self.counts[1] != 1:
                msg = 'counts must cover exactly the support, with a single identity'
                raise ValueError(msg)
            if sum(self.counts.values()) != self.total:
                msg = f'Multiplicities sum to {sum(self.counts.values())}, expected {self.total}'
                raise ValueError(msg)
        return self

    @classmethod
    def from_counts(cls, counts: Mapping[int, int], name: str = '') -> 'OrderSpectrum':
        """Build a spectrum with multiplicities, dropping zero counts."""
        kept = {int(order): int(count) for order, count in sorted(counts.items()) if count}
        return cls(support=tuple(kept), counts=kept, total=sum(kept.values()), name=name)

    @classmethod
    def from_support(cls, orders: Iterable[int], name: str = '') -> 'OrderSpectrum':
        """Build a support-only spectrum from element orders (1 is added)."""
        return cls(support=tuple(sorted({1, *orders})), name=name)

    @property
    def pi_e(self) -> tuple[int, ...]:
        """Orders of the non-identity elements."""
        return self.support[1:]

    @property
    def support_only(self) -> bool:
        """Whether multiplicities are unknown."""
        return self.counts is None

    def require_counts(self) -> dict[int, int]:
        """Return the multiplicities.

        Raises:
            SupportOnlySpectrumError: If only the support is known.
        """
        if self.counts is None:
            raise SupportOnlySpectrumError(self.name or 'SPEC')
        return self.counts


def prime_factors(m: int) -> tuple[int, ...]:
    """Distinct prime divisors of ``m`` in increasing order."""
    return tuple(int(p) for p in primefactors(m))


def radical(m: int) -> int:
    """Product of the distinct prime divisors of ``m``; ``radical(1) == 1``.

    Raises:
        ParameterOutOfBoundsError: If ``m < 1``.
    """
    if m < 1:
        raise ParameterOutOfBoundsError('m', m, 'm >= 1')
    return prod(prime_factors(m))


def _cycle_types(n: int, parity: Parity) -> Iterable[dict[int, int]]:
    if not 1 <= n <= MAX_PARTITION_DEGREE:
        raise ParameterOutOfBoundsError('n', n, f'1 <= n <= {MAX_PARTITION_DEGREE}')
    for cycle_type in partitions(n):
        # sympy reuses the yielded dict, so copy before handing it out.
        if parity == 'even' and sum(mult for part, mult in cycle_type.items() if part % 2 == 0) % 2:
            continue
        yield dict(cycle_type)


def partition_orders(n: int, parity: Parity = 'all') -> frozenset[int]:
    """Orders of the permutations of S_n (``parity='all'``) or A_n (``parity='even'``).

    A permutation's order is the lcm of its cycle lengths, so it is enough to walk
    the partitions of ``n``; for A_n only cycle types with an even number of even
    parts are kept.

    Args:
        n: Degree, ``1 <= n <= 64``.
        parity: ``'all'`` for S_n, ``'even'`` for A_n.

    Returns:
        The set of element orders, including 1.
    """
    return frozenset(lcm(*cycle_type) for cycle_type in _cycle_types(n, parity))


def _class_sizes(n: int, parity: Parity) -> Counter[int]:
    counts: Counter[int] = Counter()
    for cycle_type in _cycle_types(n, parity):
        centralizer = prod(part**mult * factorial(mult) for part, mult in cycle_type.items())
        counts[lcm(*cycle_type)] += factorial(n) // centralizer
    return counts


def _cyclic_counts(n: int) -> dict[int, int]:
    return {int(d): int(totient(d)) for d in divisors(n)}


def _lcm_convolution(left: OrderSpectrum, right: OrderSpectrum, name: str) -> OrderSpectrum:
    if left.counts is None or right.counts is None:
        return OrderSpectrum.from_support({lcm(a, b) for a in left.support for b in right.support}, name=name)
    counts: Counter[int] = Counter()
    for a, count_a in left.counts.items():
        for b, count_b in right.counts.items():
            counts[lcm(a, b)] += count_a * count_b
    return OrderSpectrum.from_counts(counts, name=name)


def order_spectrum(spec: GroupSpec, element_cap: int | None = None) -> OrderSpectrum:
    """Compute the exact element-order spectrum of a group.

    Cyclic, dihedral and dicyclic groups use closed forms; symmetric and alternating
    groups sum conjugacy class sizes over cycle types; direct products take the
    lcm-convolution of their factors; permutation groups are enumerated. A
    SpectrumGroup yields a support-only spectrum.

    Args:
        spec: The group.
        element_cap: Enumeration cap for PermGroup, defaults to the configured cap.

    Returns:
        The spectrum.

    Raises:
        ElementCapExceededError: If a PermGroup closure exceeds the cap.
        ParameterOutOfBoundsError: For S_n / A_n beyond the partition bound.
    """
    name = spec.describe()
    match spec:
        case Cyclic(n=n):
            return OrderSpectrum.from_counts(_cyclic_counts(n), name=name)
        case Dihedral(n=n):
            counts = Counter(_cyclic_counts(n))
            counts[2] += n
            return OrderSpectrum.from_counts(counts, name=name)
        case Dicyclic(t=t):
            counts = Counter(_cyclic_counts(2 * t))
            counts[4] += 2 * t
            return OrderSpectrum.from_counts(counts, name=name)
        case Symmetric(n=n):
            return OrderSpectrum.from_counts(_class_sizes(n, 'all'), name=name)
        case Alternating(n=n):
            return OrderSpectrum.from_counts(_class_sizes(n, 'even'), name=name)
        case DirectProduct(left=left, right=right):
            return _lcm_convolution(
                order_spectrum(left, element_cap),
                order_spectrum(right, element_cap),
                name=name,
            )
        case PermGroup():
            group = enumerate_elements(spec, element_cap)
            return OrderSpectrum.from_counts(Counter(group.orders), name=name)
        case SpectrumGroup(pi_e=pi_e):
            logger.debug('support_only_spectrum', extra={'group': name})
            return OrderSpectrum.from_support(pi_e, name=name)
    assert_never(spec)


def prime_set(source: GroupSpec | OrderSpectrum) -> frozenset[int]:
    """The primes dividing the group order, read off the element orders (Cauchy)."""
    spectrum = source if isinstance(source, OrderSpectrum) else order_spectrum(source)
    return frozenset(p for m in spectrum.pi_e for p in prime_factors(m))


def is_cp_group(spectrum: OrderSpectrum) -> bool:
    """Whether every element has prime power order."""
    return all(len(prime_factors(m)) == 1 for m in spectrum.pi_e)
