import itertools
from collections import deque
from collections.abc import Callable, Hashable, Sequence
from dataclasses import dataclass, field
from math import factorial, gcd, lcm
from typing import assert_never

from sympy.combinatorics import Permutation as SympyPermutation

from coprime_divisor.config import resolve_element_cap
from coprime_divisor.errors import ElementCapExceededError, SupportOnlySpectrumError
from coprime_divisor.logger import logger

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


@dataclass(frozen=True, eq=False)
class EnumeratedGroup:
    """A finite group with every element listed; index 0 is the identity.

    Attributes:
        name: The group spec the elements were generated from.
        elements: The elements, in canonical order.
        orders: ``orders[i]`` is the order of ``elements[i]``.
    """

    name: str
    elements: tuple[Hashable, ...]
    orders: tuple[int, ...]
    product: Callable[[Hashable, Hashable], Hashable] = field(repr=False)
    _index: dict[Hashable, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, '_index', {element: i for i, element in enumerate(self.elements)})

    @property
    def size(self) -> int:
        """Group order."""
        return len(self.elements)

    def multiply(self, i: int, j: int) -> int:
        """Index of ``elements[i] * elements[j]``."""
        return self._index[self.product(self.elements[i], self.elements[j])]

    def power(self, i: int, k: int) -> int:
        """Index of ``elements[i] ** k`` for ``k >= 0``."""
        result = 0
        for _ in range(k % self.orders[i]):
            result = self.multiply(result, i)
        return result

    def inverse(self, i: int) -> int:
        """Index of the inverse of ``elements[i]``."""
        return self.power(i, self.orders[i] - 1)

    def cyclic_subgroup(self, i: int) -> frozenset[int]:
        """Indices of the cyclic subgroup generated by ``elements[i]``."""
        members = [0]
        current = i
        while current != 0:
            members.append(current)
            current = self.multiply(current, i)
        return frozenset(members)

    def label(self, i: int) -> str:
        """Stable vertex label ``'<index>:<order>'``."""
        return f'{i}:{self.orders[i]}'


def _check_cap(spec: GroupSpec, size: int, cap: int) -> None:
    if size > cap:
        logger.warning(
            'element_cap_exceeded',
            extra={'group': spec.describe(), 'size': size, 'element_cap': cap},
        )
        raise ElementCapExceededError(cap=cap, size=size)


def _modular_group(spec: GroupSpec, modulus: int) -> EnumeratedGroup:
    return EnumeratedGroup(
        name=spec.describe(),
        elements=tuple(range(modulus)),
        orders=tuple(modulus // gcd(modulus, k) for k in range(modulus)),
        product=lambda a, b: (a + b) % modulus,  # pyright: ignore[reportOperatorIssue]
    )


def _dihedral_group(spec: Dihedral) -> EnumeratedGroup:
    n = spec.n

    # a^i b^s * a^j b^u = a^(i + (-1)^s j) b^(s + u)
    def product(x: Hashable, y: Hashable) -> Hashable:
        (i, s), (j, u) = x, y  # pyright: ignore[reportGeneralTypeIssues]
        return ((i + (-j if s else j)) % n, (s + u) % 2)

    elements = [(i, s) for s in (0, 1) for i in range(n)]
    return EnumeratedGroup(
        name=spec.describe(),
        elements=tuple(elements),
        orders=tuple(2 if s else n // gcd(n, i) for i, s in elements),
        product=product,
    )


def _dicyclic_group(spec: Dicyclic) -> EnumeratedGroup:
    t = spec.t
    modulus = 2 * t

    # x^i y^s * x^j y^u with y x^j = x^-j y and y^2 = x^t
    def product(x: Hashable, y: Hashable) -> Hashable:
        (i, s), (j, u) = x, y  # pyright: ignore[reportGeneralTypeIssues]
        if not s:
            return ((i + j) % modulus, u)
        if u:
            return ((i - j + t) % modulus, 0)
        return ((i - j) % modulus, 1)

    elements = [(i, s) for s in (0, 1) for i in range(modulus)]
    return EnumeratedGroup(
        name=spec.describe(),
        elements=tuple(elements),
        orders=tuple(4 if s else modulus // gcd(modulus, i) for i, s in elements),
        product=product,
    )


def _permutation_product(x: Hashable, y: Hashable) -> Hashable:
    return x * y  # pyright: ignore[reportOperatorIssue]


def _permutation_group(spec: GroupSpec, elements: Sequence[SympyPermutation]) -> EnumeratedGroup:
    return EnumeratedGroup(
        name=spec.describe(),
        elements=tuple(elements),
        orders=tuple(int(p.order()) for p in elements),
        product=_permutation_product,
    )


def _symmetric_elements(n: int, *, even_only: bool) -> list[SympyPermutation]:
    elements = (SympyPermutation(list(images), size=n) for images in itertools.permutations(range(n)))
    return [p for p in elements if p.is_even or not even_only]


def _closure(spec: PermGroup, cap: int) -> list[SympyPermutation]:
    generators = [g.to_sympy() for g in spec.generators]
    identity = SympyPermutation(list(range(spec.degree)), size=spec.degree)
    seen = {identity}
    elements = [identity]
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for generator in generators:
            candidate = current * generator
            if candidate in seen:
                continue
            seen.add(candidate)
            elements.append(candidate)
            _check_cap(spec, len(elements), cap)
            queue.append(candidate)
    return elements


def _direct_product_group(spec: DirectProduct, cap: int) -> EnumeratedGroup:
    left = enumerate_elements(spec.left, cap)
    right = enumerate_elements(spec.right, cap)
    _check_cap(spec, left.size * right.size, cap)

    def product(x: Hashable, y: Hashable) -> Hashable:
        (a, b), (c, d) = x, y  # pyright: ignore[reportGeneralTypeIssues]
        return (left.multiply(a, c), right.multiply(b, d))

    elements = [(a, b) for a in range(left.size) for b in range(right.size)]
    return EnumeratedGroup(
        name=spec.describe(),
        elements=tuple(elements),
        orders=tuple(lcm(left.orders[a], right.orders[b]) for a, b in elements),
        product=product,
    )


def enumerate_elements(spec: GroupSpec, element_cap: int | None = None) -> EnumeratedGroup:
    """List every element of a group together with its multiplication and orders.

    Permutation groups are closed under their generators breadth-first, so element
    indices are reproducible.

    Args:
        spec: The group.
        element_cap: Maximum number of elements, defaults to the configured cap.

    Returns:
        The enumerated group; index 0 is the identity.

    Raises:
        ElementCapExceededError: If the group has more elements than the cap.
        SupportOnlySpectrumError: For a SpectrumGroup.
    """
    cap = resolve_element_cap(element_cap)
    match spec:
        case Cyclic(n=n):
            _check_cap(spec, n, cap)
            return _modular_group(spec, n)
        case Dihedral(n=n):
            _check_cap(spec, 2 * n, cap)
            return _dihedral_group(spec)
        case Dicyclic(t=t):
            _check_cap(spec, 4 * t, cap)
            return _dicyclic_group(spec)
        case Symmetric(n=n):
            _check_cap(spec, factorial(n), cap)
            return _permutation_group(spec, _symmetric_elements(n, even_only=False))
        case Alternating(n=n):
            _check_cap(spec, max(1, factorial(n) // 2), cap)
            return _permutation_group(spec, _symmetric_elements(n, even_only=True))
        case PermGroup():
            return _permutation_group(spec, _closure(spec, cap))
        case DirectProduct():
            return _direct_product_group(spec, cap)
        case SpectrumGroup(name=name):
            raise SupportOnlySpectrumError(name)
    assert_never(spec)
