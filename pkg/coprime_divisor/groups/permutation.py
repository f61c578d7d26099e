from collections.abc import Sequence
from typing import Self

from pydantic import BaseModel, ConfigDict, model_validator
from sympy.combinatorics import Permutation as SympyPermutation

from coprime_divisor.errors import InvalidPermutationError


class Permutation(BaseModel):
    """A permutation of the points {1..k}, stored as its image array.

    Attributes:
        images: ``images[i - 1]`` is the image of point ``i``.
    """

    model_config = ConfigDict(frozen=True)

    images: tuple[int, ...]

    @model_validator(mode='after')
    def _check_bijection(self) -> Self:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            msg = f'{list(self.images)} is not a bijection of 1..{len(self.images)}'
            raise ValueError(msg)
        return self

    @property
    def degree(self) -> int:
        """Number of points acted on."""
        return len(self.images)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> 'Permutation':
        """Build a permutation from disjoint cycles written on points 1..degree.

        Args:
            degree: Number of points.
            cycles: Cycles such as ``[(1, 2, 3), (4, 5)]``; fixed points may be omitted.

        Returns:
            The permutation.

        Raises:
            InvalidPermutationError: If a point is out of range or appears twice.
        """
        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 1 <= point <= degree:
                    msg = f'Point {point} is outside 1..{degree}.'
                    raise InvalidPermutationError(msg)
                if point in seen:
                    msg = f'Point {point} appears more than once in {list(map(list, cycles))}.'
                    raise InvalidPermutationError(msg)
                seen.add(point)
            for index, point in enumerate(cycle):
                images[point - 1] = cycle[(index + 1) % len(cycle)]
        return cls(images=tuple(images))

    @classmethod
    def from_sympy(cls, permutation: SympyPermutation, degree: int) -> 'Permutation':
        """Convert a 0-based sympy permutation to a 1-based one of the given degree."""
        return cls(images=tuple(permutation(point) + 1 for point in range(degree)))

    def to_sympy(self) -> SympyPermutation:
        """Return the equivalent 0-based sympy permutation."""
        return SympyPermutation([image - 1 for image in self.images], size=self.degree)

    def order(self) -> int:
        """Order of the permutation (lcm of its cycle lengths)."""
        return int(self.to_sympy().order())

    def cycle_notation(self) -> str:
        """Render as cycle notation on points 1..k, ``()`` for the identity."""
        cycles = self.to_sympy().cyclic_form
        if not cycles:
            return '()'
        return ''.join('(' + ' '.join(str(point + 1) for point in cycle) + ')' for cycle in cycles)
