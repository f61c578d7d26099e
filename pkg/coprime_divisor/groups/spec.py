from typing import Annotated, Literal, Self

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import divisors

from .permutation import Permutation


def missing_divisors(orders: tuple[int, ...] | list[int]) -> set[int]:
    """Divisors greater than 1 of members of ``orders`` that are not themselves members."""
    return {int(d) for m in orders for d in divisors(m) if d > 1} - set(orders)


class _FrozenSpec(BaseModel):
    model_config = ConfigDict(frozen=True)


class Cyclic(_FrozenSpec):
    """Cyclic group Z_n."""

    kind: Literal['cyclic'] = 'cyclic'
    n: Annotated[int, Field(ge=1)]

    def describe(self) -> str:
        """Render in the group spec grammar."""
        return f'Z {self.n}'


class Dihedral(_FrozenSpec):
    """Dihedral group D_{2n} = <a, b | a^n = b^2 = e, bab^-1 = a^-1>."""

    kind: Literal['dihedral'] = 'dihedral'
    n: Annotated[int, Field(ge=3)]

    def describe(self) -> str:
        """Render in the group spec grammar (keyed by group order 2n)."""
        return f'D {2 * self.n}'


class Dicyclic(_FrozenSpec):
    """Dicyclic group Q_{4t} = <x, y | x^2t = y^4 = e, x^t = y^2, y^-1 x y = x^-1>."""

    kind: Literal['dicyclic'] = 'dicyclic'
    t: Annotated[int, Field(ge=2)]

    def describe(self) -> str:
        """Render in the group spec grammar (keyed by group order 4t)."""
        return f'Q {4 * self.t}'


class Symmetric(_FrozenSpec):
    """Symmetric group S_n."""

    kind: Literal['symmetric'] = 'symmetric'
    n: Annotated[int, Field(ge=1)]

    def describe(self) -> str:
        """Render in the group spec grammar."""
        return f'S {self.n}'


class Alternating(_FrozenSpec):
    """Alternating group A_n."""

    kind: Literal['alternating'] = 'alternating'
    n: Annotated[int, Field(ge=1)]

    def describe(self) -> str:
        """Render in the group spec grammar."""
        return f'A {self.n}'


class DirectProduct(_FrozenSpec):
    """Direct product of two groups."""

    kind: Literal['direct_product'] = 'direct_product'
    left: 'GroupSpec'
    right: 'GroupSpec'

    def describe(self) -> str:
        """Render in the group spec grammar."""
        return f'DP ({self.left.describe()}) ({self.right.describe()})'


class PermGroup(_FrozenSpec):
    """Subgroup of S_k generated by the given permutations."""

    kind: Literal['perm_group'] = 'perm_group'
    degree: Annotated[int, Field(ge=1)]
    generators: tuple[Permutation, ...]

    @model_validator(mode='after')
    def _check_degrees(self) -> Self:
        for generator in self.generators:
            if generator.degree != self.degree:
                msg = (
                    f'Generator {generator.cycle_notation()} acts on {generator.degree} points, '
                    f'expected {self.degree}'
                )
                raise ValueError(msg)
        return self

    def describe(self) -> str:
        """Render in the group spec grammar."""
        return ' ; '.join([f'PERM {self.degree}', *(g.cycle_notation() for g in self.generators)])


class SpectrumGroup(_FrozenSpec):
    """A group known only through its set of non-identity element orders."""

    kind: Literal['spectrum'] = 'spectrum'
    name: Annotated[str, Field(min_length=1)]
    pi_e: tuple[int, ...]

    @field_validator('pi_e', mode='after')
    @classmethod
    def _check_pi_e(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        orders = sorted(set(value))
        if orders and orders[0] <= 1:
            msg = 'Element orders of non-identity elements must be greater than 1'
            raise ValueError(msg)
        if missing := missing_divisors(orders):
            msg = f'Element orders are not divisor-closed, missing {sorted(missing)}'
            raise ValueError(msg)
        return tuple(orders)

    def describe(self) -> str:
        """Render in the group spec grammar."""
        return f'SPEC {self.name} : ' + ','.join(str(m) for m in self.pi_e)


GroupSpec = Annotated[
    Cyclic | Dihedral | Dicyclic | Symmetric | Alternating | DirectProduct | PermGroup | SpectrumGroup,
    Field(discriminator='kind'),
]

_ = DirectProduct.model_rebuild()
