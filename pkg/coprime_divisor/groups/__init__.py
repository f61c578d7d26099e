from .elements import EnumeratedGroup, enumerate_elements
from .parser import parse_group_spec
from .permutation import Permutation
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
from .spectrum import (
    MAX_PARTITION_DEGREE,
    OrderSpectrum,
    is_cp_group,
    order_spectrum,
    partition_orders,
    prime_factors,
    prime_set,
    radical,
)

__all__ = [
    'MAX_PARTITION_DEGREE',
    'Alternating',
    'Cyclic',
    'Dicyclic',
    'Dihedral',
    'DirectProduct',
    'EnumeratedGroup',
    'GroupSpec',
    'OrderSpectrum',
    'PermGroup',
    'Permutation',
    'SpectrumGroup',
    'Symmetric',
    'enumerate_elements',
    'is_cp_group',
    'order_spectrum',
    'parse_group_spec',
    'partition_orders',
    'prime_factors',
    'prime_set',
    'radical',
]
