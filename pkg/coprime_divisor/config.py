import os
from typing import Annotated

from pydantic import BaseModel, Field


class CoprimeDivisorConfig(BaseModel):
    """Configuration for enumeration caps and sweep parallelism."""

    element_cap: Annotated[int, Field(ge=1)] = 100_000
    threads: Annotated[int, Field(ge=1)] = 1
    oracle_cap: Annotated[int, Field(ge=1, le=10)] = 9
    isomorphism_cap: Annotated[int, Field(ge=1)] = 12

    @classmethod
    def from_env(cls) -> 'CoprimeDivisorConfig':
        """Create a CoprimeDivisorConfig instance from environment variables."""
        return CoprimeDivisorConfig.model_validate(
            {
                'element_cap': os.getenv('COPRIME_DIVISOR_ELEMENT_CAP', '100000'),
                'threads': os.getenv('COPRIME_DIVISOR_THREADS', '1'),
                'oracle_cap': os.getenv('COPRIME_DIVISOR_ORACLE_CAP', '9'),
                'isomorphism_cap': os.getenv('COPRIME_DIVISOR_ISOMORPHISM_CAP', '12'),
            }
        )


def resolve_element_cap(element_cap: int | None) -> int:
    """Return the explicit cap when given, otherwise the configured one."""
    if element_cap is not None:
        return element_cap
    return CoprimeDivisorConfig.from_env().element_cap
