import pytest
from pydantic import ValidationError

from coprime_divisor.config import CoprimeDivisorConfig, resolve_element_cap


def test_config_defaults() -> None:
    """Test that the documented defaults apply without environment variables."""
    config = CoprimeDivisorConfig.from_env()
    assert config.element_cap == 100_000
    assert config.threads == 1
    assert config.oracle_cap == 9
    assert config.isomorphism_cap == 12


def test_config_reads_environment(
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    """Test that every cap is read from its environment variable."""
    monkeypatch.setenv('COPRIME_DIVISOR_ELEMENT_CAP', '500')
    monkeypatch.setenv('COPRIME_DIVISOR_THREADS', '4')
    monkeypatch.setenv('COPRIME_DIVISOR_ORACLE_CAP', '7')
    monkeypatch.setenv('COPRIME_DIVISOR_ISOMORPHISM_CAP', '10')
    config = CoprimeDivisorConfig.from_env()
    assert config.element_cap == 500
    assert config.threads == 4
    assert config.oracle_cap == 7
    assert config.isomorphism_cap == 10


@pytest.mark.parametrize(
    ('variable', 'value'),
    [
        ('COPRIME_DIVISOR_THREADS', '0'),
        ('COPRIME_DIVISOR_ELEMENT_CAP', 'many'),
        ('COPRIME_DIVISOR_ORACLE_CAP', '11'),
    ],
)
def test_config_rejects_invalid_values(
    monkeypatch: pytest.MonkeyPatch,
    variable: str,
    value: str,
) -> None:
    """Test that invalid environment values raise a ValidationError."""
    monkeypatch.setenv(variable, value)
    with pytest.raises(ValidationError):
        _ = CoprimeDivisorConfig.from_env()


def test_resolve_element_cap_prefers_explicit_value(
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    """Test that an explicit cap overrides the environment."""
    monkeypatch.setenv('COPRIME_DIVISOR_ELEMENT_CAP', '50')
    assert resolve_element_cap(None) == 50
    assert resolve_element_cap(7) == 7
