import pytest
from pydantic import ValidationError

from coprime_divisor.errors import InvalidPermutationError
from coprime_divisor.groups import Permutation


def test_from_cycles_builds_image_array() -> None:
    """Test that cycles are turned into the image array on 1..k."""
    permutation = Permutation.from_cycles(5, [(1, 2, 3), (4, 5)])
    assert permutation.images == (2, 3, 1, 5, 4)
    assert permutation.degree == 5
    assert permutation.order() == 6
    assert permutation.cycle_notation() == '(1 2 3)(4 5)'


def test_identity_renders_as_empty_cycle() -> None:
    """Test the identity's order and notation."""
    identity = Permutation.from_cycles(3, [])
    assert identity.images == (1, 2, 3)
    assert identity.order() == 1
    assert identity.cycle_notation() == '()'


def test_sympy_round_trip() -> None:
    """Test conversion to and from the 0-based sympy permutation."""
    permutation = Permutation.from_cycles(4, [(1, 3), (2, 4)])
    assert Permutation.from_sympy(permutation.to_sympy(), 4) == permutation


def test_images_must_form_a_bijection() -> None:
    """Test that a non-bijective image array is rejected."""
    with pytest.raises(ValidationError):
        _ = Permutation(images=(1, 1, 3))


@pytest.mark.parametrize('cycles', [[(1, 4)], [(1, 2), (2, 3)], [(0, 1)]])
def test_from_cycles_rejects_bad_points(cycles: list[tuple[int, ...]]) -> None:
    """Test that repeated or out-of-range points are rejected."""
    with pytest.raises(InvalidPermutationError):
        _ = Permutation.from_cycles(3, cycles)
