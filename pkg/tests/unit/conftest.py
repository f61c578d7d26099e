from collections.abc import Iterator

import pytest

from coprime_divisor.graphs import Graph, standard_graphs
from coprime_divisor.recognition import net_graph_fixture


@pytest.fixture
def net_graph() -> Graph:
    """The six-vertex net."""
    return net_graph_fixture()


@pytest.fixture
def k4() -> Graph:
    """Complete graph on vertices 0..3."""
    return standard_graphs('complete', 4)


@pytest.fixture(autouse=True)
def default_caps(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Keep every test on the default caps regardless of the calling environment."""
    for name in (
        'COPRIME_DIVISOR_ELEMENT_CAP',
        'COPRIME_DIVISOR_THREADS',
        'COPRIME_DIVISOR_ORACLE_CAP',
        'COPRIME_DIVISOR_ISOMORPHISM_CAP',
    ):
        monkeypatch.delenv(name, raising=False)
    yield
