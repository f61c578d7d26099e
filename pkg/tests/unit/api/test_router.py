from dataclasses import dataclass, field

import pytest
from fastapi import status
from fastapi.testclient import TestClient

from coprime_divisor.graphs import Graph


def test_group_analysis(divisor_testclient: TestClient) -> None:
    """Test analyzing a group over HTTP."""
    response = divisor_testclient.get('/coprime-divisor/groups/analysis', params={'spec': 'S 7'})

    assert response.status_code == status.HTTP_200_OK
    body = response.json()
    assert body['spec'] == 'S 7'
    assert body['order'] == 5040
    assert body['radicals'] == [2, 3, 5, 6, 7, 10]
    assert body['verdict']['is_divisor'] is True
    assert body['verdict']['method'] == 'four-prime-theorem'
    assert 'timings' not in body


@pytest.mark.parametrize('spec', ['X 5', 'Z 0', 'SPEC bad : 2,12', 'DP (Z 2)'])
def test_group_analysis_rejects_bad_specs(divisor_testclient: TestClient, spec: str) -> None:
    """Test that unparsable or out-of-range specs are a bad request."""
    response = divisor_testclient.get('/coprime-divisor/groups/analysis', params={'spec': spec})

    assert response.status_code == status.HTTP_400_BAD_REQUEST
    assert response.json()['detail']


def test_group_analysis_needs_a_spec(divisor_testclient: TestClient) -> None:
    response = divisor_testclient.get('/coprime-divisor/groups/analysis', params={'spec': ''})

    assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY


def test_is_divisor_on_net(divisor_testclient: TestClient, net_graph: Graph) -> None:
    """Test the forcing witness for the net."""
    payload = {'vertices': list(net_graph.vertices), 'edges': [list(edge) for edge in net_graph.edges]}
    response = divisor_testclient.post('/coprime-divisor/graphs/is-divisor', json=payload)

    assert response.status_code == status.HTTP_200_OK
    body = response.json()
    assert body['is_divisor'] is False
    assert body['certificate'] is None
    assert body['obstruction']['kind'] == 'forcing-contradiction'


def test_is_divisor_labels_path(divisor_testclient: TestClient) -> None:
    """Test that labels come back as decimal strings."""
    payload = {'vertices': ['a', 'b', 'c'], 'edges': [['a', 'b'], ['b', 'c']]}
    response = divisor_testclient.post('/coprime-divisor/graphs/is-divisor', json=payload)

    assert response.status_code == status.HTTP_200_OK
    labels = response.json()['certificate']['labeling']['labels']
    assert set(labels) == {'a', 'b', 'c'}
    assert all(isinstance(label, str) for label in labels.values())


@dataclass
class BadGraphCase:
    """A posted graph that must be rejected."""

    vertices: list[str]
    edges: list[list[str]] = field(default_factory=list)


@pytest.mark.parametrize(
    'test_case',
    [
        BadGraphCase(vertices=['a'], edges=[['a', 'a']]),
        BadGraphCase(vertices=['a', 'a']),
        BadGraphCase(vertices=['a'], edges=[['a', 'b']]),
    ],
)
def test_is_divisor_rejects_bad_graphs(divisor_testclient: TestClient, test_case: BadGraphCase) -> None:
    payload = {'vertices': test_case.vertices, 'edges': test_case.edges}
    response = divisor_testclient.post('/coprime-divisor/graphs/is-divisor', json=payload)

    assert response.status_code == status.HTTP_400_BAD_REQUEST


@pytest.mark.parametrize(('name', 'expected'), [('M23', True), ('m11', True), ('M24', False), ('Co1', False)])
def test_sporadic(divisor_testclient: TestClient, name: str, expected: bool) -> None:  # noqa: FBT001
    response = divisor_testclient.get(f'/coprime-divisor/sporadic/{name}')

    assert response.status_code == status.HTTP_200_OK
    assert response.json()['verdict'] is expected


def test_unknown_sporadic(divisor_testclient: TestClient) -> None:
    response = divisor_testclient.get('/coprime-divisor/sporadic/M25')

    assert response.status_code == status.HTTP_404_NOT_FOUND
    assert response.json() == {'detail': 'Sporadic group M25 not found.'}
