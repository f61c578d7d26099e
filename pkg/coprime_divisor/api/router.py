from typing import Annotated

from fastapi import APIRouter, HTTPException, Query, status
from pydantic import BaseModel, ConfigDict, ValidationError

from coprime_divisor.analysis import AnalysisReport, analyze_group
from coprime_divisor.classification import SporadicRecord, sporadic_verdict
from coprime_divisor.errors import CoprimeDivisorError, UnknownSporadicGroupError
from coprime_divisor.graphs import Graph
from coprime_divisor.logger import logger
from coprime_divisor.recognition import Verdict, is_divisor_graph

divisor_router = APIRouter()


class GraphPayload(BaseModel):
    """A graph as posted to ``/graphs/is-divisor``."""

    model_config = ConfigDict(frozen=True)

    vertices: list[str]
    edges: list[tuple[str, str]] = []


def _bad_request(event: str, error: Exception, **context: str) -> HTTPException:
    logger.warning(event, extra={**context, 'error': type(error).__name__})
    return HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(error))


@divisor_router.get('/groups/analysis')
def get_group_analysis(spec: Annotated[str, Query(min_length=1)]) -> AnalysisReport:
    """Analyze the coprime graph of the group described by ``spec``."""
    try:
        report, _ = analyze_group(spec)
    except (CoprimeDivisorError, ValidationError) as e:
        raise _bad_request('group_analysis_rejected', e, spec=spec) from e
    return report


@divisor_router.post('/graphs/is-divisor')
def post_is_divisor(body: GraphPayload) -> Verdict:
    """Decide whether the posted graph is a divisor graph."""
    try:
        g = Graph(body.vertices, body.edges)
    except CoprimeDivisorError as e:
        raise _bad_request('graph_rejected', e) from e
    return is_divisor_graph(g)


@divisor_router.get('/sporadic/{name}')
def get_sporadic(name: str) -> SporadicRecord:
    """The checked record for a sporadic simple group."""
    try:
        return sporadic_verdict(name)
    except UnknownSporadicGroupError as e:
        logger.warning('unknown_sporadic_group', extra={'group': name})
        raise HTTPException(
            status_code=status.HTTP_404_NOT_FOUND,
            detail=f'Sporadic group {name} not found.',
        ) from e
