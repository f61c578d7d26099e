import time
from collections.abc import Callable
from typing import TypeVar

from pydantic import BaseModel, ConfigDict, Field

from coprime_divisor.classification import classify_spectrum
from coprime_divisor.errors import InvalidOrientationError
from coprime_divisor.graphs import Graph
from coprime_divisor.group_graphs import RadicalGraph, radical_graph
from coprime_divisor.groups import parse_group_spec, prime_set
from coprime_divisor.groups import order_spectrum as compute_order_spectrum
from coprime_divisor.recognition import Verdict, validate_labeling, validate_orientation
from coprime_divisor.rendering import dumps_json, render_template

_T = TypeVar('_T')


class AnalysisReport(BaseModel):
    """Everything ``analyze`` reports about one group.

    Attributes:
        spec: The group spec, re-rendered in the grammar.
        order: The group order, or None when only the element-order support is known.
        pi: Prime divisors of the group order.
        pi_e: Non-identity element orders.
        radicals: Distinct radicals of the non-identity element orders.
        verdict: Whether the coprime graph is a divisor graph, with its evidence.
        timings: Seconds per phase; text output only.
    """

    model_config = ConfigDict(frozen=True)

    spec: str
    order: int | None
    pi: tuple[int, ...]
    pi_e: tuple[int, ...]
    radicals: tuple[int, ...]
    verdict: Verdict
    timings: dict[str, float] = Field(default_factory=dict, exclude=True)

    def to_json(self) -> bytes:
        return dumps_json(self)

    def render_text(self) -> str:
        return render_template('analysis.txt.j2', report=self)


def _timed(timings: dict[str, float], phase: str, step: Callable[[], _T]) -> _T:
    started = time.perf_counter()
    result = step()
    timings[phase] = time.perf_counter() - started
    return result


def check_certificate(g: Graph, verdict: Verdict) -> None:
    """Re-validate a positive verdict's certificate against the graph it was decided on.

    Raises:
        InvalidOrientationError: If the orientation or the labeling does not hold up.
    """
    if verdict.certificate is None:
        return
    certificate = verdict.certificate
    if not validate_orientation(g, certificate.orientation):
        msg = 'Certificate orientation is not transitive.'
        raise InvalidOrientationError(msg)
    if not validate_labeling(g, certificate.labeling):
        msg = 'Certificate labeling does not realise the graph.'
        raise InvalidOrientationError(msg)


def analyze_group(text: str, element_cap: int | None = None) -> tuple[AnalysisReport, RadicalGraph]:
    """Parse a group spec and decide whether its coprime graph is a divisor graph.

    Args:
        text: The group spec.
        element_cap: Enumeration cap override for permutation groups.

    Returns:
        The report and the radical graph the verdict was decided on.

    Raises:
        GroupSpecSyntaxError: If ``text`` does not parse.
        ElementCapExceededError: If the spectrum needs an enumeration over the cap.
        InvalidOrientationError: If a certificate fails re-validation.
    """
    timings: dict[str, float] = {}
    spec = _timed(timings, 'parse', lambda: parse_group_spec(text))
    spectrum = _timed(timings, 'spectrum', lambda: compute_order_spectrum(spec, element_cap))
    radicals = radical_graph(spectrum)
    verdict = _timed(timings, 'classify', lambda: classify_spectrum(spectrum))
    _timed(timings, 'validate', lambda: check_certificate(radicals.graph, verdict))
    report = AnalysisReport(
        spec=spec.describe(),
        order=spectrum.total,
        pi=tuple(sorted(prime_set(spectrum))),
        pi_e=spectrum.pi_e,
        radicals=radicals.radicals,
        verdict=verdict,
        timings=timings,
    )
    return report, radicals
