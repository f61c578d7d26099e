from coprime_divisor.errors import TheoremRecognizerDisagreementError
from coprime_divisor.group_graphs import radical_graph
from coprime_divisor.groups import GroupSpec, OrderSpectrum, is_cp_group, order_spectrum, prime_set
from coprime_divisor.logger import logger
from coprime_divisor.recognition import Verdict, is_divisor_graph

from .predicates import four_prime_predicate, obstruction_scan, radicals_of, three_prime_predicate, two_prime_predicate


def _theorem_branch(spectrum: OrderSpectrum) -> tuple[str, bool | None]:
    pi = prime_set(spectrum)
    if not spectrum.pi_e:
        return 'trivial-group', True
    if is_cp_group(spectrum):
        return 'cp-group', True
    if len(pi) <= 2:
        return 'two-prime-theorem', two_prime_predicate(pi)
    if len(pi) == 3:
        return 'three-prime-theorem', three_prime_predicate(spectrum.pi_e)
    if len(pi) == 4:
        return 'four-prime-theorem', four_prime_predicate(radicals_of(spectrum.pi_e))
    return 'forcing', None


def classify_spectrum(spectrum: OrderSpectrum) -> Verdict:
    """Decide whether the coprime graph of a group with these element orders is a divisor graph.

    The first applicable closed form answers: trivial group, CP-group, at most two
    primes, three primes, four primes; beyond that the recognizer decides on the
    radical graph. The recognizer always runs on the radical graph as a cross-check,
    and its certificate backs every positive answer.

    Raises:
        TheoremRecognizerDisagreementError: If a closed form contradicts the recognizer.
    """
    method, predicate = _theorem_branch(spectrum)
    recognized = is_divisor_graph(radical_graph(spectrum).graph)
    answer = recognized.is_divisor if predicate is None else predicate
    if answer != recognized.is_divisor:
        logger.error(
            'theorem_recognizer_disagreement',
            extra={'group': spectrum.name, 'method': method, 'predicate': answer},
        )
        raise TheoremRecognizerDisagreementError(method, predicate=answer, recognizer=recognized.is_divisor)

    logger.info('coprime_graph_classified', extra={'group': spectrum.name, 'method': method, 'is_divisor': answer})
    if answer:
        return Verdict(is_divisor=True, method=method, certificate=recognized.certificate)
    return Verdict(
        is_divisor=False,
        method=method,
        obstruction=obstruction_scan(spectrum.pi_e) or recognized.obstruction,
    )


def coprime_is_divisor(spec: GroupSpec, element_cap: int | None = None) -> Verdict:
    """Decide whether the coprime graph of ``spec`` is a divisor graph.

    Only the element-order support is used, so groups given by a literal spectrum
    are accepted.

    Args:
        spec: The group.
        element_cap: Enumeration cap for permutation groups.

    Returns:
        The verdict, tagged with the theorem branch (or ``forcing``) that decided it.

    Raises:
        ElementCapExceededError: If the spectrum needs an enumeration over the cap.
        TheoremRecognizerDisagreementError: If a closed form contradicts the recognizer.
    """
    return classify_spectrum(order_spectrum(spec, element_cap))
