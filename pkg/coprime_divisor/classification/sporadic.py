from typing import Literal

from pydantic import BaseModel, ConfigDict

from coprime_divisor.errors import TheoremRecognizerDisagreementError, UnknownSporadicGroupError
from coprime_divisor.groups import OrderSpectrum, order_spectrum, parse_group_spec

from .coprime import classify_spectrum
from .predicates import obstruction_scan

Provenance = Literal['paper', 'witness']

MATHIEU_GROUPS = ('M11', 'M12', 'M22', 'M23', 'M24')
WITNESS = (6, 10, 15)
WITNESS_CLOSURE = (2, 3, 5, 6, 10, 15)


class SporadicRecord(BaseModel):
    """What is known about the coprime graph of a sporadic simple group.

    Attributes:
        name: ATLAS name.
        pi_e: Non-identity element orders: the full set, a divisor-closed witness, or empty.
        full_spectrum: Whether ``pi_e`` is complete.
        verdict: Whether the coprime graph is a divisor graph.
        provenance: ``paper`` for spectra quoted from the literature and containment arguments, ``witness``
            when a ``{6, 10, 15}`` witness decides.
        witness: Orders that alone force a negative verdict.
        contains: A subgroup whose coprime graph is not a divisor graph, as a group spec
            or another sporadic name.
    """

    model_config = ConfigDict(frozen=True)

    name: str
    pi_e: tuple[int, ...] = ()
    full_spectrum: bool = False
    verdict: bool = False
    provenance: Provenance = 'paper'
    witness: tuple[int, ...] = ()
    contains: str | None = None

    def spectrum(self) -> OrderSpectrum:
        """The recorded orders as a support-only spectrum."""
        return OrderSpectrum.from_support(self.pi_e, name=self.name)


def _mathieu(name: str, pi_e: tuple[int, ...], *, verdict: bool) -> SporadicRecord:
    return SporadicRecord(name=name, pi_e=pi_e, full_spectrum=True, verdict=verdict)


def _witnessed(name: str) -> SporadicRecord:
    return SporadicRecord(name=name, pi_e=WITNESS_CLOSURE, provenance='witness', witness=WITNESS)


def _containing(name: str, subgroup: str) -> SporadicRecord:
    return SporadicRecord(name=name, contains=subgroup)


SPORADIC_TABLE: dict[str, SporadicRecord] = {
    record.name: record
    for record in (
        _mathieu('M11', (2, 3, 4, 5, 6, 8, 11), verdict=True),
        _mathieu('M12', (2, 3, 4, 5, 6, 8, 10, 11), verdict=True),
        _mathieu('M22', (2, 3, 4, 5, 6, 7, 8, 11), verdict=True),
        _mathieu('M23', (2, 3, 4, 5, 6, 7, 8, 11, 14, 15, 23), verdict=True),
        SporadicRecord(
            name='M24',
            pi_e=(2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 14, 15, 21, 23),
            full_spectrum=True,
            provenance='witness',
            witness=WITNESS,
        ),
        _containing('J1', 'DP (D 6) (D 10)'),
        _containing('J2', 'DP (A 5) (D 10)'),
        _witnessed('J3'),
        _containing('J4', 'M24'),
        _containing('Co1', 'McL'),
        _containing('Co2', 'McL'),
        _containing('Co3', 'McL'),
        _containing('Fi22', 'S 10'),
        _witnessed('Fi23'),
        _witnessed("Fi24'"),
        _containing('HS', 'S 8'),
        _witnessed('McL'),
        _containing('He', 'DP (S 4) (SPEC L3(2) : 2,3,4,7)'),
        _containing('Ru', 'DP (DP (Z 2) (Z 2)) (SPEC Sz(8) : 2,4,5,7,13)'),
        _containing('Suz', 'DP (S 3) (A 5)'),
        _containing("O'N", 'J1'),
        _containing('HN', 'A 12'),
        _containing('Ly', 'DP (Z 2) (SPEC M11 : 2,3,4,5,6,8,11)'),
        _containing('Th', 'DP (Z 3) (SPEC G2(3) : 2,3,4,6,7,8,9,12,13)'),
        _containing('B', 'Th'),
        _containing('M', 'A 12'),
    )
}

_BY_FOLDED_NAME = {name.casefold(): name for name in SPORADIC_TABLE}


def lookup_sporadic(name: str) -> SporadicRecord:
    """The embedded record for ``name`` (case-insensitive), without any verification.

    Raises:
        UnknownSporadicGroupError: For a name outside the 26 sporadic groups.
    """
    canonical = _BY_FOLDED_NAME.get(name.strip().casefold())
    if canonical is None:
        raise UnknownSporadicGroupError(name)
    return SPORADIC_TABLE[canonical]


def recognizer_agrees(record: SporadicRecord) -> bool:
    """The recognizer's answer for the record's evidence.

    Full spectra and witnesses are decided on their radical graph; a containment is
    decided on the named subgroup, whose coprime graph is an induced subgraph.
    """
    if record.pi_e:
        recognized = classify_spectrum(record.spectrum()).is_divisor
        if record.witness and obstruction_scan(record.witness) is None:
            return False
        return recognized == record.verdict
    if record.contains is None:  # pragma: no cover
        return False
    if record.contains in SPORADIC_TABLE:
        return sporadic_verdict(record.contains).verdict == record.verdict
    return classify_spectrum(order_spectrum(parse_group_spec(record.contains))).is_divisor == record.verdict


def sporadic_verdict(name: str) -> SporadicRecord:
    """Look up a sporadic group and check its record against the recognizer.

    Exactly M11, M12, M22 and M23 have a divisor coprime graph.

    Raises:
        UnknownSporadicGroupError: For an unknown name.
        TheoremRecognizerDisagreementError: If the recorded verdict does not hold up.
    """
    record = lookup_sporadic(name)
    if not recognizer_agrees(record):
        raise TheoremRecognizerDisagreementError(
            f'sporadic-table:{record.name}',
            predicate=record.verdict,
            recognizer=not record.verdict,
        )
    return record
