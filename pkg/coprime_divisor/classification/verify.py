import itertools
import random
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Literal, Self, TypeVar, get_args

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from coprime_divisor.config import CoprimeDivisorConfig
from coprime_divisor.graphs import Graph
from coprime_divisor.group_graphs import (
    coprime_graph,
    oriented_order_graph,
    oriented_power_graph,
    oriented_reduced_power_graph,
    radical_graph,
    radical_graph_from_radicals,
    verify_structure_bijection,
)
from coprime_divisor.groups import (
    MAX_PARTITION_DEGREE,
    Alternating,
    Cyclic,
    Dicyclic,
    Dihedral,
    DirectProduct,
    GroupSpec,
    OrderSpectrum,
    Symmetric,
    order_spectrum,
    parse_group_spec,
    prime_factors,
)
from coprime_divisor.logger import logger
from coprime_divisor.recognition import brute_force_is_divisor, is_divisor_graph, validate_orientation
from coprime_divisor.rendering import dumps_json, render_template

from .predicates import (
    alternating_predicate,
    dicyclic_predicate,
    dihedral_predicate,
    direct_product_predicate,
    four_prime_predicate,
    symmetric_predicate,
    three_prime_predicate,
)
from .sporadic import SPORADIC_TABLE, lookup_sporadic, recognizer_agrees

Family = Literal[
    'dihedral',
    'dicyclic',
    'symmetric',
    'alternating',
    'sporadic',
    'three-prime',
    'four-prime',
    'direct-product',
    'example-products',
    'nilpotent',
    'structure',
    'corollaries',
    'oracle',
]
FAMILIES: tuple[Family, ...] = get_args(Family)

DEFAULT_MAX_N: dict[Family, int] = {'dihedral': 300, 'dicyclic': 150, 'symmetric': 12, 'alternating': 12}
PARTITION_FAMILIES: frozenset[Family] = frozenset({'symmetric', 'alternating'})

DIRECT_PRODUCT_FACTORS = ('Z 4', 'Z 9', 'Z 6', 'S 3', 'D 10', 'A 5', 'Z 30', 'DP (Z 2) (Z 3)')

EXAMPLE_PRODUCTS = (
    ('S 3', 'A 5'),
    ('D 6', 'D 10'),
    ('A 5', 'D 10'),
    ('S 5', 'SPEC L3(2) : 2,3,4,7'),
    ('Z 2', 'SPEC Sz(8) : 2,4,5,7,13'),
    ('Z 3', 'SPEC G2(3) : 2,3,4,6,7,8,9,12,13'),
    ('Z 2', 'SPEC M11 : 2,3,4,5,6,8,11'),
)

NILPOTENT_FACTORS = (2, 3, 4, 5, 7, 8, 9, 25)

STRUCTURE_GROUPS = (
    'Z 1',
    'Z 2',
    'Z 7',
    'Z 8',
    'Z 12',
    'Z 30',
    'Z 105',
    'D 6',
    'D 8',
    'D 12',
    'D 20',
    'D 30',
    'D 60',
    'Q 8',
    'Q 12',
    'Q 24',
    'Q 60',
    'S 3',
    'S 4',
    'S 5',
    'A 4',
    'A 5',
    'DP (Z 2) (Z 2)',
    'DP (Z 2) (S 3)',
    'DP (Z 3) (S 3)',
    'DP (Z 5) (A 4)',
    'DP (Q 8) (Z 3)',
    'PERM 4 ; (1 2 3 4) ; (1 3)',
    'PERM 5 ; (1 2 3 4 5) ; (2 5)(3 4)',
    'PERM 7 ; (1 2 3 4 5 6 7) ; (2 3 5)(4 7 6)',
)

ORACLE_MIN_VERTICES = 6
ORACLE_MAX_VERTICES = 8
ATLAS_MAX_VERTICES = 5

_T = TypeVar('_T')


class TheoremCase(BaseModel):
    """One swept parameter: the closed-form answer next to the recognizer's."""

    model_config = ConfigDict(frozen=True)

    param: str
    predicate: bool
    recognizer: bool

    @computed_field
    @property
    def agree(self) -> bool:
        return self.predicate == self.recognizer


class TheoremReport(BaseModel):
    """All cases of one family, in parameter order."""

    model_config = ConfigDict(frozen=True)

    family: Family
    cases: tuple[TheoremCase, ...]

    @computed_field
    @property
    def all_agree(self) -> bool:
        return all(case.agree for case in self.cases)

    @computed_field
    @property
    def summary(self) -> dict[str, int]:
        return {
            'cases': len(self.cases),
            'agree': sum(case.agree for case in self.cases),
            'predicate_true': sum(case.predicate for case in self.cases),
            'recognizer_true': sum(case.recognizer for case in self.cases),
        }

    def disagreements(self) -> list[TheoremCase]:
        return [case for case in self.cases if not case.agree]


class VerifyOptions(BaseModel):
    """Which families to sweep and how far.

    Attributes:
        families: Families to run, in report order.
        max_n: Upper bound for the dihedral, dicyclic, symmetric and alternating sweeps. The
            symmetric and alternating sweeps stop at the largest supported partition degree.
        cases: Number of random graphs for the oracle family.
        seed: Seed of the oracle family's random corpus.
        threads: Worker bound, defaults to the configured value.
    """

    model_config = ConfigDict(frozen=True)

    families: tuple[Family, ...] = FAMILIES
    max_n: int | None = Field(default=None, ge=3)
    cases: int = Field(default=10_000, ge=0)
    seed: int = 7
    threads: int | None = Field(default=None, ge=1)

    @model_validator(mode='after')
    def _dedupe_families(self) -> Self:
        object.__setattr__(self, 'families', tuple(dict.fromkeys(self.families)))
        return self

    def upper_bound(self, family: Family) -> int:
        bound = self.max_n if self.max_n is not None else DEFAULT_MAX_N[family]
        if family in PARTITION_FAMILIES:
            return min(bound, MAX_PARTITION_DEGREE)
        return bound


def _recognizes(spectrum: OrderSpectrum) -> bool:
    return is_divisor_graph(radical_graph(spectrum).graph).is_divisor


def _spec_case(spec: GroupSpec, predicate: Callable[[], bool]) -> TheoremCase:
    return TheoremCase(param=spec.describe(), predicate=predicate(), recognizer=_recognizes(order_spectrum(spec)))


def _dihedral_cases(options: VerifyOptions) -> list[Callable[[], TheoremCase]]:
    return [
        lambda n=n: _spec_case(Dihedral(n=n), lambda: dihedral_predicate(n))
        for n in range(3, options.upper_bound('dihedral') + 1)
    ]


def _dicyclic_cases(options: VerifyOptions) -> list[Callable[[], TheoremCase]]:
    return [
        lambda t=t: _spec_case(Dicyclic(t=t), lambda: dicyclic_predicate(t))
        for t in range(2, options.upper_bound('dicyclic') + 1)
    ]


def _symmetric_cases(options: VerifyOptions) -> list[Callable[[], TheoremCase]]:
    return [
        lambda n=n: _spec_case(Symmetric(n=n), lambda: symmetric_predicate(n))
        for n in range(2, options.upper_bound('symmetric') + 1)
    ]


def _alternating_cases(options: VerifyOptions) -> list[Callable[[], TheoremCase]]:
    return [
        lambda n=n: _spec_case(Alternating(n=n), lambda: alternating_predicate(n))
        for n in range(2, options.upper_bound('alternating') + 1)
    ]


def _sporadic_case(name: str) -> TheoremCase:
    record = lookup_sporadic(name)
    agrees = recognizer_agrees(record)
    recognized = record.verdict if agrees else not record.verdict
    return TheoremCase(param=name, predicate=record.verdict, recognizer=recognized)


def _sporadic_cases(_: VerifyOptions) -> list[Callable[[], TheoremCase]]:
    return [lambda name=name: _sporadic_case(name) for name in SPORADIC_TABLE]


def _radical_case(param: str, radicals: set[int], predicate: Callable[[frozenset[int]], bool]) -> TheoremCase:
    frozen = frozenset(radicals)
    recognized = is_divisor_graph(radical_graph_from_radicals(frozen).graph).is_divisor
    return TheoremCase(param=param, predicate=predicate(frozen), recognizer=recognized)


def _composite_subsets(primes: Sequence[int]) -> list[tuple[int, ...]]:
    composites = [p * q for p, q in itertools.combinations(primes, 2)]
    return [subset for size in range(len(composites) + 1) for subset in itertools.combinations(composites, size)]


def _three_prime_cases(_: VerifyOptions) -> list[Callable[[], TheoremCase]]:
    primes = (2, 3, 5)
    return [
        lambda subset=subset: _radical_case(
            '{' + ','.join(map(str, subset)) + '}', {*primes, *subset}, three_prime_predicate
        )
        for subset in _composite_subsets(primes)
    ]


def _four_prime_cases(_: VerifyOptions) -> list[Callable[[], TheoremCase]]:
    primes = (2, 3, 5, 7)
    return [
        lambda subset=subset: _radical_case(
            '{' + ','.join(map(str, subset)) + '}', {*primes, *subset}, four_prime_predicate
        )
        for subset in _composite_subsets(primes)
    ]


def _product_case(left: GroupSpec, right: GroupSpec) -> TheoremCase:
    return _spec_case(
        DirectProduct(left=left, right=right),
        lambda: direct_product_predicate(order_spectrum(left).pi_e, order_spectrum(right).pi_e),
    )


def _direct_product_cases(_: VerifyOptions) -> list[Callable[[], TheoremCase]]:
    factors = [parse_group_spec(text) for text in DIRECT_PRODUCT_FACTORS]
    return [lambda h=h, k=k: _product_case(h, k) for h, k in itertools.product(factors, repeat=2)]


def _example_cases(_: VerifyOptions) -> list[Callable[[], TheoremCase]]:
    pairs = [(parse_group_spec(h), parse_group_spec(k)) for h, k in EXAMPLE_PRODUCTS]
    return [lambda h=h, k=k: _product_case(h, k) for h, k in pairs]


def _nilpotent_spec(orders: tuple[int, ...]) -> GroupSpec:
    spec: GroupSpec = Cyclic(n=orders[0])
    for n in orders[1:]:
        spec = DirectProduct(left=spec, right=Cyclic(n=n))
    return spec


def _nilpotent_cases(_: VerifyOptions) -> list[Callable[[], TheoremCase]]:
    combinations = [
        orders
        for size in (1, 2, 3)
        for orders in itertools.combinations_with_replacement(NILPOTENT_FACTORS, size)
    ]
    return [
        lambda orders=orders: _spec_case(
            _nilpotent_spec(orders),
            lambda: len({p for n in orders for p in prime_factors(n)}) <= 2,
        )
        for orders in combinations
    ]


def _structure_case(text: str) -> list[TheoremCase]:
    spec = parse_group_spec(text)
    reduced = _recognizes(order_spectrum(spec))
    full = is_divisor_graph(coprime_graph(spec)).is_divisor
    return [
        TheoremCase(param=f'{text} | bijection', predicate=True, recognizer=verify_structure_bijection(spec)),
        TheoremCase(param=f'{text} | reduction', predicate=reduced, recognizer=full),
    ]


def _corollary_case(text: str) -> list[TheoremCase]:
    spec = parse_group_spec(text)
    builders = {
        'power': oriented_power_graph,
        'reduced-power': oriented_reduced_power_graph,
        'order': oriented_order_graph,
    }
    cases: list[TheoremCase] = []
    for kind, builder in builders.items():
        graph, orientation = builder(spec)
        cases.append(
            TheoremCase(param=f'{text} | {kind}', predicate=True, recognizer=validate_orientation(graph, orientation))
        )
    return cases


def _oracle_case(param: str, graph: Graph) -> TheoremCase:
    return TheoremCase(
        param=param,
        predicate=brute_force_is_divisor(graph),
        recognizer=is_divisor_graph(graph).is_divisor,
    )


def oracle_corpus(cases: int, seed: int) -> list[tuple[str, Graph]]:
    """Every graph with 1 to 5 vertices from the graph atlas, then seeded G(n, p) graphs on 6 to 8 vertices."""
    corpus = [
        (f'atlas-{index}', Graph.from_networkx(graph))
        for index, graph in enumerate(nx.graph_atlas_g())
        if 1 <= graph.number_of_nodes() <= ATLAS_MAX_VERTICES
    ]
    rng = random.Random(seed)  # noqa: S311
    for index in range(cases):
        n = rng.randint(ORACLE_MIN_VERTICES, ORACLE_MAX_VERTICES)
        graph = nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(2**32))
        corpus.append((f'random-{index}', Graph.from_networkx(graph)))
    return corpus


def _oracle_cases(options: VerifyOptions) -> list[Callable[[], TheoremCase]]:
    return [
        lambda param=param, graph=graph: _oracle_case(param, graph)
        for param, graph in oracle_corpus(options.cases, options.seed)
    ]


_SINGLE_CASE_FAMILIES: dict[Family, Callable[[VerifyOptions], list[Callable[[], TheoremCase]]]] = {
    'dihedral': _dihedral_cases,
    'dicyclic': _dicyclic_cases,
    'symmetric': _symmetric_cases,
    'alternating': _alternating_cases,
    'sporadic': _sporadic_cases,
    'three-prime': _three_prime_cases,
    'four-prime': _four_prime_cases,
    'direct-product': _direct_product_cases,
    'example-products': _example_cases,
    'nilpotent': _nilpotent_cases,
    'oracle': _oracle_cases,
}

_MULTI_CASE_FAMILIES: dict[Family, Callable[[str], list[TheoremCase]]] = {
    'structure': _structure_case,
    'corollaries': _corollary_case,
}


def _run_all(jobs: Iterable[Callable[[], _T]], threads: int) -> list[_T]:
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(lambda job: job(), jobs))


def run_family(family: Family, options: VerifyOptions) -> TheoremReport:
    """Sweep one family; cases come back in parameter order regardless of the worker count."""
    threads = options.threads or CoprimeDivisorConfig.from_env().threads
    if family in _MULTI_CASE_FAMILIES:
        build = _MULTI_CASE_FAMILIES[family]
        jobs = [lambda text=text: build(text) for text in STRUCTURE_GROUPS]
        cases = [case for batch in _run_all(jobs, threads) for case in batch]
    else:
        cases = _run_all(_SINGLE_CASE_FAMILIES[family](options), threads)
    report = TheoremReport(family=family, cases=tuple(cases))
    log = logger.info if report.all_agree else logger.error
    log('family_verified', extra={'family': family, **report.summary})
    return report


def verify_theorems(options: VerifyOptions | None = None) -> list[TheoremReport]:
    """Run every requested family sweep, comparing each closed-form answer with the recognizer.

    Args:
        options: Families, ranges, seed and worker bound; defaults run everything.

    Returns:
        One report per family, in the requested order.
    """
    resolved = options or VerifyOptions()
    return [run_family(family, resolved) for family in resolved.families]


def write_reports(reports: Sequence[TheoremReport], out_dir: Path) -> list[Path]:
    """Write ``<family>.json`` for each report plus ``summary.txt``."""
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for report in reports:
        path = out_dir / f'{report.family}.json'
        _ = path.write_bytes(dumps_json(report))
        written.append(path)
    summary = out_dir / 'summary.txt'
    _ = summary.write_text(render_summary(reports), encoding='utf-8')
    written.append(summary)
    return written


def render_summary(reports: Sequence[TheoremReport]) -> str:
    """Human-readable table of the family results."""
    return render_template('summary.txt.j2', reports=reports)
