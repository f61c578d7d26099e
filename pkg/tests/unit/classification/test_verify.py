from dataclasses import dataclass
from pathlib import Path

import orjson
import pytest
from pydantic import ValidationError

from coprime_divisor.classification import (
    FAMILIES,
    Family,
    TheoremCase,
    TheoremReport,
    VerifyOptions,
    oracle_corpus,
    render_summary,
    run_family,
    verify_theorems,
    write_reports,
)
from coprime_divisor.groups import MAX_PARTITION_DEGREE

# Graphs on 1 to 5 vertices in the atlas: 1 + 2 + 4 + 11 + 34.
ATLAS_GRAPHS = 52


@dataclass
class FamilyCase:
    """A family run with small options and its expected counts."""

    family: Family
    cases: int
    predicate_true: int
    max_n: int | None = None


@pytest.mark.parametrize(
    'test_case',
    [
        FamilyCase(family='dihedral', max_n=20, cases=18, predicate_true=18),
        FamilyCase(family='dihedral', max_n=30, cases=28, predicate_true=27),
        FamilyCase(family='dicyclic', max_n=16, cases=15, predicate_true=14),
        FamilyCase(family='symmetric', max_n=9, cases=8, predicate_true=6),
        FamilyCase(family='alternating', max_n=10, cases=9, predicate_true=7),
        FamilyCase(family='sporadic', cases=26, predicate_true=4),
        FamilyCase(family='three-prime', cases=8, predicate_true=7),
        # the composites must form a linear forest on four primes: 1 + 6 + 15 + 12 of the 64 subsets
        FamilyCase(family='four-prime', cases=64, predicate_true=34),
        FamilyCase(family='example-products', cases=7, predicate_true=0),
    ],
)
def test_family_agrees(test_case: FamilyCase) -> None:
    """Test that the closed form and the recognizer agree on every swept parameter."""
    options = VerifyOptions(families=(test_case.family,), max_n=test_case.max_n, threads=2)
    report = run_family(test_case.family, options)
    assert report.all_agree, report.disagreements()
    assert report.summary['cases'] == test_case.cases
    assert report.summary['predicate_true'] == test_case.predicate_true
    assert report.summary['recognizer_true'] == test_case.predicate_true


def test_cases_keep_parameter_order() -> None:
    report = run_family('dihedral', VerifyOptions(max_n=8, threads=4))
    assert [case.param for case in report.cases] == ['D 6', 'D 8', 'D 10', 'D 12', 'D 14', 'D 16']


def test_oracle_family() -> None:
    report = run_family('oracle', VerifyOptions(cases=5, seed=1))
    assert report.all_agree
    assert report.summary['cases'] == ATLAS_GRAPHS + 5


def test_oracle_corpus_is_seeded() -> None:
    first = oracle_corpus(3, seed=11)
    second = oracle_corpus(3, seed=11)
    assert [name for name, _ in first][-3:] == ['random-0', 'random-1', 'random-2']
    assert first == second
    assert all(6 <= len(graph) <= 8 for _, graph in first[ATLAS_GRAPHS:])


def test_options() -> None:
    options = VerifyOptions(families=('sporadic', 'dihedral', 'sporadic'))
    assert options.families == ('sporadic', 'dihedral')
    assert options.upper_bound('symmetric') == 12
    assert VerifyOptions(max_n=70).upper_bound('dihedral') == 70
    assert VerifyOptions(max_n=70).upper_bound('symmetric') == MAX_PARTITION_DEGREE
    assert VerifyOptions(max_n=70).upper_bound('alternating') == MAX_PARTITION_DEGREE
    assert VerifyOptions().families == FAMILIES
    with pytest.raises(ValidationError):
        _ = VerifyOptions(max_n=2)
    with pytest.raises(ValidationError):
        _ = VerifyOptions(families=('quaternion',))  # pyright: ignore[reportArgumentType]


def test_reports_and_summary(tmp_path: Path) -> None:
    """Test that each family gets a JSON report next to the summary table."""
    reports = verify_theorems(VerifyOptions(families=('three-prime', 'sporadic')))
    written = write_reports(reports, tmp_path / 'out')
    assert [path.name for path in written] == ['three-prime.json', 'sporadic.json', 'summary.txt']

    loaded = orjson.loads((tmp_path / 'out' / 'three-prime.json').read_bytes())
    assert loaded['family'] == 'three-prime'
    assert loaded['all_agree'] is True
    assert loaded['summary'] == {'cases': 8, 'agree': 8, 'predicate_true': 7, 'recognizer_true': 7}
    assert loaded['cases'][0] == {'param': '{}', 'predicate': True, 'recognizer': True, 'agree': True}

    summary = (tmp_path / 'out' / 'summary.txt').read_text(encoding='utf-8')
    assert summary == render_summary(reports)
    assert summary.splitlines()[1].split() == ['three-prime', '8', '8', '7', 'ok']
    assert 'DISAGREE' not in summary


def test_summary_lists_disagreements() -> None:
    report = TheoremReport(
        family='dihedral',
        cases=(
            TheoremCase(param='D 10', predicate=True, recognizer=True),
            TheoremCase(param='D 60', predicate=True, recognizer=False),
        ),
    )
    summary = render_summary([report])
    assert 'DISAGREE' in summary
    assert '    D 60: predicate=True recognizer=False' in summary
    assert report.disagreements() == [report.cases[1]]


@pytest.mark.slow
@pytest.mark.parametrize('family', FAMILIES)
def test_full_sweep(family: Family) -> None:
    """Test every family at its default range."""
    options = VerifyOptions(families=(family,), cases=2_000)
    assert run_family(family, options).all_agree
