from dataclasses import dataclass
from pathlib import Path

import orjson
import pytest
from pytest_mock import MockerFixture

from coprime_divisor.cli import EXIT_DIVISOR, EXIT_ERROR, EXIT_NOT_DIVISOR, main
from coprime_divisor.graphs import Graph, format_edge_list
from coprime_divisor.version import __version__
from tests.helpers import EdgeListFile


@dataclass
class AnalyzeCase:
    """A group spec, the exit code and lines expected in the text report."""

    spec_text: str
    exit_code: int
    lines: tuple[str, ...]


@pytest.mark.parametrize(
    'test_case',
    [
        AnalyzeCase(
            spec_text='S 7',
            exit_code=EXIT_DIVISOR,
            lines=(
                'group:      S 7',
                'order:      5040',
                'pi:         2, 3, 5, 7',
                'radicals:   2, 3, 5, 6, 7, 10',
                'divisor:    yes (four-prime-theorem)',
            ),
        ),
        AnalyzeCase(
            spec_text='Z 30',
            exit_code=EXIT_NOT_DIVISOR,
            lines=(
                'divisor:    no (three-prime-theorem)',
                'evidence:   pqr-radical on primes [2, 3, 5] via radicals [30]',
            ),
        ),
        AnalyzeCase(
            spec_text='SPEC M23 : 2,3,4,5,6,7,8,11,14,15,23',
            exit_code=EXIT_DIVISOR,
            lines=('order:      unknown (support only)', 'divisor:    yes (forcing)'),
        ),
    ],
)
def test_analyze(test_case: AnalyzeCase, capsys: pytest.CaptureFixture[str]) -> None:
    """Test the text report and the exit code of ``analyze``."""
    assert main(['analyze', test_case.spec_text]) == test_case.exit_code
    out = capsys.readouterr().out.splitlines()
    for line in test_case.lines:
        assert line in out
    assert 'timings:' in out


def test_analyze_json(capsys: pytest.CaptureFixture[str]) -> None:
    """Test that the JSON report carries the verdict and leaves timings out."""
    assert main(['analyze', 'Z 30', '--json']) == EXIT_NOT_DIVISOR
    report = orjson.loads(capsys.readouterr().out)
    assert 'timings' not in report
    assert report['order'] == 30
    assert report['pi_e'] == [2, 3, 5, 6, 10, 15, 30]
    assert report['verdict']['is_divisor'] is False
    assert report['verdict']['obstruction']['pattern'] == 'pqr-radical'


@pytest.mark.parametrize(('spec_text', 'header'), [('S 7', 'digraph "radicals" {'), ('Z 30', 'graph "radicals" {')])
def test_analyze_dot(spec_text: str, header: str, tmp_path: Path) -> None:
    path = tmp_path / 'radicals.dot'
    _ = main(['analyze', spec_text, '--dot', str(path)])
    assert path.read_text(encoding='utf-8').splitlines()[0] == header


@pytest.mark.parametrize(
    'argv',
    [
        ['analyze', 'X 5'],
        ['analyze', 'Z 0'],
        ['analyze', 'PERM 6 ; (1 2 3 4 5 6) ; (1 2)', '--element-cap', '10'],
        ['analyze', 'SPEC bad : 2,12'],
    ],
)
def test_analyze_errors(argv: list[str], capsys: pytest.CaptureFixture[str]) -> None:
    """Test that parse failures and cap overruns exit with an error message."""
    assert main(argv) == EXIT_ERROR
    assert capsys.readouterr().err.startswith('error: ')


def test_is_divisor_on_net(net_graph: Graph, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = EdgeListFile(name='net.txt', text=format_edge_list(net_graph)).write(tmp_path)
    assert main(['graph', 'is-divisor', str(path)]) == EXIT_NOT_DIVISOR
    out = capsys.readouterr().out.splitlines()
    assert out[0] == 'divisor: no (forcing)'
    assert out[1].startswith('evidence: forcing contradiction: ')


def test_is_divisor_with_oracle(net_graph: Graph, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = EdgeListFile(name='net.txt', text=format_edge_list(net_graph)).write(tmp_path)
    assert main(['graph', 'is-divisor', str(path), '--oracle']) == EXIT_NOT_DIVISOR
    assert capsys.readouterr().out.splitlines()[0] == 'divisor: no (brute-force)'


def test_is_divisor_json(k4: Graph, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = EdgeListFile(name='k4.txt', text=format_edge_list(k4)).write(tmp_path)
    assert main(['graph', 'is-divisor', str(path), '--json']) == EXIT_DIVISOR
    verdict = orjson.loads(capsys.readouterr().out)
    assert verdict['is_divisor'] is True
    assert verdict['certificate']['labeling']['labels'] == {'0': '2', '1': '6', '2': '30', '3': '210'}


@dataclass
class LabelCase:
    """An edge-list file and the labels ``graph label`` prints for it."""

    file: EdgeListFile
    labels: dict[str, str]


@pytest.mark.parametrize(
    'test_case',
    [
        LabelCase(
            file=EdgeListFile(name='k4.txt', text='0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n'),
            labels={'0': '2', '1': '6', '2': '30', '3': '210'},
        ),
        LabelCase(file=EdgeListFile(name='single.txt', text='# one vertex\nv\n'), labels={'v': '2'}),
    ],
)
def test_label(test_case: LabelCase, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test that labels come out as decimal strings."""
    path = test_case.file.write(tmp_path)
    assert main(['graph', 'label', str(path)]) == EXIT_DIVISOR
    assert orjson.loads(capsys.readouterr().out) == {'labels': test_case.labels}


def test_label_rejects_net(net_graph: Graph, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = EdgeListFile(name='net.txt', text=format_edge_list(net_graph)).write(tmp_path)
    assert main(['graph', 'label', str(path)]) == EXIT_NOT_DIVISOR
    captured = capsys.readouterr()
    assert captured.out == ''
    assert captured.err.startswith('not a divisor graph: forcing contradiction')


@pytest.mark.parametrize(
    'file',
    [EdgeListFile(name='wide.txt', text='a b c\n'), EdgeListFile(name='loop.txt', text='a a\n')],
)
def test_graph_errors(file: EdgeListFile, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = file.write(tmp_path)
    assert main(['graph', 'is-divisor', str(path)]) == EXIT_ERROR
    assert capsys.readouterr().err.startswith('error: ')


def test_graph_rejects_undecodable_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / 'latin1.txt'
    _ = path.write_bytes(b'a \xff\n')
    assert main(['graph', 'is-divisor', str(path)]) == EXIT_ERROR
    assert capsys.readouterr().err.startswith(f'error: Edge-list file {path} is not valid UTF-8 (byte 2)')


def test_missing_file(tmp_path: Path) -> None:
    assert main(['graph', 'label', str(tmp_path / 'absent.txt')]) == EXIT_ERROR


def test_verify_theorems(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test that the sweep writes one report per family and the summary."""
    out_dir = tmp_path / 'reports'
    assert main(['verify-theorems', '--family', 'dihedral', '--max-n', '12', '--out', str(out_dir)]) == EXIT_DIVISOR
    assert sorted(path.name for path in out_dir.iterdir()) == ['dihedral.json', 'summary.txt']
    out = capsys.readouterr().out
    assert 'dihedral' in out
    assert out.endswith(f'reports written to {out_dir} (2 files)\n')


def test_verify_theorems_caps_partition_degree(tmp_path: Path, mocker: MockerFixture) -> None:
    """Test that a large --max-n stops the symmetric sweep at the supported degree."""
    _ = mocker.patch('coprime_divisor.classification.verify.MAX_PARTITION_DEGREE', 9)
    out_dir = tmp_path / 'reports'
    argv = ['verify-theorems', '--family', 'symmetric', '--max-n', '70', '--out', str(out_dir)]
    assert main(argv) == EXIT_DIVISOR
    report = orjson.loads((out_dir / 'symmetric.json').read_bytes())
    assert report['summary']['cases'] == 8
    assert report['cases'][-1]['param'] == 'S 9'


def test_version(capsys: pytest.CaptureFixture[str]) -> None:
    with pytest.raises(SystemExit) as exc_info:
        _ = main(['--version'])
    assert exc_info.value.code == 0
    assert capsys.readouterr().out.strip() == f'coprime-divisor {__version__}'


@pytest.mark.parametrize('argv', [[], ['graph'], ['verify-theorems', '--family', 'quaternion']])
def test_usage_errors(argv: list[str]) -> None:
    with pytest.raises(SystemExit) as exc_info:
        _ = main(argv)
    assert exc_info.value.code == EXIT_ERROR
