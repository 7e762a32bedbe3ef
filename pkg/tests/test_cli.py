"""Tests for the factorlab command line: config parsing, exit codes and reports."""

import json

import pytest

from factorlab import main, make_lab
from util.errors import InvalidConfig

EXIT_OK, EXIT_FALSE, EXIT_CONFIG, EXIT_FUEL = 0, 1, 2, 3


@pytest.fixture(scope='module')
def lab():
    return make_lab()


def parse(lab, argv):
    return lab.get_cog('Config').parse_config(lab.parser.parse_args(argv))


def test_parse_config_minimal(lab):
    cfg = parse(lab, ['factorize', '--n', '2', '--level', '1', '--points', '1', '--reps', 'def'])

    assert cfg.mode == 'factorize'
    assert cfg.n == 2 and cfg.level == 1
    assert len(cfg.points) == 1 and cfg.reps == ['def']
    assert cfg.max_depth == 6


def test_parse_config_two_points(lab):
    cfg = parse(lab, ['factorize', '--n', '3', '--points', '1,2', '--reps', 'def,def', '--max-depth', '6'])
    assert len(cfg.points) == 2 and cfg.curve.size == 2


def test_parse_config_cyclotomic_points(lab):
    cfg = parse(lab, ['smoke', '--n', '4', '--points', '1/2,e(1)+1', '--reps', 'def,dual'])
    assert cfg.points[1] == cfg.gauge.eps(1) + 1
    assert cfg.point_literals == ['1/2', 'e(1)+1']


def test_orbit_collision_is_reported(lab):
    with pytest.raises(InvalidConfig) as e:
        parse(lab, ['factorize', '--n', '2', '--points', '1,-1', '--reps', 'def,def'])

    assert any('points 1 and 2' in err for err in e.value.errors)


def test_every_violation_is_listed(lab):
    argv = ['factorize', '--n', '2', '--level', '-2', '--points', '0,1,-1', '--reps', 'def,adj', '--window', '0']
    with pytest.raises(InvalidConfig) as e:
        parse(lab, argv)

    text = '\n'.join(e.value.errors)
    assert 'critical' in text
    assert 'point 1 is zero' in text
    assert 'points 2 and 3' in text
    assert '2 reps given for 3 points' in text
    assert 'window' in text


def test_config_file_overrides_flags(lab, tmp_path):
    path = tmp_path / 'run.json'
    path.write_text(json.dumps({'n': 3, 'points': ['1', '2'], 'reps': ['def', 'dual'], 'window': 2}))

    cfg = parse(lab, ['factorize', '--n', '2', '--window', '3', '--config', str(path)])
    assert cfg.n == 3 and cfg.window == 2 and cfg.reps == ['def', 'dual']


def test_unreadable_config_file(lab, tmp_path):
    with pytest.raises(InvalidConfig):
        parse(lab, ['factorize', '--config', str(tmp_path / 'missing.json')])


def run(tmp_path, argv):
    out = tmp_path / 'report.json'
    code = main(argv + ['--deterministic', '--output', str(out)])
    return code, (json.loads(out.read_text()) if out.exists() else None)


def test_factorize_report(tmp_path):
    code, report = run(tmp_path, ['factorize', '--n', '2', '--level', '1', '--points', '1', '--reps', 'def'])

    assert code == EXIT_OK
    assert report['verdict'] is True
    assert report['dim_trig'] == 2
    assert [c['dim'] for c in report['components']] == [1, 1]
    assert [c['weight'] for c in report['components']] == ['(1)', '(-1)']
    assert report['config']['n'] == 2
    assert 'timing' not in report and 'process' not in report


def test_reports_are_byte_deterministic(tmp_path):
    argv = ['factorize', '--n', '2', '--points', '1', '--reps', 'def', '--window', '2', '--deterministic']
    first, second = tmp_path / 'a.json', tmp_path / 'b.json'

    assert main(argv + ['-o', str(first)]) == EXIT_OK
    assert main(argv + ['-o', str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_properties_mode(tmp_path):
    code, report = run(tmp_path, ['properties', '--n', '2', '--points', '1', '--reps', 'def'])

    assert code == EXIT_OK
    suites = {s['name']: s for s in report['suites']}
    assert suites['cocycle']['violations'] == 0
    assert all(s['violations'] == 0 for s in report['suites'])


def test_smoke_mode(tmp_path):
    code, report = run(tmp_path, ['smoke', '--n', '2', '--points', '1', '--reps', 'def', '--window', '3'])

    assert code == EXIT_OK
    assert report['verdict'] is True and report['dim_trig'] == 2


@pytest.mark.parametrize('argv', [
    ['factorize', '--n', '2', '--points', '1,-1', '--reps', 'def,def'],
    ['factorize', '--n', '2', '--points', '1', '--reps', 'adj'],
    ['factorize', '--n', '1'],
    ['factorize', '--order', 'random'],
    ['factorize', '--unknown-flag'],
    [],
])
def test_invalid_config_exit_code(tmp_path, argv):
    code, report = run(tmp_path, argv) if argv else (main([]), None)
    assert code == EXIT_CONFIG
    assert report is None


def test_fuel_exhaustion_exit_code(tmp_path):
    code, report = run(tmp_path, ['factorize', '--n', '2', '--points', '1', '--reps', 'def', '--fuel', '5'])
    assert code == EXIT_FUEL
    assert report is None
