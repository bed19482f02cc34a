"""Test the command-line front end."""

import json
import pathlib

import numpy as np
import pytest

from qdsim.cli.main import main
from qdsim.cli.run_config import RunConfig
from qdsim.core.errors import ConfigError
from qdsim.file_reading.state_reader import load_state
from qdsim.states.families import HorodeckiParams, horodecki_state

CONFIGS = pathlib.Path(__file__).resolve().parents[1] / 'configs'
HEADER = 'gamma_t,negativity,ccnr_value,min_pt_eigenvalue'


def parse_report(text):
    return dict(line.split('=', 1) for line in text.strip().splitlines())


def data_lines(text):
    return [line for line in text.splitlines() if line and not line.startswith('#')]


def test_sweep_two_points(capsys):
    status = main(['sweep', '--family', 'horodecki', '--param', '4.3', '--scenario', 'multilocal',
                   '--t-max', '0.5', '--steps', '2'])
    assert status == 0
    lines = data_lines(capsys.readouterr().out)
    assert lines[0] == HEADER
    assert len(lines) == 3
    gamma_t, negativity = (float(x) for x in lines[1].split(',')[:2])
    assert gamma_t == 0.0
    assert negativity == pytest.approx(0.0272464, abs=1e-7)


def test_sweep_records_time_convention(capsys):
    main(['sweep', '--gamma1', '2', '--gamma2', '0.5', '--steps', '3'])
    comments = [line for line in capsys.readouterr().out.splitlines() if line.startswith('#')]
    assert any('Gamma = max(gamma1, gamma2)' in line for line in comments)


def test_sweep_maximally_mixed(capsys):
    assert main(['sweep', '--family', 'isotropic', '--param', '0', '--scenario', 'collective']) == 0
    rows = data_lines(capsys.readouterr().out)[1:]
    assert all(float(row.split(',')[1]) == 0.0 for row in rows)


def test_sweep_is_deterministic(tmp_path):
    first, second = tmp_path / 'a.csv', tmp_path / 'b.csv'
    args = ['sweep', '--family', 'rotated', '--param', '4.6', '--steps', '21']
    assert main(args + ['--output', str(first)]) == 0
    assert main(args + ['--output', str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_invalid_steps_exit_code(capsys):
    assert main(['sweep', '--steps', '1']) == 2
    assert 'steps' in capsys.readouterr().err


def test_invalid_parameter_exit_code():
    assert main(['crossings', '--family', 'horodecki', '--param', '6']) == 2
    assert main(['sweep', '--t-max', '-1']) == 2


def test_unreadable_state_exit_code(tmp_path):
    assert main(['sweep', '--state', str(tmp_path / 'missing.json')]) == 3
    bad = tmp_path / 'bad.json'
    bad.write_text('[1, 2')
    assert main(['sweep', '--state', str(bad)]) == 3


def test_crossings_multilocal(capsys):
    assert main(['crossings', '--family', 'horodecki', '--param', '4.3', '--scenario', 'multilocal']) == 0
    report = parse_report(capsys.readouterr().out)
    assert float(report['t_N']) == pytest.approx(0.1422, abs=5e-4)
    assert float(report['t_R']) == pytest.approx(0.3437, abs=2e-3)
    assert report['regime'] == 'DsdWindow'
    assert report['warnings'] == 'none'


def test_crossings_rotated_global(capsys):
    assert main(['crossings', '--family', 'rotated', '--param', '4.3', '--scenario', 'global']) == 0
    report = parse_report(capsys.readouterr().out)
    assert float(report['t_N']) == pytest.approx(0.0948, abs=5e-4)
    assert float(report['t_R']) == pytest.approx(0.2686, abs=2e-3)


def test_crossings_collective(capsys):
    assert main(['crossings', '--family', 'horodecki', '--param', '4.3', '--scenario', 'collective']) == 0
    report = parse_report(capsys.readouterr().out)
    assert report['t_N'] == 'none'
    assert report['t_R'] == 'none'
    assert report['regime'] == 'NoEsd'


def test_crossings_reports_reference_discrepancy(capsys):
    assert main(['crossings', '--config', str(CONFIGS / 'horodecki_global_4_3.json')]) == 0
    report = parse_report(capsys.readouterr().out)
    assert float(report['t_N']) == pytest.approx(0.0711, abs=1e-4)
    assert '0.1422' in report['warnings']
    assert '0.1764' in report['warnings']


@pytest.mark.parametrize("args, regime", [
    (['--family', 'horodecki', '--param', '5', '--scenario', 'global'], 'NoEsd'),
    (['--family', 'isotropic', '--param', '0.5', '--scenario', 'multilocal'], 'EsdOnly'),
    (['--family', 'horodecki', '--param', '4.3', '--scenario', 'multilocal'], 'DsdWindow'),
    ])
def test_classify(capsys, args, regime):
    assert main(['classify'] + args) == 0
    assert parse_report(capsys.readouterr().out)['regime'] == regime


def test_classify_window_and_notes(capsys):
    main(['classify', '--family', 'horodecki', '--param', '4.3', '--scenario', 'multilocal'])
    report = parse_report(capsys.readouterr().out)
    t_n, t_r = (float(x) for x in report['window'].split(','))
    assert t_n < t_r
    main(['classify', '--family', 'horodecki', '--param', '2.5', '--scenario', 'global'])
    report = parse_report(capsys.readouterr().out)
    assert report['regime'] == 'NoEsd'
    assert report['window'] == 'none'
    assert 'separable at t=0' in report['notes']


def test_dump_state_round_trip(tmp_path, capsys):
    path = tmp_path / 'rho.json'
    assert main(['dump-state', '--family', 'horodecki', '--param', '4.3', '--output', str(path)]) == 0
    loaded = load_state(path)
    np.testing.assert_allclose(loaded.matrix, horodecki_state(HorodeckiParams(4.3)).matrix, atol=1e-12)
    assert main(['crossings', '--state', str(path), '--scenario', 'multilocal']) == 0
    report = parse_report(capsys.readouterr().out)
    assert float(report['t_N']) == pytest.approx(-np.log(0.7525) / 2, abs=1e-6)
    assert report['regime'] == 'DsdWindow'


def test_config_file_with_overrides(tmp_path):
    path = tmp_path / 'run.json'
    RunConfig(family='rotated', family_param=4.6, scenario='multilocal', steps=11).save(path)
    config = RunConfig.from_file(path)
    assert config == RunConfig(family='rotated', family_param=4.6, scenario='multilocal', steps=11)
    assert config.with_overrides(steps=5, scenario=None).steps == 5
    assert config.with_overrides(steps=5, scenario=None).scenario == 'multilocal'
    np.testing.assert_allclose(config.grid(), np.linspace(0, 0.5, 11))


def test_config_validation(tmp_path):
    with pytest.raises(ConfigError):
        RunConfig(steps=1)
    with pytest.raises(ConfigError):
        RunConfig(family='isotropic', family_param=1.5)
    with pytest.raises(ConfigError):
        RunConfig(family='raw')
    with pytest.raises(ConfigError):
        RunConfig(scenario='nonlocal')
    with pytest.raises(ConfigError):
        RunConfig.from_dict({'family': 'horodecki', 'alpha': 4.3})
    path = tmp_path / 'broken.json'
    path.write_text('{"steps": ')
    with pytest.raises(ConfigError):
        RunConfig.from_file(path)


def test_shipped_configs_are_valid():
    configs = sorted(CONFIGS.glob('*.json'))
    assert len(configs) == 7
    for path in configs:
        assert RunConfig.from_file(path).steps >= 2


@pytest.mark.parametrize("entry", [
    {'t_max': 'abc'},
    {'family_param': '4.3'},
    {'gamma1': None},
    {'steps': 10.5},
    {'steps': True},
    {'family': ['horodecki']},
    ])
def test_badly_typed_config_exit_code(tmp_path, capsys, entry):
    path = tmp_path / 'bad.json'
    path.write_text(json.dumps(entry))
    assert main(['sweep', '--config', str(path)]) == 2
    assert 'qdsim: error:' in capsys.readouterr().err
    with pytest.raises(ConfigError):
        RunConfig.from_dict(entry)


def test_raw_alpha_5_dump_has_no_crossing(tmp_path, capsys):
    path = tmp_path / 'alpha5.json'
    assert main(['dump-state', '--family', 'horodecki', '--param', '5', '--output', str(path)]) == 0
    assert main(['crossings', '--state', str(path), '--scenario', 'global']) == 0
    report = parse_report(capsys.readouterr().out)
    assert report['t_N'] == 'none'
    assert report['regime'] == 'NoEsd'
