from pathlib import Path

import pytest

from beattyprimes.basic.errors import ConfigError
from beattyprimes.experiment.config import ExperimentConfig, parse_checkpoints, parse_flat, parse_int, read_mapping


def test_defaults():
    cfg = ExperimentConfig()
    assert cfg.alpha.label == 'sqrt2' and cfg.alpha_hat.label == 'sqrt2'
    assert cfg.density == pytest.approx(0.5)
    assert cfg.checkpoints == []


def test_parse_int_forms():
    assert parse_int('1000') == 1000
    assert parse_int('1e6') == 10 ** 6
    assert parse_int('10_000') == 10000
    with pytest.raises(ConfigError):
        parse_int('1.5')
    with pytest.raises(ConfigError):
        parse_int('many')


def test_checkpoints():
    assert parse_checkpoints('1e4, 1e5,1e6') == [10 ** 4, 10 ** 5, 10 ** 6]
    assert parse_checkpoints(None) == []
    with pytest.raises(ConfigError):
        ExperimentConfig().with_overrides(checkpoints='100,10')


def test_overrides():
    cfg = ExperimentConfig().with_overrides(alpha='golden', beta='0.5', x='1e5', format='JSON', out='r.csv')
    assert cfg.alpha.label == 'golden'
    assert cfg.beta.label == '1/2'
    assert cfg.checkpoints == [10 ** 5]
    assert cfg.format == 'json'
    assert cfg.out == Path('r.csv')
    assert cfg.with_overrides(alpha=None).alpha.label == 'golden'


def test_invalid_values_are_config_errors():
    with pytest.raises(ConfigError):
        ExperimentConfig().with_overrides(alpha='0.5')
    with pytest.raises(ConfigError):
        ExperimentConfig().with_overrides(alpha='nonsense')
    with pytest.raises(ConfigError):
        ExperimentConfig().with_overrides(format='xml')


def test_flat_file(tmp_path):
    path = tmp_path / 'run.conf'
    path.write_text("# headline\nalpha = sqrt2\nalpha-hat = golden\ncheckpoints = 1e4,1e5  # decades\n")
    cfg = ExperimentConfig.load(path)
    assert cfg.alpha_hat.label == 'golden'
    assert cfg.checkpoints == [10 ** 4, 10 ** 5]
    assert cfg.to_dict()['alpha_hat'] == 'golden'


def test_flat_file_errors(tmp_path):
    path = tmp_path / 'bad.conf'
    path.write_text("alpha sqrt2\n")
    with pytest.raises(ConfigError, match='line 1'):
        ExperimentConfig.load(path)
    path.write_text("gamma = 3\n")
    with pytest.raises(ConfigError, match='unknown'):
        ExperimentConfig.load(path)
    with pytest.raises(ConfigError) as info:
        ExperimentConfig.load(tmp_path / 'missing.conf')
    assert info.value.path == tmp_path / 'missing.conf'


def test_yaml_file(tmp_path):
    path = tmp_path / 'config.yml'
    path.write_text("parameters:\n  alpha: e\n  beta: 0.3\n  checkpoints: [1000, 10000]\ntasks: []\n")
    cfg = ExperimentConfig.load(path)
    assert cfg.alpha.label == 'e'
    assert cfg.checkpoints == [1000, 10000]
    assert read_mapping(path)['beta'] == 0.3


def test_invalid_yaml(tmp_path):
    path = tmp_path / 'broken.yaml'
    path.write_text("parameters: [unclosed\n")
    with pytest.raises(ConfigError):
        read_mapping(path)


def test_parse_flat_strips_comments():
    assert parse_flat("x = 10 # bound\n\n  p_max=5\n") == {'x': '10', 'p_max': '5'}
