import json
import logging

import pytest

import settings
from config_loader import ConfigLoader
from figures import FIGURE_SETS, find_figure_set


def _write(tmp_path, payload, name='sets.json'):
    path = tmp_path / name
    path.write_text(payload if isinstance(payload, str) else json.dumps(payload), encoding='utf-8')
    return str(path)


GOOD_SET = {'a': 1, 'b': 1, 'lambda': 1, 'beta': 1, 'gamma': 2, 'tau': 1}


# ============================================================
# PARAMETER FILES
# ============================================================

def test_load_figure_sets(figure_sets_json):
    config = ConfigLoader.load(figure_sets_json)
    assert '_comment' not in config
    assert sorted(config) == sorted(fs.label for fs in FIGURE_SETS)
    assert '_comment' not in config['BW']
    for fs in FIGURE_SETS:
        assert ConfigLoader.get_param_set(config, fs.label) == fs.params


def test_load_cure_rate_example(cure_rate_json):
    config = ConfigLoader.load(cure_rate_json)
    p = ConfigLoader.get_param_set(config, 'cured_exponential')
    assert p.inner.tau == -1.0
    assert ConfigLoader.get(config, 'cured_beta', 'a') == 2


def test_get_nested_with_default(figure_sets_json):
    config = ConfigLoader.load(figure_sets_json)
    assert ConfigLoader.get(config, 'N1', 'tau') == 2
    assert ConfigLoader.get(config, 'N1', 'delta', default=0.5) == 0.5
    assert ConfigLoader.get(config, 'missing', 'tau') is None


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        ConfigLoader.load(str(tmp_path / 'nope.json'))


@pytest.mark.parametrize("payload, message", [
    ('{"broken": ', 'not valid JSON'),
    ([1, 2, 3], 'JSON object'),
    ({'_comment': 'only a comment'}, 'no parameter sets'),
    ({'s': [1, 2]}, 'must be an object'),
    ({'s': dict(GOOD_SET, delta=1)}, 'unknown keys'),
    ({'s': {k: v for k, v in GOOD_SET.items() if k != 'tau'}}, "missing 'tau'"),
    ({'s': dict(GOOD_SET, gamma='2')}, 'must be a number'),
    ({'s': dict(GOOD_SET, beta=-1)}, 'beta'),
])
def test_invalid_files(tmp_path, payload, message):
    with pytest.raises(ValueError, match=message):
        ConfigLoader.load(_write(tmp_path, payload))


def test_unknown_set_name(tmp_path):
    config = ConfigLoader.load(_write(tmp_path, {'ray': GOOD_SET}))
    with pytest.raises(ValueError, match='available: ray'):
        ConfigLoader.get_param_set(config, 'N1')


def test_validate_param_set():
    assert ConfigLoader.validate_param_set('ray', GOOD_SET)
    p = ConfigLoader.get_param_set({'N2': find_figure_set('N2').params.as_dict()}, 'N2')
    assert p == find_figure_set('N2').params


# ============================================================
# SETTINGS
# ============================================================

def test_output_dir(monkeypatch):
    monkeypatch.delenv('BMW6_OUTPUT_DIR', raising=False)
    assert settings.get_output_dir() == 'figures'
    monkeypatch.setenv('BMW6_OUTPUT_DIR', '/tmp/curves')
    assert settings.get_output_dir() == '/tmp/curves'


def test_seed(monkeypatch):
    monkeypatch.delenv('BMW6_SEED', raising=False)
    assert settings.get_seed() == settings.DEFAULT_SEED
    monkeypatch.setenv('BMW6_SEED', '42')
    assert settings.get_seed() == 42
    for bad in ('forty-two', '-3'):
        monkeypatch.setenv('BMW6_SEED', bad)
        with pytest.raises(ValueError):
            settings.get_seed()


def test_log_level(monkeypatch):
    monkeypatch.delenv('BMW6_LOG_LEVEL', raising=False)
    assert settings.get_log_level() == logging.WARNING
    monkeypatch.setenv('BMW6_LOG_LEVEL', 'debug')
    assert settings.get_log_level() == logging.DEBUG
    monkeypatch.setenv('BMW6_LOG_LEVEL', 'LOUD')
    with pytest.raises(ValueError):
        settings.get_log_level()
