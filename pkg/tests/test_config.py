# (C) 2026 kdyck contributors
import os
from pathlib import Path
from unittest import mock

import pytest

from kdyck import config

TEST_CONF_PATH = Path("tests/data/config/test_conf.yaml")


@mock.patch.dict(os.environ, {}, clear=True)
def test_defaults():
    conf = config.KDyckConfig.load()
    assert conf.max_steps == config.DEFAULT_MAX_STEPS
    assert conf.max_poly_paths == config.DEFAULT_MAX_POLY_PATHS
    assert conf.verify_hard_cap == config.DEFAULT_VERIFY_HARD_CAP


@mock.patch.dict(os.environ, {}, clear=True)
def test_load_from_file():
    conf = config.KDyckConfig.load(TEST_CONF_PATH)
    assert conf.max_steps == 20
    assert conf.max_poly_paths == 5000
    assert conf.verify_hard_cap == 14


@mock.patch.dict(
    os.environ, {"KDYCK_MAX_STEPS": "30", "KDYCK_VERIFY_HARD_CAP": "18"}, clear=True
)
def test_environment_overrides_file():
    conf = config.KDyckConfig.load(TEST_CONF_PATH)
    assert conf.max_steps == 30
    assert conf.max_poly_paths == 5000
    assert conf.verify_hard_cap == 18


@mock.patch.dict(os.environ, {"KDYCK_MAX_POLY_PATHS": ""}, clear=True)
def test_empty_environment_value_is_ignored():
    conf = config.KDyckConfig.load()
    assert conf.max_poly_paths == config.DEFAULT_MAX_POLY_PATHS


@pytest.mark.parametrize("value", ["abc", "0", "-3", "1.5"])
def test_bad_environment_value_raises_error(value):
    with mock.patch.dict(os.environ, {"KDYCK_MAX_STEPS": value}, clear=True):
        with pytest.raises(RuntimeError):
            config.KDyckConfig.load()


@pytest.mark.parametrize(
    "conf_path",
    [
        "tests/data/config/missing.yaml",
        "tests/data/config/test_conf_unknown_key.yaml",
        "tests/data/config/test_conf_not_mapping.yaml",
        "tests/data/config/test_conf_bad_value.yaml",
    ],
)
@mock.patch.dict(os.environ, {}, clear=True)
def test_bad_conf_raises_error(conf_path):
    with pytest.raises(RuntimeError):
        config.KDyckConfig.load(Path(conf_path))
