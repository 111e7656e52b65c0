import pytest

from triangle_moduli.config import (
    DEGENERACY_ENV,
    LOG_LEVEL_ENV,
    TOLERANCE_ENV,
    Tolerances,
    configure,
    get_tolerances,
    log_level_from_env,
    reset,
    tolerances_from_env,
)
from triangle_moduli.exceptions import ConfigurationError


@pytest.fixture
def clean_env(monkeypatch):
    for name in (TOLERANCE_ENV, DEGENERACY_ENV, LOG_LEVEL_ENV):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


def test_defaults():
    tolerances = get_tolerances()
    assert tolerances == Tolerances()
    assert tolerances.degeneracy == 1e-12
    assert tolerances.classify == 1e-9
    assert tolerances.max_reduction_steps == 64


def test_environment_overrides(clean_env):
    clean_env.setenv(TOLERANCE_ENV, '1e-6')
    clean_env.setenv(DEGENERACY_ENV, '1e-10')
    tolerances = tolerances_from_env()
    assert tolerances.classify == tolerances.locus == tolerances.equality == tolerances.orbit == 1e-6
    assert tolerances.degeneracy == 1e-10
    assert tolerances.reduction_margin == 1e-12


def test_empty_environment_keeps_defaults(clean_env):
    clean_env.setenv(TOLERANCE_ENV, '')
    assert tolerances_from_env() == Tolerances()


@pytest.mark.parametrize('raw', ['abc', '-1', '0', 'nan', 'inf'])
def test_bad_environment_value(clean_env, raw):
    clean_env.setenv(TOLERANCE_ENV, raw)
    with pytest.raises(ConfigurationError) as excinfo:
        tolerances_from_env()
    assert TOLERANCE_ENV in str(excinfo.value)


def test_log_level(clean_env):
    assert log_level_from_env() == 'WARNING'
    clean_env.setenv(LOG_LEVEL_ENV, 'debug')
    assert log_level_from_env() == 'DEBUG'
    clean_env.setenv(LOG_LEVEL_ENV, 'chatty')
    with pytest.raises(ConfigurationError):
        log_level_from_env()


def test_configure_and_reset():
    configure(equality=1e-6)
    assert get_tolerances().equality == 1e-6
    assert get_tolerances().classify == 1e-9
    reset()
    assert get_tolerances() == Tolerances()


def test_configure_rejects_unknown_setting():
    with pytest.raises(ConfigurationError):
        configure(precision=3)


def test_with_tolerance_must_be_positive():
    with pytest.raises(ConfigurationError):
        Tolerances().with_tolerance(0)
