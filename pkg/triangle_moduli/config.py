import logging
import os
from dataclasses import dataclass, replace

from triangle_moduli.exceptions import ConfigurationError

TOLERANCE_ENV = 'TRIMODULI_TOLERANCE'
DEGENERACY_ENV = 'TRIMODULI_DEGENERACY_EPS'
LOG_LEVEL_ENV = 'TRIMODULI_LOG_LEVEL'


@dataclass(frozen=True)
class Tolerances:
    """Package-level numerical tolerances.

    degeneracy is scale-relative (|im w| <= eps * (1 + |w|)); every other
    value is an absolute bound on the quantity it guards.
    """

    degeneracy: float = 1e-12
    classify: float = 1e-9
    locus: float = 1e-9
    equality: float = 1e-9
    orbit: float = 1e-9
    reduction_margin: float = 1e-12
    max_reduction_steps: int = 64

    def with_tolerance(self, tolerance):
        """Return a copy with the classification, locus, equality and dedup tolerances replaced."""
        if not tolerance > 0:
            raise ConfigurationError(f"Tolerance must be positive, got {tolerance!r}")
        return replace(self, classify=tolerance, locus=tolerance, equality=tolerance, orbit=tolerance)


def _read_float(name):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == '':
        return None
    try:
        value = float(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be a number, got {raw!r}")
    if not value > 0 or value != value or value == float('inf'):
        raise ConfigurationError(f"{name} must be a positive finite number, got {raw!r}")
    return value


def tolerances_from_env():
    """Build tolerances from the defaults and the TRIMODULI_* environment variables."""
    tolerances = Tolerances()
    tolerance = _read_float(TOLERANCE_ENV)
    if tolerance is not None:
        tolerances = tolerances.with_tolerance(tolerance)
    degeneracy = _read_float(DEGENERACY_ENV)
    if degeneracy is not None:
        tolerances = replace(tolerances, degeneracy=degeneracy)
    return tolerances


def log_level_from_env(default='WARNING'):
    level = os.environ.get(LOG_LEVEL_ENV, default).upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ConfigurationError(f"{LOG_LEVEL_ENV} is not a logging level: {level!r}")
    return level


_active = Tolerances()


def get_tolerances():
    return _active


def configure(tolerances=None, **overrides):
    """Replace the active tolerances.

    Args:
        tolerances (Tolerances): New record; defaults to the currently active one
        **overrides: Individual fields to replace, e.g. ``classify=1e-8``

    Returns:
        Tolerances: The record now in effect
    """
    global _active
    base = tolerances if tolerances is not None else _active
    try:
        _active = replace(base, **overrides)
    except TypeError as e:
        raise ConfigurationError(f"Unknown tolerance setting: {e}")
    logging.debug(f"Active tolerances: {_active}")
    return _active


def reset():
    """Restore the built-in defaults."""
    return configure(Tolerances())
