"""Exact cutting-plane solver for dual-form mixed-integer programs.

All functions accept an instance as either a dict (serialized for you) or a
JSON string. Rational numbers in results are canonical strings like "7/2".
"""

import json

from ._core import __version__  # noqa: F401
from . import _core

__all__ = ["solve", "lp", "oracle", "check", "trace", "__version__"]


def _as_text(instance):
    if isinstance(instance, str):
        return instance
    return json.dumps(instance)


def solve(instance, *, assume_integer_value=False, verify_bounded=False,
          max_iterations=10000, max_pivots=100000):
    """Solve to integer optimality. Returns the report as a dict with an
    extra "exit_code" key (0 optimal, 2 infeasible, 3 limit reached)."""
    res = _core.solve(_as_text(instance), assume_integer_value,
                      verify_bounded, max_iterations, max_pivots)
    out = json.loads(res["output"])
    out["exit_code"] = res["exit_code"]
    return out


def lp(instance):
    """Solve the plain relaxation only."""
    res = _core.lp(_as_text(instance))
    out = json.loads(res["output"])
    out["exit_code"] = res["exit_code"]
    return out


def oracle(instance, bounds=None):
    """Solve by bounded enumeration (independent reference).

    bounds, when given, is a list of [lo, hi] pairs for the integer
    variables in instance order."""
    bounds_text = "" if bounds is None else json.dumps(bounds)
    res = _core.oracle(_as_text(instance), bounds_text)
    out = json.loads(res["output"])
    out["exit_code"] = res["exit_code"]
    return out


def check(instance, *, inject_bad_cut=False):
    """Solve, enumerate, and cross-validate the run."""
    res = _core.check(_as_text(instance), inject_bad_cut)
    out = json.loads(res["output"])
    out["exit_code"] = res["exit_code"]
    return out


def trace(instance, *, assume_integer_value=False, max_iterations=10000,
          max_pivots=100000):
    """Solve and return the event stream as a list of dicts, one per line."""
    res = _core.trace(_as_text(instance), assume_integer_value,
                      max_iterations, max_pivots)
    return [json.loads(line) for line in res["output"].splitlines() if line]
