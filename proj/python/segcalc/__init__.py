"""Python bindings for the segcalc core."""

import json

from . import _core
from ._core import (
    CounterexampleError,
    DomainError,
    InconsistencyError,
    ParseError,
    c_value,
    check_conjecture77,
    check_mackey_rearrangement,
    conjugate,
    dominance_leq,
    epsilon,
    infer_partner_w,
    is_admissible_triple,
    omega,
    partitions_of,
    suite_names,
    t_of,
    y_count,
)


def run_suite(name, threads=1):
    """Run a verification suite and return its results as dicts."""
    return [json.loads(line) for line in _core.run_suite(name, threads)]


def enumerate_universe(config, threads=1):
    """Build a universe from key=value config text; returns tuple dicts."""
    return [json.loads(line) for line in _core.enumerate_universe(config, threads)]


__all__ = [
    "CounterexampleError",
    "DomainError",
    "InconsistencyError",
    "ParseError",
    "c_value",
    "check_conjecture77",
    "check_mackey_rearrangement",
    "conjugate",
    "dominance_leq",
    "enumerate_universe",
    "epsilon",
    "infer_partner_w",
    "is_admissible_triple",
    "omega",
    "partitions_of",
    "run_suite",
    "suite_names",
    "t_of",
    "y_count",
]
