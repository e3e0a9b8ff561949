"""Exact Verlinde formulas for fusion rings, module categories and twisted sectors."""

import json

from ._core import (
    CycNum,
    Dataset,
    Error,
    bundled_datasets,
    classical_multiplicity,
    load_dataset,
    module_multiplicity,
    run,
    twisted_coefficient,
)
from . import _core


def validate(spec):
    return json.loads(_core.validate_json(spec))


def report(spec, seed=0, timings=False):
    return json.loads(_core.report_json(spec, seed, timings))


def oracle(spec):
    return json.loads(_core.oracle_json(spec))


def gauge_test(spec, seed=0):
    return json.loads(_core.gauge_json(spec, seed))


__all__ = [
    "CycNum",
    "Dataset",
    "Error",
    "bundled_datasets",
    "classical_multiplicity",
    "gauge_test",
    "load_dataset",
    "module_multiplicity",
    "oracle",
    "report",
    "run",
    "twisted_coefficient",
    "validate",
]
