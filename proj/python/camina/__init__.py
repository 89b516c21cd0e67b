"""Python interface to the camina library.

Inputs use the CLI syntax: ``"builtin:quaternion8"`` or ``"table:/path/to/g.tbl"``.
"""

import json

from . import _camina
from ._camina import (
    InvariantError,
    PreconditionError,
    ScopeError,
    ValidationError,
    almost_commutative,
    class_sizes,
    classification_family,
    command_names,
    dimension_formula,
    intersection_numbers,
    is_camina,
    order,
    terwilliger_dimension,
)

SCHEMA = _camina.SCHEMA


class Result:
    def __init__(self, exit_code, report, summary):
        self.exit_code = exit_code
        self.report = report
        self.summary = summary

    @property
    def ok(self):
        return self.exit_code == 0

    def __repr__(self):
        return f"Result(exit_code={self.exit_code}, status={self.report.get('status')!r})"


def run(command, input="", **options):
    """Run a pipeline command and return a Result with the parsed report."""
    code, text, summary = _camina.run(command, input, **options)
    return Result(code, json.loads(text), summary)


def camina_profile(input):
    return json.loads(_camina.camina_profile(input))


def verify_all(input, **options):
    return run("verify-all", input, **options)


def synth_class3(p, n, k, twisted=False):
    return run("synth-class3", p=p, n=n, k=k, twisted=twisted)


__all__ = [
    "InvariantError",
    "PreconditionError",
    "Result",
    "SCHEMA",
    "ScopeError",
    "ValidationError",
    "almost_commutative",
    "camina_profile",
    "class_sizes",
    "classification_family",
    "command_names",
    "dimension_formula",
    "intersection_numbers",
    "is_camina",
    "order",
    "run",
    "synth_class3",
    "terwilliger_dimension",
    "verify_all",
]
