"""Logarithmic principalization of polynomial ideals on toroidal charts.

Problems are dicts (or JSON text) in the problem-file format; results are
trace documents decoded into dicts.
"""

import json

from . import _core
from ._core import LogresError

__all__ = [
    "LogresError",
    "principalize",
    "order_reduce",
    "resolve",
    "invariant",
    "monomial_saturation",
    "dot",
    "normalize_problem",
]


def _text(problem):
    return problem if isinstance(problem, str) else json.dumps(problem)


def principalize(problem):
    return json.loads(_core.principalize(_text(problem)))


def order_reduce(problem):
    return json.loads(_core.order_reduce(_text(problem)))


def resolve(problem, codim=None):
    return json.loads(_core.resolve(_text(problem), codim))


def invariant(problem, k0=0):
    return _core.invariant(_text(problem), k0)


def monomial_saturation(problem):
    return _core.monomial_saturation(_text(problem))


def dot(problem):
    return _core.dot(_text(problem))


def normalize_problem(problem):
    return json.loads(_core.normalize_problem(_text(problem)))
