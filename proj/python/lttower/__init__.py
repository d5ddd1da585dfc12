"""Python front end for the lttower C++ library."""
import json

from . import _lttower
from ._lttower import cocycle_counts, gaussian_binomial, integral_generators, lambda_extremes


def _vals(vals):
    if isinstance(vals, str):
        return vals
    return ",".join(str(v) for v in vals)


def polygon(n, q, vals):
    return json.loads(_lttower.polygon_json(n, q, _vals(vals)))


def period_series(n, q, depth):
    return json.loads(_lttower.periods_json(n, q, depth))


def reduce_to_domain(n, q, vals, budget=10):
    return json.loads(_lttower.reduce_json(n, q, _vals(vals), budget))


def canonical_quotient(n, q, vals, i):
    return json.loads(_lttower.quotient_json(n, q, _vals(vals), i))


def ball(n, p, radius):
    return json.loads(_lttower.ball_json(n, p, radius))


def assemble_complex(n, p, radius, level=2, lifts=1):
    return json.loads(_lttower.complex_json(n, p, radius, level, lifts))


def witt_selftest():
    return json.loads(_lttower.witt_selftest_json())


__all__ = [
    "assemble_complex",
    "ball",
    "canonical_quotient",
    "cocycle_counts",
    "gaussian_binomial",
    "integral_generators",
    "lambda_extremes",
    "period_series",
    "polygon",
    "reduce_to_domain",
    "witt_selftest",
]
