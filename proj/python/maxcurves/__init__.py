"""Point counts, automorphism groups, and ramification data for a family
of maximal curves over finite fields."""

import json

from ._core import (
    CurveError,
    count_points,
    genus,
    group_order,
    is_maximal,
    lifting_residual,
    orbit_sizes,
    report_json,
)

__all__ = [
    "CurveError",
    "count_points",
    "genus",
    "group_order",
    "is_maximal",
    "lifting_residual",
    "orbit_sizes",
    "report",
    "report_json",
]


def report(command, p, h=1, n=3, precision=0, budget=10_000_000):
    """Run one of the CLI commands and return the report as a dict."""
    return json.loads(report_json(command, p, h, n, precision, budget))
