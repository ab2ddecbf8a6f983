"""Containment of symbolic and ordinary powers of point ideals in P^2.

Points and ideals are passed as text in the file formats of the command-line
tool: one point ``c0 : c1 : c2`` or one generator per line, ``w`` a primitive
cube root of unity.
"""

import json

from ._sympow import (
    Error,
    InvalidArgument,
    ParseError,
    check,
    graded_dims,
    groebner_basis,
    hesse_points,
    random_points,
    run_cli,
    star_points,
)
from ._sympow import verify_hesse as _verify_hesse

__all__ = [
    "Error",
    "InvalidArgument",
    "ParseError",
    "check",
    "contains",
    "graded_dims",
    "groebner_basis",
    "hesse_points",
    "random_points",
    "run_cli",
    "star_points",
    "verify_hesse",
]


def verify_hesse(skip_graded=False, t=(10, 11, 12), tamper=False):
    """Structured verification report for the dual Hesse configuration, as a dict."""
    return json.loads(_verify_hesse(skip_graded, list(t), tamper))


def contains(points, m, r):
    """True iff I^(m) is contained in I^r."""
    return check(points, m, r)[0]
