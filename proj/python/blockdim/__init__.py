"""Dimensions of simple modules attached to blocks of category O.

Weights are given in fundamental-weight coordinates. Rational coordinates may be
passed as strings ("1/2"), ints or fractions.Fraction; results use "p/q" strings.
"""

import json
from fractions import Fraction

from . import _core
from ._core import InconsistencyError, InputError

__all__ = [
    "InconsistencyError",
    "InputError",
    "block_report",
    "cartan_matrix",
    "character",
    "dot_orbit",
    "ext_dimensions",
    "integral_data",
    "is_dominant",
    "is_general_position",
    "is_minimal",
    "kl_polynomial",
    "positive_roots",
    "weyl_dim",
    "weyl_group_order",
]


def _weight(coords):
    if isinstance(coords, str):
        return coords
    return ",".join(str(Fraction(c)) for c in coords)


def cartan_matrix(type, rank):
    return _core.cartan_matrix(type, rank)


def positive_roots(type, rank):
    return _core.positive_roots(type, rank)


def weyl_group_order(type, rank):
    return _core.weyl_group_order(type, rank)


def weyl_dim(type, rank, nu):
    return int(_core.weyl_dim(type, rank, list(nu)))


def character(type, rank, nu):
    """Weight multiplicities of V(nu) as {weight tuple: multiplicity}."""
    return _core.character(type, rank, list(nu))


def integral_data(type, rank, lam):
    return _core.integral_data(type, rank, _weight(lam))


def is_dominant(type, rank, lam):
    return _core.is_dominant(type, rank, _weight(lam))


def is_general_position(type, rank, lam):
    return _core.is_general_position(type, rank, _weight(lam))


def is_minimal(type, rank, lam, mu, order="root"):
    return _core.is_minimal(type, rank, _weight(lam), _weight(mu), order)


def dot_orbit(type, rank, lam):
    return [tuple(Fraction(c) for c in w) for w in _core.dot_orbit(type, rank, _weight(lam))]


def kl_polynomial(type, rank, x, y):
    """Coefficients [c0, c1, ...] of P_{x,y}; words like "2132", "e" for the identity."""
    return _core.kl_polynomial(type, rank, x, y)


def ext_dimensions(type, rank, lam, x, y):
    return _core.ext_dimensions(type, rank, _weight(lam), x, y)


def block_report(type, rank, lam, v, order="root", fast_path=False):
    """The report as a dict, with the same layout as the command-line JSON."""
    return json.loads(_core.block_report_json(type, rank, _weight(lam), list(v), order, fast_path))
