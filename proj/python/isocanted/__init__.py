"""Exact tropical matrices and isocanted alcoved polytopes.

Rationals are passed and returned as strings ("3", "-1/2"); large integers
come back as Python ints.
"""

import json

from . import _core
from ._core import ParseError, conjecture_names

__all__ = [
    "ParseError",
    "build_matrix",
    "classify",
    "conjecture_names",
    "count_flags",
    "export_mesh",
    "face_count",
    "fvector",
    "lattice",
    "maximal_chains",
    "permanent",
    "verify",
    "vertices",
]


def fvector(d):
    """Face numbers for dimensions 0 .. d-1."""
    return [int(v) for v in _core.fvector(d)]


def face_count(d, j):
    return int(_core.face_count(d, j))


def count_flags(d):
    """Closed-form flag count."""
    return int(_core.count_flags(d))


def maximal_chains(d):
    """Maximal chains counted on the face lattice."""
    return int(_core.maximal_chains(d))


def lattice(d):
    return json.loads(_core.lattice(d))


def build_matrix(d, ell, a, placement="vni"):
    """Matrix file contents as a dict."""
    return json.loads(_core.build_matrix(d, str(ell), str(a), placement))


def _matrix_text(matrix):
    return matrix if isinstance(matrix, str) else json.dumps(matrix)


def classify(matrix):
    """Class flags, decomposition and cant of a matrix given as dict or JSON text."""
    return json.loads(_core.classify(_matrix_text(matrix)))


def permanent(matrix):
    """(value, multiplicity); value is a rational string or "-inf"."""
    value, multiplicity = _core.permanent(_matrix_text(matrix))
    return value, int(multiplicity)


def vertices(d, ell, a, placement="vni", oracle=False):
    return json.loads(_core.vertices(d, str(ell), str(a), placement, oracle))


def verify(name, lo=2, hi=60):
    """Report dict with status, failing dimensions and per-dimension witnesses."""
    return json.loads(_core.verify(name, lo, hi))


def export_mesh(ell, a, placement="vni", format="off", precision=12):
    """OFF or OBJ text of the three-dimensional polytope."""
    return _core.export_mesh(str(ell), str(a), placement, format, precision)
