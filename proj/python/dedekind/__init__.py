"""Python access to the dedekind C++ core."""

import json
from fractions import Fraction

from . import _core

__all__ = [
    "dedekind_sum",
    "inv_count",
    "reciprocity_residual",
    "invpoly",
    "vanishes_at_root",
    "root_multiplicity",
    "root_scan",
    "kloosterman",
    "table1",
    "sweep",
    "find_roots",
]

reciprocity_residual = _core.reciprocity_residual
inv_count = _core.inv_count
vanishes_at_root = _core.vanishes_at_root
root_multiplicity = _core.root_multiplicity
kloosterman = _core.kloosterman
table1 = _core.table1


def dedekind_sum(a, b):
    num, den = _core.dedekind_sum(a, b)
    return Fraction(int(num), int(den))


def invpoly(b):
    """f_b as a dict {exponent: coefficient}."""
    return dict(_core.invpoly_terms(b))


def root_scan(b, m_max=None):
    return json.loads(_core.root_scan_json(b, 3 * b if m_max is None else m_max))


def sweep(statement, b_max, jobs=1):
    return json.loads(_core.sweep_json(statement, b_max, jobs))


def find_roots(b, tol=1e-12, max_iter=1000):
    roots, converged, residuals = _core.find_roots(b, tol, max_iter)
    return list(zip(roots, converged, residuals))
