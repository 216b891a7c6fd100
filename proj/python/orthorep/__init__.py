"""Cayley representations of orthogonal matrices and diagonal sign perturbations."""

from fractions import Fraction

from orthorep import _core
from orthorep._core import (
    Error,
    adjacent_flip_chain,
    cayley,
    enumerate_invertible,
    fact_e,
    gen_haar_reflection,
    gen_haar_rotation,
    gen_int_matrix,
    gen_singular,
    gen_skew,
    inverse_cayley,
    kahan_enumerate,
    kahan_identity,
    normal_form,
    obstruction,
    represent,
    rotation_sqrt,
    sign_assign,
    sign_matrix_sum,
    sign_vector_for_index,
    two_factor,
)

__all__ = [
    "Error",
    "adjacent_flip_chain",
    "cayley",
    "enumerate_invertible",
    "fact_e",
    "fact_e_exact",
    "gen_haar_reflection",
    "gen_haar_rotation",
    "gen_int_matrix",
    "gen_singular",
    "gen_skew",
    "inverse_cayley",
    "kahan_enumerate",
    "kahan_identity",
    "normal_form",
    "obstruction",
    "represent",
    "rotation_sqrt",
    "sign_assign",
    "sign_assign_exact",
    "sign_matrix_sum",
    "sign_vector_for_index",
    "two_factor",
]


def _tokens(values):
    return [str(v) for v in values]


def sign_assign_exact(a, c, prefer_minus=False):
    """Exact-arithmetic sign assignment.

    Entries of `a` and the magnitudes `c` may be ints, Fractions, or
    strings ("p/q", integer, or decimal, all read exactly). The report's
    minors and determinant come back as Fractions.
    """
    report = _core.sign_assign_exact([_tokens(row) for row in a], _tokens(c), prefer_minus)
    report["minors"] = [Fraction(v) for v in report["minors"]]
    report["det"] = Fraction(report["det"])
    return report


def fact_e_exact(a):
    """Exact-arithmetic fact_e; entries as in :func:`sign_assign_exact`."""
    return _core.fact_e_exact([_tokens(row) for row in a])
