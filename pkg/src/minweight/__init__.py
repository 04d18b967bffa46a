"""Exact tools for sparse polynomials with a repeated nonzero root.

Weight is the number of nonzero coefficients.  The package computes the
lower bounds on weight forced by a root of multiplicity k, constructs the
polynomials attaining them, counts monic multiples of (x + 1)^k over F_q by
weight, and checks all of it against exhaustive enumeration.
"""

from .bounds import check_bound, extremal_example, padic_digits, weight_lower_bound
from .construct import construct_extremal, example_n_equals_p
from .counting import m_w, total_identity_check, weight_distribution
from .ff import FieldDescriptor, FieldElement, enumerate_elements, make_field
from .poly import Polynomial

__version__ = "0.1.0"

__all__ = [
    "FieldDescriptor",
    "FieldElement",
    "Polynomial",
    "check_bound",
    "construct_extremal",
    "enumerate_elements",
    "example_n_equals_p",
    "extremal_example",
    "m_w",
    "make_field",
    "padic_digits",
    "total_identity_check",
    "weight_distribution",
    "weight_lower_bound",
]
