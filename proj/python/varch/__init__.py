"""Varchenko matrices and Aguiar-Mahajan systems of sign-vector arrangements.

Rationals and polynomials cross the boundary as exact strings; see the
module docstrings of the individual functions.
"""

from ._core import (
    Arrangement,
    Error,
    InputError,
    assembly,
    closed_form,
    closed_form_det,
    distance,
    distance_extended,
    restriction_matrix,
    run_checks,
    solution_dimension,
    solve_central,
    varchenko_matrix,
    verify_solution,
    witt_check,
)

__all__ = [
    "Arrangement",
    "Error",
    "InputError",
    "assembly",
    "closed_form",
    "closed_form_det",
    "distance",
    "distance_extended",
    "restriction_matrix",
    "run_checks",
    "solution_dimension",
    "solve_central",
    "varchenko_matrix",
    "verify_solution",
    "witt_check",
]
