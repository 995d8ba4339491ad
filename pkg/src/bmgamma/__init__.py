"""Exact computation and verification of Boros-Moll polynomials, their
symmetric decompositions and gamma-vectors."""

from bmgamma.kernels import binomial, double_factorial_odd, factorial, gen_binomial
from bmgamma.poly import Poly
from bmgamma.boros_moll import c_row, d_row_closed, d_row_recurrence, p_poly, q_poly, q_poly_ode
from bmgamma.symdecomp import SymDecomp, decompose, recompose
from bmgamma.gamma import Classification, GammaVector, classify, from_gamma, gamma_vector, signed_poly
from bmgamma.triangles import AlphaBetaTriangle, build_triangle, signed_sequence

__all__ = [
    "AlphaBetaTriangle",
    "Classification",
    "GammaVector",
    "Poly",
    "SymDecomp",
    "binomial",
    "build_triangle",
    "c_row",
    "classify",
    "d_row_closed",
    "d_row_recurrence",
    "decompose",
    "double_factorial_odd",
    "factorial",
    "from_gamma",
    "gamma_vector",
    "gen_binomial",
    "p_poly",
    "q_poly",
    "q_poly_ode",
    "recompose",
    "signed_poly",
    "signed_sequence",
]

__version__ = "0.1.0"
