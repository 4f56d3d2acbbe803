"""Closed forms of logarithmic integrals over (0, 1) with a quadrature cross-check."""

from .closedform import (
    ClosedForm,
    OddM,
    TermSum,
    i_odd,
    j_even,
    j_odd,
    j_recip_odd,
    lemma2_integral,
    lemma3_integral,
    log_decomposition,
    phi_nodes,
)
from .funceq import FAMILIES, PhiCase, central_binomial_series, f_unit, g_halfline, hzn, reflection_residual
from .quadrature import QuadConfig, QuadResult, integrate_halfline, integrate_unit, oracle
from .specfun import CATALAN, CONSTANTS, li2, ti2

__version__ = "0.1.0"
