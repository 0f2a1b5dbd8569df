"""Elliptic kernel: complete integrals, Jacobi functions, period-to-modulus solver."""

from .integrals import agm, complete_elliptic_k, complete_elliptic_k_pair
from .jacobi import jacobi_sn_cn_dn
from .modulus import EllipticModulus, solve_modulus_for_period

__all__ = [
    "agm",
    "complete_elliptic_k",
    "complete_elliptic_k_pair",
    "jacobi_sn_cn_dn",
    "EllipticModulus",
    "solve_modulus_for_period",
]
