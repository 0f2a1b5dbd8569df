"""Positive-definite matrix functional calculus and Kubo-Ando means."""

from .calculus import (
    RegularizedMean,
    classical_mean,
    default_eps_schedule,
    kubo_ando_mean,
    mat_apply,
    regularized_mean,
)
from .matrix_io import parse_matrix, read_matrix, write_matrix
from .matrix import PosDefMatrix, hermitian_part
from .sampling import (
    loewner_violation,
    operator_monotonicity_violation,
    random_hermitian,
    random_ordered_pair,
    random_psd_increment,
    random_rank_deficient,
    random_spd,
)

__all__ = [
    "PosDefMatrix",
    "hermitian_part",
    "RegularizedMean",
    "classical_mean",
    "default_eps_schedule",
    "kubo_ando_mean",
    "mat_apply",
    "regularized_mean",
    "parse_matrix",
    "read_matrix",
    "write_matrix",
    "loewner_violation",
    "operator_monotonicity_violation",
    "random_hermitian",
    "random_ordered_pair",
    "random_psd_increment",
    "random_rank_deficient",
    "random_spd",
]
