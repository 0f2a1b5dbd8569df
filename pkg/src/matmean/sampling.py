"""Seeded random matrices and Loewner-order measurements."""

from typing import TYPE_CHECKING, Tuple

import numpy as np

from .calculus import mat_apply
from .matrix import PosDefMatrix, hermitian_part

if TYPE_CHECKING:
    from ..repfun.base import RepresentingFunction

SPD_SHIFT = 1e-3
HERMITIAN_MIN_MODULUS = 0.5
HERMITIAN_MAX_MODULUS = 2.0


def _complex_gaussian(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2.0)


def random_spd(rng: np.random.Generator, dim: int) -> PosDefMatrix:
    """G G* + 1e-3 I with standard complex normal G."""
    g = _complex_gaussian(rng, dim, dim)
    return PosDefMatrix.from_array(g @ g.conj().T + SPD_SHIFT * np.eye(dim))


def random_psd_increment(rng: np.random.Generator, dim: int) -> np.ndarray:
    """H H* with H of random rank 1..dim; a plain array to add to a matrix."""
    rank = int(rng.integers(1, dim + 1))
    h = _complex_gaussian(rng, dim, rank)
    return hermitian_part(h @ h.conj().T)


def random_rank_deficient(rng: np.random.Generator, dim: int) -> PosDefMatrix:
    """Singular positive semidefinite matrix of rank dim - 1 (dim >= 2)."""
    h = _complex_gaussian(rng, dim, dim - 1)
    return PosDefMatrix.from_array(hermitian_part(h @ h.conj().T), semidefinite=True)


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar-distributed unitary from the QR factorization of a complex Gaussian."""
    q, r = np.linalg.qr(_complex_gaussian(rng, dim, dim))
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def random_hermitian(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Invertible, generally indefinite Hermitian matrix.

    Eigenvalues have random signs and moduli in [0.5, 2], so the condition
    number stays at most 4.
    """
    u = random_unitary(rng, dim)
    values = rng.choice([-1.0, 1.0], dim) * rng.uniform(HERMITIAN_MIN_MODULUS, HERMITIAN_MAX_MODULUS, dim)
    return hermitian_part((u * values) @ u.conj().T)


def random_ordered_pair(rng: np.random.Generator, dim: int) -> Tuple[PosDefMatrix, PosDefMatrix]:
    """A <= B, both strictly positive."""
    lower = random_spd(rng, dim)
    upper = PosDefMatrix.from_array(lower.entries + random_psd_increment(rng, dim))
    return lower, upper


def loewner_violation(upper: np.ndarray, lower: np.ndarray, scale: float) -> float:
    """max(0, -lambda_min(upper - lower)) / scale; 0 when lower <= upper."""
    smallest = float(np.linalg.eigvalsh(hermitian_part(upper - lower))[0])
    return max(0.0, -smallest) / max(scale, np.finfo(float).tiny)


def describe_matrix(m: np.ndarray) -> str:
    return np.array2string(np.asarray(m), precision=6, separator=",", max_line_width=400).replace("\n", "")


def operator_monotonicity_violation(f: "RepresentingFunction", rng: np.random.Generator,
                                    dim: int, trials: int) -> Tuple[float, str]:
    """Worst relative violation of f(A) <= f(B) over random pairs A <= B.

    Returns (worst violation, witness description). Sampling gives a
    necessary condition for operator monotonicity, not a proof.
    """
    worst, witness = 0.0, ""
    for _ in range(trials):
        lower, upper = random_ordered_pair(rng, dim)
        f_lower, f_upper = mat_apply(f, lower), mat_apply(f, upper)
        violation = loewner_violation(f_upper.entries, f_lower.entries, f_lower.norm + f_upper.norm)
        if violation > worst:
            worst = violation
            witness = f"A={describe_matrix(lower.entries)} B={describe_matrix(upper.entries)}"
    return worst, witness
