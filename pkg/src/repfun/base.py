"""Abstract base class for representing functions of Kubo-Ando means."""

from abc import ABC, abstractmethod
from typing import Optional, Union

import numpy as np
from numpy.typing import ArrayLike

from .branch import check_off_cut, check_positive


class RepresentingFunction(ABC):
    """Interface shared by every representing function f.

    A mean is fixed by f through I sigma (x I) = f(x) I. Concrete kinds
    (classical closed forms, the f_n / f_alpha families, the elliptic
    extremals, generator-built functions) only implement the evaluation
    itself; branch handling and real/complex dispatch live here.
    """

    kind: str = "abstract"

    @property
    def period_c(self) -> Optional[float]:
        """Type scalar c > 1 when f is a Molnár function of type c, else None."""
        return None

    @abstractmethod
    def _evaluate_complex(self, z: np.ndarray) -> np.ndarray:
        """Evaluate on a complex array already checked to be off the cut.

        Args:
            z: complex array with no entry on (-inf, 0]

        Returns:
            Complex array of f(z), principal branches throughout
        """
        pass

    def _evaluate_real(self, x: np.ndarray) -> np.ndarray:
        """Evaluate on a float array of positive reals.

        Args:
            x: float array, every entry > 0

        Returns:
            Float array of f(x)
        """
        return self._evaluate_complex(x.astype(complex)).real

    def evaluate(self, z: ArrayLike) -> Union[float, complex, np.ndarray]:
        """f(z) for z off (-inf, 0]; real positive input gives real output.

        Raises:
            BranchCutError: if any z lies on the closed negative real axis
        """
        scalar = np.ndim(z) == 0
        if not np.iscomplexobj(z):
            values = self._evaluate_real(check_positive(z))
            return float(values) if scalar else values
        values = self._evaluate_complex(check_off_cut(z))
        return complex(values) if scalar else values

    def __call__(self, z: ArrayLike) -> Union[float, complex, np.ndarray]:
        return self.evaluate(z)

    def value_at_zero(self) -> float:
        """lim_{x -> 0+} f(x), used for the kernel of semidefinite arguments."""
        return 0.0

    def describe(self) -> str:
        return self.kind

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.describe()}>"
