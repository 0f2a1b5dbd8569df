"""Generator functions Psi parametrizing the Molnár classes."""

from .spec import MAX_HARMONICS, GeneratorSpec, eval_multiplicative, evaluate
from .validation import grid_sup_norm, validate

__all__ = [
    "MAX_HARMONICS",
    "GeneratorSpec",
    "evaluate",
    "eval_multiplicative",
    "grid_sup_norm",
    "validate",
]
