"""Matrix text format: a `dim n` header, then n rows of 2n comma-separated
values re,im,re,im,..."""

import io
from pathlib import Path
from typing import TextIO, Union

import numpy as np
import pandas as pd

from .matrix import PosDefMatrix


def parse_matrix(text: str, semidefinite: bool = False) -> PosDefMatrix:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty matrix document")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "dim" or not header[1].isdigit():
        raise ValueError(f"expected header 'dim n', got '{lines[0].strip()}'")
    dim = int(header[1])

    frame = pd.read_csv(io.StringIO("\n".join(lines[1:])), header=None, dtype=float)
    if frame.shape != (dim, 2 * dim):
        raise ValueError(f"expected {dim} rows of {2 * dim} values, got shape {frame.shape}")
    values = frame.to_numpy()
    return PosDefMatrix.from_array(values[:, 0::2] + 1j * values[:, 1::2], semidefinite=semidefinite)


def read_matrix(path: Union[str, Path], semidefinite: bool = False) -> PosDefMatrix:
    """Read a matrix document; semidefinite=True accepts singular matrices."""
    return parse_matrix(Path(path).read_text(), semidefinite=semidefinite)


def write_matrix(matrix: PosDefMatrix, stream: TextIO) -> None:
    """Write `matrix` in the text format, full double precision."""
    entries = matrix.entries
    interleaved = np.empty((matrix.dim, 2 * matrix.dim))
    interleaved[:, 0::2] = entries.real
    interleaved[:, 1::2] = entries.imag
    stream.write(f"dim {matrix.dim}\n")
    pd.DataFrame(interleaved).to_csv(stream, header=False, index=False, float_format="%.17g")
