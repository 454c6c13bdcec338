import numpy as np
from typing import Optional

from .errors import DimensionMismatchError


def readonly(values, dtype: Optional[type] = None) -> np.ndarray:
    arr = np.array(values, dtype=dtype, copy=True)
    arr.setflags(write=False)
    return arr


def max_norm(matrix: np.ndarray) -> float:
    return float(np.max(np.abs(matrix))) if np.size(matrix) else 0.0


def require_square(matrix: np.ndarray, name: str = "matrix") -> np.ndarray:
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatchError(f"{name} must be square, got shape {matrix.shape}")
    return matrix
