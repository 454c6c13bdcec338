from dataclasses import dataclass
from typing import Any, Dict
import numbers

import numpy as np

from ..arrays import readonly
from ..errors import DimensionMismatchError


@dataclass(frozen=True)
class TwoComponentState:
    """Two-component wave function Ψ = (Ψ⁽¹⁾; Ψ⁽²⁾) with Ψ⁽¹⁾ = i∂_tψ and Ψ⁽²⁾ = ψ.

    The flat layout puts `upper` at indices 0..n-1 and `lower` at n..2n-1, so entry n+i of
    `vector` is ψ_i.
    """

    upper: np.ndarray
    lower: np.ndarray

    def __post_init__(self):
        upper = np.asarray(self.upper)
        lower = np.asarray(self.lower)
        if upper.ndim != 1 or lower.ndim != 1:
            raise DimensionMismatchError(f"State components must be vectors, got shapes {upper.shape} and {lower.shape}")
        if upper.shape != lower.shape:
            raise DimensionMismatchError(f"State components differ in length: {upper.shape[0]} vs {lower.shape[0]}")
        object.__setattr__(self, "upper", readonly(upper, dtype=np.complex128))
        object.__setattr__(self, "lower", readonly(lower, dtype=np.complex128))

    @property
    def n(self) -> int:
        return self.upper.shape[0]

    @property
    def vector(self) -> np.ndarray:
        return np.concatenate([self.upper, self.lower])

    @classmethod
    def from_vector(cls, vector: np.ndarray) -> "TwoComponentState":
        vector = np.asarray(vector)
        if vector.ndim != 1 or vector.shape[0] % 2:
            raise DimensionMismatchError(f"Two-component vector must have even length, got shape {vector.shape}")
        n = vector.shape[0] // 2
        return cls(upper=vector[:n], lower=vector[n:])

    @classmethod
    def from_wavefunction(cls, psi: np.ndarray, psi_dot: np.ndarray) -> "TwoComponentState":
        """Assemble (iψ̇; ψ) from a wave function and its time derivative."""
        return cls(upper=1j * np.asarray(psi_dot), lower=np.asarray(psi))

    def rotated(self, basis: np.ndarray) -> "TwoComponentState":
        """Apply the same n×n matrix to both components."""
        basis = np.asarray(basis)
        if basis.shape != (self.n, self.n):
            raise DimensionMismatchError(f"Rotation of shape {basis.shape} does not match state dimension {self.n}")
        return TwoComponentState(upper=basis @ self.upper, lower=basis @ self.lower)

    def scaled(self, factor: numbers.Number) -> "TwoComponentState":
        return TwoComponentState(upper=factor * self.upper, lower=factor * self.lower)

    def __add__(self, other: "TwoComponentState") -> "TwoComponentState":
        if not isinstance(other, TwoComponentState):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatchError(f"Cannot add states of dimension {self.n} and {other.n}")
        return TwoComponentState(upper=self.upper + other.upper, lower=self.lower + other.lower)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "upper": {"real": self.upper.real.tolist(), "imag": self.upper.imag.tolist()},
            "lower": {"real": self.lower.real.tolist(), "imag": self.lower.imag.tolist()},
        }
