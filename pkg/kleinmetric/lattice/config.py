from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Union
import numbers

from ..errors import ConfigurationError

DEFAULT_N = 64
DEFAULT_H = 1.0
DEFAULT_MASS = 1.0


class BoundaryCondition(str, Enum):
    DIRICHLET = "dirichlet"
    PERIODIC = "periodic"

    @classmethod
    def parse(cls, value: Union[str, "BoundaryCondition"]) -> "BoundaryCondition":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            options = ", ".join(bc.value for bc in cls)
            raise ConfigurationError(f"Unknown boundary condition '{value}', expected one of: {options}") from None


@dataclass(frozen=True)
class LatticeConfig:
    """Uniform 1-D grid on which K = -Δ + m² is discretized.

    Args:
        n: Number of grid points.
        h: Grid spacing.
        m: Particle mass.
        bc: Boundary condition. Periodic rings need m > 0 to exclude the zero mode.

    Example:
        >>> cfg = LatticeConfig(n=64, h=0.1, m=1.0)
        >>> cfg = LatticeConfig(n=32, h=1.0, m=0.5, bc="periodic")
    """

    n: int
    h: float = DEFAULT_H
    m: float = DEFAULT_MASS
    bc: BoundaryCondition = BoundaryCondition.DIRICHLET

    def __post_init__(self):
        object.__setattr__(self, "bc", BoundaryCondition.parse(self.bc))
        self.validate()

    def validate(self) -> bool:
        if isinstance(self.n, bool) or not isinstance(self.n, numbers.Integral):
            raise ConfigurationError(f"Grid size n must be an integer, got {self.n!r}")
        if self.n < 1:
            raise ConfigurationError(f"Grid size n must be at least 1, got {self.n}")
        if not isinstance(self.h, numbers.Real) or not self.h > 0:
            raise ConfigurationError(f"Grid spacing h must be positive, got {self.h}")
        if not isinstance(self.m, numbers.Real) or not self.m >= 0:
            raise ConfigurationError(f"Mass m must be non-negative, got {self.m}")
        if self.bc is BoundaryCondition.PERIODIC and self.m <= 0:
            raise ConfigurationError("Periodic boundary condition requires m > 0 (zero Fourier mode)")
        return True

    @property
    def length(self) -> float:
        """Box length: distance between the Dirichlet walls, or ring circumference."""
        if self.bc is BoundaryCondition.DIRICHLET:
            return (self.n + 1) * self.h
        return self.n * self.h

    def to_dict(self) -> Dict[str, Any]:
        return {"n": int(self.n), "h": float(self.h), "mass": float(self.m), "bc": self.bc.value}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LatticeConfig":
        unknown = set(data) - {"n", "h", "mass", "bc"}
        if unknown:
            raise ConfigurationError(f"Unknown lattice keys: {sorted(unknown)}")
        return cls(
            n=data.get("n", DEFAULT_N),
            h=data.get("h", DEFAULT_H),
            m=data.get("mass", DEFAULT_MASS),
            bc=data.get("bc", BoundaryCondition.DIRICHLET),
        )
