from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Sequence, Tuple, Union

import numpy as np

from ..arrays import readonly
from ..errors import ConfigurationError, DimensionMismatchError
from ..lattice.spectrum import KineticSpectrum

INDETERMINATE_BAND = 1e-10


class MetricMode(str, Enum):
    PER_MODE = "per_mode"
    CONTINUOUS = "continuous"

    @classmethod
    def parse(cls, value: Union[str, "MetricMode"]) -> "MetricMode":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            options = ", ".join(mode.value for mode in cls)
            raise ConfigurationError(f"Unknown metric mode '{value}', expected one of: {options}") from None


@dataclass(frozen=True)
class MetricParams:
    """Parameters selecting one member of the Dieudonné family.

    PER_MODE carries one (α_i, β_i) pair per kinetic mode. CONTINUOUS carries a single (α, β)
    and couples the modes through β·a_i^{1/2}, the block structure of [[α, βK^{1/2}], [βK^{1/2}, αK]].

    Example:
        >>> MetricParams.default(4)
        >>> MetricParams.continuous(alpha=1.0, beta=0.5)
        >>> MetricParams.from_branch_weights(alpha_plus=0.75, alpha_minus=0.25)
    """

    alphas: np.ndarray
    betas: np.ndarray
    mode: MetricMode = MetricMode.PER_MODE

    def __post_init__(self):
        object.__setattr__(self, "mode", MetricMode.parse(self.mode))
        alphas = np.atleast_1d(np.asarray(self.alphas, dtype=np.float64))
        betas = np.atleast_1d(np.asarray(self.betas, dtype=np.float64))
        if alphas.ndim != 1 or betas.ndim != 1:
            raise ConfigurationError("alphas and betas must be flat sequences")
        if alphas.shape != betas.shape:
            raise DimensionMismatchError(f"alphas and betas differ in length: {alphas.shape[0]} vs {betas.shape[0]}")
        if alphas.size == 0:
            raise ConfigurationError("At least one (alpha, beta) pair is required")
        if self.mode is MetricMode.CONTINUOUS and alphas.size != 1:
            raise ConfigurationError(f"Continuous form takes scalar alpha and beta, got {alphas.size} values")
        if not (np.all(np.isfinite(alphas)) and np.all(np.isfinite(betas))):
            raise ConfigurationError("alphas and betas must be finite")
        object.__setattr__(self, "alphas", readonly(alphas))
        object.__setattr__(self, "betas", readonly(betas))

    @classmethod
    def default(cls, n: int) -> "MetricParams":
        """α_i = 1, β_i = 0, i.e. Θ = I ⊕ K."""
        return cls.uniform(1.0, 0.0, n)

    @classmethod
    def uniform(cls, alpha: float, beta: float, n: int) -> "MetricParams":
        return cls(alphas=np.full(n, alpha), betas=np.full(n, beta), mode=MetricMode.PER_MODE)

    @classmethod
    def continuous(cls, alpha: float, beta: float) -> "MetricParams":
        return cls(alphas=[alpha], betas=[beta], mode=MetricMode.CONTINUOUS)

    @classmethod
    def from_branch_weights(cls, alpha_plus: float, alpha_minus: float) -> "MetricParams":
        """Weights of the positive and negative branch projectors: α = α⁺ + α⁻, β = α⁺ - α⁻."""
        return cls.continuous(alpha_plus + alpha_minus, alpha_plus - alpha_minus)

    @classmethod
    def charge_form(cls, n: int) -> "MetricParams":
        """α_i = 0, β_i = 1: the indefinite Klein-Gordon charge."""
        return cls.uniform(0.0, 1.0, n)

    def mode_blocks(self, spectrum: KineticSpectrum) -> Tuple[np.ndarray, np.ndarray]:
        """Per-mode (α_i, β̃_i) with β̃_i = β_i (PER_MODE) or β·√a_i (CONTINUOUS)."""
        if self.mode is MetricMode.CONTINUOUS:
            alphas = np.full(spectrum.n, self.alphas[0])
            return alphas, self.betas[0] * np.sqrt(spectrum.eigenvalues)
        self._require_modes(spectrum)
        return np.array(self.alphas), np.array(self.betas)

    def _require_modes(self, spectrum: KineticSpectrum) -> None:
        if self.alphas.size != spectrum.n:
            raise DimensionMismatchError(f"Metric has {self.alphas.size} parameter pairs but spectrum has {spectrum.n} modes")

    def positivity_margins(self, spectrum: KineticSpectrum) -> Tuple[np.ndarray, np.ndarray]:
        """Per-mode margins of the positivity predicate and their indeterminate bands."""
        a = np.asarray(spectrum.eigenvalues)
        if self.mode is MetricMode.CONTINUOUS:
            leading = np.full(spectrum.n, self.alphas[0] ** 2)
            margins = leading - self.betas[0] ** 2
        else:
            self._require_modes(spectrum)
            leading = a * self.alphas**2
            margins = leading - self.betas**2
        bands = INDETERMINATE_BAND * np.maximum(1.0, leading)
        return margins, bands

    def to_dict(self) -> Dict[str, Any]:
        return {"mode": self.mode.value, "alphas": self.alphas.tolist(), "betas": self.betas.tolist()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MetricParams":
        unknown = set(data) - {"mode", "alphas", "betas"}
        if unknown:
            raise ConfigurationError(f"Unknown metric keys: {sorted(unknown)}")
        missing = {"alphas", "betas"} - set(data)
        if missing:
            raise ConfigurationError(f"Missing metric keys: {sorted(missing)}")
        return cls(alphas=data["alphas"], betas=data["betas"], mode=data.get("mode", MetricMode.PER_MODE))


def broadcast(values: Union[float, Sequence[float]], n: int, name: str) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(values, dtype=np.float64))
    if arr.size == 1:
        return np.full(n, arr[0])
    if arr.size != n:
        raise DimensionMismatchError(f"{name} has {arr.size} entries, expected 1 or {n}")
    return arr
