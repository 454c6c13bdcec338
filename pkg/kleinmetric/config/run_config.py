from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple, Union
import json
import math
import os
import tomllib

import yaml

from ..errors import ConfigurationError, KleinMetricError
from ..lattice.config import BoundaryCondition, LatticeConfig
from ..logging import get_logger
from ..metric.params import MetricMode, MetricParams, broadcast
from .result import ValidationResult

logger = get_logger(__name__)

OUTPUT_ENV_VAR = "KLEINMETRIC_OUT"
OUTPUT_FORMATS = ("csv", "json")
INITIAL_KINDS = ("packet", "eigenstate", "mixed")

Scalars = Union[float, List[float]]


def _reject_unknown(data: Mapping[str, Any], allowed: set, section: str) -> None:
    if not isinstance(data, Mapping):
        raise ConfigurationError(f"Section '{section}' must be a mapping, got {type(data).__name__}")
    unknown = set(data) - allowed
    if unknown:
        raise ConfigurationError(f"Unknown {section} keys: {sorted(unknown)}")


def _as_float(value: Any, name: str) -> float:
    try:
        result = float(value)
    except (TypeError, ValueError):
        raise ConfigurationError(f"{name} must be a number, got {value!r}") from None
    if not math.isfinite(result):
        raise ConfigurationError(f"{name} must be finite, got {value!r}")
    return result


def _as_int(value: Any, name: str) -> int:
    number = _as_float(value, name)
    if isinstance(value, bool) or not number.is_integer():
        raise ConfigurationError(f"{name} must be an integer, got {value!r}")
    return int(number)


def _as_scalars(value: Any, name: str) -> Scalars:
    if isinstance(value, str) and "," in value:
        value = value.split(",")
    if isinstance(value, (list, tuple)):
        if not value:
            raise ConfigurationError(f"{name} must not be empty")
        return [_as_float(v, name) for v in value]
    return _as_float(value, name)


@dataclass
class MetricSpec:
    """Metric parameters as written in a config file; scalars broadcast over the modes."""

    mode: MetricMode = MetricMode.PER_MODE
    alphas: Scalars = 1.0
    betas: Scalars = 0.0

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "MetricSpec":
        _reject_unknown(data, {"mode", "alphas", "betas"}, "metric")
        return cls(
            mode=MetricMode.parse(data.get("mode", MetricMode.PER_MODE)),
            alphas=_as_scalars(data.get("alphas", 1.0), "alphas"),
            betas=_as_scalars(data.get("betas", 0.0), "betas"),
        )

    def resolve(self, n: int) -> MetricParams:
        if self.mode is MetricMode.CONTINUOUS:
            alphas = broadcast(self.alphas, 1, "alphas")
            betas = broadcast(self.betas, 1, "betas")
            return MetricParams.continuous(float(alphas[0]), float(betas[0]))
        return MetricParams(alphas=broadcast(self.alphas, n, "alphas"), betas=broadcast(self.betas, n, "betas"))

    def to_dict(self) -> Dict[str, Any]:
        return {"mode": self.mode.value, "alphas": self.alphas, "betas": self.betas}


@dataclass
class InitialSpec:
    kind: str = "packet"
    x0: Optional[float] = None
    sigma: float = 1.0
    k0: float = 0.0
    mode: int = 1
    branch: int = 1
    weights: Tuple[float, float] = (1.0, 1.0)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "InitialSpec":
        _reject_unknown(data, {"kind", "x0", "sigma", "k0", "mode", "branch", "weights"}, "evolution.initial")
        weights = data.get("weights", (1.0, 1.0))
        if not isinstance(weights, (list, tuple)) or len(weights) != 2:
            raise ConfigurationError(f"weights must be a pair [plus, minus], got {weights!r}")
        x0 = data.get("x0")
        return cls(
            kind=str(data.get("kind", "packet")).lower(),
            x0=None if x0 is None else _as_float(x0, "x0"),
            sigma=_as_float(data.get("sigma", 1.0), "sigma"),
            k0=_as_float(data.get("k0", 0.0), "k0"),
            mode=_as_int(data.get("mode", 1), "mode"),
            branch=_as_int(data.get("branch", 1), "branch"),
            weights=(_as_float(weights[0], "weights"), _as_float(weights[1], "weights")),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "x0": self.x0,
            "sigma": self.sigma,
            "k0": self.k0,
            "mode": self.mode,
            "branch": self.branch,
            "weights": list(self.weights),
        }


@dataclass
class EvolutionSpec:
    t_max: float = 10.0
    steps: int = 100
    initial: InitialSpec = field(default_factory=InitialSpec)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "EvolutionSpec":
        _reject_unknown(data, {"t_max", "steps", "initial"}, "evolution")
        return cls(
            t_max=_as_float(data.get("t_max", 10.0), "t_max"),
            steps=_as_int(data.get("steps", 100), "steps"),
            initial=InitialSpec.from_dict(data.get("initial", {})),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {"t_max": self.t_max, "steps": self.steps, "initial": self.initial.to_dict()}


@dataclass
class ConvergenceSpec:
    length: float = math.pi
    levels: List[int] = field(default_factory=lambda: [9, 19, 39, 79])
    modes: int = 3

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "ConvergenceSpec":
        _reject_unknown(data, {"length", "levels", "modes"}, "convergence")
        levels = data.get("levels", [9, 19, 39, 79])
        if isinstance(levels, str):
            levels = levels.split(",")
        if not isinstance(levels, (list, tuple)):
            raise ConfigurationError(f"levels must be a list of grid sizes, got {levels!r}")
        return cls(
            length=_as_float(data.get("length", math.pi), "length"),
            levels=[_as_int(n, "levels") for n in levels],
            modes=_as_int(data.get("modes", 3), "modes"),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {"length": self.length, "levels": list(self.levels), "modes": self.modes}


@dataclass
class OutputSpec:
    directory: str = "results"
    format: str = "csv"

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "OutputSpec":
        _reject_unknown(data, {"directory", "format"}, "output")
        return cls(directory=str(data.get("directory", "results")), format=str(data.get("format", "csv")).lower())

    def to_dict(self) -> Dict[str, Any]:
        return {"directory": self.directory, "format": self.format}


def _lattice_from_dict(data: Mapping[str, Any]) -> LatticeConfig:
    _reject_unknown(data, {"n", "h", "mass", "bc"}, "lattice")
    values = dict(data)
    if "n" in values:
        values["n"] = _as_int(values["n"], "n")
    for key in ("h", "mass"):
        if key in values:
            values[key] = _as_float(values[key], key)
    return LatticeConfig.from_dict(values)


_SECTIONS: Dict[str, Callable[[Mapping[str, Any]], Any]] = {
    "lattice": _lattice_from_dict,
    "metric": MetricSpec.from_dict,
    "evolution": EvolutionSpec.from_dict,
    "convergence": ConvergenceSpec.from_dict,
    "output": OutputSpec.from_dict,
}


@dataclass
class RunConfig:
    """Complete description of one CLI run.

    Example:
        >>> config = RunConfig.load("run.yaml", overrides={"lattice": {"n": 128}})
        >>> config.metric.resolve(config.lattice.n)
        >>> config.save("run_resolved.yaml")
    """

    lattice: LatticeConfig = field(default_factory=lambda: LatticeConfig.from_dict({}))
    metric: MetricSpec = field(default_factory=MetricSpec)
    evolution: EvolutionSpec = field(default_factory=EvolutionSpec)
    convergence: ConvergenceSpec = field(default_factory=ConvergenceSpec)
    output: OutputSpec = field(default_factory=OutputSpec)

    def validate(self) -> ValidationResult:
        result = ValidationResult()
        n = self.lattice.n

        try:
            self.metric.resolve(n)
        except KleinMetricError as e:
            result.add_error(str(e))

        if self.evolution.t_max < 0:
            result.add_error(f"t_max must be non-negative, got {self.evolution.t_max}")
        if self.evolution.steps < 1:
            result.add_error(f"steps must be at least 1, got {self.evolution.steps}")

        initial = self.evolution.initial
        if initial.kind not in INITIAL_KINDS:
            result.add_error(f"Unknown initial state kind '{initial.kind}', expected one of: {', '.join(INITIAL_KINDS)}")
        elif initial.kind == "packet":
            if initial.sigma < self.lattice.h / 2:
                result.add_error(f"Packet width sigma={initial.sigma} is below h/2={self.lattice.h / 2}")
            if initial.x0 is not None and not self._packet_centre_inside(initial.x0):
                interval = f"(0, {self.lattice.length})" if self.lattice.bc is BoundaryCondition.DIRICHLET else f"[0, {self.lattice.length})"
                result.add_error(f"Packet centre x0={initial.x0} lies outside {interval}")
        else:
            if not 1 <= initial.mode <= n:
                result.add_error(f"Initial mode must be in [1, {n}], got {initial.mode}")
            if initial.kind == "eigenstate" and initial.branch not in (1, -1):
                result.add_error(f"Initial branch must be +1 or -1, got {initial.branch}")

        levels = self.convergence.levels
        if not levels:
            result.add_error("At least one convergence level is required")
        elif any(b <= a for a, b in zip(levels, levels[1:])):
            result.add_error(f"Convergence levels must be strictly increasing, got {levels}")
        elif not 1 <= self.convergence.modes <= levels[0]:
            result.add_error(f"Convergence modes must be in [1, {levels[0]}], got {self.convergence.modes}")
        if self.convergence.length <= 0:
            result.add_error(f"Box length must be positive, got {self.convergence.length}")

        if self.output.format not in OUTPUT_FORMATS:
            result.add_error(f"Unknown output format '{self.output.format}', expected one of: {', '.join(OUTPUT_FORMATS)}")

        return result

    def _packet_centre_inside(self, x0: float) -> bool:
        if self.lattice.bc is BoundaryCondition.DIRICHLET:
            return 0 < x0 < self.lattice.length
        return 0 <= x0 < self.lattice.length

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lattice": self.lattice.to_dict(),
            "metric": self.metric.to_dict(),
            "evolution": self.evolution.to_dict(),
            "convergence": self.convergence.to_dict(),
            "output": self.output.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "RunConfig":
        result = ValidationResult()
        if not isinstance(data, Mapping):
            raise ConfigurationError(f"Run configuration must be a mapping, got {type(data).__name__}")

        unknown = set(data) - set(_SECTIONS)
        if unknown:
            result.add_error(f"Unknown configuration sections: {sorted(unknown)}")

        sections = {}
        for name, builder in _SECTIONS.items():
            try:
                sections[name] = builder(data.get(name) or {})
            except ConfigurationError as e:
                result.add_error(str(e))

        result.raise_if_invalid()
        config = cls(**sections)
        config.validate().raise_if_invalid()
        return config

    @staticmethod
    def read_file(path: Union[str, Path]) -> Dict[str, Any]:
        path = Path(path)
        if not path.exists():
            raise ConfigurationError(f"Config file not found: {path}")
        suffix = path.suffix.lower()
        try:
            text = path.read_text()
            if suffix in (".yaml", ".yml"):
                data = yaml.safe_load(text)
            elif suffix == ".json":
                data = json.loads(text)
            elif suffix == ".toml":
                data = tomllib.loads(text)
            else:
                raise ConfigurationError(f"Config file must be .yaml, .yml, .json or .toml, got: {path.suffix}")
        except (yaml.YAMLError, json.JSONDecodeError, tomllib.TOMLDecodeError, OSError, UnicodeDecodeError) as e:
            raise ConfigurationError(f"Cannot parse config file {path}: {e}") from None
        return data or {}

    @classmethod
    def load(
        cls,
        path: Optional[Union[str, Path]] = None,
        overrides: Optional[Mapping[str, Mapping[str, Any]]] = None,
        environ: Optional[Mapping[str, str]] = None,
    ) -> "RunConfig":
        """Merge defaults, the output-directory environment override, a config file and flag overrides.

        Flags win over file values, file values win over the environment.
        """
        environ = os.environ if environ is None else environ
        data: Dict[str, Any] = {}
        if environ.get(OUTPUT_ENV_VAR):
            data["output"] = {"directory": environ[OUTPUT_ENV_VAR]}

        if path is not None:
            file_data = cls.read_file(path)
            if not isinstance(file_data, Mapping):
                raise ConfigurationError(f"Config file {path} must contain a mapping at the top level")
            _merge(data, file_data)
            logger.info(f"Config: Loaded configuration from {path}")

        if overrides:
            _merge(data, overrides)

        return cls.from_dict(data)

    def save(self, path: Union[str, Path]) -> None:
        path = Path(path)
        with open(path, "w") as f:
            yaml.dump(self.to_dict(), f, default_flow_style=False, sort_keys=False)
        logger.info(f"Config: Saved configuration to {path}")


def _merge(base: Dict[str, Any], update: Mapping[str, Any]) -> None:
    for key, value in update.items():
        if isinstance(value, Mapping) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        elif isinstance(value, Mapping):
            base[key] = {}
            _merge(base[key], value)
        else:
            base[key] = value
