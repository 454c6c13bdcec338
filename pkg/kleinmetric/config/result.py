from dataclasses import dataclass, field
from typing import List

from ..errors import ConfigurationError


@dataclass
class ValidationResult:
    """Configuration problems collected in one pass so every bad key is reported together."""

    errors: List[str] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.errors

    def __bool__(self) -> bool:
        return self.is_valid

    def add_error(self, message: str) -> None:
        self.errors.append(message)

    def raise_if_invalid(self) -> None:
        if self.errors:
            raise ConfigurationError("; ".join(self.errors))

    def __str__(self) -> str:
        if self.is_valid:
            return "Configuration: valid"
        lines = [f"Configuration: {len(self.errors)} error(s)"]
        lines.extend(f"  - {e}" for e in self.errors)
        return "\n".join(lines)
