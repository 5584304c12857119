"""Data model describing a synthetic rating-scale dataset."""

from dataclasses import asdict, dataclass
from typing import Any, Dict, Tuple

from item_reducer.exceptions import InvalidGeneratorSpecError


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters of a planted-signal synthetic dataset.

    ``signal_items`` are 1-based item positions whose latent values are
    shifted up by ``signal_strength`` for positive respondents.
    """
    respondents: int
    items: int
    signal_items: Tuple[int, ...] = ()
    response_levels: int = 4
    signal_strength: float = 1.0
    prevalence: float = 0.5
    seed: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "signal_items", tuple(sorted(set(self.signal_items))))
        if self.respondents < 2:
            raise InvalidGeneratorSpecError(
                f"respondents must be >= 2, got {self.respondents}")
        if self.items < 1:
            raise InvalidGeneratorSpecError(f"items must be >= 1, got {self.items}")
        if any(not 1 <= position <= self.items for position in self.signal_items):
            raise InvalidGeneratorSpecError(
                f"signal items must lie in 1..{self.items}, got {list(self.signal_items)}")
        if self.response_levels < 2:
            raise InvalidGeneratorSpecError(
                f"response_levels must be >= 2, got {self.response_levels}")
        if not self.signal_strength >= 0.0:
            raise InvalidGeneratorSpecError(
                f"signal_strength must be >= 0, got {self.signal_strength}")
        if not 0.0 < self.prevalence < 1.0:
            raise InvalidGeneratorSpecError(
                f"prevalence must lie strictly between 0 and 1, got {self.prevalence}")

    @property
    def noise_items(self) -> Tuple[int, ...]:
        return tuple(p for p in range(1, self.items + 1) if p not in self.signal_items)

    def to_dict(self) -> Dict[str, Any]:
        spec = asdict(self)
        spec["signal_items"] = list(self.signal_items)
        return spec
