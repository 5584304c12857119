"""Data model for one CLI analysis run."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

from data_models.reduction import SelectionStrategy
from utils.errors import ConfigurationError


class MissingPolicy(Enum):
    """What to do with blank cells while loading."""

    REJECT = "reject"
    DROP_ROW = "drop-row"


class OutputFormat(Enum):
    """How command results are written."""

    JSON = "json"
    TABLE = "table"
    CSV = "csv"
    TSV = "tsv"


# Commands that produce a cumulative curve and may therefore plot it
PLOTTING_COMMANDS = ("reduce", "curve")

# Commands whose tables can also be written as delimited text
DELIMITED_COMMANDS = ("rank", "reduce", "curve")
DELIMITED_FORMATS = (OutputFormat.CSV, OutputFormat.TSV)


@dataclass(frozen=True)
class IngestOptions:
    """How a delimited dataset file is read.

    ``has_header`` of None means auto-detect from the first row.
    ``label_column`` is a 0-based index or a header name.
    """
    delimiter: str = ","
    has_header: Optional[bool] = None
    label_column: Union[int, str] = 0
    missing_policy: MissingPolicy = MissingPolicy.REJECT
    response_range: Optional[Tuple[int, int]] = None
    encoding: str = "utf-8"

    def __post_init__(self) -> None:
        if len(self.delimiter) != 1:
            raise ConfigurationError(f"delimiter must be one character, got {self.delimiter!r}")
        if self.response_range is not None:
            low, high = self.response_range
            if low < 0 or high < low:
                raise ConfigurationError(
                    f"response range must satisfy 0 <= low <= high, got {low}-{high}")


@dataclass(frozen=True)
class RunConfig:
    """Everything a CLI command needs to run an analysis."""
    command: str
    input_path: Optional[str] = None
    ingest: IngestOptions = IngestOptions()
    strategy: SelectionStrategy = SelectionStrategy.RANKED_PREFIX
    output_format: OutputFormat = OutputFormat.JSON
    plot_path: Optional[str] = None
    max_workers: int = 1

    def validate(self) -> None:
        """Reject mutually inconsistent settings.

        Raises:
            ConfigurationError: If the settings contradict each other.
        """
        if self.plot_path and self.command not in PLOTTING_COMMANDS:
            raise ConfigurationError(
                f"a plot path is only valid for {', '.join(PLOTTING_COMMANDS)}, "
                f"not {self.command!r}")
        if self.plot_path and not self.plot_path.lower().endswith(".svg"):
            raise ConfigurationError(f"plot path must end in .svg, got {self.plot_path!r}")
        if self.output_format in DELIMITED_FORMATS and self.command not in DELIMITED_COMMANDS:
            raise ConfigurationError(
                f"{self.output_format.value} output is only valid for {', '.join(DELIMITED_COMMANDS)}, "
                f"not {self.command!r}")
        if self.max_workers < 1:
            raise ConfigurationError(f"workers must be >= 1, got {self.max_workers}")
        if self.command != "synth" and not self.input_path:
            raise ConfigurationError(f"command {self.command!r} needs an input path")
