"""
Centralized configuration management for item_reducer.

This module provides a single source of truth for all application configuration
"""

import logging
import os
from dataclasses import dataclass, field

from dotenv import load_dotenv

from utils.errors import ConfigurationError

# Load environment variables
load_dotenv()

LOGGER = logging.getLogger(__name__)

MISSING_POLICIES = ("reject", "drop-row")
STRATEGIES = ("ranked-prefix", "greedy-forward")


@dataclass
class IngestConfig:
    """Dataset ingest defaults."""
    delimiter: str = os.getenv("ITEM_REDUCER_DELIMITER", ",")
    label_column: str = os.getenv("ITEM_REDUCER_LABEL_COLUMN", "0")
    missing_policy: str = os.getenv("ITEM_REDUCER_MISSING_POLICY", "reject")
    encoding: str = "utf-8"


@dataclass
class AnalysisConfig:
    """Item reduction settings."""
    max_workers: int = int(os.getenv("ITEM_REDUCER_MAX_WORKERS", "1"))
    default_strategy: str = "ranked-prefix"


@dataclass
class ReliabilityConfig:
    """Construct reliability settings."""
    cr_threshold: float = float(os.getenv("ITEM_REDUCER_CR_THRESHOLD", "0.7"))


@dataclass
class SynthConfig:
    """Synthetic dataset generator defaults."""
    respondents: int = 500
    items: int = 12
    response_levels: int = 4
    signal_strength: float = 1.0
    prevalence: float = 0.5
    seed: int = 0


@dataclass
class PlotConfig:
    """SVG plot geometry."""
    width: int = 640
    height: int = 400
    margin: int = 56
    line_color: str = "#1f4e79"
    peak_color: str = "#c0392b"


@dataclass
class LoggingConfig:
    """Logging configuration."""
    level: str = os.getenv("LOG_LEVEL", "WARNING")
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    log_file: str = os.getenv("LOG_FILE", "")
    max_file_size: int = 10  # MB
    max_files: int = 3


@dataclass
class AppConfig:
    """Main application configuration."""
    ingest: IngestConfig = field(default_factory=IngestConfig)
    analysis: AnalysisConfig = field(default_factory=AnalysisConfig)
    reliability: ReliabilityConfig = field(default_factory=ReliabilityConfig)
    synth: SynthConfig = field(default_factory=SynthConfig)
    plot: PlotConfig = field(default_factory=PlotConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    def validate(self) -> None:
        """
        Validate that configuration values are usable.

        Raises:
            ConfigurationError: If any value is out of range.
        """
        problems = []
        if self.ingest.missing_policy not in MISSING_POLICIES:
            problems.append(
                f"missing_policy must be one of {MISSING_POLICIES}, "
                f"got {self.ingest.missing_policy!r}")
        if self.ingest.delimiter not in (",", "\t"):
            problems.append(f"delimiter must be ',' or tab, got {self.ingest.delimiter!r}")
        if self.analysis.max_workers < 1:
            problems.append(f"max_workers must be >= 1, got {self.analysis.max_workers}")
        if self.analysis.default_strategy not in STRATEGIES:
            problems.append(
                f"default_strategy must be one of {STRATEGIES}, "
                f"got {self.analysis.default_strategy!r}")
        if not 0.0 <= self.reliability.cr_threshold <= 1.0:
            problems.append(
                f"cr_threshold must lie in [0, 1], got {self.reliability.cr_threshold}")

        if problems:
            raise ConfigurationError(
                f"Invalid configuration: {'; '.join(problems)}")


# Global configuration instance
config = AppConfig()

# Note: Configuration validation is not run automatically on import
# to allow for testing environments. The CLI calls config.validate()
# before running a command.
