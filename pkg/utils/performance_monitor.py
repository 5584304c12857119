"""
Performance monitoring utilities for item_reducer.

This module provides decorators and utilities for timing the expensive
analysis steps (dataset loading, reduction runs, synthetic generation).
"""

import functools
import itertools
import threading
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, Optional

from utils.logging_config import get_logger

LOGGER = get_logger(__name__)


@dataclass
class PerformanceMetrics:
    """Container for performance metrics."""
    operation: str
    start_time: float
    end_time: Optional[float] = None
    duration: Optional[float] = None
    success: bool = True
    error: Optional[str] = None
    metadata: Dict[str, Any] = field(default_factory=dict)


class PerformanceMonitor:
    """Performance monitoring utility."""

    def __init__(self) -> None:
        self.metrics: Dict[str, PerformanceMetrics] = {}
        self._ids = itertools.count(1)
        self._lock = threading.Lock()

    def start_operation(self, operation: str, **metadata: Any) -> str:
        """
        Start monitoring an operation.

        Args:
            operation: Operation name
            **metadata: Additional metadata

        Returns:
            Operation ID
        """
        with self._lock:
            operation_id = f"{operation}_{next(self._ids)}"
            self.metrics[operation_id] = PerformanceMetrics(
                operation=operation,
                start_time=time.perf_counter(),
                metadata=metadata
            )
        return operation_id

    def end_operation(
            self,
            operation_id: str,
            success: bool = True,
            error: Optional[str] = None) -> Optional[float]:
        """
        End monitoring an operation.

        Args:
            operation_id: Operation ID from start_operation
            success: Whether the operation succeeded
            error: Error message if failed

        Returns:
            Duration in seconds, or None for an unknown operation ID
        """
        with self._lock:
            metric = self.metrics.get(operation_id)
            if metric is None:
                return None
            metric.end_time = time.perf_counter()
            metric.duration = metric.end_time - metric.start_time
            metric.success = success
            metric.error = error

        if success:
            LOGGER.debug(
                "Operation '%s' completed in %.3fs", metric.operation, metric.duration)
        else:
            LOGGER.debug(
                "Operation '%s' failed after %.3fs: %s",
                metric.operation, metric.duration, error)
        return metric.duration

    def get_metrics(self, operation: Optional[str] = None) -> Dict[str, PerformanceMetrics]:
        """
        Get performance metrics.

        Args:
            operation: Optional operation name filter

        Returns:
            Dictionary of metrics
        """
        with self._lock:
            if operation:
                return {k: v for k, v in self.metrics.items() if v.operation == operation}
            return self.metrics.copy()


# Global performance monitor instance
PERFORMANCE_MONITOR = PerformanceMonitor()


def monitor_performance(operation: str) -> Callable:
    """
    Decorator to monitor function performance.

    Args:
        operation: Operation name for monitoring

    Returns:
        Decorated function
    """
    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            operation_id = PERFORMANCE_MONITOR.start_operation(operation)
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                PERFORMANCE_MONITOR.end_operation(
                    operation_id, success=False, error=str(e))
                raise
            PERFORMANCE_MONITOR.end_operation(operation_id, success=True)
            return result
        return wrapper
    return decorator


@contextmanager
def performance_context(operation: str, **metadata: Any) -> Iterator[str]:
    """
    Context manager for performance monitoring.

    Args:
        operation: Operation name
        **metadata: Additional metadata

    Yields:
        The operation ID
    """
    operation_id = PERFORMANCE_MONITOR.start_operation(operation, **metadata)
    try:
        yield operation_id
    except Exception as e:
        PERFORMANCE_MONITOR.end_operation(operation_id, success=False, error=str(e))
        raise
    PERFORMANCE_MONITOR.end_operation(operation_id, success=True)
