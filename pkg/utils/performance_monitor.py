"""
Performance Monitor for rankforge

Times encoder calls and samples process memory. Timings are informational
only; every correctness claim in rankforge is count based.
"""

import statistics
import time
import psutil
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from utils.logger import get_logger


@dataclass
class EncoderTiming:
    """Timing data for one labelled encoder"""
    label: str
    samples_us: List[float] = field(default_factory=list)
    rss_mb: float = 0.0

    @property
    def median_us(self) -> float:
        return statistics.median(self.samples_us) if self.samples_us else 0.0


class PerformanceMonitor:
    """Collects wall-time samples per encoder label"""

    def __init__(self):
        self.logger = get_logger()
        self.timings: Dict[str, EncoderTiming] = {}
        self.start_time = time.perf_counter()

    def _rss_mb(self) -> float:
        try:
            return psutil.Process().memory_info().rss / (1024 * 1024)
        except psutil.Error as e:
            self.logger.debug(f"Could not read process memory: {e}")
            return 0.0

    def time_call(self, label: str, fn: Callable[[], object], repeat: int = 5) -> EncoderTiming:
        """
        Run fn repeat times and record per-call wall time.

        Args:
            label: Name of the timed encoder
            fn: Zero-argument callable
            repeat: Number of runs

        Returns:
            EncoderTiming: Accumulated samples for the label
        """
        timing = self.timings.setdefault(label, EncoderTiming(label=label))
        for _ in range(max(repeat, 1)):
            begin = time.perf_counter()
            fn()
            timing.samples_us.append((time.perf_counter() - begin) * 1e6)
        timing.rss_mb = self._rss_mb()
        return timing

    def get_performance_summary(self) -> Dict[str, object]:
        """Summary of all recorded encoders"""
        return {
            'elapsed_seconds': time.perf_counter() - self.start_time,
            'rss_mb': self._rss_mb(),
            'encoders': {label: t.median_us for label, t in sorted(self.timings.items())},
        }

    def generate_performance_report(self) -> str:
        summary = self.get_performance_summary()
        if not summary['encoders']:
            return "Performance Report: No data available"
        lines = [
            "Performance Report",
            "=" * 50,
            f"Elapsed: {summary['elapsed_seconds']:.2f}s",
            f"Resident memory: {summary['rss_mb']:.0f} MB",
        ]
        for label, median in summary['encoders'].items():
            lines.append(f"  {label}: {median:.1f} us (median)")
        return '\n'.join(lines)
