"""
Configuration Validator for rankforge

Validates a loaded configuration before any enumeration starts
"""

from typing import Any, Dict, List, Tuple

from core.constants import LOG_LEVELS, PQ_CHOICES, VARIANTS
from utils.logger import get_logger

# Enumerations above this size are allowed but take minutes
LARGE_CAP_WARNING = 2 ** 28


class ConfigValidator:
    """Validates configuration settings"""

    def __init__(self):
        self.logger = get_logger()
        self.errors: List[str] = []
        self.warnings: List[str] = []

    def validate_full_config(self, config: Dict[str, Any]) -> Tuple[bool, List[str], List[str]]:
        """
        Perform comprehensive configuration validation

        Args:
            config: Configuration dictionary

        Returns:
            Tuple of (is_valid, errors, warnings)
        """
        self.errors.clear()
        self.warnings.clear()

        self._validate_enumeration_config(config)
        self._validate_construction_config(config)
        self._validate_logging_config(config)

        for warning in self.warnings:
            self.logger.warning(f"Configuration: {warning}")
        is_valid = len(self.errors) == 0
        return is_valid, self.errors.copy(), self.warnings.copy()

    def _validate_enumeration_config(self, config: Dict[str, Any]):
        cap = config.get('enumeration_cap')
        if not isinstance(cap, int) or isinstance(cap, bool) or cap < 1:
            self.errors.append("enumeration_cap must be a positive integer")
        elif cap > LARGE_CAP_WARNING:
            self.warnings.append(f"enumeration_cap={cap} allows very long enumerations")

        chunk = config.get('chunk_size')
        if not isinstance(chunk, int) or isinstance(chunk, bool) or chunk < 1:
            self.errors.append("chunk_size must be a positive integer")

    def _validate_construction_config(self, config: Dict[str, Any]):
        if config.get('variant') not in VARIANTS:
            self.errors.append(f"variant must be one of {', '.join(VARIANTS)}")
        if config.get('pq_choice') not in PQ_CHOICES:
            self.errors.append(f"pq_choice must be one of {', '.join(PQ_CHOICES)}")

    def _validate_logging_config(self, config: Dict[str, Any]):
        level = str(config.get('log_level', '')).upper()
        if level not in LOG_LEVELS:
            self.errors.append(f"log_level must be one of {', '.join(LOG_LEVELS)}")
        if not isinstance(config.get('log_to_file'), bool):
            self.warnings.append("log_to_file should be true or false")

    def generate_validation_report(self, config: Dict[str, Any]) -> str:
        """Generate a detailed validation report"""
        is_valid, errors, warnings = self.validate_full_config(config)

        report = ["Configuration Validation Report", "=" * 50]

        if is_valid and not warnings:
            report.append("Configuration is valid - no issues found")
        else:
            if errors:
                report.append(f"\nERRORS ({len(errors)}):")
                for i, error in enumerate(errors, 1):
                    report.append(f"  {i}. {error}")

            if warnings:
                report.append(f"\nWARNINGS ({len(warnings)}):")
                for i, warning in enumerate(warnings, 1):
                    report.append(f"  {i}. {warning}")

        report.append("\nSummary:")
        report.append(f"  - Enumeration cap: {config.get('enumeration_cap')}")
        report.append(f"  - Chunk size: {config.get('chunk_size')}")
        report.append(f"  - Default construction: {config.get('variant')} / {config.get('pq_choice')}")

        return '\n'.join(report)
