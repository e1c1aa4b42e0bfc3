"""
Application constants for rankforge
"""

# Application Information
APP_NAME = "rankforge"
APP_VERSION = "1.0.0"
APP_DESCRIPTION = "Rank-metric code laboratory: Gabidulin and circular-shift MRD codes"

# Field Limits
MAX_EXTENSION_DEGREE = 32
MAX_FIELD_ORDER = 2 ** 64

# Enumeration
DEFAULT_ENUMERATION_CAP = 2 ** 24
DEFAULT_CHUNK_SIZE = 4096
CAP_ENV_VAR = "RANKFORGE_CAP"

# Code Variants
VARIANT_C1 = "c1"
VARIANT_C2 = "c2"
VARIANTS = [VARIANT_C1, VARIANT_C2]

# P/Q Construction Choices
PQ_INSTANCE_A = "a"
PQ_INSTANCE_B = "b"
PQ_USER = "user"
PQ_CHOICES = [PQ_INSTANCE_A, PQ_INSTANCE_B, PQ_USER]

# Encoder Paths
PATH_GENERIC = "generic"
PATH_FAST = "fast"

# Counting Schemes
SCHEME_C1 = "C1"
SCHEME_C2 = "C2"
SCHEME_GABIDULIN_VECTOR = "GabidulinVector"
SCHEME_GENERALIZED_M = "GeneralizedM"
SCHEMES = [SCHEME_C1, SCHEME_C2, SCHEME_GABIDULIN_VECTOR, SCHEME_GENERALIZED_M]

# Coincidence Verdicts
VERDICT_COINCIDES = "coincides"
VERDICT_DIFFERS = "differs"
VERDICT_UNDETERMINED = "undetermined"

# Example Reproductions
EXAMPLE_NAMES = ["ex1", "ex2", "ex3", "ex4", "ex5"]

# Benchmark Presets (L, n, k)
BENCH_PRESETS = {
    "section5": [(5, 4, 3)],
    "walkthrough": [(5, 4, 3)],
    "sweep": [
        (L, n, k)
        for L, m_L in ((5, 4), (7, 3), (11, 10))
        for n in range(1, m_L + 1)
        for k in range(1, n + 1)
    ],
}

# Exit Codes
EXIT_OK = 0
EXIT_VERDICT_FALSE = 1
EXIT_INVALID_PARAMS = 2
EXIT_VALIDATION_FAILED = 3
EXIT_IO_ERROR = 4
EXIT_CAP_EXCEEDED = 5

# Logging
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
LOG_DATE_FORMAT = '%H:%M:%S'
FILE_LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
FILE_LOG_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'
LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
