"""Constants shared across the toolkit."""

DEFAULT_CONFIG_PATH = "config/default.yml"
REPORT_SCHEMA_PATH = "documents/report_schema.json"
REPORT_SCHEMA_VERSION = "1.0"

# Environment overrides
ENV_WORKERS = "MPG_WORKERS"
ENV_LOG_LEVEL = "MPG_LOG_LEVEL"
ENV_OUTPUT_DIR = "MPG_OUTPUT_DIR"
ENV_PRECISION_BITS = "MPG_PRECISION_BITS"

MIN_DEGREE_CHOICES = (3, 4, 5)
DEFAULT_MAX_ORDER = 13
DEFAULT_PRECISION_BITS = 128

# Color sequence alphabet for (2,2)-FWF graphs
COLOR_LETTERS = "ygbr"
COLOR_INDEX = {letter: i + 1 for i, letter in enumerate(COLOR_LETTERS)}
FWF22_PREFIX = "ygbryb"

GOLDEN_LISTINGS_FILE = "partition_listings.yml"
GOLDEN_ORDER13_FILE = "order13_listing.yml"
GOLDEN_CLAIMS_FILE = "claims.yml"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTATION = 2

# Service loggers with their own file under the log directory
DEFAULT_LOG_FILES = {
    "core.services.corpus_service": "corpus.log",
    "core.services.verification_service": "verify.log",
    "core.services.report_service": "reports.log",
}
