import os
from dotenv import load_dotenv

load_dotenv()


def _env_int(name, default):
    value = os.getenv(name)
    return int(value) if value not in (None, "") else default


def _env_float(name, default):
    value = os.getenv(name)
    return float(value) if value not in (None, "") else default


# Signature limits
MAX_N = _env_int("CLIFFORD_MAX_N", 10)             # largest n = p + q accepted anywhere
EXHAUSTIVE_N_MAX = _env_int("CLIFFORD_EXHAUSTIVE_N_MAX", 8)   # blade-exhaustive suites
SAMPLED_N_MAX = _env_int("CLIFFORD_SAMPLED_N_MAX", 6)         # suites driven by group samples
DIMENSION_N_MAX = _env_int("CLIFFORD_DIMENSION_N_MAX", 16)    # closed-form dimension checks

# Randomness
DEFAULT_SEED = _env_int("CLIFFORD_SEED", 0)
DEFAULT_SAMPLES = _env_int("CLIFFORD_SAMPLES", 20)
BRACKET_TRIALS = _env_int("CLIFFORD_BRACKET_TRIALS", 100)
SPARSE_TERMS = 6  # max nonzero blades in a random sparse multivector

# Numerics (float paths only; exact paths compare exactly)
MEMBERSHIP_TOL = _env_float("CLIFFORD_TOL", 1e-9)
SERIES_TOL = 1e-15
MAX_SERIES_TERMS = 64

# Small integer triples used by the exact group samplers
CIRCULAR_TRIPLES = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25)]      # a^2 + b^2 = c^2
HYPERBOLIC_TRIPLES = [(5, 3, 4), (13, 5, 12), (17, 8, 15), (25, 7, 24)]    # a^2 - b^2 = c^2

# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

# Report store
REPORTS_DB_PATH = os.getenv(
    "CLIFFORD_REPORTS_DB",
    os.path.join(os.path.dirname(os.path.abspath(__file__)), "data", "reports.db"),
)
TURSO_DATABASE_URL = os.getenv("TURSO_DATABASE_URL")
TURSO_AUTH_TOKEN = os.getenv("TURSO_AUTH_TOKEN")
REPORT_RETENTION_DAYS = _env_int("CLIFFORD_RETENTION_DAYS", 90)   # verify runs older than this are dropped
