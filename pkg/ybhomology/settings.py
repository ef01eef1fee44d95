import logging
import os
from pathlib import Path

from dotenv import load_dotenv

from ybhomology.paths import REPORTS_DIR

# Load environment variables from .env file
load_dotenv()

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

RANK_MODES = ("exact", "eval", "both")

# Rank backend: exact elimination, evaluation at primes, or both with a cross-check
RANK_MODE = os.getenv("YBH_RANK_MODE", "eval")
# Total-degree bound for the free module
TRUNCATION = int(os.getenv("YBH_TRUNCATION", "6"))
LOG_LEVEL = os.getenv("YBH_LOG_LEVEL", "WARNING")
REPORTS_PATH = Path(os.getenv("YBH_REPORTS_DIR", str(REPORTS_DIR)))
SEED = int(os.getenv("YBH_SEED", "0"))


def configure_logging(level: str = None) -> None:
    logging.basicConfig(level=(level or LOG_LEVEL).upper(), format=LOG_FORMAT)
