"""
Settings loader
Loads run defaults (output directory, sampling seed, log level) from the
.env file at the project root. Values set in the real environment win over
.env, and command-line flags win over both.
"""

import logging
import os

from dotenv import load_dotenv

# Load .env from project root
_PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
_ENV_PATH = os.path.join(_PROJECT_ROOT, '.env')
load_dotenv(_ENV_PATH)

DEFAULT_OUTPUT_DIR = 'figures'
DEFAULT_SEED = 20240601
DEFAULT_LOG_LEVEL = 'WARNING'


def get_output_dir() -> str:
    """Figure output directory. Priority: BMW6_OUTPUT_DIR > 'figures'"""
    return os.environ.get('BMW6_OUTPUT_DIR') or DEFAULT_OUTPUT_DIR


def get_seed() -> int:
    """
    Default sampling seed. Priority: BMW6_SEED > 20240601

    Raises:
        ValueError: If BMW6_SEED is set but is not a non-negative integer
    """
    raw = os.environ.get('BMW6_SEED')
    if not raw:
        return DEFAULT_SEED
    try:
        seed = int(raw)
    except ValueError:
        raise ValueError(f"BMW6_SEED must be an integer, got {raw!r}") from None
    if seed < 0:
        raise ValueError(f"BMW6_SEED must be >= 0, got {seed}")
    return seed


def get_log_level() -> int:
    """
    Library log level. Priority: BMW6_LOG_LEVEL > WARNING

    Raises:
        ValueError: If the name is not a standard logging level
    """
    name = (os.environ.get('BMW6_LOG_LEVEL') or DEFAULT_LOG_LEVEL).upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        raise ValueError(f"BMW6_LOG_LEVEL must be DEBUG, INFO, WARNING or ERROR, got {name!r}")
    return level
