"""
Factorization toolkit - command-line entry point
"""

import logging
import os
import sys

sys.path.append(os.path.dirname(os.path.abspath(__file__)))

import cli
from utils.config_utils import ConfigManager

# Load environment variables
ConfigManager.load_environment()


def configure_logging():
    """Log to standard error so reports on standard output stay clean"""
    handlers = [logging.StreamHandler(sys.stderr)]
    log_file = os.getenv("LOG_FILE")
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=getattr(logging, os.getenv("LOG_LEVEL", "WARNING").upper(), logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
    )


def main() -> int:
    configure_logging()
    return cli.run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
