import os
import logging
from datetime import datetime

from rich.logging import RichHandler

DEBUG = os.environ.get("DEBUG", "0") == "1"
LOG_DIR = os.environ.get("LOG_DIR", "logs")
FILE_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'


def _fresh(name: str, level: int) -> logging.Logger:
    log = logging.getLogger(name)
    log.setLevel(level)
    log.handlers.clear()
    log.propagate = False
    return log


def create_console_logger(name: str = 'beattyprimes-console') -> logging.Logger:
    """Rich console logger; DEBUG=1 turns on debug output."""
    log = _fresh(name, logging.DEBUG if DEBUG else logging.INFO)
    handler = RichHandler(rich_tracebacks=True, markup=True, show_path=False)
    handler.setFormatter(logging.Formatter('%(message)s'))
    log.addHandler(handler)
    return log


def create_file_logger(name: str = None, log_dir: str = None) -> logging.Logger:
    """Plain-text logger writing ``<log_dir>/<name>.log``; the file is opened on first record."""
    name = name or datetime.now().strftime("%Y%m%d_%H%M%S")
    log_dir = log_dir or LOG_DIR
    log = _fresh(name, logging.DEBUG)
    os.makedirs(log_dir, exist_ok=True)
    handler = logging.FileHandler(os.path.join(log_dir, f"{name}.log"), delay=True)
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(FILE_FORMAT))
    log.addHandler(handler)
    return log


logger = create_console_logger()

# per-segment worker chatter and precision escalations
file_logger = create_file_logger('beattyprimes')
