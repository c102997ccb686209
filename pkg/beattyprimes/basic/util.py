import os
import random
import time
from typing import Any, Dict, Iterable, Tuple

import numpy as np
from decorator import decorator

from beattyprimes.basic.my_logger import file_logger, logger

TIMER = os.environ.get("TIMER", "0") == "1"


def _short(value: Any, limit: int = 200) -> str:
    text = repr(value)
    return text if len(text) <= limit else text[:limit] + "..."


@decorator
def trace(func, *args, **kw):
    """Debug-log entry, exit and result; with TIMER=1 also the elapsed seconds."""
    where = f"{func.__module__}:{func.__qualname__}"
    logger.debug(f"enter {where}")
    started = time.perf_counter()
    result = func(*args, **kw)
    elapsed = time.perf_counter() - started
    if TIMER:
        logger.info(f"{func.__qualname__} took {elapsed:.2f}s")
    logger.debug(f"leave {where} -> {_short(result)}")
    return result


@decorator
def swallow_exceptions(func, exceptions=None, *args, **kw):
    """Return None instead of raising; `exceptions` narrows what is swallowed.

    Only for best-effort paths whose caller can recompute the value.
    """
    try:
        return func(*args, **kw)
    except Exception as e:
        if exceptions is not None and not isinstance(e, tuple(exceptions)):
            raise
        logger.warning(f"{func.__qualname__} gave up: {e}")
        file_logger.exception(f"swallowed in {func.__qualname__}")
        return None


def log_banner(title: str, sections: Dict[str, Iterable[Tuple[str, Any]]]) -> None:
    """Log a boxed key/value report, one block per section."""
    logger.info("\n" + "=" * 60)
    logger.info(title)
    logger.info("=" * 60)
    for header, rows in sections.items():
        logger.info(f"\n{header}")
        for key, value in rows:
            logger.info("   %-22s %s", f"{key}:", value)
    logger.info("\n" + "=" * 60)


def random_state_fingerprint() -> int:
    """Hash of the stdlib and numpy global generator states."""
    kind, keys, pos, has_gauss, cached = np.random.get_state()
    return hash((random.getstate(), kind, keys.tobytes(), pos, has_gauss, cached))
