import os
from dataclasses import dataclass, asdict
from typing import Optional

from dotenv import load_dotenv


@dataclass(frozen=True)
class Settings:
    """Process-wide knobs read from the environment (or a dotenv file)."""
    segment_size: int = 1 << 20
    cache_dir: Optional[str] = None
    workers: int = 1
    p_max: int = 10 ** 6

    def to_dict(self):
        return asdict(self)


def initialize() -> Settings:
    dotfile = os.environ.get("DOT_FILE", None)
    if dotfile is not None:
        load_dotenv(dotfile)
    else:
        load_dotenv()

    segment_size = int(os.environ.get('SIEVE_SEGMENT_SIZE', str(1 << 20)))
    cache_dir = os.environ.get('SIEVE_CACHE_DIR') or None
    workers = int(os.environ.get('SIEVE_WORKERS', '1'))
    p_max = int(float(os.environ.get('P_MAX', '1e6')))

    return Settings(
        segment_size=segment_size,
        cache_dir=cache_dir,
        workers=max(1, workers),
        p_max=p_max,
    )


settings = initialize()
