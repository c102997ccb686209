from enum import Enum


class RunnerType(Enum):
    GAP_HISTOGRAM = 1
    PRIME_COUNT = 2
    UNKNOWN = 1000
