import pytest

from beattyprimes.beatty.sequence import BeattyParams, PrecisionLedger
from beattyprimes.experiment.config import ExperimentConfig


@pytest.fixture
def sqrt2():
    return BeattyParams.of('sqrt2', 0)


@pytest.fixture
def sqrt2_config():
    return ExperimentConfig()


@pytest.fixture
def ledger():
    return PrecisionLedger()

