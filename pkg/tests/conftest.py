import math
from pathlib import Path

import numpy as np
import pytest
import yaml

from src.dispersive.classd import indicator

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def constants():
    with (FIXTURES / "constants.yaml").open() as fh:
        return yaml.safe_load(fh)


@pytest.fixture
def gamma():
    return 1.0 / math.pi


@pytest.fixture
def box(gamma):
    """Indicator of [-1/pi, 1/pi], the reference data"""
    return indicator(gamma)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def output_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("TALBOT_OUTPUT_DIR", str(tmp_path))
    return tmp_path
