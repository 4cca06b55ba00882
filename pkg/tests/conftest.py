import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import config  # noqa: E402


@pytest.fixture
def cache_everything(monkeypatch):
    """Lets genera of any size use the result cache."""
    monkeypatch.setattr(config, "CACHE_MIN_GENUS", 0)
