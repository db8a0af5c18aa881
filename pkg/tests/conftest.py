"""
Pytest configuration file.
"""

import pytest
from hypothesis import settings

from knotobs.models.knot_sum import KnotSum
from knotobs.parser import parse
from knotobs.pipeline import ObstructionPipeline
from knotobs.utils.config import get_default_config

settings.register_profile("knotobs", deadline=None)
settings.load_profile("knotobs")


@pytest.fixture
def default_config():
    """A fresh copy of the default configuration."""
    return get_default_config()


@pytest.fixture
def pipeline():
    """A pipeline running every rule."""
    return ObstructionPipeline.from_defaults()


@pytest.fixture
def knot():
    """Parse helper: knot("T(2,3) # -T(2,5)")."""

    def _parse(text: str) -> KnotSum:
        return parse(text)

    return _parse

