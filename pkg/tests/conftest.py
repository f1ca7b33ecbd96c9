import os

import pytest
from hypothesis import settings

from lcc_alpha.fatpoints import FatPointScheme, ProjLine, load_scheme

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
THREE_LINES = os.path.join(ROOT, "schemes", "three_lines.json")


@pytest.fixture
def three_lines():
    """Eight points on l1: y = x, l2: x + y = 5, l3: y = 1/2 with multiplicities 3,1,2,2,1,1,1,1."""
    return load_scheme(THREE_LINES)


def point_scheme(points, m=1):
    return FatPointScheme((p, m) for p in points)


def line(*coeffs):
    return ProjLine(coeffs)
