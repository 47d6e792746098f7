import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from defcolor.generate import gen_planar_girth5

CORPUS_COUNT = 1000
LARGE_SIZES = (240, 280, 320, 360, 400, 440, 470)


def corpus_spec(i: int) -> tuple[int, int]:
    """(seed, requested size) of corpus graph i; sizes sweep 5..150."""
    return 1000 + i, 5 + (i * 145) // (CORPUS_COUNT - 1)


@pytest.fixture(scope="session")
def corpus():
    """The 1000-graph girth-5 planar corpus shared by the acceptance suite."""
    return [gen_planar_girth5(*corpus_spec(i)) for i in range(CORPUS_COUNT)]


@pytest.fixture(scope="session")
def corpus_large():
    return [gen_planar_girth5(77000 + i, size)
            for i, size in enumerate(LARGE_SIZES)]
