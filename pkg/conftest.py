import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from util.liealg import parse_rep, sl  # noqa: E402
from util.coinvariants import WeylInsertion  # noqa: E402
from util.sections import Curve  # noqa: E402
import random  # noqa: E402


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def make_weyl():
    def make(n, points, reps, level=1):
        g = sl(n)
        return WeylInsertion(Curve(g, points), [parse_rep(g, r) for r in reps], level)

    return make
