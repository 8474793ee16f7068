import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from matchsat.genoracle import GenConfig, gen_random  # noqa: E402


def random_formula(seed, max_vars=10, max_clauses=24, lens=(1, 4)):
    rng = np.random.default_rng([seed, 9001])
    n = int(rng.integers(1, max_vars + 1))
    m = int(rng.integers(1, max_clauses + 1))
    return gen_random(GenConfig(seed=seed, num_vars=n, num_clauses=m, clause_len_range=lens))


@pytest.fixture
def formula_stream():
    return random_formula
