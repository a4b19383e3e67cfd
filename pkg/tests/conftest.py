import numpy as np
import pytest

from src.multivector import Signature, blade_indices


@pytest.fixture
def rng():
    return np.random.default_rng(0)


def small_signatures(n_max: int = 4, n_min: int = 0) -> list:
    return [Signature(p, n - p) for n in range(n_min, n_max + 1) for p in range(n + 1)]


def push_symbols(a: int, b: int, sig: Signature) -> tuple:
    """e^A e^B by bubble-sorting the concatenated index word; (sign, mask)."""
    word = list(blade_indices(a)) + list(blade_indices(b))
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True
                break
            if word[i] == word[i + 1]:
                sign *= sig.metric(word[i])
                del word[i:i + 2]
                changed = True
                break
    mask = 0
    for x in word:
        mask |= 1 << (x - 1)
    return sign, mask


@pytest.fixture
def store(tmp_path):
    from src.database import ReportStore

    s = ReportStore(str(tmp_path / "reports.db"))
    yield s
    s.close()
