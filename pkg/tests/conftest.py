import pytest

from webbasis.services.evaluation import StateSumCache
from webbasis.services.words import enumerate_words, parse_word


@pytest.fixture
def cache():
    return StateSumCache()


@pytest.fixture
def word():
    """Parse a compact word literal."""
    return lambda text, n=None: parse_word(text, n)


def words_up_to(r_max: int, n: int):
    return [w for r in range(1, r_max + 1) for w in enumerate_words(r, n)]
