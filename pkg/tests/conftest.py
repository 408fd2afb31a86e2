from __future__ import annotations

import pytest

from coolnum.corpus import build_corpus
from coolnum.solver import cooling_number


@pytest.fixture(scope="session")
def corpus():
    """Named corpus graphs (families up to 12 nodes plus seeded randoms)."""
    return build_corpus()


@pytest.fixture(scope="session")
def corpus_with_cl(corpus):
    """Corpus entries together with their exact cooling results."""
    return [(name, g, cooling_number(g)) for name, g in corpus]
