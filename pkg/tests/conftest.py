from __future__ import annotations

import pytest

from transor.oracle import all_labeled_graphs, fixtures, random_family

from checks import Bundle


def _small_corpus():
    named = [(f"fixture:{name}", g) for name, g in fixtures().items()]
    named += [(f"lab4:{i}", g) for i, g in enumerate(all_labeled_graphs(4))]
    named += [
        (f"rand:{i}", g)
        for i, g in enumerate(random_family(24, sizes=(5, 6, 7), seed=97))
    ]
    return named


@pytest.fixture(scope="session")
def small_bundles() -> list[Bundle]:
    """Fixtures, every labeled 4-vertex graph, and two dozen random graphs."""
    return [Bundle(name, g) for name, g in _small_corpus()]


@pytest.fixture(scope="session")
def fixture_graphs() -> dict:
    return fixtures()
