import pytest

from chibound.generate import all_graphs
from chibound.graph import Graph

_CACHE: dict[int, list[Graph]] = {}


def graphs_on(n: int) -> list[Graph]:
    if n not in _CACHE:
        _CACHE[n] = list(all_graphs(n))
    return _CACHE[n]


@pytest.fixture(scope="session")
def small_graphs():
    """Isomorphism classes on 1..7 vertices, keyed by n."""
    return {n: graphs_on(n) for n in range(1, 8)}
