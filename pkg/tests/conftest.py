import pytest

from isozeta.graphs import IsogenyGraph


@pytest.fixture
def loops3():
    """One vertex with three loops; the dual map swaps two and fixes one.

    The smallest graph whose dual map has a fixed point: walk counts are
    2, 6, 8 for lengths 1, 2, 3.
    """
    return IsogenyGraph(1, ((0, 0), (0, 0), (0, 0)), (1, 0, 2), (0,))


@pytest.fixture
def two_vertex():
    """Two vertices with adjacency [[1, 3], [2, 2]]; edges 1-3 share one
    dual orbit, as do 4-5 and 6-7, so the dual map is not injective."""
    return IsogenyGraph(
        2,
        ((0, 0), (0, 1), (0, 1), (0, 1), (1, 0), (1, 0), (1, 1), (1, 1)),
        (0, 4, 4, 4, 1, 1, 6, 6),
        (0, 1),
    )
