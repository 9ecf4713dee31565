import pytest

from clutterkit.clutter import Clutter


@pytest.fixture
def tailed_triangle() -> Clutter:
    """Chordal graph on 5 vertices: triangle 345 with the tail 1-2-5."""
    return Clutter.from_circuits(5, 2, [(1, 2), (2, 5), (3, 4), (3, 5), (4, 5)])


@pytest.fixture
def four_cycle() -> Clutter:
    return Clutter.from_circuits(4, 2, [(1, 2), (2, 3), (3, 4), (1, 4)])


@pytest.fixture
def bipyramid() -> Clutter:
    """3-clutter on 5 vertices: all triples except 125, 135, 145."""
    return Clutter.complete(5, 3).without((1, 2, 5)).without((1, 3, 5)).without((1, 4, 5))


@pytest.fixture
def connected_three_clutter() -> Clutter:
    """3-clutter on 5 vertices: all triples except 123, 125, 135."""
    return Clutter.complete(5, 3).without((1, 2, 3)).without((1, 2, 5)).without((1, 3, 5))
