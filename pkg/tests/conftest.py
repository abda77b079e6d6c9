import pytest

from circlab import CirculantGraph, JumpSet


@pytest.fixture
def g():
    """Factory: g(n, *jumps) -> CirculantGraph."""

    def make(n, *jumps):
        return CirculantGraph(JumpSet(n, tuple(jumps)))

    return make
