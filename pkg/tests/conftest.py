import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from raagkit.order import ball
from raagkit.presentation import load_graph

GRAPHS_DIR = Path(__file__).resolve().parent.parent / "graphs"


@pytest.fixture(scope="session")
def free2():
    return load_graph(GRAPHS_DIR / "free2.txt")


@pytest.fixture(scope="session")
def z2():
    return load_graph(GRAPHS_DIR / "z2.txt")


@pytest.fixture(scope="session")
def f2xz():
    return load_graph(GRAPHS_DIR / "f2xz.txt")


@pytest.fixture(scope="session")
def graphs(free2, z2, f2xz):
    return {"free2": free2, "z2": z2, "f2xz": f2xz}


_BALL_CACHE: dict[tuple[int, int], frozenset] = {}


@pytest.fixture(scope="session")
def balls(graphs):
    """balls(name, r) -> frozenset of GroupElement, cached per session."""

    def get(name: str, r: int):
        key = (name, r)
        got = _BALL_CACHE.get(key)
        if got is None:
            got = frozenset(ball(graphs[name], r))
            _BALL_CACHE[key] = got
        return got

    return get
