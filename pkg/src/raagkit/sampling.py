"""Seeded, portable random sampling of group elements.

The generator is the stdlib Mersenne Twister (`random.Random`), which produces
an identical stream for an identical seed on every platform and Python
version. Each suite derives its own stream as Random(f"{seed}:{label}") so
reports depend only on (graph, seed, samples), never on scheduling.

Elements are sampled as uniform random reduced words: pick a length L
uniformly in [min_len, max_len], then draw words of L uniform signed letters
and reject until one is reduced (canonical length L). The distribution is
uniform over reduced words of each chosen length.
"""

from __future__ import annotations

import random

from .errors import InvariantViolationError
from .presentation import CommutationGraph

from .elements import canon_codes

_MAX_REJECTIONS = 1_000_000


def stream(seed: int, label: str) -> random.Random:
    """A deterministic child stream for one suite."""
    return random.Random(f"{seed}:{label}")


def random_codes(rng: random.Random, graph: CommutationGraph, max_len: int, min_len: int = 0) -> tuple[int, ...]:
    """Canonical tuple of a uniform random reduced word of uniform random length."""
    length = rng.randint(min_len, max_len)
    if length == 0:
        return ()
    nletters = 2 * graph.ngens
    for _ in range(_MAX_REJECTIONS):
        codes = [rng.randrange(nletters) for _ in range(length)]
        t = canon_codes(graph, codes)
        if len(t) == length:
            return t
    raise InvariantViolationError(f"rejection sampling failed to find a reduced word of length {length}")
