import pytest

from ordercut import Digraph, gen_random

# Hand-built graphs used across the suite (0-indexed).

# Two paths 0->1->2 and 0->3->4->5->2 sharing their endpoints, plus the
# chord 4->1. Under the identity ordering the two chords (5,2) and (4,1)
# are the only backward arcs, both with stretch 3.
PATHS_WITH_CHORD = [(0, 1), (1, 2), (0, 3), (3, 4), (4, 5), (5, 2), (4, 1)]

# A 3-cycle 0->1->2->0 with a detour 0->3->4->5->2; min feedback arc set 1.
TRIANGLE_WITH_DETOUR = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 2)]

# Two 3-cycles, a dense forward bundle between them, and two arcs back.
TWO_TRIANGLES = [
    (0, 1), (1, 2), (2, 0),
    (3, 4), (4, 5), (5, 3),
    (5, 1), (5, 2),
    (0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (2, 3), (2, 4),
]


@pytest.fixture
def paths_with_chord():
    return Digraph(6, PATHS_WITH_CHORD)


@pytest.fixture
def triangle_with_detour():
    return Digraph(6, TRIANGLE_WITH_DETOUR)


@pytest.fixture
def two_triangles():
    return Digraph(6, TWO_TRIANGLES)


def random_corpus(count, n, p, weight_range=(1, 1), undirected=False, seed0=0):
    return [gen_random(n, p, weight_range=weight_range, seed=seed0 + i,
                       undirected=undirected) for i in range(count)]
