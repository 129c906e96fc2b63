"""Shared corpus builders.

Graphs are mutable, so fixtures hand out factories / fresh builds, never
shared instances.
"""

from __future__ import annotations

import pytest

from tricolor.generators import augmented, grid, quad
from tricolor.instances import (
    big_hub_graph, cube_graph, cycle_graph, dodecahedron_graph, grid_graph,
    hexagram_flower, k23_graph, path_graph, pentagram_flower,
)

HAND_BUILDERS = [
    ("c4", lambda: cycle_graph(4)),
    ("c5", lambda: cycle_graph(5)),
    ("c6", lambda: cycle_graph(6)),
    ("k23", k23_graph),
    ("cube", cube_graph),
    ("dodecahedron", dodecahedron_graph),
    ("grid3x3", lambda: grid_graph(3)),
    ("path5", lambda: path_graph(5)),
    ("pentagram_flower", pentagram_flower),
    ("hexagram_flower", hexagram_flower),
    ("big_hub", big_hub_graph),
]


def generated_small_builders():
    """The deterministic generated corpus with n <= 12."""
    out = []
    for size in range(4, 13):
        for seed in (0, 1):
            out.append((f"quad{size}s{seed}", lambda s=size, r=seed: quad(s, r)))
    for size in range(6, 13, 2):
        for seed in (0, 1):
            out.append((f"aug{size}s{seed}",
                        lambda s=size, r=seed: augmented(s, r)))
    for seed in (0, 1, 2):
        out.append((f"grid3d{seed}", lambda r=seed: grid(3, 0.3, r)))
    out.append(("grid2", lambda: grid(2)))
    return out


def small_corpus_builders():
    return HAND_BUILDERS + generated_small_builders()


def small_corpus():
    return [(name, make()) for name, make in small_corpus_builders()]


@pytest.fixture(scope="session")
def corpus_builders():
    return small_corpus_builders()
