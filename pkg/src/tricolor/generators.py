"""Random triangle-free plane graph generators.

Three families:

    grid       k x k grid, optionally with random edge deletions
               (deletions cannot create triangles, may disconnect)
    quad       random quadrangulation-style growth from a 4-cycle; all
               faces stay even, so the graph stays bipartite and hence
               triangle-free
    augmented  quad plus random chords, each refused unless the
               endpoints are non-adjacent and share no neighbor; this
               introduces odd faces (pentagons, heptagons, ...)

Every generator validates its own output with the embedding validator
and the triangle-freeness checker rather than trusting the construction
argument.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import isqrt

from .embedding import PlaneGraph, build, validate
from .instances import grid_rotations
from .oracle import SimpleGraph, is_triangle_free


class InvalidSpec(Exception):
    pass


@dataclass(frozen=True)
class GenSpec:
    kind: str                  # grid | quad | augmented
    size: int                  # target vertex count
    seed: int = 0
    delete_prob: float = 0.0   # grid only

    def validate(self) -> None:
        if self.kind not in ("grid", "quad", "augmented"):
            raise InvalidSpec(f"unknown kind {self.kind!r}")
        if self.size < 1:
            raise InvalidSpec("size must be >= 1")
        if not 0.0 <= self.delete_prob < 1.0:
            raise InvalidSpec("delete_prob must be in [0, 1)")


def generate(spec: GenSpec) -> PlaneGraph:
    spec.validate()
    if spec.kind == "grid":
        k = max(2, isqrt(spec.size))
        g = grid(k, delete_prob=spec.delete_prob, seed=spec.seed)
    elif spec.kind == "quad":
        g = quad(max(4, spec.size), seed=spec.seed)
    else:
        g = augmented(max(4, spec.size), seed=spec.seed)
    _validate_output(g)
    return g


def _validate_output(g: PlaneGraph) -> None:
    validate(g)
    if not is_triangle_free(SimpleGraph.from_plane_graph(g)):
        raise InvalidSpec("generator produced a triangle")


def grid(k: int, delete_prob: float = 0.0, seed: int = 0) -> PlaneGraph:
    rot = grid_rotations(k, k)
    if delete_prob > 0.0:
        rng = random.Random(seed)
        adj = [set(r) for r in rot]
        for u in range(len(rot)):
            for w in sorted(adj[u]):
                if w > u and rng.random() < delete_prob:
                    adj[u].discard(w)
                    adj[w].discard(u)
        rot = [[w for w in r if w in adj[u]] for u, r in enumerate(rot)]
    return build(rot)


def _adjacent_any(g: PlaneGraph, u: int, w: int) -> bool:
    a = u if g.v_deg[u] <= g.v_deg[w] else w
    b = w if a == u else u
    return any(g.head(d) == b for d in g.darts_at(a))


def _share_neighbor(g: PlaneGraph, u: int, w: int) -> bool:
    a = u if g.v_deg[u] <= g.v_deg[w] else w
    b = w if a == u else u
    nb = set(g.neighbors(b))
    return any(z in nb for z in g.neighbors(a))


def _random_face(g: PlaneGraph, rng: random.Random,
                 cap: int = 64) -> list[int] | None:
    for _ in range(32):
        d = rng.randrange(len(g.d_origin))
        if not g.d_alive[d]:
            continue
        walk, closed = g.walk_face(d, cap)
        if closed:
            return walk
    return None


#: growth ops refuse to push a vertex's degree past this; keeps the
#: solver's closeness balls (and hence its linear constant) moderate
DEGREE_SOFT_CAP = 10


def quad(size: int, seed: int = 0) -> PlaneGraph:
    """Grow a bipartite plane graph with all faces even, |V| = size."""
    if size < 4:
        raise InvalidSpec("quad needs size >= 4")
    g = build([[1, 3], [2, 0], [3, 1], [0, 2]])
    rng = random.Random(seed)
    while g.n_alive < size:
        walk = _random_face(g, rng)
        if walk is None:
            continue
        length = len(walk)
        roll = rng.random()
        if length >= 6 and roll < 0.3:
            _try_even_chord(g, rng, walk)
        elif length <= 6 and roll > 0.75 and size - g.n_alive >= 2:
            _double_subdivide(g, rng.choice(walk))
        else:
            _insert_degree2(g, rng, walk)
    return g


def _try_even_chord(g: PlaneGraph, rng: random.Random,
                    walk: list[int]) -> None:
    # split an even face into two even faces: offset must be odd >= 3
    length = len(walk)
    offsets = [t for t in range(3, length - 2) if t % 2 == 1]
    if not offsets:
        return
    t = rng.choice(offsets)
    i = rng.randrange(length)
    du, dv = walk[i], walk[(i + t) % length]
    u, w = g.d_origin[du], g.d_origin[dv]
    if u == w or g.v_deg[u] >= DEGREE_SOFT_CAP or g.v_deg[w] >= DEGREE_SOFT_CAP:
        return
    if _adjacent_any(g, u, w):
        return
    g.add_edge(du, dv)


def _insert_degree2(g: PlaneGraph, rng: random.Random,
                    walk: list[int]) -> None:
    # new vertex joined to two face vertices at even walk distance
    length = len(walk)
    evens = [t for t in range(2, length - 1) if t % 2 == 0]
    if not evens:
        return
    t = rng.choice(evens)
    i = rng.randrange(length)
    du, dv = walk[i], walk[(i + t) % length]
    u, w = g.d_origin[du], g.d_origin[dv]
    if u == w or g.v_deg[u] >= DEGREE_SOFT_CAP or g.v_deg[w] >= DEGREE_SOFT_CAP:
        return
    if _adjacent_any(g, u, w):
        return
    z = g.new_vertex()
    g.add_edge_at(u, du, z, None)
    g.add_edge_at(z, g.v_dart[z], w, dv)


def _double_subdivide(g: PlaneGraph, d: int) -> None:
    # replace edge(d) by a path of three edges; both faces grow by 2
    u, w = g.d_origin[d], g.head(d)
    td = g.d_twin[d]
    ref_u = g.d_next[d] if g.d_next[d] != d else None
    ref_w = g.d_next[td] if g.d_next[td] != td else None
    g.remove_edge(d)
    s = g.new_vertex()
    t = g.new_vertex()
    g.add_edge_at(u, ref_u, s, None)
    g.add_edge_at(s, g.v_dart[s], t, None)
    g.add_edge_at(t, g.v_dart[t], w, ref_w)


def augmented(size: int, seed: int = 0) -> PlaneGraph:
    """quad() plus triangle-refusing random chords (odd faces appear)."""
    g = quad(size, seed=seed)
    rng = random.Random(seed ^ 0x9E3779B9)
    attempts = max(4, g.m_alive // 3)
    for _ in range(attempts):
        walk = _random_face(g, rng)
        if walk is None or len(walk) < 5:
            continue
        length = len(walk)
        t = rng.randrange(2, length - 1)
        i = rng.randrange(length)
        du, dv = walk[i], walk[(i + t) % length]
        u, w = g.d_origin[du], g.d_origin[dv]
        if u == w or g.v_deg[u] >= DEGREE_SOFT_CAP or g.v_deg[w] >= DEGREE_SOFT_CAP:
            continue
        if _adjacent_any(g, u, w) or _share_neighbor(g, u, w):
            continue
        g.add_edge(du, dv)
    return g
