"""Brute-force reference implementations used to validate the fast paths.

Everything here evaluates definitions literally (unrestricted path
enumeration, full face lists, exhaustive coloring search) and is capped
to small instances.  Exceeding a cap raises TooLarge instead of silently
degrading.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .embedding import DEGREE_CAP, PlaneGraph
from .multigram import (
    DECAGRAM, HEXAGRAM, MONOGRAM, OCTAGRAM, PENTAGRAM, TETRAGRAM,
    ConstraintCycle, Multigram,
)


class TooLarge(Exception):
    pass


@dataclass
class SimpleGraph:
    """Embedding-free adjacency view; keys are the alive vertex ids."""

    adj: dict[int, set[int]]

    @classmethod
    def from_plane_graph(cls, g: PlaneGraph) -> "SimpleGraph":
        adj = {v: set(g.neighbors(v)) for v in g.vertex_ids()}
        return cls(adj)

    @classmethod
    def from_edges(cls, n: int, edges) -> "SimpleGraph":
        adj: dict[int, set[int]] = {v: set() for v in range(n)}
        for u, w in edges:
            if u == w:
                raise ValueError("loop")
            adj[u].add(w)
            adj[w].add(u)
        return cls(adj)

    def __len__(self) -> int:
        return len(self.adj)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in self.adj.items():
            for w in nbrs:
                if u < w:
                    yield u, w


def is_proper(sg: SimpleGraph, coloring: dict[int, int]) -> bool:
    """All vertices colored in {0,1,2} and no edge monochromatic."""
    for v in sg.adj:
        if coloring.get(v) not in (0, 1, 2):
            return False
    return all(coloring[u] != coloring[w] for u, w in sg.edges())


def is_triangle_free(sg: SimpleGraph) -> bool:
    for u, w in sg.edges():
        small, other = (u, w) if len(sg.adj[u]) <= len(sg.adj[w]) else (w, u)
        if any(z in sg.adj[other] for z in sg.adj[small]):
            return False
    return True


def brute_force_3color(sg: SimpleGraph, cap: int = 30) -> dict[int, int] | None:
    """Backtracking search, most-constrained-first; None if uncolorable."""
    if len(sg) > cap:
        raise TooLarge(len(sg))
    order = sorted(sg.adj, key=lambda v: -len(sg.adj[v]))
    coloring: dict[int, int] = {}

    def feasible(v: int, c: int) -> bool:
        return all(coloring.get(w) != c for w in sg.adj[v])

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in (0, 1, 2):
            if feasible(v, c):
                coloring[v] = c
                if rec(i + 1):
                    return True
                del coloring[v]
        return False

    return dict(coloring) if rec(0) else None


def enumerate_3colorings(sg: SimpleGraph, cap: int = 14) -> Iterator[dict[int, int]]:
    """All proper 3-colorings (small instances only)."""
    if len(sg) > cap:
        raise TooLarge(len(sg))
    order = sorted(sg.adj)
    coloring: dict[int, int] = {}

    def rec(i: int) -> Iterator[dict[int, int]]:
        if i == len(order):
            yield dict(coloring)
            return
        v = order[i]
        for c in (0, 1, 2):
            if all(coloring.get(w) != c for w in sg.adj[v]):
                coloring[v] = c
                yield from rec(i + 1)
                del coloring[v]

    return rec(0)


def all_paths_upto(sg: SimpleGraph, s: int, t: int, max_len: int,
                   excluded=frozenset()) -> list[list[int]]:
    """Simple paths s..t of length <= max_len avoiding excluded vertices."""
    if s in excluded or t in excluded:
        return []
    out: list[list[int]] = []
    path = [s]

    def rec(u: int) -> None:
        if u == t and len(path) > 1:
            out.append(list(path))
            return
        if len(path) > max_len:
            return
        for w in sorted(sg.adj[u]):
            if w in excluded or w in path:
                continue
            if w != t and len(path) == max_len:
                continue
            path.append(w)
            rec(w)
            path.pop()

    rec(s)
    return out


# ----------------------------------------------------------------------
# faces

def face_orbits(g: PlaneGraph) -> list[list[int]]:
    """Every sigma orbit (as dart lists), each alive dart in exactly one."""
    seen = [False] * len(g.d_origin)
    out = []
    for d in range(len(g.d_origin)):
        if g.d_alive[d] and not seen[d]:
            orbit = g.trace_face(d)
            for e in orbit:
                seen[e] = True
            out.append(orbit)
    return out


def facial_cycles(g: PlaneGraph) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Orbits that are simple cycles, as (vertex tuple, dart tuple)."""
    out = []
    for orbit in face_orbits(g):
        verts = tuple(g.d_origin[d] for d in orbit)
        if len(verts) >= 3 and len(set(verts)) == len(verts):
            out.append((verts, tuple(orbit)))
    return out


def _canon_cycle(verts: tuple[int, ...]) -> tuple[int, ...]:
    best = None
    k = len(verts)
    for seq in (verts, (verts[0],) + tuple(reversed(verts[1:]))):
        for r in range(k):
            rot = seq[r:] + seq[:r]
            if best is None or rot < best:
                best = rot
    return best


# ----------------------------------------------------------------------
# literal safety / security

def _small(g: PlaneGraph, v: int) -> bool:
    return g.v_deg[v] <= DEGREE_CAP


def _adm(g: PlaneGraph, v: int, members) -> bool:
    return _small(g, v) and v not in members


def _path_edges_in_cycle(path: list[int], verts: tuple[int, ...]) -> bool:
    k = len(verts)
    cyc_edges = set()
    for i in range(k):
        a, b = verts[i], verts[(i + 1) % k]
        cyc_edges.add((a, b))
        cyc_edges.add((b, a))
    return all((path[i], path[i + 1]) in cyc_edges for i in range(len(path) - 1))


def is_safe_slow(g: PlaneGraph, m: Multigram,
                 sg: SimpleGraph | None = None,
                 cycles=None) -> bool:
    """Safety by unrestricted path enumeration (the definition, verbatim)."""
    if sg is None:
        sg = SimpleGraph.from_plane_graph(g)
    kind, verts = m.kind, m.vertices
    if kind in (MONOGRAM, OCTAGRAM):
        return True
    if kind in (TETRAGRAM, HEXAGRAM):
        v1, v3 = verts[0], verts[2]
        for path in all_paths_upto(sg, v1, v3, 3):
            if not _path_edges_in_cycle(path, verts):
                return False
        return True
    if kind == DECAGRAM:
        x1, x3 = m.aux[0], m.aux[2]
        if x1 == x3 or x3 in sg.adj[x1]:
            return False
        return not any(len(p) == 3 for p in all_paths_upto(sg, x1, x3, 2))
    if kind == PENTAGRAM:
        v1, v2, v3, v4, v5 = verts
        x1, x2, x3, x4 = m.aux
        if len({x1, x2, x3, x4}) != 4:
            return False
        for i in range(4):
            for j in range(i + 1, 4):
                if m.aux[j] in sg.adj[m.aux[i]]:
                    return False
        excluded = frozenset((v1, v2, v3, v4))
        if all_paths_upto(sg, x2, v5, 3, excluded):
            return False
        if cycles is None:
            cycles = facial_cycles(g)
        canon = {_canon_cycle(vs) for vs, _ in cycles}
        for path in all_paths_upto(sg, x3, x4, 3, excluded):
            if len(path) != 3:
                return False
            y = path[1]
            if _canon_cycle((x3, v3, v4, x4, y)) not in canon:
                return False
        return True
    raise ValueError(kind)


def is_secure_slow(g: PlaneGraph, m: Multigram,
                   C: ConstraintCycle | None = None,
                   sg: SimpleGraph | None = None,
                   cycles=None) -> bool:
    """Security clauses evaluated literally, no bounded-degree shortcuts."""
    members = C.members if C is not None else frozenset()
    if sg is None:
        sg = SimpleGraph.from_plane_graph(g)
    if cycles is None:
        cycles = facial_cycles(g)
    deg = {v: len(sg.adj[v]) for v in sg.adj}
    kind, verts = m.kind, m.vertices

    if kind == MONOGRAM:
        return deg[verts[0]] <= 2 and verts[0] not in members
    if kind == OCTAGRAM:
        return (all(deg[v] == 3 for v in verts)
                and all(_adm(g, v, members) for v in verts))
    if kind == TETRAGRAM:
        v1, v2, v3, v4 = verts
        if deg[v1] != 3 or not _adm(g, v1, members):
            return False
        (x,) = set(sg.adj[v1]) - {v2, v4}
        if not _adm(g, x, members):
            return False
        if not _adm(g, v3, members):
            four_faces = [set(vs) for vs, _ in cycles if len(vs) == 4]
            for w in sg.adj[x]:
                if _adm(g, w, members):
                    continue
                ok = any({v1, x, w, v2} == f or {v1, x, w, v4} == f
                         for f in four_faces)
                if not ok:
                    return False
        return is_safe_slow(g, m, sg, cycles)
    if kind == DECAGRAM:
        if not all(deg[v] == 3 for v in verts):
            return False
        if not all(_adm(g, v, members) for v in verts):
            return False
        if not (_adm(g, m.aux[0], members) and _adm(g, m.aux[2], members)):
            return False
        return is_safe_slow(g, m, sg, cycles)
    if kind == PENTAGRAM:
        if not all(deg[v] == 3 for v in verts[:4]):
            return False
        if not all(_adm(g, v, members) for v in verts):
            return False
        if not all(_adm(g, x, members) for x in m.aux):
            return False
        v5, x2, x3, x4 = verts[4], m.aux[1], m.aux[2], m.aux[3]

        def clean(v: int) -> bool:
            return all(_adm(g, w, members) for w in sg.adj[v])

        if not (clean(v5) or clean(x2)):
            return False
        if not (clean(x3) or clean(x4)):
            return False
        return is_safe_slow(g, m, sg, cycles)
    if kind == HEXAGRAM:
        v1, v2, v3, v6 = verts[0], verts[1], verts[2], verts[5]
        if deg[v1] != 3:
            return False
        (x,) = set(sg.adj[v1]) - {v2, v6}
        for w in (v1, v3, v6, x):
            if not _adm(g, w, members):
                return False
        return is_safe_slow(g, m, sg, cycles)
    raise ValueError(kind)


def all_secure_multigrams_slow(g: PlaneGraph,
                               C: ConstraintCycle | None = None,
                               cap: int = 200) -> list[Multigram]:
    """All (C-)secure multigrams, from the definitions.

    Enumerates every vertex of degree <= 2 and every facial cycle of
    length 4/5/6 in all rotations and both orientations.
    """
    if g.n_alive > cap:
        raise TooLarge(g.n_alive)
    sg = SimpleGraph.from_plane_graph(g)
    cycles = facial_cycles(g)
    out: list[Multigram] = []
    seen: set[tuple] = set()

    def consider(m: Multigram) -> None:
        key = (m.kind, m.vertices)
        if key in seen:
            return
        if is_secure_slow(g, m, C, sg, cycles):
            seen.add(key)
            out.append(m)

    for v in sorted(sg.adj):
        if len(sg.adj[v]) <= 2:
            consider(Multigram(MONOGRAM, (v,)))

    deg = {v: len(sg.adj[v]) for v in sg.adj}
    for verts, darts in cycles:
        k = len(verts)
        if k not in (4, 5, 6):
            continue
        listings = []
        for r in range(k):
            rot_v = verts[r:] + verts[:r]
            rot_d = darts[r:] + darts[:r]
            listings.append((rot_v, rot_d))
            rev_v = (rot_v[0],) + tuple(reversed(rot_v[1:]))
            rev_d = (rot_d[0],) + tuple(reversed(rot_d[1:]))
            listings.append((rev_v, rev_d))
        for lv, ld in listings:
            if k == 4:
                kinds = [TETRAGRAM]
                if all(deg[w] == 3 for w in lv):
                    kinds.append(OCTAGRAM)
            elif k == 5:
                kinds = []
                if all(deg[w] == 3 for w in lv[:4]):
                    kinds.append(PENTAGRAM)
                    if deg[lv[4]] == 3:
                        kinds.append(DECAGRAM)
            else:
                kinds = [HEXAGRAM]
            for kind in kinds:
                aux: tuple[int, ...] = ()
                if kind in (TETRAGRAM, HEXAGRAM):
                    if deg[lv[0]] == 3:
                        aux = tuple(set(sg.adj[lv[0]]) - {lv[1], lv[-1]})
                elif kind in (PENTAGRAM, DECAGRAM):
                    xs = []
                    for i in range(4):
                        prv = lv[i - 1] if i else lv[-1]
                        extra = set(sg.adj[lv[i]]) - {prv, lv[i + 1]}
                        xs.append(extra.pop())
                    aux = tuple(xs)
                consider(Multigram(kind, lv, aux, ld))
    return out


# ----------------------------------------------------------------------
# literal closeness

def closeness_slow(g: PlaneGraph, u: int, v: int, cap: int = 200) -> bool:
    """Close = small-vertex path of length <= 4, or a shared facial
    cycle of length <= 6 (defined for small u, v only)."""
    if g.n_alive > cap:
        raise TooLarge(g.n_alive)
    if not (_small(g, u) and _small(g, v)):
        return False
    if u == v:
        return True
    # BFS inside the small-vertex-induced subgraph
    dist = {u: 0}
    frontier = [u]
    for depth in range(1, 5):
        nxt = []
        for w in frontier:
            for z in g.neighbors(w):
                if z not in dist and _small(g, z):
                    dist[z] = depth
                    nxt.append(z)
        frontier = nxt
    if v in dist:
        return True
    for verts, _ in facial_cycles(g):
        if len(verts) <= 6 and u in verts and v in verts:
            return True
    return False


def close_to_edge_slow(g: PlaneGraph, d: int, w: int, cap: int = 200) -> bool:
    """w lies on a facial walk through edge(d) within walk distance 2
    of one of its ends."""
    if g.n_alive > cap:
        raise TooLarge(g.n_alive)
    for side in (d, g.d_twin[d]):
        orbit = g.trace_face(side)
        verts = [g.d_origin[e] for e in orbit]
        k = len(verts)
        # ends of the edge sit at walk positions i and i+1
        i = orbit.index(side)
        ends = (i, (i + 1) % k)
        for j, z in enumerate(verts):
            if z != w:
                continue
            for e in ends:
                delta = abs(j - e)
                if min(delta, k - delta) <= 2:
                    return True
    return False
