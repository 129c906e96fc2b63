"""The six reducible configurations and their bounded security tests.

A multigram is a monogram (one vertex of degree <= 2) or a facial cycle
of length 4, 5 or 6 listed in walk order with the pivot first:

    tetragram   facial 4-cycle
    octagram    tetragram with all four degrees exactly 3
    pentagram   facial 5-cycle with v1..v4 of degree exactly 3
    decagram    pentagram with v5 also of degree 3
    hexagram    facial 6-cycle

Safety is the per-kind path-exclusion predicate that keeps the reduction
triangle-free; (C-)security adds degree and admissibility side
conditions.  Those side conditions are exactly what makes the safety
paths enumerable in bounded work: on every path that must be tested, all
vertices but at most one are small, so searches expand from small
endpoints only.  The one genuinely tricky spot is a tetragram whose v3
and some neighbor of x are both big; there the verified 4-face clause
already implies non-adjacency (a shared neighbor of v2 and v3 would form
a triangle), so the test is skipped rather than scanned.

Everything here is read-only on the graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import DEGREE_CAP, PlaneGraph

MONOGRAM = "monogram"
TETRAGRAM = "tetragram"
OCTAGRAM = "octagram"
DECAGRAM = "decagram"
PENTAGRAM = "pentagram"
HEXAGRAM = "hexagram"

#: Detection order for find_secure_with_pivot (fixed for determinism).
KIND_ORDER = (MONOGRAM, TETRAGRAM, OCTAGRAM, DECAGRAM, PENTAGRAM, HEXAGRAM)

_EMPTY: frozenset[int] = frozenset()


@dataclass(frozen=True)
class Multigram:
    """One configuration instance.

    ``vertices`` lists the facial cycle in walk order starting at the
    pivot (just the vertex for a monogram).  ``darts[i]`` is the dart of
    the bounding face whose origin is ``vertices[i]`` -- note that for a
    reversed listing these are not the listing-order darts, they simply
    locate each vertex's corner on the face.  ``aux`` holds the third
    neighbor x of the pivot (tetragram/hexagram, when deg(v1) == 3) or
    the outside neighbors x1..x4 (pentagram/decagram).
    """

    kind: str
    vertices: tuple[int, ...]
    aux: tuple[int, ...] = ()
    darts: tuple[int, ...] = ()

    @property
    def pivot(self) -> int:
        return self.vertices[0]


class ConstraintCycle:
    """The precolored facial cycle C; an empty one stands for K0."""

    __slots__ = ("order", "members")

    def __init__(self, order: tuple[int, ...] | list[int] = ()) -> None:
        self.order: list[int] = list(order)
        self.members: set[int] = set(order)

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def __len__(self) -> int:
        return len(self.order)

    def replace(self, absorbed: int, survivor: int) -> None:
        """Rename a cycle vertex after an identification absorbed it."""
        self.members.discard(absorbed)
        self.members.add(survivor)
        self.order[self.order.index(absorbed)] = survivor


def _members(C: ConstraintCycle | None) -> frozenset[int] | set[int]:
    return C.members if C is not None else _EMPTY


def admissible(g: PlaneGraph, v: int, C: ConstraintCycle | None = None) -> bool:
    """Small and not on C."""
    return g.v_deg[v] <= DEGREE_CAP and v not in _members(C)


def _no_forbidden_neighbor(g: PlaneGraph, v: int, members) -> bool:
    # v is small; a forbidden neighbor is big or on C
    deg = g.v_deg
    g.work += deg[v]
    for w in g.neighbors(v):
        if deg[w] > DEGREE_CAP or w in members:
            return False
    return True


def _third_dart(g: PlaneGraph, v: int, nb1: int, nb2: int) -> int:
    """The dart of a degree-3 vertex not aimed at its two cycle neighbors."""
    g.work += 3
    for d in g.darts_at(v):
        w = g.head(d)
        if w != nb1 and w != nb2:
            return d
    raise AssertionError(f"no third dart at {v}")


def cycle_candidates(g: PlaneGraph, v: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Facial cycles of length 4..6 through v, as (vertices, darts).

    One entry per incident face and traversal direction, vertices listed
    from v; at most 7 sigma steps are spent per incident face.
    """
    out: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for d in g.darts_at(v):
        walk, closed = g.walk_face(d, 7)
        k = len(walk)
        if not closed or k < 4 or k > 6:
            continue
        verts = tuple(g.d_origin[e] for e in walk)
        if len(set(verts)) != k:
            continue
        darts = tuple(walk)
        out.append((verts, darts))
        rv = (verts[0],) + tuple(reversed(verts[1:]))
        rd = (darts[0],) + tuple(reversed(darts[1:]))
        out.append((rv, rd))
    return out


def _aux_for(g: PlaneGraph, kind: str, verts: tuple[int, ...]) -> tuple[int, ...]:
    if kind in (TETRAGRAM, OCTAGRAM, HEXAGRAM):
        v1 = verts[0]
        if g.v_deg[v1] != 3:
            return ()
        return (g.head(_third_dart(g, v1, verts[1], verts[-1])),)
    if kind in (PENTAGRAM, DECAGRAM):
        xs = []
        for i in range(4):
            prv = verts[i - 1] if i else verts[-1]
            xs.append(g.head(_third_dart(g, verts[i], prv, verts[i + 1])))
        return tuple(xs)
    return ()


def _shape_ok(g: PlaneGraph, kind: str, verts: tuple[int, ...]) -> bool:
    deg = g.v_deg
    k = len(verts)
    if kind == TETRAGRAM:
        return k == 4
    if kind == OCTAGRAM:
        return k == 4 and all(deg[w] == 3 for w in verts)
    if kind == PENTAGRAM:
        return k == 5 and all(deg[w] == 3 for w in verts[:4])
    if kind == DECAGRAM:
        return k == 5 and all(deg[w] == 3 for w in verts)
    if kind == HEXAGRAM:
        return k == 6
    return False


def candidates_at(g: PlaneGraph, v: int) -> list[Multigram]:
    """Every shape-valid multigram with pivot v.

    Only vertices of degree <= 3 can pivot a secure multigram, so higher
    degrees yield nothing; both traversal directions of each incident
    short facial cycle are emitted.
    """
    if not g.v_alive[v]:
        return []
    deg = g.v_deg[v]
    out: list[Multigram] = []
    if deg <= 2:
        out.append(Multigram(MONOGRAM, (v,)))
    if deg > 3:
        return out
    for verts, darts in cycle_candidates(g, v):
        for kind in (TETRAGRAM, OCTAGRAM, PENTAGRAM, DECAGRAM, HEXAGRAM):
            if _shape_ok(g, kind, verts):
                out.append(Multigram(kind, verts, _aux_for(g, kind, verts), darts))
    return out


# ----------------------------------------------------------------------
# safety

def _tetragram_safe(g: PlaneGraph, v1: int, v3: int, x: int) -> bool:
    # Requires x small; when v3 and a neighbor b of x are both big, the
    # caller has verified the 4-face clause for b, which forces b and v3
    # non-adjacent (a common neighbor with v2 or v4 would close a
    # triangle), so that pair is skipped instead of scanned.
    if g.adjacent(x, v3):
        return False
    deg = g.v_deg
    big_v3 = deg[v3] > DEGREE_CAP
    for b in g.neighbors(x):
        if b == v1 or b == v3:
            continue
        if big_v3 and deg[b] > DEGREE_CAP:
            continue
        if g.adjacent(b, v3):
            return False
    return True


def _hexagram_safe(g: PlaneGraph, verts: tuple[int, ...],
                   x: int | None) -> bool:
    # Requires v3, v6, x small.  Paths through v2 are impossible in a
    # triangle-free graph, so v6 and x are the only useful first steps.
    v1, _, v3 = verts[0], verts[1], verts[2]
    v6 = verts[5]
    for mid in (v6,) if x is None else (v6, x):
        if g.adjacent(mid, v3):
            return False
        for b in g.neighbors(mid):
            if b == v1 or b == v3:
                continue
            if g.adjacent(b, v3):
                return False
    return True


def _path_len2_exists(g: PlaneGraph, s: int, t: int, excluded) -> bool:
    nt = {w for w in g.neighbors(t) if w not in excluded}
    g.work += g.v_deg[s] + g.v_deg[t]
    return any(w in nt for w in g.neighbors(s) if w not in excluded)


def _path_len3_exists(g: PlaneGraph, small_end: int, other: int, excluded) -> bool:
    # small_end's neighbors are all small (caller-established), so the
    # adjacency scans below are bounded.
    nbrs_other = [b for b in g.neighbors(other)
                  if b not in excluded and b != small_end]
    for a in g.neighbors(small_end):
        if a in excluded or a == other:
            continue
        for b in nbrs_other:
            if a != b and g.adjacent(a, b):
                return True
    return False


def _is_facial_cycle5(g: PlaneGraph, cyc: tuple[int, int, int, int, int]) -> bool:
    d = g.dart_between(cyc[0], cyc[1])
    if d is None:
        return False
    walk, closed = g.walk_face(d, 6)
    if closed and len(walk) == 5:
        if tuple(g.d_origin[e] for e in walk) == cyc:
            return True
    t = g.d_twin[d]
    walk, closed = g.walk_face(t, 6)
    if closed and len(walk) == 5:
        rev = (cyc[1], cyc[0], cyc[4], cyc[3], cyc[2])
        if tuple(g.d_origin[e] for e in walk) == rev:
            return True
    return False


def _pentagram_safe(g: PlaneGraph, verts, xs, side25: int, side34: int) -> bool:
    # side25 in {x2, v5} and side34 in {x3, x4} have only admissible
    # (hence small) neighbors; path searches expand from those ends.
    v1, v2, v3, v4, v5 = verts
    x1, x2, x3, x4 = xs
    if len({x1, x2, x3, x4}) != 4:
        return False
    for i in range(4):
        for j in range(i + 1, 4):
            if g.adjacent(xs[i], xs[j]):
                return False
    excluded = {v1, v2, v3, v4}
    other25 = v5 if side25 == x2 else x2
    if g.adjacent(x2, v5):
        return False
    if _path_len2_exists(g, x2, v5, excluded):
        return False
    if _path_len3_exists(g, side25, other25, excluded):
        return False
    other34 = x4 if side34 == x3 else x3
    if _path_len3_exists(g, side34, other34, excluded):
        return False
    n4 = {w for w in g.neighbors(x4) if w not in excluded}
    g.work += g.v_deg[x3] + g.v_deg[x4]
    for y in g.neighbors(x3):
        if y in excluded or y not in n4:
            continue
        if not _is_facial_cycle5(g, (x3, v3, v4, x4, y)):
            return False
    return True


def _decagram_safe(g: PlaneGraph, x1: int, x3: int) -> bool:
    # x1, x3 small (admissibility is checked first)
    if x1 == x3 or g.adjacent(x1, x3):
        return False
    n3 = set(g.neighbors(x3))
    g.work += g.v_deg[x1] + g.v_deg[x3]
    return not any(w in n3 for w in g.neighbors(x1))


def is_safe(g: PlaneGraph, m: Multigram) -> bool:
    """Per-kind safety; monograms and octagrams are always safe.

    Bounded evaluation: callers must have established the security side
    conditions that cap the path searches (pivot degree 3 and the
    relevant admissibility clauses).
    """
    if m.kind in (MONOGRAM, OCTAGRAM):
        return True
    if m.kind == TETRAGRAM:
        if not m.aux:
            # degree-2 pivot: both its edges lie on the cycle, and paths
            # leaving through v2/v4 would close a triangle, so every
            # short v1-v3 path is a cycle subgraph
            if g.v_deg[m.vertices[0]] != 2:
                raise ValueError("tetragram pivot of degree > 3")
            return True
        return _tetragram_safe(g, m.vertices[0], m.vertices[2], m.aux[0])
    if m.kind == HEXAGRAM:
        if not m.aux and g.v_deg[m.vertices[0]] != 2:
            raise ValueError("hexagram pivot of degree > 3")
        return _hexagram_safe(g, m.vertices, m.aux[0] if m.aux else None)
    if m.kind == DECAGRAM:
        return _decagram_safe(g, m.aux[0], m.aux[2])
    if m.kind == PENTAGRAM:
        v5, x2, x3 = m.vertices[4], m.aux[1], m.aux[2]
        side25 = v5 if _no_forbidden_neighbor(g, v5, _EMPTY) else x2
        side34 = x3 if _no_forbidden_neighbor(g, x3, _EMPTY) else m.aux[3]
        return _pentagram_safe(g, m.vertices, m.aux, side25, side34)
    raise ValueError(m.kind)


# ----------------------------------------------------------------------
# security

def _four_face_thirds(g: PlaneGraph, v1: int, x: int) -> set[int]:
    """Vertices w with a facial 4-cycle through edge v1-x and w adjacent x."""
    d = g.dart_between(v1, x)
    out: set[int] = set()
    if d is None:
        return out
    walk, closed = g.walk_face(d, 5)
    if closed and len(walk) == 4:
        verts = [g.d_origin[e] for e in walk]
        if len(set(verts)) == 4:
            out.add(verts[2])
    t = g.d_twin[d]
    walk, closed = g.walk_face(t, 5)
    if closed and len(walk) == 4:
        verts = [g.d_origin[e] for e in walk]
        if len(set(verts)) == 4:
            out.add(verts[3])
    return out


def is_secure(g: PlaneGraph, m: Multigram,
              C: ConstraintCycle | None = None) -> bool:
    """Full per-kind (C-)security including safety."""
    members = _members(C)
    deg = g.v_deg
    verts = m.vertices
    kind = m.kind

    if kind == MONOGRAM:
        return deg[verts[0]] <= 2 and verts[0] not in members

    if kind == TETRAGRAM:
        v1, v3 = verts[0], verts[2]
        if deg[v1] != 3 or not admissible(g, v1, C):
            return False
        if not m.aux:
            return False
        x = m.aux[0]
        if not admissible(g, x, C):
            return False
        if not admissible(g, v3, C):
            thirds = _four_face_thirds(g, v1, x)
            g.work += deg[x]
            for w in g.neighbors(x):
                if not admissible(g, w, C) and w not in thirds:
                    return False
        return _tetragram_safe(g, v1, v3, x)

    if kind == OCTAGRAM:
        return (all(deg[w] == 3 for w in verts)
                and all(admissible(g, w, C) for w in verts))

    if kind == DECAGRAM:
        if not all(deg[w] == 3 for w in verts):
            return False
        x1, x3 = m.aux[0], m.aux[2]
        if not all(admissible(g, w, C) for w in verts):
            return False
        if not (admissible(g, x1, C) and admissible(g, x3, C)):
            return False
        return _decagram_safe(g, x1, x3)

    if kind == PENTAGRAM:
        if not all(deg[w] == 3 for w in verts[:4]):
            return False
        if not all(admissible(g, w, C) for w in verts):
            return False
        if not all(admissible(g, w, C) for w in m.aux):
            return False
        v5, x2, x3, x4 = verts[4], m.aux[1], m.aux[2], m.aux[3]
        if _no_forbidden_neighbor(g, v5, members):
            side25 = v5
        elif _no_forbidden_neighbor(g, x2, members):
            side25 = x2
        else:
            return False
        if _no_forbidden_neighbor(g, x3, members):
            side34 = x3
        elif _no_forbidden_neighbor(g, x4, members):
            side34 = x4
        else:
            return False
        return _pentagram_safe(g, verts, m.aux, side25, side34)

    if kind == HEXAGRAM:
        v1, v3, v6 = verts[0], verts[2], verts[5]
        if deg[v1] != 3 or not m.aux:
            return False
        x = m.aux[0]
        for w in (v1, v3, v6, x):
            if not admissible(g, w, C):
                return False
        return _hexagram_safe(g, verts, x)

    raise ValueError(kind)


def find_secure_with_pivot(g: PlaneGraph, v: int,
                           C: ConstraintCycle | None = None) -> Multigram | None:
    """Some (C-)secure multigram with pivot v, or None; constant work.

    Kinds are tried in KIND_ORDER; within a kind, incident faces in
    rotation order, forward listing before reversed.
    """
    members = _members(C)
    deg = g.v_deg[v]
    if deg > 3:
        return None
    if deg <= 2:
        if v not in members:
            return Multigram(MONOGRAM, (v,))
        return None
    if v in members:
        return None
    cycles = cycle_candidates(g, v)
    for kind in (TETRAGRAM, OCTAGRAM, DECAGRAM, PENTAGRAM, HEXAGRAM):
        for verts, darts in cycles:
            if not _shape_ok(g, kind, verts):
                continue
            m = Multigram(kind, verts, _aux_for(g, kind, verts), darts)
            if is_secure(g, m, C):
                return m
    return None
