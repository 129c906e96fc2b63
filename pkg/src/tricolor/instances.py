"""Hand-built embedded instances: cycles, prisms, polyhedra, flowers.

Rotation systems come either from an explicit face list
(rotations_from_faces) or from 3D polyhedron coordinates projected onto
vertex tangent planes.  Either way build() re-verifies the genus-0
Euler formula, so these constructions are self-checking.
"""

from __future__ import annotations

import math

from .embedding import PlaneGraph, build


def cycle_rotations(n: int) -> list[list[int]]:
    if n < 3:
        raise ValueError("cycle needs >= 3 vertices")
    return [[(i - 1) % n, (i + 1) % n] for i in range(n)]


def cycle_graph(n: int) -> PlaneGraph:
    return build(cycle_rotations(n))


def path_graph(n: int) -> PlaneGraph:
    if n < 2:
        raise ValueError("path needs >= 2 vertices")
    rot = [[i - 1, i + 1] for i in range(n)]
    rot[0] = [1]
    rot[-1] = [n - 2]
    return build(rot)


def star_graph(leaves: int) -> PlaneGraph:
    rot = [list(range(1, leaves + 1))]
    rot.extend([0] for _ in range(leaves))
    return build(rot)


def rotations_from_faces(faces: list[tuple[int, ...]]) -> list[list[int]]:
    """Rotation system of a sphere embedding given by its face cycles.

    Every edge must lie on exactly two of the given faces.  Faces are
    oriented consistently (flipping as needed); each oriented corner
    (u, v, w) then pins w as the clockwise successor of u around v.
    """
    n = 1 + max(max(f) for f in faces)
    edge_faces: dict[tuple[int, int], list[int]] = {}
    for fi, face in enumerate(faces):
        k = len(face)
        for i in range(k):
            a, b = face[i], face[(i + 1) % k]
            key = (a, b) if a < b else (b, a)
            edge_faces.setdefault(key, []).append(fi)
    for key, fs in edge_faces.items():
        if len(fs) != 2:
            raise ValueError(f"edge {key} lies on {len(fs)} faces")

    oriented: dict[int, tuple[int, ...]] = {0: tuple(faces[0])}
    stack = [0]
    while stack:
        fi = stack.pop()
        face = oriented[fi]
        k = len(face)
        for i in range(k):
            a, b = face[i], face[(i + 1) % k]
            key = (a, b) if a < b else (b, a)
            other = next(f for f in edge_faces[key] if f != fi)
            directed = _face_has_directed(faces[other], a, b)
            if other not in oriented:
                oriented[other] = (tuple(reversed(faces[other]))
                                   if directed else tuple(faces[other]))
                stack.append(other)
            elif _face_has_directed(oriented[other], a, b):
                raise ValueError("faces are not consistently orientable")
    if len(oriented) != len(faces):
        raise ValueError("face adjacency is not connected")

    succ: dict[int, dict[int, int]] = {v: {} for v in range(n)}
    for face in oriented.values():
        k = len(face)
        for i in range(k):
            u, v, w = face[i], face[(i + 1) % k], face[(i + 2) % k]
            succ[v][u] = w
    rotations: list[list[int]] = []
    for v in range(n):
        nbrs = succ[v]
        if not nbrs:
            rotations.append([])
            continue
        start = min(nbrs)
        rot = [start]
        cur = nbrs[start]
        while cur != start:
            rot.append(cur)
            cur = nbrs[cur]
        if len(rot) != len(nbrs):
            raise ValueError(f"rotation at {v} does not close up")
        rotations.append(rot)
    return rotations


def _face_has_directed(face: tuple[int, ...], a: int, b: int) -> bool:
    k = len(face)
    return any(face[i] == a and face[(i + 1) % k] == b for i in range(k))


def graph_from_faces(faces: list[tuple[int, ...]]) -> PlaneGraph:
    return build(rotations_from_faces(faces))


def k23_graph() -> PlaneGraph:
    """K_{2,3} drawn with its three quadrilateral faces (parts {0,1}, {2,3,4})."""
    return graph_from_faces([(0, 2, 1, 3), (0, 3, 1, 4), (0, 4, 1, 2)])


# ----------------------------------------------------------------------
# polyhedra from coordinates

def _polyhedron_rotations(coords: list[tuple[float, float, float]],
                          edges: list[tuple[int, int]]) -> list[list[int]]:
    adj: dict[int, list[int]] = {i: [] for i in range(len(coords))}
    for u, w in edges:
        adj[u].append(w)
        adj[w].append(u)
    rotations: list[list[int]] = []
    for v, (nx, ny, nz) in enumerate(coords):
        norm = math.sqrt(nx * nx + ny * ny + nz * nz)
        n = (nx / norm, ny / norm, nz / norm)
        axis = (1.0, 0.0, 0.0) if abs(n[0]) < 0.9 else (0.0, 1.0, 0.0)
        e1 = _cross(n, axis)
        e1 = _scale(e1, 1.0 / _norm(e1))
        e2 = _cross(n, e1)
        angles = []
        for w in adj[v]:
            d = tuple(coords[w][i] - coords[v][i] for i in range(3))
            angles.append((math.atan2(_dot(d, e2), _dot(d, e1)), w))
        angles.sort()
        rotations.append([w for _, w in angles])
    return rotations


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _norm(a):
    return math.sqrt(_dot(a, a))


def _scale(a, s):
    return (a[0] * s, a[1] * s, a[2] * s)


def _edges_by_distance(coords, limit_sq: float) -> list[tuple[int, int]]:
    out = []
    for u in range(len(coords)):
        for w in range(u + 1, len(coords)):
            d = tuple(coords[u][i] - coords[w][i] for i in range(3))
            if _dot(d, d) < limit_sq:
                out.append((u, w))
    return out


def cube_graph() -> PlaneGraph:
    coords = [(float(x), float(y), float(z))
              for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]
    edges = _edges_by_distance(coords, 4.5)
    assert len(edges) == 12
    return build(_polyhedron_rotations(coords, edges))


def dodecahedron_graph() -> PlaneGraph:
    phi = (1 + math.sqrt(5)) / 2
    coords: list[tuple[float, float, float]] = []
    for x in (-1.0, 1.0):
        for y in (-1.0, 1.0):
            for z in (-1.0, 1.0):
                coords.append((x, y, z))
    for a in (-1 / phi, 1 / phi):
        for b in (-phi, phi):
            coords.append((0.0, a, b))
            coords.append((a, b, 0.0))
            coords.append((b, 0.0, a))
    # edge length 2/phi ~ 1.236; next distance is 2
    edges = _edges_by_distance(coords, 1.7)
    assert len(edges) == 30
    return build(_polyhedron_rotations(coords, edges))


# ----------------------------------------------------------------------
# flowers: a short inner cycle, pendant spokes, and a subdivided outer
# ring, giving hand-checkable secure pentagrams / hexagrams.

def pentagram_flower() -> PlaneGraph:
    """Inner 5-cycle 0..4 with deg(0..3) = 3 and deg(4) = 4.

    (0,1,2,3,4) is a secure pentagram (not a decagram): its outside
    neighbors 5,6,7,8 are pairwise non-adjacent, and the one short
    x3-x4 connection 7-13-8 closes the facial pentagon (2,7,13,8,3).
    """
    faces = [
        (0, 1, 2, 3, 4),
        (0, 5, 11, 6, 1),
        (1, 6, 12, 7, 2),
        (2, 7, 13, 8, 3),
        (3, 8, 14, 9, 4),
        (4, 9, 15, 10),
        (4, 10, 16, 5, 0),
        (5, 16, 10, 15, 9, 14, 8, 13, 7, 12, 6, 11),
    ]
    return graph_from_faces(faces)


def hexagram_flower() -> PlaneGraph:
    """Inner 6-cycle 0..5, all of degree 3; (0,...,5) is a secure hexagram."""
    pockets = [(i, 6 + i, 12 + i, 6 + (i + 1) % 6, (i + 1) % 6)
               for i in range(6)]
    ring = (6, 17, 11, 16, 10, 15, 9, 14, 8, 13, 7, 12)
    faces = [tuple(range(6)), *pockets, ring]
    return graph_from_faces(faces)


def big_hub_graph(spokes: int = 60, pendant: bool = True) -> PlaneGraph:
    """A hub adjacent to every other vertex of a rim cycle of length
    2*spokes; all faces are quadrilaterals, so the graph is
    triangle-free, and with spokes >= 60 the hub is big.

    With ``pendant`` a leaf hangs off rim vertex 1, making
    (1, 2, hub, 2*spokes) a secure tetragram whose v3 is the big hub --
    the one configuration where the identification must absorb the
    small side into the big one.
    """
    if spokes < 3:
        raise ValueError("need >= 3 spokes")
    rim = 2 * spokes
    hub = rim
    faces = []
    for i in range(0, rim, 2):
        faces.append((i, i + 1, (i + 2) % rim, hub))
    outer = tuple(reversed(range(rim)))
    faces.append(outer)
    g = build(rotations_from_faces(faces))
    if pendant:
        leaf = g.new_vertex()
        d1 = g.v_dart[1]
        g.add_edge_at(1, d1, leaf, None)
    return g


def grid_rotations(rows: int, cols: int) -> list[list[int]]:
    """rows x cols grid; neighbor order N, E, S, W is a plane rotation."""
    if rows < 1 or cols < 1:
        raise ValueError("grid needs positive dimensions")
    rot: list[list[int]] = []
    for i in range(rows):
        for j in range(cols):
            nbrs = []
            if i > 0:
                nbrs.append((i - 1) * cols + j)
            if j < cols - 1:
                nbrs.append(i * cols + j + 1)
            if i < rows - 1:
                nbrs.append((i + 1) * cols + j)
            if j > 0:
                nbrs.append(i * cols + j - 1)
            rot.append(nbrs)
    return rot


def grid_graph(rows: int, cols: int | None = None) -> PlaneGraph:
    return build(grid_rotations(rows, cols if cols is not None else rows))
