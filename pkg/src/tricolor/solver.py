"""Worklist-driven 3-coloring of triangle-free plane graphs.

The engine keeps a FIFO multiset of candidate pivots (vertex ids;
duplicates and dead ids are fine and skipped on pop), initialized with
every vertex of degree at most three.  Each iteration pops a pivot,
looks for a (C-)secure multigram there in constant time, applies its
reduction, and re-inserts every vertex whose pivot status the edge
changes could have affected: vertices *close* to an event endpoint
(small-vertex path of length <= 4 or shared facial walk of length <= 6)
plus the +-2 facial windows of the edges themselves.  Endpoint
closeness is evaluated in the pre- and post-reduction states (the
algorithm's own granularity); edge windows are captured while each edge
exists.  Only vertices of degree <= 3 enter the queue: nothing else can
pivot a secure multigram.

The recursion of the underlying argument is replaced by an explicit
record stack; colors flow back through it once the graph is gone.  For
the precolored variant the loop stops when exactly the constraint cycle
remains and seeds the unwind with its precoloring.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .embedding import DEGREE_CAP, PlaneGraph, validate
from .multigram import (
    KIND_ORDER, ConstraintCycle, find_secure_with_pivot,
)
from .multigram import DECAGRAM, HEXAGRAM, PENTAGRAM, TETRAGRAM
from .oracle import SimpleGraph, is_triangle_free
from .reducer import ReductionRecord, event_endpoints, reduce, unwind


class TriangleFound(Exception):
    pass


class ExhaustedQueueNonempty(Exception):
    """Queue ran dry with vertices left: impossible unless a bug broke
    the worklist invariant or the input had a triangle."""


class NotAFacialCycle(Exception):
    pass


class ImproperPrecoloring(Exception):
    pass


@dataclass
class SolverStats:
    reductions: dict[str, int] = field(
        default_factory=lambda: {k: 0 for k in KIND_ORDER})
    pops: int = 0
    insertions: int = 0
    vertices_removed: int = 0
    max_edge_close: int = 0
    max_edges_deleted: int = 0
    max_edges_added: int = 0
    work: int = 0


# ----------------------------------------------------------------------
# closeness

def close_set(g: PlaneGraph, sources: Iterable[int],
              only_degree_le: int | None = None) -> set[int]:
    """Union over small sources of their close vertices, in g's current
    state: small-path balls of radius 4 plus <=6 facial walks.

    ``only_degree_le`` restricts the *collected* vertices by degree (the
    exploration is unaffected); the solver passes 3, since only such
    vertices can pivot a secure multigram.
    """
    deg = g.v_deg
    nxt = g.d_next
    twin = g.d_twin
    origin = g.d_origin
    vdart = g.v_dart
    cap = DEGREE_CAP + 1 if only_degree_le is None else only_degree_le
    ep = g.next_epoch()
    mark = g.v_mark
    frontier: list[int] = []
    out: set[int] = set()
    add = out.add
    for s in sources:
        if deg[s] <= DEGREE_CAP and mark[s] != ep:
            mark[s] = ep
            frontier.append(s)
            if deg[s] <= cap:
                add(s)
    steps = 0
    for s in frontier:
        d0 = vdart[s]
        if d0 < 0:
            continue
        d = d0
        while True:
            # first pass finds the walk length, second collects
            e = nxt[twin[d]]
            n = 1
            while e != d and n < 7:
                e = nxt[twin[e]]
                n += 1
            steps += n
            if e == d and n <= 6:
                e = nxt[twin[d]]
                while e != d:
                    w = origin[e]
                    if deg[w] <= cap:
                        add(w)
                    e = nxt[twin[e]]
            d = nxt[d]
            if d == d0:
                break
    for _ in (1, 2, 3, 4):
        nxt_frontier: list[int] = []
        push = nxt_frontier.append
        for u in frontier:
            d0 = vdart[u]
            if d0 < 0:
                continue
            d = d0
            while True:
                w = origin[twin[d]]
                if mark[w] != ep and deg[w] <= DEGREE_CAP:
                    mark[w] = ep
                    push(w)
                    if deg[w] <= cap:
                        add(w)
                d = nxt[d]
                steps += 1
                if d == d0:
                    break
        frontier = nxt_frontier
    g.work += steps
    return out


def edge_close_set(g: PlaneGraph, d: int) -> set[int]:
    """Vertices within facial-walk distance 2 of edge(d)'s ends, both
    sides; at most 10 of them."""
    out = set(g.edge_vicinity(d)[0])
    out.update(g.edge_vicinity(g.d_twin[d])[0])
    return out


def dirty_set(g: PlaneGraph, action: str, u: int, v: int,
              edge_window: Iterable[int] = ()) -> set[int]:
    """Per-event re-insertion candidates for one edge change.

    ``g`` is the state after the event.  For a deletion the caller must
    capture the edge's window (edge_close_set) before mutating and pass
    it in; for an addition the window is read off here.  Endpoint
    closeness is taken in g, a conservative choice for additions (the
    solver's batched path also covers the pre state).
    """
    out = close_set(g, (u, v))
    out.add(u)
    out.add(v)
    out.update(edge_window)
    if action == "added":
        dd = g.dart_between(u, v)
        if dd is not None:
            out.update(edge_close_set(g, dd))
    return out


class _EventSink:
    __slots__ = ("endpoints", "windows", "max_window", "deleted", "added")

    def __init__(self) -> None:
        self.endpoints: set[int] = set()
        self.windows: set[int] = set()
        self.max_window = 0
        self.deleted = 0
        self.added = 0

    def edge_event(self, action: str, u: int, v: int,
                   window: tuple[int, ...]) -> None:
        self.endpoints.add(u)
        self.endpoints.add(v)
        if window:
            self.windows.update(window)
            if len(window) > self.max_window:
                self.max_window = len(window)
        if action == "deleted":
            self.deleted += 1
        else:
            self.added += 1


# ----------------------------------------------------------------------
# engine

_ADDING_KINDS = frozenset((TETRAGRAM, HEXAGRAM, PENTAGRAM, DECAGRAM))

AuditHook = Callable[[PlaneGraph, tuple[int, ...], ConstraintCycle | None], None]


class Solver:
    """Owns and consumes one PlaneGraph; run() empties it.

    ``audit`` is called at every loop head with the graph, a queue
    snapshot and the constraint; tests use it to replay the worklist
    invariant against the slow oracle.  ``validate`` turns on full
    structural checks after every reduction (tests only).
    """

    def __init__(self, g: PlaneGraph,
                 constraint: ConstraintCycle | None = None,
                 precoloring: dict[int, int] | None = None,
                 audit: AuditHook | None = None,
                 validate_steps: bool = False) -> None:
        self.graph = g
        self.constraint = constraint
        self.phi = dict(precoloring) if precoloring else {}
        self.audit = audit
        self.validate_steps = validate_steps
        self.stats = SolverStats()
        self.records: list[ReductionRecord] = []

    def run(self) -> dict[int, int]:
        g = self.graph
        C = self.constraint
        stats = self.stats
        queue: deque[int] = deque(
            v for v in g.vertex_ids() if g.v_deg[v] <= 3)
        stats.insertions += len(queue)
        in_queue = [False] * len(g.v_alive)
        for v in queue:
            in_queue[v] = True
        target = len(C) if C is not None else 0
        deg = g.v_deg
        alive = g.v_alive

        if self.audit:
            self.audit(g, tuple(queue), C)
        while g.n_alive > target:
            if not queue:
                raise ExhaustedQueueNonempty(g.n_alive)
            v = queue.popleft()
            in_queue[v] = False
            stats.pops += 1
            if not alive[v]:
                continue
            m = find_secure_with_pivot(g, v, C)
            if m is None:
                continue
            # Pre-state endpoint closeness is needed only when edges get
            # *added*: for a deletion the edge-absent side of the
            # closeness rule is the post state, which the second pass
            # below covers.  Monograms and octagrams only delete.
            if m.kind in _ADDING_KINDS:
                dirty = close_set(g, event_endpoints(g, m), 3)
            else:
                dirty = set()
            sink = _EventSink()
            record = reduce(g, m, C, sink)
            self.records.append(record)
            stats.reductions[m.kind] += 1
            stats.vertices_removed += record.vertices_removed
            if sink.max_window > stats.max_edge_close:
                stats.max_edge_close = sink.max_window
            if record.edges_deleted > stats.max_edges_deleted:
                stats.max_edges_deleted = record.edges_deleted
            if record.edges_added > stats.max_edges_added:
                stats.max_edges_added = record.edges_added
            if C is not None:
                for survivor, absorbed in record.identifications:
                    if absorbed in C.members:
                        C.replace(absorbed, survivor)
                        self.phi[survivor] = self.phi.pop(absorbed)
            dirty |= close_set(g, (w for w in sink.endpoints if alive[w]), 3)
            dirty |= sink.windows
            for w in sorted(dirty):
                if alive[w] and deg[w] <= 3 and not in_queue[w]:
                    in_queue[w] = True
                    queue.append(w)
                    stats.insertions += 1
            if self.validate_steps:
                self._validate_step()
            if self.audit:
                self.audit(g, tuple(queue), C)

        if C is not None:
            leftover = set(g.vertex_ids())
            assert leftover == C.members, (leftover, C.members)
            base = {v: self.phi[v] for v in C.members}
        else:
            base = {}
        stats.work = g.work
        return unwind(self.records, base)

    def run_statistics(self) -> SolverStats:
        return self.stats

    def _validate_step(self) -> None:
        validate(self.graph)
        if not is_triangle_free(SimpleGraph.from_plane_graph(self.graph)):
            raise TriangleFound("reduction produced a triangle")


def three_color(g: PlaneGraph, **kwargs) -> dict[int, int]:
    """Proper 3-coloring of a triangle-free plane graph; consumes g."""
    return Solver(g, **kwargs).run()


def constraint_from_cycle(g: PlaneGraph, cycle: Iterable[int]) -> ConstraintCycle:
    """Check that ``cycle`` is a facial cycle of length 3..5 in g."""
    cyc = tuple(cycle)
    k = len(cyc)
    if not 3 <= k <= 5 or len(set(cyc)) != k:
        raise NotAFacialCycle(cyc)
    for v in cyc:
        if not (0 <= v < len(g.v_alive) and g.v_alive[v]):
            raise NotAFacialCycle(cyc)
    d01 = None
    for d in g.darts_at(cyc[0]):
        if g.head(d) == cyc[1]:
            d01 = d
            break
    if d01 is None:
        raise NotAFacialCycle(cyc)
    expect_fwd = cyc
    expect_rev = (cyc[1], cyc[0]) + tuple(reversed(cyc[2:]))
    for d, expect in ((d01, expect_fwd), (g.d_twin[d01], expect_rev)):
        walk, closed = g.walk_face(d, k + 1)
        if closed and tuple(g.d_origin[e] for e in walk) == expect:
            return ConstraintCycle(cyc)
    raise NotAFacialCycle(cyc)


def precolored_solver(g: PlaneGraph, cycle: Iterable[int],
                      phi: dict[int, int], **kwargs) -> Solver:
    """Validate cycle and phi, returning a ready Solver."""
    C = constraint_from_cycle(g, cycle)
    if set(phi) != C.members:
        raise ImproperPrecoloring("precoloring domain is not V(C)")
    if any(phi[v] not in (0, 1, 2) for v in C.order):
        raise ImproperPrecoloring("colors must be in {0,1,2}")
    k = len(C.order)
    for i in range(k):
        if phi[C.order[i]] == phi[C.order[(i + 1) % k]]:
            raise ImproperPrecoloring("adjacent cycle vertices share a color")
    return Solver(g, constraint=C, precoloring=phi, **kwargs)


def three_color_precolored(g: PlaneGraph, cycle: Iterable[int],
                           phi: dict[int, int], **kwargs) -> dict[int, int]:
    """Extend a proper 3-coloring of a short facial cycle to all of g.

    ``cycle`` must be a facial cycle of length at most 5 and ``phi`` a
    proper coloring of exactly its vertices; the output agrees with phi
    there.  Consumes g.
    """
    return precolored_solver(g, cycle, phi, **kwargs).run()
