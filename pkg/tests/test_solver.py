import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tricolor.embedding import build
from tricolor.generators import augmented, quad
from tricolor.instances import (
    big_hub_graph, cube_graph, cycle_graph, dodecahedron_graph, grid_graph,
    graph_from_faces, hexagram_flower, k23_graph, pentagram_flower,
)
from tricolor.oracle import (
    SimpleGraph, all_secure_multigrams_slow, close_to_edge_slow,
    closeness_slow, facial_cycles, is_proper,
)
from tricolor.solver import (
    ExhaustedQueueNonempty, ImproperPrecoloring, NotAFacialCycle, Solver,
    TriangleFound, close_set, dirty_set, edge_close_set, three_color,
    three_color_precolored,
)

from conftest import small_corpus

#: frozen regression constant for queue insertions per vertex on grids
#: (measured 1.000 on pristine grids; +10% tolerance)
GRID_INSERTIONS_PER_VERTEX = 1.1


class TestThreeColor:
    def test_empty_graph(self):
        assert three_color(build([])) == {}

    def test_five_cycle_needs_three_colors(self):
        g = cycle_graph(5)
        sg = SimpleGraph.from_plane_graph(g)
        col = three_color(g)
        assert is_proper(sg, col)
        assert len(set(col.values())) == 3

    @pytest.mark.parametrize("make", [
        lambda: grid_graph(5), cube_graph, dodecahedron_graph,
        pentagram_flower, hexagram_flower, big_hub_graph, k23_graph,
    ])
    def test_instances_proper(self, make):
        g = make()
        sg = SimpleGraph.from_plane_graph(g)
        col = three_color(g, validate_steps=True)
        assert is_proper(sg, col)
        assert set(col) == set(sg.adj)

    @given(st.integers(0, 200))
    @settings(max_examples=20, deadline=None)
    def test_random_instances_proper(self, seed):
        g = augmented(24, seed)
        sg = SimpleGraph.from_plane_graph(g)
        assert is_proper(sg, three_color(g))

    def test_triangle_input_exhausts_queue(self):
        # planar K4: every face is a triangle, no multigram ever fires
        k4 = graph_from_faces([(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)])
        with pytest.raises(ExhaustedQueueNonempty):
            three_color(k4)

    def test_triangle_found_in_debug(self):
        # C4 first (gets reduced), disjoint triangle detected by validation
        rot = [[1, 3], [2, 0], [3, 1], [0, 2], [5, 6], [6, 4], [4, 5]]
        g = build(rot)
        with pytest.raises(TriangleFound):
            three_color(g, validate_steps=True)


class TestPrecolored:
    def test_base_case_cycle_is_whole_graph(self):
        g = cycle_graph(5)
        phi = {0: 0, 1: 1, 2: 0, 3: 1, 4: 2}
        assert three_color_precolored(g, (0, 1, 2, 3, 4), phi) == phi

    def test_cube_face(self):
        g = cube_graph()
        sg = SimpleGraph.from_plane_graph(g)
        cyc = next(vs for vs, _ in facial_cycles(g) if len(vs) == 4)
        phi = dict(zip(cyc, (0, 1, 0, 1)))
        col = three_color_precolored(g, cyc, phi, validate_steps=True)
        assert is_proper(sg, col)
        assert all(col[v] == phi[v] for v in cyc)

    def test_improper_precoloring(self):
        g = cube_graph()
        cyc = next(vs for vs, _ in facial_cycles(g) if len(vs) == 4)
        with pytest.raises(ImproperPrecoloring):
            three_color_precolored(g, cyc, dict(zip(cyc, (0, 0, 1, 1))))
        with pytest.raises(ImproperPrecoloring):
            three_color_precolored(g, cyc, dict(zip(cyc, (0, 1, 0, 7))))
        with pytest.raises(ImproperPrecoloring):
            three_color_precolored(g, cyc, {cyc[0]: 0})

    def test_not_a_facial_cycle(self):
        g = cube_graph()
        sg = SimpleGraph.from_plane_graph(g)
        # an antipodal pair is never on a common face
        far = next((u, w) for u in sg.adj for w in sg.adj
                   if u != w and w not in sg.adj[u]
                   and not any({u, w} <= set(vs) for vs, _ in facial_cycles(g)))
        bogus = (far[0], far[1], next(iter(sg.adj[far[0]])))
        with pytest.raises(NotAFacialCycle):
            three_color_precolored(g, bogus, dict(zip(bogus, (0, 1, 2))))

    def test_tetragram_absorbing_cycle_vertex(self):
        # C vertices may be absorbed by a tetragram identification; the
        # output must still agree with phi on the original ids
        for name, g in small_corpus():
            sg = SimpleGraph.from_plane_graph(g)
            for cyc in [vs for vs, _ in facial_cycles(g) if len(vs) == 4][:2]:
                phi = dict(zip(cyc, (0, 1, 0, 1)))
                col = three_color_precolored(g.copy(), cyc, phi)
                assert is_proper(sg, col), name
                assert all(col[v] == phi[v] for v in cyc), name


class TestCloseness:
    def test_two_vertex_edge_deletion(self):
        g = build([[1], [0]])
        window = edge_close_set(g, 0)
        g.remove_edge(0)
        assert dirty_set(g, "deleted", 0, 1, window) == {0, 1}

    def test_edge_close_at_most_ten(self):
        for name, g in small_corpus():
            for u, w, d in g.edges():
                assert len(edge_close_set(g, d)) <= 10, name

    def test_edge_close_matches_slow(self):
        for make in (lambda: grid_graph(4), cube_graph, k23_graph,
                     lambda: cycle_graph(9)):
            g = make()
            for u, w, d in g.edges():
                fast = edge_close_set(g, d)
                slow = {z for z in g.vertex_ids()
                        if close_to_edge_slow(g, d, z)}
                assert fast == slow

    def test_close_set_matches_slow_on_grid(self):
        g = grid_graph(5)
        for u in (0, 6, 12):
            fast = close_set(g, [u])
            slow = {w for w in g.vertex_ids() if closeness_slow(g, u, w)}
            assert fast == slow

    def test_close_set_covers_slow_everywhere(self):
        for name, g in small_corpus():
            if g.n_alive > 30:
                continue
            for u in list(g.vertex_ids())[:6]:
                fast = close_set(g, [u])
                slow = {w for w in g.vertex_ids() if closeness_slow(g, u, w)}
                assert slow <= fast, (name, u)

    def test_degree_filter(self):
        g = grid_graph(5)
        full = close_set(g, [12])
        filtered = close_set(g, [12], 3)
        assert filtered == {v for v in full if g.v_deg[v] <= 3}


class TestWorklistInvariant:
    def test_queue_contains_oracle_pivots(self):
        failures = []

        def audit(g, queue, C):
            missing = ({m.pivot for m in all_secure_multigrams_slow(g, C)}
                       - set(queue))
            if missing:
                failures.append(sorted(missing))

        for make in (lambda: cycle_graph(6), cube_graph, k23_graph,
                     pentagram_flower, lambda: quad(12, 3)):
            g = make()
            three_color(g, audit=audit)
        assert not failures


class TestStats:
    def test_empty(self):
        s = Solver(build([]))
        s.run()
        assert s.stats.pops == 0 and s.stats.insertions == 0

    def test_standalone_c4_starts_with_monogram(self):
        s = Solver(cycle_graph(4))
        s.run()
        assert s.stats.reductions["monogram"] >= 1

    def test_removed_equals_initial_n(self):
        for name, g in small_corpus():
            n0 = g.n_alive
            s = Solver(g)
            s.run()
            assert s.stats.vertices_removed == n0, name

    def test_grid_insertion_constant(self):
        for k in (10, 20, 40, 80):
            g = grid_graph(k)
            s = Solver(g)
            s.run()
            assert s.stats.insertions / k ** 2 <= GRID_INSERTIONS_PER_VERTEX

    def test_lemma5_bounds_tracked(self):
        g = dodecahedron_graph()
        s = Solver(g)
        s.run()
        assert 0 < s.stats.max_edges_deleted <= 126
        assert s.stats.max_edges_added <= 116
        assert 0 < s.stats.max_edge_close <= 10
