import pytest

from hyperorient import (
    IncidenceDigraph,
    Orientation,
    PreconditionError,
    VertexSet,
    bf_lambda,
    bf_min_separator,
    hyperarc_connectivity,
    hypergraph,
    incidence_digraph,
    max_flow_min_cut,
    min_in_separator,
    min_out_separator,
)
from corpus import random_instances, vs


def three_cycle():
    h = hypergraph(3, [(0, 1), (1, 2), (0, 2)])
    return h, Orientation(h, (1, 2, 0))


class TestMaxFlow:
    def test_parallel_arcs_as_capacity(self):
        g = IncidenceDigraph(2, ((0, 1, 2),))
        assert max_flow_min_cut(g, 0, 1) == (2, frozenset({0}))

    def test_unit_path(self):
        g = IncidenceDigraph(3, ((0, 1, 1), (1, 2, 1)))
        assert max_flow_min_cut(g, 0, 2) == (1, frozenset({0}))

    def test_disconnected_source_component(self):
        g = IncidenceDigraph(4, ((0, 1, 3), (2, 3, 1)))
        value, side = max_flow_min_cut(g, 0, 3)
        assert value == 0 and side == frozenset({0, 1})

    def test_limit_caps_work(self):
        g = IncidenceDigraph(2, ((0, 1, 5),))
        assert max_flow_min_cut(g, 0, 1, limit=3) == (3, None)
        assert max_flow_min_cut(g, 0, 1, limit=9) == (5, frozenset({0}))

    def test_source_equals_sink_rejected(self):
        g = IncidenceDigraph(2, ((0, 1, 1),))
        with pytest.raises(PreconditionError):
            max_flow_min_cut(g, 1, 1)


class TestIncidenceDigraph:
    def test_structure(self):
        h = hypergraph(4, [(0, 1, 2), (2, 3)])
        o = Orientation(h, (2, 3))
        g = incidence_digraph(h, o)
        assert g.n_nodes == h.n + h.m
        for e in range(h.m):
            w = h.n + e
            out = [(u, v, c) for (u, v, c) in g.arcs if u == w]
            assert out == [(w, o.heads[e], 1)]
            tails = [(u, v, c) for (u, v, c) in g.arcs if v == w]
            assert all(c == h.m + 1 for (_, _, c) in tails)
            assert {u for (u, _, _) in tails} == set(o.tail(e))

    def test_reverse_flips_arcs(self):
        h = hypergraph(3, [(0, 1, 2)])
        o = Orientation(h, (2,))
        fwd = set(incidence_digraph(h, o).arcs)
        rev = set(incidence_digraph(h, o, reverse=True).arcs)
        assert rev == {(v, u, c) for (u, v, c) in fwd}


class TestSeparators:
    def test_three_cycle_out(self):
        h, o = three_cycle()
        res = min_out_separator(h, o, 0, vs(3, [1]))
        assert res.value == 1 and res.separator == vs(3, [0])

    def test_three_cycle_in(self):
        h, o = three_cycle()
        res = min_in_separator(h, o, 1, vs(3, [0]))
        assert res.value == 1 and res.separator == vs(3, [1])

    def test_single_hyperarc(self):
        h = hypergraph(3, [(0, 1, 2)])
        o = Orientation(h, (2,))
        out = min_out_separator(h, o, 0, vs(3, [2]))
        assert out.value == 1 and out.separator == vs(3, [0])
        inn = min_in_separator(h, o, 2, vs(3, [0]))
        assert inn.value == 1 and inn.separator == vs(3, [2])

    def test_source_without_outgoing_incidence(self):
        # 1 -> 0 only: nothing leaves {0}, the reachable-closed side is {0}
        h = hypergraph(3, [(0, 1), (1, 2)])
        o = Orientation(h, (0, 2))
        res = min_out_separator(h, o, 0, vs(3, [2]))
        assert res.value == 0 and res.separator == vs(3, [0])

    def test_preconditions(self):
        h, o = three_cycle()
        with pytest.raises(PreconditionError):
            min_out_separator(h, o, 0, vs(3, []))
        with pytest.raises(PreconditionError):
            min_out_separator(h, o, 0, vs(3, [0, 1]))

    def test_in_out_duality(self):
        from hyperorient import out_degree

        for h, o in random_instances(404, 20, n_max=5, m_max=5):
            for t in range(1, h.n):
                res = min_in_separator(h, o, t, vs(h.n, [0]))
                best = min(
                    out_degree(h, o, VertexSet.from_mask(h.n, m).complement())
                    for m in range(1, (1 << h.n) - 1)
                    if m >> t & 1 and not m & 1
                )
                assert res.value == best

    def test_matches_brute_force_with_minimal_set(self):
        for h, o in random_instances(11, 60, n_max=6, m_max=6):
            for s in range(h.n):
                for t in range(h.n):
                    if s == t:
                        continue
                    sinks = vs(h.n, [t])
                    for side, fn in (("out", min_out_separator), ("in", min_in_separator)):
                        res = fn(h, o, s, sinks)
                        value, minimizers, minimal = bf_min_separator(h, o, s, sinks, side)
                        assert res.value == value
                        assert res.separator == minimal
                        assert all(res.separator <= x for x in minimizers)

    def test_merged_sinks_never_contain_a_sink(self):
        for h, o in random_instances(88, 40, n_max=6, m_max=6):
            if h.n < 3:
                continue
            sinks = vs(h.n, [1, 2])
            res = min_out_separator(h, o, 0, sinks)
            assert not res.separator.mask & sinks.mask
            value, _, minimal = bf_min_separator(h, o, 0, sinks, "out")
            assert (res.value, res.separator) == (value, minimal)


class TestConnectivity:
    def test_three_cycle(self):
        h, o = three_cycle()
        assert hyperarc_connectivity(h, o) == 1

    def test_zero_in_degree_vertex(self):
        h = hypergraph(3, [(0, 1), (1, 2)])
        o = Orientation(h, (0, 1))
        assert hyperarc_connectivity(h, o) == 0

    def test_doubled_cycle(self):
        h = hypergraph(3, [(0, 1), (1, 2), (0, 2), (0, 1), (1, 2), (0, 2)])
        o = Orientation(h, (1, 2, 0, 1, 2, 0))
        assert hyperarc_connectivity(h, o) == 2

    def test_matches_brute_force(self):
        for h, o in random_instances(13, 80, n_max=6, m_max=7):
            assert hyperarc_connectivity(h, o) == bf_lambda(h, o)
