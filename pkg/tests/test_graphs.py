"""Graph type, constructions, factorization, and edge coloring."""

import pytest

from alontarsi import (
    Graph,
    SizeGuardExceeded,
    canonical_key,
    chromatic_index_class,
    class2_augment,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_double,
    edge_coloring,
    line_graph,
    named_graph,
    one_factorization,
    parse_edge_list_text,
    path_graph,
    petersen_graph,
    regular_embed_class1,
    star_graph,
    subdivision_graph,
    to_dot,
    to_edge_list_text,
    total_graph,
)
from alontarsi.graphs import round_robin_factorization


class TestGraphType:
    def test_canonical_edge_order(self):
        g = Graph(4, [(3, 1), (0, 2), (1, 0)])
        assert g.edges == ((0, 1), (0, 2), (1, 3))

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])

    def test_rejects_duplicate(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_degrees_and_components(self):
        g = Graph(5, [(0, 1), (1, 2), (3, 4)])
        assert g.degrees() == (1, 2, 1, 1, 1)
        assert g.max_degree() == 2
        assert g.components() == [[0, 1, 2], [3, 4]]
        assert not g.is_connected()

    def test_induced(self):
        g = complete_graph(4)
        sub, remap = g.induced([1, 3])
        assert sub.n == 2 and sub.edges == ((0, 1),)
        assert remap == {1: 0, 3: 1}


class TestLineGraph:
    def test_triangle_self_dual(self):
        lg, mapping = line_graph(complete_graph(3))
        assert canonical_key(lg) == canonical_key(complete_graph(3))
        assert sorted(mapping.values()) == [0, 1, 2]

    def test_path3_gives_single_edge(self):
        lg, _ = line_graph(path_graph(3))
        assert (lg.n, lg.m) == (2, 1)

    def test_k4_gives_octahedron(self):
        lg, mapping = line_graph(complete_graph(4))
        assert (lg.n, lg.m) == (6, 12)
        assert set(lg.degrees()) == {4}
        # independent oracle: adjacency from shared endpoints
        edges = complete_graph(4).edges
        expect = set()
        for i in range(6):
            for j in range(i + 1, 6):
                if set(edges[i]) & set(edges[j]):
                    expect.add((i, j))
        assert set(lg.edges) == expect

    def test_degree_identity(self):
        for g in [complete_graph(4), path_graph(5), star_graph(4), petersen_graph()]:
            lg, mapping = line_graph(g)
            for (u, v), i in mapping.items():
                assert lg.degree(i) == g.degree(u) + g.degree(v) - 2

    def test_empty_graph(self):
        lg, mapping = line_graph(Graph(3, []))
        assert lg.n == 0 and mapping == {}


class TestSubdivision:
    def test_k2_gives_p3(self):
        s, _ = subdivision_graph(complete_graph(2))
        assert canonical_key(s) == canonical_key(path_graph(3))

    def test_c3_gives_c6(self):
        s, _ = subdivision_graph(cycle_graph(3))
        assert canonical_key(s) == canonical_key(cycle_graph(6))

    def test_k4_counts(self):
        s, roles = subdivision_graph(complete_graph(4))
        assert (s.n, s.m) == (10, 12)
        assert len(roles.originals()) == 4 and len(roles.edge_vertices()) == 6

    @pytest.mark.parametrize("g", [complete_graph(4), star_graph(3), cycle_graph(5)])
    def test_bipartite_and_edge_vertex_degree(self, g):
        s, roles = subdivision_graph(g)
        for w in roles.edge_vertices():
            assert s.degree(w) == 2
        # bipartite: 2-color by BFS
        color = {}
        for comp in s.components():
            color[comp[0]] = 0
            stack = [comp[0]]
            while stack:
                x = stack.pop()
                for y in s.neighbors(x):
                    if y not in color:
                        color[y] = 1 - color[x]
                        stack.append(y)
        assert all(color[u] != color[v] for u, v in s.edges)


class TestTotalGraph:
    def test_k2_gives_triangle(self):
        t, _ = total_graph(complete_graph(2))
        assert canonical_key(t) == canonical_key(complete_graph(3))

    def test_c3_is_4_regular_on_6(self):
        t, _ = total_graph(cycle_graph(3))
        assert (t.n, t.m) == (6, 12)
        assert set(t.degrees()) == {4}

    def test_c4_counts_and_degree_formulas(self):
        g = cycle_graph(4)
        t, roles = total_graph(g)
        assert (t.n, t.m) == (8, 16)
        for v in roles.originals():
            assert t.degree(v) == 2 * g.degree(v)
        for w, (u, v) in zip(roles.edge_vertices(), g.edges):
            assert t.degree(w) == g.degree(u) + g.degree(v)

    @pytest.mark.parametrize("g", [cycle_graph(4), complete_graph(3), path_graph(4)])
    def test_total_is_square_of_subdivision(self, g):
        s, _ = subdivision_graph(g)
        t, _ = total_graph(g)
        # oracle: vertices at distance <= 2 in S(G) become adjacent
        adj = s.adjacency()
        expect = set()
        for u in range(s.n):
            reach = set(adj[u])
            for x in adj[u]:
                reach |= adj[x]
            reach.discard(u)
            expect.update((min(u, w), max(u, w)) for w in reach)
        assert set(t.edges) == expect

    def test_half_squares(self):
        g = complete_graph(4)
        t, roles = total_graph(g)
        half_orig, _ = t.induced(roles.originals())
        assert half_orig.edges == g.edges
        half_edge, _ = t.induced(roles.edge_vertices())
        lg, _ = line_graph(g)
        assert half_edge.edges == lg.edges


class TestDisjointDouble:
    def test_k2(self):
        d = disjoint_double(complete_graph(2))
        assert canonical_key(d) == canonical_key(named_graph("2K2"))

    def test_c3(self):
        d = disjoint_double(cycle_graph(3))
        assert d.n == 6
        comps = d.components()
        assert len(comps) == 2
        for comp in comps:
            sub, _ = d.induced(comp)
            assert canonical_key(sub) == canonical_key(cycle_graph(3))

    def test_doubles_n_2_mod_4_to_multiple_of_4(self):
        g = cycle_graph(6)
        assert g.n % 4 == 2
        assert disjoint_double(g).n % 4 == 0

    def test_second_copy_offset(self):
        g = path_graph(3)
        d = disjoint_double(g)
        assert (3, 4) in d.edges and (4, 5) in d.edges


class TestRoundRobin:
    @pytest.mark.parametrize("c", [2, 4, 6, 8])
    def test_partitions_all_pairs(self, c):
        factors = round_robin_factorization(c)
        assert len(factors) == c - 1
        seen = set()
        for factor in factors:
            touched = set()
            for a, b in factor:
                assert a not in touched and b not in touched
                touched.update((a, b))
                seen.add((a, b))
            assert touched == set(range(c))
        assert len(seen) == c * (c - 1) // 2

    def test_odd_rejected(self):
        with pytest.raises(ValueError):
            round_robin_factorization(3)


class TestRegularEmbed:
    def test_already_regular_adds_nothing(self):
        g = cycle_graph(4)
        host, emb = regular_embed_class1(g)
        assert host.n == 2 * g.n and host.m == 2 * g.m
        assert set(host.degrees()) == {2}

    def test_p3_becomes_c6(self):
        host, _ = regular_embed_class1(path_graph(3))
        assert set(host.degrees()) == {2}
        assert canonical_key(host) == canonical_key(cycle_graph(6))

    def test_star_k13(self):
        host, emb = regular_embed_class1(star_graph(3))
        assert host.n == 16
        assert set(host.degrees()) == {3}

    @pytest.mark.parametrize("g", [path_graph(4), star_graph(4), complete_graph(4)])
    def test_base_is_induced_subgraph(self, g):
        host, emb = regular_embed_class1(g)
        copy0, _ = host.induced([emb[v] for v in range(g.n)])
        assert copy0.edges == g.edges
        assert set(host.degrees()) == {g.max_degree()}

    def test_rejects_class2(self):
        with pytest.raises(ValueError):
            regular_embed_class1(cycle_graph(3))

    def test_rejects_isolated_vertex(self):
        with pytest.raises(ValueError):
            regular_embed_class1(Graph(3, [(0, 1)]))


class TestClass2Augment:
    def test_c3_becomes_paw(self):
        out, attach = class2_augment(cycle_graph(3))
        assert canonical_key(out) == canonical_key(named_graph("paw"))
        assert out.max_degree() == 3
        assert edge_coloring(out, 3) is not None

    def test_c5(self):
        out, _ = class2_augment(cycle_graph(5))
        assert out.max_degree() == 3
        assert chromatic_index_class(out).class_number == 1

    def test_petersen(self):
        out, _ = class2_augment(petersen_graph())
        assert out.m == 16 and out.max_degree() == 4
        assert chromatic_index_class(out).class_number == 1

    def test_rejects_class1(self):
        with pytest.raises(ValueError):
            class2_augment(complete_graph(4))


class TestOneFactorization:
    def test_k4_exact(self):
        f = one_factorization(complete_graph(4))
        assert f.factors == (
            ((0, 1), (2, 3)),
            ((0, 2), (1, 3)),
            ((0, 3), (1, 2)),
        )
        assert f.validate(complete_graph(4))

    def test_k4_has_exactly_one_factorization(self):
        # oracle: enumerate unordered partitions of E(K4) into perfect matchings
        g = complete_graph(4)
        pms = [
            frozenset(p)
            for p in [
                [(0, 1), (2, 3)],
                [(0, 2), (1, 3)],
                [(0, 3), (1, 2)],
            ]
        ]
        from itertools import permutations

        partitions = set()
        for order in permutations(pms):
            union = set()
            for p in order:
                union |= p
            if union == set(g.edges):
                partitions.add(frozenset(order))
        assert len(partitions) == 1

    def test_k33(self):
        g = complete_bipartite(3, 3)
        f = one_factorization(g)
        assert len(f.factors) == 3
        assert f.validate(g)

    def test_c5_odd_order(self):
        assert one_factorization(cycle_graph(5)) is None

    def test_irregular(self):
        assert one_factorization(path_graph(4)) is None

    def test_c6(self):
        f = one_factorization(cycle_graph(6))
        assert f is not None and f.validate(cycle_graph(6))

    def test_petersen_negative(self):
        assert one_factorization(petersen_graph()) is None

    def test_guard(self):
        with pytest.raises(SizeGuardExceeded):
            one_factorization(complete_graph(14))


class TestChromaticIndex:
    def test_k4(self):
        res = chromatic_index_class(complete_graph(4))
        assert (res.class_number, res.chromatic_index) == (1, 3)
        # witness is a proper coloring
        g = complete_graph(4)
        for i, (u, v) in enumerate(g.edges):
            for j, (x, y) in enumerate(g.edges):
                if i < j and {u, v} & {x, y}:
                    assert res.coloring[i] != res.coloring[j]

    def test_c5(self):
        res = chromatic_index_class(cycle_graph(5))
        assert (res.class_number, res.chromatic_index) == (2, 3)

    def test_k33_bipartite(self):
        res = chromatic_index_class(complete_bipartite(3, 3))
        assert (res.class_number, res.chromatic_index) == (1, 3)

    def test_k5_class2(self):
        res = chromatic_index_class(complete_graph(5))
        assert (res.class_number, res.chromatic_index) == (2, 5)

    def test_petersen_class2(self):
        res = chromatic_index_class(petersen_graph())
        assert (res.class_number, res.chromatic_index) == (2, 4)

    def test_edgeless(self):
        res = chromatic_index_class(Graph(3, []))
        assert (res.class_number, res.chromatic_index) == (1, 0)

    def test_guard(self):
        with pytest.raises(SizeGuardExceeded):
            chromatic_index_class(complete_graph(8))


class TestNamedGraphs:
    @pytest.mark.parametrize(
        "name,n,m",
        [
            ("K4", 4, 6),
            ("C5", 5, 5),
            ("P4", 4, 3),
            ("K1,3", 4, 3),
            ("K2,3", 5, 6),
            ("2K2", 4, 2),
            ("petersen", 10, 15),
            ("paw", 4, 4),
            ("diamond", 4, 5),
            ("bull", 5, 5),
        ],
    )
    def test_registry(self, name, n, m):
        g = named_graph(name)
        assert (g.n, g.m) == (n, m)

    def test_unknown(self):
        with pytest.raises(ValueError):
            named_graph("Q3?")


class TestSerialization:
    def test_round_trip(self):
        g = named_graph("petersen")
        assert parse_edge_list_text(to_edge_list_text(g)) == g

    def test_text_format(self):
        assert to_edge_list_text(path_graph(3)) == "3 2\n0 1\n1 2\n"

    @pytest.mark.parametrize(
        "text", ["", "3\n", "2 1\n", "2 1\n0 1\n1 0\n", "2 1\n0 2\n", "1 1\n0 0\n"]
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(ValueError):
            parse_edge_list_text(text)

    def test_dot(self):
        dot = to_dot(path_graph(3))
        assert dot.startswith("graph G {") and "0 -- 1;" in dot

    def test_role_map_json(self):
        _, roles = subdivision_graph(complete_graph(2))
        obj = roles.to_json_obj()
        assert obj[0] == {"vertex": 0, "role": "original", "source": 0}
        assert obj[2] == {"vertex": 2, "role": "edge", "source": [0, 1]}
