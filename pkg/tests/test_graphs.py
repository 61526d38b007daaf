"""Graph construction, families, rewiring, and graph6 interchange."""

import random

import pytest

from domopt.graphs import (
    Graph,
    Graph6ParseError,
    GraphError,
    bits_of,
    boundary_odd,
    complete_graph,
    complete_minus_matching,
    complete_minus_path,
    complete_minus_template,
    cycle_graph,
    disjoint_union,
    empty_graph,
    family,
    from_edge_list,
    join,
    matching_union,
    min_degree_closed_neighborhood_count,
    parse_edge_list,
    parse_graph6,
    path_graph,
    rewire_isolated,
    star_graph,
    star_forest,
    to_graph6,
)


def random_graph(n, rng, p=0.5):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


# -- construction -----------------------------------------------------------


def test_from_edge_list_k2():
    g = from_edge_list(2, [(0, 1)])
    assert g.n == 2 and g.m == 1


def test_from_edge_list_path():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert g.degrees() == [1, 2, 2, 1]


def test_from_edge_list_rejects_loop():
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 0)])


def test_from_edge_list_rejects_duplicate():
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 1), (1, 0)])


def test_from_edge_list_rejects_out_of_range():
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 3)])


def test_constructor_rejects_asymmetric_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))


def test_constructor_rejects_diagonal():
    with pytest.raises(GraphError):
        Graph(1, (0b1,))


def test_edge_count_always_integral():
    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng.randrange(0, 9), rng)
        assert sum(g.degrees()) == 2 * g.m


def test_parse_edge_list_text():
    g = parse_edge_list("4; 0 1; 1 2; 2 3")
    assert g.degrees() == [1, 2, 2, 1]
    with pytest.raises(GraphError):
        parse_edge_list("not a number; 0 1")


# -- closed neighborhoods ------------------------------------------------------


def test_closed_neighborhood_examples():
    assert complete_graph(3).closed_neighborhood(0) == 0b111
    p4 = path_graph(4)
    assert p4.closed_neighborhood(0) == 0b0011
    two_k2 = matching_union(2, 0)
    assert two_k2.closed_neighborhood(2) == 0b1100
    with pytest.raises(GraphError):
        p4.closed_neighborhood(4)


def _distinct_min_degree_neighborhoods(g):
    # independent set-based oracle
    delta = min(g.degrees())
    seen = set()
    for v in range(g.n):
        if g.degree(v) == delta:
            seen.add(frozenset(bits_of(g.closed[v])))
    return len(seen)


def test_min_degree_closed_neighborhood_count_examples():
    assert min_degree_closed_neighborhood_count(path_graph(4)) == 2
    assert min_degree_closed_neighborhood_count(star_graph(4)) == 3
    assert min_degree_closed_neighborhood_count(matching_union(3, 0)) == 3
    with pytest.raises(GraphError):
        min_degree_closed_neighborhood_count(empty_graph(0))


def test_min_degree_closed_neighborhood_count_oracle():
    rng = random.Random(11)
    for _ in range(100):
        g = random_graph(rng.randrange(1, 9), rng)
        assert min_degree_closed_neighborhood_count(g) == _distinct_min_degree_neighborhoods(g)


# -- families ---------------------------------------------------------------------


def test_family_h_k():
    g = family("complete_minus_matching", n=6, k=2)
    assert g.m == 13
    assert len(g.universal_vertices()) == 2


def test_family_h_k_degree_split():
    for n in range(4, 9):
        for k in range(0, n // 2 + 1):
            g = complete_minus_matching(n, k)
            degs = g.degrees()
            assert degs.count(n - 1) == n - 2 * k
            assert degs.count(n - 2) == 2 * k


def test_family_matching_union():
    g = matching_union(2, 1)
    assert g.n == 5 and g.m == 2 and len(g.isolated_vertices()) == 1


def test_family_complete_minus_c4():
    g = complete_minus_template(6, "C4")
    assert sorted(g.degrees(), reverse=True) == [5, 5, 3, 3, 3, 3]


def test_family_boundary_odd():
    g = boundary_odd(3)
    assert g.n == 5 and g.m == 3
    assert sorted(g.degrees()) == [1, 1, 1, 1, 2]


def test_family_star_forest():
    g = star_forest(3, 9)
    # (r-1)K_2 + K_{1,n-2r+1}: 2 edges in the matching part, 4 in the star
    assert g.n == 9 and g.m == 9 - 3
    assert max(g.degrees()) == 9 - 2 * 3 + 1


def test_family_complete_minus_path():
    g = complete_minus_path(7, 3)
    assert g.m == 21 - 3
    assert len(g.universal_vertices()) == 7 - 4


def test_family_infeasible_parameters():
    with pytest.raises(GraphError):
        complete_minus_matching(5, 3)
    with pytest.raises(GraphError):
        family("cycle", n=2)
    with pytest.raises(GraphError):
        family("no-such-family", n=4)
    with pytest.raises(GraphError):
        star_forest(4, 7)


def test_cycle_and_star():
    assert cycle_graph(4).degrees() == [2, 2, 2, 2]
    assert star_graph(4).degrees() == [3, 1, 1, 1]


# -- union / join --------------------------------------------------------------------


def test_disjoint_union_basic():
    g = disjoint_union(complete_graph(2), complete_graph(2))
    assert g.n == 4 and g.m == 2 and len(g.components()) == 2
    h = disjoint_union(empty_graph(1), empty_graph(1))
    assert h.n == 2 and h.m == 0
    k = disjoint_union(path_graph(3), complete_graph(2))
    assert k.n == 5 and k.m == 3 and len(k.components()) == 2


def test_join_k1_with_2k2():
    g = join(complete_graph(1), matching_union(2, 0))
    assert g.n == 5 and g.m == 6
    assert len(g.universal_vertices()) == 1


def test_join_identity_and_k3():
    g = matching_union(2, 1)
    assert join(complete_graph(0), g) == g
    assert join(complete_graph(2), complete_graph(1)) == complete_graph(3)


def test_join_edge_count():
    rng = random.Random(3)
    for _ in range(25):
        g = random_graph(rng.randrange(0, 6), rng)
        h = random_graph(rng.randrange(0, 6), rng)
        assert join(g, h).m == g.m + h.m + g.n * h.n


def test_union_order_cap():
    with pytest.raises(GraphError):
        disjoint_union(empty_graph(40), empty_graph(40))


# -- rewiring -----------------------------------------------------------------------


def test_rewire_smallest_instance():
    g = disjoint_union(complete_graph(2), empty_graph(1))
    h = rewire_isolated(g, (0, 1), 2)
    assert h.n == 3 and h.m == 1
    assert h.has_edge(0, 2) and not h.has_edge(0, 1)


def test_rewire_p3_plus_isolate_gives_2k2():
    g = disjoint_union(path_graph(3), empty_graph(1))
    # moving the leaf-center edge (0,1) to (0,3): leaf 0 keeps degree
    h = rewire_isolated(g, (0, 1), 3)
    from domopt.enumeration import canonical_form

    assert canonical_form(h) == canonical_form(matching_union(2, 0))


def test_rewire_rejects_bad_inputs():
    g = disjoint_union(path_graph(3), empty_graph(1))
    with pytest.raises(GraphError):
        rewire_isolated(g, (0, 2), 3)  # not an edge
    with pytest.raises(GraphError):
        rewire_isolated(g, (0, 1), 2)  # degree-1 vertex, not isolated


def test_rewire_isolated_count_invariant():
    rng = random.Random(19)
    tried = 0
    while tried < 60:
        g = random_graph(rng.randrange(3, 8), rng, p=0.35)
        isolates = g.isolated_vertices()
        if not isolates or g.m == 0:
            continue
        tried += 1
        u, v = g.edges()[rng.randrange(g.m)]
        if rng.random() < 0.5:
            u, v = v, u
        x = isolates[rng.randrange(len(isolates))]
        h = rewire_isolated(g, (u, v), x)
        assert h.n == g.n and h.m == g.m
        expected = len(isolates) - 1 + (1 if g.degree(v) == 1 else 0)
        assert len(h.isolated_vertices()) == expected


# -- graph6 -----------------------------------------------------------------------


def test_graph6_decode_k2():
    g = parse_graph6("A_")
    assert g.n == 2 and g.m == 1


def test_graph6_round_trip_random():
    rng = random.Random(23)
    for _ in range(200):
        g = random_graph(rng.randrange(0, 11), rng, p=rng.random())
        assert parse_graph6(to_graph6(g)) == g


def test_graph6_string_round_trip():
    rng = random.Random(29)
    for _ in range(100):
        s = to_graph6(random_graph(rng.randrange(0, 11), rng))
        assert to_graph6(parse_graph6(s)) == s


def test_graph6_large_order_round_trip():
    g = complete_minus_matching(62, 31)
    assert parse_graph6(to_graph6(g)) == g
    with pytest.raises(GraphError):
        empty_graph(63)


def test_graph6_rejects_malformed():
    with pytest.raises(Graph6ParseError):
        parse_graph6("garbage\x01")
    with pytest.raises(Graph6ParseError):
        parse_graph6("")
    # truncated body for n = 5
    with pytest.raises(Graph6ParseError):
        parse_graph6("D")
    # nonzero padding bits: n = 2 needs one bit, low 5 bits must be 0
    with pytest.raises(Graph6ParseError):
        parse_graph6("A" + chr(63 + 0b000001))
    # header says extended format
    with pytest.raises(Graph6ParseError):
        parse_graph6("~??")


def test_graph6_header_prefix_stripped():
    assert parse_graph6(">>graph6<<A_").m == 1


# -- misc helpers ------------------------------------------------------------------


def test_complement_involution():
    rng = random.Random(31)
    for _ in range(30):
        g = random_graph(rng.randrange(0, 9), rng)
        assert g.complement().complement() == g


def test_induced_subgraph():
    g = path_graph(5)
    h = g.induced_subgraph([0, 1, 4])
    assert h.n == 3 and h.m == 1 and h.has_edge(0, 1)


def test_components_masks():
    g = matching_union(2, 1)
    assert g.components() == [0b00011, 0b01100, 0b10000]
