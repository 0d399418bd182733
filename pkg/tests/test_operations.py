import pytest
from hypothesis import given, settings

from dmp.graph import degree_sequence, from_edge_list, is_triangle_free
from dmp.constructions import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from dmp.operations import (
    add_edge,
    add_vertex,
    cartesian_product,
    contract_edge,
    delete_edge,
    delete_vertex,
    join,
    product_coords,
    product_index,
    subdivide_edge,
)
from dmp.solver import mp_exact
from dmp.bounds import RandomBipartite, random_graph

from strategies import graphs


def test_add_edge_completes_triangle():
    assert add_edge(path_graph(3), 0, 2) == complete_graph(3)


def test_add_edge_on_two_isolated_vertices():
    g = add_edge(from_edge_list(2, []), 0, 1)
    assert mp_exact(g).value == 2


def test_add_edge_rejects_existing_and_loop():
    g = path_graph(3)
    with pytest.raises(ValueError):
        add_edge(g, 0, 1)
    with pytest.raises(ValueError):
        add_edge(g, 1, 1)


def test_delete_edge_on_triangle():
    g = delete_edge(complete_graph(3), 0, 1)
    assert sorted(degree_sequence(g)) == [1, 1, 2]


def test_delete_last_edge():
    g = delete_edge(from_edge_list(2, [(0, 1)]), 0, 1)
    assert mp_exact(g).value == 1


def test_delete_edge_rejects_absent():
    with pytest.raises(ValueError):
        delete_edge(path_graph(3), 0, 2)


@given(graphs(min_n=2))
@settings(max_examples=50)
def test_add_then_delete_is_identity(g):
    non_edges = [
        (u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)
    ]
    if not non_edges:
        return
    u, v = non_edges[0]
    assert delete_edge(add_edge(g, u, v), u, v) == g


def test_subdivide_triangle_gives_c4():
    g = subdivide_edge(complete_graph(3), 0, 1)
    assert degree_sequence(g) == [2, 2, 2, 2]
    assert mp_exact(g).value == 4


def test_subdivide_path_grows_by_one():
    g = subdivide_edge(path_graph(5), 2, 3)
    assert mp_exact(g).value == 5


@given(graphs(min_n=2))
@settings(max_examples=50)
def test_subdivision_degree_facts(g):
    if g.m == 0:
        return
    u, v = g.edges()[0]
    h = subdivide_edge(g, u, v)
    assert h.n == g.n + 1 and h.m == g.m + 1
    assert h.degree(g.n) == 2
    assert h.degree(u) == g.degree(u) and h.degree(v) == g.degree(v)


def test_contract_triangle_edge():
    h, id_map = contract_edge(complete_graph(3), 0, 1)
    assert h == from_edge_list(2, [(0, 1)])
    assert id_map == {0: 0, 2: 1, 1: 0}


def test_contract_rejects_absent_edge():
    with pytest.raises(ValueError):
        contract_edge(path_graph(3), 0, 2)


@pytest.mark.parametrize("seed", range(5))
def test_contract_triangle_free_degree_identity(seed):
    g = random_graph(RandomBipartite(4, 5, 0.5), seed)
    assert is_triangle_free(g)
    for u, v in g.edges():
        du, dv = g.degree(u), g.degree(v)
        h, id_map = contract_edge(g, u, v)
        w = id_map[u]
        assert id_map[v] == w
        assert h.degree(w) == du + dv - 2
        assert h.n == g.n - 1
        for x in range(g.n):
            if x in (u, v) or g.has_edge(x, u) or g.has_edge(x, v):
                continue
            assert h.degree(id_map[x]) == g.degree(x)


def test_add_vertex_extends_bipartite():
    g = complete_bipartite_graph(2, 3)
    h = add_vertex(g, tuple(range(2, 5)))
    assert degree_sequence(h) == degree_sequence(complete_bipartite_graph(3, 3))
    assert mp_exact(h).value == 6


def test_add_vertex_to_single():
    assert add_vertex(from_edge_list(1, []), (0,)) == from_edge_list(2, [(0, 1)])


def test_add_vertex_rejects_bad_neighbors():
    g = path_graph(3)
    with pytest.raises(ValueError):
        add_vertex(g, ())
    with pytest.raises(ValueError):
        add_vertex(g, (0, 0))
    with pytest.raises(ValueError):
        add_vertex(g, (5,))


def test_delete_vertex_from_complete():
    h, id_map = delete_vertex(complete_graph(5), 0)
    assert h == complete_graph(4)
    assert id_map == {1: 0, 2: 1, 3: 2, 4: 3}
    assert mp_exact(h).value == 4


def test_delete_star_center():
    h, _ = delete_vertex(star_graph(4), 0)
    assert h.m == 0
    assert mp_exact(h).value == 1


def test_delete_vertex_rejects_bad():
    with pytest.raises(ValueError):
        delete_vertex(path_graph(3), 5)
    with pytest.raises(ValueError):
        delete_vertex(from_edge_list(1, []), 0)


def test_product_k2_k2_is_c4():
    g = from_edge_list(2, [(0, 1)])
    p = cartesian_product(g, g)
    assert degree_sequence(p) == [2, 2, 2, 2]
    assert mp_exact(p).value == 4


def test_product_star_star_value():
    p = cartesian_product(star_graph(3), star_graph(3))
    assert mp_exact(p).value == 3


def test_product_k3_p3_value():
    p = cartesian_product(complete_graph(3), path_graph(3))
    assert mp_exact(p).value == 6


def test_product_index_round_trip():
    assert product_coords(product_index(2, 1, 3), 3) == (2, 1)


@given(graphs(min_n=1, max_n=4), graphs(min_n=1, max_n=4))
@settings(max_examples=50)
def test_product_degree_and_size_identities(g, h):
    p = cartesian_product(g, h)
    assert p.n == g.n * h.n
    assert p.m == g.n * h.m + h.n * g.m
    for a in range(g.n):
        for b in range(h.n):
            assert p.degree(product_index(a, b, h.n)) == g.degree(a) + h.degree(b)


@given(graphs(min_n=1, max_n=4), graphs(min_n=1, max_n=4))
@settings(max_examples=50)
def test_product_commutes_at_degree_sequence_level(g, h):
    assert degree_sequence(cartesian_product(g, h)) == degree_sequence(
        cartesian_product(h, g)
    )


def test_join_of_singletons():
    g = from_edge_list(1, [])
    assert join(g, g) == from_edge_list(2, [(0, 1)])


def test_join_star_complete_value():
    assert mp_exact(join(star_graph(3), complete_graph(2))).value == 4


def test_join_same_degree_sequence_value():
    assert mp_exact(join(path_graph(3), path_graph(3))).value == 6


@given(graphs(min_n=1, max_n=5), graphs(min_n=1, max_n=5))
@settings(max_examples=50)
def test_join_degree_and_size_identities(g, h):
    j = join(g, h)
    assert j.n == g.n + h.n
    assert j.m == g.m + h.m + g.n * h.n
    for v in range(g.n):
        assert j.degree(v) == g.degree(v) + h.n
    for w in range(h.n):
        assert j.degree(g.n + w) == h.degree(w) + g.n


def test_two_graph_operations_reject_empty_operand():
    empty = from_edge_list(0, [])
    g = path_graph(2)
    with pytest.raises(ValueError):
        cartesian_product(g, empty)
    with pytest.raises(ValueError):
        join(empty, g)
