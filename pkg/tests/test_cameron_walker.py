import json

import pytest

from cwreg.cameron_walker import (
    CWParams,
    FamilyBounds,
    decompose,
    default_skeleton_pool,
    enumerate_family,
    generate,
    is_cameron_walker,
)
from cwreg.errors import BoundsExceeded, NotCameronWalker, NotConnected
from cwreg.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    delete_vertices,
    induced_matching_number,
    matching_number,
    path_graph,
    pendant_features,
)
from cwreg.verify import connected_graphs

G5 = Graph(5, ((1, 2), (2, 3), (3, 4), (3, 5), (4, 5)))
K13 = Graph(4, ((1, 2), (1, 3), (1, 4)))
K14 = Graph(5, ((1, 2), (1, 3), (1, 4), (1, 5)))
G5_PARAMS = CWParams("skeleton", H=Graph(2, ((1, 2),)), X=(1,), pendants=((1, 1),), triangles=((2, 1),))


def test_is_cameron_walker_examples():
    assert is_cameron_walker(complete_graph(3))
    assert is_cameron_walker(K13)
    assert not is_cameron_walker(path_graph(4))


def test_decompose_examples():
    d = decompose(K14)
    assert d.kind == "star" and len(d.leaves) == 4
    assert decompose(K14).params() == CWParams("star", m=4)
    d = decompose(G5)
    assert d.kind == "skeleton"
    assert d.H.edges == ((2, 3),)
    assert d.X == (2,) and d.Y == (3,)
    assert d.pendant_edge_counts == {2: 1}
    assert d.pendant_triangle_counts == {3: 1}
    with pytest.raises(NotCameronWalker):
        decompose(cycle_graph(5))
    with pytest.raises(NotConnected):
        decompose(Graph(4, ((1, 2), (3, 4))))


def test_star_triangle_decomposition():
    g = generate(CWParams("star_triangle", t=3))
    d = decompose(g)
    assert d.kind == "star_triangle" and d.center == 1
    assert d.triangle_pairs == ((2, 3), (4, 5), (6, 7))


def test_generate_examples():
    assert generate(CWParams("star", m=1)) == Graph(2, ((1, 2),))
    assert generate(CWParams("star_triangle", t=1)) == complete_graph(3)
    # skeleton first, then pendant leaves, then triangle vertices
    assert generate(G5_PARAMS) == Graph(5, ((1, 2), (1, 3), (2, 4), (2, 5), (4, 5)))


def test_generate_bounds():
    with pytest.raises(BoundsExceeded):
        generate(CWParams("star", m=0))
    with pytest.raises(BoundsExceeded):
        generate(CWParams("skeleton", H=path_graph(3), X=(1,), pendants=((1, 1),)))  # 1-2-3: X must be a side
    with pytest.raises(BoundsExceeded):
        generate(CWParams("skeleton", H=Graph(2, ((1, 2),)), X=(1,), pendants=((1, 0),)))
    with pytest.raises(BoundsExceeded):
        generate(CWParams("star", m=100))


def test_params_json_roundtrip():
    for p in (CWParams("star", m=3), CWParams("star_triangle", t=2), G5_PARAMS):
        assert CWParams.from_dict(json.loads(json.dumps(p.to_dict()))) == p


def test_roundtrip_over_family():
    for mem in enumerate_family(FamilyBounds(max_vertices=9)):
        d = decompose(mem.graph)
        assert d.to_graph() == mem.graph
        assert generate(d.params()).n == mem.graph.n
        assert is_cameron_walker(generate(d.params()))


def test_parameter_roundtrip_without_leafy_skeletons():
    # a Y vertex of degree one in H is indistinguishable from a pendant leaf,
    # so exact parameter recovery is only expected without such vertices
    for mem in enumerate_family(FamilyBounds(max_vertices=9)):
        p = mem.params
        if p.kind != "skeleton":
            continue
        hdeg = p.H.degrees()
        if any(hdeg[y] == 1 and not dict(p.triangles).get(y) for y in p.Y):
            continue
        assert decompose(mem.graph).params() == p
        assert generate(decompose(mem.graph).params()) == mem.graph


def test_enumerate_examples():
    small = {m.graph for m in enumerate_family(FamilyBounds(max_vertices=3))}
    assert {Graph(2, ((1, 2),)), Graph(3, ((1, 2), (1, 3))), complete_graph(3)} <= small
    assert enumerate_family(FamilyBounds(max_vertices=0)) == []


def test_enumeration_is_deterministic_and_sound():
    a = enumerate_family(FamilyBounds(max_vertices=9))
    b = enumerate_family(FamilyBounds(max_vertices=9))
    assert [m.graph for m in a] == [m.graph for m in b]
    assert len({m.graph.edges for m in a}) == len(a)
    assert all(is_cameron_walker(m.graph) for m in a)


def test_skeleton_pool_shapes():
    pool = default_skeleton_pool()
    assert all(sk.H.n <= 6 for sk in pool)
    names = {sk.name.split("/")[0] for sk in pool}
    assert {"P2", "P6", "K1,3", "K1,5", "K2,2", "K3,3", "K2,4"} <= names


def test_triangle_deletion_lowers_ind_match():
    for mem in enumerate_family(FamilyBounds(max_vertices=10)):
        g = mem.graph
        for T in pendant_features(g).pendant_triangles:
            h, _ = delete_vertices(g, {T.b, T.c})
            assert induced_matching_number(h) == induced_matching_number(g) - 1


def test_decompose_iff_cameron_walker_exhaustive():
    count = 0
    for g in connected_graphs(6):
        count += 1
        try:
            d = decompose(g)
            assert d.to_graph() == g
            ok = True
        except NotCameronWalker:
            ok = False
        assert ok == (matching_number(g) == induced_matching_number(g))
    assert count == 1 + 4 + 38 + 728 + 26704
