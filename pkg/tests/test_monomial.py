import json
import random

import pytest

from cwreg.errors import GeneratorCapExceeded
from cwreg.graph import Graph, complete_graph, cycle_graph, pendant_features, structural_predicates
from cwreg.monomial import (
    MonomialIdeal,
    colon_by_monomial,
    colon_by_variables,
    edge_ideal,
    equals,
    intersect,
    is_subset,
    minimalize,
    monomial_from_string,
    monomial_to_string,
    power,
    prime_power,
    symbolic_power,
)
from oracles import brute_symbolic_member, in_ideal

K2 = Graph(2, ((1, 2),))
K3 = complete_graph(3)
G5 = Graph(5, ((1, 2), (2, 3), (3, 4), (3, 5), (4, 5)))


def ideal(n, *gens):
    return minimalize([monomial_from_string(g, n) for g in gens], n)


def test_edge_ideal_examples():
    assert edge_ideal(K2).gens == ((1, 1),)
    assert str(edge_ideal(K3)) == "(x1*x2, x1*x3, x2*x3)"
    assert edge_ideal(Graph(3)).is_zero()


def test_minimalize_examples():
    assert minimalize([(1, 0), (1, 1)], 2).gens == ((1, 0),)
    assert minimalize([(1, 1), (1, 1)], 2).gens == ((1, 1),)
    assert minimalize([], 2).is_zero()


def test_grlex_order():
    I = ideal(3, "x3^2", "x1*x2", "x1^3", "x2^2*x3")
    assert [monomial_to_string(g) for g in I.gens] == ["x1*x2", "x3^2", "x1^3", "x2^2*x3"]


def test_intersect_examples():
    assert equals(intersect(ideal(2, "x1"), ideal(2, "x2")), ideal(2, "x1*x2"))
    assert equals(intersect(ideal(3, "x1*x2"), ideal(3, "x1*x3")), ideal(3, "x1*x2*x3"))
    I = edge_ideal(K3)
    assert equals(intersect(I, MonomialIdeal.unit(3)), I)


def test_power_examples():
    assert power(ideal(2, "x1*x2"), 2).gens == ((2, 2),)
    I = edge_ideal(K3)
    assert equals(power(I, 1), I)
    assert power(I, 0).is_unit()
    sq = power(I, 2)
    expected = ideal(3, "x1^2*x2^2", "x1^2*x3^2", "x2^2*x3^2", "x1^2*x2*x3", "x1*x2^2*x3", "x1*x2*x3^2")
    assert equals(sq, expected) and len(sq) == 6


def test_prime_power_examples():
    assert prime_power((1,), 3, 1).gens == ((3,),)
    assert equals(prime_power((1, 2), 2, 2), ideal(2, "x1^2", "x1*x2", "x2^2"))
    assert equals(prime_power((1, 2, 3), 1, 3), ideal(3, "x1", "x2", "x3"))


def test_symbolic_power_examples():
    for s in (1, 2, 3):
        assert symbolic_power(K2, s).gens == ((s, s),)
    assert symbolic_power(G5, 0).is_unit()
    assert symbolic_power(G5, -1).is_unit()
    # x1x2x3 divides three of the six generators of I(K3)^2
    assert equals(symbolic_power(K3, 2), ideal(3, "x1*x2*x3", "x1^2*x2^2", "x1^2*x3^2", "x2^2*x3^2"))
    with pytest.raises(ValueError):
        symbolic_power(Graph(3), 1)


def test_colon_examples():
    assert colon_by_monomial(ideal(2, "x1^2*x2^2"), (1, 0)).gens == ((1, 2),)
    I = symbolic_power(G5, 2)
    assert equals(colon_by_monomial(I, (0,) * 5), I)
    assert equals(colon_by_variables(symbolic_power(G5, 3), (3, 4, 5)), edge_ideal(G5))


def test_equals_examples():
    assert equals(ideal(2, "x1*x2"), ideal(2, "x1*x2"))
    assert not equals(ideal(1, "x1"), ideal(1, "x1^2"))
    C4 = cycle_graph(4)
    assert equals(symbolic_power(C4, 2), power(edge_ideal(C4), 2))


def test_caps():
    with pytest.raises(GeneratorCapExceeded):
        power(edge_ideal(complete_graph(6)), 3, cap=20)
    with pytest.raises(GeneratorCapExceeded):
        symbolic_power(complete_graph(6), 3, cap=20)


def test_string_and_json_io():
    assert monomial_from_string("x3^2*x5", 5) == (0, 0, 2, 0, 1)
    assert monomial_to_string((0, 0, 2, 0, 1)) == "x3^2*x5"
    assert monomial_from_string("1", 2) == (0, 0)
    with pytest.raises(ValueError):
        monomial_from_string("x7", 3)
    I = symbolic_power(G5, 2)
    assert MonomialIdeal.parse(json.dumps(I.to_dict())) == I
    assert MonomialIdeal.parse("3\nx1^2\nx1*x2\n") == ideal(3, "x1^2", "x1*x2")


def _random_ideal(rng, n):
    return minimalize([tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(1, 5))], n)


def test_membership_oracle():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(1, 4)
        I, J = _random_ideal(rng, n), _random_ideal(rng, n)
        m = tuple(rng.randint(0, 2) for _ in range(n))
        IJ = intersect(I, J)
        Im = colon_by_monomial(I, m)
        P = power(I, 2)
        for _ in range(40):
            b = tuple(rng.randint(0, 7) for _ in range(n))
            assert (b in IJ) == (in_ideal(I.gens, b) and in_ideal(J.gens, b))
            assert (b in Im) == in_ideal(I.gens, tuple(x + y for x, y in zip(b, m)))
            assert (b in P) == any(
                all(g[i] + h[i] <= b[i] for i in range(n)) for g in I.gens for h in I.gens
            )


def _random_graph(rng, n, p=0.5):
    edges = tuple((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p)
    return Graph(n, edges or ((1, 2),))


def test_symbolic_power_membership():
    rng = random.Random(11)
    for _ in range(30):
        g = _random_graph(rng, rng.randint(2, 6))
        s = rng.randint(1, 3)
        I = symbolic_power(g, s)
        for _ in range(40):
            b = tuple(rng.randint(0, s + 1) for _ in range(g.n))
            assert (b in I) == brute_symbolic_member(g.n, g.edges, s, b)


def test_power_properties():
    rng = random.Random(5)
    for _ in range(25):
        g = _random_graph(rng, rng.randint(2, 6))
        assert equals(symbolic_power(g, 1), edge_ideal(g))
        for s in (2, 3):
            assert is_subset(power(edge_ideal(g), s), symbolic_power(g, s))


def test_bipartite_equality_sample():
    rng = random.Random(9)
    checked = 0
    while checked < 15:
        g = _random_graph(rng, rng.randint(2, 7), 0.4)
        if not structural_predicates(g).is_bipartite:
            continue
        checked += 1
        for s in (2, 3):
            assert equals(symbolic_power(g, s), power(edge_ideal(g), s))


def test_triangle_colon_on_random_graphs():
    # any triangle {a,b,c} with deg(c) == 2, not only pendant ones
    rng = random.Random(21)
    seen = 0
    for _ in range(300):
        g = _random_graph(rng, rng.randint(3, 7), 0.45)
        deg, adj = g.degrees(), g.adjacency()
        for c in g.vertices:
            if deg[c] != 2:
                continue
            a, b = sorted(adj[c])
            if not g.has_edge(a, b):
                continue
            seen += 1
            for s in (1, 2, 3):
                assert equals(colon_by_variables(symbolic_power(g, s), (a, b, c)), symbolic_power(g, s - 2))
    assert seen > 20


def test_pendant_edge_colon_on_random_graphs():
    rng = random.Random(23)
    for _ in range(80):
        g = _random_graph(rng, rng.randint(2, 7), 0.4)
        for u, v in pendant_features(g).pendant_edges:
            for s in (1, 2, 3):
                assert equals(colon_by_variables(symbolic_power(g, s), (u, v)), symbolic_power(g, s - 1))
