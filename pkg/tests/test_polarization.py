import random

import pytest

from cwreg.betti import betti_table, regularity
from cwreg.errors import GeneratorCapExceeded
from cwreg.graph import Graph, complete_graph, cycle_graph, path_graph
from cwreg.homology import GF2, QQ
from cwreg.monomial import MonomialIdeal, edge_ideal, minimalize, monomial_from_string, symbolic_power
from cwreg.polarization import hochster_coarse_tables, polarize, regularity_via_polarization

G5 = Graph(5, ((1, 2), (2, 3), (3, 4), (3, 5), (4, 5)))


def ideal(n, *gens):
    return minimalize([monomial_from_string(g, n) for g in gens], n)


def test_polarize_examples():
    J, labels = polarize(ideal(2, "x1^2", "x1*x2"))
    assert labels == [(1, 1), (1, 2), (2, 1)]
    assert set(J.gens) == {(1, 1, 0), (1, 0, 1)}
    I = edge_ideal(complete_graph(3))
    assert polarize(I)[0] == I


def test_regularity_examples():
    assert regularity_via_polarization(ideal(1, "x1^2")) == 2
    assert regularity_via_polarization(edge_ideal(path_graph(3))) == 2
    assert regularity_via_polarization(edge_ideal(cycle_graph(5))) == 3
    assert regularity_via_polarization(MonomialIdeal.unit(2)) == 0
    for s in (1, 2, 3):
        I = symbolic_power(G5, s)
        assert regularity_via_polarization(I) == regularity(I) == 2 * s + 1


def _random_ideal(rng, n, gens, exp):
    while True:
        G = [tuple(rng.randint(0, exp) for _ in range(n)) for _ in range(rng.randint(1, gens))]
        G = [g for g in G if any(g)]
        if G:
            return minimalize(G, n)


def test_coarse_tables_match_lcm_lattice_method():
    rng = random.Random(29)
    for _ in range(60):
        I = _random_ideal(rng, rng.randint(1, 5), 7, 3)
        tables = hochster_coarse_tables(I, (QQ, GF2), var_cap=62)
        for f in (QQ, GF2):
            assert tables[f] == betti_table(I, f).coarse


def test_alexander_dual_path_agrees_with_direct_path():
    for I in (symbolic_power(cycle_graph(5), 2), symbolic_power(G5, 2), ideal(3, "x1^3*x2", "x2^2*x3^2", "x1*x3^3")):
        direct = hochster_coarse_tables(I, (QQ, GF2), var_cap=62, direct_limit=62)
        dual = hochster_coarse_tables(I, (QQ, GF2), var_cap=62, direct_limit=0)
        assert direct == dual


def test_var_cap():
    with pytest.raises(GeneratorCapExceeded) as info:
        regularity_via_polarization(symbolic_power(G5, 3), var_cap=10)
    assert info.value.cap == "var-cap"
