#!/usr/bin/env python3
"""
Tests del modelo de grafo dual y de las operaciones de intersección.
"""

import os
import random
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.core.errors import InvalidGraph, NotBlack, NotContractible, UnknownVertex
from src.core.rational_core import NEGATIVE_DEFINITE, SymMatrix, negative_semidefinite
from src.core.resolution_graph import (
    ADEFamily,
    ADEType,
    Color,
    DualGraph,
    Vertex,
    ade_classify,
    ade_determinant,
    anticanonical_degree,
    chain_of_curves,
    codiscrepancy,
    contractibility,
    determinant,
    intersection_matrix,
    path_order,
    pullback_coefficients,
    pushforward_product,
    white_components,
)

W, B = Color.WHITE, Color.BLACK


def _path(selfints, color=W, prefix="e"):
    vertices, edges = chain_of_curves(prefix, selfints, color)
    return DualGraph(vertices, edges)


def _star(arms):
    """Estrella de curvas (−2) con brazos de las longitudes dadas."""
    vertices = [Vertex("c", W, -2)]
    edges = []
    for i, length in enumerate(arms):
        prev = "c"
        for j in range(length):
            vid = f"r{i}_{j}"
            vertices.append(Vertex(vid, W, -2))
            edges.append((prev, vid))
            prev = vid
    return DualGraph(vertices, edges)


def test_graph_validation():
    with pytest.raises(InvalidGraph):
        DualGraph([Vertex("a", W, -2), Vertex("a", W, -2)])
    with pytest.raises(InvalidGraph):
        DualGraph([Vertex("a", W, 0)])
    with pytest.raises(InvalidGraph):
        DualGraph([Vertex("a", W, -2)], [("a", "a")])
    with pytest.raises(InvalidGraph):
        DualGraph([Vertex("a", W, -2), Vertex("b", W, -2)], [("a", "b"), ("b", "a")])
    with pytest.raises(UnknownVertex):
        DualGraph([Vertex("a", W, -2)], [("a", "z")])


def test_graph_accessors():
    g = DualGraph([Vertex("b", W, -3), Vertex("C", B, -1), Vertex("a", W, -2)], [("a", "b"), ("b", "C")])
    assert g.vertex_ids == ["C", "a", "b"]
    assert g.whites() == ["a", "b"]
    assert g.blacks() == ["C"]
    assert g.edges == [("C", "b"), ("a", "b")]
    assert g.neighbors("b") == ["C", "a"]
    assert g.valency("b") == 2
    assert "a" in g and "z" not in g
    assert g.vertex("b").self_intersection == -3
    with pytest.raises(UnknownVertex):
        g.vertex("z")


def test_subgraph_relabel_and_isomorphism():
    g = _path([-2, -3, -2])
    h = g.relabel({"e001": "x", "e002": "y", "e003": "z"})
    assert h.vertex_ids == ["x", "y", "z"]
    assert g.is_isomorphic(h)
    assert not g.is_isomorphic(_path([-2, -2, -3]))
    sub = g.subgraph(["e001", "e002"])
    assert sub.edges == [("e001", "e002")]


def test_intersection_matrix():
    assert intersection_matrix(_path([-2])) == SymMatrix([[-2]])
    assert intersection_matrix(_path([-2, -2])) == SymMatrix([[-2, 1], [1, -2]])
    g = _path([-2, -3, -4])
    assert intersection_matrix(g, ["e003", "e001"]) == SymMatrix([[-2, 0], [0, -4]])
    with pytest.raises(UnknownVertex):
        intersection_matrix(g, ["nope"])


def test_contractibility_examples():
    assert contractibility(_path([-2, -2, -2])) == NEGATIVE_DEFINITE
    chain = DualGraph(
        [Vertex("a", W, -2), Vertex("c", B, -1), Vertex("b", W, -2)], [("a", "c"), ("c", "b")]
    )
    assert contractibility(chain) == negative_semidefinite(1)
    with pytest.raises(InvalidGraph):
        contractibility(DualGraph([]))


def test_codiscrepancy_examples():
    assert codiscrepancy(_star([1, 2, 4])).du_val
    four = codiscrepancy(_path([-4]))
    assert four["e001"] == Fraction(1, 2)
    theta = codiscrepancy(_path([-5, -2]))
    assert (theta["e001"], theta["e002"]) == (Fraction(2, 3), Fraction(1, 3))
    assert theta.log_terminal and not theta.du_val


def test_codiscrepancy_not_contractible():
    g = DualGraph([Vertex("a", W, -1), Vertex("b", W, -1)], [("a", "b")])
    with pytest.raises(NotContractible) as info:
        codiscrepancy(g)
    assert info.value.to_dict()["error"] == "NotContractible"


def test_anticanonical_degree_examples():
    crepant = DualGraph(
        [Vertex("a", W, -2), Vertex("C", B, -2), Vertex("b", W, -2)], [("a", "C"), ("C", "b")]
    )
    assert anticanonical_degree(crepant, "C") == 0

    g = DualGraph([Vertex("C", B, -1), Vertex("e", W, -3)], [("C", "e")])
    assert anticanonical_degree(g, "C") == Fraction(2, 3)
    with pytest.raises(NotBlack):
        anticanonical_degree(g, "e")


def test_pushforward_product_examples():
    lonely = DualGraph([Vertex("C", B, -1)])
    assert pushforward_product(lonely, "C", "C") == -1

    g = DualGraph([Vertex("C", B, -1), Vertex("e", W, -4)], [("C", "e")])
    assert pullback_coefficients(g, "C") == {"e": Fraction(1, 4)}
    assert pushforward_product(g, "C", "C") == Fraction(-3, 4)

    two = DualGraph(
        [Vertex("C1", B, -1), Vertex("e", W, -4), Vertex("C2", B, -1)], [("C1", "e"), ("e", "C2")]
    )
    assert pushforward_product(two, "C1", "C2") == Fraction(1, 4)
    assert pushforward_product(two, "C2", "C1") == Fraction(1, 4)


def test_pushforward_product_symmetric_on_random_plumbings():
    rng = random.Random(11)
    for _ in range(40):
        size = rng.randint(2, 6)
        selfints = [-rng.randint(2, 5) for _ in range(size)]
        whites, edges = chain_of_curves("e", selfints)
        ids = [v.id for v in whites]
        i, j = rng.sample(range(size), 2)
        g = DualGraph(
            whites + [Vertex("C1", B, -1), Vertex("C2", B, -1)],
            edges + [("C1", ids[i]), ("C2", ids[j])],
        )
        assert pushforward_product(g, "C1", "C2") == pushforward_product(g, "C2", "C1")


def _random_plumbing_with_blacks(rng, blacks):
    size = rng.randint(2, 7)
    whites, edges = chain_of_curves("e", [-rng.randint(2, 5) for _ in range(size)])
    ids = [v.id for v in whites]
    if rng.random() < 0.5:
        whites.append(Vertex("f", W, -rng.randint(2, 4)))
        edges.append(("f", rng.choice(ids[1:-1] or ids)))
        ids.append("f")
    vertices = whites + [Vertex(c, B, -1) for c in blacks]
    edges += [(c, rng.choice(ids)) for c in blacks]
    return DualGraph(vertices, edges)


def _edge(g, a, b):
    return 1 if g.has_edge(a, b) else 0


def test_pushforward_product_is_bilinear_on_random_plumbings():
    rng = random.Random(23)
    for _ in range(40):
        g = _random_plumbing_with_blacks(rng, ["C1", "C2", "C3"])
        gamma1 = pullback_coefficients(g, "C1")
        gamma2 = pullback_coefficients(g, "C2")
        gamma_sum = {w: gamma1[w] + gamma2[w] for w in g.whites()}

        # μ*(C1 + C2) sigue siendo ortogonal a cada blanco
        for i in g.whites():
            dot = _edge(g, "C1", i) + _edge(g, "C2", i)
            dot += sum(
                x * (g.vertex(i).self_intersection if j == i else _edge(g, i, j))
                for j, x in gamma_sum.items()
            )
            assert dot == 0

        against_c3 = _edge(g, "C1", "C3") + _edge(g, "C2", "C3")
        against_c3 += sum((gamma_sum[w] for w in g.neighbors("C3") if w in gamma_sum), Fraction(0))
        assert against_c3 == pushforward_product(g, "C1", "C3") + pushforward_product(g, "C2", "C3")

        squared = -2 + 2 * _edge(g, "C1", "C2")
        for c in ("C1", "C2"):
            squared += sum((gamma_sum[w] for w in g.neighbors(c) if w in gamma_sum), Fraction(0))
        expected = (
            pushforward_product(g, "C1", "C1")
            + 2 * pushforward_product(g, "C1", "C2")
            + pushforward_product(g, "C2", "C2")
        )
        assert squared == expected


def test_chain_of_curves_ids_sort_in_chain_order():
    short, _ = chain_of_curves("e", [-2] * 5)
    assert [v.id for v in short] == ["e001", "e002", "e003", "e004", "e005"]
    long_chain, edges = chain_of_curves("e", [-2] * 1200)
    ids = [v.id for v in long_chain]
    assert ids[0] == "e0001" and ids[-1] == "e1200"
    assert sorted(ids) == ids
    assert edges[999] == ("e1000", "e1001")


@pytest.mark.parametrize(
    "graph, expected",
    [
        (_path([-2] * 5), "A_5"),
        (_path([-2] * 3), "A_3"),
        (_star([1, 2, 4]), "E_8"),
        (_star([1, 2, 3]), "E_7"),
        (_star([1, 2, 2]), "E_6"),
        (_star([1, 1, 4]), "D_7"),
    ],
)
def test_ade_classify(graph, expected):
    assert ade_classify(graph).name == expected


def test_ade_classify_rejects():
    assert ade_classify(_path([-2, -3, -2])) is None
    assert ade_classify(_star([2, 2, 2])) is None
    assert ade_classify(_star([1, 1, 1, 1])) is None
    assert ade_classify(DualGraph([])) is None


def _ade_graphs(max_rank):
    for n in range(1, max_rank + 1):
        yield ADEType(ADEFamily.A, n), _path([-2] * n)
    for n in range(4, max_rank + 1):
        yield ADEType(ADEFamily.D, n), _star([1, 1, n - 3])
    for n, arms in ((6, [1, 2, 2]), (7, [1, 2, 3]), (8, [1, 2, 4])):
        yield ADEType(ADEFamily.E, n), _star(arms)


def test_ade_determinants_up_to_rank_12():
    for expected, graph in _ade_graphs(12):
        assert ade_classify(graph) == expected
        assert determinant(graph) == ade_determinant(expected)
        assert contractibility(graph) == NEGATIVE_DEFINITE


def test_white_components():
    g = DualGraph(
        [
            Vertex("u1", W, -2),
            Vertex("u2", W, -2),
            Vertex("C", B, -2),
            Vertex("t1", W, -2),
            Vertex("t2", W, -2),
        ],
        [("u1", "u2"), ("u2", "C"), ("C", "t1"), ("C", "t2")],
    )
    comps = white_components(g)
    assert [c.vertex_ids for c in comps] == [["t1"], ["t2"], ["u1", "u2"]]
    assert [c.ade.name for c in comps] == ["A_1", "A_1", "A_2"]
    assert white_components(DualGraph([Vertex("C", B, -1)])) == []


def test_path_order():
    g = _path([-2, -3, -4])
    assert path_order(g) == ["e001", "e002", "e003"]
    assert path_order(_star([1, 1, 1])) is None
    assert path_order(DualGraph([Vertex("x", W, -2)])) == ["x"]


def test_codiscrepancy_in_unit_interval_for_random_log_terminal_chains():
    rng = random.Random(2024)
    for _ in range(200):
        selfints = [-rng.randint(2, 7) for _ in range(rng.randint(1, 8))]
        theta = codiscrepancy(_path(selfints))
        assert theta.log_terminal
        assert theta.du_val == all(s == -2 for s in selfints)
