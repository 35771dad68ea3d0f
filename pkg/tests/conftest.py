from fractions import Fraction

import pytest

from graphzeta import (
    Digraph,
    UndirectedGraph,
    WeightScheme,
    canonical_inverse_pairing,
    symmetrize,
)


@pytest.fixture
def worked_example():
    """Three vertices, eight arcs: one one-way multi-arc pair, one tied
    two-way pair, a one-way arc, and two loops.  Exercises all five arc
    classes at once."""
    dg = Digraph(
        3,
        [
            ("a1", 1, 2),
            ("a2", 2, 1),
            ("a3", 2, 1),
            ("a4", 2, 3),
            ("a5", 3, 2),
            ("a6", 3, 1),
            ("a7", 1, 1),
            ("a8", 1, 1),
        ],
    )
    pairing = canonical_inverse_pairing(dg, [("a1", "a2"), ("a4", "a5")])
    return dg, pairing


@pytest.fixture
def indexed_weights(worked_example):
    """tau(a_i) = i, upsilon(a_i) = 1/i on the worked example."""
    dg, pairing = worked_example
    weights = WeightScheme(
        tau={f"a{i}": Fraction(i) for i in range(1, 9)},
        upsilon={f"a{i}": Fraction(1, i) for i in range(1, 9)},
    )
    return dg, pairing, weights


@pytest.fixture
def three_cycle():
    dg = Digraph(3, [("x", 1, 2), ("y", 2, 3), ("z", 3, 1)])
    return dg, canonical_inverse_pairing(dg)


@pytest.fixture
def self_loop():
    dg = Digraph(1, [("l", 1, 1)])
    return dg, canonical_inverse_pairing(dg)


@pytest.fixture
def k4():
    graph = UndirectedGraph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    dg, pairing = symmetrize(graph)
    return graph, dg, pairing
