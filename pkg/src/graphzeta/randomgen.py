"""Seeded random instances for the verification suites.

The generated digraphs are deliberately small (a handful of vertices and
arcs) but rich: multi-arcs and multi-loops are allowed, weights are small
rationals with zero backtrack weights sprinkled in, and alternative valid
inverse pairings can be drawn.  Everything is driven by a caller-supplied
``random.Random`` so suites are reproducible from a seed.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .digraph import (
    Digraph,
    InversePairing,
    UndirectedGraph,
    canonical_inverse_pairing,
)
from .paths import enumeration_work
from .zeta import WeightScheme


def random_digraph(rng: Random, max_vertices: int = 5, max_arcs: int = 10) -> Digraph:
    n = rng.randint(1, max_vertices)
    arc_count = rng.randint(1, max_arcs)
    arcs = []
    for i in range(1, arc_count + 1):
        arcs.append((f"a{i}", rng.randint(1, n), rng.randint(1, n)))
    return Digraph(n, arcs)


def _random_fraction(rng: Random, allow_zero: bool) -> Fraction:
    choices = [k for k in range(-3, 4) if k != 0]
    if allow_zero and rng.random() < 0.25:
        return Fraction(0)
    return Fraction(rng.choice(choices), rng.randint(1, 3))


def random_weights(rng: Random, dg: Digraph, allow_zero_upsilon: bool = True) -> WeightScheme:
    return WeightScheme(
        tau={a.id: _random_fraction(rng, allow_zero=False) for a in dg.arcs},
        upsilon={a.id: _random_fraction(rng, allow_zero_upsilon) for a in dg.arcs},
    )


def random_pairing(rng: Random, dg: Digraph) -> InversePairing:
    """A uniformly shuffled valid pairing: for each two-way vertex pair the
    smaller side is matched against a random subset of the larger side."""
    user_pairs: list[tuple[str, str]] = []
    for u in range(1, dg.vertex_count + 1):
        for v in range(u + 1, dg.vertex_count + 1):
            uv = list(dg.arcs_between(u, v))
            vu = list(dg.arcs_between(v, u))
            if not uv or not vu:
                continue
            small, large = (uv, vu) if len(uv) <= len(vu) else (vu, uv)
            targets = rng.sample(large, len(small))
            user_pairs.extend((a.id, b.id) for a, b in zip(small, targets))
    return canonical_inverse_pairing(dg, user_pairs)


def random_instance(
    rng: Random,
    max_vertices: int = 5,
    max_arcs: int = 10,
    shuffle_pairing: bool = False,
) -> tuple[Digraph, InversePairing, WeightScheme]:
    dg = random_digraph(rng, max_vertices, max_arcs)
    if shuffle_pairing and rng.random() < 0.5:
        pairing = random_pairing(rng, dg)
    else:
        pairing = canonical_inverse_pairing(dg)
    return dg, pairing, random_weights(rng, dg)


def random_simple_graph(rng: Random, max_vertices: int = 6, edge_prob: float = 0.5) -> UndirectedGraph:
    n = rng.randint(1, max_vertices)
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() < edge_prob:
                edges.append((u, v))
    return UndirectedGraph(n, edges)


def random_enumerable_instance(
    rng: Random,
    max_length: int,
    cost_limit: int = 200_000,
    max_vertices: int = 5,
    max_arcs: int = 10,
    shuffle_pairing: bool = False,
) -> tuple[Digraph, InversePairing, WeightScheme]:
    """Random instance redrawn until brute-force enumeration up to
    ``max_length`` is affordable, so enumeration oracles can always run."""
    while True:
        dg, pairing, weights = random_instance(rng, max_vertices, max_arcs, shuffle_pairing)
        if enumeration_work(dg, max_length) <= cost_limit:
            return dg, pairing, weights
