"""Finite digraphs with multi-arcs and multi-loops.

Vertices are the integers 1..n so that matrices have a fixed row order;
arcs carry user-chosen string ids and keep their input order, which seeds
every deterministic choice made downstream (canonical pairing, arc
classification, matrix ordering).

The inverse-arc pairing is an involution on arc ids: for each unordered
vertex pair whose two direction classes are both nonempty, the smaller
class injects totally into the larger one (ties broken toward the smaller
tail index), and every loop is its own inverse.  Arcs left out of the
pairing have no inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra import Matrix

ArcSpec = "Arc | tuple[str, int, int]"


@dataclass(frozen=True, slots=True)
class Arc:
    id: str
    tail: int
    head: int

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


class Digraph:
    """Immutable finite digraph; multi-arcs and multi-loops allowed."""

    __slots__ = ("vertex_count", "arcs", "_by_id", "_position", "_between")

    vertex_count: int
    arcs: tuple[Arc, ...]

    def __init__(self, vertex_count: int, arcs: Iterable[ArcSpec] = ()):
        if vertex_count < 0:
            raise ValueError("vertex count must be nonnegative")
        built: list[Arc] = []
        for spec in arcs:
            arc = spec if isinstance(spec, Arc) else Arc(*spec)
            built.append(arc)
        self.vertex_count = vertex_count
        self.arcs = tuple(built)
        by_id: dict[str, Arc] = {}
        position: dict[str, int] = {}
        between: dict[tuple[int, int], list[Arc]] = {}
        for idx, arc in enumerate(built):
            if arc.id in by_id:
                raise ValueError(f"duplicate arc id {arc.id!r}")
            for v in (arc.tail, arc.head):
                if not 1 <= v <= vertex_count:
                    raise ValueError(
                        f"arc {arc.id!r} endpoint {v} out of range 1..{vertex_count}"
                    )
            by_id[arc.id] = arc
            position[arc.id] = idx
            between.setdefault((arc.tail, arc.head), []).append(arc)
        self._by_id = by_id
        self._position = position
        self._between = {k: tuple(v) for k, v in between.items()}

    def arc(self, arc_id: str) -> Arc:
        try:
            return self._by_id[arc_id]
        except KeyError:
            raise ValueError(f"unknown arc id {arc_id!r}") from None

    def has_arc(self, arc_id: str) -> bool:
        return arc_id in self._by_id

    def position(self, arc_id: str) -> int:
        """Input-order index of an arc; the tiebreaker for every canonical choice."""
        self.arc(arc_id)
        return self._position[arc_id]

    def arcs_between(self, tail: int, head: int) -> tuple[Arc, ...]:
        """Arcs from ``tail`` to ``head``, in input order."""
        return self._between.get((tail, head), ())

    def arcs_touching(self, u: int, v: int) -> tuple[Arc, ...]:
        """Arcs lying between u and v in either direction."""
        if u == v:
            return self.arcs_between(u, u)
        return self.arcs_between(u, v) + self.arcs_between(v, u)

    def loops(self) -> tuple[Arc, ...]:
        return tuple(a for a in self.arcs if a.is_loop)

    def is_connected(self) -> bool:
        """True iff every pair of distinct vertices has an arc between them
        in at least one direction."""
        for u in range(1, self.vertex_count + 1):
            for v in range(u + 1, self.vertex_count + 1):
                if not self.arcs_touching(u, v):
                    return False
        return True

    def __repr__(self) -> str:
        return f"Digraph(vertices={self.vertex_count}, arcs={len(self.arcs)})"


class InversePairing:
    """Involutive inverse-arc assignment.

    Stores the complete involution: loops map to themselves and each paired
    arc appears under both of its orientations.
    """

    __slots__ = ("_map",)

    def __init__(self, pairs: Mapping[str, str]):
        mapping = dict(pairs)
        for a, b in mapping.items():
            if mapping.get(b) != a:
                raise ValueError(f"pairing is not an involution at {a!r} <-> {b!r}")
        self._map = mapping

    def inverse_of(self, arc_id: str) -> str | None:
        return self._map.get(arc_id)

    def has_inverse(self, arc_id: str) -> bool:
        return arc_id in self._map

    def as_dict(self) -> dict[str, str]:
        return dict(self._map)

    def mutual_pairs(self) -> tuple[tuple[str, str], ...]:
        """Each non-loop pair once (first member lexicographically smaller id order
        of appearance is not guaranteed; use the digraph for display order)."""
        seen: set[str] = set()
        out: list[tuple[str, str]] = []
        for a, b in self._map.items():
            if a in seen or b in seen:
                continue
            seen.add(a)
            seen.add(b)
            out.append((a, b))
        return tuple(out)

    def __len__(self) -> int:
        return len(self._map)

    def __repr__(self) -> str:
        return f"InversePairing({self._map!r})"


def _designated_direction(dg: Digraph, u: int, v: int) -> tuple[int, int] | None:
    """For distinct u, v with both direction classes nonempty, the ordered
    pair whose first component hosts the smaller class (ties toward the
    smaller tail index).  None when either class is empty."""
    uv = dg.arcs_between(u, v)
    vu = dg.arcs_between(v, u)
    if not uv or not vu:
        return None
    if len(uv) < len(vu):
        return (u, v)
    if len(vu) < len(uv):
        return (v, u)
    return (u, v) if u < v else (v, u)


def canonical_inverse_pairing(
    dg: Digraph, user_pairs: Sequence[tuple[str, str]] | None = None
) -> InversePairing:
    """Fix the inverse-arc injection for a digraph.

    Every loop is self-inverse.  For each unordered vertex pair with arcs in
    both directions, the smaller direction class is injected totally into
    the larger one; explicit ``user_pairs`` are honored first and the
    remainder is matched in input order.
    """
    mapping: dict[str, str] = {}
    for arc in dg.arcs:
        if arc.is_loop:
            mapping[arc.id] = arc.id

    for a_id, b_id in user_pairs or ():
        a = dg.arc(a_id)
        b = dg.arc(b_id)
        if a.is_loop or b.is_loop:
            if a.id != b.id:
                raise ValueError(
                    f"inverse must join opposite arcs: loop {a_id!r} is self-inverse"
                )
            continue  # explicit self-pairing of a loop is redundant but accepted
        if a.id == b.id:
            raise ValueError(f"inverse must join opposite arcs: {a_id!r} with itself")
        if not (a.tail == b.head and a.head == b.tail):
            raise ValueError(
                f"inverse must join opposite arcs: {a_id!r} is {a.tail}->{a.head}, "
                f"{b_id!r} is {b.tail}->{b.head}"
            )
        for arc_id in (a.id, b.id):
            if arc_id in mapping:
                raise ValueError(
                    f"user pairing not extendable: arc {arc_id!r} appears in more than one pair"
                )
        mapping[a.id] = b.id
        mapping[b.id] = a.id

    for u in range(1, dg.vertex_count + 1):
        for v in range(u + 1, dg.vertex_count + 1):
            direction = _designated_direction(dg, u, v)
            if direction is None:
                continue
            x, y = direction
            remaining_small = [a for a in dg.arcs_between(x, y) if a.id not in mapping]
            remaining_large = [b for b in dg.arcs_between(y, x) if b.id not in mapping]
            if len(remaining_small) > len(remaining_large):
                raise ValueError(
                    "user pairing not extendable to a total injection "
                    f"from the smaller side between vertices {x} and {y}"
                )
            for a, b in zip(remaining_small, remaining_large):
                mapping[a.id] = b.id
                mapping[b.id] = a.id

    return InversePairing(mapping)


@dataclass(frozen=True, slots=True)
class ArcClassification:
    """The five-way partition of the arc set induced by the pairing.

    ``forward`` holds the designated smaller-side arcs (each has an
    inverse), ``backward`` their partners, ``surplus`` the larger-side arcs
    left unpaired, ``loops`` the self-inverse loops, and ``one_way`` the
    arcs whose opposite direction class is empty.  ``surplus`` and
    ``one_way`` together are exactly the arcs without inverse.  The vertex
    pair families record which ordered pairs produced each group.
    """

    two_way_pairs: tuple[tuple[int, int], ...]
    loop_pairs: tuple[tuple[int, int], ...]
    one_way_pairs: tuple[tuple[int, int], ...]
    forward: tuple[str, ...]
    backward: tuple[str, ...]
    surplus: tuple[str, ...]
    loops: tuple[str, ...]
    one_way: tuple[str, ...]

    @property
    def no_inverse(self) -> tuple[str, ...]:
        return self.surplus + self.one_way

    def all_arcs(self) -> tuple[str, ...]:
        return self.forward + self.backward + self.surplus + self.loops + self.one_way


def classify_arcs(dg: Digraph, pairing: InversePairing) -> ArcClassification:
    """Split the arcs of ``dg`` into the five classes induced by ``pairing``.

    Validates that the pairing is consistent with the digraph: loops
    self-paired, designated smaller sides totally paired into the opposite
    class, and nothing else paired.
    """
    for arc_id in pairing.as_dict():
        dg.arc(arc_id)
    for loop in dg.loops():
        if pairing.inverse_of(loop.id) != loop.id:
            raise ValueError(f"pairing inconsistent: loop {loop.id!r} must be self-inverse")

    two_way: list[tuple[int, int]] = []
    forward: list[str] = []
    backward_set: set[str] = set()
    surplus: list[str] = []
    one_way_pairs: list[tuple[int, int]] = []
    one_way: list[str] = []

    for u in range(1, dg.vertex_count + 1):
        for v in range(u + 1, dg.vertex_count + 1):
            uv = dg.arcs_between(u, v)
            vu = dg.arcs_between(v, u)
            if uv and vu:
                x, y = _designated_direction(dg, u, v)
                two_way.append((x, y))
                partners: set[str] = set()
                for arc in dg.arcs_between(x, y):
                    partner = pairing.inverse_of(arc.id)
                    if partner is None:
                        raise ValueError(
                            f"pairing inconsistent: arc {arc.id!r} on the designated "
                            "side lacks an inverse"
                        )
                    partner_arc = dg.arc(partner)
                    if not (partner_arc.tail == arc.head and partner_arc.head == arc.tail):
                        raise ValueError(
                            f"pairing inconsistent: {arc.id!r} paired with "
                            f"non-opposite arc {partner!r}"
                        )
                    forward.append(arc.id)
                    partners.add(partner)
                backward_set.update(partners)
                for arc in dg.arcs_between(y, x):
                    if arc.id in partners:
                        continue
                    if pairing.has_inverse(arc.id):
                        raise ValueError(
                            f"pairing inconsistent: surplus arc {arc.id!r} has an inverse"
                        )
                    surplus.append(arc.id)
            elif uv or vu:
                if uv:
                    pair = (v, u)  # the empty direction comes first
                    arcs_here = uv
                else:
                    pair = (u, v)
                    arcs_here = vu
                one_way_pairs.append(pair)
                for arc in arcs_here:
                    if pairing.has_inverse(arc.id):
                        raise ValueError(
                            f"pairing inconsistent: one-way arc {arc.id!r} has an inverse"
                        )
                    one_way.append(arc.id)

    by_position = dg.position
    loop_ids = sorted((a.id for a in dg.loops()), key=by_position)
    return ArcClassification(
        two_way_pairs=tuple(two_way),
        loop_pairs=tuple(sorted({(a.tail, a.tail) for a in dg.loops()})),
        one_way_pairs=tuple(one_way_pairs),
        forward=tuple(sorted(forward, key=by_position)),
        backward=tuple(sorted(backward_set, key=by_position)),
        surplus=tuple(sorted(surplus, key=by_position)),
        loops=tuple(loop_ids),
        one_way=tuple(sorted(one_way, key=by_position)),
    )


class UndirectedGraph:
    """Finite undirected multigraph; loops and parallel edges allowed."""

    __slots__ = ("vertex_count", "edges")

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise ValueError("vertex count must be nonnegative")
        stored: list[tuple[int, int]] = []
        for u, v in edges:
            for w in (u, v):
                if not 1 <= w <= vertex_count:
                    raise ValueError(f"edge endpoint {w} out of range 1..{vertex_count}")
            stored.append((u, v))
        self.vertex_count = vertex_count
        self.edges = tuple(stored)

    def multiplicity(self, u: int, v: int) -> int:
        return sum(1 for a, b in self.edges if {a, b} == {u, v} or (u == v and a == b == u))

    def __repr__(self) -> str:
        return f"UndirectedGraph(vertices={self.vertex_count}, edges={len(self.edges)})"


def symmetrize(graph: UndirectedGraph) -> tuple[Digraph, InversePairing]:
    """Symmetric digraph of an undirected graph.

    Each non-loop edge becomes two mutually inverse opposite arcs; each
    undirected loop becomes a single self-inverse directed loop.  Arc ids
    are ``e<k>`` / ``e<k>r`` by 1-based edge index.
    """
    arcs: list[Arc] = []
    pairs: dict[str, str] = {}
    for k, (u, v) in enumerate(graph.edges, start=1):
        if u == v:
            name = f"e{k}"
            arcs.append(Arc(name, u, u))
            pairs[name] = name
        else:
            fwd, rev = f"e{k}", f"e{k}r"
            arcs.append(Arc(fwd, u, v))
            arcs.append(Arc(rev, v, u))
            pairs[fwd] = rev
            pairs[rev] = fwd
    return Digraph(graph.vertex_count, arcs), InversePairing(pairs)


def adjacency_and_degree(graph: UndirectedGraph) -> tuple[Matrix, Matrix]:
    """Adjacency matrix (edge multiplicities) and diagonal degree matrix."""
    n = graph.vertex_count
    counts = [[0] * n for _ in range(n)]
    for u, v in graph.edges:
        if u == v:
            counts[u - 1][u - 1] += 1
        else:
            counts[u - 1][v - 1] += 1
            counts[v - 1][u - 1] += 1
    adjacency = Matrix([[Fraction(c) for c in row] for row in counts], cols=n)
    degree = Matrix(
        [
            [Fraction(sum(counts[i]) if i == j else 0) for j in range(n)]
            for i in range(n)
        ],
        cols=n,
    )
    return adjacency, degree


def disjoint_union(
    left: Digraph,
    left_pairing: InversePairing,
    right: Digraph,
    right_pairing: InversePairing,
) -> tuple[Digraph, InversePairing, dict[str, str]]:
    """Disjoint union of two paired digraphs.

    Right-hand vertices are shifted past the left ones; right-hand arc ids
    are kept when free and deterministically primed otherwise.  Returns the
    combined digraph and pairing plus the old-to-new id map for the right
    component (left ids are unchanged).
    """
    shift = left.vertex_count
    used = {a.id for a in left.arcs}
    right_map: dict[str, str] = {}
    arcs = list(left.arcs)
    for arc in right.arcs:
        new_id = arc.id
        while new_id in used:
            new_id += "'"
        used.add(new_id)
        right_map[arc.id] = new_id
        arcs.append(Arc(new_id, arc.tail + shift, arc.head + shift))
    pairs = left_pairing.as_dict()
    for a, b in right_pairing.as_dict().items():
        pairs[right_map[a]] = right_map[b]
    return (
        Digraph(left.vertex_count + right.vertex_count, arcs),
        InversePairing(pairs),
        right_map,
    )
