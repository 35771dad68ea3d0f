"""Closed-path and prime-cycle enumeration.

These are the brute-force counterparts of the determinant expressions: a
closed path of length m is a cyclically composable arc sequence, a cycle is
its rotation class, and a prime cycle is a class whose minimum period equals
its length.  Everything here enumerates explicitly and is therefore
exponential in the worst case; a work guard bounds the number of candidate
extensions examined and raises once exceeded.  The exact amount of work an
enumeration will do can be predicted cheaply (``enumeration_work``,
``prime_enumeration_work``) so callers can skip instead of running into the
guard.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .algebra import TruncatedSeries
from .digraph import Digraph, InversePairing
from .zeta import WeightScheme, arc_order, transition_weight

DEFAULT_ENUM_LIMIT = 10_000_000


class EnumerationLimitError(RuntimeError):
    """Raised when a brute-force enumeration exceeds its work budget."""


class _Budget:
    __slots__ = ("remaining",)

    def __init__(self, limit: int):
        self.remaining = limit

    def spend(self, amount: int = 1) -> None:
        self.remaining -= amount
        if self.remaining < 0:
            raise EnumerationLimitError(
                "enumeration limit exceeded; raise max_candidates to enumerate anyway"
            )


@dataclass(frozen=True, slots=True)
class ClosedPath:
    """A fundamental section: cyclically composable arc ids of one period."""

    section: tuple[str, ...]

    @property
    def period(self) -> int:
        return len(self.section)


@dataclass(frozen=True, slots=True)
class PrimeCycle:
    """Canonical representative of a rotation class with minimal period."""

    representative: ClosedPath
    period: int
    circ: Fraction


def is_closed_walk(dg: Digraph, section: tuple[str, ...]) -> bool:
    if not section:
        return False
    arcs = [dg.arc(a) for a in section]
    return all(arcs[i].head == arcs[(i + 1) % len(arcs)].tail for i in range(len(arcs)))


def circular_product(
    dg: Digraph,
    pairing: InversePairing,
    weights: WeightScheme,
    section: tuple[str, ...],
) -> Fraction:
    """Product of transition weights around a closed section."""
    if not is_closed_walk(dg, section):
        raise ValueError("section is not a closed walk")
    total = Fraction(1)
    m = len(section)
    for i in range(m):
        total *= transition_weight(dg, pairing, weights, section[i], section[(i + 1) % m])
        if total == 0:
            return total
    return total


class _ArcTables:
    """Integer-indexed view of a weighted digraph for tight enumeration loops."""

    __slots__ = ("ids", "tails", "heads", "out_by_vertex", "theta", "inverse")

    def __init__(self, dg: Digraph, pairing: InversePairing, weights: WeightScheme | None):
        arcs = dg.arcs
        self.ids = [a.id for a in arcs]
        self.tails = [a.tail for a in arcs]
        self.heads = [a.head for a in arcs]
        out: dict[int, list[int]] = {}
        for i, arc in enumerate(arcs):
            out.setdefault(arc.tail, []).append(i)
        self.out_by_vertex = out
        index = {a.id: i for i, a in enumerate(arcs)}
        self.inverse = [
            index[p] if (p := pairing.inverse_of(a.id)) is not None else -1 for a in arcs
        ]
        if weights is None:
            self.theta = []
        else:
            tau = [weights.tau_of(a.id) for a in arcs]
            ups = [weights.upsilon_of(a.id) for a in arcs]
            zero = Fraction(0)
            theta = []
            for i, a in enumerate(arcs):
                row = []
                for j, b in enumerate(arcs):
                    value = tau[j] if a.head == b.tail else zero
                    if self.inverse[i] == j:
                        value -= ups[j]
                    row.append(value)
                theta.append(row)
            self.theta = theta


def _step_matrix(dg: Digraph) -> list[list[int]]:
    arcs = dg.arcs
    return [[1 if a.head == b.tail else 0 for b in arcs] for a in arcs]


def count_closed_walks(dg: Digraph, length: int) -> int:
    """Number of closed walks of a given length, via integer transfer-matrix
    powers."""
    if length < 1:
        raise ValueError("period must be positive")
    step = _step_matrix(dg)
    k = len(step)
    power = step
    for _ in range(length - 1):
        power = [
            [sum(power[i][x] * step[x][j] for x in range(k)) for j in range(k)]
            for i in range(k)
        ]
    return sum(power[i][i] for i in range(k))


def _walk_counts(dg: Digraph, max_length: int) -> list[int]:
    """Number of nonempty composable walks of each length 1..max_length."""
    step = _step_matrix(dg)
    k = len(step)
    reach = [1] * k  # walks of the current length, by final arc
    counts = [k]
    for _ in range(max_length - 1):
        reach = [sum(reach[x] * step[x][j] for x in range(k)) for j in range(k)]
        counts.append(sum(reach))
    return counts


def enumeration_work(dg: Digraph, length: int) -> int:
    """Exact number of candidates one fixed-length walk enumeration examines
    (every composable walk of length <= ``length``).  Cheap integer matrix
    arithmetic, so callers can decide to skip enumeration-backed checks
    without burning the actual budget."""
    if length < 1:
        raise ValueError("period must be positive")
    return sum(_walk_counts(dg, length))


def prime_enumeration_work(dg: Digraph, max_len: int) -> int:
    """Exact candidate count for the prime-cycle sweep, which enumerates
    walks of every length 1..max_len under one shared budget."""
    if max_len < 1:
        raise ValueError("period must be positive")
    counts = _walk_counts(dg, max_len)
    return sum(count * (max_len - length + 1) for length, count in enumerate(counts, start=1))


def closed_path_sum_bruteforce(
    dg: Digraph,
    pairing: InversePairing,
    weights: WeightScheme,
    length: int,
    max_candidates: int = DEFAULT_ENUM_LIMIT,
) -> Fraction:
    """Sum of circular products over all closed paths of the given length,
    by depth-first enumeration of composable arc sequences.  Independent of
    the trace-based computation."""
    if length < 1:
        raise ValueError("period must be positive")
    weights.validate_for(dg)
    tables = _ArcTables(dg, pairing, weights)
    theta = tables.theta
    out_by_vertex = tables.out_by_vertex
    heads = tables.heads
    budget = _Budget(max_candidates)
    total = Fraction(0)
    zero = Fraction(0)

    def extend(first: int, current: int, depth: int, product: Fraction) -> None:
        nonlocal total
        if depth == length:
            if heads[current] == tables.tails[first]:
                total += product * theta[current][first]
            return
        for nxt in out_by_vertex.get(heads[current], ()):
            budget.spend()
            stepped = product * theta[current][nxt]
            if stepped != zero:
                extend(first, nxt, depth + 1, stepped)

    for start in range(len(tables.ids)):
        budget.spend()
        extend(start, start, 1, Fraction(1))
    return total


def count_reduced_closed_paths(
    dg: Digraph,
    pairing: InversePairing,
    length: int,
    max_candidates: int = DEFAULT_ENUM_LIMIT,
) -> int:
    """Number of closed paths of the given length in which no arc is
    followed by its own inverse (cyclically)."""
    if length < 1:
        raise ValueError("period must be positive")
    tables = _ArcTables(dg, pairing, None)
    out_by_vertex = tables.out_by_vertex
    heads = tables.heads
    inverse = tables.inverse
    budget = _Budget(max_candidates)
    count = 0

    def extend(first: int, current: int, depth: int) -> None:
        nonlocal count
        if depth == length:
            if heads[current] == tables.tails[first] and inverse[current] != first:
                count += 1
            return
        for nxt in out_by_vertex.get(heads[current], ()):
            budget.spend()
            if inverse[current] != nxt:
                extend(first, nxt, depth + 1)

    for start in range(len(tables.ids)):
        budget.spend()
        extend(start, start, 1)
    return count


def _closed_index_walks(
    tables: _ArcTables, length: int, budget: _Budget
) -> Iterator[tuple[int, ...]]:
    """All cyclically composable arc-index sequences of the given length."""
    out_by_vertex = tables.out_by_vertex
    heads = tables.heads
    tails = tables.tails

    def extend(first: int, walk: list[int]) -> Iterator[tuple[int, ...]]:
        if len(walk) == length:
            if heads[walk[-1]] == tails[first]:
                yield tuple(walk)
            return
        for nxt in out_by_vertex.get(heads[walk[-1]], ()):
            budget.spend()
            walk.append(nxt)
            yield from extend(first, walk)
            walk.pop()

    for start in range(len(tables.ids)):
        budget.spend()
        yield from extend(start, [start])


def _minimum_rotation_period(section: tuple[int, ...]) -> int:
    m = len(section)
    for d in range(1, m):
        if m % d == 0 and all(section[i] == section[(i + d) % m] for i in range(m)):
            return d
    return m


def _canonical_rotation(section: tuple[int, ...], rank: list[int]) -> tuple[int, ...]:
    m = len(section)
    best = section
    best_key = tuple(rank[i] for i in section)
    for shift in range(1, m):
        rotated = section[shift:] + section[:shift]
        key = tuple(rank[i] for i in rotated)
        if key < best_key:
            best, best_key = rotated, key
    return best


def enumerate_prime_cycles(
    dg: Digraph,
    pairing: InversePairing,
    weights: WeightScheme,
    max_len: int,
    max_candidates: int = DEFAULT_ENUM_LIMIT,
) -> tuple[PrimeCycle, ...]:
    """One canonical representative per prime cycle of period <= max_len.

    The representative is the rotation that is lexicographically least under
    the canonical arc order, and a cycle is kept only when its section is
    aperiodic (its rotation class has minimal period equal to its length).
    """
    if max_len < 1:
        raise ValueError("period must be positive")
    weights.validate_for(dg)
    tables = _ArcTables(dg, pairing, weights)
    order_rank = {arc_id: r for r, arc_id in enumerate(arc_order(dg, pairing))}
    rank = [order_rank[arc_id] for arc_id in tables.ids]
    budget = _Budget(max_candidates)
    primes: list[PrimeCycle] = []
    for length in range(1, max_len + 1):
        seen: set[tuple[int, ...]] = set()
        for section in _closed_index_walks(tables, length, budget):
            if _minimum_rotation_period(section) != length:
                continue
            canonical = _canonical_rotation(section, rank)
            if canonical in seen:
                continue
            seen.add(canonical)
            circ = Fraction(1)
            for i in range(length):
                circ *= tables.theta[canonical[i]][canonical[(i + 1) % length]]
                if circ == 0:
                    break
            primes.append(
                PrimeCycle(
                    representative=ClosedPath(tuple(tables.ids[i] for i in canonical)),
                    period=length,
                    circ=circ,
                )
            )
    primes.sort(key=lambda p: (p.period, tuple(order_rank[a] for a in p.representative.section)))
    return tuple(primes)


def euler_product_series(
    dg: Digraph,
    pairing: InversePairing,
    weights: WeightScheme,
    order: int,
    max_candidates: int = DEFAULT_ENUM_LIMIT,
) -> TruncatedSeries:
    """The Euler product over prime cycles, truncated at the given order.

    Each prime with period p and circular product c contributes the factor
    1 / (1 - c*t^p); only primes with period <= order can affect the result.
    """
    if order < 1:
        raise ValueError("order must be positive")
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    for prime in enumerate_prime_cycles(dg, pairing, weights, order, max_candidates):
        if prime.circ == 0:
            continue
        p = prime.period
        for n in range(p, order + 1):
            coeffs[n] += prime.circ * coeffs[n - p]
    return TruncatedSeries(coeffs)
