"""The line-oriented digraph/graph file format.

A file is UTF-8 text; ``#`` starts a comment, blank lines are ignored.
Directives::

    digraph <name>                      optional header (``graph`` for
                                        undirected files)
    vertices <n>                        declares vertices 1..n
    arc <id> <tail> <head> [tau=<rat>] [upsilon=<rat>]
    inverse <id> <id>                   declares an inverse pair
    edge <u> <v>                        undirected files only

Rationals are written ``p`` or ``p/q`` with q > 0.  Arc weights default to
1.  Loops need no ``inverse`` line (they are self-inverse); an explicit
``inverse l l`` is accepted and redundant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .digraph import Digraph, InversePairing, UndirectedGraph
from .zeta import WeightScheme

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"malformed rational {text!r} (expected p or p/q with q > 0)")
    return Fraction(text)


class FileFormatError(ValueError):
    """Parse failure, carrying the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class ParsedDigraph:
    name: str
    digraph: Digraph
    user_pairs: tuple[tuple[str, str], ...]
    weights: WeightScheme


def _logical_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def parse_digraph_text(text: str) -> ParsedDigraph:
    """Parse a digraph file into its model, declared pairs and weights.

    The declared inverse pairs are returned as-is; completing them into a
    total pairing is the caller's job (``canonical_inverse_pairing``).
    """
    name = "digraph"
    vertex_count: int | None = None
    arcs: list[tuple[str, int, int]] = []
    tau: dict[str, Fraction] = {}
    upsilon: dict[str, Fraction] = {}
    pairs: list[tuple[str, str, int]] = []

    for number, tokens in _logical_lines(text):
        keyword = tokens[0]
        if keyword == "digraph":
            if len(tokens) != 2:
                raise FileFormatError(number, "expected: digraph <name>")
            name = tokens[1]
        elif keyword == "vertices":
            if vertex_count is not None:
                raise FileFormatError(number, "duplicate vertices line")
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise FileFormatError(number, "expected: vertices <count>")
            vertex_count = int(tokens[1])
        elif keyword == "arc":
            if vertex_count is None:
                raise FileFormatError(number, "arc before vertices line")
            if len(tokens) < 4:
                raise FileFormatError(
                    number, "expected: arc <id> <tail> <head> [tau=<rat>] [upsilon=<rat>]"
                )
            arc_id = tokens[1]
            try:
                tail, head = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise FileFormatError(number, "arc endpoints must be integers") from None
            for extra in tokens[4:]:
                key, sep, value = extra.partition("=")
                if not sep or key not in ("tau", "upsilon"):
                    raise FileFormatError(
                        number, f"unknown arc attribute {extra!r} (expected tau=/upsilon=)"
                    )
                try:
                    parsed = parse_rational(value)
                except ValueError as exc:
                    raise FileFormatError(number, str(exc)) from None
                (tau if key == "tau" else upsilon)[arc_id] = parsed
            arcs.append((arc_id, tail, head))
        elif keyword == "inverse":
            if len(tokens) != 3:
                raise FileFormatError(number, "expected: inverse <id> <id>")
            pairs.append((tokens[1], tokens[2], number))
        elif keyword in ("edge", "graph"):
            raise FileFormatError(number, f"{keyword!r} line is not allowed in a digraph file")
        else:
            raise FileFormatError(number, f"unknown directive {keyword!r}")

    if vertex_count is None:
        if arcs or pairs:
            raise FileFormatError(1, "missing vertices line")
        vertex_count = 0

    try:
        dg = Digraph(vertex_count, arcs)
    except ValueError as exc:
        raise FileFormatError(1, str(exc)) from None

    user_pairs: list[tuple[str, str]] = []
    for a, b, number in pairs:
        for arc_id in (a, b):
            if not dg.has_arc(arc_id):
                raise FileFormatError(number, f"unknown arc id {arc_id!r}")
        arc_a, arc_b = dg.arc(a), dg.arc(b)
        if a == b:
            if not arc_a.is_loop:
                raise FileFormatError(number, "inverse must join opposite arcs")
        elif arc_a.is_loop or arc_b.is_loop or not (
            arc_a.tail == arc_b.head and arc_a.head == arc_b.tail
        ):
            raise FileFormatError(number, "inverse must join opposite arcs")
        user_pairs.append((a, b))

    weights = WeightScheme(
        tau={a.id: tau.get(a.id, Fraction(1)) for a in dg.arcs},
        upsilon={a.id: upsilon.get(a.id, Fraction(1)) for a in dg.arcs},
    )
    return ParsedDigraph(name, dg, tuple(user_pairs), weights)


def parse_graph_text(text: str) -> tuple[str, UndirectedGraph]:
    """Parse an undirected-graph file (``edge`` lines)."""
    name = "graph"
    vertex_count: int | None = None
    edges: list[tuple[int, int]] = []

    for number, tokens in _logical_lines(text):
        keyword = tokens[0]
        if keyword in ("graph", "digraph"):
            if len(tokens) != 2:
                raise FileFormatError(number, f"expected: {keyword} <name>")
            name = tokens[1]
        elif keyword == "vertices":
            if vertex_count is not None:
                raise FileFormatError(number, "duplicate vertices line")
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise FileFormatError(number, "expected: vertices <count>")
            vertex_count = int(tokens[1])
        elif keyword == "edge":
            if vertex_count is None:
                raise FileFormatError(number, "edge before vertices line")
            if len(tokens) != 3:
                raise FileFormatError(number, "expected: edge <u> <v>")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise FileFormatError(number, "edge endpoints must be integers") from None
            edges.append((u, v))
        elif keyword in ("arc", "inverse"):
            raise FileFormatError(
                number, f"{keyword!r} line is not allowed in an undirected-graph file"
            )
        else:
            raise FileFormatError(number, f"unknown directive {keyword!r}")

    if vertex_count is None:
        if edges:
            raise FileFormatError(1, "missing vertices line")
        vertex_count = 0
    try:
        return name, UndirectedGraph(vertex_count, edges)
    except ValueError as exc:
        raise FileFormatError(1, str(exc)) from None


def render_digraph_file(
    name: str,
    dg: Digraph,
    pairing: InversePairing,
    weights: WeightScheme | None = None,
) -> str:
    """Serialize a digraph (and its non-loop inverse pairs) in file format."""
    lines = [f"digraph {name}", f"vertices {dg.vertex_count}"]
    for arc in dg.arcs:
        line = f"arc {arc.id} {arc.tail} {arc.head}"
        if weights is not None:
            tau = weights.tau_of(arc.id)
            ups = weights.upsilon_of(arc.id)
            if tau != 1:
                line += f" tau={tau}"
            if ups != 1:
                line += f" upsilon={ups}"
        lines.append(line)
    emitted: set[str] = set()
    for arc in dg.arcs:
        partner = pairing.inverse_of(arc.id)
        if partner is None or partner == arc.id or arc.id in emitted:
            continue
        emitted.add(arc.id)
        emitted.add(partner)
        lines.append(f"inverse {arc.id} {partner}")
    return "\n".join(lines) + "\n"
