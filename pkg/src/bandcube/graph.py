"""Graphs, linear orderings and their text formats.

Vertices are the integers ``1..n``.  Edges are stored as ``(u, v)`` pairs
with ``u < v``.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ParseError, RangeError, ValidationError


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..n``."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValidationError(f"vertex count must be a positive integer, got {self.n!r}")
        normalized = set()
        for e in self.edges:
            u, v = e
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise RangeError(f"edge ({u},{v}) has an endpoint outside 1..{self.n}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            normalized.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adjacency(self) -> tuple:
        """``adjacency[u]`` is the neighbour set of ``u``; index 0 is unused."""
        adj = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    def neighbors(self, u: int) -> frozenset:
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    @property
    def max_degree(self) -> int:
        return max(len(s) for s in self.adjacency[1:])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __len__(self):
        return self.n


@dataclass(frozen=True)
class LinearOrdering:
    """Bijection between vertices and positions ``1..n``.

    ``order[j - 1]`` is the vertex at position ``j``.
    """

    order: tuple

    def __post_init__(self):
        order = tuple(self.order)
        n = len(order)
        if n == 0:
            raise ValidationError("ordering is empty")
        if sorted(order) != list(range(1, n + 1)):
            raise ValidationError(f"ordering is not a bijection onto vertices 1..{n}")
        object.__setattr__(self, "order", order)

    @classmethod
    def identity(cls, n: int) -> "LinearOrdering":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_positions(cls, positions: dict) -> "LinearOrdering":
        """Build from a ``vertex -> position`` map."""
        n = len(positions)
        order = [0] * n
        for v, p in positions.items():
            if not 1 <= p <= n or order[p - 1]:
                raise ValidationError("positions do not form a bijection onto 1..n")
            order[p - 1] = v
        return cls(tuple(order))

    @property
    def n(self) -> int:
        return len(self.order)

    @cached_property
    def positions(self) -> tuple:
        """``positions[v]`` is the position of vertex ``v``; index 0 is unused."""
        pos = [0] * (len(self.order) + 1)
        for j, v in enumerate(self.order, start=1):
            pos[v] = j
        return tuple(pos)

    def position(self, v: int) -> int:
        return self.positions[v]

    def vertex_at(self, j: int) -> int:
        return self.order[j - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)

    def __len__(self):
        return len(self.order)


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of ``g``."""
    edges = frozenset(
        (u, v)
        for u in range(1, g.n + 1)
        for v in range(u + 1, g.n + 1)
        if v not in g.adjacency[u]
    )
    return Graph(g.n, edges)


def ordering_width(g: Graph, ordering: LinearOrdering) -> int:
    """Largest position gap over the edges of ``g`` (0 for an edgeless graph)."""
    if ordering.n != g.n:
        raise ValidationError(
            f"ordering covers {ordering.n} vertices but the graph has {g.n}"
        )
    pos = ordering.positions
    adj = g.adjacency
    best = 0
    # walk in ordering order: sequential access scales better than set order
    for j, v in enumerate(ordering.order, start=1):
        for w in adj[v]:
            if pos[w] - j > best:
                best = pos[w] - j
    return best


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document (``n <count>`` then ``u v`` lines)."""
    lines = _content_lines(text)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("missing header 'n <count>'", 1) from None
    if len(tokens) != 2 or tokens[0] != "n":
        raise ParseError("expected header 'n <count>'", lineno)
    n = _parse_int(tokens[1], lineno)
    if n < 1:
        raise ParseError(f"vertex count must be positive, got {n}", lineno)
    edges = set()
    for lineno, tokens in lines:
        if len(tokens) != 2:
            raise ParseError("expected an edge line 'u v'", lineno)
        u, v = (_parse_int(t, lineno) for t in tokens)
        if not (1 <= u <= n and 1 <= v <= n):
            raise RangeError(f"line {lineno}: endpoint outside 1..{n} in edge ({u},{v})")
        if u == v:
            raise ValidationError(f"line {lineno}: self-loop at vertex {u}")
        edges.add(_norm(u, v))
    return Graph(n, frozenset(edges))


def write_graph(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_ordering(text: str) -> LinearOrdering:
    """Parse ``order v_1 v_2 ... v_n``, optionally followed by ``width <w>``."""
    found = None
    for lineno, tokens in _content_lines(text):
        if tokens[0] == "width" and found is not None and len(tokens) == 2:
            _parse_int(tokens[1], lineno)
            continue
        if found is not None:
            raise ParseError("unexpected content after the order line", lineno)
        if tokens[0] != "order":
            raise ParseError("expected 'order v1 v2 ... vn'", lineno)
        found = tuple(_parse_int(t, lineno) for t in tokens[1:])
    if found is None:
        raise ParseError("missing order line", 1)
    return LinearOrdering(found)


def write_ordering(ordering: LinearOrdering) -> str:
    return "order " + " ".join(map(str, ordering.order)) + "\n"

