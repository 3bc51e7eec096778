"""Low-width orderings for circular-arc, co-comparability and AT-free graphs.

Each ordering is built from a structural certificate supplied by the
caller: an arc model, a transitive orientation of the complement, or a
spanning caterpillar.
"""

import heapq
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import ParseError, RangeError, SizeCapError, ValidationError
from .graph import Graph, LinearOrdering, complement

DEFAULT_ORIENTATION_CAP = 20


# -- circular-arc graphs ------------------------------------------------------


@dataclass(frozen=True)
class ArcModel:
    """Arcs on a discrete circle with points ``0..circumference-1``.

    ``arcs[u - 1] = (head, tail)``; the arc of ``u`` covers the clockwise
    walk from ``head`` to ``tail``, both ends included.
    """

    circumference: int
    arcs: tuple

    def __post_init__(self):
        arcs = tuple(tuple(a) for a in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        m = self.circumference
        if m < 1:
            raise ValidationError("circumference must be positive")
        if not arcs:
            raise ValidationError("arc model has no arcs")
        seen = set()
        for u, (h, t) in enumerate(arcs, start=1):
            for p in (h, t):
                if not 0 <= p < m:
                    raise RangeError(f"arc {u}: endpoint {p} outside 0..{m - 1}")
                if p in seen:
                    raise ValidationError(f"arc {u}: endpoint {p} is shared with another arc")
                seen.add(p)
            if h == t:
                raise ValidationError(f"arc {u}: head and tail coincide")
            if (t - h) % m == m - 1:
                raise ValidationError(f"arc {u} covers the whole circle")

    @property
    def n(self) -> int:
        return len(self.arcs)

    def covers(self, u: int, p: int) -> bool:
        h, t = self.arcs[u - 1]
        return (p - h) % self.circumference <= (t - h) % self.circumference


def arcs_to_graph(model: ArcModel) -> Graph:
    """Intersection graph of the arcs.

    Two arcs meet iff one of them contains the head of the other.
    """
    edges = set()
    for u in range(1, model.n + 1):
        for v in range(u + 1, model.n + 1):
            if model.covers(u, model.arcs[v - 1][0]) or model.covers(v, model.arcs[u - 1][0]):
                edges.add((u, v))
    return Graph(model.n, frozenset(edges))


def head_traversal(model: ArcModel) -> list[int]:
    """Vertices in clockwise order of their heads, from the smallest head."""
    return sorted(range(1, model.n + 1), key=lambda u: (model.arcs[u - 1][0], u))


def fold_position(j: int, n: int) -> int:
    """Position of the ``j``-th vertex of the head traversal (1-based)."""
    return 2 * j if j <= n // 2 else 2 * (n - j) + 1


def circular_arc_ordering(model: ArcModel) -> LinearOrdering:
    """Fold the head traversal: the first half takes even positions going
    up, the second half takes odd positions coming back down."""
    n = model.n
    traversal = head_traversal(model)
    return LinearOrdering.from_positions(
        {v: fold_position(j, n) for j, v in enumerate(traversal, start=1)}
    )


def respace_arcs(circumference, arcs) -> ArcModel:
    """Move arbitrary (possibly degenerate) arcs onto points ``0..2n-1``.

    ``arcs`` holds ``(head, tail)`` pairs of reals in ``[0, circumference)``.
    The cyclic order of endpoints is kept; at a shared point heads come
    before tails, so arcs that touch keep intersecting.  Arcs covering the
    whole circle are rejected.
    """
    circumference = Fraction(circumference)
    ends = []
    for u, (h, t) in enumerate(arcs, start=1):
        h, t = Fraction(h), Fraction(t)
        if not (0 <= h < circumference and 0 <= t < circumference):
            raise RangeError(f"arc {u}: endpoint outside [0, {circumference})")
        ends.append((h, 0, u))
        if t == h:
            # single-point arc: keep the tail just after its own head
            ends.append((h, 1, u))
        else:
            ends.append((t, 1, u))
    new = {}
    for slot, (_, kind, u) in enumerate(sorted(ends)):
        new.setdefault(u, [None, None])[kind] = slot
    model_arcs = tuple(tuple(new[u]) for u in range(1, len(arcs) + 1))
    return ArcModel(2 * len(arcs), model_arcs)


def parse_arcs(text: str) -> ArcModel:
    """Parse ``arcs n m`` followed by ``u h t`` lines."""
    header = None
    arcs = {}
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        try:
            if header is None:
                if len(tok) != 3 or tok[0] != "arcs":
                    raise ParseError("expected header 'arcs <n> <m>'", lineno)
                header = (int(tok[1]), int(tok[2]))
                continue
            if len(tok) != 3:
                raise ParseError("expected an arc line 'u h t'", lineno)
            u, h, t = (int(x) for x in tok)
        except ValueError:
            raise ParseError("expected integers", lineno) from None
        if not 1 <= u <= header[0]:
            raise RangeError(f"line {lineno}: arc id {u} outside 1..{header[0]}")
        if u in arcs:
            raise ParseError(f"arc {u} listed twice", lineno)
        arcs[u] = (h, t)
    if header is None:
        raise ParseError("missing header 'arcs <n> <m>'", max(lineno, 1))
    n, m = header
    if len(arcs) != n:
        raise ParseError(f"header announces {n} arcs, found {len(arcs)}", lineno)
    return ArcModel(m, tuple(arcs[u] for u in range(1, n + 1)))


def write_arcs(model: ArcModel) -> str:
    lines = [f"arcs {model.n} {model.circumference}"]
    lines.extend(f"{u} {h} {t}" for u, (h, t) in enumerate(model.arcs, start=1))
    return "\n".join(lines) + "\n"


# -- co-comparability graphs --------------------------------------------------


@dataclass(frozen=True)
class Orientation:
    """Directed pairs ``(u, v)`` meaning ``u`` precedes ``v``."""

    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "arcs", frozenset(tuple(a) for a in self.arcs))

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)


def check_orientation(host: Graph, o: Orientation) -> list[str]:
    """Problems that keep ``o`` from being a transitive orientation of ``host``."""
    problems = []
    undirected = set()
    for u, v in sorted(o.arcs):
        in_range = 1 <= u <= host.n and 1 <= v <= host.n and u != v
        if not in_range or not host.has_edge(u, v):
            problems.append(f"{u} < {v} is not an edge of the oriented graph")
            continue
        if (v, u) in o.arcs:
            if u < v:
                problems.append(f"both {u} < {v} and {v} < {u} are present")
            continue
        undirected.add((min(u, v), max(u, v)))
    for u, v in host.sorted_edges():
        if (u, v) not in undirected and (v, u) not in o.arcs:
            problems.append(f"edge ({u},{v}) is not oriented")
    if problems:
        return problems
    succ = {}
    for u, v in o.arcs:
        succ.setdefault(u, set()).add(v)
    for u, v in sorted(o.arcs):
        for w in sorted(succ.get(v, ())):
            if (u, w) not in o.arcs:
                problems.append(f"{u} < {v} and {v} < {w} but not {u} < {w}")
    return problems


def topological_order(n: int, o: Orientation) -> Optional[list[int]]:
    """Kahn's algorithm taking the smallest available vertex; None on a cycle."""
    indeg = [0] * (n + 1)
    succ = [[] for _ in range(n + 1)]
    for u, v in o.arcs:
        succ[u].append(v)
        indeg[v] += 1
    heap = [v for v in range(1, n + 1) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    return order if len(order) == n else None


def cocomparability_ordering(g: Graph, o: Orientation) -> LinearOrdering:
    """Topological order of a transitive orientation of the complement of ``g``."""
    host = complement(g)
    problems = check_orientation(host, o)
    if problems:
        raise ValidationError("invalid orientation: " + "; ".join(problems[:5]))
    order = topological_order(g.n, o)
    if order is None:
        raise ValidationError("invalid orientation: it contains a directed cycle")
    return LinearOrdering(tuple(order))


def find_transitive_orientation(g: Graph, cap: int = DEFAULT_ORIENTATION_CAP) -> Optional[Orientation]:
    """Search for a transitive orientation of the complement of ``g``.

    Backtracks over edge directions (smaller endpoint first tried first);
    each choice is closed under the forcing rules

    * ``a<b``, ``b<c`` forces ``a<c`` (and fails if ``a, c`` are not adjacent);
    * ``a<b`` with ``c`` adjacent to ``b`` but not to ``a`` forces ``c<b``;
    * ``a<b`` with ``c`` adjacent to ``a`` but not to ``b`` forces ``a<c``.

    Returns None when no orientation exists.
    """
    host = complement(g)
    m = len(host.edges)
    if m > cap:
        raise SizeCapError(
            f"orientation search is capped at {cap} complement edges (found {m}); "
            "supply an orientation file instead"
        )
    adj = host.adjacency
    edges = host.sorted_edges()

    def close(assigned: dict, u: int, v: int) -> bool:
        # assigned maps (min, max) -> (tail, head)
        queue = deque([(u, v)])
        while queue:
            a, b = queue.popleft()
            key = (min(a, b), max(a, b))
            have = assigned.get(key)
            if have is not None:
                if have != (a, b):
                    return False
                continue
            if b not in adj[a]:
                return False
            assigned[key] = (a, b)
            for c in adj[b]:
                if c == a:
                    continue
                if c not in adj[a]:
                    queue.append((c, b))
                elif assigned.get((min(b, c), max(b, c))) == (b, c):
                    queue.append((a, c))
            for c in adj[a]:
                if c == b:
                    continue
                if c not in adj[b]:
                    queue.append((a, c))
                elif assigned.get((min(a, c), max(a, c))) == (c, a):
                    queue.append((c, b))
        return True

    def search(assigned: dict, i: int) -> Optional[dict]:
        while i < m and edges[i] in assigned:
            i += 1
        if i == m:
            return assigned
        u, v = edges[i]
        for a, b in ((u, v), (v, u)):
            trial = dict(assigned)
            if close(trial, a, b):
                found = search(trial, i + 1)
                if found is not None:
                    return found
        return None

    found = search({}, 0)
    if found is None:
        return None
    o = Orientation(frozenset(found.values()))
    if check_orientation(host, o) or topological_order(g.n, o) is None:
        raise AssertionError("forcing closure produced a non-transitive orientation")
    return o


def parse_orientation(text: str) -> Orientation:
    """Parse ``u < v`` lines."""
    arcs = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if len(tok) != 3 or tok[1] != "<":
            raise ParseError("expected 'u < v'", lineno)
        try:
            arcs.add((int(tok[0]), int(tok[2])))
        except ValueError:
            raise ParseError("expected integer vertex ids", lineno) from None
    return Orientation(frozenset(arcs))


def write_orientation(o: Orientation) -> str:
    return "".join(f"{u} < {v}\n" for u, v in o.sorted_arcs())


# -- AT-free graphs -----------------------------------------------------------


@dataclass(frozen=True)
class Caterpillar:
    """Spine ``p_1..p_k`` and, for each spine vertex, its pendant leaves."""

    spine: tuple
    leaf_sets: tuple

    def __post_init__(self):
        object.__setattr__(self, "spine", tuple(self.spine))
        object.__setattr__(self, "leaf_sets", tuple(tuple(sorted(s)) for s in self.leaf_sets))
        if len(self.leaf_sets) != len(self.spine):
            raise ValidationError("need exactly one leaf set per spine vertex")

    def tree_edges(self) -> list[tuple[int, int]]:
        edges = list(zip(self.spine, self.spine[1:]))
        for p, leaves in zip(self.spine, self.leaf_sets):
            edges.extend((p, x) for x in leaves)
        return edges

    def vertices(self) -> list[int]:
        out = list(self.spine)
        for leaves in self.leaf_sets:
            out.extend(leaves)
        return out


@dataclass
class CaterpillarReport:
    violations: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations


def _tree_distances(n: int, edges, source: int) -> list:
    adj = [[] for _ in range(n + 1)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    dist = [None] * (n + 1)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def validate_caterpillar(g: Graph, t: Caterpillar) -> CaterpillarReport:
    """Check that ``t`` is a spanning caterpillar of ``g`` with every edge of
    ``g`` at tree distance at most 4, and distance 4 only between leaves.

    A leaf is any vertex of tree degree 1, so a spine end without pendant
    leaves counts as one.
    """
    report = CaterpillarReport()
    bad = report.violations
    listed = t.vertices()
    if not t.spine:
        bad.append("spine is empty")
        return report
    for v in listed:
        if not 1 <= v <= g.n:
            bad.append(f"vertex {v} is outside 1..{g.n}")
    counts = {}
    for v in listed:
        counts[v] = counts.get(v, 0) + 1
    for v in sorted(counts):
        if counts[v] > 1:
            bad.append(f"vertex {v} appears {counts[v]} times in the caterpillar")
    missing = sorted(set(g.vertices) - set(counts))
    if missing:
        bad.append("caterpillar does not span vertices " + " ".join(map(str, missing)))
    if bad:
        return report
    tree = t.tree_edges()
    for u, v in tree:
        if not g.has_edge(u, v):
            bad.append(f"tree edge ({u},{v}) is not an edge of the graph")
    tree_deg = [0] * (g.n + 1)
    for u, v in tree:
        tree_deg[u] += 1
        tree_deg[v] += 1
    for u, v in g.sorted_edges():
        d = _tree_distances(g.n, tree, u)[v]
        if d > 4:
            bad.append(f"edge ({u},{v}) has tree distance {d} > 4")
        elif d == 4 and (tree_deg[u] != 1 or tree_deg[v] != 1):
            bad.append(f"edge ({u},{v}) has tree distance 4 but is not leaf-to-leaf")
    return report


def atfree_ordering(g: Graph, t: Caterpillar) -> LinearOrdering:
    """Leaves of ``p_1``, ``p_1``, leaves of ``p_2``, ``p_2``, and so on."""
    report = validate_caterpillar(g, t)
    if not report.valid:
        raise ValidationError("invalid caterpillar: " + "; ".join(report.violations[:5]))
    order = []
    for p, leaves in zip(t.spine, t.leaf_sets):
        order.extend(leaves)
        order.append(p)
    return LinearOrdering(tuple(order))


def parse_caterpillar(text: str) -> Caterpillar:
    """Parse ``spine p1 .. pk`` then one ``leaves p: l1 l2 ..`` line per spine vertex."""
    spine = None
    leaves = {}
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        try:
            if spine is None:
                if tok[0] != "spine" or len(tok) < 2:
                    raise ParseError("expected 'spine p1 ... pk'", lineno)
                spine = tuple(int(x) for x in tok[1:])
                continue
            if tok[0] != "leaves" or len(tok) < 2 or not tok[1].endswith(":"):
                raise ParseError("expected 'leaves <p>: l1 l2 ...'", lineno)
            p = int(tok[1][:-1])
            if p not in spine:
                raise ParseError(f"{p} is not a spine vertex", lineno)
            if p in leaves:
                raise ParseError(f"leaves of {p} listed twice", lineno)
            leaves[p] = tuple(int(x) for x in tok[2:])
        except ValueError:
            raise ParseError("expected integer vertex ids", lineno) from None
    if spine is None:
        raise ParseError("missing spine line", max(lineno, 1))
    return Caterpillar(spine, tuple(leaves.get(p, ()) for p in spine))


def write_caterpillar(t: Caterpillar) -> str:
    lines = ["spine " + " ".join(map(str, t.spine))]
    for p, leaves in zip(t.spine, t.leaf_sets):
        lines.append(f"leaves {p}: " + " ".join(map(str, leaves)) if leaves else f"leaves {p}:")
    return "\n".join(lines) + "\n"
