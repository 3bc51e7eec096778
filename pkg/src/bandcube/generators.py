"""Random and structured instance families.

Every generator takes a ``random.Random`` so output depends only on the
seed.
"""

import random

from .errors import ValidationError
from .graph import Graph, complement
from .orderings import ArcModel, Caterpillar, Orientation


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValidationError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def star(n: int) -> Graph:
    """``K_{1,n-1}`` with centre 1."""
    return Graph.from_edges(n, [(1, v) for v in range(2, n + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(
        a + b, [(u, v) for u in range(1, a + 1) for v in range(a + 1, a + b + 1)]
    )


def banded(n: int, b: int) -> Graph:
    """Every pair at most ``b`` apart in the identity ordering."""
    return Graph.from_edges(
        n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, min(u + b, n) + 1)]
    )


def random_graph(n: int, density: float, rng: random.Random) -> Graph:
    return Graph.from_edges(
        n,
        [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < density],
    )


def random_arc_model(n: int, rng: random.Random) -> ArcModel:
    """``n >= 2`` arcs with distinct endpoints on a circle of ``2n`` points."""
    if n < 2:
        raise ValidationError("need at least 2 arcs (one arc on 2 points covers the circle)")
    m = 2 * n
    while True:
        points = list(range(m))
        rng.shuffle(points)
        arcs = [(points[2 * i], points[2 * i + 1]) for i in range(n)]
        # tail right behind head would cover every point
        if all((t - h) % m != m - 1 for h, t in arcs):
            return ArcModel(m, tuple(arcs))


def random_cocomparability(n: int, p: float, rng: random.Random) -> tuple[Graph, Orientation]:
    """Complement of a transitively closed random DAG, with the DAG as orientation.

    Draws again while the complement is edgeless (the DAG closed to a total
    order), so ``n >= 2`` always yields at least one edge.
    """
    if n < 2:
        raise ValidationError("need at least 2 vertices for a co-comparability instance")
    while True:
        rank = list(range(1, n + 1))
        rng.shuffle(rank)
        succ = {v: set() for v in rank}
        for i, u in enumerate(rank):
            for v in rank[i + 1:]:
                if rng.random() < p:
                    succ[u].add(v)
        for u in reversed(rank):
            for v in list(succ[u]):
                succ[u] |= succ[v]
        arcs = frozenset((u, v) for u in succ for v in succ[u])
        g = complement(Graph.from_edges(n, arcs))
        if g.edges:
            return g, Orientation(arcs)


def random_caterpillar(n: int, rng: random.Random, spine_len: int | None = None) -> Caterpillar:
    """Caterpillar on a random relabelling of ``1..n``."""
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    k = spine_len if spine_len is not None else rng.randint(1, max(1, n // 2))
    spine = labels[:k]
    leaves = [[] for _ in range(k)]
    for v in labels[k:]:
        leaves[rng.randrange(k)].append(v)
    return Caterpillar(tuple(spine), tuple(tuple(s) for s in leaves))


def random_atfree_instance(n: int, extra: float, rng: random.Random) -> tuple[Graph, Caterpillar]:
    """Caterpillar plus random extra edges between vertices at tree distance
    at most 4 (distance exactly 4 only between tree leaves)."""
    cat = random_caterpillar(n, rng)
    tree = cat.tree_edges()
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in tree:
        adj[u].add(v)
        adj[v].add(u)
    edges = set((min(u, v), max(u, v)) for u, v in tree)
    for u in range(1, n + 1):
        dist = {u: 0}
        frontier = [u]
        for d in range(1, 5):
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in dist:
                        dist[y] = d
                        nxt.append(y)
            frontier = nxt
        for v, d in sorted(dist.items()):
            if v <= u or d < 2:
                continue
            if d == 4 and (len(adj[u]) != 1 or len(adj[v]) != 1):
                continue
            if rng.random() < extra:
                edges.add((u, v))
    return Graph.from_edges(n, edges), cat
