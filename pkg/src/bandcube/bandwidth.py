"""Orderings of small width: an exact branch-and-bound and a BFS heuristic."""

import random
from collections import deque

from .errors import SizeCapError
from .graph import Graph, LinearOrdering

DEFAULT_EXACT_CAP = 16


def _lower_bound(g: Graph) -> int:
    # a vertex of degree d needs ceil(d/2) slots on its busier side
    return max(1, (g.max_degree + 1) // 2)


def _search(g: Graph, k: int):
    """Find an ordering of width <= k, extending by smallest vertex id first.

    Only the last ``k`` placed vertices can still have unplaced neighbours,
    so ``(placed set, last k vertices)`` fully determines what remains
    feasible; failed states are memoized on that key.
    """
    n = g.n
    adj = g.adjacency
    order: list[int] = []
    pos = [0] * (n + 1)
    placed = [False] * (n + 1)
    unplaced_deg = [len(adj[v]) for v in range(n + 1)]
    dead = set()

    def feasible(p: int) -> bool:
        # p vertices placed.  Every unplaced neighbour of a placed vertex w
        # must land at position <= pos[w] + k; check those deadlines
        # greedily (earliest deadline first).
        deadlines = {}
        for j in range(max(0, p - k - 1), p):
            w = order[j]
            if unplaced_deg[w]:
                limit = pos[w] + k
                for u in adj[w]:
                    if not placed[u] and deadlines.get(u, n + 1) > limit:
                        deadlines[u] = limit
        for i, d in enumerate(sorted(deadlines.values())):
            if p + 1 + i > d:
                return False
        return True

    def extend(p: int, mask: int) -> bool:
        if p == n:
            return True
        key = (mask, tuple(order[max(0, p - k):]))
        if key in dead:
            return False
        here = p + 1
        for v in range(1, n + 1):
            if placed[v]:
                continue
            if any(placed[u] and here - pos[u] > k for u in adj[v]):
                continue
            placed[v] = True
            pos[v] = here
            order.append(v)
            for u in adj[v]:
                unplaced_deg[u] -= 1
            if feasible(here) and extend(here, mask | (1 << v)):
                return True
            for u in adj[v]:
                unplaced_deg[u] += 1
            order.pop()
            placed[v] = False
            pos[v] = 0
        dead.add(key)
        return False

    if extend(0, 0):
        return LinearOrdering(tuple(order))
    return None


def exact_bandwidth(g: Graph, limit: int = DEFAULT_EXACT_CAP) -> tuple[LinearOrdering, int]:
    """Return a minimum-width ordering of ``g`` and its width.

    Tries widths upward from a degree lower bound; the first width that
    admits a placement is the bandwidth.
    """
    if g.n > limit:
        raise SizeCapError(
            f"exact bandwidth is capped at {limit} vertices (graph has {g.n}); "
            "use heuristic_ordering instead"
        )
    if not g.edges:
        return LinearOrdering.identity(g.n), 0
    for k in range(_lower_bound(g), g.n):
        found = _search(g, k)
        if found is not None:
            return found, k
    raise AssertionError("unreachable: width n-1 always admits a placement")


def _bfs_levels(g: Graph, start: int) -> list[list[int]]:
    levels = [[start]]
    seen = {start}
    while True:
        nxt = []
        for u in levels[-1]:
            for w in g.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if not nxt:
            return levels
        levels.append(nxt)


def _pseudo_peripheral(g: Graph, start: int) -> int:
    v = start
    levels = _bfs_levels(g, v)
    while True:
        cand = min(levels[-1], key=lambda u: (g.degree(u), u))
        cand_levels = _bfs_levels(g, cand)
        if len(cand_levels) <= len(levels):
            return v
        v, levels = cand, cand_levels


def heuristic_ordering(g: Graph, seed: int = 0) -> LinearOrdering:
    """Breadth-first level ordering from a pseudo-peripheral vertex.

    Components are laid out one after another, in order of their smallest
    vertex.  The seed picks where the peripheral-vertex search starts in
    each component; neighbours are enqueued by (degree, id).
    """
    rng = random.Random(seed)
    visited = [False] * (g.n + 1)
    order = []
    for root in g.vertices:
        if visited[root]:
            continue
        component = sorted(w for level in _bfs_levels(g, root) for w in level)
        start = _pseudo_peripheral(g, rng.choice(component))
        visited[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            fresh = sorted(
                (w for w in g.adjacency[u] if not visited[w]),
                key=lambda w: (g.degree(w), w),
            )
            for w in fresh:
                visited[w] = True
                queue.append(w)
    return LinearOrdering(tuple(order))
