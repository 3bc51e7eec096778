"""Independent checks for representations and orderings.

Nothing here calls into the construction code: reconstruction reads layer
values only, and bandwidth is found by enumerating permutations.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .construction import CubeRepresentation, IndifferenceRepresentation
from .errors import SizeCapError, ValidationError
from .graph import Graph, LinearOrdering, ordering_width

BRUTE_FORCE_CAP = 9


def _scaled_layers(rep: IndifferenceRepresentation):
    """Per layer, integer values and an integer threshold on the same scale.

    ``|a/d - b/d| <= p/q``  iff  ``|a - b| * q <= p * d``.
    """
    n = rep.n
    out = []
    for layer in rep.layers:
        if layer.n != n:
            raise ValidationError(
                f"layer {layer.index} covers {layer.n} vertices, layer {rep.layers[0].index} covers {n}"
            )
        length = Fraction(layer.interval_length)
        q = length.denominator
        out.append(([x * q for x in layer.numerators], length.numerator * layer.denominator))
    return out


def realize_intersection(rep: IndifferenceRepresentation) -> Graph:
    """Graph whose edges are the pairs within interval length in every layer."""
    layers = _scaled_layers(rep)
    n = rep.n
    edges = set()
    for u in range(n):
        for v in range(u + 1, n):
            if all(abs(vals[u] - vals[v]) <= limit for vals, limit in layers):
                edges.add((u + 1, v + 1))
    return Graph(n, frozenset(edges))


def realize_cubes(cubes: CubeRepresentation) -> Graph:
    """Intersection graph of closed unit cubes given by their lower corners."""
    n = cubes.n
    edges = {
        (u + 1, v + 1)
        for u in range(n)
        for v in range(u + 1, n)
        if all(abs(a - b) <= 1 for a, b in zip(cubes.anchors[u], cubes.anchors[v]))
    }
    return Graph(n, frozenset(edges))


@dataclass
class VerificationReport:
    passed: bool
    missing_edges: list = field(default_factory=list)
    extra_edges: list = field(default_factory=list)
    per_layer_supergraph: list = field(default_factory=list)
    dims: int = 0
    width_checked: int = 0

    def to_text(self) -> str:
        def pairs(es):
            return " ".join(f"{u}-{v}" for u, v in es)

        lines = [
            f"passed {'true' if self.passed else 'false'}",
            f"dims {self.dims}",
            f"width_checked {self.width_checked}",
            "per_layer_supergraph " + " ".join("true" if ok else "false" for ok in self.per_layer_supergraph),
            f"missing_edges {len(self.missing_edges)} {pairs(self.missing_edges)}".rstrip(),
            f"extra_edges {len(self.extra_edges)} {pairs(self.extra_edges)}".rstrip(),
        ]
        return "\n".join(lines) + "\n"


def verify_representation(g: Graph, rep: IndifferenceRepresentation) -> VerificationReport:
    """Compare the reconstructed graph with ``g`` and check each layer is a supergraph."""
    if rep.n != g.n:
        return VerificationReport(
            passed=False,
            missing_edges=g.sorted_edges(),
            per_layer_supergraph=[False] * rep.dims,
            dims=rep.dims,
            width_checked=rep.width,
        )
    rebuilt = realize_intersection(rep)
    supergraph = [
        all(abs(vals[u - 1] - vals[v - 1]) <= limit for u, v in g.edges)
        for vals, limit in _scaled_layers(rep)
    ]
    missing = sorted(g.edges - rebuilt.edges)
    extra = sorted(rebuilt.edges - g.edges)
    if rep.ordering is not None and rep.ordering.n == g.n:
        width = ordering_width(g, rep.ordering)
    else:
        width = rep.width
    return VerificationReport(
        passed=not missing and not extra,
        missing_edges=missing,
        extra_edges=extra,
        per_layer_supergraph=supergraph,
        dims=rep.dims,
        width_checked=width,
    )


def brute_force_bandwidth(g: Graph, cap: int = BRUTE_FORCE_CAP) -> int:
    """Minimum width over all ``n!`` orderings."""
    if g.n > cap:
        raise SizeCapError(f"brute-force bandwidth is capped at {cap} vertices (graph has {g.n})")
    if not g.edges:
        return 0
    edges = [(u - 1, v - 1) for u, v in g.edges]
    best = g.n - 1
    for perm in itertools.permutations(range(g.n)):
        # perm[v] is the position of vertex v + 1
        w = max(abs(perm[u] - perm[v]) for u, v in edges)
        if w < best:
            best = w
    return best


def check_dimension_bounds(g: Graph, rep: IndifferenceRepresentation, claimed_bound: int) -> bool:
    """True iff ``rep`` is a verified representation of ``g`` with at most
    ``claimed_bound`` layers."""
    report = verify_representation(g, rep)
    if not report.passed:
        raise ValidationError("representation does not verify against the graph")
    return rep.dims <= claimed_bound


def betweenness_violations(g: Graph, ordering: LinearOrdering) -> list:
    """Triples ``(u, w, v)`` with ``u v`` an edge, ``w`` strictly between them
    in the ordering and adjacent to neither."""
    order = ordering.order
    pos = ordering.positions
    out = []
    for u, v in g.sorted_edges():
        lo, hi = sorted((pos[u], pos[v]))
        for j in range(lo + 1, hi):
            w = order[j - 1]
            if not g.has_edge(w, u) and not g.has_edge(w, v):
                out.append((u, w, v))
    return out


def corollary_bounds(strategy: str, max_degree: int) -> Optional[tuple[int, int]]:
    """``(width bound, dimension bound)`` for a structure-specific ordering."""
    d = max_degree
    if strategy == "circular-arc":
        return 2 * d, 2 * d + 1
    if strategy == "cocomparability":
        return 2 * d - 1, 2 * d
    if strategy == "atfree":
        return 3 * d - 2, 3 * d - 1
    return None
