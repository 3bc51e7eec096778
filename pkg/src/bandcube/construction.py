"""Unit-cube representations in ``b + 1`` dimensions from a width-``b`` ordering.

Layer 0 is an interval-length-``b`` indifference supergraph in which
vertices ``b`` positions apart are pushed apart by ``1/n**2`` unless they
are adjacent.  Layers ``1..b`` cut the ordering into blocks of ``b``
consecutive vertices (block starts offset by the layer index) and give
each block start a value 3 below the block members it is not adjacent to.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ParseError, ValidationError
from .graph import Graph, LinearOrdering, ordering_width


@dataclass(frozen=True, eq=False)
class Layer:
    """One unit interval representation with a given interval length.

    ``numerators[v - 1] / denominator`` is the position of vertex ``v``;
    ``u`` and ``v`` are adjacent in the layer iff their positions differ by
    at most ``interval_length``.
    """

    index: int
    numerators: tuple
    denominator: int
    interval_length: Fraction

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValidationError("layer denominator must be positive")
        object.__setattr__(self, "interval_length", Fraction(self.interval_length))
        if self.interval_length < 0:
            raise ValidationError("interval length must be nonnegative")

    @classmethod
    def from_values(cls, index: int, values, interval_length) -> "Layer":
        """Build from arbitrary rationals (one per vertex, in id order)."""
        values = [Fraction(x) for x in values]
        den = math.lcm(*(x.denominator for x in values)) if values else 1
        return cls(index, tuple(x.numerator * (den // x.denominator) for x in values), den,
                   Fraction(interval_length))

    @property
    def n(self) -> int:
        return len(self.numerators)

    def __eq__(self, other):
        if not isinstance(other, Layer):
            return NotImplemented
        return (self.index, self.interval_length, self.values) == (
            other.index, other.interval_length, other.values)

    def __hash__(self):
        return hash((self.index, self.interval_length, self.values))

    def value(self, v: int) -> Fraction:
        return Fraction(self.numerators[v - 1], self.denominator)

    @property
    def values(self) -> tuple:
        return tuple(Fraction(x, self.denominator) for x in self.numerators)

    def adjacent(self, u: int, v: int) -> bool:
        gap = abs(self.numerators[u - 1] - self.numerators[v - 1])
        length = self.interval_length
        return gap * length.denominator <= length.numerator * self.denominator


@dataclass(frozen=True)
class IndifferenceRepresentation:
    """Layers whose adjacency relations intersect to the source graph.

    ``ordering`` may be absent for hand-built representations; ``width``
    then records ``len(layers) - 1``.
    """

    layers: tuple
    ordering: Optional[LinearOrdering]
    width: int

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        if not self.layers:
            raise ValidationError("a representation needs at least one layer")

    @classmethod
    def from_layers(cls, layers) -> "IndifferenceRepresentation":
        layers = tuple(layers)
        return cls(layers, None, len(layers) - 1)

    @property
    def n(self) -> int:
        return self.layers[0].n

    @property
    def dims(self) -> int:
        return len(self.layers)

    def without_layer(self, index: int) -> "IndifferenceRepresentation":
        """Copy with the layer whose ``index`` field equals ``index`` removed."""
        kept = tuple(layer for layer in self.layers if layer.index != index)
        if len(kept) == len(self.layers):
            raise ValidationError(f"no layer with index {index}")
        return IndifferenceRepresentation(kept, self.ordering, self.width)


@dataclass(frozen=True)
class CubeRepresentation:
    """``anchors[v - 1]`` is the lower corner of the unit cube of ``v``."""

    k: int
    anchors: tuple

    @property
    def n(self) -> int:
        return len(self.anchors)

    def intersect(self, u: int, v: int) -> bool:
        a, b = self.anchors[u - 1], self.anchors[v - 1]
        return all(abs(x - y) <= 1 for x, y in zip(a, b))


def layer_base(g: Graph, ordering: LinearOrdering, *, width: Optional[int] = None) -> Layer:
    """Layer 0: interval length ``b``, positions ``j + m/n**2``.

    The vertex at position ``j <= b`` sits at ``j``; later vertices sit
    exactly ``b`` after the vertex ``b`` positions earlier when the two are
    adjacent, and ``b + 1/n**2`` after it otherwise.
    """
    b = width if width is not None else ordering_width(g, ordering)
    if b == 0:
        raise ValidationError("layer 0 is undefined for width 0 (edgeless graph)")
    n = g.n
    den = n * n
    step = b * den
    adj = g.adjacency
    order = ordering.order
    by_pos = [0] * n
    for j in range(min(b, n)):
        by_pos[j] = (j + 1) * den
    for j in range(b, n):
        prev = order[j - b]
        by_pos[j] = by_pos[j - b] + step + (0 if prev in adj[order[j]] else 1)
    nums = [0] * n
    for j, v in enumerate(order):
        nums[v - 1] = by_pos[j]
    return Layer(0, tuple(nums), den, Fraction(b))


def layer_block(g: Graph, ordering: LinearOrdering, i: int, *, width: Optional[int] = None) -> Layer:
    """Layer ``i`` (``1 <= i <= b``), interval length 2, integer positions.

    Vertices before position ``i`` sit at 2.  From position ``i`` on, block
    ``t`` holds positions ``i + b*t .. i + b*(t+1) - 1``; its first vertex
    sits at ``t``, members adjacent to it at ``t + 2`` and the rest at
    ``t + 3``.
    """
    b = width if width is not None else ordering_width(g, ordering)
    if not 1 <= i <= b:
        raise ValidationError(f"layer index {i} outside 1..{b}")
    n = g.n
    adj = g.adjacency
    order = ordering.order
    nums = [0] * n
    for j in range(i - 1):
        nums[order[j] - 1] = 2
    t = 0
    for start in range(i - 1, n, b):
        s = order[start]
        nums[s - 1] = t
        near = adj[s]
        for j in range(start + 1, min(start + b, n)):
            u = order[j]
            nums[u - 1] = t + 2 if u in near else t + 3
        t += 1
    return Layer(i, tuple(nums), 1, Fraction(2))


def _edgeless_layer(n: int, ordering: LinearOrdering) -> Layer:
    nums = [0] * n
    for j, v in enumerate(ordering.order, start=1):
        nums[v - 1] = 2 * j
    return Layer(0, tuple(nums), 1, Fraction(1))


def build_representation(g: Graph, ordering: LinearOrdering) -> IndifferenceRepresentation:
    """Build layers ``0..b`` for an ordering of width ``b``.

    An edgeless graph (width 0) gets a single layer of pairwise disjoint
    unit intervals.
    """
    b = ordering_width(g, ordering)
    if b == 0:
        return IndifferenceRepresentation((_edgeless_layer(g.n, ordering),), ordering, 0)
    layers = [layer_base(g, ordering, width=b)]
    layers.extend(layer_block(g, ordering, i, width=b) for i in range(1, b + 1))
    return IndifferenceRepresentation(tuple(layers), ordering, b)


def to_cubes(rep: IndifferenceRepresentation) -> CubeRepresentation:
    """Scale every layer to interval length 1; one dimension per layer."""
    columns = []
    for layer in rep.layers:
        if layer.interval_length == 0:
            raise ValidationError(f"layer {layer.index} has interval length 0")
        scale = layer.interval_length * layer.denominator
        columns.append([Fraction(x) / scale for x in layer.numerators])
    anchors = tuple(tuple(col[v] for col in columns) for v in range(rep.n))
    return CubeRepresentation(len(columns), anchors)


def _fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def write_representation(rep: IndifferenceRepresentation) -> str:
    lines = [f"representation n {rep.n} width {rep.width} layers {rep.dims}"]
    if rep.ordering is not None:
        lines.append("order " + " ".join(map(str, rep.ordering.order)))
    for layer in rep.layers:
        lines.append(f"layer {layer.index} length {_fmt(layer.interval_length)}")
        den = layer.denominator
        for v, num in enumerate(layer.numerators, start=1):
            lines.append(f"v {v} {_fmt(Fraction(num, den))}")
    return "\n".join(lines) + "\n"


def _parse_fraction(token: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected a rational p/q, got {token!r}", lineno) from None


def parse_representation(text: str) -> IndifferenceRepresentation:
    """Inverse of :func:`write_representation`."""
    header = None
    ordering = None
    layers = []
    current = None  # (index, length, {vertex: value})

    def close(lineno):
        if current is None:
            return
        index, length, values = current
        if sorted(values) != list(range(1, n + 1)):
            raise ParseError(f"layer {index} does not list every vertex 1..{n} once", lineno)
        layers.append(Layer.from_values(index, [values[v] for v in range(1, n + 1)], length))

    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if header is None:
            if len(tok) != 7 or tok[0] != "representation" or tok[1] != "n" or tok[3] != "width" \
                    or tok[5] != "layers":
                raise ParseError("expected 'representation n <n> width <b> layers <k>'", lineno)
            try:
                header = (int(tok[2]), int(tok[4]), int(tok[6]))
            except ValueError:
                raise ParseError("non-integer header field", lineno) from None
            n = header[0]
            continue
        if tok[0] == "order":
            if layers or current is not None or ordering is not None:
                raise ParseError("order line must precede the layers", lineno)
            try:
                ordering = LinearOrdering(tuple(int(t) for t in tok[1:]))
            except ValueError:
                raise ParseError("non-integer vertex in order line", lineno) from None
        elif tok[0] == "layer":
            if len(tok) != 4 or tok[2] != "length":
                raise ParseError("expected 'layer <i> length <p>/<q>'", lineno)
            close(lineno)
            try:
                index = int(tok[1])
            except ValueError:
                raise ParseError("non-integer layer index", lineno) from None
            current = (index, _parse_fraction(tok[3], lineno), {})
        elif tok[0] == "v":
            if current is None or len(tok) != 3:
                raise ParseError("expected 'v <vertex> <p>/<q>' inside a layer", lineno)
            try:
                v = int(tok[1])
            except ValueError:
                raise ParseError("non-integer vertex id", lineno) from None
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} outside 1..{n}", lineno)
            if v in current[2]:
                raise ParseError(f"vertex {v} listed twice in layer {current[0]}", lineno)
            current[2][v] = _parse_fraction(tok[2], lineno)
        else:
            raise ParseError(f"unexpected line starting with {tok[0]!r}", lineno)
    if header is None:
        raise ParseError("missing representation header", max(lineno, 1))
    close(lineno)
    n, width, count = header
    if len(layers) != count:
        raise ParseError(f"header announces {count} layers, found {len(layers)}", lineno)
    if ordering is not None and ordering.n != n:
        raise ParseError("order line does not cover vertices 1..n", lineno)
    return IndifferenceRepresentation(tuple(layers), ordering, width)


def write_cubes(cubes: CubeRepresentation) -> str:
    lines = [f"cubes n {cubes.n} k {cubes.k}"]
    for v, anchor in enumerate(cubes.anchors, start=1):
        lines.append(f"v {v} " + " ".join(_fmt(x) for x in anchor))
    return "\n".join(lines) + "\n"
