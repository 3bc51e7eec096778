"""Cube representations of graphs in width+1 dimensions from vertex orderings."""

from .bandwidth import exact_bandwidth, heuristic_ordering
from .construction import (
    CubeRepresentation,
    IndifferenceRepresentation,
    Layer,
    build_representation,
    layer_base,
    layer_block,
    to_cubes,
)
from .errors import BandcubeError, ParseError, RangeError, SizeCapError, ValidationError
from .graph import Graph, LinearOrdering, complement, ordering_width, parse_graph
from .orderings import (
    ArcModel,
    Caterpillar,
    Orientation,
    arcs_to_graph,
    atfree_ordering,
    circular_arc_ordering,
    cocomparability_ordering,
    find_transitive_orientation,
    validate_caterpillar,
)
from .verify import (
    VerificationReport,
    brute_force_bandwidth,
    check_dimension_bounds,
    realize_intersection,
    verify_representation,
)

__version__ = "0.1.0"
