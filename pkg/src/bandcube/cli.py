"""Command-line front end.

Exit status: 0 success, 1 verification or bound failure, 2 invalid input,
3 size cap exceeded.  Errors go to stderr as one line
``error <kind>: <message>``.
"""

import argparse
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import generators
from .bandwidth import exact_bandwidth, heuristic_ordering
from .construction import build_representation, parse_representation, to_cubes, write_cubes, write_representation
from .errors import BandcubeError, SizeCapError, ValidationError
from .graph import Graph, LinearOrdering, ordering_width, parse_graph, parse_ordering, write_graph, write_ordering
from .orderings import (
    arcs_to_graph,
    atfree_ordering,
    circular_arc_ordering,
    cocomparability_ordering,
    find_transitive_orientation,
    parse_arcs,
    parse_caterpillar,
    parse_orientation,
    write_arcs,
    write_caterpillar,
    write_orientation,
)
from .verify import corollary_bounds, verify_representation

COMMANDS = ("order", "construct", "verify", "pipeline", "bound", "gen")
STRATEGIES = ("exact", "heuristic", "file", "circular-arc", "cocomparability", "atfree")
GEN_KINDS = ("random", "path", "cycle", "complete", "star", "bipartite", "banded",
             "arcs", "cocomparability", "atfree")

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_SIZE = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    input: Optional[str] = None
    strategy: str = "heuristic"
    seed: int = 0
    output: Optional[str] = None
    cubes: bool = False
    cap: Optional[int] = None
    ordering: Optional[str] = None
    arcs: Optional[str] = None
    orientation: Optional[str] = None
    brute_force: bool = False
    caterpillar: Optional[str] = None
    representation: Optional[str] = None
    kind: Optional[str] = None
    n: int = 10
    density: float = 0.3
    b: int = 2
    aux_output: Optional[str] = None

    def check(self):
        if self.command not in COMMANDS:
            raise ValidationError(f"unknown command {self.command!r}")
        if self.command == "gen":
            if self.kind not in GEN_KINDS:
                raise ValidationError(f"unknown generator {self.kind!r}")
            if self.kind in ("cocomparability", "atfree") and not self.aux_output:
                raise ValidationError(f"gen {self.kind} needs --aux-output for its certificate")
            return
        if self.command == "verify":
            if not self.input or not self.representation:
                raise ValidationError("verify needs --input and --representation")
            return
        if self.strategy not in STRATEGIES:
            raise ValidationError(f"unknown strategy {self.strategy!r}")
        needs = {
            "file": ("ordering", self.ordering),
            "circular-arc": ("arcs", self.arcs),
            "atfree": ("caterpillar", self.caterpillar),
        }
        if self.strategy in needs and not needs[self.strategy][1]:
            raise ValidationError(f"strategy {self.strategy} needs --{needs[self.strategy][0]}")
        if self.strategy == "cocomparability" and not (self.orientation or self.brute_force):
            raise ValidationError("strategy cocomparability needs --orientation or --brute-force")
        if self.strategy != "circular-arc" and not self.input:
            raise ValidationError(f"{self.command} needs --input")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(config: RunConfig) -> Graph:
    if config.strategy == "circular-arc" and config.command != "verify":
        g = arcs_to_graph(parse_arcs(_read(config.arcs)))
        if config.input and parse_graph(_read(config.input)) != g:
            raise ValidationError("--input graph differs from the intersection graph of --arcs")
        return g
    return parse_graph(_read(config.input))


def _ordering(config: RunConfig, g: Graph) -> LinearOrdering:
    s = config.strategy
    if s == "exact":
        kw = {} if config.cap is None else {"limit": config.cap}
        return exact_bandwidth(g, **kw)[0]
    if s == "heuristic":
        return heuristic_ordering(g, config.seed)
    if s == "file":
        ordering = parse_ordering(_read(config.ordering))
        if ordering.n != g.n:
            raise ValidationError(f"ordering covers {ordering.n} vertices, graph has {g.n}")
        return ordering
    if s == "circular-arc":
        return circular_arc_ordering(parse_arcs(_read(config.arcs)))
    if s == "cocomparability":
        if config.orientation:
            o = parse_orientation(_read(config.orientation))
        else:
            kw = {} if config.cap is None else {"cap": config.cap}
            o = find_transitive_orientation(g, **kw)
            if o is None:
                raise ValidationError("complement has no transitive orientation (not co-comparability)")
        return cocomparability_ordering(g, o)
    return atfree_ordering(g, parse_caterpillar(_read(config.caterpillar)))


def _ordering_doc(g: Graph, ordering: LinearOrdering) -> str:
    return write_ordering(ordering) + f"width {ordering_width(g, ordering)}\n"


def _rep_doc(rep, cubes: bool) -> str:
    return write_cubes(to_cubes(rep)) if cubes else write_representation(rep)


def _generate(config: RunConfig) -> tuple[str, Optional[str]]:
    rng = random.Random(config.seed)
    n, kind = config.n, config.kind
    simple = {
        "path": lambda: generators.path(n),
        "cycle": lambda: generators.cycle(n),
        "complete": lambda: generators.complete(n),
        "star": lambda: generators.star(n),
        "bipartite": lambda: generators.complete_bipartite(n, config.b),
        "banded": lambda: generators.banded(n, config.b),
        "random": lambda: generators.random_graph(n, config.density, rng),
    }
    if kind in simple:
        return write_graph(simple[kind]()), None
    if kind == "arcs":
        return write_arcs(generators.random_arc_model(n, rng)), None
    if kind == "cocomparability":
        g, o = generators.random_cocomparability(n, config.density, rng)
        return write_graph(g), write_orientation(o)
    g, cat = generators.random_atfree_instance(n, config.density, rng)
    return write_graph(g), write_caterpillar(cat)


def run(config: RunConfig, stdout=None) -> int:
    """Execute one command; returns the exit status."""
    stdout = stdout if stdout is not None else sys.stdout
    config.check()

    def emit(text: str, path: Optional[str] = None):
        target = path if path is not None else config.output
        if target:
            Path(target).write_text(text, encoding="utf-8")
        else:
            stdout.write(text)

    if config.command == "gen":
        main_doc, aux_doc = _generate(config)
        emit(main_doc)
        if aux_doc is not None:
            Path(config.aux_output).write_text(aux_doc, encoding="utf-8")
        return EXIT_OK

    if config.command == "verify":
        g = parse_graph(_read(config.input))
        rep = parse_representation(_read(config.representation))
        report = verify_representation(g, rep)
        emit(report.to_text())
        return EXIT_OK if report.passed else EXIT_FAILED

    g = _load_graph(config)
    ordering = _ordering(config, g)
    if config.command == "order":
        emit(_ordering_doc(g, ordering))
        return EXIT_OK

    rep = build_representation(g, ordering)
    if config.command == "construct":
        emit(_rep_doc(rep, config.cubes))
        return EXIT_OK

    report = verify_representation(g, rep)
    parts = [_ordering_doc(g, ordering), _rep_doc(rep, config.cubes), report.to_text()]
    status = EXIT_OK if report.passed else EXIT_FAILED
    if config.command == "bound":
        lines, ok = _bound_lines(config.strategy, g, rep.width, rep.dims)
        parts.append(lines)
        if not ok:
            status = EXIT_FAILED
    emit("".join(parts))
    return status


def _bound_lines(strategy: str, g: Graph, width: int, dims: int) -> tuple[str, bool]:
    delta = g.max_degree
    lines = [f"strategy {strategy}", f"max_degree {delta}"]
    if not g.edges:
        lines.append(f"dims {dims}")
        lines.append("bound skipped: edgeless graph")
        return "\n".join(lines) + "\n", True
    bounds = corollary_bounds(strategy, delta)
    width_bound, dims_bound = bounds if bounds is not None else (width, width + 1)
    width_ok, dims_ok = width <= width_bound, dims <= dims_bound
    lines.append(f"width {width} <= {width_bound} {'ok' if width_ok else 'FAILED'}")
    lines.append(f"dims {dims} <= {dims_bound} {'ok' if dims_ok else 'FAILED'}")
    lines.append("bound holds" if width_ok and dims_ok else "bound violated")
    return "\n".join(lines) + "\n", width_ok and dims_ok


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bandcube",
        description="Unit-cube representations in width+1 dimensions from low-width vertex orderings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ordering=True):
        p.add_argument("--input", help="edge-list graph file")
        p.add_argument("--output", help="write the result here instead of stdout")
        p.add_argument("--seed", type=int, default=0)
        if ordering:
            p.add_argument("--strategy", choices=STRATEGIES, default="heuristic")
            p.add_argument("--cap", type=int, help="size cap for exact bandwidth / orientation search")
            p.add_argument("--ordering", help="ordering file (strategy file)")
            p.add_argument("--arcs", help="arc model file (strategy circular-arc)")
            p.add_argument("--orientation", help="orientation file of the complement (strategy cocomparability)")
            p.add_argument("--brute-force", action="store_true",
                           help="search for the orientation instead of reading one")
            p.add_argument("--caterpillar", help="spanning caterpillar file (strategy atfree)")
            p.add_argument("--cubes", action="store_true", help="emit cube anchors instead of layers")

    common(sub.add_parser("order", help="compute a linear ordering and its width"))
    common(sub.add_parser("construct", help="build the layered representation"))
    p = sub.add_parser("verify", help="check a representation against a graph")
    common(p, ordering=False)
    p.add_argument("--representation", required=True)
    common(sub.add_parser("pipeline", help="order, construct and verify"))
    common(sub.add_parser("bound", help="pipeline plus the dimension bound for the strategy"))

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("kind", choices=GEN_KINDS)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--density", type=float, default=0.3,
                   help="edge probability (random), DAG arc probability (cocomparability), "
                        "extra-edge probability (atfree)")
    p.add_argument("--b", type=int, default=2, help="band width (banded) or second side (bipartite)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.add_argument("--aux-output", help="certificate file (orientation or caterpillar)")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = RunConfig.__dataclass_fields__
    return RunConfig(**{k: v for k, v in vars(args).items() if k in fields})


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(config_from_args(args))
    except SizeCapError as exc:
        print(f"error {exc.kind}: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except BandcubeError as exc:
        print(f"error {exc.kind}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
