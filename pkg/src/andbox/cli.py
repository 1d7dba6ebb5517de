"""Command-line front end.

Subcommands: gen, realize, verify, check-order, recognize-and1,
recognize-cand1, to-boxes, to-triangles, glue, render.

Exit codes: 0 success or membership YES; 1 membership NO (a witness file
is written); 2 usage or format error; 3 search budget exhausted.  On
every non-error run stdout carries one line "verdict=<yes|no|exhausted>
time_ms=<t>".
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import fileio
from .boxes import to_corner_boxes, to_semisquares
from .constructors import (
    block_graph_cand1,
    cycle_cand1,
    glue_at_safe_vertex,
    glue_cycles_on_edge,
    interval_to_cand1,
    outerplanar_cand1,
    rdp_ordering,
)
from .families import (
    HGraphSpec,
    IntervalModel,
    OuterplanarModel,
    RootedPathModel,
    family_names,
    generate,
)
from .feasibility import (
    DEFAULT_CASE_BUDGET,
    DEFAULT_ORDERING_BUDGET,
    cand1_recognize,
)
from .graphs import GraphError
from .orders import (
    DEFAULT_NODE_BUDGET,
    OrderingError,
    and1_recognize,
    four_point_check,
    implicit_encode,
    realization_from_ordering,
)
from .realization import RealizationError, verify
from .svg import render_realization_svg


class UsageError(ValueError):
    pass


def _stem(path: str) -> str:
    return os.path.splitext(path)[0]


def _out(args, default: str) -> str:
    return args.output if args.output else default


def _witness(args, default: str) -> str:
    return args.witness_out if args.witness_out else default


def _cmd_gen(args) -> str:
    bundle = generate(args.family, args.params, seed=args.seed)
    fileio.save_graph(args.output, bundle.graph)
    if args.aux_out:
        aux = bundle.aux
        if isinstance(aux, IntervalModel):
            fileio.save_interval_model(args.aux_out, aux)
        elif isinstance(aux, OuterplanarModel):
            fileio.save_outerplanar_model(args.aux_out, aux)
        elif isinstance(aux, RootedPathModel):
            fileio.save_rooted_path_model(args.aux_out, aux)
        elif isinstance(aux, HGraphSpec) or aux is None:
            raise UsageError(
                f"family {args.family} has no writable auxiliary model"
            )
    return "yes"


def _cmd_realize(args) -> str:
    sources = sum(
        1 for s in (args.input, args.cycle, args.glued_cycles) if s is not None
    )
    if sources != 1:
        raise UsageError(
            "give exactly one of: an input model file, --cycle, --glued-cycles"
        )
    if args.input is None and not args.output:
        raise UsageError("-o is required when no input file names a default")

    if args.cycle is not None:
        eps = fileio.parse_rational(args.eps)
        r = cycle_cand1(args.cycle, eps, anchor=args.anchor)
        out = args.output
    elif args.glued_cycles is not None:
        n, m = args.glued_cycles
        r = glue_cycles_on_edge(n, m, shared=tuple(args.shared))
        out = args.output
    else:
        text = _read_input(args.input)
        kind = fileio.sniff_format(text)
        if kind == "interval":
            r = interval_to_cand1(fileio.loads_interval_model(text, args.input))
        elif kind == "outerplanar":
            r = outerplanar_cand1(
                fileio.loads_outerplanar_model(text, args.input)
            )
        elif kind == "rootedpath":
            model = fileio.loads_rooted_path_model(text, args.input)
            order = rdp_ordering(model)
            r = realization_from_ordering(model.intersection_graph(), order)
        elif kind == "graph":
            r = block_graph_cand1(fileio.loads_graph(text, args.input))
        else:
            raise UsageError(f"cannot realize a {kind} file")
        out = _out(args, _stem(args.input) + ".real")
    fileio.save_realization(out, r)
    return "yes"


def _read_input(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _cmd_verify(args) -> str:
    r = fileio.load_realization(args.realization)
    g = fileio.load_graph(args.graph)
    report = verify(r, g)
    if report.ok:
        return "yes"
    lines = [f"missing {u} {v}" for u, v in report.missing_edges]
    lines += [f"extra {u} {v}" for u, v in report.extra_edges]
    fileio.atomic_write_text(
        _witness(args, _stem(args.realization) + ".witness"),
        "\n".join(lines) + "\n",
    )
    return "no"


def _cmd_check_order(args) -> str:
    g = fileio.load_graph(args.graph)
    o = fileio.load_ordering(args.ordering)
    violation = four_point_check(g, o)
    if violation is None:
        if args.codes_out:
            fileio.save_implicit_codes(args.codes_out, implicit_encode(g, o))
        if args.realize_out:
            fileio.save_realization(
                args.realize_out, realization_from_ordering(g, o)
            )
        return "yes"
    fileio.atomic_write_text(
        _witness(args, _stem(args.ordering) + ".witness"),
        f"violation {violation.x} {violation.u} {violation.v} {violation.y}\n",
    )
    return "no"


def _cmd_recognize_and1(args) -> str:
    g = fileio.load_graph(args.graph)
    res = and1_recognize(g, budget=args.node_budget)
    if res.found:
        fileio.save_ordering(_out(args, _stem(args.graph) + ".order"), res.ordering)
        return "yes"
    if res.status == "not_member":
        fileio.atomic_write_text(
            _witness(args, _stem(args.graph) + ".witness"),
            "c no vertex ordering satisfies the four point condition\n"
            f"exhaustive nodes {res.nodes}\n",
        )
        return "no"
    return "exhausted"


def _cmd_recognize_cand1(args) -> str:
    g = fileio.load_graph(args.graph)
    res = cand1_recognize(
        g,
        ordering_budget=args.ordering_budget,
        case_budget=args.case_budget,
    )
    if res.found:
        fileio.save_realization(_out(args, _stem(args.graph) + ".real"), res.realization)
        return "yes"
    if res.status == "not_member":
        fileio.atomic_write_text(
            _witness(args, _stem(args.graph) + ".witness"),
            "c no point order admits a central realization\n"
            f"exhaustive orderings {res.orderings_tried}"
            f" cases {res.cases_solved}\n",
        )
        return "no"
    return "exhausted"


def _cmd_to_boxes(args) -> str:
    r = fileio.load_realization(args.realization)
    fileio.save_corner_boxes(
        _out(args, _stem(args.realization) + ".boxes"), to_corner_boxes(r)
    )
    return "yes"


def _cmd_to_triangles(args) -> str:
    r = fileio.load_realization(args.realization)
    fileio.save_semisquares(
        _out(args, _stem(args.realization) + ".tri"), to_semisquares(r)
    )
    return "yes"


def _cmd_glue(args) -> str:
    r1 = fileio.load_realization(args.real1)
    r2 = fileio.load_realization(args.real2)
    glued = glue_at_safe_vertex(r1, args.w1, r2, args.w2)
    fileio.save_realization(
        _out(args, _stem(args.real1) + "-glued.real"), glued
    )
    return "yes"


def _cmd_render(args) -> str:
    r = fileio.load_realization(args.realization)
    fileio.atomic_write_text(
        _out(args, _stem(args.realization) + ".svg"), render_realization_svg(r)
    )
    return "yes"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="andbox",
        description="box-and-representative-point graph model toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family graph (and aux model)")
    p.add_argument("--family", required=True, choices=family_names())
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--aux-out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser(
        "realize", help="build a central realization from a model file"
    )
    p.add_argument("input", nargs="?")
    p.add_argument("-o", "--output")
    p.add_argument("--cycle", type=int, help="realize a cycle of this size")
    p.add_argument("--eps", default="1/2", help="cycle slack, rational in (0,1)")
    p.add_argument("--anchor", type=int, default=1)
    p.add_argument(
        "--glued-cycles",
        nargs=2,
        type=int,
        metavar=("N", "M"),
        help="realize an n-cycle and an m-cycle sharing one edge",
    )
    p.add_argument(
        "--shared",
        nargs=2,
        type=int,
        default=(1, 2),
        metavar=("U", "V"),
        help="shared edge on the m-cycle (consecutive pair)",
    )
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("verify", help="check a realization against a graph")
    p.add_argument("realization")
    p.add_argument("graph")
    p.add_argument("--witness-out")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "check-order", help="test an ordering for the four point condition"
    )
    p.add_argument("graph")
    p.add_argument("ordering")
    p.add_argument("--witness-out")
    p.add_argument("--codes-out", help="write implicit rank codes on success")
    p.add_argument(
        "--realize-out", help="write the ordering's realization on success"
    )
    p.set_defaults(func=_cmd_check_order)

    p = sub.add_parser(
        "recognize-and1", help="search for a four-point-free ordering"
    )
    p.add_argument("graph")
    p.add_argument("-o", "--output")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--witness-out")
    p.set_defaults(func=_cmd_recognize_and1)

    p = sub.add_parser(
        "recognize-cand1", help="search for a central realization"
    )
    p.add_argument("graph")
    p.add_argument("-o", "--output")
    p.add_argument(
        "--ordering-budget", type=int, default=DEFAULT_ORDERING_BUDGET
    )
    p.add_argument("--case-budget", type=int, default=DEFAULT_CASE_BUDGET)
    p.add_argument("--witness-out")
    p.set_defaults(func=_cmd_recognize_cand1)

    p = sub.add_parser("to-boxes", help="corner boxes of a realization")
    p.add_argument("realization")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_to_boxes)

    p = sub.add_parser(
        "to-triangles", help="semi-squares of a central realization"
    )
    p.add_argument("realization")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_to_triangles)

    p = sub.add_parser("glue", help="glue two realizations at a safe vertex")
    p.add_argument("real1")
    p.add_argument("w1", type=int)
    p.add_argument("real2")
    p.add_argument("w2", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_glue)

    p = sub.add_parser("render", help="two-panel SVG of a realization")
    p.add_argument("realization")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    started = time.perf_counter()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        verdict = args.func(args)
    except (
        UsageError,
        GraphError,
        OrderingError,
        RealizationError,
        fileio.FileFormatError,
        OSError,
        ValueError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    print(f"verdict={verdict} time_ms={elapsed_ms}")
    return {"yes": 0, "no": 1, "exhausted": 3}[verdict]


if __name__ == "__main__":
    sys.exit(main())
