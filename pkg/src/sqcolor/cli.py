"""Command-line entry point.

Every command prints ``KEY=VALUE`` lines on stdout and exits with 0 (pass or
true), 1 (fail or false, with a witness record where one exists) or 2 (usage
or input error). Timing records are only added with ``--timing`` so that the
default output is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Sequence

from .choosability import greedy_order_certificate, is_f_choosable
from .configurations import catalog, check_strategy, get_configuration, verify_reducible
from .corpus import TASKS, RunReport, run_corpus
from .discharging import PREDICATES, apply_rules, audit, initial_charges, spacing_max_marks
from .embedding import find_planar_embedding
from .enumeration import FILTERS, enumerate_subcubic
from .errors import HypothesisViolated, SearchBudgetExceeded, SqColorError, TheoremContradiction
from .fileformat import GraphFile, read_graph_file, serialize_graph_file
from .graph import Graph, articulation_points, enumerate_cycles, girth, is_connected, square, triangles
from .listcolor import chromatic_number, solve_list_coloring


class UsageError(Exception):
    pass


def _fmt_lists(lists) -> str:
    return ";".join(",".join(map(str, sorted(lst))) for lst in lists)


def _fmt_edges(g: Graph) -> str:
    return " ".join(f"{u}-{v}" for u, v in sorted(g.edges))


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None


def _load(args) -> GraphFile:
    return read_graph_file(args.graph)


def _target(args) -> Graph:
    g = _load(args).graph
    return square(g) if getattr(args, "square", False) else g


def _embedding(gf: GraphFile):
    if gf.embedding is not None:
        return gf.embedding
    e = find_planar_embedding(gf.graph)
    if e is None:
        raise UsageError("graph has no planar rotation system")
    return e


# commands -------------------------------------------------------------------

def cmd_square(args, rep: RunReport) -> None:
    g = _load(args).graph
    sq = square(g)
    rep.add("n", sq.n)
    rep.add("m", sq.m)
    rep.add("edges", _fmt_edges(sq))
    rep.add("verdict", "pass")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(serialize_graph_file(sq, comment="square"))


def cmd_stats(args, rep: RunReport) -> None:
    g = _target(args)
    rep.add("n", g.n)
    rep.add("m", g.m)
    rep.add("max_degree", g.max_degree)
    rep.add("connected", is_connected(g) if g.n else False)
    gi = girth(g)
    rep.add("girth", "inf" if gi == float("inf") else int(gi))
    cycles = enumerate_cycles(g, args.k_max)
    for k in range(3, args.k_max + 1):
        rep.add(f"cycles.{k}", len(cycles[k]))
    rep.add("triangles", len(triangles(g)))
    rep.add("articulation_points", ",".join(map(str, sorted(articulation_points(g)))) or "none")
    rep.add("verdict", "pass")


def cmd_lcolor(args, rep: RunReport) -> None:
    gf = _load(args)
    g = square(gf.graph) if args.square else gf.graph
    if args.lists:
        rows = [part for part in args.lists.split(";")]
        lists = [frozenset(_ints(r, "--lists")) for r in rows]
    elif gf.lists is not None:
        lists = list(gf.lists)
    else:
        raise UsageError("no lists: pass --lists or add a lists section to the file")
    if len(lists) != g.n:
        raise UsageError(f"{len(lists)} lists for {g.n} vertices")
    coloring = solve_list_coloring(g, lists)
    if coloring is None:
        rep.add("colorable", False)
        rep.add("witness", _fmt_lists(lists))
        rep.add("verdict", "fail")
        rep.failed = True
    else:
        rep.add("colorable", True)
        rep.add("coloring", ",".join(str(coloring[v]) for v in range(g.n)))
        rep.add("verdict", "pass")


def cmd_chromatic(args, rep: RunReport) -> None:
    g = _target(args)
    rep.add("chromatic_number", chromatic_number(g))
    rep.add("verdict", "pass")


def _f_vector(args, g: Graph) -> list[int]:
    f = _ints(args.f, "--f")
    if len(f) == 1 and g.n > 1:
        f = f * g.n
    return f


def cmd_choosable(args, rep: RunReport) -> None:
    g = _target(args)
    f = _f_vector(args, g)
    t0 = time.perf_counter()
    try:
        result = is_f_choosable(g, f, use_automorphisms=args.automorphisms, budget=args.budget)
    except SearchBudgetExceeded as exc:
        rep.add("choosable", "unknown")
        rep.add("candidates", exc.stats.candidates)
        raise UsageError(f"inconclusive: {exc}") from None
    rep.add("f", ",".join(map(str, result.f)))
    rep.add("choosable", result.choosable)
    rep.add("candidates", result.stats.candidates)
    if args.timing:
        rep.add("timing.seconds", f"{time.perf_counter() - t0:.3f}")
    if result.witness is not None:
        rep.add("witness", _fmt_lists(result.witness.lists))
        rep.failed = True
    rep.add("verdict", "fail" if rep.failed else "pass")


def cmd_greedy_cert(args, rep: RunReport) -> None:
    g = _target(args)
    f = _f_vector(args, g)
    order = greedy_order_certificate(g, f)
    if order is None:
        rep.add("order", "none")
        rep.failed = True
    else:
        rep.add("order", ",".join(map(str, order)))
    rep.add("verdict", "fail" if rep.failed else "pass")


def cmd_reduce(args, rep: RunReport) -> None:
    configs = catalog() if args.config == "all" else [get_configuration(args.config)]
    for c in configs:
        cert = verify_reducible(c, use_automorphisms=args.automorphisms, budget=args.budget)
        p = c.name
        rep.add(f"{p}.f", ",".join(map(str, cert.f)))
        rep.add(f"{p}.expected", ",".join(map(str, c.expected_vector)))
        rep.add(f"{p}.choosable", cert.choosable)
        rep.add(f"{p}.candidates", cert.result.stats.candidates)
        rep.add(f"{p}.greedy_order", ",".join(cert.greedy_order) if cert.greedy_order else "none")
        if args.timing:
            rep.add(f"{p}.timing.seconds", f"{cert.seconds:.3f}")
        if cert.result.witness is not None:
            rep.add(f"{p}.witness", _fmt_lists(cert.result.witness.lists))
            rep.failed = True
        if cert.f != c.expected_vector:
            rep.failed = True
    rep.add("verdict", "fail" if rep.failed else "pass")


def cmd_strategy_check(args, rep: RunReport) -> None:
    c = get_configuration(args.config)
    modes = ["random", "adversarial"] if args.adversarial else ["random"]
    for mode in modes:
        r = check_strategy(c, mode, trials=args.trials, seed=args.seed)
        p = mode
        rep.add(f"{p}.trials", r.trials)
        rep.add(f"{p}.failures", r.failure_count)
        rep.add(f"{p}.improper", r.improper)
        rep.add(f"{p}.unsound", r.unsound)
        for label, count in r.coverage.items():
            rep.add(f"{p}.branch[{label}]", count)
        if r.failures:
            lists, why = r.failures[0]
            rep.add(f"{p}.witness", _fmt_lists(lists))
            rep.add(f"{p}.witness_reason", why)
        if not r.ok:
            rep.failed = True
    rep.add("verdict", "fail" if rep.failed else "pass")


def cmd_discharge(args, rep: RunReport) -> None:
    e = _embedding(_load(args))
    init = initial_charges(e)
    final = apply_rules(e, init)
    rep.add("faces", ",".join(map(str, e.face_lengths())))
    rep.add("charges.initial_total", init.total())
    rep.add("charges.final_total", final.total())
    rep.add("charges.vertex", ",".join(map(str, final.vertex_charge)))
    rep.add("charges.face", ",".join(map(str, final.face_charge)))
    rep.add("transfers", len(final.transfers))
    rep.add("verdict", "pass")


def cmd_spacing(args, rep: RunReport) -> None:
    lengths = [args.length] if args.length else range(7, 41)
    for length in lengths:
        best = spacing_max_marks(length)
        rep.add(f"spacing[{length}]", best)
        rep.add(f"spacing[{length}].bound", length // 4)
        if best > length // 4:
            rep.failed = True
    rep.add("verdict", "fail" if rep.failed else "pass")


def cmd_audit(args, rep: RunReport) -> None:
    e = _embedding(_load(args))
    try:
        r = audit(e, require_hypotheses=not args.ignore_hypotheses)
    except TheoremContradiction as exc:
        r = exc.report
        rep.failed = True
    for name, ok in r.hypotheses.items():
        rep.add(f"hypothesis[{name}]", ok)
    for name in PREDICATES:
        rep.add(f"predicate[{name}]", r.predicates[name])
        if r.details[name]:
            rep.add(f"predicate[{name}].detail", r.details[name])
    rep.add("charges.initial_total", r.initial.total())
    rep.add("charges.final_total", r.final.total())
    rep.add("charges.negative_vertices", ",".join(map(str, r.negative_vertices)) or "none")
    rep.add("charges.negative_faces", ",".join(map(str, r.negative_faces)) or "none")
    rep.add("audit", r.verdict)
    if rep.failed:
        rep.add("witness", "every predicate holds and every charge is nonnegative")
    rep.add("verdict", "fail" if rep.failed else "pass")


def cmd_enumerate(args, rep: RunReport) -> None:
    filters = args.filter or []
    count = 0
    for i, g in enumerate(enumerate_subcubic(args.max_n, filters)):
        count += 1
        if args.list:
            rep.add(f"g{i}", f"n={g.n} edges={_fmt_edges(g)}")
    rep.add("filters", ",".join(filters) or "none")
    rep.add("count", count)
    rep.add("verdict", "pass")


def cmd_corpus(args, rep: RunReport) -> None:
    tasks = args.tasks.split(",") if args.tasks else ["chi-square"]
    bad = [t for t in tasks if t not in TASKS]
    if bad:
        raise UsageError(f"unknown tasks {bad}; choose from {', '.join(TASKS)}")
    if args.paths:
        graphs = []
        for path in args.paths:
            gf = read_graph_file(path)
            graphs.append((path, gf.graph, gf.embedding))
    else:
        filters = args.filter or ["noC4C5", "planar"]
        graphs = [
            (f"enum{i}", g, None)
            for i, g in enumerate(enumerate_subcubic(args.max_n, filters))
        ]
    rep.extend(run_corpus(graphs, tasks, trials=args.trials, seed=args.seed, workers=args.workers))


# parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sqcolor", description="Square coloring toolkit for subcubic plane graphs.")
    parser.add_argument("--timing", action="store_true", help="add timing records (breaks byte-identical output)")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help, square_flag=True):
        p = sub.add_parser(name, help=help)
        p.add_argument("graph", help="graph file")
        if square_flag:
            p.add_argument("--square", action="store_true", help="work on the square of the graph")
        p.set_defaults(func=func)
        return p

    p = graph_cmd("square", cmd_square, "square of a graph", square_flag=False)
    p.add_argument("-o", "--output", help="also write the square as a graph file")
    p = graph_cmd("stats", cmd_stats, "degrees, girth, short cycles, cut vertices")
    p.add_argument("--k-max", type=int, default=8)
    p = graph_cmd("lcolor", cmd_lcolor, "list coloring")
    p.add_argument("--lists", help="semicolon-separated lists, e.g. '1,2;2,3;1'")
    graph_cmd("chromatic", cmd_chromatic, "exact chromatic number")
    p = graph_cmd("choosable", cmd_choosable, "complete f-choosability decision")
    p.add_argument("--f", required=True, help="list sizes, comma-separated (one value means uniform)")
    p.add_argument("--automorphisms", action="store_true")
    p.add_argument("--budget", type=int, default=None)
    p = graph_cmd("greedy-cert", cmd_greedy_cert, "greedy-order certificate")
    p.add_argument("--f", required=True)

    names = [c.name for c in catalog()]
    p = sub.add_parser("reduce", help="verify reducible configurations")
    p.add_argument("config", choices=names + ["all"])
    p.add_argument("--automorphisms", action="store_true")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("strategy-check", help="falsification run of a configuration strategy")
    p.add_argument("config", choices=names)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--adversarial", action="store_true", help="also run the structured families")
    p.set_defaults(func=cmd_strategy_check)

    graph_cmd("discharge", cmd_discharge, "initial and final charges", square_flag=False)

    p = sub.add_parser("spacing", help="maximum marks on a face boundary")
    p.add_argument("--length", type=int, default=None, help="one length (default: 7..40)")
    p.set_defaults(func=cmd_spacing)

    p = graph_cmd("audit", cmd_audit, "structural predicates and discharging", square_flag=False)
    p.add_argument("--ignore-hypotheses", action="store_true",
                   help="record rather than reject violated hypotheses")

    p = sub.add_parser("enumerate", help="connected subcubic graphs up to isomorphism")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--filter", action="append", choices=FILTERS)
    p.add_argument("--list", action="store_true", help="print every graph")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("corpus", help="run tasks over graph files or an enumeration")
    p.add_argument("paths", nargs="*")
    p.add_argument("--tasks", default="chi-square", help=f"comma-separated subset of {', '.join(TASKS)}")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--filter", action="append", choices=FILTERS)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    rep = RunReport()
    try:
        args.func(args, rep)
    except (UsageError, SqColorError, ValueError, KeyError, OSError) as exc:
        if isinstance(exc, HypothesisViolated):
            rep.add("hypothesis_violated", exc.which)
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        rep.add("error", msg)
        rep.add("verdict", "error")
        sys.stdout.write(rep.render())
        return 2
    sys.stdout.write(rep.render())
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
