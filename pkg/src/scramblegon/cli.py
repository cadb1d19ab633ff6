"""Command-line interface.

Graphs travel as MEL v1 text; `-` reads from stdin.  Exit codes: 0 success,
2 validation or hypothesis failure, 1 internal error.  `--machine` switches
the report to stable key=value lines.
"""

import argparse
import math
import sys

from . import certify as ct
from . import divisors as dv
from . import fixtures as fx
from . import invariants as inv
from . import mel
from . import multigraph as mg
from . import scrambles as sc


class _Out:
    def __init__(self, machine):
        self.machine = machine

    def kv(self, key, value, text=None):
        if self.machine:
            print("%s=%s" % (key, value))
        else:
            print(text if text is not None else "%s: %s" % (key, value))

    def raw(self, text):
        if not self.machine:
            print(text)


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _read_graph(path):
    return mel.parse_mel(_read_text(path))


def _fmt_set(vertices):
    return ",".join(str(v) for v in sorted(vertices))


GENERATORS = {
    "path": (["m"], lambda a, seed: mg.path(a[0])),
    "cycle": (["m"], lambda a, seed: mg.cycle(a[0])),
    "complete": (["n"], lambda a, seed: mg.complete(a[0])),
    "complete-bipartite": (["m", "n"], lambda a, seed: mg.complete_bipartite(a[0], a[1])),
    "complete-multipartite": (["part..."], lambda a, seed: mg.complete_multipartite(a)),
    "hypercube": (["d"], lambda a, seed: mg.hypercube(a[0])),
    "grid": (["dim..."], lambda a, seed: mg.grid(a)),
    "star": (["m"], lambda a, seed: mg.star(a[0])),
    "random-tree": (["m"], lambda a, seed: mg.random_tree(a[0], seed)),
    "random-graph": (["n", "p%"], lambda a, seed: mg.random_graph(a[0], a[1] / 100.0, seed)),
}


def _cmd_gen(args, out):
    if args.family not in GENERATORS:
        raise mel.MelError(1, "unknown family %r (choose from %s)"
                           % (args.family, ", ".join(sorted(GENERATORS))))
    params, build = GENERATORS[args.family]
    if args.family.startswith("random") and args.seed is None:
        raise mel.MelError(1, "randomized generators require --seed")
    values = [int(x) for x in args.sizes]
    if "..." not in params[-1] and len(values) != len(params):
        raise mel.MelError(1, "%s expects %d size argument(s): %s"
                           % (args.family, len(params), " ".join(params)))
    sys.stdout.write(mel.write_mel(build(values, args.seed)))


def _cmd_info(args, out):
    g = _read_graph(args.graph)
    out.kv("n", g.n)
    out.kv("edges", g.edge_count())
    out.kv("simple", g.is_simple())
    out.kv("min_degree", inv.min_degree(g))
    out.kv("edge_connectivity", inv.edge_connectivity(g))
    out.kv("vertex_connectivity", inv.vertex_connectivity(g))
    comps = inv.components(g)
    out.kv("components", len(comps))
    out.kv("bridges", ";".join("%d-%d" % b for b in inv.bridges(g)) or "none")
    out.kv("independence_number", inv.independence_number(g))


def _cmd_gonality(args, out):
    g = _read_graph(args.graph)
    value, witness = dv.gonality(g, lower_hint=args.lower, upper_hint=args.upper)
    out.kv("gonality", value)
    out.kv("witness", " ".join(str(c) for c in witness.chips),
           "witness divisor: %s" % witness.chips.tolist())


def _cmd_rank(args, out):
    g = _read_graph(args.graph)
    d = dv.Divisor(g, mel.parse_divisor(_read_text(args.divisor), g.n))
    out.kv("rank", dv.rank(d, args.cap))
    out.kv("cap", args.cap)


def _cmd_reduce(args, out):
    g = _read_graph(args.graph)
    d = dv.Divisor(g, mel.parse_divisor(_read_text(args.divisor), g.n))
    reduced, script = dv.q_reduce(d, args.q, with_script=True)
    out.kv("reduced", " ".join(str(c) for c in reduced.chips),
           "q-reduced divisor: %s" % reduced.chips.tolist())
    out.kv("firings", len(script))
    for i, fired in enumerate(script):
        out.kv("firing_%d" % i, _fmt_set(fired), "  fire {%s}" % _fmt_set(fired))


def _cmd_scramble_order(args, out):
    g = _read_graph(args.graph)
    eggs = mel.parse_scramble(_read_text(args.scramble), g.n)
    order = sc.scramble_order(sc.Scramble(g, eggs))
    out.kv("order", order.order)
    out.kv("hitting", order.hitting)
    out.kv("egg_cut", "inf" if order.egg_cut is math.inf else order.egg_cut)
    out.kv("hitting_witness", _fmt_set(order.witness_hitting_set))
    if order.witness_cut is not None:
        out.kv("cut_witness", _fmt_set(order.witness_cut[0]))


def _cmd_sn_bounds(args, out):
    g = _read_graph(args.graph)
    extras = []
    if args.scramble:
        extras.append(sc.Scramble(g, mel.parse_scramble(_read_text(args.scramble), g.n)))
    report = sc.sn_bounds(g, extra_scrambles=extras, gonality_budget=args.budget,
                          use_brute=args.brute is not None,
                          max_eggs=args.brute if args.brute else None)
    out.kv("lower", report.lower)
    out.kv("upper", report.upper)
    out.kv("lower_source", report.lower_source)
    out.kv("upper_source", report.upper_source)
    out.kv("exact", report.exact)


def _cmd_edge_scramble(args, out):
    g = _read_graph(args.graph)
    scramble = sc.edge_scramble(g)
    sys.stdout.write(mel.write_scramble(scramble))


def _cmd_product_scramble(args, out):
    g = _read_graph(args.graph_g)
    h = _read_graph(args.graph_h)
    scramble = sc.product_scramble(g, h, args.k)
    sys.stdout.write(mel.write_scramble(scramble))


def _cmd_product(args, out):
    g = _read_graph(args.graph_g)
    h = _read_graph(args.graph_h)
    sys.stdout.write(mel.write_mel(mg.cartesian_product(g, h)))


def _cmd_cone(args, out):
    g = _read_graph(args.graph)
    sys.stdout.write(mel.write_mel(mg.cone(g, args.l)))


def _cmd_certify(args, out):
    g = _read_graph(args.graph_g)
    h = _read_graph(args.graph_h)
    cert = ct.certify_product(g, h, gon_g=args.gon_g, gon_h=args.gon_h, budget=args.budget)
    out.kv("statement", cert.statement)
    if cert.orientation:
        out.kv("orientation", cert.orientation)
    for i, check in enumerate(cert.hypotheses):
        out.kv("hypothesis_%d" % i, "%s|%s|%s" % (check.description, check.value, check.passed),
               "  [%s] %s (%s)" % ("ok" if check.passed else "FAIL",
                                   check.description, check.value))
    if cert.certified:
        out.kv("certified", cert.value, "certified sn = gon = %d" % cert.value)
    else:
        out.kv("certified", "open", "not certified; open bounds:")
        out.kv("lower", cert.bounds.lower)
        out.kv("upper", cert.bounds.upper)
        out.kv("lower_source", cert.bounds.lower_source)
        out.kv("upper_source", cert.bounds.upper_source)


def _cmd_reduce_alpha(args, out):
    g = _read_graph(args.graph)
    alpha, m, cone_graph = ct.reduce_alpha(g, solver=args.via)
    out.kv("alpha", alpha)
    out.kv("m", m)
    out.raw("cone graph:")
    sys.stdout.write(mel.write_mel(cone_graph))


def _cmd_fixtures(args, out):
    if args.out:
        for written in fx.write_fixtures(args.out):
            out.kv("wrote", written)
    if args.check or not args.out:
        failures = 0
        for name, ok, detail in fx.run_checks():
            out.kv("check", "%s|%s" % (name, "pass" if ok else "fail"),
                   "[%s] %s%s" % ("pass" if ok else "FAIL", name,
                                  "" if ok else " (%s)" % detail))
            failures += 0 if ok else 1
        if failures:
            raise RuntimeError("%d fixture check(s) failed" % failures)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="scramblegon",
        description="Chip-firing gonality and scramble-number toolkit on multigraphs.")
    parser.add_argument("--machine", action="store_true",
                        help="emit stable key=value lines instead of prose")
    parser.add_argument("--threads", type=int, default=1,
                        help="accepted for compatibility; output never depends on it")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", help="emit a generator-family graph as MEL")
    p.add_argument("family")
    p.add_argument("sizes", nargs="+")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("info", help="basic invariants of a graph")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("gonality", help="exact gonality with witness divisor")
    p.add_argument("graph")
    p.add_argument("--lower", type=int, default=None)
    p.add_argument("--upper", type=int, default=None)
    p.set_defaults(func=_cmd_gonality)

    p = sub.add_parser("rank", help="truncated divisor rank")
    p.add_argument("graph")
    p.add_argument("divisor")
    p.add_argument("--cap", type=int, required=True)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("reduce", help="q-reduced form with the firing script")
    p.add_argument("graph")
    p.add_argument("divisor")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("scramble-order", help="order of a scramble given as egg lines")
    p.add_argument("graph")
    p.add_argument("scramble")
    p.set_defaults(func=_cmd_scramble_order)

    p = sub.add_parser("sn-bounds", help="lower/upper bounds on the scramble number")
    p.add_argument("graph")
    p.add_argument("--scramble", default=None, help="extra user scramble file")
    p.add_argument("--budget", type=int, default=12, help="gonality vertex budget")
    p.add_argument("--brute", type=int, nargs="?", const=0, default=None,
                   metavar="MAX_EGGS", help="fold in the exact tiny-graph oracle")
    p.set_defaults(func=_cmd_sn_bounds)

    p = sub.add_parser("edge-scramble", help="emit the edge scramble of a graph")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_edge_scramble)

    p = sub.add_parser("product-scramble", help="emit the k-deleted product scramble")
    p.add_argument("graph_g")
    p.add_argument("graph_h")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_product_scramble)

    p = sub.add_parser("product", help="Cartesian product as MEL")
    p.add_argument("graph_g")
    p.add_argument("graph_h")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("cone", help="cone over a graph as MEL")
    p.add_argument("graph")
    p.add_argument("l", type=int)
    p.set_defaults(func=_cmd_cone)

    p = sub.add_parser("certify", help="certify exact product gonality or emit bounds")
    p.add_argument("graph_g")
    p.add_argument("graph_h")
    p.add_argument("--gon-g", type=int, default=None, dest="gon_g")
    p.add_argument("--gon-h", type=int, default=None, dest="gon_h")
    p.add_argument("--budget", type=int, default=12)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("reduce-alpha", help="recover alpha(G) from the cone's gonality")
    p.add_argument("graph")
    p.add_argument("--via", choices=["gonality", "scramble-sandwich"], default="gonality")
    p.set_defaults(func=_cmd_reduce_alpha)

    p = sub.add_parser("fixtures", help="rebuild and check the benchmark figure graphs")
    p.add_argument("--out", default=None, help="directory to write fixture files")
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(args.machine)
    try:
        args.func(args, out)
    except BrokenPipeError:
        return 0
    except (mel.MelError, ct.HypothesisError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - internal failure path
        print("internal error: %s" % exc, file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
