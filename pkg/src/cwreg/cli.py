"""Command-line front end: `cwreg <command> ...` or `python -m cwreg <command> ...`."""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .betti import LATTICE_CAP, betti_table, regularity
from .cache import RegularityCache, resolve_cache_dir
from .cameron_walker import CWParams, FamilyBounds, decompose, generate, is_cameron_walker
from .errors import CwregError, GeneratorCapExceeded, GraphFormatError, SizeCapExceeded
from .graph import Graph, induced_matching_number, matching_number, pendant_features, structural_predicates
from .homology import CoefficientField
from .monomial import GEN_CAP, MonomialIdeal, edge_ideal, monomial_to_string, power, symbolic_power
from .polarization import VAR_CAP, regularity_via_polarization
from .report import VerificationReport
from . import verify as V

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE, EXIT_ALL_SKIPPED = 0, 1, 2, 3

FORMATS_HELP = """\
input formats
  graph text : first line "n m", then m lines "u v" with 1 <= u < v <= n
  graph JSON : {"n": 4, "edges": [[1, 2], [2, 3]]}
  ideal text : first line n, then one monomial per line such as x1^2*x3 (or 1)
  ideal JSON : {"n": 3, "gens": [[2, 0, 1], [0, 1, 1]]}
  CW params  : {"kind": "star", "m": 3} | {"kind": "star_triangle", "t": 2} |
               {"kind": "skeleton", "H": {"n": 2, "edges": [[1, 2]]}, "X": [1],
                "pendants": {"1": 1}, "triangles": {"2": 1}}
  s ranges   : "2", "1..3" or "1,3"
"""


class UsageError(Exception):
    pass


def parse_s_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            out = list(range(int(lo), int(hi) + 1))
        else:
            out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad s range {text!r}") from None
    if not out:
        raise UsageError(f"empty s range {text!r}")
    return out


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def read_graph(path: str) -> Graph:
    try:
        return Graph.parse(_read(path))
    except (GraphFormatError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def read_graph_or_ideal(path: str):
    text = _read(path)
    stripped = text.strip()
    try:
        if stripped.startswith("{"):
            data = json.loads(stripped)
            return Graph.from_dict(data) if "edges" in data else MonomialIdeal.from_dict(data)
        first = next(ln for ln in stripped.splitlines() if ln.strip() and not ln.lstrip().startswith("#"))
        if len(first.split()) == 2:
            return Graph.from_text(text)
        return MonomialIdeal.parse(text)
    except (ValueError, KeyError, StopIteration) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _field(args) -> CoefficientField:
    try:
        return CoefficientField(args.field_char)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args, **extra) -> V.RunConfig:
    _field(args)
    return V.RunConfig(field_char=args.field_char, gen_cap=args.gen_cap, lattice_cap=args.lattice_cap,
                       var_cap=args.var_cap, **extra)


def _cache(args):
    d = resolve_cache_dir(args.cache_dir)
    return RegularityCache(d) if d else None


def _bounds(args) -> FamilyBounds:
    return FamilyBounds(args.max_vertices, args.max_pendants, args.max_triangles,
                        max_star_leaves=args.max_star_leaves, max_star_triangles=args.max_star_triangles)


def _graphs_for(args):
    """A single input graph or the sweep family (with unions)."""
    if getattr(args, "graph", None):
        return [("input", "input", read_graph(args.graph))]
    return V.sweep_graphs(_bounds(args), 0 if args.no_unions else args.union_member_max)


# -- commands --------------------------------------------------------------

def cmd_analyze(args) -> int:
    g = read_graph(args.graph)
    info = structural_predicates(g)
    feats = pendant_features(g)
    cw = is_cameron_walker(g)
    rec = {
        "n": g.n, "m": g.m,
        "match": matching_number(g), "ind_match": induced_matching_number(g),
        "cameron_walker": cw,
        "bipartite": info.is_bipartite, "chordal": info.is_chordal, "connected": info.is_connected,
        "components": [list(c) for c in info.components],
        "degrees": list(info.degrees),
        "pendant_edges": [list(e) for e in feats.pendant_edges],
        "pendant_triangles": [[t.apex, t.b, t.c] for t in feats.pendant_triangles],
    }
    if cw and info.is_connected and g.m:
        rec["decomposition"] = decompose(g).params().to_dict()
    if args.format == "json":
        _emit(args, json.dumps(rec, indent=2) + "\n")
    else:
        lines = []
        for k, v in rec.items():
            if isinstance(v, bool):
                v = str(v).lower()
            elif isinstance(v, (list, dict)):
                v = json.dumps(v)
            lines.append(f"{k}: {v}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_sympow(args) -> int:
    g = read_graph(args.graph)
    I = symbolic_power(g, args.s, args.gen_cap)
    if args.format == "json":
        _emit(args, json.dumps(I.to_dict()) + "\n")
    else:
        _emit(args, "".join(monomial_to_string(m) + "\n" for m in I.gens))
    return EXIT_OK


def cmd_reg(args) -> int:
    obj = read_graph_or_ideal(args.input)
    field = _field(args)
    if isinstance(obj, Graph):
        if obj.m == 0:
            raise UsageError("graph has no edges")
        s = args.s if args.s is not None else 1
        I = power(edge_ideal(obj), s, args.gen_cap) if args.ordinary else symbolic_power(obj, s, args.gen_cap)
    else:
        if args.s is not None or args.ordinary:
            raise UsageError("--s/--ordinary apply to graph input only")
        I = obj
    if I.is_zero():
        raise UsageError("regularity of the zero ideal is not defined")
    if args.method == "polarization":
        r = regularity_via_polarization(I, field, var_cap=args.var_cap, lattice_cap=args.lattice_cap)
    else:
        r = regularity(I, field, lattice_cap=args.lattice_cap)
    _emit(args, json.dumps({"regularity": r, "field_char": field.characteristic}) + "\n"
          if args.format == "json" else f"{r}\n")
    return EXIT_OK


def cmd_gen_cw(args) -> int:
    try:
        params = CWParams.from_dict(json.loads(_read(args.params)))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{args.params}: {exc}") from None
    g = generate(params)
    if args.format == "json":
        _emit(args, json.dumps({**g.to_dict(), "params": params.to_dict()}) + "\n")
    else:
        _emit(args, g.to_text())
    return EXIT_OK


def cmd_betti(args) -> int:
    obj = read_graph_or_ideal(args.input)
    I = edge_ideal(obj) if isinstance(obj, Graph) else obj
    if I.is_zero() or I.is_unit():
        raise UsageError("Betti tables need a proper nonzero ideal")
    table = betti_table(I, _field(args), lattice_cap=args.lattice_cap)
    if args.format == "json":
        _emit(args, json.dumps(table.to_dict()) + "\n")
    else:
        _emit(args, "i,j,rank\n" + "".join(f"{i},{j},{r}\n" for i, j, r in table.csv_rows()))
    return EXIT_OK


def _finish(args, rep: VerificationReport) -> int:
    rep.config.setdefault("tool_version", __version__)
    if args.no_timing:
        for r in rep.rows:
            r.elapsed_ms = None
    _emit(args, rep.render(args.format))
    c = rep.counts()
    print(f"rows: {len(rep.rows)}  ok: {c['ok']}  violated: {c['violated']}  skipped: {c['skipped']}",
          file=sys.stderr)
    return rep.exit_code()


def cmd_verify_theorem(args) -> int:
    cfg = _config(args, ordinary=args.ordinary, oracle=args.oracle)
    rep = V.verify_theorem_sweep(_bounds(args), parse_s_range(args.s), cfg, args.jobs, _cache(args),
                                 unions=not args.no_unions, union_member_max=args.union_member_max)
    return _finish(args, rep)


def cmd_verify_lower_bound(args) -> int:
    if args.n_max > 7:
        raise UsageError("--n-max is limited to 7")
    rep = V.verify_lower_bound(args.n_max, parse_s_range(args.s), _config(args), args.jobs, _cache(args))
    return _finish(args, rep)


def cmd_verify_colon(args) -> int:
    rep = V.verify_colon_sweep(_graphs_for(args), parse_s_range(args.s), _config(args), args.jobs)
    return _finish(args, rep)


def cmd_verify_proof_trace(args) -> int:
    cfg = _config(args)
    s_values = parse_s_range(args.s)
    if args.graph:
        g = read_graph(args.graph)
        rep = VerificationReport([V.proof_trace(g, s, cfg) for s in s_values], cfg.to_dict())
    else:
        rep = V.proof_trace_sweep(_graphs_for(args), s_values, cfg, args.jobs)
    return _finish(args, rep)


def cmd_verify_ordinary(args) -> int:
    cfg = _config(args)
    s_values = parse_s_range(args.s)
    graphs = _graphs_for(args)
    if args.graph:
        rep = VerificationReport([V.verify_ordinary_power(g, s, cfg) for _, _, g in graphs for s in s_values],
                                 cfg.to_dict())
    else:
        rep = V.verify_ordinary_sweep(graphs, s_values, cfg, args.jobs, _cache(args))
    return _finish(args, rep)


def cmd_verify_oracle(args) -> int:
    rep = V.verify_oracle_random(args.count, args.seed, _config(args))
    return _finish(args, rep)


# -- parser ------------------------------------------------------------------

def _add_globals(p: argparse.ArgumentParser, top: bool):
    d = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    p.add_argument("--field-char", type=int, default=d(0), help="0 for QQ or a prime p (default 0)")
    p.add_argument("--jobs", type=int, default=d(1), help="worker processes (default 1)")
    p.add_argument("--format", choices=("csv", "json"), default=d("csv"))
    p.add_argument("--out", default=d(None), help="write output here instead of stdout")
    p.add_argument("--cache-dir", default=d(None), help="regularity cache directory (or $CWREG_CACHE_DIR)")
    p.add_argument("--gen-cap", type=int, default=d(GEN_CAP), help="generator cap for ideal operations")
    p.add_argument("--lattice-cap", type=int, default=d(LATTICE_CAP), help="cap on lcm-lattice points")
    p.add_argument("--var-cap", type=int, default=d(VAR_CAP), help="variable cap for the polarization oracle")
    p.add_argument("--seed", type=int, default=d(0), help="seed for random ideal generation")
    p.add_argument("--no-timing", action="store_true", default=d(False),
                   help="leave elapsed_ms empty so repeated runs give identical reports")


def _add_bounds(p: argparse.ArgumentParser):
    p.add_argument("--max-vertices", type=int, default=11)
    p.add_argument("--max-pendants", type=int, default=2)
    p.add_argument("--max-triangles", type=int, default=2)
    p.add_argument("--max-star-leaves", type=int, default=8)
    p.add_argument("--max-star-triangles", type=int, default=3)
    p.add_argument("--no-unions", action="store_true", help="skip disjoint unions of two members")
    p.add_argument("--union-member-max", type=int, default=5, help="largest member used in a union")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cwreg", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter, epilog=FORMATS_HELP)
    parser.add_argument("--version", action="version", version=f"cwreg {__version__}")
    _add_globals(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text, parent=sub):
        p = parent.add_parser(name, help=help_text, epilog=FORMATS_HELP,
                              formatter_class=argparse.RawDescriptionHelpFormatter)
        _add_globals(p, top=False)
        p.set_defaults(func=func)
        return p

    p = command("analyze", cmd_analyze, "graph invariants and Cameron-Walker decomposition")
    p.add_argument("graph")
    p = command("sympow", cmd_sympow, "minimal generators of I(G)^(s)")
    p.add_argument("graph")
    p.add_argument("--s", type=int, required=True)
    p = command("reg", cmd_reg, "regularity of an ideal, or of I(G)^(s) / I(G)^s for a graph")
    p.add_argument("input")
    p.add_argument("--s", type=int)
    p.add_argument("--ordinary", action="store_true", help="use the ordinary power I(G)^s")
    p.add_argument("--method", choices=("koszul", "polarization"), default="koszul")
    p = command("gen-cw", cmd_gen_cw, "build a Cameron-Walker graph from parameters")
    p.add_argument("params")
    p = command("betti", cmd_betti, "graded Betti table of an ideal (or edge ideal of a graph)")
    p.add_argument("input")

    vp = sub.add_parser("verify", help="verification sweeps")
    vsub = vp.add_subparsers(dest="mode", required=True)
    p = command("theorem", cmd_verify_theorem, "regularity formula over the Cameron-Walker sweep", vsub)
    _add_bounds(p)
    p.add_argument("--s", default="1..3")
    p.add_argument("--ordinary", action="store_true", help="also compute reg(I(G)^s)")
    p.add_argument("--oracle", action="store_true", help="also cross-check with polarization in char 0 and 2")
    p = command("lower-bound", cmd_verify_lower_bound, "lower bound on all connected graphs", vsub)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--s", default="1..2")
    for name, func, text, s_default in (
        ("colon", cmd_verify_colon, "colon identities at pendant triangles and edges", "1..3"),
        ("proof-trace", cmd_verify_proof_trace, "every bound of the inductive argument", "2..3"),
        ("ordinary", cmd_verify_ordinary, "ordinary powers against symbolic powers", "1..3"),
    ):
        p = command(name, func, text, vsub)
        p.add_argument("graph", nargs="?", help="single graph file; omit to run the sweep family")
        p.add_argument("--s", default=s_default)
        _add_bounds(p)
    p = command("oracle", cmd_verify_oracle, "upper-Koszul against polarization on random ideals", vsub)
    p.add_argument("--count", type=int, default=100)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        return args.func(args)
    except UsageError as exc:
        print(f"cwreg: error: {exc}\n\n{FORMATS_HELP}", file=sys.stderr)
        return EXIT_USAGE
    except GeneratorCapExceeded as exc:
        print(f"cwreg: skipped:{exc.cap}: {exc}", file=sys.stderr)
        return EXIT_ALL_SKIPPED
    except SizeCapExceeded as exc:
        print(f"cwreg: skipped:size-cap: {exc}", file=sys.stderr)
        return EXIT_ALL_SKIPPED
    except CwregError as exc:
        print(f"cwreg: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
