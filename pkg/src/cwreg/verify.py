"""Verification runs: the regularity formula over Cameron-Walker sweeps, the
general lower bound, colon identities, the step-by-step inequality trace and
ordinary-power comparisons.
"""
from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from .betti import LATTICE_CAP, betti_tables, regularities
from .cache import RegularityCache
from .cameron_walker import FamilyBounds, enumerate_family, is_cameron_walker
from .errors import GeneratorCapExceeded, PreconditionFailed, SizeCapExceeded
from .graph import (
    Graph,
    delete_vertices,
    disjoint_union,
    induced_matching_number,
    matching_number,
    pendant_features,
    structural_predicates,
)
from .homology import CoefficientField
from .monomial import (
    GEN_CAP,
    MonomialIdeal,
    add_variables,
    colon_by_monomial,
    colon_by_variables,
    edge_ideal,
    equals,
    minimalize,
    power,
    product_of_variables,
    symbolic_power,
)
from .polarization import VAR_CAP, hochster_coarse_tables, regularities_via_polarization
from .report import Check, CheckReport, ReportRow, VerificationReport

ORACLE_FIELDS = (0, 2)


@dataclass(frozen=True)
class RunConfig:
    field_char: int = 0
    gen_cap: int = GEN_CAP
    lattice_cap: int = LATTICE_CAP
    ordinary: bool = False  # also compute reg(I(G)^s)
    oracle: bool = False  # cross-check with polarization in characteristics 0 and 2
    var_cap: int = VAR_CAP

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True)
class GraphTask:
    graph_id: str
    provenance: str
    graph: Graph
    s: int


# -- regularity values ---------------------------------------------------

def _skip_reason(exc: Exception) -> str:
    if isinstance(exc, GeneratorCapExceeded):
        return f"skipped:{exc.cap}"
    return "skipped:size-cap"


def _reg(I: MonomialIdeal, cfg: RunConfig, chars=None) -> dict[int, int]:
    chars = chars or (cfg.field_char,)
    fields = [CoefficientField(c) for c in chars]
    regs = regularities(I, fields, lattice_cap=cfg.lattice_cap)
    return {f.characteristic: r for f, r in regs.items()}


def compute_values(g: Graph, s: int, cfg: RunConfig, kinds) -> dict:
    """Regularity values for one (graph, s); each kind maps to a value or a skip reason.

    kinds: "symbolic" (reg over the configured field), "ordinary", and
    "oracle" (upper-Koszul and polarization regularities in characteristics 0 and 2).
    """
    out = {}
    try:
        sym = symbolic_power(g, s, cfg.gen_cap)
    except (GeneratorCapExceeded, SizeCapExceeded) as exc:
        return {k: _skip_reason(exc) for k in kinds}
    if "symbolic" in kinds or "oracle" in kinds:
        chars = tuple(sorted({cfg.field_char, *ORACLE_FIELDS})) if "oracle" in kinds else (cfg.field_char,)
        try:
            regs = _reg(sym, cfg, chars)
            if "symbolic" in kinds:
                out["symbolic"] = regs[cfg.field_char]
        except (GeneratorCapExceeded, SizeCapExceeded) as exc:
            regs = None
            out["symbolic"] = _skip_reason(exc)
        if "oracle" in kinds:
            if regs is None:
                out["oracle"] = out["symbolic"]
            else:
                try:
                    fields = [CoefficientField(c) for c in ORACLE_FIELDS]
                    pol = regularities_via_polarization(sym, fields, var_cap=cfg.var_cap, lattice_cap=cfg.lattice_cap)
                    out["oracle"] = {
                        str(c): [regs[c], pol[CoefficientField(c)]] for c in ORACLE_FIELDS
                    }
                except (GeneratorCapExceeded, SizeCapExceeded) as exc:
                    out["oracle"] = _skip_reason(exc)
    if "ordinary" in kinds:
        try:
            ordinary = power(edge_ideal(g), s, cfg.gen_cap)
            out["ordinary"] = _reg(ordinary, cfg)[cfg.field_char]
            if structural_predicates(g).is_bipartite:
                out["bipartite_equal"] = equals(ordinary, sym)
        except (GeneratorCapExceeded, SizeCapExceeded) as exc:
            out["ordinary"] = _skip_reason(exc)
    return out


def _values_job(args):
    g, s, cfg, kinds = args
    t0 = time.perf_counter()
    vals = compute_values(g, s, cfg, kinds)
    return vals, int(round((time.perf_counter() - t0) * 1000))


def _gather_values(tasks: list[GraphTask], cfg: RunConfig, kinds, jobs: int = 1, cache: RegularityCache | None = None):
    """Values and elapsed times for every task, in task order.

    Cache lookups and writes happen in this process only; workers compute
    just the kinds that were not cached. Skipped outcomes depend on the caps
    and are never cached.
    """
    hits: list[dict] = []
    todo = []
    for k, t in enumerate(tasks):
        hit = {}
        if cache is not None:
            for kind in kinds:
                v = cache.get(t.graph, t.s, cfg.field_char, kind)
                if v is not None:
                    hit[kind] = v
            if "ordinary" in hit:
                v = cache.get(t.graph, t.s, cfg.field_char, "bipartite_equal")
                if v is not None:
                    hit["bipartite_equal"] = v
        hits.append(hit)
        missing = tuple(kind for kind in kinds if kind not in hit)
        if missing:
            todo.append((k, missing))
    args = [(tasks[k].graph, tasks[k].s, cfg, missing) for k, missing in todo]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            computed = list(pool.map(_values_job, args, chunksize=max(1, len(args) // (8 * jobs))))
    else:
        computed = [_values_job(a) for a in args]
    results: list = [(hit, 0) for hit in hits]
    for (k, _), (vals, elapsed) in zip(todo, computed):
        results[k] = ({**hits[k], **vals}, elapsed)
        if cache is not None:
            for kind, v in vals.items():
                if not _is_skip(v):
                    cache.put(tasks[k].graph, tasks[k].s, cfg.field_char, v, kind)
    return results


def _is_skip(v) -> bool:
    return isinstance(v, str) and v.startswith("skipped")


def _base_row(t: GraphTask, cfg: RunConfig) -> ReportRow:
    g = t.graph
    return ReportRow(
        graph_id=t.graph_id, provenance=t.provenance, n=g.n, m=g.m,
        match=matching_number(g), ind_match=induced_matching_number(g),
        s=t.s, field_char=cfg.field_char,
    )


def _fill_row(row: ReportRow, vals: dict, elapsed: int, holds) -> ReportRow:
    """Populate a row; `holds(reg, formula)` decides ok/violated for the main check."""
    row.elapsed_ms = elapsed
    sym = vals.get("symbolic")
    if _is_skip(sym):
        row.status = sym
        return row
    row.reg_symbolic = sym
    problems = [] if holds(sym, row.formula_value) else ["formula"]
    if "ordinary" in vals:
        ordv = vals["ordinary"]
        if _is_skip(ordv):
            row.details["ordinary"] = ordv
        else:
            row.reg_ordinary = ordv
            row.details["ordinary_formula"] = ordv == row.formula_value
            row.details["symbolic_equals_ordinary_reg"] = ordv == sym
            if ordv != sym:
                problems.append("symbolic-vs-ordinary")
        if "bipartite_equal" in vals:
            row.details["bipartite_equal"] = vals["bipartite_equal"]
            if not vals["bipartite_equal"]:
                problems.append("bipartite-equality")
    if "oracle" in vals:
        orc = vals["oracle"]
        if _is_skip(orc):
            row.details["oracle"] = orc
        else:
            row.details["oracle"] = orc
            if any(a != b for a, b in orc.values()):
                problems.append("oracle")
    if problems:
        row.status = "violated"
        row.details["failed"] = problems
    return row


def _kinds(cfg: RunConfig):
    kinds = ["symbolic"]
    if cfg.ordinary:
        kinds.append("ordinary")
    if cfg.oracle:
        kinds.append("oracle")
    return kinds


def run_rows(tasks, cfg: RunConfig, holds, jobs: int = 1, cache=None) -> VerificationReport:
    kinds = _kinds(cfg)
    values = _gather_values(tasks, cfg, kinds, jobs, cache)
    rows = [_fill_row(_base_row(t, cfg), vals, el, holds) for t, (vals, el) in zip(tasks, values)]
    return VerificationReport(rows, cfg.to_dict())


# -- task lists ------------------------------------------------------------

def sweep_graphs(bounds: FamilyBounds, union_member_max: int = 5) -> list[tuple[str, str, Graph]]:
    """Family members, then disjoint unions of two small members.

    A union pairs members i <= j that both have at most `union_member_max`
    vertices and together fit in bounds.max_vertices.
    """
    fam = enumerate_family(bounds)
    out = [(f"cw{k:04d}", mem.params.label(), mem.graph) for k, mem in enumerate(fam)]
    small = [k for k, mem in enumerate(fam) if mem.graph.n <= union_member_max]
    u = 0
    for a, b in itertools.combinations_with_replacement(small, 2):
        ga, gb = fam[a].graph, fam[b].graph
        if ga.n + gb.n > bounds.max_vertices:
            continue
        out.append((f"cwu{u:04d}", f"union(cw{a:04d}+cw{b:04d})", disjoint_union(ga, gb)))
        u += 1
    return out


def connected_graphs(n_max: int, n_min: int = 2):
    """All connected labeled graphs on vertex sets 1..n, n_min <= n <= n_max.

    Edge subsets are visited in increasing bitmask order over the
    lexicographically ordered vertex pairs.
    """
    if n_max > 7:
        raise ValueError("exhaustive enumeration is limited to 7 vertices")
    for n in range(max(n_min, 1), n_max + 1):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        full = (1 << n) - 1
        for mask in range(1, 1 << len(pairs)):
            adj = [0] * (n + 1)
            edges = []
            for k, (u, v) in enumerate(pairs):
                if mask >> k & 1:
                    adj[u] |= 1 << (v - 1)
                    adj[v] |= 1 << (u - 1)
                    edges.append((u, v))
            seen, frontier = 1, 1
            while frontier:
                nxt = 0
                for v in range(n):
                    if frontier >> v & 1:
                        nxt |= adj[v + 1]
                frontier = nxt & ~seen
                seen |= nxt
            if seen == full:
                yield Graph(n, tuple(edges))


# -- sweeps ----------------------------------------------------------------

def verify_theorem_sweep(bounds: FamilyBounds, s_values, cfg: RunConfig = RunConfig(), jobs: int = 1,
                         cache=None, unions: bool = True, union_member_max: int = 5) -> VerificationReport:
    """reg(I(G)^(s)) == 2s + ind-match(G) - 1 for every sweep graph and s."""
    graphs = sweep_graphs(bounds, union_member_max if unions else 0)
    tasks = [GraphTask(gid, prov, g, s) for gid, prov, g in graphs for s in s_values]
    rep = run_rows(tasks, cfg, lambda r, f: r == f, jobs, cache)
    rep.config.update(bounds=_bounds_dict(bounds), s_values=list(s_values), unions=unions,
                      union_member_max=union_member_max)
    return rep


def verify_lower_bound(n_max: int, s_values, cfg: RunConfig = RunConfig(), jobs: int = 1,
                       cache=None) -> VerificationReport:
    """reg(I(G)^(s)) >= 2s + ind-match(G) - 1 on every connected graph with <= n_max vertices."""
    tasks = []
    for k, g in enumerate(connected_graphs(n_max)):
        for s in s_values:
            tasks.append(GraphTask(f"g{k:05d}", "connected", g, s))
    rep = run_rows(tasks, cfg, lambda r, f: r >= f, jobs, cache)
    for row in rep.rows:
        if row.reg_symbolic is not None:
            row.details["tight"] = row.reg_symbolic == row.formula_value
    rep.config.update(n_max=n_max, s_values=list(s_values))
    return rep


def verify_ordinary_power(g: Graph, s: int, cfg: RunConfig = RunConfig(), graph_id: str = "input",
                          provenance: str = "input") -> ReportRow:
    """reg(I(G)^s) against the formula, I^s == I^(s) for bipartite G, and reg(I^(s)) == reg(I^s)."""
    if not is_cameron_walker(g):
        raise PreconditionFailed("graph is not Cameron-Walker")
    cfg = replace(cfg, ordinary=True)
    task = GraphTask(graph_id, provenance, g, s)
    vals, el = _values_job((g, s, cfg, ("symbolic", "ordinary")))
    row = _fill_row(_base_row(task, cfg), vals, el, lambda r, f: r == f)
    if row.details.get("ordinary_formula") is False and row.status == "ok":
        row.status = "violated"
        row.details["failed"] = ["ordinary-formula"]
    return row


def verify_ordinary_sweep(graphs, s_values, cfg: RunConfig = RunConfig(), jobs: int = 1, cache=None) -> VerificationReport:
    tasks = [GraphTask(gid, prov, g, s) for gid, prov, g in graphs for s in s_values]
    cfg = replace(cfg, ordinary=True)
    rep = run_rows(tasks, cfg, lambda r, f: r == f, jobs, cache)
    for row in rep.rows:
        if row.details.get("ordinary_formula") is False and row.status == "ok":
            row.status = "violated"
            row.details["failed"] = ["ordinary-formula"]
        if row.reg_ordinary is None and row.status == "ok":
            row.status = row.details.get("ordinary", "skipped:ordinary")
    rep.config.update(s_values=list(s_values))
    return rep


def _bounds_dict(b: FamilyBounds) -> dict:
    return {
        "max_vertices": b.max_vertices, "max_pendants": b.max_pendants, "max_triangles": b.max_triangles,
        "max_star_leaves": b.max_star_leaves, "max_star_triangles": b.max_star_triangles,
        "skeleton_pool": "default" if b.skeleton_pool is None else [sk.name for sk in b.skeleton_pool],
    }


# -- colon identities --------------------------------------------------------

def _ideal_check(name: str, lhs: MonomialIdeal, rhs: MonomialIdeal) -> Check:
    return Check(name, "ideal==", str(lhs), str(rhs), equals(lhs, rhs))


def verify_colon_lemmas(g: Graph, s: int, cfg: RunConfig = RunConfig(), graph_id: str = "input") -> CheckReport:
    """Colon identities at every pendant triangle and pendant edge of g.

    Triangle {a,b,c}: (I^(s) : x_a x_b x_c) == I^(s-2).
    Pendant edge uv:  (I^(s) : x_u x_v) == I^(s-1).
    Negative symbolic exponents give the unit ideal.
    """
    if s < 1:
        raise ValueError("colon checks need s >= 1")
    t0 = time.perf_counter()
    rep = CheckReport(graph_id, s, "colon")
    try:
        sym = symbolic_power(g, s, cfg.gen_cap)
        feats = pendant_features(g)
        lower = {k: symbolic_power(g, k, cfg.gen_cap) for k in {s - 1, s - 2}}
        for tri in feats.pendant_triangles:
            lhs = colon_by_variables(sym, (tri.apex, tri.b, tri.c))
            rep.checks.append(_ideal_check(f"triangle {tri.apex},{tri.b},{tri.c}: (I^(s):xaxbxc) == I^(s-2)", lhs, lower[s - 2]))
        for u, v in feats.pendant_edges:
            lhs = colon_by_variables(sym, (u, v))
            rep.checks.append(_ideal_check(f"pendant edge {u}-{v}: (I^(s):xuxv) == I^(s-1)", lhs, lower[s - 1]))
    except (GeneratorCapExceeded, SizeCapExceeded) as exc:
        rep.status = _skip_reason(exc)
    rep.elapsed_ms = int(round((time.perf_counter() - t0) * 1000))
    return rep.finish()


def _colon_job(args):
    g, s, cfg, gid = args
    return verify_colon_lemmas(g, s, cfg, gid)


def verify_colon_sweep(graphs, s_values, cfg: RunConfig = RunConfig(), jobs: int = 1) -> VerificationReport:
    args = [(g, s, cfg, gid) for gid, _, g in graphs for s in s_values]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_colon_job, args, chunksize=max(1, len(args) // (8 * jobs))))
    else:
        rows = [_colon_job(a) for a in args]
    return VerificationReport(rows, {**cfg.to_dict(), "s_values": list(s_values)})


# -- inequality trace ---------------------------------------------------------

def triangle_first_labeling(g: Graph, apex: int, b: int, c: int) -> tuple[Graph, dict[int, int]]:
    """Relabel so the triangle becomes x1 (apex), x2, x3; other vertices keep their order."""
    order = [apex, b, c] + [v for v in g.vertices if v not in (apex, b, c)]
    mapping = {old: new for new, old in enumerate(order, start=1)}
    return g.relabel(mapping), mapping


def proof_trace(g: Graph, s: int, cfg: RunConfig = RunConfig(), graph_id: str = "input",
                triangle: int = 0) -> CheckReport:
    """Evaluate every regularity bound of the inductive argument on one instance.

    g must be connected, Cameron-Walker and have a pendant triangle whose
    removal leaves an edge; s >= 2. Chordal graphs are accepted (none of the
    bounds uses non-chordality) and flagged in the first check's note. The
    chosen pendant triangle is relabeled to x1 (apex), x2, x3 and every
    intermediate ideal is computed explicitly.
    """
    if s < 2:
        raise PreconditionFailed("the trace needs s >= 2")
    info = structural_predicates(g)
    if not info.is_connected:
        raise PreconditionFailed("graph is not connected")
    if not is_cameron_walker(g):
        raise PreconditionFailed("graph is not Cameron-Walker")
    tris = pendant_features(g).pendant_triangles
    if not tris:
        raise PreconditionFailed("graph has no pendant triangle")
    tri = tris[triangle]
    if not [e for e in g.edges if not {tri.b, tri.c} & set(e)]:
        raise PreconditionFailed("removing the triangle's degree-2 vertices leaves no edge")
    G, mapping = triangle_first_labeling(g, tri.apex, tri.b, tri.c)
    t0 = time.perf_counter()
    rep = CheckReport(graph_id, s, "proof-trace")
    try:
        _trace_checks(G, s, cfg, rep.checks)
    except (GeneratorCapExceeded, SizeCapExceeded) as exc:
        rep.status = _skip_reason(exc)
    rep.checks.insert(0, Check("triangle relabeled to x1,x2,x3", "info",
                               f"{tri.apex},{tri.b},{tri.c}", "1,2,3", True,
                               note=("chordal " if info.is_chordal else "non-chordal ")
                               + " ".join(f"{o}->{n}" for o, n in sorted(mapping.items()))))
    rep.elapsed_ms = int(round((time.perf_counter() - t0) * 1000))
    return rep.finish()


def _trace_checks(G: Graph, s: int, cfg: RunConfig, checks: list):
    n = G.n
    nu = induced_matching_number(G)
    cap = cfg.gen_cap

    def reg(I):
        return _reg(I, cfg)[cfg.field_char]

    def sym_of(h: Graph, k: int) -> MonomialIdeal:
        return symbolic_power(h, k, cap)

    def le(name, a, b):
        checks.append(Check(name, "<=", a, b, a <= b))

    def eq(name, a, b):
        checks.append(Check(name, "==", a, b, a == b))

    def ideq(name, A, B):
        checks.append(_ideal_check(name, A, B))

    x = {i: product_of_variables((i,), n) for i in (1, 2, 3)}
    I = sym_of(G, s)
    I_c1 = colon_by_monomial(I, x[1])
    I_p1 = add_variables(I, [1])
    I_c12 = colon_by_variables(I, (1, 2))
    I_c1_p2 = add_variables(I_c1, [2])
    I_c123 = colon_by_variables(I, (1, 2, 3))
    I_c12_p3 = add_variables(I_c12, [3])
    I_c1_p2_c3 = colon_by_monomial(I_c1_p2, x[3])
    I_c1_p23 = add_variables(I_c1, [2, 3])
    r = {name: reg(J) for name, J in [
        ("I", I), ("I:x1", I_c1), ("I,x1", I_p1), ("I:x1x2", I_c12), ("(I:x1),x2", I_c1_p2),
        ("I:x1x2x3", I_c123), ("(I:x1x2),x3", I_c12_p3), ("((I:x1),x2):x3", I_c1_p2_c3),
        ("(I:x1),x2,x3", I_c1_p23),
    ]}
    I_prev = sym_of(G, s - 1)
    r_prev = reg(I_prev)

    # split at x1
    le("reg(I) <= max(reg(I:x1)+1, reg(I,x1))", r["I"], max(r["I:x1"] + 1, r["I,x1"]))

    # deletion of x1
    G1, _ = delete_vertices(G, [1])
    J1 = sym_of(G1, s)
    eq("ind-match(G-x1) == ind-match(G)", induced_matching_number(G1), nu)
    ideq("(I,x1) == (I(G-x1)^(s),x1)", I_p1, add_variables(J1, [1]))
    eq("reg(I,x1) == reg(I(G-x1)^(s))", r["I,x1"], reg(J1))
    le("reg(I,x1) <= 2s+ind-match-1", r["I,x1"], 2 * s + nu - 1)

    # split of (I:x1) at x2
    le("reg(I:x1) <= max(reg(I:x1x2)+1, reg((I:x1),x2))", r["I:x1"], max(r["I:x1x2"] + 1, r["(I:x1),x2"]))

    # split of (I:x1x2) at x3
    le("reg(I:x1x2) <= max(reg(I:x1x2x3)+1, reg((I:x1x2),x3))", r["I:x1x2"],
       max(r["I:x1x2x3"] + 1, r["(I:x1x2),x3"]))

    # triangle colon
    ideq("(I:x1x2x3) == I^(s-2)", I_c123, sym_of(G, s - 2))
    le("reg(I:x1x2x3) <= 2(s-2)+ind-match-1", r["I:x1x2x3"], 2 * s + nu - 5)

    # deletion of x3 and the pendant edge x1x2
    G3, _ = delete_vertices(G, [3])
    J3 = sym_of(G3, s)
    J3_prev = sym_of(G3, s - 1)
    ideq("((I:x1x2),x3) == ((I(G-x3)^(s):x1x2),x3)", I_c12_p3, add_variables(colon_by_variables(J3, (1, 2)), [3]))
    ideq("(I(G-x3)^(s):x1x2) == I(G-x3)^(s-1)", colon_by_variables(J3, (1, 2)), J3_prev)
    r3 = reg(J3_prev)
    eq("reg((I:x1x2),x3) == reg(I(G-x3)^(s-1))", r["(I:x1x2),x3"], r3)
    le("reg(I(G-x3)^(s-1)) <= reg(I^(s-1))", r3, r_prev)
    le("reg(I^(s-1)) <= 2(s-1)+ind-match-1", r_prev, 2 * s + nu - 3)
    le("reg((I:x1x2),x3) <= 2s+ind-match-3", r["(I:x1x2),x3"], 2 * s + nu - 3)
    le("reg(I:x1x2) <= 2s+ind-match-3", r["I:x1x2"], 2 * s + nu - 3)

    # split of ((I:x1),x2) at x3
    le("reg((I:x1),x2) <= max(reg(((I:x1),x2):x3)+1, reg((I:x1),x2,x3))", r["(I:x1),x2"],
       max(r["((I:x1),x2):x3"] + 1, r["(I:x1),x2,x3"]))

    # deletion of x2 and the pendant edge x1x3
    G2, _ = delete_vertices(G, [2])
    J2 = sym_of(G2, s)
    J2_prev = sym_of(G2, s - 1)
    ideq("(((I:x1),x2):x3) == ((I(G-x2)^(s):x1x3),x2)", I_c1_p2_c3, add_variables(colon_by_variables(J2, (1, 3)), [2]))
    ideq("(I(G-x2)^(s):x1x3) == I(G-x2)^(s-1)", colon_by_variables(J2, (1, 3)), J2_prev)
    r2 = reg(J2_prev)
    eq("reg(((I:x1),x2):x3) == reg(I(G-x2)^(s-1))", r["((I:x1),x2):x3"], r2)
    le("reg(I(G-x2)^(s-1)) <= reg(I^(s-1))", r2, r_prev)
    le("reg(((I:x1),x2):x3) <= 2s+ind-match-3", r["((I:x1),x2):x3"], 2 * s + nu - 3)

    # deletion of x2 and x3
    G23, _ = delete_vertices(G, [2, 3])
    J23 = sym_of(G23, s)
    J23_c1 = colon_by_monomial(J23, x[1])
    ideq("((I:x1),x2,x3) == ((I(G-{x2,x3})^(s):x1),x2,x3)", I_c1_p23, add_variables(J23_c1, [2, 3]))
    r23c = reg(J23_c1)
    r23 = reg(J23)
    eq("reg((I:x1),x2,x3) == reg(I(G-{x2,x3})^(s):x1)", r["(I:x1),x2,x3"], r23c)
    le("reg(I(G-{x2,x3})^(s):x1) <= reg(I(G-{x2,x3})^(s))", r23c, r23)
    eq("ind-match(G-{x2,x3}) == ind-match(G)-1", induced_matching_number(G23), nu - 1)
    le("reg(I(G-{x2,x3})^(s)) <= 2s+ind-match-2", r23, 2 * s + nu - 2)
    le("reg((I:x1),x2,x3) <= 2s+ind-match-2", r["(I:x1),x2,x3"], 2 * s + nu - 2)
    le("reg((I:x1),x2) <= 2s+ind-match-2", r["(I:x1),x2"], 2 * s + nu - 2)

    # conclusion
    le("reg(I:x1) <= 2s+ind-match-2", r["I:x1"], 2 * s + nu - 2)
    eq("reg(I) == 2s+ind-match-1", r["I"], 2 * s + nu - 1)


def trace_candidates(graphs, non_chordal_only: bool = False) -> list[tuple[str, str, Graph]]:
    """Sweep graphs that satisfy the trace preconditions."""
    out = []
    for gid, prov, g in graphs:
        info = structural_predicates(g)
        tris = pendant_features(g).pendant_triangles
        if non_chordal_only and info.is_chordal:
            continue
        if info.is_connected and tris and any(not {tris[0].b, tris[0].c} & set(e) for e in g.edges):
            out.append((gid, prov, g))
    return out


def _trace_job(args):
    g, s, cfg, gid = args
    return proof_trace(g, s, cfg, gid)


def proof_trace_sweep(graphs, s_values, cfg: RunConfig = RunConfig(), jobs: int = 1) -> VerificationReport:
    args = [(g, s, cfg, gid) for gid, _, g in trace_candidates(graphs) for s in s_values]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_trace_job, args, chunksize=1))
    else:
        rows = [_trace_job(a) for a in args]
    return VerificationReport(rows, {**cfg.to_dict(), "s_values": list(s_values)})


# -- oracle comparisons on random ideals ------------------------------------------

def random_ideal(rng, max_vars: int = 6, max_gens: int = 10, max_exp: int = 3) -> MonomialIdeal:
    """A random proper nonzero monomial ideal; generators are drawn then minimalized."""
    n = rng.randint(1, max_vars)
    while True:
        gens = [tuple(rng.randint(0, max_exp) for _ in range(n)) for _ in range(rng.randint(1, max_gens))]
        gens = [g for g in gens if any(g)]
        if gens:
            return minimalize(gens, n)


def oracle_checks(I: MonomialIdeal, cfg: RunConfig = RunConfig(), box: bool = False, graph_id: str = "ideal") -> CheckReport:
    """Upper-Koszul against polarization (coarse tables and regularity) in
    characteristics 0 and 2; with box=True also lcm-lattice against full-box
    multigraded tables."""
    t0 = time.perf_counter()
    rep = CheckReport(graph_id, 0, "oracle")
    fields = [CoefficientField(c) for c in ORACLE_FIELDS]
    rep.checks.append(Check("ideal", "info", str(I), I.n, True))
    try:
        kt = betti_tables(I, fields, lattice_cap=cfg.lattice_cap)
        ht = hochster_coarse_tables(I, fields, var_cap=cfg.var_cap, lattice_cap=cfg.lattice_cap)
        for f in fields:
            c = f.characteristic
            rep.checks.append(Check(f"char {c}: reg upper-Koszul == reg polarization", "==",
                                    kt[f].regularity(), max((j - i for i, j in ht[f]), default=0),
                                    kt[f].regularity() == max((j - i for i, j in ht[f]), default=0)))
            rep.checks.append(Check(f"char {c}: coarse tables agree", "==", str(kt[f].coarse), str(ht[f]),
                                    kt[f].coarse == ht[f]))
        if box:
            bt = betti_tables(I, fields, candidates="box")
            for f in fields:
                rep.checks.append(Check(f"char {f.characteristic}: lattice == box multigraded table", "==",
                                        len(kt[f].multigraded), len(bt[f].multigraded),
                                        kt[f].multigraded == bt[f].multigraded))
    except (GeneratorCapExceeded, SizeCapExceeded) as exc:
        rep.status = _skip_reason(exc)
    rep.elapsed_ms = int(round((time.perf_counter() - t0) * 1000))
    return rep.finish()


def verify_oracle_random(count: int, seed: int, cfg: RunConfig = RunConfig(), max_vars: int = 6,
                         max_gens: int = 10, max_exp: int = 3) -> VerificationReport:
    """Oracle comparisons on `count` seeded random ideals.

    Ideals with at most 4 variables and exponents at most 2 also get the
    full-box cross-check.
    """
    rng = random.Random(seed)
    rows = []
    for k in range(count):
        I = random_ideal(rng, max_vars, max_gens, max_exp)
        small = I.n <= 4 and I.array().max() <= 2
        rows.append(oracle_checks(I, cfg, box=small, graph_id=f"r{k:04d}"))
    return VerificationReport(rows, {**cfg.to_dict(), "count": count, "seed": seed, "max_vars": max_vars,
                                     "max_gens": max_gens, "max_exp": max_exp})
