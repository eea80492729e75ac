"""Cameron-Walker graphs: recognition, decomposition and generation.

A graph is Cameron-Walker when its matching number equals its induced
matching number. A connected one is a star, a star triangle (triangles glued
at one vertex), or a connected bipartite skeleton H with parts X, Y where
every X vertex carries at least one pendant edge and Y vertices may carry
pendant triangles.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import BoundsExceeded, NotCameronWalker, NotConnected
from .graph import (
    Graph,
    induced_matching_number,
    matching_number,
    path_graph,
    structural_predicates,
)

MAX_GENERATED_VERTICES = 62


def is_cameron_walker(g: Graph) -> bool:
    return matching_number(g) == induced_matching_number(g)


# -- parameters and generation ------------------------------------------

@dataclass(frozen=True)
class CWParams:
    """Structural parameters of a connected Cameron-Walker graph.

    kind is "star" (uses m), "star_triangle" (uses t) or "skeleton" (uses H,
    X, pendants and triangles). For a skeleton, H lives on 1..h, X is one side
    of its bipartition, `pendants` maps every X vertex to its pendant-edge
    count and `triangles` maps Y vertices to pendant-triangle counts.
    """

    kind: str
    m: int = 0
    t: int = 0
    H: Graph | None = None
    X: tuple[int, ...] = ()
    pendants: tuple[tuple[int, int], ...] = ()
    triangles: tuple[tuple[int, int], ...] = ()

    @property
    def Y(self) -> tuple[int, ...]:
        if self.H is None:
            return ()
        return tuple(v for v in self.H.vertices if v not in self.X)

    def vertex_count(self) -> int:
        if self.kind == "star":
            return self.m + 1
        if self.kind == "star_triangle":
            return 2 * self.t + 1
        return self.H.n + sum(c for _, c in self.pendants) + 2 * sum(c for _, c in self.triangles)

    def to_dict(self) -> dict:
        if self.kind == "star":
            return {"kind": "star", "m": self.m}
        if self.kind == "star_triangle":
            return {"kind": "star_triangle", "t": self.t}
        return {
            "kind": "skeleton",
            "H": self.H.to_dict(),
            "X": list(self.X),
            "pendants": {str(x): c for x, c in self.pendants},
            "triangles": {str(y): c for y, c in self.triangles if c},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CWParams":
        kind = data.get("kind")
        if kind == "star":
            return cls("star", m=int(data["m"]))
        if kind == "star_triangle":
            return cls("star_triangle", t=int(data["t"]))
        if kind == "skeleton":
            H = Graph.from_dict(data["H"])
            X = tuple(sorted(int(x) for x in data["X"]))
            pend = tuple(sorted((int(k), int(v)) for k, v in data.get("pendants", {}).items()))
            tri = tuple(sorted((int(k), int(v)) for k, v in data.get("triangles", {}).items()))
            return cls("skeleton", H=H, X=X, pendants=pend, triangles=tri)
        raise BoundsExceeded(f"unknown parameter kind {kind!r}")

    def label(self) -> str:
        if self.kind == "star":
            return f"star(m={self.m})"
        if self.kind == "star_triangle":
            return f"star_triangle(t={self.t})"
        pend = ",".join(str(c) for _, c in self.pendants)
        tri = ",".join(str(dict(self.triangles).get(y, 0)) for y in self.Y)
        return f"skeleton(H={_edge_label(self.H)};X={'/'.join(map(str, self.X))};p={pend};t={tri})"


def _edge_label(g: Graph) -> str:
    return " ".join(f"{u}{v}" if g.n < 10 else f"{u}-{v}" for u, v in g.edges)


def _check_params(p: CWParams):
    if p.kind == "star":
        if p.m < 1:
            raise BoundsExceeded("a star needs m >= 1")
    elif p.kind == "star_triangle":
        if p.t < 1:
            raise BoundsExceeded("a star triangle needs t >= 1")
    elif p.kind == "skeleton":
        if p.H is None or p.H.n < 2:
            raise BoundsExceeded("skeleton graph H needs at least two vertices")
        info = structural_predicates(p.H)
        if not info.is_connected:
            raise BoundsExceeded("skeleton graph H must be connected")
        xs = set(p.X)
        if not xs or not xs <= set(p.H.vertices) or xs == set(p.H.vertices):
            raise BoundsExceeded("X must be a nonempty proper subset of V(H)")
        for u, v in p.H.edges:
            if (u in xs) == (v in xs):
                raise BoundsExceeded(f"edge {u}-{v} does not cross the X/Y partition")
        pend = dict(p.pendants)
        if set(pend) != xs or any(c < 1 for c in pend.values()):
            raise BoundsExceeded("every X vertex needs a pendant count >= 1")
        tri = dict(p.triangles)
        if not set(tri) <= set(p.Y) or any(c < 0 for c in tri.values()):
            raise BoundsExceeded("triangle counts must be >= 0 and sit on Y vertices")
    else:
        raise BoundsExceeded(f"unknown parameter kind {p.kind!r}")
    if p.vertex_count() > MAX_GENERATED_VERTICES:
        raise BoundsExceeded(f"{p.vertex_count()} vertices exceeds {MAX_GENERATED_VERTICES}")


def generate(p: CWParams) -> Graph:
    """The Cameron-Walker graph realizing p.

    Labels: skeleton vertices first, then pendant leaves (by X vertex in
    order), then triangle vertices (by Y vertex in order).
    """
    _check_params(p)
    if p.kind == "star":
        return Graph(p.m + 1, tuple((1, i) for i in range(2, p.m + 2)))
    if p.kind == "star_triangle":
        edges = []
        for k in range(p.t):
            a, b = 2 + 2 * k, 3 + 2 * k
            edges += [(1, a), (1, b), (a, b)]
        return Graph(2 * p.t + 1, tuple(edges))
    edges = list(p.H.edges)
    nxt = p.H.n
    for x, count in sorted(p.pendants):
        for _ in range(count):
            nxt += 1
            edges.append((x, nxt))
    for y, count in sorted(p.triangles):
        for _ in range(count):
            edges += [(y, nxt + 1), (y, nxt + 2), (nxt + 1, nxt + 2)]
            nxt += 2
    return Graph(nxt, tuple(edges))


# -- decomposition -------------------------------------------------------

@dataclass(frozen=True)
class CWDecomposition:
    """Structure-theorem decomposition of a connected Cameron-Walker graph.

    Vertex labels are those of the decomposed graph. For a star, `center` and
    `leaves`; for a star triangle, `center` and `triangle_pairs`; for a
    skeleton, H (on the ambient label space), X, Y, the pendant leaves of each
    X vertex and the triangle pairs of each Y vertex.
    """

    kind: str
    n: int
    center: int = 0
    leaves: tuple[int, ...] = ()
    triangle_pairs: tuple[tuple[int, int], ...] = ()
    H: Graph | None = None
    X: tuple[int, ...] = ()
    Y: tuple[int, ...] = ()
    pendant_leaves: dict = field(default_factory=dict)
    pendant_triangles: dict = field(default_factory=dict)

    @property
    def pendant_edge_counts(self) -> dict[int, int]:
        return {x: len(v) for x, v in self.pendant_leaves.items()}

    @property
    def pendant_triangle_counts(self) -> dict[int, int]:
        return {y: len(self.pendant_triangles.get(y, ())) for y in self.Y}

    def to_graph(self) -> Graph:
        if self.kind == "star":
            return Graph(self.n, tuple((self.center, v) for v in self.leaves))
        if self.kind == "star_triangle":
            edges = []
            for a, b in self.triangle_pairs:
                edges += [(self.center, a), (self.center, b), (a, b)]
            return Graph(self.n, tuple(edges))
        edges = list(self.H.edges)
        for x, leaves in self.pendant_leaves.items():
            edges += [(x, v) for v in leaves]
        for y, pairs in self.pendant_triangles.items():
            for a, b in pairs:
                edges += [(y, a), (y, b), (a, b)]
        return Graph(self.n, tuple(edges))

    def params(self) -> CWParams:
        """Parameters with the skeleton relabeled onto 1..h in label order."""
        if self.kind == "star":
            return CWParams("star", m=len(self.leaves))
        if self.kind == "star_triangle":
            return CWParams("star_triangle", t=len(self.triangle_pairs))
        hv = sorted(self.X + self.Y)
        mp = {v: i for i, v in enumerate(hv, start=1)}
        H = Graph(len(hv), tuple((mp[u], mp[v]) for u, v in self.H.edges))
        return CWParams(
            "skeleton",
            H=H,
            X=tuple(sorted(mp[x] for x in self.X)),
            pendants=tuple(sorted((mp[x], len(v)) for x, v in self.pendant_leaves.items())),
            triangles=tuple(sorted((mp[y], len(self.pendant_triangles.get(y, ()))) for y in self.Y)),
        )


def decompose(g: Graph) -> CWDecomposition:
    """Decompose a connected graph without isolated vertices.

    Checks for a star, then a star triangle, then a skeleton. Every degree-one
    vertex is read as a pendant leaf; a skeleton decomposition with a Y vertex
    of degree one can always be rewritten this way, so nothing is lost.
    """
    info = structural_predicates(g)
    if not info.is_connected or g.m == 0:
        raise NotConnected("decompose needs a connected graph with at least one edge")
    deg = g.degrees()
    adj = g.adjacency()
    n = g.n

    for c in g.vertices:
        if deg[c] == n - 1 and all(deg[v] == 1 for v in g.vertices if v != c):
            return CWDecomposition("star", n, center=c, leaves=tuple(v for v in g.vertices if v != c))
    if n % 2 == 1:
        for c in g.vertices:
            others = [v for v in g.vertices if v != c]
            if deg[c] == n - 1 and all(deg[v] == 2 for v in others):
                pairs = sorted({tuple(sorted((v, next(iter(adj[v] - {c}))))) for v in others})
                return CWDecomposition("star_triangle", n, center=c, triangle_pairs=tuple(pairs))

    triangles: dict[int, list[tuple[int, int]]] = {}
    tri_vertices = set()
    for a, b in g.edges:
        if deg[a] == 2 and deg[b] == 2:
            common = adj[a] & adj[b]
            if len(common) == 1:
                y = next(iter(common))
                triangles.setdefault(y, []).append((a, b))
                tri_vertices |= {a, b}
    leaves = {v for v in g.vertices if deg[v] == 1}
    support: dict[int, list[int]] = {}
    for v in sorted(leaves):
        support.setdefault(next(iter(adj[v])), []).append(v)
    h_vertices = set(g.vertices) - leaves - tri_vertices
    X = set(support)
    Y = h_vertices - X
    h_edges = tuple(e for e in g.edges if e[0] in h_vertices and e[1] in h_vertices)

    def fail(reason):
        raise NotCameronWalker(reason)

    if X & leaves or X & tri_vertices:
        fail("a leaf is attached to a leaf or triangle vertex")
    if len(h_vertices) < 2 or not Y:
        fail("no bipartite skeleton with both parts nonempty")
    if not set(triangles) <= Y:
        fail("a pendant triangle is attached to a vertex carrying pendant edges")
    for u, v in h_edges:
        if (u in X) == (v in X):
            fail(f"skeleton edge {u}-{v} lies inside one side of the partition")
    H = Graph(n, h_edges)
    comps = structural_predicates(H).components
    if sum(1 for c in comps if set(c) & h_vertices) != 1:
        fail("skeleton is disconnected")
    return CWDecomposition(
        "skeleton",
        n,
        H=H,
        X=tuple(sorted(X)),
        Y=tuple(sorted(Y)),
        pendant_leaves={x: tuple(support[x]) for x in sorted(X)},
        pendant_triangles={y: tuple(sorted(triangles[y])) for y in sorted(triangles)},
    )


# -- family enumeration -------------------------------------------------

@dataclass(frozen=True)
class Skeleton:
    name: str
    H: Graph
    X: tuple[int, ...]


def _bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    color = {1: 0}
    adj = g.adjacency()
    stack = [1]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in color:
                color[v] = 1 - color[u]
                stack.append(v)
    side0 = tuple(v for v in g.vertices if color[v] == 0)
    return side0, tuple(v for v in g.vertices if color[v] == 1)


def default_skeleton_pool(max_size: int = 6) -> list[Skeleton]:
    """Paths, stars and complete bipartite graphs on at most max_size vertices.

    Each graph appears once per choice of which bipartition side is X.
    """
    graphs: list[tuple[str, Graph]] = []
    for k in range(2, max_size + 1):
        graphs.append((f"P{k}", path_graph(k)))
    for k in range(3, max_size):
        graphs.append((f"K1,{k}", Graph(k + 1, tuple((1, i) for i in range(2, k + 2)))))
    for a in range(2, max_size // 2 + 1):
        for b in range(a, max_size - a + 1):
            edges = tuple((i, a + j) for i in range(1, a + 1) for j in range(1, b + 1))
            graphs.append((f"K{a},{b}", Graph(a + b, edges)))
    pool = []
    for name, h in graphs:
        side0, side1 = _bipartition(h)
        pool.append(Skeleton(f"{name}/X0", h, side0))
        pool.append(Skeleton(f"{name}/X1", h, side1))
    return pool


@dataclass(frozen=True)
class FamilyBounds:
    max_vertices: int = 11
    max_pendants: int = 2
    max_triangles: int = 2
    skeleton_pool: tuple[Skeleton, ...] | None = None
    max_star_leaves: int | None = None
    max_star_triangles: int | None = None


@dataclass(frozen=True)
class FamilyMember:
    graph: Graph
    params: CWParams


def enumerate_family(bounds: FamilyBounds, check: bool = True) -> list[FamilyMember]:
    """Deterministic list of Cameron-Walker graphs within the bounds.

    Stars come first, then star triangles, then skeleton graphs in
    lexicographic order of (skeleton index, pendant vector, triangle vector).
    Graphs are deduplicated by labeled edge set, first occurrence kept.
    """
    nv = bounds.max_vertices
    pool = default_skeleton_pool() if bounds.skeleton_pool is None else list(bounds.skeleton_pool)
    max_leaves = nv - 1 if bounds.max_star_leaves is None else min(bounds.max_star_leaves, nv - 1)
    max_tri = (nv - 1) // 2 if bounds.max_star_triangles is None else min(bounds.max_star_triangles, (nv - 1) // 2)

    candidates: list[CWParams] = [CWParams("star", m=m) for m in range(1, max_leaves + 1)]
    candidates += [CWParams("star_triangle", t=t) for t in range(1, max_tri + 1)]
    for sk in pool:
        X = tuple(sorted(sk.X))
        Y = tuple(v for v in sk.H.vertices if v not in X)
        if sk.H.n + len(X) > nv:
            continue
        for pend in itertools.product(range(1, bounds.max_pendants + 1), repeat=len(X)):
            base = sk.H.n + sum(pend)
            if base > nv:
                continue
            for tri in itertools.product(range(bounds.max_triangles + 1), repeat=len(Y)):
                if base + 2 * sum(tri) > nv:
                    continue
                candidates.append(CWParams(
                    "skeleton", H=sk.H, X=X,
                    pendants=tuple(zip(X, pend)),
                    triangles=tuple(zip(Y, tri)),
                ))

    seen = set()
    out = []
    for p in candidates:
        g = generate(p)
        if g.edges in seen:
            continue
        seen.add(g.edges)
        if check and not is_cameron_walker(g):
            raise AssertionError(f"generator produced a non Cameron-Walker graph: {p.label()}")
        out.append(FamilyMember(g, p))
    return out
