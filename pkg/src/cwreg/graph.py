"""Simple graphs on vertices 1..n and the invariants the regularity formula uses."""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .errors import GraphFormatError, InvalidVertex, SizeCapExceeded

MATCHING_EDGE_CAP = 24
COVER_COUNT_CAP = 100_000


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on the labeled vertices 1..n.

    `edges` is kept as a lexicographically sorted tuple of pairs (u, v) with
    u < v, so two graphs are equal exactly when their labeled edge sets are.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphFormatError(f"vertex count must be nonnegative, got {self.n}")
        norm = set()
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InvalidVertex(f"edge {u}-{v} outside 1..{self.n}")
            key = (min(u, v), max(u, v))
            if key in norm:
                raise GraphFormatError(f"duplicate edge {key[0]}-{key[1]}")
            norm.add(key)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(self.vertices, 0)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in set(self.edges)

    def non_isolated(self) -> tuple[int, ...]:
        return tuple(sorted({v for e in self.edges for v in e}))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def relabel(self, mapping: dict[int, int], n: int | None = None) -> "Graph":
        """Apply a vertex map old -> new to every edge."""
        return Graph(self.n if n is None else n, tuple((mapping[u], mapping[v]) for u, v in self.edges))

    def compact(self) -> tuple["Graph", dict[int, int]]:
        """Drop isolated vertices; returns the graph on 1..k and the old->new map."""
        keep = self.non_isolated()
        mapping = {old: new for new, old in enumerate(keep, start=1)}
        return self.relabel(mapping, len(keep)), mapping

    def canonical_key(self) -> str:
        return f"{self.n};" + ",".join(f"{u}-{v}" for u, v in self.edges)

    # -- serialization -------------------------------------------------
    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"] + [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not rows:
            raise GraphFormatError("empty graph file")
        try:
            n, m = (int(x) for x in rows[0])
            edges = [(int(a), int(b)) for a, b in rows[1:]]
        except ValueError as exc:
            raise GraphFormatError(f"malformed graph text: {exc}") from None
        if len(edges) != m:
            raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
        return cls(n, tuple(edges))

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        try:
            return cls(int(data["n"]), tuple((int(u), int(v)) for u, v in data["edges"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphFormatError(f"malformed graph JSON: {exc}") from None

    @classmethod
    def parse(cls, text: str) -> "Graph":
        """Read either the plain text format or the JSON format."""
        stripped = text.lstrip()
        if stripped.startswith("{"):
            return cls.from_dict(json.loads(stripped))
        return cls.from_text(text)


def path_graph(k: int) -> Graph:
    return Graph(k, tuple((i, i + 1) for i in range(1, k)))


def cycle_graph(k: int) -> Graph:
    return Graph(k, tuple((i, i + 1) for i in range(1, k)) + ((1, k),))


def complete_graph(k: int) -> Graph:
    return Graph(k, tuple(combinations(range(1, k + 1), 2)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertices of h are shifted by g.n."""
    return Graph(g.n + h.n, g.edges + tuple((u + g.n, v + g.n) for u, v in h.edges))


# -- matchings ---------------------------------------------------------

def _max_independent_edges(m: int, conflict: list[int]) -> int:
    """Largest set of pairwise non-conflicting edges, by include/exclude search."""
    best = 0

    def go(avail: int, size: int):
        nonlocal best
        if size + avail.bit_count() <= best:
            return
        if not avail:
            best = size
            return
        low = avail & -avail
        i = low.bit_length() - 1
        go(avail & ~conflict[i] & ~low, size + 1)
        go(avail & ~low, size)

    go((1 << m) - 1, 0)
    return best


def _check_edge_cap(g: Graph, cap: int):
    if g.m > cap:
        raise SizeCapExceeded(f"{g.m} edges exceeds the enumeration cap {cap}")


def matching_number(g: Graph, cap: int = MATCHING_EDGE_CAP) -> int:
    """Size of a maximum matching, by exhaustive search."""
    _check_edge_cap(g, cap)
    edges = g.edges
    conflict = [
        sum(1 << j for j, f in enumerate(edges) if set(e) & set(f))
        for e in edges
    ]
    return _max_independent_edges(len(edges), conflict)


def induced_matching_number(g: Graph, cap: int = MATCHING_EDGE_CAP) -> int:
    """Size of a largest induced matching, by exhaustive search.

    Two edges may both be chosen only if they are disjoint and no edge of g
    joins an endpoint of one to an endpoint of the other.
    """
    _check_edge_cap(g, cap)
    edges = g.edges
    adj = g.adjacency()
    conflict = []
    for e in edges:
        reach = set(e) | adj[e[0]] | adj[e[1]]
        conflict.append(sum(1 << j for j, f in enumerate(edges) if reach & set(f)))
    return _max_independent_edges(len(edges), conflict)


# -- vertex covers -----------------------------------------------------

def minimal_vertex_covers(g: Graph, cap: int = COVER_COUNT_CAP) -> list[tuple[int, ...]]:
    """All minimal vertex covers, as sorted tuples in lexicographic order.

    Computed as complements of the maximal independent sets, which are
    enumerated by Bron-Kerbosch with pivoting on the complement graph.
    """
    n = g.n
    full = (1 << n) - 1
    adj = [0] * n
    for u, v in g.edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    compatible = [full & ~adj[v] & ~(1 << v) for v in range(n)]
    found: list[int] = []

    def bk(r: int, p: int, x: int):
        if not p and not x:
            found.append(r)
            if len(found) > cap:
                raise SizeCapExceeded(f"more than {cap} minimal vertex covers")
            return
        pivot_pool = p | x
        pivot = max(_bits(pivot_pool), key=lambda u: (p & compatible[u]).bit_count())
        for v in _bits(p & ~compatible[pivot]):
            bit = 1 << v
            bk(r | bit, p & compatible[v], x & compatible[v])
            p &= ~bit
            x |= bit

    if n:
        bk(0, full, 0)
    covers = [tuple(v + 1 for v in _bits(full & ~s)) for s in found]
    return sorted(covers)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def is_vertex_cover(g: Graph, cover) -> bool:
    c = set(cover)
    return all(u in c or v in c for u, v in g.edges)


# -- structure ---------------------------------------------------------

@dataclass(frozen=True)
class StructureInfo:
    is_bipartite: bool
    is_chordal: bool
    is_connected: bool
    components: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]


def structural_predicates(g: Graph) -> StructureInfo:
    nxg = g.to_networkx()
    comps = tuple(sorted(tuple(sorted(c)) for c in nx.connected_components(nxg)))
    return StructureInfo(
        is_bipartite=nx.is_bipartite(nxg),
        is_chordal=nx.is_chordal(nxg),
        is_connected=g.n > 0 and len(comps) == 1,
        components=comps,
        degrees=tuple(g.degrees()[v] for v in g.vertices),
    )


def delete_vertices(g: Graph, removed) -> tuple[Graph, dict[int, int]]:
    """G - U on the same label space, plus the map compacting the survivors.

    Every edge meeting U is dropped and the vertices of U become isolated, so
    ideals of the result live in the same polynomial ring as those of g.
    """
    u_set = set(removed)
    bad = sorted(v for v in u_set if not 1 <= v <= g.n)
    if bad:
        raise InvalidVertex(f"vertices {bad} not in 1..{g.n}")
    h = Graph(g.n, tuple(e for e in g.edges if not u_set & set(e)))
    survivors = [v for v in g.vertices if v not in u_set]
    return h, {old: new for new, old in enumerate(survivors, start=1)}


@dataclass(frozen=True, order=True)
class PendantTriangle:
    apex: int
    b: int
    c: int

    @property
    def vertices(self) -> tuple[int, int, int]:
        return tuple(sorted((self.apex, self.b, self.c)))


@dataclass(frozen=True)
class PendantFeatures:
    pendant_edges: tuple[tuple[int, int], ...]
    pendant_triangles: tuple[PendantTriangle, ...]


def pendant_features(g: Graph) -> PendantFeatures:
    """Pendant edges and pendant triangles of g.

    A pendant triangle has exactly two vertices of degree two; the third is
    its apex. A triangle component, where all three vertices have degree two,
    is reported once with its smallest vertex as apex.
    """
    deg = g.degrees()
    adj = g.adjacency()
    pend_edges = tuple(e for e in g.edges if deg[e[0]] == 1 or deg[e[1]] == 1)
    triangles = set()
    for u, v in g.edges:
        for w in adj[u] & adj[v]:
            if w > v:
                tri = (u, v, w)
                low = [x for x in tri if deg[x] == 2]
                if len(low) == 2:
                    apex = next(x for x in tri if deg[x] != 2)
                    triangles.add(PendantTriangle(apex, *sorted(low)))
                elif len(low) == 3:
                    triangles.add(PendantTriangle(u, v, w))
    return PendantFeatures(pend_edges, tuple(sorted(triangles)))
