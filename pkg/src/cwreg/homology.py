"""Finite simplicial complexes and their reduced homology over a field.

This is the reference implementation: faces are enumerated explicitly and
boundary ranks are computed by exact elimination in Python integers
(fraction-free Bareiss over Q, modular elimination over GF(p)).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True)
class CoefficientField:
    """Q when characteristic is 0, otherwise GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or (p and not is_prime(p)):
            raise ValueError(f"field characteristic must be 0 or a prime, got {p}")

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d, r = p - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if a % p == 0:
            continue
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


QQ = CoefficientField(0)
GF2 = CoefficientField(2)


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets over a ground set of vertex labels.

    `facets == ()` is the void complex (no faces at all); `facets ==
    (frozenset(),)` is the irrelevant complex {∅}, whose only reduced
    homology is H~_{-1} = K.
    """

    ground: tuple[int, ...]
    facets: tuple[frozenset, ...]

    @classmethod
    def from_faces(cls, ground, faces) -> "SimplicialComplex":
        faces = {frozenset(f) for f in faces}
        for f in faces:
            for v in f:
                if f - {v} not in faces:
                    raise ValueError(f"face family not closed under subsets: {sorted(f)}")
        maximal = [f for f in faces if not any(f < g for g in faces)]
        return cls(tuple(sorted(ground)), tuple(sorted(maximal, key=lambda f: (len(f), sorted(f)))))

    @classmethod
    def from_facets(cls, ground, facets) -> "SimplicialComplex":
        facets = {frozenset(f) for f in facets}
        maximal = [f for f in facets if not any(f < g for g in facets)]
        return cls(tuple(sorted(ground)), tuple(sorted(maximal, key=lambda f: (len(f), sorted(f)))))

    def is_void(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> int:
        """-1 for {∅}; -2 stands in for the void complex."""
        return max((len(f) - 1 for f in self.facets), default=-2)

    def faces(self) -> dict[int, list[tuple[int, ...]]]:
        """Faces grouped by dimension, each group lexicographically sorted."""
        out: dict[int, set] = {}
        for f in self.facets:
            fs = sorted(f)
            for k in range(len(fs) + 1):
                out.setdefault(k - 1, set()).update(combinations(fs, k))
        return {d: sorted(fs) for d, fs in sorted(out.items())}

    def f_vector(self) -> list[int]:
        """Face counts for dimensions -1..dim."""
        faces = self.faces()
        return [len(faces.get(d, ())) for d in range(-1, self.dimension + 1)]


def boundary_matrix(rows: list[tuple], cols: list[tuple]) -> list[list[int]]:
    """Integer matrix of the boundary map from `cols` faces to `rows` faces."""
    index = {f: i for i, f in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, sigma in enumerate(cols):
        for pos in range(len(sigma)):
            tau = sigma[:pos] + sigma[pos + 1:]
            mat[index[tau]][j] = -1 if pos % 2 else 1
    return mat


def rank_fraction_free(mat: list[list[int]]) -> int:
    """Rank over Q by Bareiss elimination; all intermediate values are integers."""
    a = [row[:] for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    rank = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        for i in range(rank + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (p * a[i][j] - a[i][c] * a[rank][j]) // prev
            a[i][c] = 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def rank_mod_p(mat: list[list[int]], p: int) -> int:
    a = [[x % p for x in row] for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][c], p - 2, p)
        for i in range(rank + 1, rows):
            f = a[i][c] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def matrix_rank(mat, field: CoefficientField) -> int:
    if not mat or not mat[0]:
        return 0
    if field.characteristic == 0:
        return rank_fraction_free(mat)
    return rank_mod_p(mat, field.characteristic)


def reduced_homology_dims(K: SimplicialComplex, field: CoefficientField = QQ) -> list[int]:
    """dim H~_d(K; field) for d = -1..dim(K), listed from d = -1.

    The void complex returns [0]; {∅} returns [1].
    """
    if K.is_void():
        return [0]
    faces = K.faces()
    top = K.dimension
    ranks = {}
    for d in range(0, top + 1):
        ranks[d] = matrix_rank(boundary_matrix(faces[d - 1], faces[d]), field)
    out = []
    for d in range(-1, top + 1):
        out.append(len(faces[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return out


def reduced_euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** d * f for d, f in zip(range(-1, K.dimension + 1), K.f_vector()))
