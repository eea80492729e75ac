"""Multigraded Betti numbers and Castelnuovo-Mumford regularity of monomial ideals.

beta_{i,b}(I) = dim H~_{i-1}(K^b(I)) where the upper-Koszul complex K^b(I)
consists of the squarefree tau <= b with x^(b - tau) in I. Nonzero values only
occur at lcms of generator subsets, so the candidates are the lcm lattice.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import _kernels
from .errors import GeneratorCapExceeded
from .homology import QQ, CoefficientField, SimplicialComplex, is_prime, reduced_homology_dims
from .monomial import MonomialIdeal

LATTICE_CAP = 200_000
FACE_CAP = 8192


@lru_cache(maxsize=1)
def prime_pool(size: int = 48) -> np.ndarray:
    """Primes just below 2**31, largest first."""
    out = []
    p = 2**31 - 1
    while len(out) < size:
        if is_prime(p):
            out.append(p)
        p -= 2
    return np.array(out, dtype=np.int64)


@dataclass
class BettiTable:
    """Multigraded Betti numbers beta_{i,b} of a monomial ideal over `field`."""

    n: int
    multigraded: dict = field(default_factory=dict)  # (i, b) -> rank
    field: CoefficientField = QQ

    @property
    def coarse(self) -> dict[tuple[int, int], int]:
        out: dict = defaultdict(int)
        for (i, b), r in self.multigraded.items():
            out[i, sum(b)] += r
        return dict(sorted(out.items()))

    def regularity(self) -> int:
        return max((j - i for (i, j), r in self.coarse.items() if r), default=0)

    def projective_dimension(self) -> int:
        return max((i for (i, _), r in self.coarse.items() if r), default=0)

    def csv_rows(self) -> list[tuple[int, int, int]]:
        return [(i, j, r) for (i, j), r in self.coarse.items()]

    def to_dict(self) -> dict:
        return {
            "field_char": self.field.characteristic,
            "multigraded": [[i, list(b), r] for (i, b), r in sorted(self.multigraded.items())],
        }


def upper_koszul(I: MonomialIdeal, b) -> SimplicialComplex:
    """K^b(I) on support(b), built face by face from its definition."""
    b = tuple(b)
    if len(b) != I.n or min(b, default=0) < 0:
        raise ValueError("multidegree must be a nonnegative vector of the ring's length")
    support = [j for j in range(I.n) if b[j] > 0]
    faces = []
    for k in range(len(support) + 1):
        for tau in itertools.combinations(support, k):
            rest = list(b)
            for j in tau:
                rest[j] -= 1
            if tuple(rest) in I:
                faces.append(tuple(j + 1 for j in tau))
    return SimplicialComplex.from_faces([j + 1 for j in support], faces)


def _lattice_weights(rho: np.ndarray) -> np.ndarray:
    radix = rho + 1
    if float(np.prod(radix.astype(float))) >= 2.0**62:
        raise GeneratorCapExceeded("exponent box too large to index", cap="lattice-cap")
    return np.concatenate([[1], np.cumprod(radix[:-1])]).astype(np.int64)


def lcm_lattice(I: MonomialIdeal, cap: int = LATTICE_CAP) -> np.ndarray:
    """Rows are the lcms of all nonempty sets of minimal generators."""
    G = I.array()
    pts, status = _kernels.lcm_lattice(G, _lattice_weights(G.max(axis=0)), cap)
    if status != _kernels.OK:
        raise GeneratorCapExceeded(f"lcm lattice has more than {cap} points", cap="lattice-cap")
    return pts


def exponent_box(I: MonomialIdeal) -> np.ndarray:
    """Every b with 0 <= b <= componentwise max exponent of the generators."""
    rho = I.array().max(axis=0)
    return np.array(list(itertools.product(*(range(r + 1) for r in rho))), dtype=np.int64).reshape(-1, I.n)


def _field_primes(fields):
    primes = []
    rational = []
    for f in fields:
        primes.append(_kernels.LARGE_PRIME if f.characteristic == 0 else f.characteristic)
        rational.append(f.characteristic == 0)
    return np.array(primes, dtype=np.int64), np.array(rational, dtype=np.bool_)


def _check_proper(I: MonomialIdeal):
    if I.is_zero():
        raise ValueError("Betti numbers of the zero ideal are not defined here")
    if I.is_unit():
        raise ValueError("the unit ideal is free; it has no Betti table of interest")


def betti_tables(
    I: MonomialIdeal,
    fields=(QQ,),
    lattice_cap: int = LATTICE_CAP,
    candidates: str = "lattice",
    face_cap: int = FACE_CAP,
) -> dict[CoefficientField, BettiTable]:
    """Betti tables of I over several fields in one pass over the candidates.

    candidates="box" evaluates every multidegree in the exponent box instead
    of the lcm lattice (a cross-check for small ideals).
    """
    _check_proper(I)
    fields = tuple(fields)
    G = I.array()
    pts = lcm_lattice(I, lattice_cap) if candidates == "lattice" else exponent_box(I)
    primes, rational = _field_primes(fields)
    idx, dims, cert, status = _kernels.multigraded_homology(
        np.ascontiguousarray(pts), G, primes, rational, prime_pool(), face_cap
    )
    if status != _kernels.OK:
        raise GeneratorCapExceeded("upper-Koszul complex exceeds the face cap", cap="face-cap")
    tables = {f: BettiTable(I.n, {}, f) for f in fields}
    for row, t in enumerate(idx):
        b = tuple(int(x) for x in pts[t])
        for q, f in enumerate(fields):
            hom = dims[row, q]
            if rational[q] and not cert[row]:
                hom = reduced_homology_dims(upper_koszul(I, b), f)
            for i, r in enumerate(hom):
                if r:
                    tables[f].multigraded[i, b] = int(r)
    return tables


def betti_table(I: MonomialIdeal, field: CoefficientField = QQ, **kwargs) -> BettiTable:
    return betti_tables(I, (field,), **kwargs)[field]


def regularity(I: MonomialIdeal, field: CoefficientField = QQ, **kwargs) -> int:
    """reg(I) = max{j - i : beta_{i,j}(I) != 0}; the unit ideal has regularity 0."""
    if I.is_unit():
        return 0
    return betti_table(I, field, **kwargs).regularity()


def regularities(I: MonomialIdeal, fields=(QQ,), **kwargs) -> dict[CoefficientField, int]:
    if I.is_unit():
        return {f: 0 for f in fields}
    return {f: t.regularity() for f, t in betti_tables(I, fields, **kwargs).items()}
