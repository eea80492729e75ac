"""Independent regularity oracle: polarization followed by Hochster's formula.

Polarizing replaces x_i^a by x_{i,1} x_{i,2} ... x_{i,a}, producing a
squarefree ideal J with the same graded Betti numbers. For squarefree J with
Stanley-Reisner complex Delta, beta_{i,W}(J) = dim H~_{|W|-i-2}(Delta_W), and
only unions of generator supports can carry nonzero values.
"""
from __future__ import annotations

from collections import defaultdict

import numpy as np

from . import _kernels
from .betti import FACE_CAP, _check_proper, _field_primes, prime_pool
from .errors import GeneratorCapExceeded
from .homology import QQ, CoefficientField
from .monomial import MonomialIdeal, minimalize

VAR_CAP = 24
DIRECT_LIMIT = 5
LATTICE_CAP = 200_000


def polarize(I: MonomialIdeal) -> tuple[MonomialIdeal, list[tuple[int, int]]]:
    """Squarefree polarization of I and the (variable, copy) label of each new variable."""
    rho = [max((g[i] for g in I.gens), default=0) for i in range(I.n)]
    labels = [(i + 1, k) for i in range(I.n) for k in range(1, rho[i] + 1)]
    offset = np.concatenate([[0], np.cumsum(rho)[:-1]]).astype(int) if I.n else []
    gens = []
    for g in I.gens:
        e = [0] * len(labels)
        for i, a in enumerate(g):
            for k in range(a):
                e[offset[i] + k] = 1
        gens.append(tuple(e))
    return minimalize(gens, len(labels)), labels


def _masks(J: MonomialIdeal) -> np.ndarray:
    return np.array([sum(1 << j for j, a in enumerate(g) if a) for g in J.gens], dtype=np.int64)


def hochster_coarse_tables(
    I: MonomialIdeal,
    fields=(QQ,),
    var_cap: int = VAR_CAP,
    direct_limit: int = DIRECT_LIMIT,
    lattice_cap: int = LATTICE_CAP,
    face_cap: int = FACE_CAP,
) -> dict[CoefficientField, dict[tuple[int, int], int]]:
    """Coarse Betti tables of I computed on its polarization."""
    _check_proper(I)
    J, _ = polarize(I)
    N = J.n
    if N > min(var_cap, 62):
        raise GeneratorCapExceeded(f"polarization needs {N} variables, cap is {var_cap}", cap="var-cap")
    G = J.array()
    weights = (np.int64(1) << np.arange(N, dtype=np.int64)).astype(np.int64)
    pts, status = _kernels.lcm_lattice(G, weights, lattice_cap)
    if status != _kernels.OK:
        raise GeneratorCapExceeded(f"lcm lattice has more than {lattice_cap} points", cap="lattice-cap")
    Ws = pts @ weights
    fields = tuple(fields)
    primes, rational = _field_primes(fields)
    idx, dims, cert, status = _kernels.hochster_homology(
        Ws, _masks(J), primes, rational, prime_pool(), direct_limit, face_cap
    )
    if status != _kernels.OK:
        raise GeneratorCapExceeded("Alexander dual exceeds the face cap", cap="face-cap")
    if len(cert) and not cert.all():
        raise GeneratorCapExceeded("rational rank could not be certified", cap="prime-pool")
    tables = {f: defaultdict(int) for f in fields}
    for row, t in enumerate(idx):
        w = int(pts[t].sum())
        for q, f in enumerate(fields):
            for d1 in range(dims.shape[2]):
                r = int(dims[row, q, d1])
                if r:
                    i = w - (d1 - 1) - 2
                    tables[f][i, w] += r
    return {f: dict(sorted(t.items())) for f, t in tables.items()}


def regularities_via_polarization(I: MonomialIdeal, fields=(QQ,), **kwargs) -> dict[CoefficientField, int]:
    if I.is_unit():
        return {f: 0 for f in fields}
    tables = hochster_coarse_tables(I, fields, **kwargs)
    return {f: max((j - i for (i, j) in t), default=0) for f, t in tables.items()}


def regularity_via_polarization(I: MonomialIdeal, field: CoefficientField = QQ, **kwargs) -> int:
    return regularities_via_polarization(I, (field,), **kwargs)[field]
