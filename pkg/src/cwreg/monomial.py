"""Monomial ideals in K[x1..xn] with exact, minimally generated arithmetic.

Monomials are exponent tuples of length n. An ideal is stored through its
unique minimal generating set in graded lexicographic order (total degree
first, then lex with x1 > x2 > ...). The unit ideal has the single generator
(0, ..., 0) and the zero ideal has none.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from . import _kernels
from .errors import GeneratorCapExceeded
from .graph import Graph, minimal_vertex_covers

GEN_CAP = 5000

Monomial = tuple  # exponent vector


def grlex_key(e):
    return (sum(e), tuple(-x for x in e))


def monomial_to_string(e) -> str:
    parts = [f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(e, start=1) if a]
    return "*".join(parts) if parts else "1"


_TERM = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def monomial_from_string(text: str, n: int) -> Monomial:
    """Parse "x3^2*x5" (or "1") into an exponent vector of length n."""
    text = text.strip().replace(" ", "")
    exps = [0] * n
    if text == "1":
        return tuple(exps)
    for term in text.split("*"):
        match = _TERM.match(term)
        if not match:
            raise ValueError(f"bad monomial term {term!r}")
        i = int(match.group(1))
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside x1..x{n}")
        exps[i - 1] += int(match.group(2) or 1)
    return tuple(exps)


def variable(i: int, n: int) -> Monomial:
    return tuple(1 if j == i else 0 for j in range(1, n + 1))


def product_of_variables(vs, n: int) -> Monomial:
    e = [0] * n
    for v in vs:
        e[v - 1] += 1
    return tuple(e)


def divides(u, v) -> bool:
    return all(a <= b for a, b in zip(u, v))


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple[Monomial, ...]

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_zero(self) -> bool:
        return not self.gens

    def __len__(self):
        return len(self.gens)

    def __contains__(self, mono) -> bool:
        return any(divides(g, mono) for g in self.gens)

    def array(self) -> np.ndarray:
        return np.array(self.gens, dtype=np.int64).reshape(len(self.gens), self.n)

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def __str__(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(monomial_to_string(g) for g in self.gens) + ")"

    def to_dict(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_dict(cls, data: dict) -> "MonomialIdeal":
        n = int(data["n"])
        gens = []
        for g in data["gens"]:
            if isinstance(g, str):
                gens.append(monomial_from_string(g, n))
            else:
                if len(g) != n or any(int(a) < 0 for a in g):
                    raise ValueError(f"bad exponent vector {g}")
                gens.append(tuple(int(a) for a in g))
        return minimalize(gens, n)

    @classmethod
    def parse(cls, text: str) -> "MonomialIdeal":
        """Ideal JSON, or text: first line n, then one monomial per line."""
        stripped = text.strip()
        if stripped.startswith("{"):
            return cls.from_dict(json.loads(stripped))
        lines = [ln.strip() for ln in stripped.splitlines() if ln.strip() and not ln.startswith("#")]
        n = int(lines[0])
        return minimalize([monomial_from_string(ln, n) for ln in lines[1:]], n)


def _from_array(arr: np.ndarray, n: int) -> MonomialIdeal:
    gens = sorted(map(tuple, arr.tolist()), key=grlex_key)
    return MonomialIdeal(n, tuple(gens))


def _minimal_array(arr: np.ndarray) -> np.ndarray:
    if arr.shape[0] <= 1:
        return arr
    arr = np.unique(arr, axis=0)
    deg = arr.sum(axis=1)
    order = np.argsort(deg, kind="stable")
    arr, deg = arr[order], deg[order]
    return arr[_kernels.minimal_rows(np.ascontiguousarray(arr), deg)]


def minimalize(gens, n: int, cap: int | None = None) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by `gens`."""
    arr = np.array(list(gens), dtype=np.int64).reshape(-1, n)
    if arr.size and arr.min() < 0:
        raise ValueError("negative exponent")
    arr = _minimal_array(arr)
    if cap is not None and arr.shape[0] > cap:
        raise GeneratorCapExceeded(f"{arr.shape[0]} generators exceeds cap {cap}")
    return _from_array(arr, n)


def edge_ideal(g: Graph) -> MonomialIdeal:
    return MonomialIdeal(g.n, tuple(sorted((product_of_variables(e, g.n) for e in g.edges), key=grlex_key)))


def _check_ring(I: MonomialIdeal, J: MonomialIdeal):
    if I.n != J.n:
        raise ValueError(f"ideals live in different rings ({I.n} vs {J.n} variables)")


def intersect(I: MonomialIdeal, J: MonomialIdeal, cap: int = GEN_CAP) -> MonomialIdeal:
    """I ∩ J, generated by the pairwise lcms of generators."""
    _check_ring(I, J)
    if I.is_zero() or J.is_zero():
        return MonomialIdeal.zero(I.n)
    A, B = I.array(), J.array()
    chunks = []
    step = max(1, 200_000 // max(1, B.shape[0]))
    for i in range(0, A.shape[0], step):
        block = np.maximum(A[i:i + step, None, :], B[None, :, :]).reshape(-1, I.n)
        chunks.append(_minimal_array(block))
    out = _minimal_array(np.concatenate(chunks))
    if out.shape[0] > cap:
        raise GeneratorCapExceeded(f"{out.shape[0]} generators exceeds cap {cap}")
    return _from_array(out, I.n)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal, cap: int = GEN_CAP) -> MonomialIdeal:
    _check_ring(I, J)
    return minimalize(I.gens + J.gens, I.n, cap)


def add_variables(I: MonomialIdeal, variables) -> MonomialIdeal:
    """The ideal (I, x_v for v in variables)."""
    return minimalize(I.gens + tuple(variable(v, I.n) for v in variables), I.n)


def product(I: MonomialIdeal, J: MonomialIdeal, cap: int = GEN_CAP) -> MonomialIdeal:
    _check_ring(I, J)
    if I.is_zero() or J.is_zero():
        return MonomialIdeal.zero(I.n)
    A, B = I.array(), J.array()
    out = _minimal_array((A[:, None, :] + B[None, :, :]).reshape(-1, I.n))
    if out.shape[0] > cap:
        raise GeneratorCapExceeded(f"{out.shape[0]} generators exceeds cap {cap}")
    return _from_array(out, I.n)


def power(I: MonomialIdeal, s: int, cap: int = GEN_CAP) -> MonomialIdeal:
    """Ordinary power I^s; I^0 is the unit ideal."""
    if s < 0:
        raise ValueError("power needs s >= 0")
    result = MonomialIdeal.unit(I.n)
    for _ in range(s):
        result = product(result, I, cap)
    return result


def _degree_vectors(variables, k: int, n: int) -> np.ndarray:
    rows = [product_of_variables(c, n) for c in combinations_with_replacement(sorted(variables), k)]
    return np.array(rows, dtype=np.int64).reshape(-1, n)


def prime_power(C, s: int, n: int, cap: int = GEN_CAP) -> MonomialIdeal:
    """(x_c : c in C)^s, generated by all degree-s monomials in those variables."""
    if s < 1 or not C:
        raise ValueError("prime_power needs s >= 1 and a nonempty C")
    arr = _degree_vectors(C, s, n)
    if arr.shape[0] > cap:
        raise GeneratorCapExceeded(f"{arr.shape[0]} generators exceeds cap {cap}")
    return _from_array(arr, n)


def intersect_prime_power(I: MonomialIdeal, C, s: int, cap: int = GEN_CAP) -> MonomialIdeal:
    """I ∩ (x_c : c in C)^s without forming all pairwise lcms.

    A generator u already of C-degree >= s survives; otherwise it is raised by
    every monomial in the C variables of the missing degree.
    """
    A = I.array()
    cols = np.array(sorted(C), dtype=np.int64) - 1
    short = s - A[:, cols].sum(axis=1)
    parts = [A[short <= 0]]
    for k in range(1, s + 1):
        rows = A[short == k]
        if rows.shape[0]:
            W = _degree_vectors(C, k, I.n)
            parts.append((rows[:, None, :] + W[None, :, :]).reshape(-1, I.n))
    out = _minimal_array(np.concatenate(parts))
    if out.shape[0] > cap:
        raise GeneratorCapExceeded(f"{out.shape[0]} generators exceeds cap {cap}")
    return _from_array(out, I.n)


def symbolic_power(g: Graph, s: int, cap: int = GEN_CAP) -> MonomialIdeal:
    """I(G)^(s) as the intersection of p_C^s over minimal vertex covers C.

    Covers are intersected smallest first, minimalizing after every step.
    For s <= 0 the result is the unit ideal.
    """
    if s <= 0:
        return MonomialIdeal.unit(g.n)
    if g.m == 0:
        raise ValueError("symbolic power of the zero ideal is undefined")
    covers = sorted(minimal_vertex_covers(g), key=lambda c: (len(c), c))
    ideal = prime_power(covers[0], s, g.n, cap)
    for C in covers[1:]:
        ideal = intersect_prime_power(ideal, C, s, cap)
    return ideal


def colon_by_monomial(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """(I : m), generated by u / gcd(u, m)."""
    if len(m) != I.n:
        raise ValueError("monomial length does not match the ring")
    if I.is_zero():
        return I
    arr = np.maximum(I.array() - np.array(m, dtype=np.int64), 0)
    return _from_array(_minimal_array(arr), I.n)


def colon_by_variables(I: MonomialIdeal, variables) -> MonomialIdeal:
    return colon_by_monomial(I, product_of_variables(variables, I.n))


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _check_ring(I, J)
    return I.gens == J.gens


def is_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True when I ⊆ J."""
    _check_ring(I, J)
    return all(g in J for g in I.gens)
