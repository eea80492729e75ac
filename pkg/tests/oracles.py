"""Slow, obviously-correct reference computations used only by the tests.

Nothing here shares code with the package beyond the Graph container.
"""
from fractions import Fraction
from itertools import combinations, product


def brute_matching(edges, induced=False):
    edges = [tuple(e) for e in edges]
    adj = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    best = 0
    for k in range(len(edges), 0, -1):
        if k <= best:
            break
        for sub in combinations(edges, k):
            verts = [v for e in sub for v in e]
            if len(set(verts)) != 2 * k:
                continue
            if induced:
                vs = set(verts)
                inside = sum(1 for u, v in edges if u in vs and v in vs)
                if inside != k:
                    continue
            best = k
            break
    return best


def brute_minimal_covers(n, edges):
    covers = []
    for mask in range(1 << n):
        C = {v for v in range(1, n + 1) if mask >> (v - 1) & 1}
        if all(u in C or v in C for u, v in edges):
            covers.append(frozenset(C))
    cover_set = set(covers)
    return sorted(tuple(sorted(C)) for C in covers if not any((C - {c}) in cover_set for c in C))


def in_ideal(gens, b):
    return any(all(g[i] <= b[i] for i in range(len(b))) for g in gens)


def brute_symbolic_member(n, edges, s, b):
    """x^b in I(G)^(s) iff every minimal cover C has sum_{c in C} b_c >= s."""
    return all(sum(b[c - 1] for c in C) >= s for C in brute_minimal_covers(n, edges))


def fraction_rank(mat):
    """Rank over Q with Fraction Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in mat]
    rank = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][c] != 0:
                f = a[i][c] / a[rank][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def mod_rank(mat, p):
    a = [[x % p for x in row] for row in mat]
    rank = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][c], p - 2, p)
        for i in range(len(a)):
            if i != rank and a[i][c]:
                f = a[i][c] * inv % p
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def complex_homology(faces, p=0):
    """Reduced homology dims from d=-1 of the complex given by ALL its faces."""
    faces = sorted({tuple(sorted(f)) for f in faces}, key=lambda f: (len(f), f))
    if not faces:
        return []
    top = max(len(f) for f in faces) - 1
    by_dim = {d: [f for f in faces if len(f) == d + 1] for d in range(-1, top + 1)}
    ranks = {}
    for d in range(0, top + 1):
        rows, cols = by_dim[d - 1], by_dim[d]
        idx = {f: i for i, f in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for j, f in enumerate(cols):
            for k in range(len(f)):
                mat[idx[f[:k] + f[k + 1:]]][j] = (-1) ** k
        ranks[d] = (fraction_rank(mat) if p == 0 else mod_rank(mat, p)) if rows and cols else 0
    return [len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0) for d in range(-1, top + 1)]


def brute_betti(gens, n, p=0):
    """Multigraded Betti numbers over the full exponent box, from the definition of K^b."""
    rho = [max(g[i] for g in gens) for i in range(n)]
    out = {}
    for b in product(*(range(r + 1) for r in rho)):
        support = [j for j in range(n) if b[j] > 0]
        faces = []
        for k in range(len(support) + 1):
            for tau in combinations(support, k):
                rest = list(b)
                for j in tau:
                    rest[j] -= 1
                if in_ideal(gens, rest):
                    faces.append(tau)
        for i, r in enumerate(complex_homology(faces, p)):
            if r:
                out[i, tuple(b)] = r
    return out


def brute_regularity(gens, n, p=0):
    return max(sum(b) - i for (i, b) in brute_betti(gens, n, p))
