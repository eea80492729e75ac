"""Compiled inner loops for monomial and homology computations.

Everything here works on plain numpy arrays. Exponent vectors are rows of an
int64 matrix; vertex sets of simplicial complexes are int64 bitmasks, so a
complex may have at most 62 vertices.
"""
import numpy as np
from numba import njit

LARGE_PRIME = 2147483647  # 2**31 - 1; products of residues fit in int64

# status codes returned by the kernels
OK = 0
CAP_EXCEEDED = 1
FACE_CAP_EXCEEDED = 2


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def minimal_rows(M, deg):
    """Mask of the rows of M that are not divisible by an earlier row.

    Rows must be distinct and sorted by ascending degree.
    """
    m, n = M.shape
    keep = np.zeros(m, np.bool_)
    kept = np.empty(m, np.int64)
    nk = 0
    for i in range(m):
        ok = True
        for t in range(nk):
            r = kept[t]
            if deg[r] >= deg[i]:
                break
            div = True
            for j in range(n):
                if M[r, j] > M[i, j]:
                    div = False
                    break
            if div:
                ok = False
                break
        if ok:
            keep[i] = True
            kept[nk] = i
            nk += 1
    return keep


@njit(cache=True)
def _hash_slot(key, mask):
    h = np.uint64(key) * np.uint64(11400714819323198485)
    return np.int64(h >> np.uint64(20)) & mask


@njit(cache=True)
def lcm_lattice(G, weights, cap):
    """All lcms of nonempty subsets of the rows of G.

    Closes the generator set under lcm with a generator, which reaches every
    subset lcm. Returns (points, status); status is CAP_EXCEEDED when more
    than `cap` points exist.
    """
    g, n = G.shape
    size = 1024
    while size < 2 * (cap + g):
        size *= 2
    mask = size - 1
    table = np.full(size, -1, np.int64)
    pts = np.empty((max(g, 64), n), np.int64)
    count = 0
    for r in range(g):
        key = 0
        for j in range(n):
            key += G[r, j] * weights[j]
        slot = _hash_slot(key, mask)
        while table[slot] != -1 and table[slot] != key:
            slot = (slot + 1) & mask
        if table[slot] == -1:
            table[slot] = key
            pts[count, :] = G[r, :]
            count += 1
    cur = np.empty(n, np.int64)
    head = 0
    while head < count:
        for r in range(g):
            key = 0
            for j in range(n):
                v = pts[head, j]
                if G[r, j] > v:
                    v = G[r, j]
                cur[j] = v
                key += v * weights[j]
            slot = _hash_slot(key, mask)
            while table[slot] != -1 and table[slot] != key:
                slot = (slot + 1) & mask
            if table[slot] == -1:
                if count >= cap:
                    return pts[:count], CAP_EXCEEDED
                table[slot] = key
                if count == pts.shape[0]:
                    grown = np.empty((2 * count, n), np.int64)
                    grown[:count, :] = pts[:count, :]
                    pts = grown
                pts[count, :] = cur
                count += 1
        head += 1
    return pts[:count], OK


@njit(cache=True)
def _maximal(F, k):
    """Deduplicate F[:k] and keep inclusion-maximal sets; returns new length."""
    # order by popcount descending so a set can only sit inside an earlier one
    pc = np.empty(k, np.int64)
    for a in range(k):
        pc[a] = popcount(F[a])
    order = np.argsort(-pc, kind="mergesort")
    tmp = F[:k].copy()
    kk = 0
    for t in range(k):
        f = tmp[order[t]]
        inside = False
        for c in range(kk):
            if (F[c] & f) == f:
                inside = True
                break
        if not inside:
            F[kk] = f
            kk += 1
    return kk


@njit(cache=True)
def strong_collapse(F, k):
    """Remove dominated vertices until none remain.

    F[:k] holds the facets of a complex as bitmasks. A vertex u is dominated
    when every facet containing u also contains some fixed v != u; deleting u
    preserves the homotopy type. Returns the number of facets of the core.
    """
    k = _maximal(F, k)
    while k > 1:
        verts = 0
        for a in range(k):
            verts |= F[a]
        removed = False
        u_bits = verts
        while u_bits:
            low = u_bits & -u_bits
            u_bits ^= low
            acc = verts
            for a in range(k):
                if F[a] & low:
                    acc &= F[a]
            if acc != low:
                for a in range(k):
                    F[a] &= ~low
                removed = True
                break
        if not removed:
            break
        k = _maximal(F, k)
    return k


@njit(cache=True)
def _pow_mod(a, e, p):
    r = 1
    a %= p
    while e:
        if e & 1:
            r = r * a % p
        a = a * a % p
        e >>= 1
    return r


@njit(cache=True)
def rank_mod(A, p):
    """Rank of A over GF(p); A is destroyed. Entries must lie in [0, p)."""
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                t = A[piv, j]
                A[piv, j] = A[r, j]
                A[r, j] = t
        inv = _pow_mod(A[r, c], p - 2, p)
        for i in range(r + 1, rows):
            if A[i, c] != 0:
                f = A[i, c] * inv % p
                for j in range(c, cols):
                    if A[r, j] != 0:
                        A[i, j] = (A[i, j] - f * A[r, j]) % p
        r += 1
    return r


@njit(cache=True)
def _compact(masks, k, verts):
    """Relabel the vertices in `verts` to 0..v-1 inside masks[:k]."""
    pos = np.empty(64, np.int64)
    v = 0
    for j in range(63):
        if (verts >> j) & 1:
            pos[v] = j
            v += 1
    out = np.empty(k, np.int64)
    for a in range(k):
        m = 0
        for t in range(v):
            if (masks[a] >> pos[t]) & 1:
                m |= np.int64(1) << t
        out[a] = m
    return out, v


@njit(cache=True)
def face_list_from_facets(facets, face_cap):
    """Sorted list of all faces (bitmasks) of the complex with these facets."""
    total = 0
    for a in range(facets.shape[0]):
        total += np.int64(1) << popcount(facets[a])
        if total > 64 * face_cap:
            return np.empty(0, np.int64), FACE_CAP_EXCEEDED
    buf = np.empty(total, np.int64)
    t = 0
    for a in range(facets.shape[0]):
        f = facets[a]
        sub = f
        while True:
            buf[t] = sub
            t += 1
            if sub == 0:
                break
            sub = (sub - 1) & f
    faces = np.unique(buf)
    if faces.shape[0] > face_cap:
        return faces, FACE_CAP_EXCEEDED
    return faces, OK


@njit(cache=True)
def _sorted_face_keys(faces, v):
    nf = faces.shape[0]
    keys = np.empty(nf, np.int64)
    for a in range(nf):
        keys[a] = (popcount(faces[a]) << 40) | faces[a]
    keys.sort()
    fvec = np.zeros(v + 2, np.int64)
    for a in range(nf):
        fvec[keys[a] >> 40] += 1
    start = np.zeros(v + 3, np.int64)
    for d in range(v + 2):
        start[d + 1] = start[d] + fvec[d]
    return keys, fvec, start


@njit(cache=True)
def _boundary_matrix(keys, fvec, start, d, p):
    """Matrix over GF(p) of the map from d-faces to (d-1)-faces."""
    low = (np.int64(1) << 40) - 1
    nrow = fvec[d]
    ncol = fvec[d + 1]
    row_keys = keys[start[d]:start[d + 1]]
    A = np.zeros((nrow, ncol), np.int64)
    for c in range(ncol):
        sigma = keys[start[d + 1] + c] & low
        bits = sigma
        sign_pos = 0
        while bits:
            lowbit = bits & -bits
            bits ^= lowbit
            row = np.searchsorted(row_keys, (np.int64(d) << 40) | (sigma ^ lowbit))
            A[row, c] = 1 if sign_pos % 2 == 0 else p - 1
            sign_pos += 1
    return A


@njit(cache=True)
def boundary_ranks(faces, v, primes):
    """Ranks of the simplicial boundary maps of a complex over GF(p).

    `faces` is a duplicate-free array of bitmasks on v vertices closed under
    subsets (the empty face included). Returns (fvec, ranks) where fvec[d+1]
    counts faces of dimension d and ranks[q, d] is the rank over GF(primes[q])
    of the map from d-faces to (d-1)-faces, for d = 0..v.
    """
    keys, fvec, start = _sorted_face_keys(faces, v)
    ranks = np.zeros((primes.shape[0], v + 1), np.int64)
    for d in range(v + 1):
        if fvec[d + 1] == 0 or fvec[d] == 0:
            continue
        for q in range(primes.shape[0]):
            ranks[q, d] = rank_mod(_boundary_matrix(keys, fvec, start, d, primes[q]), primes[q])
    return fvec, ranks


@njit(cache=True)
def rational_boundary_ranks(faces, v, pool):
    """Exact ranks over Q of the boundary maps, by maximising over primes.

    A nonzero r-minor of a boundary matrix with d+1 entries of modulus one per
    column is at most (d+1)**(r/2) in absolute value, so it has fewer than
    r*log2(d+1)/60 + 1 distinct prime factors above 2**30. Taking that many
    primes from `pool` guarantees one of them preserves the rank. Returns
    (fvec, ranks, ok); ok is False when the pool is too small.
    """
    keys, fvec, start = _sorted_face_keys(faces, v)
    ranks = np.zeros(v + 1, np.int64)
    for d in range(v + 1):
        nrow = fvec[d]
        ncol = fvec[d + 1]
        if nrow == 0 or ncol == 0:
            continue
        top = min(nrow, ncol)
        need = int(top * np.log2(d + 1.0) / 60.0) + 1
        if need > pool.shape[0]:
            return fvec, ranks, False
        best = 0
        for q in range(need):
            r = rank_mod(_boundary_matrix(keys, fvec, start, d, pool[q]), pool[q])
            if r > best:
                best = r
            if best == top:
                break
        ranks[d] = best
    return fvec, ranks, True


@njit(cache=True)
def _homology_from_ranks(fvec, ranks_row, v, out):
    # out[d + 1] = dim H~_d for d = -1..v-1
    for d in range(-1, v):
        r_here = ranks_row[d] if d >= 0 else 0
        r_up = ranks_row[d + 1] if d + 1 <= v else 0
        out[d + 1] = fvec[d + 1] - r_here - r_up


@njit(cache=True)
def _certified(fvec, ranks_row, v):
    """True when ranks modulo a large prime provably equal the rational ranks.

    Modular ranks bound rational ranks from below; exactness of the complex
    bounds them from above. A rank meeting either upper bound is exact.
    """
    for d in range(0, v + 1):
        r = ranks_row[d]
        r_up = ranks_row[d + 1] if d + 1 <= v else 0
        r_down = ranks_row[d - 1] if d >= 1 else 0
        b1 = fvec[d + 1] - r_up
        b2 = fvec[d] - r_down
        if r != b1 and r != b2:
            return False
    return True


@njit(cache=True)
def core_homology(facets, k, primes, rational, pool, face_cap, out):
    """Reduced homology of the complex with facets F[:k] after strong collapse.

    Writes out[q, d+1] = dim H~_d over GF(primes[q]). Returns (status,
    certified, nonzero); `certified` is False when a prime flagged in
    `rational` could not obtain exact rational ranks from `pool`.
    """
    out[:, :] = 0
    k = strong_collapse(facets, k)
    if k == 1:
        if facets[0] == 0:
            out[:, 0] = 1
            return OK, True, True
        return OK, True, False
    verts = 0
    for a in range(k):
        verts |= facets[a]
    cf, v = _compact(facets, k, verts)
    faces, status = face_list_from_facets(cf, face_cap)
    if status != OK:
        return status, True, False
    fvec, ranks = boundary_ranks(faces, v, primes)
    cert = True
    nonzero = False
    tmp = np.zeros(v + 1, np.int64)
    for q in range(primes.shape[0]):
        _homology_from_ranks(fvec, ranks[q], v, tmp)
        for t in range(v + 1):
            out[q, t] = tmp[t]
            if tmp[t] != 0:
                nonzero = True
        if rational[q] and not _certified(fvec, ranks[q], v):
            fq, exact, ok = rational_boundary_ranks(faces, v, pool)
            if not ok:
                cert = False
                continue
            _homology_from_ranks(fq, exact, v, tmp)
            for t in range(v + 1):
                out[q, t] = tmp[t]
                if tmp[t] != 0:
                    nonzero = True
    return OK, cert, nonzero


@njit(cache=True)
def upper_koszul_facets(b, G, F):
    """Facets {j : g_j < b_j} for generators g dividing x^b; returns count."""
    g, n = G.shape
    k = 0
    for r in range(g):
        m = 0
        ok = True
        for j in range(n):
            gj = G[r, j]
            bj = b[j]
            if gj > bj:
                ok = False
                break
            if gj < bj:
                m |= np.int64(1) << j
        if ok:
            F[k] = m
            k += 1
    return k


@njit(cache=True)
def _grow(idx, dims, cert, count):
    m = idx.shape[0] * 2
    idx2 = np.empty(m, np.int64)
    idx2[:count] = idx[:count]
    dims2 = np.zeros((m, dims.shape[1], dims.shape[2]), np.int64)
    dims2[:count] = dims[:count]
    cert2 = np.ones(m, np.bool_)
    cert2[:count] = cert[:count]
    return idx2, dims2, cert2


@njit(cache=True)
def multigraded_homology(P, G, primes, rational, pool, face_cap):
    """Reduced homology of the upper-Koszul complex at every row b of P.

    Returns (idx, dims, cert, status): for each point with nonzero homology in
    some characteristic, its row index in P, dims[t, q, d+1] = dim H~_d over
    GF(primes[q]), and the certification flag.
    """
    npts, n = P.shape
    nq = primes.shape[0]
    F = np.empty(G.shape[0] + 1, np.int64)
    out = np.zeros((nq, n + 1), np.int64)
    idx = np.empty(64, np.int64)
    dims = np.zeros((64, nq, n + 1), np.int64)
    cert = np.ones(64, np.bool_)
    count = 0
    for t in range(npts):
        k = upper_koszul_facets(P[t], G, F)
        if k == 0:
            continue
        status, ok, nonzero = core_homology(F, k, primes, rational, pool, face_cap, out)
        if status != OK:
            return idx[:count], dims[:count], cert[:count], status
        if nonzero or not ok:
            if count == idx.shape[0]:
                idx, dims, cert = _grow(idx, dims, cert, count)
            idx[count] = t
            dims[count] = out
            cert[count] = ok
            count += 1
    return idx[:count], dims[:count], cert[:count], OK


@njit(cache=True)
def stanley_reisner_faces(W, gens):
    """Faces of the induced subcomplex on W of the Stanley-Reisner complex.

    `gens` are squarefree generators as bitmasks; a subset of W is a face
    when it contains none of them.
    """
    relevant = np.empty(gens.shape[0], np.int64)
    nr = 0
    for a in range(gens.shape[0]):
        if (gens[a] & W) == gens[a]:
            relevant[nr] = gens[a]
            nr += 1
    buf = np.empty(np.int64(1) << popcount(W), np.int64)
    t = 0
    sub = W
    while True:
        face = True
        for a in range(nr):
            if (relevant[a] & sub) == relevant[a]:
                face = False
                break
        if face:
            buf[t] = sub
            t += 1
        if sub == 0:
            break
        sub = (sub - 1) & W
    return np.sort(buf[:t])


@njit(cache=True)
def hochster_homology(Ws, gens, primes, rational, pool, direct_limit, face_cap):
    """Reduced homology of induced subcomplexes Delta_W of a Stanley-Reisner complex.

    For |W| <= direct_limit the subcomplex is built face by face. Larger W go
    through Alexander duality: H~_d(Delta_W) = H~_{|W|-d-3}(dual), where the
    dual complex within W has facets W minus a generator contained in W.
    Output layout matches `multigraded_homology`, indexed by H~_d(Delta_W).
    """
    npts = Ws.shape[0]
    nq = primes.shape[0]
    width = 64
    F = np.empty(gens.shape[0] + 1, np.int64)
    out = np.zeros((nq, width), np.int64)
    idx = np.empty(64, np.int64)
    dims = np.zeros((64, nq, width), np.int64)
    cert = np.ones(64, np.bool_)
    count = 0
    for t in range(npts):
        W = Ws[t]
        w = popcount(W)
        out[:, :] = 0
        ok = True
        nonzero = False
        if w <= direct_limit:
            faces = stanley_reisner_faces(W, gens)
            cf, v = _compact(faces, faces.shape[0], W)
            fvec, ranks = boundary_ranks(np.sort(cf), v, primes)
            tmp = np.zeros(v + 1, np.int64)
            for q in range(nq):
                _homology_from_ranks(fvec, ranks[q], v, tmp)
                for s in range(v + 1):
                    out[q, s] = tmp[s]
                    if tmp[s] != 0:
                        nonzero = True
                if rational[q] and not _certified(fvec, ranks[q], v):
                    fq, exact, good = rational_boundary_ranks(np.sort(cf), v, pool)
                    if not good:
                        ok = False
                        continue
                    _homology_from_ranks(fq, exact, v, tmp)
                    for s in range(v + 1):
                        out[q, s] = tmp[s]
                        if tmp[s] != 0:
                            nonzero = True
        else:
            k = 0
            for a in range(gens.shape[0]):
                if (gens[a] & W) == gens[a]:
                    F[k] = W & ~gens[a]
                    k += 1
            dual = np.zeros((nq, w + 1), np.int64)
            status, ok, nonzero = core_homology(F, k, primes, rational, pool, face_cap, dual)
            if status != OK:
                return idx[:count], dims[:count], cert[:count], status
            # dual[q, e+1] = dim H~_e(dual); H~_d(Delta_W) = H~_{w-d-3}(dual)
            for q in range(nq):
                for e in range(-1, w):
                    d = w - e - 3
                    if d >= -1 and dual[q, e + 1] != 0:
                        out[q, d + 1] = dual[q, e + 1]
        if nonzero or not ok:
            if count == idx.shape[0]:
                idx, dims, cert = _grow(idx, dims, cert, count)
            idx[count] = t
            dims[count] = out
            cert[count] = ok
            count += 1
    return idx[:count], dims[:count], cert[:count], OK
