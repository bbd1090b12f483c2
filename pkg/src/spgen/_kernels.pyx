# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels; same contract as ``spgen._kernels_py``.

Entries stay Python ints (no overflow); the gain is from typed loop
indices and direct list access.
"""
from math import gcd


cpdef list matmul(list a, list b, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    cdef list out = [0] * (n * m)
    cdef Py_ssize_t i, t, j, base, off
    cdef object ait, btj
    for i in range(n):
        base = i * m
        for t in range(k):
            ait = a[i * k + t]
            if not ait:
                continue
            off = t * m
            for j in range(m):
                btj = b[off + j]
                if btj:
                    out[base + j] = out[base + j] + ait * btj
    return out


cpdef list commutator(list a, list b, Py_ssize_t s):
    cdef list ab = matmul(a, b, s, s, s)
    cdef list ba = matmul(b, a, s, s, s)
    cdef Py_ssize_t i, size = s * s
    cdef list out = [0] * size
    for i in range(size):
        out[i] = ab[i] - ba[i]
    return out


cpdef list primitive(list v):
    cdef object g = gcd(*v)
    cdef Py_ssize_t i, size = len(v)
    cdef list out
    if g > 1:
        out = [0] * size
        for i in range(size):
            out[i] = v[i] // g
        return out
    return list(v)


cpdef list reduce_vector(list nums, list dens, list pivots, v):
    cdef list w = list(v)
    cdef list num
    cdef object c, den
    cdef Py_ssize_t r, i, p, size = len(w)
    for r in range(len(pivots)):
        p = pivots[r]
        c = w[p]
        if not c:
            continue
        num = nums[r]
        den = dens[r]
        for i in range(size):
            w[i] = den * w[i] - c * num[i]
        w = primitive(w)
    return w


cpdef tuple insert_reduced(list nums, list dens, list pivots, list v):
    cdef Py_ssize_t p = 0, q, r, i, size = len(v)
    cdef list new_nums = [], new_dens = [], new_pivots = [], num, row
    cdef object d, den, c, g
    cdef bint placed = False
    while not v[p]:
        p += 1
    if v[p] < 0:
        v = [-x for x in v]
    d = v[p]
    for r in range(len(pivots)):
        q = pivots[r]
        if not placed and q > p:
            new_nums.append(v)
            new_dens.append(d)
            new_pivots.append(p)
            placed = True
        num = nums[r]
        den = dens[r]
        c = num[p]
        if c:
            row = [0] * size
            for i in range(size):
                row[i] = num[i] * d - c * v[i]
            den = den * d
            g = gcd(den, *row)
            if g > 1:
                for i in range(size):
                    row[i] = row[i] // g
                den = den // g
            num = row
        new_nums.append(num)
        new_dens.append(den)
        new_pivots.append(q)
    if not placed:
        new_nums.append(v)
        new_dens.append(d)
        new_pivots.append(p)
    return new_nums, new_dens, new_pivots


cpdef Py_ssize_t bareiss_rank(rows, Py_ssize_t ncols):
    cdef list mat = [list(row_in) for row_in in rows]
    cdef Py_ssize_t nrows = len(mat), rank = 0, col, piv, r, j
    cdef object prev = 1, pv, c
    cdef list top, row
    for col in range(ncols):
        if rank == nrows:
            break
        piv = rank
        while piv < nrows and not mat[piv][col]:
            piv += 1
        if piv == nrows:
            continue
        if piv != rank:
            mat[piv], mat[rank] = mat[rank], mat[piv]
        top = mat[rank]
        pv = top[col]
        for r in range(rank + 1, nrows):
            row = mat[r]
            c = row[col]
            for j in range(col + 1, ncols):
                row[j] = (pv * row[j] - c * top[j]) // prev
            row[col] = 0
        prev = pv
        rank += 1
    return rank


cpdef list charpoly(list a, Py_ssize_t s):
    cdef list coeffs = [0] * (s + 1)
    cdef list m = [0] * (s * s)
    cdef list am
    cdef Py_ssize_t i, k
    cdef object tr, c, rem
    coeffs[s] = 1
    for i in range(s):
        m[i * s + i] = 1
    for k in range(1, s + 1):
        am = matmul(a, m, s, s, s)
        tr = 0
        for i in range(s):
            tr = tr + am[i * s + i]
        c, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[s - k] = c
        for i in range(s):
            am[i * s + i] = am[i * s + i] + c
        m = am
    return coeffs
