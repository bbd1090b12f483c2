"""Pure-Python integer kernels.

Every function works on flat row-major lists of Python ints.  The Cython
module ``spgen._kernels`` mirrors this file function for function; keep the
two in step.
"""
from math import gcd


def matmul(a, b, n, k, m):
    """Product of an ``n x k`` and a ``k x m`` matrix."""
    out = [0] * (n * m)
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
                    out[base + j] += ait * btj
    return out


def commutator(a, b, s):
    """``ab - ba`` for two ``s x s`` matrices."""
    ab = matmul(a, b, s, s, s)
    ba = matmul(b, a, s, s, s)
    return [x - y for x, y in zip(ab, ba)]


def primitive(v):
    """Divide out the content of ``v`` (sign is kept)."""
    g = gcd(*v)
    if g > 1:
        return [x // g for x in v]
    return list(v)


def reduce_vector(nums, dens, pivots, v):
    """Reduce ``v`` against an RREF basis held as integer rows.

    Row ``r`` stands for ``nums[r] / dens[r]``, with ``nums[r][pivots[r]] ==
    dens[r]``.  Returns a primitive integer vector proportional to the
    residue of ``v``; it is all zeros iff ``v`` lies in the span.
    """
    v = list(v)
    for r in range(len(pivots)):
        p = pivots[r]
        c = v[p]
        if not c:
            continue
        num = nums[r]
        den = dens[r]
        v = [den * x - c * y for x, y in zip(v, num)]
        v = primitive(v)
    return v


def insert_reduced(nums, dens, pivots, v):
    """Add a nonzero reduced vector to the basis; returns new lists."""
    p = 0
    while not v[p]:
        p += 1
    if v[p] < 0:
        v = [-x for x in v]
    d = v[p]
    new_nums, new_dens, new_pivots = [], [], []
    placed = False
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
            num = [x * d - c * y for x, y in zip(num, v)]
            den = den * d
            g = gcd(den, *num)
            if g > 1:
                num = [x // g for x in num]
                den //= g
        new_nums.append(num)
        new_dens.append(den)
        new_pivots.append(q)
    if not placed:
        new_nums.append(v)
        new_dens.append(d)
        new_pivots.append(p)
    return new_nums, new_dens, new_pivots


def bareiss_rank(rows, ncols):
    """Rank of an integer matrix by fraction-free elimination."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    rank = 0
    prev = 1
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


def charpoly(a, s):
    """Integer characteristic polynomial of an integer ``s x s`` matrix.

    Faddeev-LeVerrier; coefficients lowest degree first, monic.
    """
    coeffs = [0] * (s + 1)
    coeffs[s] = 1
    m = [0] * (s * s)
    for i in range(s):
        m[i * s + i] = 1
    for k in range(1, s + 1):
        am = matmul(a, m, s, s, s)
        tr = 0
        for i in range(s):
            tr += am[i * s + i]
        c, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[s - k] = c
        for i in range(s):
            am[i * s + i] += c
        m = am
    return coeffs
