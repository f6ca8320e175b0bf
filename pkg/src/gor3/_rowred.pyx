# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Row-reduction kernels, compiled implementation.

Mirrors gor3._rowred_py exactly: the reduced forms are canonical, so both
backends return identical objects.  The mod-p path runs on C integers
(moduli are capped at 31 bits, so products fit in 64); the integer path
keeps arbitrary-precision Python ints but runs the loops under typed
indices.
"""

from libc.stdlib cimport free, malloc

from math import gcd as _pygcd


def rref_int(rows):
    """Integer RREF; see gor3._rowred_py.rref_int for the contract."""
    cdef list work = [list(row_in) for row_in in rows]
    cdef Py_ssize_t nr = len(work)
    cdef Py_ssize_t nc = len(work[0]) if nr else 0
    cdef list pivots = []
    cdef Py_ssize_t piv = 0, col, i, r, c, sel
    cdef list prow, row
    cdef object a, b, g, ma, mb, v, cg
    for col in range(nc):
        sel = -1
        for i in range(piv, nr):
            if work[i][col] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != piv:
            work[piv], work[sel] = work[sel], work[piv]
        prow = work[piv]
        a = prow[col]
        for r in range(nr):
            if r == piv:
                continue
            row = work[r]
            b = row[col]
            if b == 0:
                continue
            g = _pygcd(a, b)
            ma = a // g
            mb = b // g
            cg = 0
            for c in range(nc):
                v = ma * row[c] - mb * prow[c]
                row[c] = v
                if v:
                    cg = _pygcd(cg, v)
            if cg > 1:
                for c in range(nc):
                    row[c] = row[c] // cg
        pivots.append(col)
        piv += 1
        if piv == nr:
            break
    cdef list out = []
    cdef Py_ssize_t k
    for k in range(len(pivots)):
        row = work[k]
        cg = 0
        for c in range(nc):
            v = row[c]
            if v:
                cg = _pygcd(cg, v)
        if row[<Py_ssize_t> pivots[k]] < 0:
            cg = -cg
        out.append([row[c] // cg for c in range(nc)])
    return pivots, out


cdef long long _inv_mod(long long a, long long p):
    # Fermat: a^(p-2) mod p with p prime
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def rref_mod(rows, p):
    """Mod-p RREF; see gor3._rowred_py.rref_mod for the contract."""
    cdef Py_ssize_t nr = len(rows)
    cdef Py_ssize_t nc = len(rows[0]) if nr else 0
    cdef long long pp = p
    if nr == 0 or nc == 0:
        return [], []
    cdef long long *data = <long long *> malloc(nr * nc * sizeof(long long))
    if data == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, col, r, c, sel, piv, k
    cdef long long a, b, inv
    cdef list row_obj
    try:
        for i in range(nr):
            row_obj = rows[i]
            for j in range(nc):
                data[i * nc + j] = <long long> (row_obj[j] % p)
        pivots = []
        piv = 0
        for col in range(nc):
            sel = -1
            for i in range(piv, nr):
                if data[i * nc + col] != 0:
                    sel = i
                    break
            if sel < 0:
                continue
            if sel != piv:
                for c in range(nc):
                    a = data[piv * nc + c]
                    data[piv * nc + c] = data[sel * nc + c]
                    data[sel * nc + c] = a
            a = data[piv * nc + col]
            if a != 1:
                inv = _inv_mod(a, pp)
                for c in range(col, nc):
                    data[piv * nc + c] = data[piv * nc + c] * inv % pp
            for r in range(nr):
                if r == piv:
                    continue
                b = data[r * nc + col]
                if b == 0:
                    continue
                for c in range(col, nc):
                    data[r * nc + c] = (data[r * nc + c]
                                        - b * data[piv * nc + c]) % pp
                    if data[r * nc + c] < 0:
                        data[r * nc + c] += pp
            pivots.append(col)
            piv += 1
            if piv == nr:
                break
        out = []
        for k in range(len(pivots)):
            out.append([data[k * nc + c] for c in range(nc)])
        return pivots, out
    finally:
        free(data)
