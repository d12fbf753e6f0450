# cython: language_level=3
"""Compiled twin of ``_rref_py.integer_rref``.

Entries stay Python integers (arbitrary precision); the speedup comes from
typed loop indices and list access without interpreter dispatch.
"""


def integer_rref(rows, Py_ssize_t ncols):
    cdef list m = [list(row) for row in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t r = 0, c, p, i, j
    cdef list prow, irow, pivots = []
    cdef object prev = 1, piv, f
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and (<list>m[p])[c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            m[p], m[r] = m[r], m[p]
        prow = <list>m[r]
        piv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            irow = <list>m[i]
            f = irow[c]
            if f == 0:
                if piv != prev:
                    for j in range(ncols):
                        if irow[j]:
                            irow[j] = (piv * irow[j]) // prev
            else:
                for j in range(ncols):
                    irow[j] = (piv * irow[j] - f * prow[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return m[:r], pivots
