"""Pure-Python fraction-free Gauss-Jordan elimination over the integers.

This is the reference kernel; ``_rref_cy.pyx`` is a line-for-line compiled
twin.  Both must return identical results on every input.
"""


def integer_rref(rows, ncols):
    """Fraction-free reduced echelon form of an integer matrix.

    ``rows`` is a list of integer lists, each of length ``ncols``.  Returns
    ``(reduced_rows, pivots)`` where ``reduced_rows`` holds only the nonzero
    rows.  Every pivot entry equals the same positive or negative integer
    (the last leading minor); dividing row ``i`` by its pivot entry gives the
    exact rational RREF.  All divisions are exact (integer-preserving
    Gauss-Jordan), so no rationals appear during the sweep.
    """
    m = [list(row) for row in rows]
    nrows = len(m)
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and m[p][c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            m[p], m[r] = m[r], m[p]
        prow = m[r]
        piv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            irow = m[i]
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
