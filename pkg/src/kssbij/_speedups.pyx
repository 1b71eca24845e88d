# cython: boundscheck=False, wraparound=False
"""Compiled row insertion primitives; same contract as kssbij._insertion."""


def bump(list rows, x):
    """Schensted row insertion of letter x. Returns (row, col) of the new cell, 0-based."""
    cdef Py_ssize_t i = 0, j, lo, hi, mid, n
    cdef long v = x
    cdef long tmp
    cdef list row
    n = len(rows)
    while i < n:
        row = <list>rows[i]
        # leftmost entry strictly greater than v
        lo = 0
        hi = len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if <long>row[mid] <= v:
                lo = mid + 1
            else:
                hi = mid
        j = lo
        if j == len(row):
            row.append(v)
            return i, len(row) - 1
        tmp = <long>row[j]
        row[j] = v
        v = tmp
        i += 1
    rows.append([v])
    return len(rows) - 1, 0


def insert_word(list rows, letters):
    """Insert letters left to right."""
    for x in letters:
        bump(rows, x)


def inverse_bump(list rows, Py_ssize_t i):
    """Undo the insertion that created the last cell of row i. Returns the ejected letter."""
    cdef list row = <list>rows[i]
    cdef long v = <long>row[len(row) - 1]
    cdef long tmp
    cdef Py_ssize_t lo, hi, mid, j
    del row[len(row) - 1]
    if not row:
        del rows[i]
    while i > 0:
        i -= 1
        row = <list>rows[i]
        # rightmost entry strictly smaller than v
        lo = 0
        hi = len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if <long>row[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        j = lo - 1
        tmp = <long>row[j]
        row[j] = v
        v = tmp
    return v
