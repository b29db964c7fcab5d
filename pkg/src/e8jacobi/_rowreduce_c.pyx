# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled fraction-free row reduction kernel.

Semantically identical to `_rowreduce_py`: rows are dense lists of
Python ints (arbitrary precision), eliminated by integer
cross-multiplication with the content gcd divided out after every step.
Cython removes the interpreter overhead of the inner loops; the big-int
arithmetic itself is shared with the pure-Python twin.
"""

from math import gcd


def normalize_int_row(list row):
    """Divide by the content gcd; make the leading entry positive.

    Returns None for an all-zero row.
    """
    cdef Py_ssize_t i, n = len(row)
    g = 0
    lead = 0
    for i in range(n):
        x = row[i]
        if x:
            if not g:
                lead = x
            g = gcd(g, x if x > 0 else -x)
            if g == 1 and lead > 0:
                return row
    if g == 0:
        return None
    if lead < 0:
        g = -g
    if g != 1:
        return [x // g for x in row]
    return row


def echelon_int_rows(rows, Py_ssize_t ncols):
    """Forward-eliminate integer rows; return pivot rows by leading column.

    The result is a dict {pivot column: row} where every row is content-
    free with a positive pivot entry.  Rows are processed in order, so the
    output is deterministic.
    """
    cdef Py_ssize_t c, lead, start
    cdef dict pivots = {}
    cdef list row, p, combo
    for raw in rows:
        row = normalize_int_row(list(raw))
        start = 0
        while row is not None:
            lead = -1
            for c in range(start, ncols):
                if row[c]:
                    lead = c
                    break
            if lead < 0:
                break
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = row
                break
            a = row[lead]
            b = p[lead]
            g = gcd(a if a > 0 else -a, b)
            fa = b // g
            fb = a // g
            combo = [0] * ncols
            for c in range(ncols):
                combo[c] = fa * row[c] - fb * p[c]
            row = normalize_int_row(combo)
            start = lead + 1
    return pivots
