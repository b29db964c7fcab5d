"""Pure-Python fraction-free row reduction kernel.

Rows are dense lists of Python ints.  Each incoming row is reduced
against the pivot rows found so far using integer cross-multiplication,
dividing out the content gcd after every elimination step to keep the
entries small.  This is the hot inner loop of the nullspace solver; a
compiled twin lives in `_rowreduce_c` with identical semantics.
"""

from math import gcd


def normalize_int_row(row):
    """Divide by the content gcd; make the leading entry positive.

    Returns None for an all-zero row.
    """
    g = 0
    lead = 0
    for x in row:
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


def echelon_int_rows(rows, ncols):
    """Forward-eliminate integer rows; return pivot rows by leading column.

    The result is a dict {pivot column: row} where every row is content-
    free with a positive pivot entry.  Rows are processed in order, so the
    output is deterministic.
    """
    pivots = {}
    for row in rows:
        row = normalize_int_row(list(row))
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
            row = normalize_int_row([fa * x - fb * y for x, y in zip(row, p)])
            start = lead + 1
    return pivots
