# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: fraction-free Gauss-Jordan reduction and matmul.

Rows are cleared to integers up front so the elimination runs on plain big
ints (one gcd normalization per updated row keeps growth in check); pivot rows
are converted back to Fractions at the end.  Results are bit-identical to the
pure backend in ``_pure``.
"""

from fractions import Fraction
from math import gcd


def rref_rows(rows, Py_ssize_t ncols):
    """Reduced row-echelon form; returns (new_rows, pivots)."""
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t i, j, r, c, pivot_row
    cdef list irows = []
    cdef list row, prow, out
    cdef list pivots = []

    for i in range(m):
        den = 1
        for e in rows[i]:
            d = e.denominator
            den = den * d // gcd(den, d)
        irows.append([e.numerator * (den // e.denominator) for e in rows[i]])

    r = 0
    for c in range(ncols):
        pivot_row = -1
        for i in range(r, m):
            if irows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row < 0:
            continue
        irows[r], irows[pivot_row] = irows[pivot_row], irows[r]
        prow = irows[r]
        p = prow[c]
        for i in range(m):
            if i == r:
                continue
            row = irows[i]
            f = row[c]
            if f == 0:
                continue
            g = 0
            for j in range(ncols):
                v = row[j] * p - prow[j] * f
                row[j] = v
                g = gcd(g, v)
            if g > 1:
                for j in range(ncols):
                    row[j] //= g
        pivots.append(c)
        r += 1
        if r == m:
            break

    out = []
    for i in range(m):
        row = irows[i]
        if i < r:
            p = row[pivots[i]]
            out.append([Fraction(v, p) for v in row])
        else:
            out.append([Fraction(0)] * ncols)
    return out, pivots


def mat_mul(a, b, Py_ssize_t m, Py_ssize_t k, Py_ssize_t n):
    """Multiply an m x k by a k x n list-of-rows matrix of Fractions."""
    cdef Py_ssize_t i, j, t
    cdef list an = [[e.numerator for e in row] for row in a]
    cdef list ad = [[e.denominator for e in row] for row in a]
    cdef list bn = [[e.numerator for e in row] for row in b]
    cdef list bd = [[e.denominator for e in row] for row in b]
    cdef list out = []
    cdef list ani, adi, orow

    for i in range(m):
        ani = an[i]
        adi = ad[i]
        orow = []
        for j in range(n):
            num = 0
            den = 1
            for t in range(k):
                tn = ani[t] * (<list> bn[t])[j]
                if tn != 0:
                    td = adi[t] * (<list> bd[t])[j]
                    num = num * td + tn * den
                    den = den * td
            orow.append(Fraction(num, den))
        out.append(orow)
    return out
