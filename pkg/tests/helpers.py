"""Shared independent oracles for the test suite.

These deliberately use definitional, brute-force methods (determinant
polynomials, dense grids, sign scans) so they stay independent of the
library's production algorithms.
"""

from __future__ import annotations

from fractions import Fraction

from nodalnest import _zx, _zxy


def det_bareiss_zx(m: list[list[list[int]]]) -> list[int]:
    """Determinant of a matrix with Z[x] entries, by fraction-free Bareiss."""
    n = len(m)
    if n == 0:
        return [1]
    a = [[list(e) for e in row] for row in m]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return []
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _zx.sub(_zx.mul(a[i][j], a[k][k]), _zx.mul(a[i][k], a[k][j]))
                a[i][j] = _zx.divexact(num, prev) if num else []
            a[i][k] = []
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return _zx.neg(d) if sign < 0 else d


def subresultant_oracle(P, Q, j):
    """S_j(P, Q) w.r.t. y by the determinant-polynomial definition.

    P, Q in Z[x][y] (lists over y-degree of Z[x] entries), deg P = p > q =
    deg Q, 0 <= j < q.  Rows: y^(q-j-1) P ... P, y^(p-j-1) Q ... Q; columns:
    monomial degrees p+q-j-1 down to 0.  S_j = sum_l det(first N-1 columns +
    degree-l column) y^l for l = j..0.
    """
    p = _zxy.deg(P)
    q = _zxy.deg(Q)
    nrows = (q - j) + (p - j)
    ncols = p + q - j
    top_deg = p + q - j - 1

    def coeff(poly, ydeg):
        return list(poly[ydeg]) if 0 <= ydeg < len(poly) else []

    rows = []
    for s in range(q - j - 1, -1, -1):  # y^s * P
        rows.append([coeff(P, top_deg - c - s) for c in range(ncols)])
    for s in range(p - j - 1, -1, -1):  # y^s * Q
        rows.append([coeff(Q, top_deg - c - s) for c in range(ncols)])
    out = []
    for l in range(0, j + 1):
        cols = list(range(nrows - 1)) + [ncols - 1 - l]
        sub = [[row[c] for c in cols] for row in rows]
        out.append(det_bareiss_zx(sub))
    return _zxy.strip(out)


def resultant_oracle(P, Q):
    """Resultant w.r.t. y by the Sylvester determinant."""
    p = _zxy.deg(P)
    q = _zxy.deg(Q)

    def coeff(poly, ydeg):
        return list(poly[ydeg]) if 0 <= ydeg < len(poly) else []

    n = p + q
    rows = []
    for s in range(q):
        rows.append([coeff(P, p - (c - s)) for c in range(n)])
    for s in range(p):
        rows.append([coeff(Q, q - (c - s)) for c in range(n)])
    return det_bareiss_zx(rows)
