"""Bivariate integer polynomial kernels: Z[x][y] as dense lists of x-polys.

Internal module.  A bivariate polynomial is a list indexed by y-degree whose
entries are `_zx` polynomials (lists of ints, x-coefficients); trailing zero
entries are stripped.  Provides pseudo-division, primitive PRS gcd, and the
subresultant chain used for resultants and for real-root counting of fibers.
"""

from __future__ import annotations

from . import _zx

YX = list  # list[Z], index = y-degree


def strip(p: YX) -> YX:
    while p and not p[-1]:
        p.pop()
    return p


def deg(p: YX) -> int:
    return len(p) - 1


def lc(p: YX):
    return p[-1]


def is_zero(p: YX) -> bool:
    return not p


def add(p: YX, q: YX) -> YX:
    if len(p) < len(q):
        p, q = q, p
    out = [list(c) for c in p]
    for i, c in enumerate(q):
        out[i] = _zx.add(out[i], c)
    return strip(out)


def sub(p: YX, q: YX) -> YX:
    out = [list(c) for c in p] + [[] for _ in range(len(q) - len(p))]
    for i, c in enumerate(q):
        out[i] = _zx.sub(out[i], c)
    return strip(out)


def neg(p: YX) -> YX:
    return [_zx.neg(c) for c in p]


def mul(p: YX, q: YX) -> YX:
    if not p or not q:
        return []
    out = [[] for _ in range(len(p) + len(q) - 1)]
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = _zx.add(out[i + j], _zx.mul(a, b))
    return strip(out)


def mul_z(p: YX, c) -> YX:
    """Multiply by an element of Z[x]."""
    if not c:
        return []
    return strip([_zx.mul(a, c) for a in p])


def divexact_z(p: YX, c) -> YX:
    return strip([_zx.divexact(a, c) if a else [] for a in p])


def derivative_y(p: YX) -> YX:
    return strip([_zx.mul_scalar(c, i) for i, c in enumerate(p)][1:])


def content_z(p: YX):
    """Gcd in Z[x] of the y-coefficients."""
    g: list = []
    for c in p:
        g = _zx.gcd_z(g, c)
        if g == [1]:
            return g
    return g


def primitive_z(p: YX) -> YX:
    if not p:
        return []
    g = content_z(p)
    if g == [1]:
        return [list(c) for c in p]
    return [(_zx.divexact(c, g) if c else []) for c in p]


def prem(p: YX, q: YX) -> tuple[YX, int]:
    """Pseudo-remainder in y: lc(q)^e * p = (...)*q + r, e = deg p - deg q + 1."""
    dp, dq = deg(p), deg(q)
    if dq < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    if dp < dq:
        return [list(c) for c in p], 0
    lq = lc(q)
    e = dp - dq + 1
    steps = 0
    r = [list(c) for c in p]
    while r and deg(r) >= dq:
        c = r[-1]
        shift = deg(r) - dq
        r = [_zx.mul(a, lq) for a in r]
        for i, b in enumerate(q):
            r[shift + i] = _zx.sub(r[shift + i], _zx.mul(c, b))
        strip(r)
        steps += 1
    if steps < e:
        f = lq
        for _ in range(e - steps - 1):
            f = _zx.mul(f, lq)
        r = [_zx.mul(a, f) for a in r]
    return r, e


def gcd_yx(p: YX, q: YX) -> YX:
    """Gcd in Z[x][y] via primitive PRS in y plus content gcd in Z[x]."""
    if not p and not q:
        return []
    if not p:
        return primitive_like(q)
    if not q:
        return primitive_like(p)
    cp, cq = content_z(p), content_z(q)
    a = primitive_z(p)
    b = primitive_z(q)
    if deg(a) < deg(b):
        a, b = b, a
    while b:
        r, _ = prem(a, b)
        a, b = b, primitive_z(strip(r))
    g = primitive_z(a)
    cg = _zx.gcd_z(cp, cq)
    if cg != [1]:
        g = mul_z(g, cg)
    return normalize_sign(g)


def primitive_like(p: YX) -> YX:
    return normalize_sign(primitive_z(p))


def normalize_sign(p: YX) -> YX:
    """Make the leading x-coefficient of the leading y-coefficient positive."""
    if p and _zx.lc(lc(p)) < 0:
        return neg(p)
    return p


# ---------------------------------------------------------------------------
# Subresultant chain


def _pow_z(c, e: int):
    out = [1]
    for _ in range(e):
        out = _zx.mul(out, c)
    return out


def subresultant_chain(P: YX, Q: YX) -> dict[int, YX]:
    """Subresultant polynomials of (P, Q) with respect to y, over Z[x].

    Requires deg_y P > deg_y Q >= 0.  Returns {j: S_j} for the nonzero
    subresultants, 0 <= j <= deg P, in the determinant-polynomial convention,
    with the boundary values S_p = P and S_{p-1} = S_q = lc(Q)^(p-q-1) Q.
    Absent keys are zero.  S_0 is the resultant.

    Structure-theorem recursion: the first pseudo-remainder gives
    S_{q-1} = (-1)^(p-q+1) prem(P, Q); afterwards, for a regular S_d paired
    with S_{d-1} of degree e, Lazard's relation
    S_e = lc(S_{d-1})^(d-1-e) S_{d-1} / s_d^(d-1-e) fills defective gaps and
    S_{e-1} = (-1)^(d-e+1) prem(S_d, S_{d-1}) / s_d^(d-e+1) advances, where
    s_d = lc(S_d).  (Validated term-by-term against the determinant
    definition in the test suite.)
    """
    p = deg(P)
    q = deg(Q)
    if p <= q:
        raise ValueError("subresultant_chain requires deg P > deg Q")
    if q < 0:
        raise ValueError("Q must be nonzero")
    out: dict[int, YX] = {p: [list(c) for c in P]}
    lq = lc(Q)
    top = mul_z(Q, _pow_z(lq, p - q - 1)) if p - q - 1 > 0 else [list(c) for c in Q]
    out[p - 1] = top
    if q < p - 1:
        out[q] = top
    if q == 0:
        out[0] = _yx_const(_pow_z(Q[0], p))
        return {j: v for j, v in out.items() if v}
    r, _ = prem(P, Q)
    strip(r)
    if (p - q + 1) % 2 == 1:
        r = neg(r)
    if not r:
        return {j: v for j, v in out.items() if v}
    out[q - 1] = r
    d, Sd, Sd1 = q, top, r
    while True:
        e = deg(Sd1)
        sd = lc(Sd)
        if e < d - 1:
            t = lc(Sd1)
            num = mul_z(Sd1, _pow_z(t, d - 1 - e))
            Se = divexact_z(num, _pow_z(sd, d - 1 - e))
            out[e] = Se
        else:
            Se = Sd1
        if e == 0:
            break
        rr, _ = prem(Sd, Sd1)
        strip(rr)
        if not rr:
            break
        Se1 = divexact_z(rr, _pow_z(sd, d - e + 1))
        if (d - e + 1) % 2 == 1:
            Se1 = neg(Se1)
        out[e - 1] = Se1
        d, Sd, Sd1 = e, Se, Se1
    return {j: v for j, v in out.items() if v and strip(v)}


def _yx_const(c) -> YX:
    return [list(c)] if c else []


def psc_sequence(P: YX, Q: YX) -> list:
    """Principal subresultant coefficients psc_j = degree-j y-coefficient of
    S_j, for j = 0..deg P, as Z[x] elements ([] when zero)."""
    p = deg(P)
    chain = subresultant_chain(P, Q)
    out = []
    for j in range(p + 1):
        S = chain.get(j)
        if S is None or deg(S) < j:
            out.append([])
        else:
            out.append(list(S[j]))
    return out


def resultant(P: YX, Q: YX):
    """Resultant with respect to y, an element of Z[x].

    Conventions: res(P, c) = c^deg(P) for c constant in y (so res(f, 1) = 1);
    res with a zero argument raises.
    """
    p, q = deg(P), deg(Q)
    if p < 0 or q < 0:
        raise ValueError("resultant of zero polynomial")
    if q == 0:
        return _pow_z(Q[0], p)
    if p == 0:
        return _pow_z(P[0], q)
    if p < q:
        val = resultant(Q, P)
        if (p * q) % 2 == 1:
            val = _zx.neg(val)
        return val
    if p == q:
        # one reduction step: prem gives lc(Q)^e P = C Q + R, deg R < q, so
        # res(Q, P) = lc(Q)^(p - deg R - e*q) res(Q, R); here e = 1.
        r, e = prem(P, Q)
        strip(r)
        if not r:
            return []
        sub = resultant(Q, r)
        expo = p - deg(r) - e * q
        if expo >= 0:
            val = _zx.mul(sub, _pow_z(lc(Q), expo))
        else:
            val = _zx.divexact(sub, _pow_z(lc(Q), -expo))
        if (p * q) % 2 == 1:
            val = _zx.neg(val)
        return val
    chain = subresultant_chain(P, Q)
    S0 = chain.get(0)
    if not S0:
        return []
    return list(S0[0])
