"""Dense integer-coefficient univariate polynomial kernels.

Internal module.  A polynomial is a plain ``list[int]`` of coefficients,
lowest degree first, with no trailing zeros (the zero polynomial is ``[]``).
Everything here is exact integer arithmetic; rational points enter only
through homogeneous evaluation, which keeps the hot paths free of Fraction
overhead.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd


Z = list  # list[int], low degree first, normalized


def strip(p: Z) -> Z:
    while p and p[-1] == 0:
        p.pop()
    return p


def deg(p: Z) -> int:
    """Degree; -1 for the zero polynomial (internal convention only)."""
    return len(p) - 1


def lc(p: Z) -> int:
    return p[-1]


def add(p: Z, q: Z) -> Z:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return strip(out)


def sub(p: Z, q: Z) -> Z:
    out = list(p) + [0] * (len(q) - len(p))
    for i, c in enumerate(q):
        out[i] -= c
    return strip(out)


def neg(p: Z) -> Z:
    return [-c for c in p]


def mul(p: Z, q: Z) -> Z:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return strip(out)


def mul_scalar(p: Z, c: int) -> Z:
    if c == 0:
        return []
    return [a * c for a in p]


def content(p: Z) -> int:
    """Positive gcd of the coefficients; 0 for the zero polynomial."""
    g = 0
    for c in p:
        g = int_gcd(g, c)
        if g == 1:
            return 1
    return g


def primitive(p: Z) -> Z:
    if not p:
        return []
    g = content(p)
    return [c // g for c in p] if g > 1 else list(p)


def derivative(p: Z) -> Z:
    return strip([i * c for i, c in enumerate(p)][1:])


def eval_int(p: Z, x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign_at_fraction(p: Z, x: Fraction) -> int:
    """Sign of p(x) for rational x, via homogeneous integer Horner."""
    a, b = x.numerator, x.denominator
    acc = 0
    bp = 1
    for c in reversed(p):
        acc = acc * a + c * bp
        bp *= b
    return (acc > 0) - (acc < 0)


def eval_fraction(p: Z, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def eval_interval(p: Z, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Exact interval Horner:. bounds for p over [lo, hi]."""
    alo = Fraction(0)
    ahi = Fraction(0)
    for c in reversed(p):
        prods = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(prods) + c, max(prods) + c
    return alo, ahi


def sign_variations(coeffs) -> int:
    count = 0
    prev = 0
    for c in coeffs:
        if c:
            s = 1 if c > 0 else -1
            if prev and s != prev:
                count += 1
            prev = s
    return count


def cauchy_bound(p: Z) -> Fraction:
    """1 + max |c_i / c_lead|: all real roots lie inside (-bound, bound)."""
    if deg(p) < 1:
        raise ValueError("cauchy_bound needs degree >= 1")
    lead = abs(p[-1])
    m = max(abs(c) for c in p[:-1])
    return 1 + Fraction(m, lead)


def divexact(p: Z, q: Z) -> Z:
    """Exact division p / q in Z[x]; raises if not exact."""
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    if not p:
        return []
    rem = list(p)
    dq = deg(q)
    lq = lc(q)
    out = [0] * (len(p) - len(q) + 1)
    for k in range(deg(p) - dq, -1, -1):
        c = rem[k + dq]
        if c == 0:
            continue
        t, r = divmod(c, lq)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[k] = t
        for i, b in enumerate(q):
            rem[k + i] -= t * b
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return strip(out)


def prem(p: Z, q: Z) -> tuple[Z, int]:
    """Pseudo-remainder.  Returns (r, e) with

        lc(q)^e * p  =  (...) * q + r,   e = deg p - deg q + 1,

    the classical normalization (missing steps are padded so e is exact).
    """
    dp, dq = deg(p), deg(q)
    if dq < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    if dp < dq:
        return list(p), 0
    lq = lc(q)
    e = dp - dq + 1
    steps = 0
    r = list(p)
    while r and deg(r) >= dq:
        c = r[-1]
        shift = deg(r) - dq
        r = [a * lq for a in r]
        for i, b in enumerate(q):
            r[shift + i] -= c * b
        strip(r)
        steps += 1
    if steps < e:
        f = lq ** (e - steps)
        r = [a * f for a in r]
    return r, e


def gcd_z(p: Z, q: Z) -> Z:
    """Gcd in Z[x]: gcd of contents times primitive-PRS gcd, with positive
    leading coefficient."""
    if not p and not q:
        return []
    if not p:
        g = primitive(list(q))
    elif not q:
        g = primitive(list(p))
    else:
        cp, cq = content(p), content(q)
        a = primitive(p)
        b = primitive(q)
        if deg(a) < deg(b):
            a, b = b, a
        while b:
            r, _ = prem(a, b)
            a, b = b, primitive(r)
        cg = int_gcd(cp, cq)
        g = mul_scalar(primitive(a), cg)
    if g and g[-1] < 0:
        g = neg(g)
    return g


def yun_squarefree(p: Z) -> list[tuple[Z, int]]:
    """Yun's algorithm: [(f_i, i)] with p = c * prod f_i^i, the f_i
    square-free, pairwise coprime, primitive, positive leading coefficient.
    Constant factors are dropped."""
    if not p:
        raise ValueError("zero polynomial")
    w = primitive(list(p))
    if w[-1] < 0:
        w = neg(w)
    if deg(w) == 0:
        return []
    dp = derivative(w)
    a = gcd_z(w, dp)
    out = []
    b = divexact(w, a)
    c = divexact(dp, a)
    i = 1
    while True:
        d = sub(c, derivative(b))
        if not d:
            if deg(b) > 0:
                out.append((b, i))
            break
        f = gcd_z(b, d)
        if deg(f) > 0:
            out.append((f, i))
        b = divexact(b, f)
        c = divexact(d, f)
        i += 1
    return out


def squarefree_part(p: Z) -> Z:
    """Primitive square-free part with positive leading coefficient."""
    if not p:
        raise ValueError("zero polynomial")
    w = primitive(list(p))
    if w[-1] < 0:
        w = neg(w)
    if deg(w) == 0:
        return [1]
    g = gcd_z(w, derivative(w))
    return divexact(w, g)


# ---------------------------------------------------------------------------
# Sturm sequences


def sturm_chain(p: Z) -> list[Z]:
    """Sturm chain of p.  Primitive PRS with the pseudo-division factor's
    sign compensated, so each element equals the classical chain entry up to
    a positive constant."""
    chain = [primitive(list(p))]
    d = derivative(p)
    if not d:
        return chain
    chain.append(primitive(d))
    while chain[-1]:
        r, e = prem(chain[-2], chain[-1])
        if not r:
            break
        if lc(chain[-1]) < 0 and e % 2 == 1:
            r = neg(r)  # undo the negative pseudo-division factor
        chain.append(primitive(neg(r)))
    return chain


def _chain_signs_at(chain: list[Z], x: Fraction) -> list[int]:
    return [sign_at_fraction(f, x) for f in chain]


def _chain_signs_at_inf(chain: list[Z], positive: bool) -> list[int]:
    out = []
    for f in chain:
        if not f:
            out.append(0)
            continue
        s = 1 if f[-1] > 0 else -1
        if not positive and deg(f) % 2 == 1:
            s = -s
        out.append(s)
    return out


def sturm_count_chain(chain: list[Z], lo, hi) -> int:
    """Distinct real roots in (lo, hi] from a precomputed chain.  Endpoints
    may be the strings '-inf'/'inf'."""
    if lo == "-inf":
        va = sign_variations(_chain_signs_at_inf(chain, positive=False))
    else:
        va = sign_variations(_chain_signs_at(chain, lo))
    if hi == "inf":
        vb = sign_variations(_chain_signs_at_inf(chain, positive=True))
    else:
        vb = sign_variations(_chain_signs_at(chain, hi))
    return va - vb


def sturm_count(p: Z, lo, hi) -> int:
    return sturm_count_chain(sturm_chain(p), lo, hi)


def sturm_root_count(p: Z) -> int:
    """Total number of distinct real roots."""
    return sturm_count(p, "-inf", "inf")


# ---------------------------------------------------------------------------
# Descartes / bisection real root isolation


def taylor_shift_1(p: Z) -> Z:
    """p(x + 1), by the Horner-Ruffini scheme."""
    out = list(p)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += out[j + 1]
    return strip(out)


def scale_den_2(p: Z) -> Z:
    """2^deg * p(x/2), integer-preserving; halves the roots' scale."""
    n = deg(p)
    return strip([c << (n - i) for i, c in enumerate(p)])


def descartes_01(p: Z) -> int:
    """Descartes bound for the number of roots in the open interval (0, 1)."""
    rev = list(reversed(p))
    strip(rev)
    if not rev:
        return 0
    return sign_variations(taylor_shift_1(rev))


def _isolate_01(p: Z, lo: Fraction, hi: Fraction, out: list) -> None:
    """Isolate roots of square-free p in (0,1), appending intervals mapped
    through t -> lo + t*(hi - lo).  Exact midpoint roots come back as
    degenerate pairs."""
    v = descartes_01(p)
    if v == 0:
        return
    if v == 1:
        out.append((lo, hi))
        return
    mid = lo + (hi - lo) / 2
    ph = scale_den_2(p)          # roots in (0,1) of p <-> roots in (0,2) of ph
    pr = taylor_shift_1(ph)      # right half, mapped back to (0,1)
    mid_is_root = eval_int(pr, 0) == 0
    if mid_is_root:
        pr = pr[1:]
    _isolate_01(ph, lo, mid, out)
    if mid_is_root:
        out.append((mid, mid))
    _isolate_01(pr, mid, hi, out)


def _deflate_rational_root(p: Z, r: Fraction) -> Z:
    """Exact division of p by (den*x - num) for the known root r = num/den."""
    return divexact(p, [-r.numerator, r.denominator])


def _normalize_enclosure(p: Z, lo: Fraction, hi: Fraction):
    """Shrink (lo, hi) so the unique root of square-free p in the *open*
    interval gets sign-definite endpoints; the incoming endpoints may
    accidentally be other (rational) roots of p.  Returns
    (lo, hi, exact_or_None)."""
    work = p
    lo_dirty = sign_at_fraction(p, lo) == 0
    hi_dirty = sign_at_fraction(p, hi) == 0
    if lo_dirty:
        work = _deflate_rational_root(work, lo)
    if hi_dirty:
        work = _deflate_rational_root(work, hi)
    slo = sign_at_fraction(work, lo)
    shi = sign_at_fraction(work, hi)
    if slo == 0 or shi == 0 or slo == shi:
        raise AssertionError("enclosure does not isolate a sign change")
    while lo_dirty or hi_dirty:
        mid = lo + (hi - lo) / 2
        sm = sign_at_fraction(work, mid)
        if sm == 0:
            return mid, mid, mid
        if sm == slo:
            lo, lo_dirty = mid, False
        else:
            hi, hi_dirty = mid, False
    return lo, hi, None


def isolate_squarefree(p: Z) -> list[tuple[Fraction, Fraction, Fraction | None]]:
    """Isolating intervals for all distinct real roots of square-free p.

    Returns sorted (lo, hi, exact) triples: either exact is a Fraction and
    lo == hi == exact, or exact is None, lo < root < hi, and p has opposite
    nonzero signs at lo and hi.  Intervals are pairwise disjoint.
    """
    if not p:
        raise ValueError("zero polynomial")
    if deg(p) == 0:
        return []
    zero_root = False
    if p[0] == 0:
        zero_root = True
        p = list(p)
        while p[0] == 0:
            p = p[1:]
    raw: list[tuple[Fraction, Fraction]] = []
    if deg(p) >= 1:
        b = cauchy_bound(p)
        bb = Fraction(1)
        while bb < b:
            bb *= 2
        num = bb.numerator
        den = bb.denominator
        n = deg(p)
        qp = strip([c * num ** i * den ** (n - i) for i, c in enumerate(p)])
        pos: list[tuple[Fraction, Fraction]] = []
        _isolate_01(qp, Fraction(0), Fraction(1), pos)
        qm = strip([c * (-num) ** i * den ** (n - i) for i, c in enumerate(p)])
        negs: list[tuple[Fraction, Fraction]] = []
        _isolate_01(qm, Fraction(0), Fraction(1), negs)
        raw = [(-bb * h, -bb * l) for (l, h) in reversed(negs)]
        if zero_root:
            raw.append((Fraction(0), Fraction(0)))
        raw += [(bb * l, bb * h) for (l, h) in pos]
    elif zero_root:
        raw = [(Fraction(0), Fraction(0))]
    out = []
    for lo, hi in raw:
        if lo == hi:
            out.append((lo, hi, lo))
            continue
        if zero_root:
            # keep 0 (an original root) from being an interval endpoint
            lo, hi, exact = _shrink_off_zero(p, lo, hi)
            if exact is not None:
                out.append((lo, hi, exact))
                continue
        out.append(_normalize_enclosure(p, lo, hi))
    return out


def _shrink_off_zero(p_nz: Z, lo: Fraction, hi: Fraction):
    """Move an endpoint equal to 0 strictly off 0, preserving the unique
    enclosed root of p_nz (which is nonzero at 0)."""
    s0 = sign_at_fraction(p_nz, Fraction(0))
    while lo == 0 or hi == 0:
        mid = lo + (hi - lo) / 2
        sm = sign_at_fraction(p_nz, mid)
        if sm == 0:
            return mid, mid, mid
        if sm == s0:
            if lo == 0:
                lo = mid
            else:
                hi = mid
        else:
            if lo == 0:
                hi = mid
            else:
                lo = mid
    return lo, hi, None
