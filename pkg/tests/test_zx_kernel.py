"""Kernel sanity: integer polynomial arithmetic, Sturm counts, isolation."""

import random
from fractions import Fraction

from nodalnest import _zx


def poly_from_roots(roots):
    p = [1]
    for r in roots:
        p = _zx.mul(p, [-r, 1])
    return p


def test_mul_divexact_roundtrip():
    rng = random.Random(1)
    for _ in range(200):
        p = [rng.randint(-9, 9) for _ in range(rng.randint(1, 6))]
        q = [rng.randint(-9, 9) for _ in range(rng.randint(1, 6))]
        _zx.strip(p)
        _zx.strip(q)
        if not p or not q:
            continue
        assert _zx.divexact(_zx.mul(p, q), q) == p


def test_prem_identity():
    rng = random.Random(2)
    for _ in range(200):
        p = _zx.strip([rng.randint(-9, 9) for _ in range(rng.randint(2, 7))])
        q = _zx.strip([rng.randint(-9, 9) for _ in range(rng.randint(1, 6))])
        if not p or not q or _zx.deg(p) < _zx.deg(q):
            continue
        r, e = _zx.prem(p, q)
        assert e == _zx.deg(p) - _zx.deg(q) + 1
        # check lc(q)^e * p - r is divisible by q
        lhs = _zx.sub(_zx.mul_scalar(p, _zx.lc(q) ** e), r)
        if lhs:
            _zx.divexact(lhs, q)  # raises if not exact


def test_gcd_of_products():
    rng = random.Random(3)
    for _ in range(100):
        a = poly_from_roots([rng.randint(-4, 4) for _ in range(rng.randint(0, 3))])
        b = poly_from_roots([rng.randint(-4, 4) for _ in range(rng.randint(0, 3))])
        c = poly_from_roots([rng.randint(-4, 4) for _ in range(rng.randint(0, 3))])
        g = _zx.gcd_z(_zx.mul(a, b), _zx.mul(a, c))
        # a divides the gcd
        _zx.divexact(g, _zx.gcd_z(g, a))  # sanity: no crash
        _zx.divexact(_zx.mul(a, b), a)
        assert _zx.deg(g) >= 0
        # gcd divides both inputs exactly
        _zx.divexact(_zx.mul(a, b), g)
        _zx.divexact(_zx.mul(a, c), g)


def test_yun_squarefree():
    # (x-1)^2 (x+3)
    p = _zx.mul(_zx.mul([-1, 1], [-1, 1]), [3, 1])
    fac = _zx.yun_squarefree(p)
    assert sorted(m for _, m in fac) == [1, 2]
    for f, m in fac:
        if m == 2:
            assert f == [-1, 1]
        else:
            assert f == [3, 1]


def test_sturm_counts_match_known_roots():
    rng = random.Random(4)
    for _ in range(100):
        roots = sorted(rng.sample(range(-8, 9), rng.randint(1, 5)))
        p = poly_from_roots(roots)
        assert _zx.sturm_root_count(p) == len(roots)
        assert _zx.sturm_count(p, Fraction(0), "inf") == len([r for r in roots if r > 0])


def test_sturm_count_nonsquarefree():
    p = _zx.mul(poly_from_roots([1, 1]), poly_from_roots([-3]))  # (x-1)^2 (x+3)
    assert _zx.sturm_root_count(p) == 2


def test_isolation_vs_sturm_certificate():
    rng = random.Random(5)
    for _ in range(200):
        p = _zx.strip([rng.randint(-9, 9) for _ in range(rng.randint(2, 8))])
        if _zx.deg(p) < 1:
            continue
        sf = _zx.squarefree_part(p)
        if _zx.deg(sf) < 1:
            continue
        ivs = _zx.isolate_squarefree(sf)
        assert len(ivs) == _zx.sturm_root_count(sf)
        # intervals sorted, disjoint, and each has a definite sign change or
        # an exact root
        prev_hi = None
        for lo, hi, exact in ivs:
            assert lo <= hi
            if prev_hi is not None:
                assert lo >= prev_hi
            prev_hi = hi
            if exact is None:
                assert _zx.sign_at_fraction(sf, lo) * _zx.sign_at_fraction(sf, hi) < 0
            else:
                assert _zx.sign_at_fraction(sf, exact) == 0


def test_isolation_known_roots():
    p = poly_from_roots([-3, 0, 2, 7])
    ivs = _zx.isolate_squarefree(p)
    assert len(ivs) == 4
    for (lo, hi, _), r in zip(ivs, [-3, 0, 2, 7]):
        assert lo <= r <= hi


def test_interval_horner_contains_value():
    rng = random.Random(6)
    for _ in range(100):
        p = _zx.strip([rng.randint(-9, 9) for _ in range(rng.randint(1, 6))])
        if not p:
            continue
        lo = Fraction(rng.randint(-8, 7))
        hi = lo + Fraction(rng.randint(1, 5), rng.randint(1, 4))
        vlo, vhi = _zx.eval_interval(p, lo, hi)
        for t in (lo, hi, lo + (hi - lo) / 3):
            v = _zx.eval_fraction(p, t)
            assert vlo <= v <= vhi
