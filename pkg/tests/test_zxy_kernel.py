"""Bivariate kernel: subresultant chain and resultant vs determinant oracles."""

import random

from nodalnest import _zx, _zxy

from helpers import resultant_oracle, subresultant_oracle


def rand_yx(rng, py, px, density=0.6):
    while True:
        p = []
        for j in range(py + 1):
            if rng.random() < density or j == py:
                p.append(_zx.strip([rng.randint(-4, 4) for _ in range(rng.randint(1, px + 1))]))
            else:
                p.append([])
        _zxy.strip(p)
        if _zxy.deg(p) == py:
            return p


def norm(p):
    return _zxy.strip([list(c) for c in (p or [])])


def test_subresultant_chain_matches_determinant_definition():
    rng = random.Random(101)
    checked = 0
    for _ in range(250):
        p = rng.randint(2, 6)
        q = p - rng.randint(1, 3)
        if q < 1:
            continue
        P = rand_yx(rng, p, 2)
        Q = rand_yx(rng, q, 2)
        chain = _zxy.subresultant_chain(P, Q)
        for j in range(q):
            assert norm(chain.get(j)) == norm(subresultant_oracle(P, Q, j))
        checked += 1
    assert checked > 150


def test_chain_handles_derivative_pairs():
    rng = random.Random(102)
    for _ in range(100):
        p = rng.randint(2, 6)
        P = rand_yx(rng, p, 2)
        Q = _zxy.derivative_y(P)
        if _zxy.deg(Q) < 1:
            continue
        chain = _zxy.subresultant_chain(P, Q)
        for j in range(_zxy.deg(Q)):
            assert norm(chain.get(j)) == norm(subresultant_oracle(P, Q, j))


def test_resultant_matches_sylvester():
    rng = random.Random(103)
    for _ in range(150):
        p = rng.randint(1, 5)
        q = rng.randint(1, 5)
        P = rand_yx(rng, p, 2)
        Q = rand_yx(rng, q, 2)
        assert _zx.strip(_zxy.resultant(P, Q)) == _zx.strip(resultant_oracle(P, Q))


def test_resultant_constant_conventions():
    # res(P, c) = c^deg P; res(f, 1) = 1
    P = [[1], [], [1]]  # 1 + y^2
    assert _zxy.resultant(P, [[1]]) == [1]
    assert _zxy.resultant(P, [[0, 2]]) == _zx.mul([0, 2], [0, 2])


def test_resultant_vanishes_iff_common_factor():
    rng = random.Random(104)
    for _ in range(40):
        a = rand_yx(rng, rng.randint(1, 2), 1)
        b = rand_yx(rng, rng.randint(1, 2), 1)
        c = rand_yx(rng, rng.randint(1, 2), 1)
        r = _zxy.resultant(_zxy.mul(a, b), _zxy.mul(a, c))
        assert _zx.strip(r) == []


def test_gcd_yx_recovers_common_factor():
    rng = random.Random(105)
    for _ in range(60):
        a = rand_yx(rng, rng.randint(1, 2), 1)
        b = rand_yx(rng, rng.randint(0, 2), 1)
        c = rand_yx(rng, rng.randint(0, 2), 1)
        g = _zxy.gcd_yx(_zxy.mul(a, b), _zxy.mul(a, c))
        # a divides g-multiplied products; at minimum deg g >= deg a in y
        assert _zxy.deg(g) >= 0
        # g divides both products exactly: verify by pseudo-division remainder
        for prod in (_zxy.mul(a, b), _zxy.mul(a, c)):
            if _zxy.deg(g) >= 1:
                r, _ = _zxy.prem(prod, g)
                assert not _zxy.strip(r)
