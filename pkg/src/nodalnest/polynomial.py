"""Exact bivariate and univariate polynomial arithmetic over rationals.

`BiPoly` is a sparse bivariate polynomial with `fractions.Fraction`
coefficients: the central data type of the toolkit.  All operations are
exact; nothing here touches floating point.  Downstream sign decisions and
topology certificates depend on that.

Conventions fixed here (and tested):

* ``rotate(p, r)(x, y) = p(cos*x - sin*y, sin*x + cos*y)`` for a rational
  rotation r; the matching point map is ``rotate_point``.
* ``gcd`` returns an integer-coefficient representative with coefficient
  gcd 1 and positive leading term in graded lexicographic order (y before
  x).  ``square_free_part`` is normalized the same way.
* The zero polynomial has no degree: ``total_degree`` returns ``None``
  rather than a sentinel integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Literal, Mapping, Optional

from . import _zx, _zxy
from .errors import GenericityError, InputError

Axis = Literal["x", "y"]

_FR0 = Fraction(0)
_FR1 = Fraction(1)


class BiPoly:
    """Sparse exact bivariate polynomial: {(i, j): coeff} with x^i y^j."""

    __slots__ = ("terms", "_yx_cache")

    def __init__(self, terms: Mapping[tuple[int, int], Fraction | int] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise InputError("negative exponent in polynomial term")
                c = Fraction(c)
                if c:
                    clean[(i, j)] = c
        self.terms = clean
        self._yx_cache: Optional[list] = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def constant(c) -> "BiPoly":
        return BiPoly({(0, 0): Fraction(c)})

    @staticmethod
    def variable(name: Axis) -> "BiPoly":
        if name == "x":
            return BiPoly({(1, 0): _FR1})
        if name == "y":
            return BiPoly({(0, 1): _FR1})
        raise InputError(f"unknown variable {name!r}")

    # -- basic structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> Optional[int]:
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(i + j for i, j in self.terms)

    def degree_in(self, var: Axis) -> Optional[int]:
        if not self.terms:
            return None
        k = 0 if var == "x" else 1
        return max(m[k] for m in self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "BiPoly(0)"
        bits = []
        for (i, j) in sorted(self.terms, key=lambda m: (-(m[0] + m[1]), -m[0])):
            c = self.terms[(i, j)]
            mono = "".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in (("x", i), ("y", j))
                if e
            )
            bits.append(f"{c}*{mono}" if mono else f"{c}")
        return "BiPoly(" + " + ".join(bits) + ")"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "BiPoly":
        other = _coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, _FR0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return _wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return _wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "BiPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "BiPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "BiPoly":
        other = _coerce(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                v = out.get(m, _FR0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return _wrap(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise InputError("negative power of a polynomial")
        result = BiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- queries ------------------------------------------------------------

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), _FR0)

    def evaluate(self, x, y) -> Fraction:
        """Exact value at a rational point."""
        x = Fraction(x)
        y = Fraction(y)
        xp: dict[int, Fraction] = {0: _FR1}
        yp: dict[int, Fraction] = {0: _FR1}
        total = _FR0
        for (i, j), c in self.terms.items():
            if i not in xp:
                xp[i] = x ** i
            if j not in yp:
                yp[j] = y ** j
            total += c * xp[i] * yp[j]
        return total

    def evaluate_box(self, xlo, xhi, ylo, yhi) -> tuple[Fraction, Fraction]:
        """Exact interval bounds for the values over [xlo,xhi] x [ylo,yhi]
        (term-wise monotone power bounds; sound, not tight)."""
        xlo, xhi, ylo, yhi = map(Fraction, (xlo, xhi, ylo, yhi))
        lo = _FR0
        hi = _FR0
        for (i, j), c in self.terms.items():
            pxl, pxh = _power_range(xlo, xhi, i)
            pyl, pyh = _power_range(ylo, yhi, j)
            candidates = (pxl * pyl, pxl * pyh, pxh * pyl, pxh * pyh)
            tlo, thi = min(candidates), max(candidates)
            if c > 0:
                lo += c * tlo
                hi += c * thi
            else:
                lo += c * thi
                hi += c * tlo
        return lo, hi

    def fiber_x(self, x0) -> "UniPoly":
        """The univariate slice y -> p(x0, y)."""
        x0 = Fraction(x0)
        by_j: dict[int, Fraction] = {}
        xp: dict[int, Fraction] = {0: _FR1}
        for (i, j), c in self.terms.items():
            if i not in xp:
                xp[i] = x0 ** i
            by_j[j] = by_j.get(j, _FR0) + c * xp[i]
        if not by_j:
            return UniPoly(())
        n = max(by_j)
        return UniPoly(tuple(by_j.get(j, _FR0) for j in range(n + 1)))

    def swap_variables(self) -> "BiPoly":
        return _wrap({(j, i): c for (i, j), c in self.terms.items()})

    # -- integer form -------------------------------------------------------

    def int_yx(self) -> list:
        """Integer Z[x][y] form: a positive rational multiple of self with
        integer coefficients (dense in y, `_zx` lists in x).  Cached; the
        returned structure is a fresh copy."""
        if self._yx_cache is None:
            self._yx_cache = _to_yx(self)
        return [list(c) for c in self._yx_cache]


def _wrap(terms: dict[tuple[int, int], Fraction]) -> BiPoly:
    p = BiPoly()
    p.terms = terms
    return p


def _coerce(v) -> BiPoly:
    if isinstance(v, BiPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return BiPoly.constant(v)
    raise TypeError(f"cannot combine BiPoly with {type(v).__name__}")


def _power_range(lo: Fraction, hi: Fraction, n: int) -> tuple[Fraction, Fraction]:
    if n == 0:
        return _FR1, _FR1
    a, b = lo ** n, hi ** n
    if n % 2 == 1:
        return a, b
    if lo >= 0:
        return a, b
    if hi <= 0:
        return b, a
    return _FR0, max(a, b)


def _to_yx(p: BiPoly) -> list:
    """Clear denominators and return the dense Z[x][y] representation."""
    if not p.terms:
        return []
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // int_gcd(den, c.denominator)
    ny = max(j for _, j in p.terms)
    out = [[] for _ in range(ny + 1)]
    rows: list[dict[int, int]] = [dict() for _ in range(ny + 1)]
    for (i, j), c in p.terms.items():
        rows[j][i] = c.numerator * (den // c.denominator)
    for j, row in enumerate(rows):
        if row:
            nx = max(row)
            out[j] = _zx.strip([row.get(i, 0) for i in range(nx + 1)])
    return _zxy.strip(out)


def from_yx(yx: list, scale: Fraction = _FR1) -> BiPoly:
    """Rebuild a BiPoly from the dense integer form, optionally scaled."""
    terms: dict[tuple[int, int], Fraction] = {}
    for j, row in enumerate(yx):
        for i, c in enumerate(row):
            if c:
                terms[(i, j)] = Fraction(c) * scale
    return _wrap(terms)


@dataclass(frozen=True)
class UniPoly:
    """Dense exact univariate polynomial, lowest degree first."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> Optional[int]:
        return len(self.coefficients) - 1 if self.coefficients else None

    def is_zero(self) -> bool:
        return not self.coefficients

    def evaluate(self, x) -> Fraction:
        acc = _FR0
        x = Fraction(x)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def int_coeffs(self) -> list:
        """Integer representative (positive rational multiple), `_zx` form."""
        if not self.coefficients:
            return []
        den = 1
        for c in self.coefficients:
            den = den * c.denominator // int_gcd(den, c.denominator)
        return _zx.strip([c.numerator * (den // c.denominator) for c in self.coefficients])

    @staticmethod
    def from_int(p: Iterable[int]) -> "UniPoly":
        return UniPoly(tuple(Fraction(c) for c in p))


# ---------------------------------------------------------------------------
# Calculus and algebra on BiPoly


def diff(p: BiPoly, var: Axis) -> BiPoly:
    """Exact partial derivative."""
    out: dict[tuple[int, int], Fraction] = {}
    if var == "x":
        for (i, j), c in p.terms.items():
            if i:
                out[(i - 1, j)] = c * i
    elif var == "y":
        for (i, j), c in p.terms.items():
            if j:
                out[(i, j - 1)] = c * j
    else:
        raise InputError(f"unknown axis {var!r}")
    return _wrap(out)


def laplacian(p: BiPoly) -> BiPoly:
    """p_xx + p_yy, exactly."""
    return diff(diff(p, "x"), "x") + diff(diff(p, "y"), "y")


def is_biharmonic(p: BiPoly) -> bool:
    """True iff the Laplacian of the Laplacian vanishes identically."""
    return laplacian(laplacian(p)).is_zero()


def _normalize_int_poly(p: BiPoly) -> BiPoly:
    """Scale to integer coefficients with gcd 1 and positive leading term in
    graded lex order (y before x).  Pure rescaling: the zero set and the
    factor structure are untouched."""
    if p.is_zero():
        return p
    yx = p.int_yx()
    g = 0
    for row in yx:
        for c in row:
            g = int_gcd(g, c)
    if g > 1:
        yx = [[c // g for c in row] for row in yx]
    q = from_yx(yx)
    lead = max(q.terms, key=lambda m: (m[0] + m[1], m[1], m[0]))
    if q.terms[lead] < 0:
        q = -q
    return q


def gcd(p: BiPoly, q: BiPoly) -> BiPoly:
    """Gcd in Q[x, y], normalized to integer coefficients with content 1 and
    positive leading term (graded lex, y before x).

    Subresultant-free primitive PRS in the variable of lower degree, with
    content extraction, per the exactness requirements downstream.
    """
    if p.is_zero() and q.is_zero():
        raise InputError("gcd(0, 0) is undefined")
    if p.is_zero():
        return _normalize_int_poly(q)
    if q.is_zero():
        return _normalize_int_poly(p)
    dx = max(p.degree_in("x") or 0, q.degree_in("x") or 0)
    dy = max(p.degree_in("y") or 0, q.degree_in("y") or 0)
    swap = dx < dy  # run the PRS in the variable of lower degree
    a, b = (p.swap_variables(), q.swap_variables()) if swap else (p, q)
    g_yx = _zxy.gcd_yx(_to_yx(a), _to_yx(b))
    g = from_yx(g_yx)
    if swap:
        g = g.swap_variables()
    return _normalize_int_poly(g)


def square_free_part(p: BiPoly) -> BiPoly:
    """Product of the distinct irreducible factors of p, normalized like
    `gcd`.  Same real zero set as p; idempotent."""
    if p.is_zero():
        raise InputError("square-free part of the zero polynomial")
    if p.total_degree == 0:
        return BiPoly.constant(1)
    px = diff(p, "x")
    py = diff(p, "y")
    g = gcd(gcd(p, px), py)  # gcd with a zero argument is the other input
    result = _divide_exact(p, g)
    return _normalize_int_poly(result)


def _divide_exact(p: BiPoly, d: BiPoly) -> BiPoly:
    """Exact division p / d in Q[x, y]; raises CertificationError-grade
    AssertionError if not exact (internal use only on known divisors)."""
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if d.total_degree == 0:
        c = d.terms[(0, 0)]
        return _wrap({m: v / c for m, v in p.terms.items()})
    # divide in Q[x][y] by the leading y-coefficient, with a variable swap
    # when d is constant in y
    if (d.degree_in("y") or 0) == 0:
        return _divide_exact(p.swap_variables(), d.swap_variables()).swap_variables()
    num = {m: Fraction(c) for m, c in p.terms.items()}
    dy = d.degree_in("y")
    d_rows: dict[int, dict[int, Fraction]] = {}
    for (i, j), c in d.terms.items():
        d_rows.setdefault(j, {})[i] = c
    lead_row = d_rows[dy]
    out: dict[tuple[int, int], Fraction] = {}
    # long division in y over Q[x]: requires lead_row to be a monomial-free
    # exact divisor at each step; we divide coefficient rows as univariate
    # polynomials in x
    def row_of(poly: dict, j: int) -> dict[int, Fraction]:
        return {i: c for (i, jj), c in poly.items() if jj == j}

    def set_row(poly: dict, j: int, row: dict[int, Fraction]):
        for i in list(poly):
            if i[1] == j:
                del poly[i]
        for i, c in row.items():
            if c:
                poly[(i, j)] = c

    def unirow_div(a: dict[int, Fraction], b: dict[int, Fraction]) -> dict[int, Fraction]:
        # exact division of univariate (in x) rows
        a = dict(a)
        out_r: dict[int, Fraction] = {}
        db = max(b)
        lb = b[db]
        while a:
            da = max(a)
            if da < db:
                raise ArithmeticError("inexact division")
            k = da - db
            f = a[da] / lb
            out_r[k] = f
            for i, c in b.items():
                v = a.get(i + k, _FR0) - f * c
                if v:
                    a[i + k] = v
                else:
                    a.pop(i + k, None)
        return out_r

    while num:
        jmax = max(j for _, j in num)
        if jmax < dy:
            raise ArithmeticError("inexact division")
        top = row_of(num, jmax)
        qrow = unirow_div(top, lead_row)
        for j, drow in d_rows.items():
            tgt = row_of(num, j + jmax - dy)
            for iq, cq in qrow.items():
                for idr, cdr in drow.items():
                    i = iq + idr
                    v = tgt.get(i, _FR0) - cq * cdr
                    if v:
                        tgt[i] = v
                    else:
                        tgt.pop(i, None)
            set_row(num, j + jmax - dy, tgt)
        for iq, cq in qrow.items():
            out[(iq, jmax - dy)] = out.get((iq, jmax - dy), _FR0) + cq
    return _wrap({m: c for m, c in out.items() if c})


# ---------------------------------------------------------------------------
# Rational rotations


@dataclass(frozen=True)
class RationalRotation:
    """Exact rotation: a rational point (cos, sin) on the unit circle."""

    cos: Fraction
    sin: Fraction

    def __post_init__(self):
        c = Fraction(self.cos)
        s = Fraction(self.sin)
        object.__setattr__(self, "cos", c)
        object.__setattr__(self, "sin", s)
        if c * c + s * s != 1:
            raise InputError("rotation requires cos^2 + sin^2 = 1 exactly")

    @staticmethod
    def identity() -> "RationalRotation":
        return RationalRotation(_FR1, _FR0)

    @staticmethod
    def from_triple(a: int, b: int, c: int) -> "RationalRotation":
        return RationalRotation(Fraction(a, c), Fraction(b, c))

    def inverse(self) -> "RationalRotation":
        return RationalRotation(self.cos, -self.sin)

    def compose(self, other: "RationalRotation") -> "RationalRotation":
        return RationalRotation(
            self.cos * other.cos - self.sin * other.sin,
            self.sin * other.cos + self.cos * other.sin,
        )


def rotate(p: BiPoly, r: RationalRotation) -> BiPoly:
    """Substitution p(cos*x - sin*y, sin*x + cos*y); total degree preserved,
    zero set carried to its preimage under the point map `rotate_point`."""
    if p.is_zero():
        return p
    u = BiPoly({(1, 0): r.cos, (0, 1): -r.sin})   # image of x
    v = BiPoly({(1, 0): r.sin, (0, 1): r.cos})    # image of y
    max_i = max(i for i, _ in p.terms)
    max_j = max(j for _, j in p.terms)
    upow = [BiPoly.constant(1)]
    for _ in range(max_i):
        upow.append(upow[-1] * u)
    vpow = [BiPoly.constant(1)]
    for _ in range(max_j):
        vpow.append(vpow[-1] * v)
    out = BiPoly.zero()
    for (i, j), c in p.terms.items():
        out = out + upow[i] * vpow[j] * c
    return out


def rotate_point(r: RationalRotation, x, y) -> tuple[Fraction, Fraction]:
    """The point map matching `rotate`: rotate(p, r)(q) = p(rotate_point(r, q))."""
    x = Fraction(x)
    y = Fraction(y)
    return (r.cos * x - r.sin * y, r.sin * x + r.cos * y)


def pythagorean_rotations():
    """Deterministic stream of rotations: identity, then rotations built
    from the classical primitive triples in a fixed order, each in four
    orientations, then deeper triples from the Berggren tree."""
    yield RationalRotation.identity()
    seeds = [(3, 4, 5)]
    seen = set()
    queue = list(seeds)
    while queue:
        a, b, c = queue.pop(0)
        if (a, b, c) in seen or len(seen) > 4000:
            continue
        seen.add((a, b, c))
        for aa, bb in ((a, b), (b, a)):
            yield RationalRotation(Fraction(aa, c), Fraction(bb, c))
            yield RationalRotation(Fraction(aa, c), Fraction(-bb, c))
        # Berggren's ternary tree of primitive triples
        queue.append((a - 2 * b + 2 * c, 2 * a - b + 2 * c, 2 * a - 2 * b + 3 * c))
        queue.append((a + 2 * b + 2 * c, 2 * a + b + 2 * c, 2 * a + 2 * b + 3 * c))
        queue.append((-a + 2 * b + 2 * c, -2 * a + b + 2 * c, -2 * a + 2 * b + 3 * c))


def is_generic_direction(f: BiPoly) -> bool:
    """True iff gcd(f, f_y) is constant.  Requires f square-free of positive
    degree; raises GenericityError on non-square-free input."""
    if f.is_zero() or (f.total_degree or 0) < 1:
        raise InputError("is_generic_direction requires degree >= 1")
    sf = square_free_part(f)
    if _normalize_int_poly(f) != sf:
        raise GenericityError(
            "is_generic_direction requires square-free input; take square_free_part first"
        )
    fy = diff(f, "y")
    if fy.is_zero():
        return False
    g = gcd(f, fy)
    return g.total_degree == 0


def leading_y_coefficient(f: BiPoly) -> BiPoly:
    """Coefficient of y^deg_y(f) as a polynomial in x."""
    dy = f.degree_in("y")
    if dy is None:
        return BiPoly.zero()
    return _wrap({(i, 0): c for (i, j), c in f.terms.items() if j == dy})
