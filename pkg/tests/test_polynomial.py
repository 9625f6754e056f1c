"""Exact polynomial arithmetic: evaluation, calculus, gcd, rotations."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nodalnest import builtin
from nodalnest.errors import GenericityError, InputError
from nodalnest.polynomial import (
    BiPoly,
    RationalRotation,
    diff,
    gcd,
    is_biharmonic,
    is_generic_direction,
    laplacian,
    pythagorean_rotations,
    rotate,
    rotate_point,
    square_free_part,
)

X = BiPoly.variable("x")
Y = BiPoly.variable("y")


def small_polys(max_terms=6, max_exp=4, coeff_range=9):
    return st.builds(
        lambda pairs: BiPoly({(i, j): c for (i, j, c) in pairs}),
        st.lists(
            st.tuples(
                st.integers(0, max_exp),
                st.integers(0, max_exp),
                st.integers(-coeff_range, coeff_range),
            ),
            max_size=max_terms,
        ),
    )


class TestEvaluate:
    def test_ellipse_at_origin(self):
        assert builtin.ellipse().evaluate(0, 0) == 25

    def test_ellipse_on_curve(self):
        assert builtin.ellipse().evaluate(5, 0) == 0

    def test_sextic_at_one_zero(self):
        # sum of the y-free coefficients at x=1: 8254531 + 24763593 - 8254531
        assert builtin.sextic().evaluate(1, 0) == 24763593

    @settings(max_examples=60, deadline=None)
    @given(small_polys(), small_polys(), st.integers(-5, 5), st.integers(-5, 5))
    def test_product_homomorphism(self, p, q, a, b):
        assert (p * q).evaluate(a, b) == p.evaluate(a, b) * q.evaluate(a, b)


class TestCalculus:
    def test_diff_circle(self):
        circle = X * X + Y * Y - 1
        assert diff(circle, "y") == 2 * Y

    def test_diff_ellipse(self):
        assert diff(builtin.ellipse(), "y") == -50 * Y

    def test_diff_constant(self):
        assert diff(BiPoly.constant(7), "x").is_zero()

    @settings(max_examples=60, deadline=None)
    @given(small_polys())
    def test_mixed_partials_commute(self, p):
        assert diff(diff(p, "x"), "y") == diff(diff(p, "y"), "x")

    def test_laplacian_examples(self):
        assert laplacian(X * X + Y * Y) == BiPoly.constant(4)
        assert laplacian(X ** 3 * Y) == 6 * X * Y
        assert laplacian(X ** 3 * Y - X * Y ** 3).is_zero()

    def test_biharmonic_examples(self):
        assert is_biharmonic(builtin.nested_octic())
        assert is_biharmonic(X ** 3 * Y)
        assert not is_biharmonic(X ** 4)

    @settings(max_examples=40, deadline=None)
    @given(small_polys(max_exp=3))
    def test_low_degree_always_biharmonic(self, p):
        if (p.total_degree or 0) <= 3:
            assert is_biharmonic(p)


class TestGcd:
    def test_common_circle_factor(self):
        circle = X * X + Y * Y - 1
        assert gcd(circle * X, circle) == circle

    def test_coprime(self):
        circle = X * X + Y * Y - 1
        assert gcd(circle, 2 * Y).total_degree == 0

    def test_gcd_with_zero(self):
        assert gcd(X - 1, BiPoly.zero()) == X - 1

    def test_gcd_both_zero_errors(self):
        with pytest.raises(InputError):
            gcd(BiPoly.zero(), BiPoly.zero())

    @settings(max_examples=30, deadline=None)
    @given(small_polys(max_terms=3, max_exp=2), small_polys(max_terms=3, max_exp=2),
           small_polys(max_terms=3, max_exp=2))
    def test_common_factor_detected(self, a, b, c):
        if a.is_zero() or b.is_zero() or c.is_zero():
            return
        g = gcd(a * b, a * c)
        if (a.total_degree or 0) >= 1:
            assert (g.total_degree or 0) >= 1


class TestSquareFree:
    def test_squared_circle(self):
        circle = X * X + Y * Y - 1
        assert square_free_part(circle * circle) == circle

    def test_monomial(self):
        assert square_free_part(X * X * Y) == X * Y

    def test_nested_octic_already_squarefree(self):
        u = builtin.nested_octic()
        sf = square_free_part(u)
        assert sf.total_degree == u.total_degree

    def test_zero_errors(self):
        with pytest.raises(InputError):
            square_free_part(BiPoly.zero())

    @settings(max_examples=30, deadline=None)
    @given(small_polys(max_terms=4, max_exp=3))
    def test_idempotent(self, p):
        if p.is_zero() or (p.total_degree or 0) < 1:
            return
        sf = square_free_part(p)
        if (sf.total_degree or 0) >= 1:
            assert square_free_part(sf) == sf


class TestRotation:
    def test_rotation_of_x(self):
        # forward-composition convention: rotate(p, r)(x, y) = p(cx-sy, sx+cy)
        r = RationalRotation(Fraction(3, 5), Fraction(4, 5))
        assert rotate(X, r) == Fraction(3, 5) * X - Fraction(4, 5) * Y

    def test_radial_invariance(self):
        r = RationalRotation(Fraction(5, 13), Fraction(12, 13))
        assert rotate(X * X + Y * Y, r) == X * X + Y * Y

    def test_group_law(self):
        r = RationalRotation(Fraction(3, 5), Fraction(4, 5))
        p = builtin.sextic()
        assert rotate(rotate(p, r), r.inverse()) == p

    def test_degree_preserved(self):
        r = RationalRotation(Fraction(8, 17), Fraction(15, 17))
        p = builtin.nested_octic()
        assert rotate(p, r).total_degree == p.total_degree

    @settings(max_examples=30, deadline=None)
    @given(small_polys(), st.integers(-4, 4), st.integers(-4, 4))
    def test_eval_identity(self, p, a, b):
        r = RationalRotation(Fraction(3, 5), Fraction(4, 5))
        ax, ay = rotate_point(r.inverse(), a, b)
        assert rotate(p, r).evaluate(ax, ay) == p.evaluate(a, b)

    def test_invalid_rotation_rejected(self):
        with pytest.raises(InputError):
            RationalRotation(Fraction(1, 2), Fraction(1, 2))

    def test_rotation_stream_deterministic(self):
        a = [((r.cos, r.sin)) for _, r in zip(range(12), pythagorean_rotations())]
        b = [((r.cos, r.sin)) for _, r in zip(range(12), pythagorean_rotations())]
        assert a == b
        assert a[0] == (1, 0)
        assert (Fraction(3, 5), Fraction(4, 5)) in a


class TestGenericDirection:
    def test_circle_generic(self):
        assert is_generic_direction(X * X + Y * Y - 1)

    def test_vertical_line_not_generic(self):
        assert not is_generic_direction(X - 1)

    def test_line_times_circle_not_generic(self):
        f = (X - 1) * (X * X + Y * Y - 9)
        assert not is_generic_direction(f)

    def test_non_squarefree_rejected(self):
        with pytest.raises(GenericityError):
            is_generic_direction((X - 1) * (X - 1))


class TestIntervalEvaluation:
    def test_box_bounds_contain_samples(self):
        rng = random.Random(9)
        for _ in range(50):
            p = BiPoly(
                {
                    (rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-9, 9)
                    for _ in range(5)
                }
            )
            xlo = Fraction(rng.randint(-4, 3))
            ylo = Fraction(rng.randint(-4, 3))
            xhi = xlo + Fraction(rng.randint(1, 3), 2)
            yhi = ylo + Fraction(rng.randint(1, 3), 2)
            lo, hi = p.evaluate_box(xlo, xhi, ylo, yhi)
            for _ in range(8):
                t = Fraction(rng.randint(0, 16), 16)
                s = Fraction(rng.randint(0, 16), 16)
                v = p.evaluate(xlo + t * (xhi - xlo), ylo + s * (yhi - ylo))
                assert lo <= v <= hi
