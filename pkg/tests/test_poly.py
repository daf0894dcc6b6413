from fractions import Fraction

import pytest

from p3dist.poly import (
    ONE,
    X0,
    X1,
    X2,
    X3,
    Poly,
    dim_graded_piece,
    grevlex_key,
    mon_divides,
    mon_lcm,
    monomials_of_degree,
)

from conftest import make_rng, random_poly


def test_basic_arithmetic():
    p = X0 + X1
    q = X0 - X1
    assert p * q == X0 * X0 - X1 * X1
    assert (p + q) == 2 * X0
    assert p - p == Poly.zero()
    assert (p * 0).is_zero()


def test_power_matches_repeated_product():
    p = X0 + 2 * X1 - X2
    assert p ** 3 == p * p * p
    assert p ** 0 == ONE


def test_fraction_coefficients():
    p = Poly.constant(Fraction(1, 2)) * X0 + Poly.constant(Fraction(1, 3)) * X1
    assert (6 * p) == 3 * X0 + 2 * X1


def test_diff_product_rule():
    rng = make_rng(11)
    for _ in range(50):
        f = random_poly(rng, rng.randint(1, 3))
        g = random_poly(rng, rng.randint(1, 3))
        for i in range(4):
            assert (f * g).diff(i) == f.diff(i) * g + f * g.diff(i)


def test_homogeneous_degree():
    assert (X0 * X1).homogeneous_degree() == 2
    assert (X0 + ONE).homogeneous_degree() is None
    assert Poly.zero().homogeneous_degree() is None
    assert Poly.zero().degree() == -1


def test_grevlex_order_basics():
    # x0 > x1 > x2 > x3; higher total degree always wins
    assert grevlex_key((1, 0, 0, 0)) > grevlex_key((0, 1, 0, 0))
    assert grevlex_key((0, 0, 0, 1)) < grevlex_key((0, 0, 1, 0))
    assert grevlex_key((0, 0, 0, 2)) > grevlex_key((1, 0, 0, 0))
    # grevlex tiebreak: x1^2 beats x0*x2 (smaller power of the later variable)
    assert grevlex_key((0, 2, 0, 0)) > grevlex_key((1, 0, 1, 0))


def test_leading_monomial_and_monic():
    p = 3 * X1 * X1 + 2 * X0 * X2
    assert p.leading_monomial() == (0, 2, 0, 0)
    assert p.monic().leading_coefficient() == 1
    with pytest.raises(ValueError):
        Poly.zero().leading_monomial()


def test_primitive_integer():
    p = Poly.constant(Fraction(2, 3)) * X0 - Poly.constant(Fraction(4, 3)) * X1
    q = p.primitive_integer()
    assert q == X0 - 2 * X1
    assert (-p).primitive_integer() == q  # positive leading coefficient


def test_monomial_helpers():
    assert mon_divides((1, 0, 0, 0), (2, 1, 0, 0))
    assert not mon_divides((0, 2, 0, 0), (0, 1, 1, 1))
    assert mon_lcm((1, 2, 0, 0), (0, 1, 3, 0)) == (1, 2, 3, 0)


def test_monomials_of_degree_count_and_order():
    for d in range(5):
        mons = monomials_of_degree(d)
        assert len(mons) == dim_graded_piece(d)
        keys = [grevlex_key(m) for m in mons]
        assert keys == sorted(keys, reverse=True)
    assert monomials_of_degree(-1) == []
    assert dim_graded_piece(-2) == 0


def test_immutability_and_hash():
    p = X0 + X1
    with pytest.raises(AttributeError):
        p.terms = {}
    assert hash(p) == hash(X1 + X0)
