import pytest

from p3dist.errors import GradeOverflow
from p3dist.exterior import (
    ExtForm,
    VField,
    contract,
    exterior_derivative,
    radial_field,
    wedge,
)
from p3dist.poly import Poly, X0, X1, X2, X3

from conftest import make_rng, random_poly


def random_oneform(rng, degree):
    return ExtForm.one_form(*(random_poly(rng, degree) for _ in range(4)))


def test_wedge_anticommutativity_random():
    rng = make_rng(23)
    for _ in range(120):
        a = random_oneform(rng, rng.randint(0, 2))
        b = random_oneform(rng, rng.randint(0, 2))
        assert (wedge(a, b) + wedge(b, a)).is_zero()
        assert wedge(a, a).is_zero()


def test_d_squared_zero_random():
    rng = make_rng(29)
    for _ in range(120):
        a = random_oneform(rng, rng.randint(1, 3))
        assert exterior_derivative(exterior_derivative(a)).is_zero()
    for _ in range(30):
        f = ExtForm.from_function(random_poly(rng, rng.randint(1, 4)))
        assert exterior_derivative(exterior_derivative(f)).is_zero()


def test_leibniz_rule_random():
    rng = make_rng(31)
    for _ in range(120):
        f = random_poly(rng, rng.randint(1, 3))
        a = random_oneform(rng, rng.randint(1, 2))
        f0 = ExtForm.from_function(f)
        lhs = exterior_derivative(wedge(f0, a))
        rhs = wedge(exterior_derivative(f0), a) + wedge(f0, exterior_derivative(a))
        assert (lhs - rhs).is_zero()


def test_contract_squared_zero_random():
    rng = make_rng(37)
    for _ in range(120):
        v = VField([random_poly(rng, 1) for _ in range(4)])
        a = random_oneform(rng, 2)
        b = wedge(a, random_oneform(rng, 1))
        assert contract(v, contract(v, b)).is_zero()


def test_euler_identity_random():
    # contracting d(F) with the radial field recovers deg(F) * F
    rng = make_rng(41)
    R = radial_field()
    for _ in range(120):
        d = rng.randint(1, 4)
        f = random_poly(rng, d)
        got = contract(R, exterior_derivative(ExtForm.from_function(f)))
        assert got.coeffs[()] == d * f


def test_wedge_associativity():
    rng = make_rng(43)
    for _ in range(40):
        a = random_oneform(rng, 1)
        b = random_oneform(rng, 1)
        c = random_oneform(rng, 1)
        assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


def test_grade_overflow():
    a = ExtForm.one_form(X0, X1, X2, X3)
    top = wedge(wedge(a, a * 0 + ExtForm.one_form(X1, X0, X3, X2)),
                wedge(ExtForm.one_form(X2, X3, X0, X1),
                      ExtForm.one_form(X3, X2, X1, X0)))
    assert top.grade == 4
    with pytest.raises(GradeOverflow):
        wedge(top, a)


def test_contraction_signs():
    # i_v(dx0 ^ dx1) = v0 dx1 - v1 dx0
    v = VField([Poly.constant(2), Poly.constant(3), Poly.zero(), Poly.zero()])
    form = wedge(ExtForm.one_form(Poly.constant(1), 0, 0, 0),
                 ExtForm.one_form(0, Poly.constant(1), 0, 0))
    got = contract(v, form)
    assert got.coeffs[(0,)] == Poly.constant(-3)
    assert got.coeffs[(1,)] == Poly.constant(2)


def test_radial_annihilates_euler_forms(nullcorrelation, example1, example2):
    R = radial_field()
    for omega in (nullcorrelation, example1, example2):
        assert contract(R, omega).is_zero()
