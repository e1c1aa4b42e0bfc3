import pytest

from core.errors import (
    DivisionByZero,
    FieldTooLarge,
    FormatError,
    NoSuchDegree,
    NotCoprime,
    NotPrime,
    OrderUnattainable,
    PreconditionViolated,
    Reducible,
)
from core.finite_field import (
    cyclotomic_polynomial,
    element_coeffs,
    element_from_coeffs,
    element_from_text,
    element_to_text,
    euler_phi,
    fe_arith,
    frobenius,
    is_irreducible,
    is_prime,
    make_ext_field,
    mobius,
    multiplicative_order,
    poly_coeffs,
    poly_from_text,
    poly_to_text,
    primitive_root_of_unity,
    tau_polynomial,
)


def test_is_prime():
    assert is_prime(2) and is_prime(3) and is_prime(11)
    assert not is_prime(1) and not is_prime(4) and not is_prime(9)


def test_gamma_satisfies_modulus(gf16):
    gamma = gf16.gamma
    assert gamma ** 4 == gamma + 1
    assert int(gf16.generator.multiplicative_order()) == 15
    assert gf16.order == 16


def test_default_modulus_is_smallest_irreducible():
    field = make_ext_field(2, 4)
    assert poly_coeffs(field.modulus) == [1, 1, 0, 0, 1]
    assert field == make_ext_field(2, 4, (1, 1, 0, 0, 1))


def test_make_ext_field_rejects_bad_input():
    with pytest.raises(NotPrime):
        make_ext_field(4, 2)
    with pytest.raises(NoSuchDegree):
        make_ext_field(2, 0)
    with pytest.raises(FieldTooLarge):
        make_ext_field(2, 40)
    with pytest.raises(Reducible):
        make_ext_field(2, 4, (1, 0, 0, 0, 1))
    with pytest.raises(PreconditionViolated):
        make_ext_field(2, 4, (1, 1, 1))


def test_is_irreducible():
    assert is_irreducible((1, 1, 0, 0, 1), 2)
    assert not is_irreducible((1, 0, 0, 0, 1), 2)
    assert not is_irreducible((1,), 2)


def test_multiplicative_order():
    assert multiplicative_order(2, 5) == 4
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(2, 9) == 6
    assert multiplicative_order(2, 11) == 10
    with pytest.raises(NotCoprime):
        multiplicative_order(2, 4)


def test_mobius_and_phi():
    assert [mobius(n) for n in (1, 2, 4, 6, 7, 30)] == [1, -1, 0, 1, -1, -1]
    assert euler_phi(9) == 6
    assert euler_phi(7) == 6


def test_cyclotomic_and_tau():
    assert poly_coeffs(cyclotomic_polynomial(2, 7)) == [1] * 7
    assert poly_coeffs(tau_polynomial(2, 7)) == [1, 1]
    assert poly_coeffs(cyclotomic_polynomial(2, 9)) == [1, 0, 0, 1, 0, 0, 1]
    assert poly_coeffs(tau_polynomial(2, 9)) == [1, 0, 0, 1]
    with pytest.raises(NotCoprime):
        tau_polynomial(3, 9)


def test_polynomial_text_format():
    f = poly_from_text("1,1,0,0,1", 2)
    assert poly_to_text(f) == "1,1,0,0,1"
    with pytest.raises(FormatError):
        poly_from_text("1,x", 2)
    with pytest.raises(FormatError):
        poly_from_text("1,2", 2)
    with pytest.raises(FormatError):
        poly_from_text("", 2)


def test_element_coefficients_are_constant_first(gf16):
    assert element_from_coeffs([0, 1, 0, 0], gf16) == gf16.gamma
    assert element_coeffs(gf16.gamma ** 4, gf16) == [1, 1, 0, 0]
    assert element_to_text(gf16.gamma ** 4, gf16) == "1,1,0,0"
    assert element_from_text("1,1,0,0", gf16) == gf16.gamma + 1
    with pytest.raises(FormatError):
        element_from_text("1,2,0,0", gf16)


def test_fe_arith(gf16):
    a = gf16.alpha(3)
    assert fe_arith(a, fe_arith(a, None, "inv"), "mul") == gf16.one
    assert fe_arith(a, 5, "pow") == gf16.one
    assert fe_arith(a, a, "sub") == gf16.zero
    with pytest.raises(DivisionByZero):
        fe_arith(gf16.zero, None, "inv")
    with pytest.raises(ZeroDivisionError):
        fe_arith(a, gf16.zero, "div")
    with pytest.raises(ValueError):
        fe_arith(a, a, "mod")


def test_frobenius(gf16):
    x = gf16.alpha(7)
    assert frobenius(x, 1) == x ** 2
    assert frobenius(x, 4) == x


def test_primitive_root_of_unity(gf16):
    beta = primitive_root_of_unity(gf16, 5)
    assert int(beta.multiplicative_order()) == 5
    assert beta == gf16.generator ** 3
    with pytest.raises(OrderUnattainable):
        primitive_root_of_unity(gf16, 7)
