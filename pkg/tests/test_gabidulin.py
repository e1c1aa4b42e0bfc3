import numpy as np
import pytest

from core import golden
from core.errors import DependentBetas, DimMismatch, NotABasis, PreconditionViolated
from core.finite_field import frobenius, make_ext_field
from core.gabidulin import (
    GabidulinParams,
    QLinPoly,
    check_fq_characterization,
    check_dual_basis_equivalence,
    codebook_matrix_form,
    counterpart_matrix,
    dual_basis,
    format_codebook,
    gabidulin_encode,
    gabidulin_generator,
    gabidulin_min_rank,
    is_basis,
    parse_codebook,
    polynomial_basis,
    qlin_eval,
    reconstruct,
    require_basis,
    twisted_encode,
    twisted_generator_validate,
)
from core.linalg import m_o, matrix_from_rows


def powers(field, exponents):
    return field.GF([0 if e is None else int(field.gamma ** e) for e in exponents])


@pytest.fixture
def ex1_params(gf16):
    return GabidulinParams(field=gf16, betas=powers(gf16, golden.EX1_BETAS), k=1)


def test_dual_basis_of_polynomial_basis(gf16):
    B = polynomial_basis(gf16)
    B_prime = dual_basis(B)
    assert np.array_equal(B_prime, powers(gf16, golden.EX1_DUAL_BASIS))
    assert np.array_equal(m_o(B).T @ m_o(B_prime), gf16.GF.Identity(4))


def test_basis_checks(gf16):
    assert is_basis(polynomial_basis(gf16))
    with pytest.raises(NotABasis):
        require_basis(powers(gf16, (0, 0, 1, 2)))


def test_params_reject_dependent_points(gf16):
    with pytest.raises(DependentBetas):
        GabidulinParams(field=gf16, betas=powers(gf16, (0, 1, 4)), k=1)
    with pytest.raises(PreconditionViolated):
        GabidulinParams(field=gf16, betas=powers(gf16, (0, 1)), k=3)


def test_generator_rows_are_frobenius_powers(gf16):
    params = GabidulinParams(field=gf16, betas=powers(gf16, (1, 2, 3)), k=2)
    G = gabidulin_generator(params)
    assert np.array_equal(G[1], frobenius(params.betas, 1))


def test_vector_and_matrix_codewords(ex1_params, gf16):
    u = powers(gf16, (1,))
    assert np.array_equal(gabidulin_encode(ex1_params, u, "vector"), powers(gf16, golden.EX1_VECTOR_CODE[2]))
    one = gf16.GF([1])
    assert np.array_equal(gabidulin_encode(ex1_params, one, "matrix"), matrix_from_rows(golden.EX1_MATRIX_CODE[1]))
    with pytest.raises(DimMismatch):
        gabidulin_encode(ex1_params, gf16.GF([1, 1]))
    with pytest.raises(ValueError):
        gabidulin_encode(ex1_params, one, "tensor")


def test_matrix_form_matches_dual_basis_expansion(ex1_params):
    assert check_dual_basis_equivalence(ex1_params)


def test_counterpart_reconstructs(gf16, ex1_params):
    v = gabidulin_encode(ex1_params, powers(gf16, (6,)))
    B = powers(gf16, golden.EX1_DUAL_BASIS)
    assert np.array_equal(reconstruct(counterpart_matrix(v, B), B), v)


def test_gabidulin_is_mrd(gf16, ex1_params):
    assert gabidulin_min_rank(ex1_params) == 4
    params = GabidulinParams(field=gf16, betas=powers(gf16, (0, 1, 2)), k=2)
    assert gabidulin_min_rank(params) == 2


def test_fq_characterization():
    field = make_ext_field(2, 3)
    params = GabidulinParams(field=field, betas=powers(field, (0, 1, 2)), k=2)
    assert check_fq_characterization(params)


def test_qlin_eval_identity_polynomial(gf16):
    x = powers(gf16, (0, 3, 7))
    assert np.array_equal(qlin_eval(QLinPoly(u=gf16.GF([1])), x), x)
    with pytest.raises(DimMismatch):
        QLinPoly(u=gf16.GF([]))


def test_twisted_code_condition(gf16):
    # over F_2 the norm of any nonzero eta is 1 = (-1)^(nk)
    assert twisted_generator_validate(gf16, 4, 1, 0)
    assert not twisted_generator_validate(gf16, 4, 1, gf16.gamma)
    with pytest.raises(PreconditionViolated):
        twisted_encode(gf16, powers(gf16, (0, 1)), gf16.GF([1]), gf16.gamma)


def test_twisted_encode_over_f9():
    field = make_ext_field(3, 2)
    betas = powers(field, (0, 1))
    u = field.GF([1])
    assert twisted_generator_validate(field, 2, 1, 1) is False
    assert twisted_generator_validate(field, 1, 1, 1)
    word = twisted_encode(field, betas[:1], u, 1)
    assert np.array_equal(word, betas[:1] + frobenius(betas[:1], 1))


def test_codebook_dump(ex1_params):
    words = codebook_matrix_form(ex1_params)
    assert len(words) == 16
    parsed = parse_codebook(format_codebook(words))
    assert all(np.array_equal(a, b) for a, b in zip(parsed, words))
