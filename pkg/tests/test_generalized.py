import numpy as np
import pytest

from core import golden
from core.circmrd import Variant, code_set_equal, codebook
from core.errors import DimMismatch, PreconditionViolated
from core.generalized import GeneralizedGabidulinCode, cyclotomic_cosets, generalized_gabidulin


def test_cyclotomic_cosets():
    assert cyclotomic_cosets(2, 7) == [(1, 2, 4), (3, 5, 6)]
    assert cyclotomic_cosets(2, 9) == [(1, 2, 4, 5, 7, 8)]
    assert cyclotomic_cosets(2, 5) == [(1, 2, 3, 4)]


def test_blocks_from_ex2(ex2_instance):
    code = generalized_gabidulin(ex2_instance)
    assert code.representatives == list(golden.EX5_REPRESENTATIVES)
    assert code.J == 6 and code.m_L == 3 and code.num_cosets == 2
    for (i, s), exponents in golden.EX5_BASES.items():
        expected = code.field.GF([int(code.beta ** e) for e in exponents])
        assert np.array_equal(code.basis(i, s), expected)


def test_codebook_equals_circular_code(ex2_instance, ex3_instance):
    code = generalized_gabidulin(ex2_instance)
    full = code.codebook()
    assert len(full) == 64
    assert code_set_equal(full, codebook(ex2_instance))
    assert code_set_equal(generalized_gabidulin(ex3_instance).codebook(), codebook(ex3_instance))


def test_single_coset_codebook(ex2_instance):
    code = generalized_gabidulin(ex2_instance)
    words = code.codebook(cosets=[0])
    assert len(words) == 8
    assert not np.any(words[0])


def test_encode_shape_check(ex2_instance):
    code = generalized_gabidulin(ex2_instance)
    with pytest.raises(DimMismatch):
        code.encode(code.field.GF.Zeros((1, 1)))


def test_precondition_on_g_and_h(ex4_instance):
    generalized_gabidulin(ex4_instance)
    with pytest.raises(PreconditionViolated):
        generalized_gabidulin(ex4_instance.with_variant(Variant.C2))


def test_from_parameters_bounds():
    with pytest.raises(PreconditionViolated):
        GeneralizedGabidulinCode.from_parameters(2, 7, 2, 4, range(4))
    with pytest.raises(DimMismatch):
        GeneralizedGabidulinCode.from_parameters(2, 7, 1, 3, (0, 1))
