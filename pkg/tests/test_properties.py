"""Property-based checks of the algebra and the encoders."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from core.analysis import counted_encode, predicted_xor
from core.circmrd import Variant, encode, matrix_form_encode
from core.constants import PATH_FAST, SCHEME_C1, SCHEME_C2
from core.finite_field import fe_arith, make_ext_field, multiplicative_order, prime_field, primitive_root_of_unity
from core.gabidulin import counterpart_matrix, reconstruct
from core.generalized import cyclotomic_cosets
from core.linalg import element_matrix, m_o, rank_fq, rotate, span_rank
from tests.conftest import canonical_instance

GF2 = prime_field(2)
GF16 = make_ext_field(2, 4, (1, 1, 0, 0, 1))
# L = 5, n = 4, k = 2: messages of 2 blocks of J = 4 bits
INSTANCE = canonical_instance(5, 4, 2)
INSTANCE_C2 = INSTANCE.with_variant(Variant.C2)

elements = st.integers(min_value=0, max_value=15).map(lambda v: GF16.GF(v))
nonzero_elements = st.integers(min_value=1, max_value=15).map(lambda v: GF16.GF(v))
messages = st.lists(st.integers(0, 1), min_size=8, max_size=8).map(lambda bits: GF2(bits))


@st.composite
def binary_matrices(draw, max_rows=4, max_cols=5):
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    bits = draw(st.lists(st.integers(0, 1), min_size=rows * cols, max_size=rows * cols))
    return GF2(np.array(bits).reshape(rows, cols))


@settings(deadline=None, max_examples=60)
@given(binary_matrices())
def test_rank_agrees_with_span_size(A):
    assert rank_fq(A) == span_rank(A)


@settings(deadline=None)
@given(elements, elements, elements)
def test_field_distributes(a, b, c):
    assert fe_arith(a, fe_arith(b, c, "add"), "mul") == a * b + a * c


@settings(deadline=None)
@given(nonzero_elements)
def test_field_inverse(a):
    assert fe_arith(a, fe_arith(a, None, "inv"), "mul") == GF16.one


@settings(deadline=None)
@given(elements, elements)
def test_element_matrix_is_a_ring_map(a, b):
    lhs = element_matrix(a * b, GF16)
    assert np.array_equal(lhs, element_matrix(a, GF16) @ element_matrix(b, GF16))
    assert np.array_equal(element_matrix(a + b, GF16), element_matrix(a, GF16) + element_matrix(b, GF16))


@settings(deadline=None)
@given(st.lists(elements, min_size=3, max_size=3))
def test_counterpart_inverts(values):
    v = GF16.GF([int(x) for x in values])
    B = GF16.GF([1, 2, 4, 8])
    assert np.array_equal(reconstruct(counterpart_matrix(v, B), B), v)


@settings(deadline=None)
@given(st.lists(st.integers(0, 1), min_size=7, max_size=7), st.integers(0, 20))
def test_rotation_composes(bits, power):
    x = GF2(bits)
    assert np.array_equal(rotate(rotate(x, power), 7 - power % 7), x)


@settings(deadline=None, max_examples=40)
@given(messages)
def test_encoders_agree(m):
    for instance in (INSTANCE, INSTANCE_C2):
        expected = encode(instance, m).matrix
        assert np.array_equal(encode(instance, m, PATH_FAST).matrix, expected)
        assert np.array_equal(matrix_form_encode(instance, m).matrix, expected)


@settings(deadline=None, max_examples=40)
@given(messages, messages)
def test_encoding_is_linear(m1, m2):
    lhs = encode(INSTANCE, m1 + m2).matrix
    assert np.array_equal(lhs, encode(INSTANCE, m1).matrix + encode(INSTANCE, m2).matrix)


@settings(deadline=None, max_examples=40)
@given(messages)
def test_nonzero_codewords_meet_singleton(m):
    M = encode(INSTANCE, m).matrix
    if np.any(m.view(np.ndarray)):
        assert rank_fq(M) >= 4 - 2 + 1


@settings(deadline=None, max_examples=30)
@given(messages)
def test_counts_are_message_independent(m):
    for instance, scheme in ((INSTANCE, SCHEME_C1), (INSTANCE_C2, SCHEME_C2)):
        word, counter = counted_encode(instance, m, scheme)
        assert counter.xor_count == predicted_xor(scheme, 5, 4, 2).xor
        assert np.array_equal(word.matrix, encode(instance, m).matrix)


def _coset_cases():
    cases = []
    for q, L in ((2, 7), (2, 9), (2, 15), (3, 5), (3, 7)):
        field = make_ext_field(q, multiplicative_order(q, L))
        beta = primitive_root_of_unity(field, L)
        for coset in cyclotomic_cosets(q, L):
            cases.append((field, beta, L, coset[0]))
    return cases


COSET_CASES = _coset_cases()


@settings(deadline=None, max_examples=60)
@given(st.sampled_from(COSET_CASES), st.integers(0, 200))
def test_consecutive_coset_powers_have_full_m_o(case, h):
    field, beta, L, j = case
    v = field.GF([int(beta ** ((j * (h + t)) % L)) for t in range(field.m)])
    assert rank_fq(m_o(v)) == field.m
