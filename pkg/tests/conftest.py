"""Shared fixtures: the small fields and code instances of the worked examples."""

import logging

import pytest

from core import golden
from core.circmrd import CircCodeParams, PQChoice, Variant, build_pq
from core.constants import APP_NAME
from core.finite_field import make_ext_field
from core.linalg import matrix_from_rows


def user_instance(L, exponents, G_rows, H_rows, variant=Variant.C1, k=1):
    params = CircCodeParams(q=2, L=L, k=k, n=len(exponents), exponents=tuple(exponents),
                            variant=variant, pq_choice=PQChoice.USER,
                            user_G=matrix_from_rows(G_rows), user_H=matrix_from_rows(H_rows))
    return build_pq(params)


def canonical_instance(L, n, k, variant=Variant.C1, pq=PQChoice.INSTANCE_A, exponents=None):
    exponents = tuple(range(n)) if exponents is None else tuple(exponents)
    return build_pq(CircCodeParams(q=2, L=L, k=k, n=n, exponents=exponents, variant=variant, pq_choice=pq))


@pytest.fixture(autouse=True)
def reset_logger():
    """The CLI binds its console handler to whatever stderr is current."""
    yield
    logging.getLogger(APP_NAME).handlers.clear()


@pytest.fixture
def gf16():
    """F_16 = F_2[x]/(x^4 + x + 1)"""
    return make_ext_field(2, 4, golden.EX1_MODULUS)


@pytest.fixture
def ex2_instance():
    return user_instance(golden.EX2_L, golden.EX2_EXPONENTS, golden.EX2_G, golden.EX2_H)


@pytest.fixture
def ex3_instance():
    return canonical_instance(golden.EX2_L, len(golden.EX2_EXPONENTS), 1, Variant.C2)


@pytest.fixture
def ex4_instance():
    return user_instance(golden.EX4_L, golden.EX4_EXPONENTS, golden.EX4_G, golden.EX4_H)


@pytest.fixture
def instance_a_543():
    """Instance A at L = 5, n = 4, k = 3 (the counting walkthrough)."""
    return canonical_instance(5, 4, 3)
