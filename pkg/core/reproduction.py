"""
Regenerates the worked examples and diffs them against core.golden.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from core import golden
from core.circmrd import (
    CircCodeParams,
    PQChoice,
    Variant,
    build_pq,
    code_set_equal,
    codebook,
    encode,
    apply_left,
    matrix_form_encode,
    representable_as_generalized,
    t_matrix,
    verify_mrd,
)
from core.constants import EXAMPLE_NAMES, PATH_FAST, PATH_GENERIC
from core.enumeration import codebook_multiset, iter_message_chunks
from core.errors import PreconditionViolated
from core.finite_field import FieldSpec, make_ext_field, prime_field
from core.gabidulin import (
    GabidulinParams,
    check_dual_basis_equivalence,
    counterpart_matrix,
    dual_basis,
    gabidulin_encode,
    is_basis,
)
from core.generalized import generalized_gabidulin
from core.linalg import inverse, lift, matrix_from_rows
from utils.logger import get_logger

logger = get_logger()


@dataclass
class ExampleResult:
    name: str
    checks: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def check(self, label: str, ok: bool) -> None:
        ok = bool(ok)
        self.checks.append((label, ok))
        if ok:
            logger.debug(f"{self.name}: {label} ok")
        else:
            logger.warning(f"{self.name}: {label} FAILED")

    def to_text(self) -> str:
        lines = [f"{self.name}: {'pass' if self.passed else 'FAIL'}"]
        lines += [f"  [{'ok' if ok else 'FAIL'}] {label}" for label, ok in self.checks]
        return "\n".join(lines) + "\n"


def _binary(rows: Sequence[str]):
    return matrix_from_rows(rows, 2)


def _binary_all(tables) -> list:
    return [_binary(rows) for rows in tables]


def _elements(field_spec: FieldSpec, exponents: Sequence) -> "np.ndarray":
    """Powers of the modulus root, None standing for zero."""
    gamma = field_spec.gamma
    return field_spec.GF([0 if e is None else int(gamma ** e) for e in exponents])


def _same_sequence(computed: Sequence, expected: Sequence) -> bool:
    return len(computed) == len(expected) and all(np.array_equal(a, b) for a, b in zip(computed, expected))


def _unit_messages(J: int):
    """000..01, 000..10, ..., 100..0"""
    GF = prime_field(2)
    out = []
    for position in range(J - 1, -1, -1):
        m = GF.Zeros(J)
        m[position] = 1
        out.append(m)
    return out


def _combine(generators: Sequence, coefficients: Sequence[str]) -> list:
    """Column i of the coefficient table selects which generators sum to target i."""
    GF = prime_field(2)
    targets = []
    for i in range(len(coefficients[0])):
        acc = GF.Zeros(generators[0].shape)
        for j, row in enumerate(coefficients):
            if row[i] == "1":
                acc = acc + generators[j]
        targets.append(acc)
    return targets


def _user_instance(L: int, exponents, G_rows, H_rows, variant: Variant = Variant.C1):
    G = _binary(G_rows)
    H = _binary(H_rows) if H_rows is not None else None
    params = CircCodeParams(q=2, L=L, k=1, n=len(exponents), exponents=tuple(exponents),
                            variant=variant, pq_choice=PQChoice.USER, user_G=G, user_H=H)
    return build_pq(params)


def _ex2_instance():
    """G_7 = [I_6 1], H_7 = [I_6 0]^T, C1."""
    return _user_instance(golden.EX2_L, golden.EX2_EXPONENTS, golden.EX2_G, golden.EX2_H)


def _ex3_instance():
    """G_7 = [I_6 0], C2."""
    return build_pq(CircCodeParams(q=2, L=golden.EX2_L, k=1, n=len(golden.EX2_EXPONENTS),
                                   exponents=golden.EX2_EXPONENTS, variant=Variant.C2,
                                   pq_choice=PQChoice.INSTANCE_A))


# ----------------------------------------------------------------------------
# Examples
# ----------------------------------------------------------------------------

def _run_ex1(result: ExampleResult) -> None:
    field_spec = make_ext_field(2, 4, golden.EX1_MODULUS)
    B = _elements(field_spec, golden.EX1_BASIS)
    params = GabidulinParams(field=field_spec, betas=_elements(field_spec, golden.EX1_BETAS), k=1, basis=B)
    B_prime = _elements(field_spec, golden.EX1_DUAL_BASIS)
    result.check("dual basis", np.array_equal(dual_basis(B), B_prime))

    messages = [field_spec.GF([int(x)]) for x in _elements(field_spec, golden.EX1_MESSAGES)]
    vectors = [gabidulin_encode(params, u, "vector") for u in messages]
    expected_vectors = [_elements(field_spec, row) for row in golden.EX1_VECTOR_CODE]
    result.check("vector codewords", _same_sequence(vectors, expected_vectors))

    matrices = [gabidulin_encode(params, u, "matrix") for u in messages]
    result.check("matrix codewords", _same_sequence(matrices, _binary_all(golden.EX1_MATRIX_CODE)))

    counterparts = [counterpart_matrix(v, B_prime) for v in vectors]
    result.check("dual-basis codewords", _same_sequence(counterparts, _binary_all(golden.EX1_COUNTERPART_CODE)))
    result.check("matrix and dual-basis codes coincide", check_dual_basis_equivalence(params))


def _run_ex2_ex3(result: ExampleResult, variant: Variant) -> None:
    if variant is Variant.C1:
        instance, other = _ex2_instance(), _ex3_instance()
        expected = golden.EX2_GENERATORS
    else:
        instance, other = _ex3_instance(), _ex2_instance()
        result.check("G_7 = [I_6 0]", np.array_equal(instance.G, _binary(golden.EX3_G)))
        expected = golden.EX3_GENERATORS

    units = _unit_messages(instance.J)
    for path in (PATH_GENERIC, PATH_FAST):
        words = [encode(instance, m, path).matrix for m in units]
        result.check(f"generator codewords ({path})", _same_sequence(words, _binary_all(expected)))

    report = verify_mrd(instance)
    result.check(f"min rank {golden.EX23_MIN_RANK} over {report.codewords} codewords",
                 report.min_rank == golden.EX23_MIN_RANK and report.is_mrd)

    if instance.aux is not None:
        oracle = all(np.array_equal(matrix_form_encode(instance, m).matrix, encode(instance, m).matrix)
                     for block in iter_message_chunks(prime_field(2), instance.J) for m in block)
        result.check("linearized-polynomial encoder agrees", oracle)

        sibling = instance.with_variant(Variant.C2 if variant is Variant.C1 else Variant.C1)
        c1, c2 = (instance, sibling) if variant is Variant.C1 else (sibling, instance)
        T = t_matrix(c1)
        result.check("C2 = T C1", code_set_equal(codebook(c2), apply_left(T, codebook(c1))))
    else:
        result.check("auxiliary data available", False)

    ex2 = _binary_all(golden.EX2_GENERATORS)
    ex3 = _binary_all(golden.EX3_GENERATORS)
    result.check("ex3 generators are combinations of ex2 generators",
                 _same_sequence(_combine(ex2, golden.EX3_FROM_EX2), ex3))
    result.check("ex2 and ex3 codebooks coincide", code_set_equal(codebook(instance), codebook(other)))


def _run_ex4(result: ExampleResult) -> None:
    c1 = _user_instance(golden.EX4_L, golden.EX4_EXPONENTS, golden.EX4_G, golden.EX4_H)
    c2 = c1.with_variant(Variant.C2)
    if c1.aux is None:
        result.check("auxiliary data available", False)
        return
    field_spec = c1.aux.field
    result.check("field modulus x^4 + x + 1", field_spec == make_ext_field(2, 4, golden.EX4_MODULUS))

    u1 = c1.aux.U[:, 1]
    result.check("u_1", np.array_equal(u1, _elements(field_spec, golden.EX4_U1)))
    T = t_matrix(c1)
    result.check("T", np.array_equal(T, _binary(golden.EX4_T)))
    B_prime = u1 @ lift(inverse(T), field_spec.GF)
    result.check("B' = u_1^T T^-1", np.array_equal(B_prime, _elements(field_spec, golden.EX4_B_PRIME)))
    result.check("u_1^T and B' are bases", is_basis(u1) and is_basis(B_prime))

    C1 = codebook(c1)
    C2 = codebook(c2)
    result.check("C1 codewords", _same_sequence(C1, _binary_all(golden.EX4_C1)))
    result.check("C2 codewords", _same_sequence(C2, _binary_all(golden.EX4_C2)))

    betas = _elements(field_spec, golden.EX4_BETAS)
    params = GabidulinParams(field=field_spec, betas=betas, k=1)
    messages = [field_spec.GF([int(x)]) for x in _elements(field_spec, golden.EX1_MESSAGES)]
    vectors = [gabidulin_encode(params, u, "vector") for u in messages]
    result.check("Gabidulin vector codewords",
                 _same_sequence(vectors, [_elements(field_spec, row) for row in golden.EX4_VECTOR_CODE]))

    M1 = [counterpart_matrix(v, u1) for v in vectors]
    M2 = [counterpart_matrix(v, B_prime) for v in vectors]
    result.check("expansion over u_1^T", _same_sequence(M1, _binary_all(golden.EX4_M1)))
    result.check("expansion over B'", _same_sequence(M2, _binary_all(golden.EX4_M2)))
    result.check("C1 coincides with the u_1^T expansion", code_set_equal(C1, M1))
    result.check("C2 coincides with the B' expansion", code_set_equal(C2, M2))
    result.check("min rank 4", verify_mrd(c1).min_rank == 4)


def _run_ex5(result: ExampleResult) -> None:
    c1, c2 = _ex2_instance(), _ex3_instance()
    code = generalized_gabidulin(c1)
    result.check("coset representatives", tuple(code.representatives) == golden.EX5_REPRESENTATIVES)

    beta = code.beta
    bases_ok = all(np.array_equal(code.basis(i, s), code.field.GF([int(beta ** e) for e in exps]))
                   for (i, s), exps in golden.EX5_BASES.items())
    result.check("block bases B_{i,s}", bases_ok)
    sets_ok = all(np.array_equal(code.evaluation_set(s), code.field.GF([int(beta ** e) for e in exps]))
                  for s, exps in enumerate(golden.EX5_EVALUATION_SETS))
    result.check("evaluation sets", sets_ok)

    for s, table in enumerate(golden.EX5_COSET_CODES):
        computed = code.codebook(cosets=[s])
        result.check(f"coset {s + 1} block codewords",
                     codebook_multiset(computed) == codebook_multiset(_binary_all(table)))

    full = code.codebook()
    result.check("generalized code equals ex2 C1", code_set_equal(full, codebook(c1)))
    result.check("generalized code equals ex3 C2", code_set_equal(full, codebook(c2)))
    try:
        generalized_gabidulin(c2)
        result.check("C2 precondition G_7 = [I_6 0] accepted", True)
    except PreconditionViolated:
        result.check("C2 precondition G_7 = [I_6 0] accepted", False)

    ex2 = _binary_all(golden.EX2_GENERATORS)
    for label, coefficients, table in (
        ("coset 1", golden.EX5_COSET1_FROM_EX2, golden.EX5_COSET_CODES[0]),
        ("coset 2", golden.EX5_COSET2_FROM_EX2, golden.EX5_COSET_CODES[1]),
    ):
        combos = _combine(ex2, coefficients)
        result.check(f"{label} codewords are combinations of ex2 generators",
                     _same_sequence(combos, _binary_all(table[1:])))

    _run_non_representable(result)


def _run_non_representable(result: ExampleResult) -> None:
    instance = _user_instance(golden.NONREP_L, golden.NONREP_EXPONENTS, golden.NONREP_G, golden.NONREP_H)
    if instance.aux is None:
        result.check("L = 7 counter-example auxiliary data", False)
        return
    aux = instance.aux
    result.check("L = 7 counter-example field", aux.field == make_ext_field(2, 3, golden.NONREP_MODULUS))
    L = instance.L
    cols = list(instance.coprimes)
    expected_prime = np.stack([_elements(aux.field, row) for row in golden.NONREP_U_PRIME])
    expected_mirrored = np.stack([_elements(aux.field, row) for row in golden.NONREP_U_MIRRORED])
    result.check("[u'_j] table", np.array_equal(aux.U_prime[:, cols], aux.field.GF(expected_prime)))
    result.check("[u_{L-j}] table",
                 np.array_equal(aux.U[:, [(L - j) % L for j in cols]], aux.field.GF(expected_mirrored)))
    result.check("L = 7 counter-example is not a generalized Gabidulin code",
                 not representable_as_generalized(instance))


EXAMPLES: dict[str, Callable[[ExampleResult], None]] = {
    "ex1": _run_ex1,
    "ex2": lambda result: _run_ex2_ex3(result, Variant.C1),
    "ex3": lambda result: _run_ex2_ex3(result, Variant.C2),
    "ex4": _run_ex4,
    "ex5": _run_ex5,
}


def run_example(name: str) -> ExampleResult:
    """Regenerate one example and compare it with its reference tables."""
    if name not in EXAMPLES:
        raise PreconditionViolated(f"unknown example '{name}' (expected one of {', '.join(EXAMPLE_NAMES)})")
    result = ExampleResult(name=name)
    EXAMPLES[name](result)
    logger.info(f"Example {name}: {'pass' if result.passed else 'FAIL'} ({len(result.checks)} checks)")
    return result


def run_all() -> list[ExampleResult]:
    return [run_example(name) for name in EXAMPLE_NAMES]
