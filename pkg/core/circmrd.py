"""
Circular-shift-based MRD codes.

A code instance is fixed by a pair (G_L, H_L) of F_q matrices built from the
Vandermonde matrices of a primitive L-th root of unity beta. Variant C1 uses
P = G_L, Q = H_L; variant C2 uses P = G_L, Q = tau(C_L) G_L^T. A message
m = [m_0 .. m_{k-1}] (blocks of length J) encodes to the J x n matrix whose
column i is (sum_s m_s P C_L^(q^s l_i) Q)^T.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field, replace
from enum import Enum
from functools import cached_property
from math import gcd
from typing import Iterable, Optional, Sequence

import galois
import numpy as np

from core.constants import (
    DEFAULT_CHUNK_SIZE,
    DEFAULT_ENUMERATION_CAP,
    PATH_FAST,
    PATH_GENERIC,
    VERDICT_COINCIDES,
    VERDICT_DIFFERS,
    VERDICT_UNDETERMINED,
)
from core.enumeration import (
    check_cap,
    codebook_multiset,
    iter_message_chunks,
    message_count,
)
from core.errors import (
    DependentBetas,
    DimMismatch,
    EnumerationTooLarge,
    FormatError,
    NotCoprime,
    NotOverBaseField,
    PreconditionViolated,
    Singular,
)
from core.finite_field import (
    FieldSpec,
    euler_phi,
    make_ext_field,
    multiplicative_order,
    prime_field,
    primitive_root_of_unity,
    require_prime,
    tau_polynomial,
)
from core.gabidulin import (
    GabidulinParams,
    counterpart_matrix,
    gabidulin_encode,
    is_basis,
    iter_messages,
)
from core.linalg import (
    basis_gamma_coordinates,
    cyclic_shift_matrix,
    element_matrix,
    format_matrix,
    inverse,
    kron,
    l_fq,
    lift,
    parse_matrix,
    poly_eval_matrix,
    rank_fq,
    rotate,
    similar_to_field_mult,
    to_base_field,
    vandermonde_pair,
)
from utils.logger import get_logger

logger = get_logger()


class Variant(str, Enum):
    C1 = "c1"
    C2 = "c2"


class PQChoice(str, Enum):
    INSTANCE_A = "a"
    INSTANCE_B = "b"
    USER = "user"


def coprime_set(L: int) -> tuple[tuple[int, ...], int]:
    """The integers 1 <= j < L coprime to L, ascending, and their count J."""
    if L < 2:
        raise PreconditionViolated(f"L={L} must be at least 2")
    coprimes = tuple(j for j in range(1, L) if gcd(j, L) == 1)
    return coprimes, len(coprimes)


# ----------------------------------------------------------------------------
# Parameters and instances
# ----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CircCodeParams:
    """
    Recipe for one circular-shift code.

    Args:
        q: Prime field size
        L: Circulant size, coprime to q
        k: Dimension (messages are k blocks of length J)
        n: Number of codeword columns
        exponents: l_0 .. l_{n-1} in [0, L)
        variant: C1 or C2
        pq_choice: InstanceA, InstanceB or USER
        user_G: G_L for USER
        user_H: H_L for USER (completed from G_L when omitted)
    """

    q: int
    L: int
    k: int
    n: int
    exponents: tuple[int, ...]
    variant: Variant = Variant.C1
    pq_choice: PQChoice = PQChoice.INSTANCE_A
    user_G: Optional[galois.FieldArray] = dataclass_field(default=None, repr=False)
    user_H: Optional[galois.FieldArray] = dataclass_field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(l) for l in self.exponents))
        object.__setattr__(self, "variant", Variant(self.variant))
        object.__setattr__(self, "pq_choice", PQChoice(self.pq_choice))
        require_prime(self.q)
        if self.L < 2:
            raise PreconditionViolated(f"L={self.L} must be at least 2")
        if gcd(self.q, self.L) != 1:
            raise NotCoprime(f"gcd(q={self.q}, L={self.L}) != 1")
        if len(self.exponents) != self.n:
            raise DimMismatch(f"expected {self.n} exponents, got {len(self.exponents)}")
        if any(not 0 <= l < self.L for l in self.exponents):
            raise PreconditionViolated(f"exponents {self.exponents} must lie in [0, {self.L})")
        if not 1 <= self.k <= self.n:
            raise PreconditionViolated(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if self.n > self.m_L:
            raise PreconditionViolated(f"n={self.n} exceeds m_L={self.m_L} for q={self.q}, L={self.L}")
        if self.pq_choice is PQChoice.USER:
            if self.user_G is None:
                raise PreconditionViolated("user-supplied construction needs G_L")
            if self.user_G.shape != (self.J, self.L):
                raise DimMismatch(f"G_L must be {self.J}x{self.L}, got {self.user_G.shape}")
            if self.user_H is not None and self.user_H.shape != (self.L, self.J):
                raise DimMismatch(f"H_L must be {self.L}x{self.J}, got {self.user_H.shape}")

    @property
    def m_L(self) -> int:
        return multiplicative_order(self.q, self.L)

    @property
    def coprimes(self) -> tuple[int, ...]:
        return coprime_set(self.L)[0]

    @property
    def J(self) -> int:
        return euler_phi(self.L)

    @property
    def exponents_distinct(self) -> bool:
        return len(set(self.exponents)) == len(self.exponents)


@dataclass(frozen=True, eq=False)
class AuxData:
    """U and U' (J x L, column j is u_j / u'_j) over F_{q^{m_L}}, beta and T."""

    field: FieldSpec
    beta: galois.FieldArray
    U: galois.FieldArray
    U_prime: galois.FieldArray
    T: galois.FieldArray


@dataclass(frozen=True, eq=False)
class CodeInstance:
    params: CircCodeParams
    G: galois.FieldArray
    H: galois.FieldArray
    P: galois.FieldArray
    Q: galois.FieldArray
    tau: galois.Poly
    aux: Optional[AuxData] = None

    @property
    def q(self) -> int:
        return self.params.q

    @property
    def L(self) -> int:
        return self.params.L

    @property
    def J(self) -> int:
        return self.params.J

    @property
    def m_L(self) -> int:
        return self.params.m_L

    @property
    def coprimes(self) -> tuple[int, ...]:
        return self.params.coprimes

    @property
    def variant(self) -> Variant:
        return self.params.variant

    @cached_property
    def tau_C(self):
        return poly_eval_matrix(self.tau, cyclic_shift_matrix(self.L, 1, self.q))

    @cached_property
    def generator(self):
        """(I_k (x) P) Psi (I_n (x) Q), the Jk x nJ generator matrix."""
        GF = prime_field(self.q)
        p = self.params
        return kron(GF.Identity(p.k), self.P) @ psi_block(p) @ kron(GF.Identity(p.n), self.Q)

    def with_variant(self, variant: Variant) -> "CodeInstance":
        """Sibling instance over the same G_L and H_L."""
        variant = Variant(variant)
        params = replace(self.params, variant=variant)
        return replace(self, params=params, Q=_q_matrix(variant, self.G, self.H, self.tau, self.L, self.q))


def _q_matrix(variant: Variant, G, H, tau, L: int, q: int):
    if variant is Variant.C1:
        return H
    return poly_eval_matrix(tau, cyclic_shift_matrix(L, 1, q)) @ G.T


def _complete(U, coprimes: Sequence[int], L_inv):
    """The dual family: [w_j]_J = L^-1 ([u_j]_J^-1)^T, zero outside the coprime set."""
    GF = type(U)
    cols = list(coprimes)
    try:
        dual = L_inv * inverse(U[:, cols]).T
    except Singular as e:
        raise NotOverBaseField(f"restriction to the coprime set is singular: {e}") from e
    out = GF.Zeros(U.shape)
    out[:, cols] = dual
    return out


def _aux_conditions_hold(U, U_prime, coprimes: Sequence[int], L_inv) -> bool:
    cols = list(coprimes)
    J = len(cols)
    if rank_fq(U[:, cols]) != J:
        return False
    GF = type(U)
    if not np.array_equal(U_prime[:, cols].T @ U[:, cols], L_inv * GF.Identity(J)):
        return False
    for j in range(U.shape[1]):
        if j in coprimes:
            continue
        if np.any(U[:, j] != 0) and np.any(U_prime[:, j] != 0):
            return False
    return True


def _t_from_aux(field: FieldSpec, beta, U, tau, coprimes: Sequence[int], L: int, q: int):
    GF = field.GF
    cols = list(coprimes)
    mirrored = [(L - j) % L for j in cols]
    tau_ext = galois.Poly(lift(tau.coeffs, GF), field=GF)
    diag = GF.Zeros((len(cols), len(cols)))
    for idx, j in enumerate(cols):
        diag[idx, idx] = tau_ext(beta ** j)
    T = l_fq(L, GF) * (U[:, mirrored] @ diag @ U[:, cols].T)
    return to_base_field(T, q)


def build_pq(params: CircCodeParams) -> CodeInstance:
    """
    Realize G_L, H_L and P, Q for a parameter set.

    Raises:
        NotOverBaseField: The chosen U/U' produce matrices outside F_q
        PreconditionViolated: n > m_L (raised by the parameters)
    """
    q, L, J = params.q, params.L, params.J
    coprimes = params.coprimes
    field = make_ext_field(q, params.m_L)
    GF = field.GF
    beta = primitive_root_of_unity(field, L)
    V, Vt = vandermonde_pair(beta, L)
    L_inv = l_fq(L, GF) ** -1

    if params.pq_choice is PQChoice.INSTANCE_A:
        U = L_inv * V[:J, :]
        U_prime = _complete(U, coprimes, L_inv)
    elif params.pq_choice is PQChoice.INSTANCE_B:
        U_prime = L_inv * Vt[L - J:, :]
        U = _complete(U_prime, coprimes, L_inv)
    else:
        U = L_inv * (lift(params.user_G, GF) @ V)
        if params.user_H is not None:
            U_prime = L_inv * (Vt @ lift(params.user_H, GF)).T
        else:
            U_prime = _complete(U, coprimes, L_inv)

    G = to_base_field(U @ Vt, q)
    H = params.user_H if params.user_H is not None else to_base_field(V @ U_prime.T, q)
    tau = tau_polynomial(q, L)

    aux = None
    if _aux_conditions_hold(U, U_prime, coprimes, L_inv):
        T = _t_from_aux(field, beta, U, tau, coprimes, L, q)
        aux = AuxData(field=field, beta=beta, U=U, U_prime=U_prime, T=T)
    else:
        logger.warning("Supplied G_L/H_L do not satisfy the U/U' conditions; auxiliary checks are unavailable")

    Q = _q_matrix(params.variant, G, H, tau, L, q)
    logger.info(f"Built {params.variant.value.upper()} instance q={q} L={L} J={J} m_L={params.m_L} "
                f"k={params.k} n={params.n} exponents={params.exponents} pq={params.pq_choice.value}")
    return CodeInstance(params=params, G=G, H=H, P=G, Q=Q, tau=tau, aux=aux)


# ----------------------------------------------------------------------------
# Validation
# ----------------------------------------------------------------------------

@dataclass
class PQReport:
    full_rank: bool
    semigroup: bool
    eigen: Optional[bool]
    failures: list[str] = dataclass_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.full_rank and self.semigroup and self.eigen is not False


def gch_powers(instance: CodeInstance) -> list:
    """G_L C^l H_L for l = 0 .. L-1."""
    q, L = instance.q, instance.L
    return [instance.G @ cyclic_shift_matrix(L, l, q) @ instance.H for l in range(L)]


def gch_combination(instance: CodeInstance, exponents: Iterable[int]):
    """G_L (sum_e C^e) H_L."""
    q, L = instance.q, instance.L
    GF = prime_field(q)
    S = GF.Zeros((L, L))
    for e in exponents:
        S = S + cyclic_shift_matrix(L, e, q)
    return instance.G @ S @ instance.H


def validate_pq(instance: CodeInstance) -> PQReport:
    """
    Check the conditions the MRD guarantee rests on.

    (a) every nonzero combination sum_i a_i P C^(l_i) Q has rank J,
    (b) (G C^i H)(G C^j H) = G C^(i+j) H,
    (c) G C^l H u_j = beta^(jl) u_j when auxiliary data is present.
    """
    p = instance.params
    q, L, J = p.q, p.L, p.J
    GF = prime_field(q)
    failures: list[str] = []

    terms = [instance.P @ cyclic_shift_matrix(L, l, q) @ instance.Q for l in p.exponents]
    full_rank = True
    for a in iter_message_chunks(GF, p.n):
        for row in a:
            if not np.any(row != 0):
                continue
            S = GF.Zeros((J, J))
            for coefficient, term in zip(row, terms):
                S = S + coefficient * term
            if rank_fq(S) != J:
                full_rank = False
                failures.append(f"combination a={[int(x) for x in row]} has rank {rank_fq(S)} < {J}")
                break
        if not full_rank:
            break

    powers = gch_powers(instance)
    semigroup = True
    for i in range(L):
        for j in range(L):
            if not np.array_equal(powers[i] @ powers[j], powers[(i + j) % L]):
                semigroup = False
                failures.append(f"(G C^{i} H)(G C^{j} H) != G C^{(i + j) % L} H")
                break
        if not semigroup:
            break

    eigen = None
    if instance.aux is not None:
        aux = instance.aux
        eigen = True
        for l in range(L):
            M = lift(powers[l], aux.field.GF)
            for j in p.coprimes:
                u = aux.U[:, j]
                if not np.array_equal(M @ u, (aux.beta ** (j * l)) * u):
                    eigen = False
                    failures.append(f"eigen-relation fails at l={l}, j={j}")
                    break
            if not eigen:
                break

    report = PQReport(full_rank=full_rank, semigroup=semigroup, eigen=eigen, failures=failures)
    for failure in failures:
        logger.warning(f"P/Q validation: {failure}")
    return report


# ----------------------------------------------------------------------------
# Encoding
# ----------------------------------------------------------------------------

def shift_exponent(q: int, s: int, l: int, L: int) -> int:
    return (pow(q, s, L) * l) % L


def psi_block(params: CircCodeParams):
    """kL x nL block matrix with block (s, i) = C_L^(q^s l_i mod L)."""
    q, L = params.q, params.L
    GF = prime_field(q)
    out = GF.Zeros((params.k * L, params.n * L))
    for s in range(params.k):
        for i, l in enumerate(params.exponents):
            out[s * L:(s + 1) * L, i * L:(i + 1) * L] = cyclic_shift_matrix(L, shift_exponent(q, s, l, L), q)
    return out


@dataclass(frozen=True, eq=False)
class Codeword:
    matrix: galois.FieldArray
    message: galois.FieldArray


def _check_message(instance: CodeInstance, m) -> None:
    expected = instance.J * instance.params.k
    if m.shape != (expected,):
        raise DimMismatch(f"message must have length Jk={expected}, got shape {m.shape}")


def _rows_to_codewords(rows, J: int, n: int):
    """Delta: a row of length nJ becomes the J x n matrix whose column i is block i."""
    return rows.reshape(rows.shape[0], n, J).transpose(0, 2, 1)


def encode(instance: CodeInstance, m, path: str = PATH_GENERIC) -> Codeword:
    """
    Encode a message of length Jk.

    Args:
        instance: Code instance
        m: Message over F_q
        path: "generic" (explicit matrix products) or "fast" (index rotations)
    """
    _check_message(instance, m)
    p = instance.params
    J, L, q = instance.J, instance.L, instance.q
    if path == PATH_GENERIC:
        row = m.reshape(1, -1) @ instance.generator
        return Codeword(matrix=_rows_to_codewords(row, J, p.n)[0], message=m)
    if path != PATH_FAST:
        raise ValueError(f"unknown encoder path '{path}'")

    GF = prime_field(q)
    blocks = m.reshape(p.k, J)
    if instance.variant is Variant.C1:
        words, tail = blocks @ instance.G, instance.H
    else:
        words, tail = blocks @ instance.G @ instance.tau_C, instance.G.T
    out = GF.Zeros((J, p.n))
    for i, l in enumerate(p.exponents):
        acc = GF.Zeros(L)
        for s in range(p.k):
            acc = acc + rotate(words[s], shift_exponent(q, s, l, L))
        out[:, i] = acc @ tail
    return Codeword(matrix=out, message=m)


def encode_many(instance: CodeInstance, messages):
    """Encode a B x Jk block of messages into a B x J x n array."""
    return _rows_to_codewords(messages @ instance.generator, instance.J, instance.params.n)


def codebook(instance: CodeInstance, cap: int = DEFAULT_ENUMERATION_CAP,
             chunk_size: int = DEFAULT_CHUNK_SIZE) -> list:
    """Every codeword, in lexicographic message order."""
    GF = prime_field(instance.q)
    length = instance.J * instance.params.k
    check_cap(message_count(GF, length), cap)
    words = []
    for block in iter_message_chunks(GF, length, chunk_size):
        words.extend(encode_many(instance, block))
    return words


@dataclass(frozen=True)
class MRDReport:
    min_rank: Optional[int]
    is_mrd: bool
    codewords: int


def verify_mrd(instance: CodeInstance, cap: int = DEFAULT_ENUMERATION_CAP,
               chunk_size: int = DEFAULT_CHUNK_SIZE) -> MRDReport:
    """Enumerate all messages and compare the minimum rank with n - k + 1."""
    GF = prime_field(instance.q)
    length = instance.J * instance.params.k
    total = message_count(GF, length)
    check_cap(total, cap)
    best = None
    for block in iter_message_chunks(GF, length, chunk_size):
        for M in encode_many(instance, block):
            if not np.any(M.view(np.ndarray)):
                continue
            r = rank_fq(M)
            best = r if best is None else min(best, r)
    target = instance.params.n - instance.params.k + 1
    logger.info(f"Enumerated {total} codewords: min_rank={best} (Singleton target {target})")
    return MRDReport(min_rank=best, is_mrd=best == target, codewords=total)


# ----------------------------------------------------------------------------
# T and codebook comparisons
# ----------------------------------------------------------------------------

def _require_aux(instance: CodeInstance) -> AuxData:
    if instance.aux is None:
        raise PreconditionViolated("operation needs the auxiliary U/U' data of a canonical or valid instance")
    return instance.aux


def t_matrix(instance: CodeInstance):
    """
    T = L [u_{L-j}] Diag(tau(beta^j)) [u_j]^T, the bridge with C2 = T C1.

    Verified full rank and G C^l tau(C) G^T = G C^l H T^T for every l.
    """
    aux = _require_aux(instance)
    T = aux.T
    if rank_fq(T) != instance.J:
        raise PreconditionViolated(f"T has rank {rank_fq(T)} < J={instance.J}")
    for l, GCH in enumerate(gch_powers(instance)):
        C_l = cyclic_shift_matrix(instance.L, l, instance.q)
        if not np.array_equal(instance.G @ C_l @ instance.tau_C @ instance.G.T, GCH @ T.T):
            raise PreconditionViolated(f"G C^{l} tau(C) G^T != G C^{l} H T^T")
    return T


def apply_left(T, codewords: Iterable) -> list:
    return [T @ M for M in codewords]


def code_set_equal(codeA: Iterable, codeB: Iterable, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """Multiset equality of two codebooks."""
    a = codebook_multiset(codeA)
    b = codebook_multiset(codeB)
    for counter in (a, b):
        size = sum(counter.values())
        if size > cap:
            raise EnumerationTooLarge(size, cap)
    return a == b


def matrix_form_encode(instance: CodeInstance, m) -> Codeword:
    """
    Independent encoder via linearized polynomials over F_{q^{m_L}}.

    t_{s,j} = L m_s u_j; row j of L_m holds L_{t_j}(beta^(j l_i)) (times
    tau(beta^j) for C2), rows ascending over the coprime set; the codeword
    is [u'_j] L_m (C1) or [u_{L-j}] L_m (C2).
    """
    _check_message(instance, m)
    aux = _require_aux(instance)
    p = instance.params
    GF = aux.field.GF
    q, L, J = p.q, p.L, p.J
    cols = list(p.coprimes)
    blocks = lift(m.reshape(p.k, J), GF)
    t = l_fq(L, GF) * (blocks @ aux.U[:, cols])
    tau_ext = galois.Poly(lift(instance.tau.coeffs, GF), field=GF)

    L_m = GF.Zeros((J, p.n))
    for row, j in enumerate(cols):
        scale = tau_ext(aux.beta ** j) if p.variant is Variant.C2 else GF(1)
        for i, l in enumerate(p.exponents):
            x = aux.beta ** (j * l)
            value = GF(0)
            for s in range(p.k):
                value = value + t[s, row] * x ** (q ** s)
            L_m[row, i] = scale * value

    if p.variant is Variant.C1:
        left = aux.U_prime[:, cols]
    else:
        left = aux.U[:, [(L - j) % L for j in cols]]
    return Codeword(matrix=to_base_field(left @ L_m, q), message=m)


def representable_as_generalized(instance: CodeInstance) -> bool:
    """
    Necessary condition for a generalized-Gabidulin description: each column of
    [u'_j] and of [u_{L-j}] splits into J/m_L consecutive bases of F_{q^{m_L}}.
    """
    aux = _require_aux(instance)
    J, m_L, L = instance.J, instance.m_L, instance.L
    cols = list(instance.coprimes)
    for M in (aux.U_prime[:, cols], aux.U[:, [(L - j) % L for j in cols]]):
        for c in range(M.shape[1]):
            for start in range(0, J, m_L):
                if not is_basis(M[start:start + m_L, c]):
                    return False
    return True


# ----------------------------------------------------------------------------
# Gabidulin coincidence
# ----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CoincidenceVerdict:
    status: str
    basis: Optional[galois.FieldArray] = None
    detail: str = ""
    twisted_differs: Optional[bool] = None

    @property
    def coincides(self) -> Optional[bool]:
        if self.status == VERDICT_COINCIDES:
            return True
        if self.status == VERDICT_DIFFERS:
            return False
        return None


def equivalent_gabidulin_params(instance: CodeInstance) -> GabidulinParams:
    """Gabidulin code over F_{q^{m_L}} on the points beta^(l_i)."""
    aux = _require_aux(instance)
    betas = aux.field.GF([int(aux.beta ** l) for l in instance.params.exponents])
    return GabidulinParams(field=aux.field, betas=betas, k=instance.params.k)


def _full_dimension_verdict(instance: CodeInstance, cap: int) -> CoincidenceVerdict:
    aux = _require_aux(instance)
    field = aux.field
    B = aux.U[:, 1].copy()
    if not is_basis(B):
        return CoincidenceVerdict(VERDICT_UNDETERMINED, detail="u_1 is not a basis")

    V = basis_gamma_coordinates(B)
    V_inv = inverse(V)
    for l, GCH in enumerate(gch_powers(instance)):
        if not np.array_equal(GCH, V @ element_matrix(aux.beta ** l, field) @ V_inv):
            return CoincidenceVerdict(VERDICT_UNDETERMINED, detail=f"G C^{l} H != V A(beta^{l}) V^-1")

    if instance.variant is Variant.C2:
        B = B @ lift(inverse(aux.T), field.GF)
    try:
        params = equivalent_gabidulin_params(instance)
    except DependentBetas as e:
        return CoincidenceVerdict(VERDICT_UNDETERMINED, detail=str(e))
    check_cap(message_count(field.GF, params.k), cap)
    gabidulin = [counterpart_matrix(gabidulin_encode(params, u, "vector"), B) for u in iter_messages(params)]
    if code_set_equal(codebook(instance, cap), gabidulin, cap):
        return CoincidenceVerdict(VERDICT_COINCIDES, basis=B, detail="J = m_L")
    return CoincidenceVerdict(VERDICT_DIFFERS, basis=B, detail="codebooks differ")


def arithmetic_exponent_pattern(exponents: Sequence[int], L: int) -> Optional[tuple[int, int]]:
    """(c', c) with l_j = c' j + c mod L, c' != 0, or None."""
    if len(exponents) < 2:
        return None
    c = exponents[0] % L
    step = (exponents[1] - exponents[0]) % L
    if step == 0:
        return None
    if all(l % L == (step * j + c) % L for j, l in enumerate(exponents)):
        return step, c
    return None


def gabidulin_coincidence(instance: CodeInstance, cap: int = DEFAULT_ENUMERATION_CAP) -> CoincidenceVerdict:
    """
    Decide whether the code is a (basis-expanded) Gabidulin code.

    J = m_L: builds B = u_1^T and compares codebooks.
    J != m_L with l_j = c'j + c and sum_{j<k} c' q^j coprime to L (k < n):
    the code differs from every Gabidulin and h = 0 twisted Gabidulin code
    when G C^S H is not similar to a field multiplication.
    Anything else is undetermined.
    """
    p = instance.params
    if instance.J == instance.m_L:
        return _full_dimension_verdict(instance, cap)

    if p.k >= p.n:
        return CoincidenceVerdict(VERDICT_UNDETERMINED, detail="k = n: full space")
    pattern = arithmetic_exponent_pattern(p.exponents, p.L)
    if pattern is None:
        return CoincidenceVerdict(VERDICT_UNDETERMINED, detail="exponents are not of the form c'j + c")
    step, _ = pattern
    S = sum(step * p.q ** j for j in range(p.k))
    if gcd(S, p.L) != 1:
        return CoincidenceVerdict(VERDICT_UNDETERMINED,
                                  detail=f"sum c'q^j = {S} is not coprime to L={p.L}")
    verdict = similar_to_field_mult(gch_combination(instance, [S % p.L]))
    if not verdict.similar:
        return CoincidenceVerdict(VERDICT_DIFFERS, twisted_differs=True,
                                  detail=f"minimal polynomial of G C^{S % p.L} H is reducible: {verdict.witness_poly}")
    return CoincidenceVerdict(VERDICT_UNDETERMINED, detail="G C^S H is similar to a field multiplication")


# ----------------------------------------------------------------------------
# Instance text format
# ----------------------------------------------------------------------------

def instance_to_text(instance: CodeInstance) -> str:
    p = instance.params
    lines = [
        f"q: {p.q}",
        f"L: {p.L}",
        f"k: {p.k}",
        f"n: {p.n}",
        f"exponents: {','.join(str(l) for l in p.exponents)}",
        f"variant: {p.variant.value}",
        f"pq_choice: {p.pq_choice.value}",
        "P:",
        format_matrix(instance.P),
        "Q:",
        format_matrix(instance.Q),
    ]
    if p.variant is Variant.C2:
        lines += ["H:", format_matrix(instance.H)]
    return "\n".join(lines) + "\n"


def _split_sections(text: str) -> tuple[dict, dict]:
    keys: dict[str, str] = {}
    matrices: dict[str, list[str]] = {}
    current = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.endswith(":") and line[:-1] in ("P", "Q", "H"):
            current = line[:-1]
            matrices[current] = []
        elif current is None and ":" in line:
            key, value = line.split(":", 1)
            keys[key.strip()] = value.strip()
        elif current is not None:
            matrices[current].append(line)
        else:
            raise FormatError(f"unexpected line '{line}'")
    return keys, {name: "\n".join(rows) for name, rows in matrices.items()}


def instance_from_text(text: str) -> CodeInstance:
    keys, blocks = _split_sections(text)
    try:
        params_kwargs = dict(
            q=int(keys["q"]),
            L=int(keys["L"]),
            k=int(keys["k"]),
            n=int(keys["n"]),
            exponents=tuple(int(x) for x in keys["exponents"].split(",")),
            variant=Variant(keys["variant"]),
            pq_choice=PQChoice(keys["pq_choice"]),
        )
    except (KeyError, ValueError) as e:
        raise FormatError(f"bad instance header: {e}") from e
    for name in ("P", "Q"):
        if name not in blocks:
            raise FormatError(f"instance is missing matrix {name}")
    P = parse_matrix(blocks["P"])
    Q = parse_matrix(blocks["Q"])

    if params_kwargs["pq_choice"] is PQChoice.USER:
        H = Q if params_kwargs["variant"] is Variant.C1 else (parse_matrix(blocks["H"]) if "H" in blocks else None)
        params = CircCodeParams(**params_kwargs, user_G=P, user_H=H)
    else:
        params = CircCodeParams(**params_kwargs)
    instance = build_pq(params)
    if not (np.array_equal(instance.P, P) and np.array_equal(instance.Q, Q)):
        raise FormatError("stored P/Q do not match the reconstructed instance")
    return instance
