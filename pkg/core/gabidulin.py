"""
Classical Gabidulin codes in matrix and vector representation.

A Gabidulin code evaluates q-linearized polynomials L_u(x) = sum u_s x^(q^s)
at F_q-independent points beta_0..beta_{n-1} of F_{q^N}. The matrix form
M(u) = M_o(B) L_u and the vector form u G are tied together by the dual basis
of B.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Iterator, Optional

import galois
import numpy as np

from core.constants import DEFAULT_CHUNK_SIZE, DEFAULT_ENUMERATION_CAP
from core.enumeration import (
    check_cap,
    codebook_multiset,
    iter_message_chunks,
    message_count,
    min_nonzero_rank,
)
from core.errors import DependentBetas, DimMismatch, NotABasis, PreconditionViolated
from core.finite_field import FieldSpec, frobenius
from core.linalg import (
    basis_gamma_coordinates,
    element_matrix,
    expand_to_base,
    format_matrix,
    inverse,
    m_o,
    parse_matrix,
    rank_fq,
    to_base_field,
)
from utils.logger import get_logger

logger = get_logger()

REPRESENTATIONS = ("vector", "matrix")


# ----------------------------------------------------------------------------
# Bases
# ----------------------------------------------------------------------------

def is_basis(B) -> bool:
    """True iff the entries of B form an F_q-basis of their field."""
    N = type(B).degree
    return B.ndim == 1 and B.shape[0] == N and rank_fq(expand_to_base(B)) == N


def require_basis(B) -> None:
    if not is_basis(B):
        raise NotABasis(f"{[int(x) for x in B]} is not a basis of GF({type(B).order})")


def polynomial_basis(field: FieldSpec):
    """[1 gamma ... gamma^(N-1)]"""
    return field.GF([int(field.gamma ** e) for e in range(field.m)])


def dual_basis(B):
    """The unique B' with M_o(B)^T M_o(B') = I_N."""
    require_basis(B)
    dual = np.linalg.inv(m_o(B).T)
    # M_o(B') has B'^T as its first column
    return dual[:, 0].copy()


def counterpart_matrix(v, B):
    """
    Coordinates of each entry of v in the basis B.

    Returns:
        N x n matrix over F_q with B . M_B(v) = v
    """
    require_basis(B)
    return inverse(expand_to_base(B)) @ expand_to_base(v)


def reconstruct(M, B):
    """B . M, mapping a counterpart matrix back to its row over F_{q^N}."""
    GF = type(B)
    return B @ GF(M.view(np.ndarray).astype(np.int64))


# ----------------------------------------------------------------------------
# q-linearized polynomials
# ----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class QLinPoly:
    """L_u(x) = sum u_s x^(q^s), optionally twisted by eta * u_0 * x^(q^k)."""

    u: galois.FieldArray
    eta: Optional[galois.FieldArray] = None

    def __post_init__(self):
        if self.u.ndim != 1 or self.u.shape[0] < 1:
            raise DimMismatch("a q-linearized polynomial needs at least one coefficient")

    @property
    def k(self) -> int:
        return self.u.shape[0]


def qlin_eval(p: QLinPoly, x):
    """Evaluate p at x (entrywise for arrays)."""
    total = type(p.u).Zeros(np.shape(x)) if np.ndim(x) else type(p.u)(0)
    for s in range(p.k):
        total = total + p.u[s] * frobenius(x, s)
    if p.eta is not None and p.eta != 0:
        # h = 0: eta * u_0^(q^0) * x^(q^k)
        total = total + p.eta * p.u[0] * frobenius(x, p.k)
    return total


# ----------------------------------------------------------------------------
# Gabidulin codes
# ----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GabidulinParams:
    """
    Parameters of a Gabidulin code over F_{q^N}.

    Args:
        field: The field F_{q^N}
        betas: n F_q-independent evaluation points
        k: Dimension
        basis: Basis B used by the matrix representation (defaults to the
            polynomial basis [1 gamma ... gamma^(N-1)])
    """

    field: FieldSpec
    betas: galois.FieldArray
    k: int
    basis: galois.FieldArray = dataclass_field(default=None)

    def __post_init__(self):
        if self.basis is None:
            object.__setattr__(self, "basis", polynomial_basis(self.field))
        if not (1 <= self.k <= self.n <= self.N):
            raise PreconditionViolated(f"need 1 <= k <= n <= N, got k={self.k}, n={self.n}, N={self.N}")
        if rank_fq(expand_to_base(self.betas)) != self.n:
            raise DependentBetas(f"evaluation points {[int(b) for b in self.betas]} are F_{self.field.q}-dependent")
        require_basis(self.basis)

    @property
    def n(self) -> int:
        return self.betas.shape[0]

    @property
    def N(self) -> int:
        return self.field.m


def gabidulin_generator(params: GabidulinParams):
    """k x n matrix whose row i is the entrywise q^i power of the betas."""
    GF = params.field.GF
    G = GF.Zeros((params.k, params.n))
    for i in range(params.k):
        G[i, :] = frobenius(params.betas, i)
    return G


def gabidulin_encode(params: GabidulinParams, u, representation: str = "vector"):
    """
    Encode a message u in F_{q^N}^k.

    Args:
        params: Code parameters
        u: Message of length k
        representation: "vector" for u G, "matrix" for M(u) = M_o(B) L_u

    Returns:
        Row over F_{q^N} (vector) or N x n matrix over F_q (matrix)
    """
    if u.shape != (params.k,):
        raise DimMismatch(f"message must have length {params.k}, got shape {u.shape}")
    v = u @ gabidulin_generator(params)
    if representation == "vector":
        return v
    if representation == "matrix":
        # L_u[i][j] = L_u(beta_j)^(q^i) = v_j^(q^i), i.e. L_u = M_o(v)^T
        return to_base_field(m_o(params.basis) @ m_o(v).T, params.field.q)
    raise ValueError(f"unknown representation '{representation}'")


def iter_messages(params: GabidulinParams, chunk_size: int = DEFAULT_CHUNK_SIZE) -> Iterator:
    for block in iter_message_chunks(params.field.GF, params.k, chunk_size):
        yield from block


def codebook_matrix_form(params: GabidulinParams, cap: int = DEFAULT_ENUMERATION_CAP) -> list:
    """{M(u)} in lexicographic message order."""
    check_cap(message_count(params.field.GF, params.k), cap)
    return [gabidulin_encode(params, u, "matrix") for u in iter_messages(params)]


def codebook_counterpart_form(params: GabidulinParams, B=None, cap: int = DEFAULT_ENUMERATION_CAP) -> list:
    """{M_B(u G)}; B defaults to the dual of the code's basis."""
    check_cap(message_count(params.field.GF, params.k), cap)
    B = dual_basis(params.basis) if B is None else B
    return [counterpart_matrix(gabidulin_encode(params, u, "vector"), B) for u in iter_messages(params)]


def check_dual_basis_equivalence(params: GabidulinParams, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """{M(u)} equals {M_B'(u G)} as multisets, with B' the dual of the code's basis."""
    left = codebook_multiset(codebook_matrix_form(params, cap))
    right = codebook_multiset(codebook_counterpart_form(params, cap=cap))
    logger.debug(f"Matrix/vector representation comparison over {sum(left.values())} codewords")
    return left == right


def gabidulin_min_rank(params: GabidulinParams, cap: int = DEFAULT_ENUMERATION_CAP) -> int | None:
    return min_nonzero_rank(codebook_matrix_form(params, cap))


# ----------------------------------------------------------------------------
# F_q characterization
# ----------------------------------------------------------------------------

def _matrix_power(X, exponent: int):
    GF = type(X)
    result = GF.Identity(X.shape[0])
    base = X
    while exponent:
        if exponent & 1:
            result = result @ base
        base = base @ base
        exponent >>= 1
    return result


def multiplication_matrices(params: GabidulinParams) -> list:
    """X_i = V A(beta_i) V^-1, with V the coordinates of the code's basis in [gamma^(N-1) ... 1]."""
    V = basis_gamma_coordinates(params.basis)
    V_inv = inverse(V)
    return [V @ element_matrix(beta, params.field) @ V_inv for beta in params.betas]


def linearized_fq_encode(params: GabidulinParams, e, matrices: list | None = None):
    """
    Codeword built purely over F_q: column i is (sum_s e_s X_i^(q^s))^T.

    Args:
        params: Code parameters
        e: k x N matrix over F_q; row s holds the coordinates of u_s in the
            code's basis
        matrices: Precomputed multiplication_matrices(params)

    Returns:
        N x n matrix over F_q, equal to M_B(u G) for the matching message u
    """
    if e.shape != (params.k, params.N):
        raise DimMismatch(f"expected a {params.k}x{params.N} coefficient matrix, got {e.shape}")
    matrices = multiplication_matrices(params) if matrices is None else matrices
    GF = type(e)
    out = GF.Zeros((params.N, params.n))
    for i, X in enumerate(matrices):
        row = GF.Zeros(params.N)
        for s in range(params.k):
            row = row + e[s] @ _matrix_power(X, params.field.q ** s)
        out[:, i] = row
    return out


def check_fq_characterization(params: GabidulinParams, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """The F_q-built code equals {M_B(u G)} message by message."""
    check_cap(message_count(params.field.GF, params.k), cap)
    matrices = multiplication_matrices(params)
    for u in iter_messages(params):
        expected = counterpart_matrix(gabidulin_encode(params, u, "vector"), params.basis)
        e = counterpart_matrix(u, params.basis).T
        if not np.array_equal(linearized_fq_encode(params, e, matrices), expected):
            logger.warning(f"F_q characterization mismatch at message {[int(x) for x in u]}")
            return False
    return True


# ----------------------------------------------------------------------------
# Twisted codes (h = 0)
# ----------------------------------------------------------------------------

def twisted_generator_validate(field: FieldSpec, n: int, k: int, eta) -> bool:
    """eta is admissible iff eta^((q^N-1)/(q-1)) != (-1)^(nk); eta = 0 always is."""
    eta = field.GF(int(eta))
    if eta == 0:
        return True
    norm = eta ** ((field.order - 1) // (field.q - 1))
    sign = field.one if (n * k) % 2 == 0 else -field.one
    return bool(norm != sign)


def twisted_encode(field: FieldSpec, betas, u, eta):
    """[L_u(beta_i) + eta u_0 beta_i^(q^k)] for the h = 0 twisted code."""
    if not twisted_generator_validate(field, betas.shape[0], u.shape[0], eta):
        raise PreconditionViolated(f"eta={int(eta)} violates the twisted code condition")
    return qlin_eval(QLinPoly(u=u, eta=field.GF(int(eta))), betas)


# ----------------------------------------------------------------------------
# Codebook dump format
# ----------------------------------------------------------------------------

def format_codebook(codewords) -> str:
    """One matrix block per codeword, blocks separated by blank lines."""
    return "\n\n".join(format_matrix(M) for M in codewords) + "\n"


def parse_codebook(text: str) -> list:
    blocks = [b for b in text.strip().split("\n\n") if b.strip()]
    return [parse_matrix(b) for b in blocks]
