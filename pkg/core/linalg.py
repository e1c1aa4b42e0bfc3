"""
Dense matrix algebra over F_q and F_{q^m} for rankforge.

Matrices are 2-D galois FieldArrays; all solving, ranks and inverses go
through galois' exact np.linalg overrides.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

import galois
import numpy as np

from core.errors import (
    DimMismatch,
    EnumerationTooLarge,
    FormatError,
    NotOverBaseField,
    Singular,
    WrongOrder,
)
from core.finite_field import FieldSpec, prime_field
from utils.logger import get_logger

logger = get_logger()

MAT_OPS = ("add", "mul", "transpose", "kron", "inverse", "det")

SPAN_ORACLE_LIMIT = 2 ** 16


# ----------------------------------------------------------------------------
# Basic arithmetic
# ----------------------------------------------------------------------------

def _require_square(A) -> int:
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimMismatch(f"expected a square matrix, got shape {A.shape}")
    return A.shape[0]


def kron(A, B):
    """Kronecker product A (x) B, built block by block."""
    GF = type(A)
    ra, ca = A.shape
    rb, cb = B.shape
    out = GF.Zeros((ra * rb, ca * cb))
    for i in range(ra):
        for j in range(ca):
            if A[i, j] != 0:
                out[i * rb:(i + 1) * rb, j * cb:(j + 1) * cb] = A[i, j] * B
    return out


def inverse(A):
    n = _require_square(A)
    if rank_fq(A) < n:
        raise Singular(f"{n}x{n} matrix is singular")
    return np.linalg.inv(A)


def det(A):
    _require_square(A)
    return np.linalg.det(A)


def mat_arith(A, B, op: str):
    """
    Matrix arithmetic over the entry field of A.

    B is ignored for the unary ops transpose, inverse and det.
    """
    if op == "add":
        if A.shape != B.shape:
            raise DimMismatch(f"cannot add {A.shape} and {B.shape}")
        return A + B
    if op == "mul":
        if A.shape[-1] != B.shape[0]:
            raise DimMismatch(f"cannot multiply {A.shape} by {B.shape}")
        return A @ B
    if op == "transpose":
        return A.T
    if op == "kron":
        return kron(A, B)
    if op == "inverse":
        return inverse(A)
    if op == "det":
        return det(A)
    raise ValueError(f"unknown matrix operation '{op}' (expected one of {', '.join(MAT_OPS)})")


def rank_fq(A) -> int:
    """Rank over the entry field (exact Gaussian elimination)."""
    if A.size == 0:
        return 0
    return int(np.linalg.matrix_rank(A))


def span_rank(A) -> int:
    """Rank by enumerating the row span: |span| = q^rank. Oracle for small matrices."""
    GF = type(A)
    rows = A.shape[0]
    if GF.order ** rows > SPAN_ORACLE_LIMIT:
        raise EnumerationTooLarge(GF.order ** rows, SPAN_ORACLE_LIMIT)
    coefficients = GF(np.array(list(itertools.product(range(GF.order), repeat=rows)), dtype=int).reshape(-1, rows))
    span = coefficients @ A
    distinct = {tuple(int(x) for x in row) for row in span}
    size, r = len(distinct), 0
    while GF.order ** r < size:
        r += 1
    return r


def lift(A, GF: type[galois.FieldArray]):
    """Embed a matrix over F_q into the extension field GF."""
    return GF(np.asarray(A.view(np.ndarray), dtype=int))


def to_base_field(A, q: int):
    """Project a matrix over F_{q^m} whose entries lie in F_q back onto F_q."""
    values = A.view(np.ndarray)
    if np.any(values >= q):
        raise NotOverBaseField(f"matrix of shape {A.shape} has entries outside F_{q}")
    return prime_field(q)(np.asarray(values, dtype=int))


# ----------------------------------------------------------------------------
# Structured matrices
# ----------------------------------------------------------------------------

def cyclic_shift_matrix(L: int, power: int = 1, q: int = 2):
    """C_L^power, with C_L the L x L cyclic permutation whose row r has its 1 in column r+1."""
    GF = prime_field(q)
    out = GF.Zeros((L, L))
    rows = np.arange(L)
    out[rows, (rows + power) % L] = 1
    return out


def rotate(x, power: int):
    """x @ C_L^power as an index rotation of the last axis."""
    L = x.shape[-1]
    return x[..., (np.arange(L) - power) % L]


def l_fq(L: int, GF: type[galois.FieldArray]):
    """L as an element of the prime subfield."""
    return GF(L % GF.characteristic)


def vandermonde_pair(beta, L: int):
    """
    The Vandermonde matrices V_L[i][j] = beta^(ij) and Vt_L[i][j] = beta^(-ij).

    Raises:
        WrongOrder: If beta does not have multiplicative order exactly L
    """
    GF = type(beta)
    if beta == 0 or int(beta.multiplicative_order()) != L:
        raise WrongOrder(f"element {int(beta)} does not have multiplicative order {L}")
    powers = GF([int(beta ** e) for e in range(L)])
    grid = np.outer(np.arange(L), np.arange(L))
    V = powers[grid % L]
    Vt = powers[(-grid) % L]
    return V, Vt


def companion_matrix(field: FieldSpec):
    """A(gamma): first row -p_{N-1} .. -p_0, ones on the subdiagonal."""
    GF = prime_field(field.q)
    N = field.m
    out = GF.Zeros((N, N))
    out[0, :] = -field.modulus.coeffs[1:]
    for r in range(1, N):
        out[r, r - 1] = 1
    return out


def element_matrix(beta, field: FieldSpec):
    """A(beta) = sum a_i A(gamma)^i for beta = sum a_i gamma^i."""
    GF = prime_field(field.q)
    A = companion_matrix(field)
    out = GF.Zeros((field.m, field.m))
    power = GF.Identity(field.m)
    for coefficient in field.coeffs(beta):
        if coefficient:
            out += GF(coefficient) * power
        power = power @ A
    return out


def basis_gamma(field: FieldSpec):
    """[gamma^(N-1) ... gamma 1] as a row over F_{q^N}."""
    return field.GF([int(field.gamma ** e) for e in range(field.m - 1, -1, -1)])


def basis_gamma_coordinates(v):
    """Rows of coordinates of each entry of v in the descending basis [gamma^(N-1) ... 1]."""
    return v.vector()


def expand_to_base(v):
    """N x n matrix over F_q; column j holds the constant-term-first coefficients of v_j."""
    return v.vector()[..., ::-1].T


def m_o(v, cols: Optional[int] = None):
    """
    M_o(v): column t is the entrywise q^t power of v^T.

    Args:
        v: Row over F_{q^N}
        cols: Number of columns (defaults to the field degree N)
    """
    GF = type(v)
    cols = GF.degree if cols is None else cols
    q = GF.characteristic
    out = GF.Zeros((v.shape[0], cols))
    for t in range(cols):
        out[:, t] = v ** (q ** t)
    return out


# ----------------------------------------------------------------------------
# Minimal polynomials and similarity
# ----------------------------------------------------------------------------

def poly_eval_matrix(f: galois.Poly, M):
    """f(M) by Horner's rule."""
    n = _require_square(M)
    GF = type(M)
    result = GF.Zeros((n, n))
    identity = GF.Identity(n)
    for c in f.coeffs:
        result = result @ M + GF(int(c)) * identity
    return result


def minimal_polynomial_matrix(M) -> galois.Poly:
    """
    Monic polynomial of least degree annihilating M.

    Finds the first linear dependence among I, M, M^2, ... by row reducing
    their vectorizations; in reduced form the last column carries the
    coefficients of that dependence.
    """
    n = _require_square(M)
    GF = type(M)
    vectors = [GF.Identity(n).view(np.ndarray).reshape(-1)]
    power = GF.Identity(n)
    for d in range(1, n + 1):
        power = power @ M
        vectors.append(power.view(np.ndarray).reshape(-1))
        K = GF(np.column_stack(vectors).astype(int))
        if rank_fq(K) < d + 1:
            R = K.row_reduce()
            coeffs = [-R[i, d] for i in range(d)] + [GF(1)]
            return galois.Poly(GF(np.array([int(c) for c in coeffs])), order="asc")
    raise RuntimeError("no annihilating polynomial up to degree n (Cayley-Hamilton violated)")


@dataclass(frozen=True)
class SimilarityVerdict:
    similar: bool
    witness_poly: galois.Poly


def similar_to_field_mult(M) -> SimilarityVerdict:
    """M is similar to some V A(b) V^-1 iff its minimal polynomial is irreducible."""
    f = minimal_polynomial_matrix(M)
    similar = f.degree >= 1 and (f.degree == 1 or bool(f.is_irreducible()))
    logger.debug(f"Minimal polynomial {f} -> similar={similar}")
    return SimilarityVerdict(similar=similar, witness_poly=f)


# ----------------------------------------------------------------------------
# Text format
# ----------------------------------------------------------------------------

def matrix_from_rows(rows: Sequence[str], q: int = 2):
    """Build a matrix over F_q from digit strings such as ["011", "001"]."""
    try:
        values = [[int(ch) for ch in row.replace(" ", "")] for row in rows]
    except ValueError as e:
        raise FormatError(f"bad digit rows {rows!r}: {e}") from e
    if len({len(r) for r in values}) > 1:
        raise FormatError("rows of unequal length")
    return prime_field(q)(np.array(values, dtype=int).reshape(len(values), -1))


def format_matrix(A) -> str:
    """Header "rows cols q" then one row of space-separated digits per line."""
    rows, cols = A.shape
    q = type(A).order
    lines = [f"{rows} {cols} {q}"]
    values = A.view(np.ndarray)
    for r in range(rows):
        lines.append(" ".join(str(int(x)) for x in values[r]))
    return "\n".join(lines)


def parse_matrix(text: str):
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if not lines:
        raise FormatError("empty matrix block")
    try:
        rows, cols, q = (int(tok) for tok in lines[0].split())
    except ValueError as e:
        raise FormatError(f"bad matrix header '{lines[0]}'") from e
    if len(lines) != rows + 1:
        raise FormatError(f"expected {rows} rows, found {len(lines) - 1}")
    try:
        values = [[int(tok) for tok in line.split()] for line in lines[1:]]
    except ValueError as e:
        raise FormatError(f"bad matrix entry: {e}") from e
    if any(len(v) != cols for v in values):
        raise FormatError(f"every row must have {cols} entries")
    if any(x < 0 or x >= q for v in values for x in v):
        raise FormatError(f"entries must lie in [0, {q})")
    return prime_field(q)(np.array(values, dtype=int).reshape(rows, cols))
