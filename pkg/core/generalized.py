"""
Generalized Gabidulin codes assembled from m_L x n Gabidulin blocks.

The coprime set splits into cyclotomic cosets under multiplication by q.
For coset s (representative eps_s, its smallest member) and block row i the
basis B_{i,s} = [beta^(t (L - eps_s))] for t = i m_L .. (i+1) m_L - 1 and the
evaluation points F_s = {beta^(eps_s l_i)} define a Gabidulin block; block
row i of a codeword is sum_s M_o(B_{i,s}) L_{lambda_s}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import galois
import numpy as np

from core.constants import DEFAULT_CHUNK_SIZE, DEFAULT_ENUMERATION_CAP
from core.enumeration import check_cap, iter_message_chunks, message_count
from core.errors import DependentBetas, DimMismatch, PreconditionViolated
from core.finite_field import FieldSpec, make_ext_field, multiplicative_order, prime_field, primitive_root_of_unity
from core.gabidulin import GabidulinParams, gabidulin_encode
from core.circmrd import CodeInstance, Variant, coprime_set
from utils.logger import get_logger

logger = get_logger()


def cyclotomic_cosets(q: int, L: int) -> list[tuple[int, ...]]:
    """Cosets {j q^i mod L} of the coprime set, ordered by their smallest member."""
    coprimes, _ = coprime_set(L)
    seen: set[int] = set()
    cosets = []
    for j in coprimes:
        if j in seen:
            continue
        coset, x = set(), j
        while x not in coset:
            coset.add(x)
            x = (x * q) % L
        seen |= coset
        cosets.append(tuple(sorted(coset)))
    return cosets


@dataclass(frozen=True, eq=False)
class GeneralizedGabidulinCode:
    """
    Block-stacked sum of Gabidulin codes over F_{q^{m_L}}.

    Messages are (S x k) arrays lambda over F_{q^{m_L}}, one row per coset.
    """

    q: int
    L: int
    k: int
    n: int
    exponents: tuple[int, ...]
    field: FieldSpec
    beta: galois.FieldArray
    cosets: tuple[tuple[int, ...], ...]

    @classmethod
    def from_parameters(cls, q: int, L: int, k: int, n: int, exponents: Sequence[int],
                        field: FieldSpec | None = None, beta=None) -> "GeneralizedGabidulinCode":
        m_L = multiplicative_order(q, L)
        if not 1 <= k <= n <= m_L:
            raise PreconditionViolated(f"need 1 <= k <= n <= m_L={m_L}, got k={k}, n={n}")
        if len(exponents) != n:
            raise DimMismatch(f"expected {n} exponents, got {len(exponents)}")
        field = make_ext_field(q, m_L) if field is None else field
        beta = primitive_root_of_unity(field, L) if beta is None else beta
        cosets = tuple(cyclotomic_cosets(q, L))
        code = cls(q=q, L=L, k=k, n=n, exponents=tuple(int(l) for l in exponents),
                   field=field, beta=beta, cosets=cosets)
        # every block must be a valid Gabidulin code
        for s in range(code.num_cosets):
            try:
                code.block_params(0, s)
            except DependentBetas as e:
                raise PreconditionViolated(f"evaluation set of coset {s} is dependent: {e}") from e
        return code

    @property
    def m_L(self) -> int:
        return self.field.m

    @property
    def J(self) -> int:
        return sum(len(c) for c in self.cosets)

    @property
    def num_cosets(self) -> int:
        return len(self.cosets)

    @property
    def representatives(self) -> list[int]:
        return [c[0] for c in self.cosets]

    def basis(self, i: int, s: int):
        """B_{i,s} for block row i and coset s (both 0-based)."""
        eps = self.representatives[s]
        exps = [(t * (self.L - eps)) % self.L for t in range(i * self.m_L, (i + 1) * self.m_L)]
        return self.field.GF([int(self.beta ** e) for e in exps])

    def evaluation_set(self, s: int):
        eps = self.representatives[s]
        return self.field.GF([int(self.beta ** ((eps * l) % self.L)) for l in self.exponents])

    def block_params(self, i: int, s: int) -> GabidulinParams:
        return GabidulinParams(field=self.field, betas=self.evaluation_set(s), k=self.k, basis=self.basis(i, s))

    def block(self, i: int, s: int, lam):
        """M_o(B_{i,s}) L_lambda, an m_L x n matrix over F_q."""
        return gabidulin_encode(self.block_params(i, s), lam, "matrix")

    def encode(self, lambdas):
        """Stack of block rows sum_s M_o(B_{i,s}) L_{lambda_s}; J x n over F_q."""
        if lambdas.shape != (self.num_cosets, self.k):
            raise DimMismatch(f"expected a {self.num_cosets}x{self.k} message, got {lambdas.shape}")
        GF = prime_field(self.q)
        rows = []
        for i in range(self.num_cosets):
            acc = GF.Zeros((self.m_L, self.n))
            for s in range(self.num_cosets):
                acc = acc + self.block(i, s, lambdas[s])
            rows.append(acc)
        return np.concatenate(rows, axis=0)

    def codebook(self, cap: int = DEFAULT_ENUMERATION_CAP, cosets: Sequence[int] | None = None,
                 chunk_size: int = DEFAULT_CHUNK_SIZE) -> list:
        """
        Every codeword; restricting to some cosets keeps the other lambdas at zero.
        """
        active = list(range(self.num_cosets)) if cosets is None else list(cosets)
        GF = self.field.GF
        length = self.k * len(active)
        check_cap(message_count(GF, length), cap)
        words = []
        for block in iter_message_chunks(GF, length, chunk_size):
            for flat in block:
                lambdas = GF.Zeros((self.num_cosets, self.k))
                lambdas[active, :] = flat.reshape(len(active), self.k)
                words.append(self.encode(lambdas))
        logger.debug(f"Generalized Gabidulin codebook: {len(words)} codewords over cosets {active}")
        return words


def generalized_gabidulin(instance: CodeInstance) -> GeneralizedGabidulinCode:
    """
    The generalized Gabidulin code matching a C1 instance with H_L = [I_J 0]^T
    or a C2 instance with G_L = [I_J 0].
    """
    GF = prime_field(instance.q)
    J, L = instance.J, instance.L
    identity_top = np.concatenate([GF.Identity(J), GF.Zeros((L - J, J))], axis=0)
    if instance.variant is Variant.C1 and not np.array_equal(instance.H, identity_top):
        raise PreconditionViolated("C1 needs H_L = [I_J 0]^T")
    if instance.variant is Variant.C2 and not np.array_equal(instance.G, identity_top.T):
        raise PreconditionViolated("C2 needs G_L = [I_J 0]")
    if J % instance.m_L:
        raise PreconditionViolated(f"m_L={instance.m_L} does not divide J={J}")
    p = instance.params
    field = instance.aux.field if instance.aux is not None else None
    beta = instance.aux.beta if instance.aux is not None else None
    return GeneralizedGabidulinCode.from_parameters(p.q, p.L, p.k, p.n, p.exponents, field=field, beta=beta)
