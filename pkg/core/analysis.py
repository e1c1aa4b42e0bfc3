"""
Operation counting for the encoders over F_2 and the closed-form complexity
predictions they are compared against.

Charging rules: adding two F_2 vectors of length l costs l XORs; a product
with a 0/1 matrix costs (weight - 1) XORs per output column; a circular
shift is an index rotation and costs nothing; one extension-field
multiplication costs one mult unit, tallied per field degree.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

import galois
import numpy as np

from core.circmrd import (
    CircCodeParams,
    CodeInstance,
    Codeword,
    PQChoice,
    Variant,
    build_pq,
    shift_exponent,
)
from core.constants import (
    SCHEME_C1,
    SCHEME_C2,
    SCHEME_GABIDULIN_VECTOR,
    SCHEME_GENERALIZED_M,
    SCHEMES,
)
from core.errors import DimMismatch, PreconditionViolated, UnsupportedForCounting
from core.finite_field import FieldSpec, is_prime, make_ext_field, multiplicative_order, poly_coeffs, prime_field
from core.gabidulin import GabidulinParams, gabidulin_generator, polynomial_basis
from core.generalized import GeneralizedGabidulinCode
from core.linalg import m_o, rotate, to_base_field
from utils.logger import get_logger
from utils.performance_monitor import PerformanceMonitor

logger = get_logger()

GABIDULIN_NOTE = "basis transform not counted"


@dataclass
class OpCounter:
    xor_count: int = 0
    mults: Counter = field(default_factory=Counter)
    shift_count: int = 0

    @property
    def mult_count(self) -> int:
        return sum(self.mults.values())

    def add(self, a, b):
        """Vector addition over F_2, charging one XOR per entry."""
        if a.shape != b.shape:
            raise DimMismatch(f"cannot add {a.shape} and {b.shape}")
        self.xor_count += a.size
        return a + b

    def rotate(self, x, power: int):
        self.shift_count += 1
        return rotate(x, power)

    def mat_vec(self, x, M):
        """x @ M for a 0/1 matrix M; each output is the XOR of the selected inputs."""
        weights = np.count_nonzero(M.view(np.ndarray), axis=0)
        self.xor_count += int(np.maximum(weights - 1, 0).sum())
        return x @ M

    def field_mul(self, a, b):
        self.mults[type(a).degree] += 1
        return a * b

    def field_add(self, a, b):
        """Addition in F_{2^N} is an N-bit XOR."""
        self.xor_count += type(a).degree
        return a + b


def _require_binary(q: int) -> None:
    if q != 2:
        raise UnsupportedForCounting(f"operation counting is defined for q = 2 only, got q={q}")


# ----------------------------------------------------------------------------
# Counted encoders
# ----------------------------------------------------------------------------

def _tau_product(x, tau: galois.Poly, counter: OpCounter):
    """x tau(C_L) as a sum of rotated copies of x, one per nonzero term of tau."""
    acc = None
    for degree, coeff in enumerate(poly_coeffs(tau)):
        if coeff == 0:
            continue
        term = counter.rotate(x, degree)
        acc = term if acc is None else counter.add(acc, term)
    return acc


def _counted_circular(instance: CodeInstance, m, counter: OpCounter) -> Codeword:
    p = instance.params
    J, L, q = instance.J, instance.L, instance.q
    if m.shape != (J * p.k,):
        raise DimMismatch(f"message must have length Jk={J * p.k}, got shape {m.shape}")
    GF = prime_field(q)
    blocks = m.reshape(p.k, J)
    out = GF.Zeros((J, p.n))

    if instance.variant is Variant.C1:
        words = [counter.mat_vec(blocks[s], instance.G) for s in range(p.k)]
        for i, l in enumerate(p.exponents):
            acc = counter.rotate(words[0], shift_exponent(q, 0, l, L))
            for s in range(1, p.k):
                acc = counter.add(acc, counter.rotate(words[s], shift_exponent(q, s, l, L)))
            out[:, i] = counter.mat_vec(acc, instance.H)
    else:
        # m_bar_s = m_s G tau(C) is shared by every column
        words = [_tau_product(counter.mat_vec(blocks[s], instance.G), instance.tau, counter) for s in range(p.k)]
        G_T = instance.G.T
        for i, l in enumerate(p.exponents):
            acc = counter.mat_vec(counter.rotate(words[0], shift_exponent(q, 0, l, L)), G_T)
            for s in range(1, p.k):
                term = counter.mat_vec(counter.rotate(words[s], shift_exponent(q, s, l, L)), G_T)
                acc = counter.add(acc, term)
            out[:, i] = acc
    return Codeword(matrix=out, message=m)


def _counted_gabidulin_vector(params: GabidulinParams, u, counter: OpCounter):
    if u.shape != (params.k,):
        raise DimMismatch(f"message must have length {params.k}, got shape {u.shape}")
    G = gabidulin_generator(params)
    out = params.field.GF.Zeros(params.n)
    for i in range(params.n):
        acc = counter.field_mul(u[0], G[0, i])
        for s in range(1, params.k):
            acc = counter.field_add(acc, counter.field_mul(u[s], G[s, i]))
        out[i] = acc
    return out


def _counted_generalized(code: GeneralizedGabidulinCode, lambdas, counter: OpCounter):
    if lambdas.shape != (code.num_cosets, code.k):
        raise DimMismatch(f"expected a {code.num_cosets}x{code.k} message, got {lambdas.shape}")
    rows = []
    for i in range(code.num_cosets):
        acc = None
        for s in range(code.num_cosets):
            params = code.block_params(i, s)
            v = _counted_gabidulin_vector(params, lambdas[s], counter)
            # the change to the m_L x n matrix over F_2 is the uncounted basis transform
            block = to_base_field(m_o(params.basis) @ m_o(v).T, code.q)
            acc = block if acc is None else counter.add(acc, block)
        rows.append(acc)
    return np.concatenate(rows, axis=0)


CountSource = Union[CodeInstance, GabidulinParams, GeneralizedGabidulinCode]


def counted_encode(source: CountSource, m, scheme: str):
    """
    Encode while tallying operations.

    Args:
        source: CodeInstance (C1/C2), GabidulinParams (GabidulinVector) or
            GeneralizedGabidulinCode (GeneralizedM)
        m: Message in the source's format
        scheme: One of C1, C2, GabidulinVector, GeneralizedM

    Returns:
        (codeword, OpCounter)
    """
    if scheme not in SCHEMES:
        raise PreconditionViolated(f"unknown scheme '{scheme}'")
    counter = OpCounter()
    if scheme in (SCHEME_C1, SCHEME_C2):
        if not isinstance(source, CodeInstance):
            raise PreconditionViolated(f"scheme {scheme} needs a circular-shift code instance")
        _require_binary(source.q)
        if source.variant.value.upper() != scheme:
            raise PreconditionViolated(f"scheme {scheme} does not match instance variant {source.variant.value}")
        return _counted_circular(source, m, counter), counter
    if scheme == SCHEME_GABIDULIN_VECTOR:
        if not isinstance(source, GabidulinParams):
            raise PreconditionViolated("GabidulinVector needs Gabidulin parameters")
        _require_binary(source.field.q)
        return _counted_gabidulin_vector(source, m, counter), counter
    if not isinstance(source, GeneralizedGabidulinCode):
        raise PreconditionViolated("GeneralizedM needs a generalized Gabidulin code")
    _require_binary(source.q)
    return _counted_generalized(source, m, counter), counter


# ----------------------------------------------------------------------------
# Predictions
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class ComplexityPrediction:
    scheme: str
    L: int
    n: int
    k: int
    xor: int
    mult: int
    mult_degree: Optional[int] = None


def predicted_xor(scheme: str, L: int, n: int, k: int) -> ComplexityPrediction:
    """Closed-form XOR and multiplication counts for q = 2 and L an odd prime."""
    if not (is_prime(L) and L > 2):
        raise PreconditionViolated(f"L={L} must be an odd prime")
    m_L = multiplicative_order(2, L)
    if not 1 <= k <= n <= m_L:
        raise PreconditionViolated(f"need 1 <= k <= n <= m_L={m_L}, got k={k}, n={n}")
    if scheme == SCHEME_C1:
        return ComplexityPrediction(scheme, L, n, k, xor=n * k * L - n, mult=0)
    if scheme == SCHEME_C2:
        return ComplexityPrediction(scheme, L, n, k, xor=k * L + n * (k - 1) * (L - 1), mult=0)
    if scheme == SCHEME_GABIDULIN_VECTOR:
        return ComplexityPrediction(scheme, L, n, k, xor=n * (k - 1) * (L - 1), mult=n * k, mult_degree=L - 1)
    if scheme == SCHEME_GENERALIZED_M:
        blocks = (L - 1) // m_L
        return ComplexityPrediction(scheme, L, n, k,
                                    xor=n * k * (L - 1) ** 2 // m_L - n * (L - 1),
                                    mult=n * k * blocks ** 2, mult_degree=m_L)
    raise PreconditionViolated(f"unknown scheme '{scheme}'")


def walkthrough_xor(instance: CodeInstance) -> int:
    """Per-column C1 count (k-1)L + h, h the number of ones in A for H_L = [I_J A]^T."""
    _require_binary(instance.q)
    J = instance.J
    GF = prime_field(instance.q)
    if not np.array_equal(instance.H[:J, :], GF.Identity(J)):
        raise PreconditionViolated("H_L must have the form [I_J A]^T")
    h = int(np.count_nonzero(instance.H[J:, :].view(np.ndarray)))
    return (instance.params.k - 1) * instance.L + h


def schoolbook_multiply(a: Sequence[int], b: Sequence[int], modulus: Sequence[int],
                        counter: OpCounter) -> list[int]:
    """
    Carry-less multiply then reduce, coefficients constant term first.

    Every accumulation into an existing coefficient is charged, whatever the
    bit values, so the count is the data-independent schedule.
    """
    N = len(modulus) - 1
    product = [0] * (2 * N - 1)
    filled = [False] * (2 * N - 1)
    for i in range(N):
        for j in range(N):
            bit = a[i] & b[j]
            if filled[i + j]:
                counter.xor_count += 1
                product[i + j] ^= bit
            else:
                product[i + j] = bit
                filled[i + j] = True
    taps = [t for t in range(N) if modulus[t]]
    for top in range(2 * N - 2, N - 1, -1):
        for t in taps:
            counter.xor_count += 1
            product[top - N + t] ^= product[top]
        product[top] = 0
    return product[:N]


def schoolbook_mult_xor(field: FieldSpec) -> int:
    """Measured XOR count of one schoolbook multiplication in F_{2^N}."""
    _require_binary(field.q)
    counter = OpCounter()
    ones = [1] * field.m
    schoolbook_multiply(ones, ones, poly_coeffs(field.modulus), counter)
    return counter.xor_count


# ----------------------------------------------------------------------------
# Report
# ----------------------------------------------------------------------------

@dataclass
class ComplexityRow:
    scheme: str
    L: int
    n: int
    k: int
    predicted_xor: int
    measured_xor: int
    predicted_mult: int
    measured_mult: int
    xor_equivalent: int
    wall_us: Optional[float] = None
    note: str = ""

    @property
    def matches(self) -> bool:
        return self.predicted_xor == self.measured_xor and self.predicted_mult == self.measured_mult


@dataclass
class ComplexityReport:
    rows: list[ComplexityRow] = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return all(row.matches for row in self.rows)

    def to_text(self) -> str:
        headers = ["scheme", "L", "n", "k", "pred_xor", "meas_xor", "pred_mult", "meas_mult", "xor_equiv"]
        with_time = any(row.wall_us is not None for row in self.rows)
        if with_time:
            headers.append("wall_us")
        headers.append("note")
        table = []
        for row in self.rows:
            cells = [row.scheme, row.L, row.n, row.k, row.predicted_xor, row.measured_xor,
                     row.predicted_mult, row.measured_mult, row.xor_equivalent]
            if with_time:
                cells.append("" if row.wall_us is None else f"{row.wall_us:.1f}")
            cells.append(row.note)
            table.append([str(c) for c in cells])
        widths = [max([len(h)] + [len(r[i]) for r in table]) for i, h in enumerate(headers)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
        for r in table:
            lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["scheme", "L", "n", "k", "predicted_xor", "measured_xor", "predicted_mult", "measured_mult"])
        for row in self.rows:
            writer.writerow([row.scheme, row.L, row.n, row.k, row.predicted_xor, row.measured_xor,
                             row.predicted_mult, row.measured_mult])
        return buffer.getvalue()


def complexity_rows(L: int, n: int, k: int, monitor: Optional[PerformanceMonitor] = None) -> list[ComplexityRow]:
    """Predicted vs measured counts of all four schemes for one (L, n, k)."""
    rows = []
    # counts do not depend on the message
    for scheme, variant in ((SCHEME_C1, Variant.C1), (SCHEME_C2, Variant.C2)):
        instance = build_pq(CircCodeParams(q=2, L=L, k=k, n=n, exponents=tuple(range(n)),
                                           variant=variant, pq_choice=PQChoice.INSTANCE_A))
        message = prime_field(2).Ones(instance.J * k)
        rows.append(_row(scheme, L, n, k, instance, message, 0, "", monitor))

    field_N = make_ext_field(2, L - 1)
    params = GabidulinParams(field=field_N, betas=polynomial_basis(field_N)[:n], k=k)
    rows.append(_row(SCHEME_GABIDULIN_VECTOR, L, n, k, params, field_N.GF.Ones(k),
                     schoolbook_mult_xor(field_N), GABIDULIN_NOTE, monitor))

    code = GeneralizedGabidulinCode.from_parameters(2, L, k, n, range(n))
    rows.append(_row(SCHEME_GENERALIZED_M, L, n, k, code, code.field.GF.Ones((code.num_cosets, k)),
                     schoolbook_mult_xor(code.field), GABIDULIN_NOTE, monitor))
    return rows


def _row(scheme, L, n, k, source, message, mult_cost, note, monitor) -> ComplexityRow:
    _, counter = counted_encode(source, message, scheme)
    prediction = predicted_xor(scheme, L, n, k)
    wall = None
    if monitor is not None:
        timing = monitor.time_call(f"{scheme} L={L} n={n} k={k}", lambda: counted_encode(source, message, scheme))
        wall = timing.median_us
    return ComplexityRow(
        scheme=scheme, L=L, n=n, k=k,
        predicted_xor=prediction.xor, measured_xor=counter.xor_count,
        predicted_mult=prediction.mult, measured_mult=counter.mult_count,
        xor_equivalent=counter.xor_count + counter.mult_count * mult_cost,
        wall_us=wall, note=note,
    )


def complexity_report(configs: Iterable[tuple[int, int, int]], timing: bool = False) -> ComplexityReport:
    """
    Build the report for (L, n, k) configurations.

    Args:
        configs: (L, n, k) triples, q = 2 and L an odd prime
        timing: Also record informational wall-times
    """
    monitor = PerformanceMonitor() if timing else None
    report = ComplexityReport()
    for L, n, k in configs:
        report.rows.extend(complexity_rows(L, n, k, monitor))
    if monitor is not None:
        logger.debug(monitor.generate_performance_report())
    mismatches = [r for r in report.rows if not r.matches]
    for r in mismatches:
        logger.warning(f"Count mismatch {r.scheme} L={r.L} n={r.n} k={r.k}: "
                       f"xor {r.measured_xor} vs {r.predicted_xor}, mult {r.measured_mult} vs {r.predicted_mult}")
    return report
