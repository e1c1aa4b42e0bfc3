"""
Prime-field and extension-field arithmetic for rankforge.

Elements are galois FieldArray values. galois stores an element of F_{q^m}
as the integer sum c_i * q^i, so the constant-term-first coefficient vector
of an element is exactly the base-q digit expansion of that integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Sequence, Union

import galois
import numpy as np

from core.constants import MAX_EXTENSION_DEGREE, MAX_FIELD_ORDER
from core.errors import (
    DimMismatch,
    DivisionByZero,
    FieldTooLarge,
    FormatError,
    NoSuchDegree,
    NotCoprime,
    NotPrime,
    OrderUnattainable,
    PreconditionViolated,
    Reducible,
)
from utils.logger import get_logger

logger = get_logger()

FieldElement = galois.FieldArray
Poly = galois.Poly
PolyLike = Union[galois.Poly, Sequence[int]]

FE_OPS = ("add", "sub", "mul", "inv", "div", "pow")


def is_prime(q: int) -> bool:
    return isinstance(q, (int, np.integer)) and q >= 2 and galois.is_prime(int(q))


def require_prime(q: int) -> None:
    if not is_prime(q):
        raise NotPrime(f"q={q} is not a prime")


@lru_cache(maxsize=None)
def prime_field(q: int) -> type[galois.FieldArray]:
    """The galois class of F_q."""
    require_prime(q)
    return galois.GF(q)


# ----------------------------------------------------------------------------
# Polynomials over F_q
# ----------------------------------------------------------------------------

def poly_from_coeffs(coeffs: Sequence[int], q: int) -> galois.Poly:
    """Build a polynomial from constant-term-first coefficients."""
    values = [int(c) % q for c in coeffs] or [0]
    return galois.Poly(values, field=prime_field(q), order="asc")


def poly_coeffs(f: galois.Poly) -> list[int]:
    """Constant-term-first coefficients, no trailing zeros (except for 0)."""
    return [int(c) for c in f.coefficients(order="asc")]


def poly_to_text(f: galois.Poly) -> str:
    return ",".join(str(c) for c in poly_coeffs(f))


def poly_from_text(text: str, q: int) -> galois.Poly:
    """Parse "1,1,0,0,1" (constant term first) into x^4 + x + 1."""
    try:
        coeffs = [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
    except ValueError as e:
        raise FormatError(f"bad polynomial '{text}': {e}") from e
    if not coeffs:
        raise FormatError("empty polynomial")
    if any(c < 0 or c >= q for c in coeffs):
        raise FormatError(f"polynomial coefficients of '{text}' must lie in [0, {q})")
    return poly_from_coeffs(coeffs, q)


def _as_poly(f: PolyLike, q: int) -> galois.Poly:
    if isinstance(f, galois.Poly):
        return f
    return poly_from_coeffs(f, q)


def is_irreducible(f: PolyLike, q: int) -> bool:
    """True iff f has no nontrivial factorization over F_q."""
    require_prime(q)
    f = _as_poly(f, q)
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    return bool(f.is_irreducible())


def mobius(n: int) -> int:
    if n == 1:
        return 1
    primes, exponents = galois.factors(n)
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(primes) % 2 else 1


def euler_phi(n: int) -> int:
    return int(galois.euler_phi(n))


def _x_pow_minus_one(d: int, q: int) -> galois.Poly:
    return galois.Poly.Degrees([d, 0], coeffs=[1, q - 1], field=prime_field(q))


def cyclotomic_polynomial(q: int, L: int) -> galois.Poly:
    """The L-th cyclotomic polynomial reduced mod q, via the Mobius product."""
    require_prime(q)
    field = prime_field(q)
    numerator = galois.Poly.One(field)
    denominator = galois.Poly.One(field)
    for d in galois.divisors(L):
        mu = mobius(L // d)
        if mu == 1:
            numerator *= _x_pow_minus_one(d, q)
        elif mu == -1:
            denominator *= _x_pow_minus_one(d, q)
    return numerator // denominator


def tau_polynomial(q: int, L: int) -> galois.Poly:
    """tau(x) = (x^L - 1) / Phi_L(x) over F_q, the product of (x - beta^j) for j outside the coprime set."""
    require_prime(q)
    if gcd(q, L) != 1:
        raise NotCoprime(f"gcd(q={q}, L={L}) != 1")
    return _x_pow_minus_one(L, q) // cyclotomic_polynomial(q, L)


def multiplicative_order(q: int, L: int) -> int:
    """Smallest m >= 1 with q^m = 1 (mod L)."""
    if L < 1:
        raise PreconditionViolated(f"L={L} must be positive")
    if gcd(q, L) != 1:
        raise NotCoprime(f"gcd(q={q}, L={L}) != 1")
    m, value = 1, q % L
    while value != 1 % L:
        value = (value * q) % L
        m += 1
    return m


# ----------------------------------------------------------------------------
# Extension fields
# ----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FieldSpec:
    """Arithmetic context F_{q^m} = F_q[x]/(modulus) with a fixed primitive element."""

    q: int
    m: int
    modulus: galois.Poly
    GF: type[galois.FieldArray]
    generator: galois.FieldArray

    @property
    def order(self) -> int:
        return self.q ** self.m

    @property
    def zero(self) -> galois.FieldArray:
        return self.GF(0)

    @property
    def one(self) -> galois.FieldArray:
        return self.GF(1)

    @property
    def gamma(self) -> galois.FieldArray:
        """The class of x, a root of the modulus."""
        return self.GF(self.q % self.order) if self.m > 1 else -self.GF(int(self.modulus.coeffs[-1]))

    def alpha(self, exponent: int) -> galois.FieldArray:
        """generator ** exponent"""
        return self.generator ** exponent

    def element(self, coeffs: Sequence[int]) -> galois.FieldArray:
        return element_from_coeffs(coeffs, self)

    def coeffs(self, x) -> list[int]:
        return element_coeffs(x, self)

    def elements(self) -> galois.FieldArray:
        return self.GF.elements

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.q == other.q and self.m == other.m and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.q, self.m, tuple(poly_coeffs(self.modulus))))

    def __repr__(self) -> str:
        return f"FieldSpec(q={self.q}, m={self.m}, modulus={poly_to_text(self.modulus)})"


def _smallest_primitive(GF: type[galois.FieldArray]) -> galois.FieldArray:
    target = GF.order - 1
    for value in range(1, GF.order):
        candidate = GF(value)
        if int(candidate.multiplicative_order()) == target:
            return candidate
    raise NoSuchDegree(f"no primitive element in GF({GF.order})")


@lru_cache(maxsize=None)
def _build_field(q: int, m: int, modulus_coeffs: tuple[int, ...]) -> FieldSpec:
    modulus = poly_from_coeffs(modulus_coeffs, q)
    if m == 1:
        GF = prime_field(q)
    else:
        GF = galois.GF(q ** m, irreducible_poly=modulus)
    generator = _smallest_primitive(GF)
    logger.debug(f"Built GF({q}^{m}) modulus={poly_to_text(modulus)} generator={int(generator)}")
    return FieldSpec(q=q, m=m, modulus=modulus, GF=GF, generator=generator)


def make_ext_field(
    q: int,
    m: int,
    modulus: PolyLike | None = None,
    max_degree: int = MAX_EXTENSION_DEGREE,
) -> FieldSpec:
    """
    Build the extension field F_{q^m}.

    Args:
        q: Prime characteristic
        m: Extension degree (>= 1)
        modulus: Monic irreducible polynomial of degree m; the lexicographically
            smallest one is chosen when omitted
        max_degree: Largest extension degree accepted

    Returns:
        FieldSpec: The arithmetic context
    """
    require_prime(q)
    if m < 1:
        raise NoSuchDegree(f"extension degree m={m} must be at least 1")
    if m > max_degree or q ** m > MAX_FIELD_ORDER:
        raise FieldTooLarge(f"GF({q}^{m}) exceeds the desk-scale limit (m <= {max_degree}, q^m <= 2^64)")

    if modulus is None:
        if m == 1:
            modulus = galois.Poly.Degrees([1], field=prime_field(q))
        else:
            try:
                modulus = galois.irreducible_poly(q, m, method="min")
            except (ValueError, RuntimeError) as e:
                raise NoSuchDegree(f"no irreducible polynomial of degree {m} over F_{q}") from e
    else:
        modulus = _as_poly(modulus, q)
        if modulus.degree != m or int(modulus.coeffs[0]) != 1:
            raise PreconditionViolated(f"modulus {poly_to_text(modulus)} must be monic of degree {m}")
        if not is_irreducible(modulus, q):
            raise Reducible(f"modulus {poly_to_text(modulus)} is reducible over F_{q}")

    return _build_field(q, m, tuple(poly_coeffs(modulus)))


def field_of(x) -> type[galois.FieldArray]:
    return type(x)


def element_from_coeffs(coeffs: Sequence[int], field: FieldSpec) -> galois.FieldArray:
    if len(coeffs) != field.m:
        raise DimMismatch(f"expected {field.m} coefficients, got {len(coeffs)}")
    value = 0
    for c in reversed(coeffs):
        value = value * field.q + (int(c) % field.q)
    return field.GF(value)


def element_coeffs(x, field: FieldSpec) -> list[int]:
    value = int(x)
    digits = []
    for _ in range(field.m):
        value, digit = divmod(value, field.q)
        digits.append(digit)
    return digits


def element_to_text(x, field: FieldSpec) -> str:
    return ",".join(str(c) for c in element_coeffs(x, field))


def element_from_text(text: str, field: FieldSpec) -> galois.FieldArray:
    try:
        coeffs = [int(tok) for tok in text.replace(" ", "").split(",")]
    except ValueError as e:
        raise FormatError(f"bad field element '{text}': {e}") from e
    if any(c < 0 or c >= field.q for c in coeffs):
        raise FormatError(f"coefficients of '{text}' must lie in [0, {field.q})")
    return element_from_coeffs(coeffs, field)


# ----------------------------------------------------------------------------
# Element operations
# ----------------------------------------------------------------------------

def fe_arith(a, b, op: str):
    """
    Field arithmetic on elements of one FieldSpec.

    For op="pow", b is an integer exponent; for op="inv", b is ignored.
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return np.reciprocal(a)
    if op == "div":
        if np.any(b == 0):
            raise DivisionByZero("division by zero")
        return a / b
    if op == "pow":
        exponent = int(b)
        if exponent < 0 and np.any(a == 0):
            raise DivisionByZero("negative power of zero")
        return a ** exponent
    raise ValueError(f"unknown field operation '{op}' (expected one of {', '.join(FE_OPS)})")


def frobenius(x, s: int):
    """x ** (q ** s), applied entrywise to arrays."""
    GF = type(x)
    return x ** (GF.characteristic ** (s % GF.degree))


def primitive_root_of_unity(field: FieldSpec, L: int) -> galois.FieldArray:
    """beta = generator ** ((q^m - 1) / L), an element of order exactly L."""
    if L < 1:
        raise PreconditionViolated(f"L={L} must be positive")
    if (field.order - 1) % L:
        raise OrderUnattainable(f"L={L} does not divide {field.order} - 1")
    return field.generator ** ((field.order - 1) // L)
