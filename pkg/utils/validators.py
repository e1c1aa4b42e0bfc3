"""
Input validation utilities for rankforge

Each validator returns (is_valid, error_message) so the CLI can report every
problem with a parameter set before building anything.
"""

import re
from math import gcd
from pathlib import Path
from typing import Sequence, Tuple

from core.finite_field import is_prime, multiplicative_order

DIGITS_PATTERN = re.compile(r'^[0-9]+$')


def validate_prime(q: int) -> Tuple[bool, str]:
    """
    Validate the base field size

    Args:
        q: Candidate field size

    Returns:
        Tuple[bool, str]: (is_valid, error_message)
    """
    if not isinstance(q, int) or q < 2:
        return False, f"q must be an integer >= 2, got {q!r}"
    if not is_prime(q):
        return False, f"q={q} is not prime (prime-power base fields are not supported)"
    return True, ""


def validate_circulant_size(q: int, L: int) -> Tuple[bool, str]:
    if not isinstance(L, int) or L < 2:
        return False, f"L must be an integer >= 2, got {L!r}"
    if gcd(q, L) != 1:
        return False, f"L={L} must be coprime to q={q}"
    return True, ""


def validate_dimensions(q: int, L: int, n: int, k: int) -> Tuple[bool, str]:
    """
    Validate 1 <= k <= n <= m_L

    Returns:
        Tuple[bool, str]: (is_valid, error_message)
    """
    if not 1 <= k <= n:
        return False, f"need 1 <= k <= n, got k={k}, n={n}"
    m_L = multiplicative_order(q, L)
    if n > m_L:
        return False, f"n={n} exceeds m_L={m_L} (order of {q} modulo {L})"
    return True, ""


def validate_exponents(exponents: Sequence[int], L: int, n: int) -> Tuple[bool, str]:
    """
    Validate the shift exponents l_0 .. l_{n-1}

    Returns:
        Tuple[bool, str]: (is_valid, error_message)
    """
    if len(exponents) != n:
        return False, f"expected {n} exponents, got {len(exponents)}"
    bad = [l for l in exponents if not 0 <= l < L]
    if bad:
        return False, f"exponents {bad} lie outside [0, {L})"
    if len(set(exponents)) != len(exponents):
        return False, f"exponents {list(exponents)} are not distinct"
    return True, ""


def validate_message(digits: str, q: int, length: int) -> Tuple[bool, str]:
    """
    Validate a message digit string such as "000001"

    Args:
        digits: One digit in [0, q) per message symbol
        q: Field size
        length: Expected number of digits (J k)
    """
    if not digits or not DIGITS_PATTERN.match(digits):
        return False, f"message {digits!r} must be a string of digits"
    if len(digits) != length:
        return False, f"message must have {length} digits, got {len(digits)}"
    if any(int(ch) >= q for ch in digits):
        return False, f"message digits must lie in [0, {q})"
    return True, ""


def validate_file_path(path: str, must_exist: bool = True) -> Tuple[bool, str]:
    """
    Validate file path

    Args:
        path: File path to validate
        must_exist: If True, check if file exists

    Returns:
        Tuple[bool, str]: (is_valid, error_message)
    """
    if not path or not path.strip():
        return False, "File path cannot be empty"

    file_path = Path(path.strip())

    if must_exist and not file_path.exists():
        return False, f"File not found: {path}"

    if must_exist and not file_path.is_file():
        return False, f"Path is not a file: {path}"

    if not must_exist and file_path.parent and not file_path.parent.exists():
        return False, f"Folder not found: {file_path.parent}"

    return True, ""


def validate_cap(cap: int) -> Tuple[bool, str]:
    if not isinstance(cap, int) or cap < 1:
        return False, f"enumeration cap must be a positive integer, got {cap!r}"
    return True, ""
