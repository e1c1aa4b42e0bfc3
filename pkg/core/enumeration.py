"""
Exhaustive message enumeration shared by the codebook oracles.

Messages are visited in lexicographic coefficient order (first entry most
significant) in fixed-size chunks so that the index range can be split across
workers; results combine with min (ranks) or multiset union (codebooks).
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator

import galois
import numpy as np

from core.constants import DEFAULT_CHUNK_SIZE
from core.errors import EnumerationTooLarge
from core.linalg import rank_fq


def check_cap(total: int, cap: int) -> None:
    if total > cap:
        raise EnumerationTooLarge(total, cap)


def message_count(GF: type[galois.FieldArray], length: int) -> int:
    return GF.order ** length


def message_block(GF: type[galois.FieldArray], length: int, start: int, stop: int):
    """Rows start..stop-1 of the lexicographic message list, as a (stop-start) x length array."""
    indices = np.arange(start, stop, dtype=object if GF.order ** length >= 2 ** 62 else np.int64)
    digits = np.empty((stop - start, length), dtype=np.int64)
    for position in range(length - 1, -1, -1):
        digits[:, position] = (indices % GF.order).astype(np.int64)
        indices = indices // GF.order
    return GF(digits)


def iter_message_chunks(
    GF: type[galois.FieldArray],
    length: int,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    start: int = 0,
    stop: int | None = None,
) -> Iterator:
    """Yield consecutive message blocks covering [start, stop)."""
    stop = message_count(GF, length) if stop is None else stop
    for lo in range(start, stop, chunk_size):
        yield message_block(GF, length, lo, min(lo + chunk_size, stop))


def codeword_key(M) -> tuple:
    """Canonical, hashable serialization of a codeword matrix."""
    return (M.shape, M.view(np.ndarray).astype(np.int64).tobytes())


def codebook_multiset(codewords: Iterable) -> Counter:
    return Counter(codeword_key(M) for M in codewords)


def min_nonzero_rank(codewords: Iterable) -> int | None:
    """Smallest rank over the nonzero codewords, None if all are zero."""
    best = None
    for M in codewords:
        if not np.any(M.view(np.ndarray)):
            continue
        r = rank_fq(M)
        best = r if best is None else min(best, r)
    return best
