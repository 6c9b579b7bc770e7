"""Integer indexing of the ambient space F_q^{k x m} and cached rank tables.

A matrix is indexed by the little-endian base-q number whose digit t is
the t-th row-major entry.  For q = 2 this makes matrix addition a plain
XOR of indices, which the exhaustive scans exploit.  The packing is an
internal optimization and never leaks into serialization.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Tuple

from .gfield import FieldSpec
from .matlin import Mat, _rank_gf2

TABLE_CAP = 1 << 20


def mat_index(M: Mat) -> int:
    q = M.field.q
    idx = 0
    for x in reversed(M.entries):
        idx = idx * q + x
    return idx


def index_to_mat(field: FieldSpec, k: int, m: int, idx: int) -> Mat:
    q = field.q
    entries = []
    for _ in range(k * m):
        entries.append(idx % q)
        idx //= q
    return Mat(field, k, m, entries)


def index_digits(q: int, n: int, idx: int) -> Tuple[int, ...]:
    out = []
    for _ in range(n):
        out.append(idx % q)
        idx //= q
    return tuple(out)


def add_index(field: FieldSpec, n: int, a: int, b: int) -> int:
    """Index of the entrywise sum of the matrices indexed a and b."""
    q = field.q
    if q == 2:
        return a ^ b
    out = 0
    mult = 1
    for _ in range(n):
        out += field.add(a % q, b % q) * mult
        a //= q
        b //= q
        mult *= q
    return out


def neg_index(field: FieldSpec, n: int, a: int) -> int:
    q = field.q
    if q == 2:
        return a
    out = 0
    mult = 1
    for _ in range(n):
        out += field.neg(a % q) * mult
        a //= q
        mult *= q
    return out


def _rank_generic(field: FieldSpec, k: int, m: int, digits) -> int:
    from .matlin import _rref_rows
    rows = [list(digits[i * m:(i + 1) * m]) for i in range(k)]
    _, pivots = _rref_rows(field, rows)
    return len(pivots)


@lru_cache(maxsize=8)
def rank_table(field: FieldSpec, k: int, m: int) -> bytes:
    """rank of every matrix in F_q^{k x m}, indexed by mat_index."""
    q = field.q
    n = q ** (k * m)
    if n > TABLE_CAP:
        raise ValueError(f"ambient size {n} exceeds the rank-table cap")
    out = bytearray(n)
    if q == 2:
        mask = (1 << m) - 1
        for idx in range(n):
            rows = [(idx >> (i * m)) & mask for i in range(k)]
            out[idx] = _rank_gf2(rows)
    else:
        for idx in range(n):
            out[idx] = _rank_generic(field, k, m, index_digits(q, k * m, idx))
    return bytes(out)
