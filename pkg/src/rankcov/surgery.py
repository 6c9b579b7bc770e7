"""Puncturing and shortening of rank-metric codes.

Both operations act through an invertible row transform A and a row count
u: puncturing projects A*C onto its last k-u rows, shortening does the
same after keeping only the matrices of A*C whose first u rows vanish.
They are trace-dual to each other.
"""

from __future__ import annotations

from typing import List

from .matlin import Mat, rank
from .codes import RankCode


def _check_spec(C: RankCode, A: Mat, u: int) -> None:
    if A.field != C.field or A.k != C.k or A.m != C.k:
        raise ValueError("A must be k x k over the code's field")
    if rank(A) != C.k:
        raise ValueError("A must be invertible")
    if not 1 <= u <= C.k - 1:
        raise ValueError(f"u must lie in [1, {C.k - 1}]")


def _project(M: Mat, u: int) -> Mat:
    """Projection on the last k-u rows."""
    return Mat(M.field, M.k - u, M.m, M.entries[u * M.m:])


def left_mul(A: Mat, C: RankCode) -> RankCode:
    """The isometric image A*C = {A M : M in C}."""
    if A.field != C.field or A.k != C.k or A.m != C.k:
        raise ValueError("A must be k x k over the code's field")
    if rank(A) != C.k:
        raise ValueError("A must be invertible")
    if C.linear:
        return RankCode.from_generators(C.field, C.k, C.m,
                                        [A @ B for B in C.basis])
    return RankCode.from_codewords(C.field, C.k, C.m,
                                   [A @ M for M in C.words])


def puncture(C: RankCode, A: Mat, u: int) -> RankCode:
    """Projection of A*C onto its last k-u rows (deduplicated for sets)."""
    _check_spec(C, A, u)
    if C.linear:
        gens = [_project(A @ B, u) for B in C.basis]
        return RankCode.from_generators(C.field, C.k - u, C.m, gens)
    images = {_project(A @ M, u) for M in C.words}
    return RankCode.from_codewords(C.field, C.k - u, C.m, list(images))


def shorten(C: RankCode, A: Mat, u: int) -> RankCode:
    """Project the matrices of A*C whose first u rows are zero."""
    _check_spec(C, A, u)
    zero = Mat.zero(C.field, C.k, C.m)
    if not C.contains(zero):
        raise ValueError("shortening requires 0 to be a codeword")
    if C.linear:
        return _shorten_linear(C, A, u)
    kept = [_project(A @ M, u) for M in C.words
            if all(x == 0 for x in (A @ M).entries[: u * C.m])]
    return RankCode.from_codewords(C.field, C.k - u, C.m, kept)


def _shorten_linear(C: RankCode, A: Mat, u: int) -> RankCode:
    """Solve for span coefficients that zero the first u rows of A*C."""
    F = C.field
    t = len(C.basis)
    if t == 0:
        return RankCode.zero_code(F, C.k - u, C.m)
    transformed = [A @ B for B in C.basis]
    heads: List[List[int]] = []  # columns: first u*m entries of each generator
    for M in transformed:
        heads.append(list(M.entries[: u * C.m]))
    from .matlin import kernel
    n_constraints = u * C.m
    sol = kernel(Mat(F, n_constraints, t,
                     [heads[j][i] for i in range(n_constraints)
                      for j in range(t)]))
    gens = []
    for coeffs in sol.basis:
        M = Mat.zero(F, C.k, C.m)
        for c, B in zip(coeffs, transformed):
            if c:
                M = M + B.scale(c)
        gens.append(_project(M, u))
    return RankCode.from_generators(F, C.k - u, C.m, gens)
