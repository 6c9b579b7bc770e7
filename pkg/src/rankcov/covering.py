"""Exact covering radius and every covering-radius bound.

The exact value comes from a full scan of the ambient space, accelerated
by a precomputed rank table, an inner-loop cutoff at the running maximum,
and an early exit once the running maximum meets the best proven upper
bound (at which point equality is certified).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from .ambient import TABLE_CAP, index_digits, mat_index, rank_table
from .codes import GuardExceeded, RankCode
from .qcomb import build_table, macwilliams_transform

DEFAULT_GUARD = 1 << 24


def covering_radius_exact(C: RankCode, *, guard: int = DEFAULT_GUARD,
                          force: bool = False,
                          upper_bound: Optional[int] = None,
                          threads: int = 1) -> int:
    """max over ambient X of min over codewords M of rank(X - M)."""
    q = C.field.q
    n = C.k * C.m
    N = q ** n
    if C.is_full_space():
        return 0
    if N > guard and not force:
        raise GuardExceeded(
            f"ambient scan over {N} matrices exceeds the guard {guard}; "
            "pass force=True to run it anyway")
    cw = sorted(mat_index(M) for M in C.codewords(guard=max(guard, N)))
    table = rank_table(C.field, C.k, C.m) if N <= TABLE_CAP else None

    if threads > 1:
        chunk = (N + threads - 1) // threads
        shared_best = [0]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futs = [pool.submit(_scan_range, C, cw, table, lo,
                                min(lo + chunk, N), upper_bound, shared_best)
                    for lo in range(0, N, chunk)]
            return max(f.result() for f in futs)
    return _scan_range(C, cw, table, 0, N, upper_bound, [0])


def _scan_range(C: RankCode, cw: List[int], table, lo: int, hi: int,
                upper_bound: Optional[int], shared_best: List[int]) -> int:
    q = C.field.q
    n = C.k * C.m
    best = shared_best[0]
    if q == 2 and table is not None:
        for X in range(lo, hi):
            mn = n
            for c in cw:
                r = table[X ^ c]
                if r < mn:
                    mn = r
                    if mn <= best:
                        break
            if mn > best:
                best = mn
                shared_best[0] = max(shared_best[0], best)
                if upper_bound is not None and best >= upper_bound:
                    return best
            elif shared_best[0] > best:
                best = shared_best[0]
                if upper_bound is not None and best >= upper_bound:
                    return best
        return best
    F = C.field
    cw_digits = [index_digits(q, n, c) for c in cw]
    for X in range(lo, hi):
        xd = index_digits(q, n, X)
        mn = n
        for cd in cw_digits:
            if table is not None:
                diff = 0
                mult = 1
                for a, b in zip(xd, cd):
                    diff += F.sub(a, b) * mult
                    mult *= q
                r = table[diff]
            else:
                from .ambient import _rank_generic
                r = _rank_generic(F, C.k, C.m,
                                  [F.sub(a, b) for a, b in zip(xd, cd)])
            if r < mn:
                mn = r
                if mn <= best:
                    break
        if mn > best:
            best = mn
            shared_best[0] = max(shared_best[0], best)
            if upper_bound is not None and best >= upper_bound:
                return best
    return best


# -- individual bounds --

def bound_dual_distance(C: RankCode) -> int:
    """k - d(dual) + 1, an upper bound on the covering radius."""
    if not C.linear:
        raise ValueError("the dual distance bound needs a linear code")
    if C.is_full_space():
        raise ValueError("the dual of the full space has no minimum distance")
    return C.k - C.dual().min_distance() + 1


def external_distance(C: RankCode) -> int:
    """Number of indices i >= 1 with a positive transformed entry."""
    table = build_table(C.k, C.m, C.field.q)
    Bstar = macwilliams_transform(C.distance_distribution(), C.cardinality(),
                                  table)
    return sum(1 for i in range(1, C.k + 1) if Bstar[i] > 0)


def bound_external(C: RankCode) -> int:
    return external_distance(C)


@dataclass(frozen=True)
class InitialSet:
    entries: Tuple[Tuple[int, int], ...]  # 1-based (row, col), sorted


def initial_set(C: RankCode) -> InitialSet:
    """First nonzero positions of the canonical basis, 1-based."""
    if not C.linear or C.dim == 0:
        raise ValueError("the initial set needs a nonzero linear code")
    cells = []
    for B in C.basis:
        t = next(t for t, x in enumerate(B.entries) if x)
        cells.append((t // C.m + 1, t % C.m + 1))
    return InitialSet(tuple(sorted(cells)))


@dataclass(frozen=True)
class LinePattern:
    a: int
    b: int
    cells: FrozenSet[Tuple[int, int]]  # 1-based cells within [a] x [b]

    def __post_init__(self):
        for (i, j) in self.cells:
            if not (1 <= i <= self.a and 1 <= j <= self.b):
                raise ValueError(f"cell {(i, j)} outside [{self.a}] x [{self.b}]")


def min_line_cover(S: LinePattern) -> int:
    """Minimum rows+columns covering all cells; equals the maximum
    matching size of the row/column bipartite graph."""
    adj: Dict[int, List[int]] = {}
    for (i, j) in sorted(S.cells):
        adj.setdefault(i, []).append(j)
    match_col: Dict[int, int] = {}

    def augment(row: int, seen: Set[int]) -> bool:
        for col in adj.get(row, ()):
            if col in seen:
                continue
            seen.add(col)
            if col not in match_col or augment(match_col[col], seen):
                match_col[col] = row
                return True
        return False

    size = 0
    for row in sorted(adj):
        if augment(row, set()):
            size += 1
    return size


def bound_initial_set(C: RankCode) -> int:
    """d - 1 + lambda(S), S the complement of the initial set in the
    top d-distance-constrained strip."""
    if not C.linear or C.dim == 0:
        raise ValueError("the initial set bound needs a nonzero linear code")
    d = C.min_distance()
    inset = set(initial_set(C).entries)
    a = C.k - d + 1
    cells = frozenset((i, j) for i in range(1, a + 1)
                      for j in range(1, C.m + 1) if (i, j) not in inset)
    return d - 1 + min_line_cover(LinePattern(a, C.m, cells))


# -- maximality --

def is_maximal(C: RankCode, rho: Optional[int] = None) -> bool:
    if C.cardinality() == 1 or C.is_full_space():
        return True
    if rho is None:
        rho = covering_radius_exact(C)
    return rho <= C.min_distance() - 1


def maximality_degree(C: RankCode, rho: Optional[int] = None) -> int:
    """Minimum drop in minimum distance over all strict enlargements."""
    if C.is_full_space():
        return 1
    if C.cardinality() < 2:
        raise ValueError("the maximality degree needs at least two codewords")
    if rho is None:
        rho = covering_radius_exact(C)
    d = C.min_distance()
    return d - min(rho, d)


@dataclass
class BoundsReport:
    q: int
    k: int
    m: int
    cardinality: int
    dim: Optional[int] = None
    min_distance: Optional[int] = None
    rho_exact: Optional[int] = None
    bound_dual_distance: Optional[int] = None
    bound_external: Optional[int] = None
    bound_initial_set: Optional[int] = None
    bound_mrd: Optional[int] = None
    bound_dqmrd: Optional[int] = None
    packing_lower: Optional[int] = None
    is_mrd: Optional[bool] = None
    is_dually_qmrd: Optional[bool] = None
    maximal: Optional[bool] = None
    maximality_degree: Optional[int] = None

    def upper_bounds(self) -> List[int]:
        return [b for b in (self.bound_dual_distance, self.bound_external,
                            self.bound_initial_set, self.bound_mrd,
                            self.bound_dqmrd) if b is not None]


def bounds_report(C: RankCode, *, guard: int = DEFAULT_GUARD,
                  force: bool = False, threads: int = 1) -> BoundsReport:
    """Every applicable bound plus, when within the guard, exact rho."""
    rep = BoundsReport(q=C.field.q, k=C.k, m=C.m,
                       cardinality=C.cardinality(),
                       dim=C.dim if C.linear else None)
    full = C.is_full_space()
    if C.cardinality() >= 2:
        rep.min_distance = C.min_distance(guard=guard)
        if not full:
            rep.packing_lower = (rep.min_distance + 1) // 2
    if C.linear and not full:
        rep.bound_dual_distance = bound_dual_distance(C)
    if not full:
        rep.bound_external = bound_external(C)
    if C.linear and C.dim > 0:
        rep.bound_initial_set = bound_initial_set(C)
    if C.cardinality() >= 2:
        rep.is_mrd = C.is_MRD()
        if rep.is_mrd:
            rep.bound_mrd = rep.min_distance - 1
    if C.linear:
        rep.is_dually_qmrd = C.is_dually_QMRD()
        if rep.is_dually_qmrd:
            rep.bound_dqmrd = rep.min_distance
    N = C.field.q ** (C.k * C.m)
    if full:
        rep.rho_exact = 0
    elif N <= guard or force:
        ub = min(rep.upper_bounds(), default=None)
        rep.rho_exact = covering_radius_exact(C, guard=guard, force=force,
                                              upper_bound=ub, threads=threads)
    if rep.rho_exact is not None:
        if full or C.cardinality() == 1:
            rep.maximal = True
        else:
            rep.maximal = rep.rho_exact <= rep.min_distance - 1
        if full:
            rep.maximality_degree = 1
        elif C.cardinality() >= 2:
            rep.maximality_degree = maximality_degree(C, rep.rho_exact)
    return rep
