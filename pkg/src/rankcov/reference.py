"""Built-in worked instances with independently verified invariants.

These three codes serve as verification anchors for the whole library:
their minimum distances, covering radii, bound values and classification
flags are known exactly and are asserted by the acceptance suite and by
the `verify-paper` CLI command.
"""

from __future__ import annotations

from .gfield import make_field
from .matlin import Mat
from .codes import RankCode

_F2 = make_field(2)


def _code(k: int, m: int, rows_list) -> RankCode:
    mats = [Mat.from_rows(_F2, rows) for rows in rows_list]
    return RankCode.from_generators(_F2, k, m, mats)


def example_3x3() -> RankCode:
    """Binary 3x3 code of dimension 4: d = 2, rho = 2, external distance 3,
    initial-set bound 2."""
    return _code(3, 3, [
        [[1, 0, 0], [0, 0, 1], [0, 0, 0]],
        [[0, 1, 0], [0, 0, 0], [1, 0, 0]],
        [[0, 0, 0], [1, 0, 0], [0, 1, 0]],
        [[0, 0, 0], [0, 1, 1], [1, 0, 0]],
    ])


def example_3x3_dual_members():
    """Three members of the dual of example_3x3, of ranks 1, 2 and 3."""
    return [Mat.from_rows(_F2, rows) for rows in (
        [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
        [[0, 0, 0], [1, 0, 0], [0, 1, 0]],
        [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
    )]


def example_mrd_4x4() -> RankCode:
    """Binary 4x4 MRD code of dimension 4: d = 4, rho = 2, degree 2."""
    return _code(4, 4, [
        [[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]],
        [[0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1], [1, 1, 0, 0]],
        [[0, 0, 1, 0], [0, 1, 1, 1], [1, 0, 1, 0], [1, 0, 0, 1]],
        [[0, 0, 0, 1], [1, 1, 1, 0], [0, 1, 0, 1], [0, 1, 1, 1]],
    ])


def example_dqmrd_4x4() -> RankCode:
    """Binary 4x4 dually quasi-MRD code of dimension 3: d = 4, dual
    distance 1, rho = 3, degree 1."""
    return _code(4, 4, [
        [[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]],
        [[0, 1, 0, 0], [1, 0, 1, 1], [0, 0, 0, 1], [1, 1, 0, 0]],
        [[0, 0, 1, 0], [0, 1, 1, 1], [1, 0, 1, 0], [1, 0, 0, 1]],
    ])
