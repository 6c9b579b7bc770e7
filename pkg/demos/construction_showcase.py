"""Build codes from each constructor and check their headline properties.

Run from the repository root after installing the package:

    python3 demos/construction_showcase.py
"""

from rankcov.cli import serialize
from rankcov.construct import (dually_qmrd, gabidulin, linearized_map_code,
                               nested_gabidulin)
from rankcov.covering import covering_radius_exact


def main():
    print("-- MRD code via linearized evaluation: gabidulin(q=2, k=3, m=3, d=2)")
    C = gabidulin(2, 3, 3, 2)
    print(f"   dim {C.dim}, d = {C.min_distance()}, MRD: {C.is_MRD()}, "
          f"rho = {covering_radius_exact(C)}")
    print()

    print("-- nested MRD pair E < D in F_2^{3x3}")
    E, D = nested_gabidulin(2, 3, 3, 1, 2)
    print(f"   dims {E.dim} < {D.dim}; "
          f"E inside D: {all(D.contains(B) for B in E.basis)}; "
          f"duals MRD: {E.dual().is_MRD()} / {D.dual().is_MRD()}")
    print()

    print("-- dually QMRD code squeezed between the pair: dim 5 in F_2^{4x4}")
    Q = dually_qmrd(2, 4, 4, 5)
    print(f"   d = {Q.min_distance()}, d(dual) = {Q.dual().min_distance()}, "
          f"d + d(dual) = k + 1: "
          f"{Q.min_distance() + Q.dual().min_distance() == Q.k + 1}")
    print(f"   dually QMRD: {Q.is_dually_QMRD()}")
    print()

    print("-- all GF(4)-linear maps of GF(16) as 4x4 binary matrices")
    L = linearized_map_code(2, 2, 2)
    W = L.weight_distribution()
    print(f"   dim {L.dim}, weight distribution {W}")
    print(f"   nonzero ranks are multiples of s = 2: "
          f"{all(w == 0 for i, w in enumerate(W) if i % 2 and i)}")
    print()

    print("-- the dim-5 dually QMRD code in the on-disk exchange format:")
    print(serialize(Q), end="")


if __name__ == "__main__":
    main()
