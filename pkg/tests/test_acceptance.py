"""Acceptance gate: one pass/fail line per criterion.

Every check is exact (integer / rational arithmetic), so the tolerance is
zero throughout.  Each test prints its verdict line even under pytest's
output capture so the gate is readable from the raw run log.
"""

import itertools
import random
from fractions import Fraction

from rankcov.gfield import make_field
from rankcov.ambient import index_to_mat
from rankcov.matlin import random_invertible, random_matrix, rank, invert
from rankcov.codes import RankCode
from rankcov.construct import (dually_qmrd, gabidulin, linearized_map_code,
                               random_code, random_linear_code)
from rankcov.cosets import annihilator, coset_profile, moebius_complete
from rankcov.covering import (LinePattern, bound_dual_distance,
                              bound_external, bound_initial_set,
                              covering_radius_exact, initial_set, is_maximal,
                              maximality_degree, min_line_cover)
from rankcov.qcomb import (build_table, gaussian_binomial,
                           macwilliams_transform, rank_sphere_size)
from rankcov.reference import example_3x3, example_dqmrd_4x4, example_mrd_4x4
from rankcov.surgery import puncture, shorten

F2 = make_field(2)
F3 = make_field(3)


def _verdict(capfd, label: str, failures, notes=()):
    line = f"CRITERION {label}: {'PASS' if not failures else 'FAIL'}"
    with capfd.disabled():
        print(line, flush=True)
        for note in notes:
            print(f"  {note}", flush=True)
    assert not failures, f"{line}\n" + "\n".join(failures)


def test_criterion_01_worked_example_3x3(capfd):
    failures = []
    C = example_3x3()
    checks = [
        ("d(C)", C.min_distance(), 2),
        ("sigma*", bound_external(C), 3),
        ("in(C)", initial_set(C).entries,
         ((1, 1), (1, 2), (2, 1), (2, 2))),
    ]
    d = C.min_distance()
    inset = set(initial_set(C).entries)
    a = C.k - d + 1
    S = frozenset((i, j) for i in range(1, a + 1) for j in range(1, C.m + 1)
                  if (i, j) not in inset)
    checks.append(("S", S, frozenset({(1, 3), (2, 3)})))
    checks.append(("lambda(S)", min_line_cover(LinePattern(a, C.m, S)), 1))
    checks.append(("initial-set bound", bound_initial_set(C), 2))
    checks.append(("rho", covering_radius_exact(C), 2))
    for name, got, want in checks:
        if got != want:
            failures.append(f"{name}: got {got}, want {want}")
    _verdict(capfd, "1 worked example 3x3", failures)


def test_criterion_02_mrd_example_full_scan(capfd):
    failures = []
    C = example_mrd_4x4()
    if not C.is_MRD():
        failures.append("is_MRD is false")
    if C.min_distance() != 4:
        failures.append(f"d = {C.min_distance()}, want 4")
    rho = covering_radius_exact(C)  # full 2^16 ambient scan
    if rho != 2:
        failures.append(f"rho = {rho}, want 2")
    if rho == C.min_distance() - 1:
        failures.append("rho unexpectedly equals d - 1")
    if maximality_degree(C, rho) != 2:
        failures.append(f"mu = {maximality_degree(C, rho)}, want 2")
    _verdict(capfd, "2 MRD example 4x4", failures)


def test_criterion_03_dually_qmrd_example(capfd):
    failures = []
    C = example_dqmrd_4x4()
    d, dp = C.min_distance(), C.dual().min_distance()
    if not C.is_dually_QMRD():
        failures.append("is_dually_QMRD is false")
    if (d, dp) != (4, 1):
        failures.append(f"(d, d_perp) = {(d, dp)}, want (4, 1)")
    if d + dp != C.k + 1:
        failures.append("d + d_perp != k + 1")
    rho = covering_radius_exact(C)
    if rho != 3:
        failures.append(f"rho = {rho}, want 3")
    if maximality_degree(C, rho) != 1:
        failures.append(f"mu = {maximality_degree(C, rho)}, want 1")
    if bound_external(C) != d:
        failures.append(f"sigma* = {bound_external(C)}, want d = {d}")
    _verdict(capfd, "3 dually QMRD example 4x4", failures)


def _displayed_completion(q, k, m, codesize, d_perp, prefix):
    """Alternative completion formula that omits the Moebius factor on
    the high-dimension sum; kept only to record which of the two
    candidate forms agrees with enumeration."""
    out = list(prefix)
    for i in range(k - d_perp + 1, k + 1):
        acc = Fraction(0)
        for u in range(k - d_perp + 1):
            dlt = i - u
            sign = -1 if dlt % 2 else 1
            inner = sum(prefix[j] * gaussian_binomial(k - j, u - j, q)
                        for j in range(u + 1))
            acc += (sign * q ** (dlt * (dlt - 1) // 2)
                    * gaussian_binomial(k - u, i - u, q) * inner)
        for u in range(k - d_perp + 1, i + 1):
            acc += gaussian_binomial(k, u, q) * Fraction(codesize,
                                                         q ** (m * (k - u)))
        out.append(acc)
    return out


def test_criterion_04_moebius_completion_oracle(capfd):
    failures = []
    rng = random.Random(104)
    derivation_ok = 0
    displayed_mismatch = 0
    trials = []
    # 200 random (C, X) pairs covering every dimension 1..5
    for t in range(200):
        dim = 1 + t % 5
        trials.append((random_linear_code(F2, 3, 3, dim, rng),
                       [random_matrix(F2, 3, 3, rng)]))
    # exhaustive X for 20 codes
    all_X = [index_to_mat(F2, 3, 3, x) for x in range(2 ** 9)]
    for t in range(20):
        trials.append((random_linear_code(F2, 3, 3, 1 + t % 5, rng), all_X))
    for C, xs in trials:
        d_perp = C.dual().min_distance()
        for X in xs:
            W = coset_profile(C, X).W
            prefix = list(W[: 3 - d_perp + 1])
            got = moebius_complete(2, 3, 3, C.cardinality(), d_perp, prefix)
            if tuple(got) != W:
                failures.append(f"dim {C.dim}: completion {got} != {W}")
            else:
                derivation_ok += 1
            alt = _displayed_completion(2, 3, 3, C.cardinality(), d_perp,
                                        prefix)
            if tuple(alt) != W:
                displayed_mismatch += 1
    if derivation_ok == 0:
        failures.append("no trials ran")
    if displayed_mismatch == 0:
        failures.append("displayed form never mismatched; forms not "
                        "distinguished")
    _verdict(capfd, "4 Moebius completion oracle", failures,
             notes=[f"fully Moebius-weighted form matched on all "
                    f"{derivation_ok} trials; the factor-omitting variant "
                    f"mismatched on {displayed_mismatch}"])


def test_criterion_05_duality_theorem_sweep(capfd):
    failures = []
    rng = random.Random(105)
    for field, k, m in ((F2, 3, 3), (F3, 2, 3)):
        for t in range(100):
            C = random_linear_code(field, k, m, rng.randrange(0, k * m + 1),
                                   rng)
            A = random_invertible(field, k, rng)
            u = rng.randrange(1, k)
            lhs = puncture(C, A, u).dual()
            rhs = shorten(C.dual(), invert(A.transpose()), u)
            if lhs != rhs:
                failures.append(f"q={field.q} k={k} m={m} dim={C.dim} u={u}")
    _verdict(capfd, "5 duality theorem sweep (200 triples)", failures)


def _enlargement_oracle(C):
    """Brute-force mu: worst distance drop over one-word enlargements."""
    d = C.min_distance()
    q, k, m = C.field.q, C.k, C.m
    words = list(C.codewords())
    drops = []
    for x in range(q ** (k * m)):
        X = index_to_mat(C.field, k, m, x)
        if C.contains(X):
            continue
        dist = min(rank(X - M) for M in words)
        drops.append(d - min(d, dist))
    return min(drops) if drops else 1


def test_criterion_06_bound_soundness_sweep(capfd):
    failures = []
    # exhaustive over every linear code of dim 1..4 in F_2^{2x3}
    checked = 0
    for dim in range(1, 5):
        for basis_rows in _rref_bases(6, dim):
            from rankcov.matlin import devectorize
            gens = [devectorize(F2, row, 2, 3) for row in basis_rows]
            C = RankCode.from_generators(F2, 2, 3, gens)
            d = C.min_distance()
            rho = covering_radius_exact(C)
            for name, bound in (("dual-distance", bound_dual_distance(C)),
                                ("sigma*", bound_external(C)),
                                ("initial-set", bound_initial_set(C))):
                if rho > bound:
                    failures.append(f"dim {dim}: rho {rho} > {name} {bound}")
            if not d - 1 < 2 * rho:
                failures.append(f"dim {dim}: d-1 >= 2 rho")
            if is_maximal(C, rho) != (rho <= d - 1):
                failures.append(f"dim {dim}: maximality flag inconsistent")
            mu = maximality_degree(C, rho)
            if mu != d - min(rho, d):
                failures.append(f"dim {dim}: mu formula mismatch")
            if mu != _enlargement_oracle(C):
                failures.append(f"dim {dim}: mu != enlargement oracle")
            # rho(C) >= d(D) for a strict supercode D
            extra = next(index_to_mat(F2, 2, 3, x) for x in range(1, 64)
                         if not C.contains(index_to_mat(F2, 2, 3, x)))
            D = RankCode.from_generators(F2, 2, 3, list(C.basis) + [extra])
            if rho < D.min_distance():
                failures.append(f"dim {dim}: rho < d(supercode)")
            checked += 1
    if checked != sum(int(gaussian_binomial(6, t, 2)) for t in range(1, 5)):
        failures.append(f"exhaustive count off: {checked}")
    _verdict(capfd, f"6 bound soundness sweep ({checked} codes, exhaustive)",
             failures)


def _rref_bases(n, t):
    """All reduced-row-echelon bases of t-dimensional subspaces of F_2^n."""
    for pivots in itertools.combinations(range(n), t):
        free = [j for j in range(n) if j not in pivots
                and any(j > p for p in pivots)]
        free_per_row = [[j for j in free if j > pivots[i]] for i in range(t)]
        slots = sum(len(f) for f in free_per_row)
        for bits in range(1 << slots):
            rows = []
            pos = 0
            for i in range(t):
                row = [0] * n
                row[pivots[i]] = 1
                for j in free_per_row[i]:
                    row[j] = (bits >> pos) & 1
                    pos += 1
                rows.append(row)
            yield rows


def test_criterion_07_transform_identities(capfd):
    failures = []
    for q in (2, 3):
        for k in range(1, 5):
            for m in range(k, 6):
                T = build_table(k, m, q)
                N = q ** (k * m)
                for j in range(k + 1):
                    s = sum(T.P[j][i] for i in range(k + 1))
                    if s != (N if j == 0 else 0):
                        failures.append(f"row sum q={q} k={k} m={m} j={j}")
                for a in range(k + 1):
                    for b in range(k + 1):
                        e = sum(T.P[a][i] * T.P[i][b] for i in range(k + 1))
                        if e != (N if a == b else 0):
                            failures.append(f"P^2 q={q} k={k} m={m}")
                for i in range(k + 1):
                    if T.P[0][i] != rank_sphere_size(i, k, m, q):
                        failures.append(f"P_i(0) q={q} k={k} m={m} i={i}")
    rng = random.Random(107)
    for _ in range(100):
        k = rng.randrange(1, 4)
        m = rng.randrange(k, 5)
        C = random_linear_code(F2, k, m, rng.randrange(0, k * m + 1), rng)
        T = build_table(k, m, 2)
        got = macwilliams_transform(C.weight_distribution(), C.cardinality(),
                                    T)
        if got != [Fraction(w) for w in C.dual().weight_distribution()]:
            failures.append(f"B* != W(dual) k={k} m={m} dim={C.dim}")
    for _ in range(100):
        k = rng.randrange(1, 3)
        m = rng.randrange(k, 4)
        C = random_code(F2, k, m, rng.randrange(1, 2 ** (k * m)), rng)
        T = build_table(k, m, 2)
        out = macwilliams_transform(C.distance_distribution(),
                                    C.cardinality(), T)
        if any(x < 0 for x in out):
            failures.append(f"negative B* entry k={k} m={m}")
    _verdict(capfd, "7 transform identities", failures)


def test_criterion_08_annihilator_identity(capfd):
    failures = []
    rng = random.Random(108)
    for t in range(20):
        C = random_code(F2, 2, 3, rng.randrange(1, 20), rng)
        poly = annihilator(C)
        for x in range(2 ** 6):
            X = index_to_mat(F2, 2, 3, x)
            W = coset_profile(C, X).W
            total = sum(poly.coeffs[j] * W[j]
                        for j in range(poly.sigma_star + 1))
            if total != 1:
                failures.append(f"code {t}, X index {x}: sum = {total}")
    _verdict(capfd, "8 annihilator identity (20 codes, exhaustive X)", failures)


def test_criterion_09_constructions(capfd):
    failures = []
    rng = random.Random(109)
    for m in range(2, 5):
        for k in range(2, m + 1):
            for d in range(2, k + 1):
                C = gabidulin(2, k, m, d)
                if not C.is_MRD():
                    failures.append(f"gabidulin(2,{k},{m},{d}) not MRD")
                for _ in range(50):
                    A = random_invertible(F2, k, rng)
                    u = rng.randrange(1, k)
                    if not puncture(C, A, u).is_MRD():
                        failures.append(
                            f"puncture of gabidulin(2,{k},{m},{d}) not MRD")
    for t in (1, 2, 3, 5, 6, 7, 9, 10, 11, 13, 14, 15):
        if not dually_qmrd(2, 4, 4, t).is_dually_QMRD():
            failures.append(f"dually_qmrd(2,4,4,{t}) fails the predicate")
    W = linearized_map_code(2, 2, 2).weight_distribution()
    support = {i for i, w in enumerate(W) if w and i}
    if not support <= {2, 4}:
        failures.append(f"linmap(2,2,2) weight support {support}")
    _verdict(capfd, "9 construction verification", failures)


def test_criterion_10_dual_spectrum_determined_by_parameters(capfd):
    failures = []
    for t in (1, 2, 3, 5, 6, 7):
        A = dually_qmrd(2, 4, 4, t)
        B = dually_qmrd(2, 4, 4, t, seed=1000 + t)  # seeded search
        if not B.is_dually_QMRD() or B.dim != t:
            failures.append(f"seeded search t={t} did not land on a "
                            "dually QMRD code")
            continue
        if A == B:
            # fall back to another seed so the pair is genuinely distinct
            B = dually_qmrd(2, 4, 4, t, seed=2000 + t)
        wa = A.dual().weight_distribution()
        wb = B.dual().weight_distribution()
        if wa != wb:
            failures.append(f"t={t}: dual spectra differ: {wa} vs {wb}")
    _verdict(capfd, "10 dual weight distribution determined by (q,k,m,dim)",
             failures)
