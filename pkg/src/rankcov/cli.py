"""Command-line front end and the rmc code-file format.

File format (bit-exact): line 1 `rmc 1`; then `q <int>`, `k <int>`,
`m <int>`, `kind linear|set`, `count <t>`; then t blocks, each k lines of
m space-separated integers in [0, q), blocks separated by one blank line.
`#` starts a comment anywhere.  Entries are the integer element encoding
of GF(q).

Exit codes: 0 success, 2 parse error, 3 search-guard refusal.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import construct, cosets, covering, reference, surgery
from .ambient import index_to_mat, mat_index
from .codes import GuardExceeded, RankCode
from .gfield import field_from_order
from .matlin import Mat, rank, random_invertible

EXIT_PARSE = 2
EXIT_GUARD = 3


class ParseError(Exception):
    def __init__(self, path: str, line: int, msg: str):
        super().__init__(f"{path}:{line}: {msg}")


def parse(path: str) -> RankCode:
    """Read an rmc file into a RankCode."""
    with open(path) as fh:
        raw = fh.read().splitlines()
    lines = []  # (lineno, stripped content), comments removed
    for no, line in enumerate(raw, start=1):
        line = line.split("#", 1)[0].rstrip()
        lines.append((no, line))
    pos = 0

    def next_content() -> tuple:
        nonlocal pos
        while pos < len(lines) and not lines[pos][1].strip():
            pos += 1
        if pos >= len(lines):
            raise ParseError(path, len(raw) + 1, "unexpected end of file")
        item = lines[pos]
        pos += 1
        return item

    def header(key: str) -> str:
        no, line = next_content()
        parts = line.split()
        if len(parts) != 2 or parts[0] != key:
            raise ParseError(path, no, f"expected `{key} <value>`, got {line!r}")
        return parts[1]

    no, first = next_content()
    if first.split() != ["rmc", "1"]:
        raise ParseError(path, no, "missing `rmc 1` header")

    def intfield(key: str) -> int:
        v = header(key)
        try:
            return int(v)
        except ValueError:
            raise ParseError(path, lines[pos - 1][0], f"{key} must be an integer")

    q = intfield("q")
    k = intfield("k")
    m = intfield("m")
    kind = header("kind")
    if kind not in ("linear", "set"):
        raise ParseError(path, lines[pos - 1][0], "kind must be linear or set")
    count = intfield("count")
    try:
        field = field_from_order(q)
    except ValueError as exc:
        raise ParseError(path, 2, str(exc))
    mats = []
    for _ in range(count):
        rows = []
        for _ in range(k):
            no, line = next_content()
            try:
                row = [int(x) for x in line.split()]
            except ValueError:
                raise ParseError(path, no, "matrix entries must be integers")
            if len(row) != m:
                raise ParseError(path, no, f"expected {m} entries, got {len(row)}")
            for x in row:
                if not 0 <= x < q:
                    raise ParseError(path, no, f"entry {x} outside [0, {q})")
            rows.append(row)
        mats.append(Mat.from_rows(field, rows))
    while pos < len(lines):
        if lines[pos][1].strip():
            raise ParseError(path, lines[pos][0], "trailing content after blocks")
        pos += 1
    try:
        if kind == "linear":
            return RankCode.from_generators(field, k, m, mats)
        return RankCode.from_codewords(field, k, m, mats)
    except ValueError as exc:
        raise ParseError(path, 1, str(exc))


def serialize(C: RankCode) -> str:
    """Render a RankCode in the rmc format (canonical basis / sorted set)."""
    mats = list(C.basis) if C.linear else list(C.words)
    out = ["rmc 1", f"q {C.field.q}", f"k {C.k}", f"m {C.m}",
           f"kind {'linear' if C.linear else 'set'}", f"count {len(mats)}"]
    for M in mats:
        out.append("")
        for i in range(M.k):
            out.append(" ".join(str(x) for x in M.row(i)))
    return "\n".join(out) + "\n"


def _emit(pairs) -> None:
    for key, value in sorted(pairs):
        print(f"{key} {value}")


def _cmd_info(args) -> int:
    C = parse(args.file)
    pairs = [("q", C.field.q), ("k", C.k), ("m", C.m),
             ("kind", "linear" if C.linear else "set")]
    if C.linear:
        pairs.append(("dim", C.dim))
    pairs.append(("size", C.cardinality()))
    if C.cardinality() >= 2:
        pairs.append(("min_distance", C.min_distance()))
    _emit(pairs)
    return 0


def _report_pairs(rep: covering.BoundsReport):
    for key in ("q", "k", "m", "cardinality", "dim", "min_distance",
                "rho_exact", "bound_dual_distance", "bound_external",
                "bound_initial_set", "bound_mrd", "bound_dqmrd",
                "packing_lower", "is_mrd", "is_dually_qmrd", "maximal",
                "maximality_degree"):
        value = getattr(rep, key)
        if value is not None:
            yield key, str(value).lower() if isinstance(value, bool) else value


def _cmd_bounds(args) -> int:
    C = parse(args.file)
    rep = covering.bounds_report(C, force=args.force, threads=args.threads)
    _emit(_report_pairs(rep))
    return 0


def _cmd_covering_radius(args) -> int:
    C = parse(args.file)
    rho = covering.covering_radius_exact(C, force=args.force,
                                         threads=args.threads)
    _emit([("rho_exact", rho)])
    return 0


def _cmd_dual(args) -> int:
    C = parse(args.file)
    sys.stdout.write(serialize(C.dual()))
    return 0


def _cmd_cosets(args) -> int:
    C = parse(args.file)
    if args.X is not None:
        X = index_to_mat(C.field, C.k, C.m, args.X)
        prof = cosets.coset_profile(C, X)
        _emit([("minweight", prof.minweight),
               ("weights", " ".join(str(w) for w in prof.W))])
        return 0
    if not C.linear:
        print("full coset tables require a linear code", file=sys.stderr)
        return EXIT_PARSE
    N = C.field.q ** (C.k * C.m)
    if N > covering.DEFAULT_GUARD and not args.force:
        print(f"coset table over {N} matrices exceeds the guard; use --force",
              file=sys.stderr)
        return EXIT_GUARD
    seen = set()
    pairs = []
    for idx in range(N):
        if idx in seen:
            continue
        X = index_to_mat(C.field, C.k, C.m, idx)
        prof = cosets.coset_profile(C, X)
        for M in C.codewords():
            seen.add(mat_index(M + X))
        pairs.append((f"coset_{idx:0{len(str(N - 1))}d}",
                      " ".join(str(w) for w in prof.W)))
    _emit(pairs)
    return 0


def _load_transform(args, C: RankCode) -> Mat:
    if args.A is not None:
        A_code = parse(args.A)
        if not A_code.linear or A_code.dim != 1:
            raise ParseError(args.A, 1, "transform file must hold one matrix "
                                        "(kind linear, a single k x k generator)")
        A = A_code.basis[0]
    else:
        A = random_invertible(C.field, C.k, args.seed)
    if A.k != C.k or A.m != C.k or rank(A) != C.k:
        raise ParseError(args.A or "<seed>", 1, "transform must be k x k invertible")
    return A


def _cmd_puncture(args) -> int:
    C = parse(args.file)
    A = _load_transform(args, C)
    sys.stdout.write(serialize(surgery.puncture(C, A, args.u)))
    return 0


def _cmd_shorten(args) -> int:
    C = parse(args.file)
    A = _load_transform(args, C)
    sys.stdout.write(serialize(surgery.shorten(C, A, args.u)))
    return 0


def _cmd_initial_set(args) -> int:
    C = parse(args.file)
    inset = covering.initial_set(C)
    d = C.min_distance() if C.cardinality() >= 2 else None
    pairs = [("cells", " ".join(f"({i},{j})" for i, j in inset.entries))]
    if d is not None:
        a = C.k - d + 1
        cells = frozenset((i, j) for i in range(1, a + 1)
                          for j in range(1, C.m + 1)
                          if (i, j) not in set(inset.entries))
        pairs.append(("lambda", covering.min_line_cover(
            covering.LinePattern(a, C.m, cells))))
        pairs.append(("bound_initial_set", covering.bound_initial_set(C)))
    _emit(pairs)
    return 0


def _cmd_gen(args) -> int:
    if args.family == "gabidulin":
        C = construct.gabidulin(args.q, args.k, args.m, args.d)
    elif args.family == "qmrd":
        C = construct.dually_qmrd(args.q, args.k, args.m, args.t,
                                  seed=args.seed if args.randomize else None)
    elif args.family == "linmap":
        C = construct.linearized_map_code(args.q, args.s, args.r)
    else:  # random
        field = field_from_order(args.q)
        if args.dim is not None:
            C = construct.random_linear_code(field, args.k, args.m,
                                             args.dim, args.seed)
        elif args.size is not None:
            C = construct.random_code(field, args.k, args.m,
                                      args.size, args.seed)
        else:
            print("gen random needs --dim or --size", file=sys.stderr)
            return EXIT_PARSE
    sys.stdout.write(serialize(C))
    return 0


def _verify_checks():
    yield "example_3x3_min_distance", lambda: reference.example_3x3().min_distance() == 2
    yield "example_3x3_external_distance", \
        lambda: covering.external_distance(reference.example_3x3()) == 3
    yield "example_3x3_initial_set", \
        lambda: (covering.initial_set(reference.example_3x3()).entries
                 == ((1, 1), (1, 2), (2, 1), (2, 2)))
    yield "example_3x3_initial_set_bound", \
        lambda: covering.bound_initial_set(reference.example_3x3()) == 2
    yield "example_3x3_rho", \
        lambda: covering.covering_radius_exact(reference.example_3x3()) == 2
    yield "example_mrd_is_mrd", lambda: reference.example_mrd_4x4().is_MRD()
    yield "example_mrd_min_distance", \
        lambda: reference.example_mrd_4x4().min_distance() == 4
    yield "example_mrd_rho", \
        lambda: covering.covering_radius_exact(reference.example_mrd_4x4()) == 2
    yield "example_mrd_degree", \
        lambda: covering.maximality_degree(reference.example_mrd_4x4()) == 2
    yield "example_dqmrd_is_dually_qmrd", \
        lambda: reference.example_dqmrd_4x4().is_dually_QMRD()
    yield "example_dqmrd_rho", \
        lambda: covering.covering_radius_exact(reference.example_dqmrd_4x4()) == 3
    yield "example_dqmrd_degree", \
        lambda: covering.maximality_degree(reference.example_dqmrd_4x4()) == 1
    yield "example_dqmrd_external_distance", \
        lambda: covering.external_distance(reference.example_dqmrd_4x4()) == 4


def _cmd_verify_paper(args) -> int:
    failed = 0
    for name, check in _verify_checks():
        ok = bool(check())
        print(f"{name} {'pass' if ok else 'fail'}")
        failed += not ok
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rankcov",
                                description="Exact analysis of rank-metric "
                                            "matrix codes")
    p.add_argument("--seed", type=int, default=0, help="RNG seed")
    p.add_argument("--force", action="store_true",
                   help="override the exhaustive-search guard")
    p.add_argument("--threads", type=int, default=1,
                   help="worker threads for the covering-radius scan")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn in (("info", _cmd_info), ("bounds", _cmd_bounds),
                     ("covering-radius", _cmd_covering_radius),
                     ("dual", _cmd_dual), ("initial-set", _cmd_initial_set)):
        sp = sub.add_parser(name)
        sp.add_argument("file")
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("cosets")
    sp.add_argument("file")
    sp.add_argument("--X", type=int, default=None,
                    help="ambient matrix index; omit for the full table")
    sp.set_defaults(fn=_cmd_cosets)

    for name, fn in (("puncture", _cmd_puncture), ("shorten", _cmd_shorten)):
        sp = sub.add_parser(name)
        sp.add_argument("file")
        sp.add_argument("--A", default=None,
                        help="rmc file holding the k x k transform; "
                             "omit to derive one from --seed")
        sp.add_argument("--u", type=int, required=True)
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("gen")
    gen_sub = sp.add_subparsers(dest="family", required=True)
    g = gen_sub.add_parser("gabidulin")
    for flag in ("q", "k", "m", "d"):
        g.add_argument(f"--{flag}", type=int, required=True)
    g.set_defaults(fn=_cmd_gen)
    g = gen_sub.add_parser("qmrd")
    for flag in ("q", "k", "m", "t"):
        g.add_argument(f"--{flag}", type=int, required=True)
    g.add_argument("--randomize", action="store_true",
                   help="sample the intermediate subspace using --seed")
    g.set_defaults(fn=_cmd_gen)
    g = gen_sub.add_parser("linmap")
    for flag in ("q", "s", "r"):
        g.add_argument(f"--{flag}", type=int, required=True)
    g.set_defaults(fn=_cmd_gen)
    g = gen_sub.add_parser("random")
    for flag in ("q", "k", "m"):
        g.add_argument(f"--{flag}", type=int, required=True)
    g.add_argument("--dim", type=int, default=None)
    g.add_argument("--size", type=int, default=None)
    g.set_defaults(fn=_cmd_gen)

    sp = sub.add_parser("verify-paper",
                        help="check the built-in reference examples")
    sp.set_defaults(fn=_cmd_verify_paper)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE
    except GuardExceeded as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
