"""Command-line front end.

Exit codes: 0 success, 1 a checked property failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .errors import GrassError
from .ext import ext_dimension, ext_report
from .mf_oracle import ext_dimension_oracle
from .plucker import maximal_noncrossing, plucker_relation, read_matrix_csv, relation_value
from .staircase import alpha, beta, grid_A, grid_B, render_grid
from .subsets import KSubset, _check_same_k, enumerate_window, parse_ksubset

DEFAULT_CAP = 10**6


class UsageError(Exception):
    pass


@dataclass
class VerificationSummary:
    k: int
    window: tuple[int, int]
    pairs_checked: int = 0
    mismatches: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "k": self.k,
            "window": list(self.window),
            "pairs_checked": self.pairs_checked,
            "mismatches": self.mismatches,
            "passed": self.passed,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 6)
        return d


def _pair(args):
    l, m = parse_ksubset(args.l), parse_ksubset(args.m)
    _check_same_k(l, m)
    return l, m


def _emit(obj, as_json, text):
    print(json.dumps(obj, sort_keys=False) if as_json else text)


def cmd_ext(args) -> int:
    l, m = _pair(args)
    rep = ext_report(l, m, with_oracle=args.oracle)
    _emit(rep.to_dict(), args.json, rep.to_text())
    if rep.oracle_dim is not None and rep.oracle_dim != rep.ext_dim:
        return 1
    return 0


def cmd_grid(args) -> int:
    l, m = _pair(args)
    g = grid_A(l, m) if args.flavor == "A" else grid_B(l, m)
    a, b = alpha(l, m), beta(l, m)
    if args.json:
        d = g.to_dict()
        d.update(alpha=a, beta=b)
        print(json.dumps(d))
    else:
        print(render_grid(g))
        print(f"alpha={a} beta={b}")
    return 0


def _check_pair(pair):
    l, m = pair
    f, o = ext_dimension(l, m), ext_dimension_oracle(l, m)
    return None if f == o else (l.to_list(), m.to_list(), f, o)


def run_verify(k, lo, hi, sample=None, seed=0, cap=DEFAULT_CAP, jobs=1) -> VerificationSummary:
    if hi - lo + 1 < k:
        raise UsageError(f"window [{lo}, {hi}] has fewer than {k} elements")
    n = comb(hi - lo + 1, k)
    total = n * n
    if sample is None and total > cap:
        raise UsageError(f"{total} ordered pairs exceeds cap {cap}; pass --sample")
    if sample is not None and sample > cap:
        raise UsageError(f"sample size {sample} exceeds cap {cap}")
    start = time.perf_counter()
    if sample is None:
        subsets = enumerate_window(k, lo, hi)
        pairs = [(a, b) for a in subsets for b in subsets]
    else:
        rng = random.Random(seed)
        pool = range(lo, hi + 1)
        pairs = []
        for _ in range(sample):
            pairs.append((KSubset(tuple(sorted(rng.sample(pool, k)))), KSubset(tuple(sorted(rng.sample(pool, k))))))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_check_pair, pairs, chunksize=256))
    else:
        results = [_check_pair(p) for p in pairs]
    mismatches = sorted(r for r in results if r is not None)
    return VerificationSummary(k, (lo, hi), len(pairs), mismatches, time.perf_counter() - start)


def cmd_verify(args) -> int:
    s = run_verify(args.k, args.lo, args.hi, args.sample, args.seed, args.cap, args.jobs)
    if args.json:
        print(json.dumps(s.to_dict(args.timing)))
    else:
        print(f"k={s.k} window=[{s.window[0]},{s.window[1]}] pairs_checked={s.pairs_checked} "
              f"mismatches={len(s.mismatches)}")
        for l, m, f, o in s.mismatches:
            print(f"  MISMATCH l={l} m={m} formula={f} oracle={o}")
        if args.timing:
            print(f"elapsed={s.elapsed:.3f}s")
    return 0 if s.passed else 1


def cmd_enumerate(args) -> int:
    cols = maximal_noncrossing(args.k, args.lo, args.hi, cap=args.cap)
    if args.json:
        print(json.dumps({
            "k": args.k,
            "window": [args.lo, args.hi],
            "count": len(cols),
            "collections": [[s.to_list() for s in c] for c in cols],
        }))
    else:
        print(f"{len(cols)} maximal noncrossing collections")
        for c in cols:
            print("  " + " ".join("{" + str(s) + "}" for s in c))
    return 0


def cmd_plucker_verify(args) -> int:
    try:
        columns, mat = read_matrix_csv(args.matrix)
    except OSError as exc:
        raise UsageError(f"cannot read matrix file: {exc}") from exc
    jp = [int(v) for v in args.jprime.split(",") if v.strip()]
    jb = [int(v) for v in args.jbig.split(",") if v.strip()]
    rel = plucker_relation(jp, jb)
    value = relation_value(mat, columns, rel)
    holds = value == 0
    if args.json:
        print(json.dumps({"relation": str(rel), "value": str(value), "holds": holds}))
    else:
        print(f"relation: {rel}")
        print(f"relation holds: {'true' if holds else 'false'}")
    return 0 if holds else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="infgrass", description="Ext^1 and compatibility of rank-one Grassmannian objects")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("ext", help="Ext^1 dimension between I(l) and I(m)")
    e.add_argument("l")
    e.add_argument("m")
    e.add_argument("--oracle", action="store_true", help="also compute via the matrix factorization")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_ext)

    g = sub.add_parser("grid", help="render the crossing grid A or B")
    g.add_argument("l")
    g.add_argument("m")
    g.add_argument("--flavor", choices=["A", "B"], default="A")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_grid)

    v = sub.add_parser("verify", help="formula vs oracle over a window")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--lo", type=int, required=True)
    v.add_argument("--hi", type=int, required=True)
    v.add_argument("--sample", type=int, default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cap", type=int, default=DEFAULT_CAP)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--timing", action="store_true")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    n = sub.add_parser("enumerate", help="maximal noncrossing collections in a window")
    n.add_argument("--k", type=int, required=True)
    n.add_argument("--lo", type=int, required=True)
    n.add_argument("--hi", type=int, required=True)
    n.add_argument("--cap", type=int, default=64)
    n.add_argument("--json", action="store_true")
    n.set_defaults(func=cmd_enumerate)

    pv = sub.add_parser("plucker-verify", help="check a Plücker relation on a CSV matrix")
    pv.add_argument("matrix")
    pv.add_argument("jprime")
    pv.add_argument("jbig")
    pv.add_argument("--json", action="store_true")
    pv.set_defaults(func=cmd_plucker_verify)
    return p


_NEG_LIST = re.compile(r"^-\d[\d,\s-]*$")


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # argparse reads "-2,0,2" as an option; a leading space keeps it positional
    argv = [" " + a if _NEG_LIST.match(a) else a for a in argv]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (GrassError, UsageError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
