"""Plücker relations, exact minors, and maximal noncrossing collections."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import networkx as nx

from .errors import BadCardinality, ColumnMissing, WindowTooLarge, WindowTooSmall
from .linalg import det
from .subsets import KSubset, crosses, enumerate_window


@dataclass(frozen=True)
class PluckerTerm:
    """sign * p_first * p_second.  Degenerate terms have sign 0 and first=None."""

    sign: int
    first: KSubset | None
    second: KSubset
    degenerate: bool = False

    def __str__(self):
        if self.degenerate:
            return f"0*p[{self.second}]"
        s = "+" if self.sign > 0 else "-"
        return f"{s}p[{self.first}]p[{self.second}]"


@dataclass(frozen=True)
class PluckerRelation:
    k: int
    terms: tuple[PluckerTerm, ...]

    def __str__(self):
        return " ".join(str(t) for t in self.terms)

    def live_terms(self) -> list[PluckerTerm]:
        return [t for t in self.terms if not t.degenerate]


def _distinct(values: Iterable[int], size: int, what: str) -> list[int]:
    vals = [int(v) for v in values]
    if len(set(vals)) != len(vals) or len(vals) != size:
        raise BadCardinality(f"{what} must be {size} distinct integers, got {vals}")
    return sorted(vals)


def plucker_relation(j_prime: Iterable[int], j_big: Iterable[int]) -> PluckerRelation:
    """The quadratic relation sum_l (-1)^l p_{J' j_l} p_{J - j_l}.

    p_{J' j_l} is the minor with columns J' (increasing) followed by j_l.  The
    term is stored against the sorted index set, so its sign absorbs the
    sign of the sort: (-1)^(number of elements of J' above j_l).
    """
    jb = list(j_big)
    k = len(set(jb)) - 1
    if k < 2:
        raise BadCardinality(f"J must have at least 3 elements, got {jb}")
    jb = _distinct(jb, k + 1, "J")
    jp = _distinct(j_prime, k - 1, "J'")
    terms = []
    for l, v in enumerate(jb):
        rest = KSubset(tuple(x for x in jb if x != v))
        if v in jp:
            terms.append(PluckerTerm(0, None, rest, True))
            continue
        above = sum(1 for x in jp if x > v)
        sign = (-1) ** (l + above)
        terms.append(PluckerTerm(sign, KSubset(tuple(sorted(jp + [v]))), rest))
    return PluckerRelation(k, tuple(terms))


def evaluate_plucker(mat: Sequence[Sequence[Fraction]], columns: Sequence[int], l: KSubset) -> Fraction:
    """Maximal minor of ``mat`` on the columns labelled by l, in increasing order."""
    pos = {c: i for i, c in enumerate(columns)}
    missing = [v for v in l if v not in pos]
    if missing:
        raise ColumnMissing(f"columns {missing} not present in {list(columns)}")
    if len(mat) != l.k:
        raise ValueError(f"matrix has {len(mat)} rows, expected k={l.k}")
    sub = [[Fraction(row[pos[v]]) for v in l] for row in mat]
    return Fraction(det(sub))


def minor_table(mat, columns: Sequence[int]) -> dict[KSubset, Fraction]:
    """Every maximal minor of ``mat``, keyed by column labels."""
    k = len(mat)
    return {s: evaluate_plucker(mat, columns, s) for s in map(KSubset, combinations(sorted(columns), k))}


def relation_value(mat, columns, rel: PluckerRelation, minors: dict | None = None) -> Fraction:
    """Evaluate the relation on the minors of ``mat``; pass ``minors`` to reuse a :func:`minor_table`."""

    def p(s):
        if minors is not None and s in minors:
            return minors[s]
        return evaluate_plucker(mat, columns, s)

    total = Fraction(0)
    for t in rel.live_terms():
        total += t.sign * p(t.first) * p(t.second)
    return total


def verify_relation(mat, columns, rel: PluckerRelation, minors: dict | None = None) -> bool:
    return relation_value(mat, columns, rel, minors) == 0


def read_matrix_csv(path) -> tuple[list[int], list[list[Fraction]]]:
    """First row: integer column labels; remaining rows: entries "p" or "p/q"."""
    with open(path, newline="") as fh:
        rows = [r for r in csv.reader(fh) if any(c.strip() for c in r)]
    if len(rows) < 2:
        raise ValueError(f"{path}: need a header row and at least one data row")
    header = [int(c) for c in rows[0]]
    data = [[Fraction(c.strip()) for c in r] for r in rows[1:]]
    if any(len(r) != len(header) for r in data):
        raise ValueError(f"{path}: ragged rows")
    return header, data


def maximal_noncrossing(k: int, lo: int, hi: int, cap: int = 64) -> list[list[KSubset]]:
    """All inclusion-maximal pairwise-noncrossing collections of k-subsets of {lo..hi}."""
    if hi - lo + 1 < k:
        raise WindowTooSmall(f"window [{lo}, {hi}] has fewer than {k} elements")
    n_sub = comb(hi - lo + 1, k)
    if n_sub > cap:
        raise WindowTooLarge(f"{n_sub} subsets exceeds cap {cap}")
    subsets = enumerate_window(k, lo, hi)
    g = nx.Graph()
    g.add_nodes_from(subsets)
    for i, a in enumerate(subsets):
        for b in subsets[i + 1:]:
            if not crosses(a, b):
                g.add_edge(a, b)
    return sorted(sorted(c) for c in nx.find_cliques(g))
