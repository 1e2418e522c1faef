"""k-subsets of the integers and the crossing relation between them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import DuplicateElement, MismatchedK, TooSmall, WindowTooSmall


@dataclass(frozen=True, order=True)
class KSubset:
    """A finite subset of ZZ of size k >= 2, stored as a strictly increasing tuple."""

    elements: tuple[int, ...]

    def __post_init__(self):
        if len(self.elements) < 2:
            raise TooSmall(f"a k-subset needs k >= 2, got {self.elements}")
        for a, b in zip(self.elements, self.elements[1:]):
            if a >= b:
                raise ValueError(f"elements must be strictly increasing: {self.elements}")

    @property
    def k(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, v) -> bool:
        return v in self.elements

    def __getitem__(self, p):
        return self.elements[p]

    def __str__(self):
        return ",".join(str(v) for v in self.elements)

    def __repr__(self):
        return f"KSubset({self.elements})"

    def to_list(self) -> list[int]:
        return list(self.elements)


def new_ksubset(values: Iterable[int]) -> KSubset:
    """Sort ``values`` into a KSubset, rejecting repeats and sets of size < 2."""
    values = [int(v) for v in values]
    distinct = sorted(set(values))
    if len(distinct) != len(values):
        raise DuplicateElement(f"repeated element in {values}")
    if len(distinct) < 2:
        raise TooSmall(f"need at least 2 distinct values, got {values}")
    return KSubset(tuple(distinct))


def parse_ksubset(text: str) -> KSubset:
    """Parse the text form ``"-2,0,2"``."""
    parts = [p.strip() for p in text.strip().split(",")]
    try:
        values = [int(p) for p in parts if p]
    except ValueError as exc:
        raise ValueError(f"cannot parse k-subset {text!r}") from exc
    return new_ksubset(values)


def _check_same_k(l: KSubset, m: KSubset) -> None:
    if l.k != m.k:
        raise MismatchedK(f"cardinalities differ: {l.k} vs {m.k}")


def crosses(l: KSubset, m: KSubset) -> bool:
    """True iff some a1 < b1 < a2 < b2 (or the mirror) with a's in l-m and b's in m-l.

    Merging the two differences and reading off which side each element came
    from, such an interleaving exists exactly when the labels change at least
    three times.
    """
    _check_same_k(l, m)
    ls, ms = set(l.elements), set(m.elements)
    labels = [v in ls for v in sorted(ls ^ ms)]
    runs = sum(1 for a, b in zip(labels, labels[1:]) if a != b) + (1 if labels else 0)
    return runs >= 4


def intersection_size(l: KSubset, m: KSubset) -> int:
    _check_same_k(l, m)
    return len(set(l.elements) & set(m.elements))


def shift(l: KSubset, t: int) -> KSubset:
    return KSubset(tuple(v + t for v in l.elements))


def enumerate_window(k: int, lo: int, hi: int) -> list[KSubset]:
    """All k-subsets of {lo, ..., hi} in lexicographic order."""
    if k < 2:
        raise TooSmall(f"k must be >= 2, got {k}")
    if hi - lo + 1 < k:
        raise WindowTooSmall(f"window [{lo}, {hi}] has fewer than {k} elements")
    return [KSubset(c) for c in combinations(range(lo, hi + 1), k)]
