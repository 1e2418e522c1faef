"""Rank-one graded ideals of R = C[x, y]/(x^k) and their k-subset labels.

Grading: deg x = 1, deg y = -1, and M(j)_i = M_{i+j}.  An ideal is stored in
canonical form (x^{k-1}, x^{k-2} y^{i_1}, ..., y^{i_{k-1}})(i_k) as the
exponent vector (i_1, ..., i_{k-1}) and the shift i_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ExponentOutOfRange, NotCofinite, TooSmall
from .subsets import KSubset


@dataclass(frozen=True)
class GradedIdeal:
    k: int
    exponents: tuple[int, ...]
    shift: int = 0

    def __post_init__(self):
        if self.k < 2:
            raise TooSmall(f"k must be >= 2, got {self.k}")
        if len(self.exponents) != self.k - 1:
            raise ValueError(f"need {self.k - 1} exponents, got {self.exponents}")
        prev = 0
        for e in self.exponents:
            if e < prev:
                raise ValueError(f"exponents must be nonnegative and nondecreasing: {self.exponents}")
            prev = e

    def i(self, p: int) -> int:
        """The exponent i_p for 0 <= p <= k-1, with i_0 = 0."""
        return 0 if p == 0 else self.exponents[p - 1]

    def generators(self) -> list[tuple[int, int]]:
        """Canonical generators as (x-exponent, y-exponent), starting with x^{k-1}."""
        return [(self.k - 1 - p, self.i(p)) for p in range(self.k)]

    def to_text(self) -> str:
        def mono(a, b):
            parts = []
            if a:
                parts.append("x" if a == 1 else f"x^{a}")
            if b:
                parts.append(f"y^{b}")
            return "*".join(parts) or "1"

        gens = ",".join(mono(a, b) for a, b in self.generators())
        return f"({gens})({self.shift})"

    def to_dict(self) -> dict:
        return {"k": self.k, "exponents": list(self.exponents), "shift": self.shift}

    @classmethod
    def from_dict(cls, data: dict) -> GradedIdeal:
        return cls(int(data["k"]), tuple(int(e) for e in data["exponents"]), int(data["shift"]))


def ideal_from_subset(l: KSubset) -> GradedIdeal:
    k = l.k
    top = l[k - 1]
    # exponents[p-1] = i_p = l_k - l_{k-p} - p
    exps = tuple(top - l[k - 1 - p] - p for p in range(1, k))
    return GradedIdeal(k, exps, k - 1 - top)


def subset_from_ideal(I: GradedIdeal) -> KSubset:
    """l_p = -i_k - i_{k-p} + p - 1 for p = 1..k."""
    k = I.k
    return KSubset(tuple(-I.shift - I.i(k - p) + p - 1 for p in range(1, k + 1)))


def contains_monomial(I: GradedIdeal, a: int, b: int) -> bool:
    """Membership of x^a y^b in the unshifted ideal."""
    if not 0 <= a <= I.k - 1 or b < 0:
        raise ExponentOutOfRange(f"x^{a} y^{b} is not a nonzero monomial of R (k={I.k})")
    return b >= I.i(I.k - 1 - a)


def normalize_generators(k: int, monomials: Iterable[tuple[int, int]], shift: int = 0) -> GradedIdeal:
    """Canonical form of the ideal generated by ``monomials`` together with x^{k-1}.

    For each x-degree a the smallest y-exponent reachable is the minimum over
    generators whose x-exponent does not exceed a.
    """
    gens = [(int(a), int(b)) for a, b in monomials]
    for a, b in gens:
        if not 0 <= a <= k - 1 or b < 0:
            raise ExponentOutOfRange(f"generator x^{a} y^{b} out of range for k={k}")
    if not any(a == 0 for a, _ in gens):
        raise NotCofinite("ideal contains no power of y")
    exps = []
    for p in range(1, k):
        a = k - 1 - p
        exps.append(min(b for a2, b in gens if a2 <= a))
    return GradedIdeal(k, tuple(exps), shift)
