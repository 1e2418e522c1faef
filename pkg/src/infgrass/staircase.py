"""Crossing grids A(l, m), B(l, m) and the diagonal counts alpha, beta.

Cells are addressed (i, j) with 1 <= i, j <= k, row 1 on top.  Cell (i, j)
of A is filled when l_i <= m_j, of B when l_i < m_j.  Both grids are
staircases: filled cells are closed under moving up and to the right.
"""

from __future__ import annotations

from dataclasses import dataclass

from .subsets import KSubset, _check_same_k


@dataclass(frozen=True)
class CrossingGrid:
    k: int
    flavor: str
    filled: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        if self.flavor not in ("A", "B"):
            raise ValueError(f"flavor must be 'A' or 'B', got {self.flavor!r}")
        if len(self.filled) != self.k or any(len(row) != self.k for row in self.filled):
            raise ValueError("grid must be k x k")
        if not is_staircase(self.filled):
            raise AssertionError(f"grid violates the staircase property:\n{_render(self.filled)}")

    def cell(self, i: int, j: int) -> bool:
        """1-based lookup."""
        return self.filled[i - 1][j - 1]

    def count(self) -> int:
        return sum(sum(row) for row in self.filled)

    def rows(self) -> list[str]:
        return ["".join("#" if c else "." for c in row) for row in self.filled]

    def to_dict(self) -> dict:
        return {"flavor": self.flavor, "k": self.k, "rows": self.rows()}


def is_staircase(filled) -> bool:
    k = len(filled)
    for i in range(k):
        for j in range(k):
            if not filled[i][j]:
                continue
            # filled propagates upward and rightward
            if i > 0 and not filled[i - 1][j]:
                return False
            if j < k - 1 and not filled[i][j + 1]:
                return False
    return True


def _build(l: KSubset, m: KSubset, strict: bool) -> CrossingGrid:
    _check_same_k(l, m)
    if strict:
        cells = tuple(tuple(a < b for b in m) for a in l)
    else:
        cells = tuple(tuple(a <= b for b in m) for a in l)
    return CrossingGrid(l.k, "B" if strict else "A", cells)


def grid_A(l: KSubset, m: KSubset) -> CrossingGrid:
    return _build(l, m, strict=False)


def grid_B(l: KSubset, m: KSubset) -> CrossingGrid:
    return _build(l, m, strict=True)


def alpha(l: KSubset, m: KSubset) -> int:
    """Number of upper diagonals of A(l, m) lying entirely in the filled region.

    The upper diagonal D_p^+ is {(i, j) : j - i = k - p}; D_1^+ is the corner
    cell (1, k) and D_k^+ the main diagonal.
    """
    _check_same_k(l, m)
    k = l.k
    best = 0
    for p in range(1, k + 1):
        d = k - p
        if all(l[i] <= m[i + d] for i in range(k - d)):
            best = p
    return best


def beta(l: KSubset, m: KSubset) -> int:
    """Number of lower diagonals D_p^- = {i - j = k - p} with l_i >= m_j throughout."""
    _check_same_k(l, m)
    k = l.k
    best = 0
    for p in range(1, k + 1):
        d = k - p
        if all(l[j + d] >= m[j] for j in range(k - d)):
            best = p
    return best


def _render(filled) -> str:
    return "\n".join("".join("#" if c else "." for c in row) for row in filled)


def render_grid(g: CrossingGrid) -> str:
    return _render(g.filled)
