"""Closed-form Ext^1 dimension and compatibility of rank-one objects."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import DegenerateK, NotCommon
from .staircase import alpha, beta, grid_A, grid_B, render_grid
from .subsets import KSubset, _check_same_k, intersection_size


@dataclass(frozen=True)
class ExtReport:
    k: int
    l: tuple[int, ...]
    m: tuple[int, ...]
    alpha: int
    beta: int
    intersection: int
    ext_dim: int
    compatible: bool
    oracle_dim: int | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["l"] = list(self.l)
        d["m"] = list(self.m)
        return d

    def to_text(self) -> str:
        lines = [
            f"l = ({','.join(map(str, self.l))})  m = ({','.join(map(str, self.m))})  k = {self.k}",
            f"alpha = {self.alpha}  beta = {self.beta}  |l & m| = {self.intersection}",
            f"dim Ext^1 = {self.ext_dim}",
        ]
        if self.oracle_dim is not None:
            lines.append(f"oracle dim Ext^1 = {self.oracle_dim}")
        lines.append(f"compatible: {'yes' if self.compatible else 'no'}")
        return "\n".join(lines)


def ext_dimension(l: KSubset, m: KSubset) -> int:
    """alpha + beta - k - |l & m|."""
    _check_same_k(l, m)
    a, b = alpha(l, m), beta(l, m)
    d = a + b - l.k - intersection_size(l, m)
    if d < 0:
        raise AssertionError(
            f"negative Ext dimension {d} for l={l}, m={m} (alpha={a}, beta={b})\n"
            f"A:\n{render_grid(grid_A(l, m))}\nB:\n{render_grid(grid_B(l, m))}"
        )
    return d


def compatible(l: KSubset, m: KSubset) -> bool:
    return ext_dimension(l, m) == 0


def ext_report(l: KSubset, m: KSubset, with_oracle: bool = False) -> ExtReport:
    d = ext_dimension(l, m)
    oracle = None
    if with_oracle:
        from .mf_oracle import ext_dimension_oracle

        oracle = ext_dimension_oracle(l, m)
    return ExtReport(
        k=l.k,
        l=l.elements,
        m=m.elements,
        alpha=alpha(l, m),
        beta=beta(l, m),
        intersection=intersection_size(l, m),
        ext_dim=d,
        compatible=d == 0,
        oracle_dim=oracle,
    )


def reduce_common(l: KSubset, m: KSubset, v: int) -> tuple[KSubset, KSubset]:
    """Delete a shared element v from both subsets."""
    _check_same_k(l, m)
    if l.k == 2:
        raise DegenerateK("cannot reduce a pair of 2-subsets")
    if v not in l or v not in m:
        raise NotCommon(f"{v} is not in both {l} and {m}")
    return (
        KSubset(tuple(x for x in l if x != v)),
        KSubset(tuple(x for x in m if x != v)),
    )

