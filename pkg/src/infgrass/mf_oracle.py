"""Ext^1 between rank-one ideals, computed directly from a matrix factorization.

For I with exponents (i_1, ..., i_{k-1}) there is a 2-periodic presentation
R^k --M--> R^k --N--> R^k -> I, with M N = N M = x^k Id.  Applying
Hom(-, J) gives

    JJ --N^T--> JJ(1) --M^T--> JJ(k),    JJ = (+)_p J(n_p),  n_p = (k - p) - i_{p-1},

and dim Ext^1(I, J) = dim ker(M^T)_0 - dim im(N^T)_0.  Each degree-zero piece
J(n)_0 has a monomial basis, so both maps become small integer matrices whose
ranks are computed exactly.  Nothing in this module looks at the crossing
grids; it exists to check the closed-form answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAComplex
from .ideals import GradedIdeal, contains_monomial, ideal_from_subset
from .linalg import matmul, rank
from .subsets import KSubset, _check_same_k, shift


@dataclass(frozen=True)
class Monomial:
    coefficient: Fraction
    x_exp: int
    y_exp: int

    def times(self, other: Monomial) -> Monomial:
        return Monomial(self.coefficient * other.coefficient, self.x_exp + other.x_exp, self.y_exp + other.y_exp)

    def __str__(self):
        body = []
        if self.x_exp:
            body.append("x" if self.x_exp == 1 else f"x^{self.x_exp}")
        if self.y_exp:
            body.append("y" if self.y_exp == 1 else f"y^{self.y_exp}")
        body = "*".join(body) or "1"
        c = self.coefficient
        if c == 1:
            return body
        if c == -1:
            return "-" + body
        return f"{c}*{body}"


def mono(x_exp: int, y_exp: int, coefficient=1) -> Monomial:
    return Monomial(Fraction(coefficient), x_exp, y_exp)


@dataclass(frozen=True)
class MatrixFactorization:
    """Entries are Monomial or None (zero).  Indices are 0-based here."""

    k: int
    M: tuple[tuple[Monomial | None, ...], ...]
    N: tuple[tuple[Monomial | None, ...], ...]


@dataclass(frozen=True)
class GradedMap:
    """A map between degree-zero pieces.  Basis labels are (component, monomial), component 1-based."""

    domain_basis: tuple[tuple[int, Monomial], ...]
    codomain_basis: tuple[tuple[int, Monomial], ...]
    matrix: tuple[tuple[int, ...], ...]  # rows = codomain, columns = domain

    def rank(self) -> int:
        return rank(self.matrix)

    def nullity(self) -> int:
        return len(self.domain_basis) - self.rank()


def matrix_factorization(I: GradedIdeal) -> MatrixFactorization:
    k = I.k
    M = [[None] * k for _ in range(k)]
    N = [[None] * k for _ in range(k)]
    for p in range(k):
        for q in range(p, k):
            M[p][q] = mono(k - 1 - (q - p), I.i(q) - I.i(p))
        N[p][p] = mono(1, 0)
        if p + 1 < k:
            N[p][p + 1] = mono(0, I.i(p + 1) - I.i(p), -1)
    return MatrixFactorization(k, tuple(map(tuple, M)), tuple(map(tuple, N)))


def _poly_product(A, B):
    """Matrix product over C[x, y] without reducing x^k; polynomials are dicts (a, b) -> coeff."""
    k = len(A)
    out = []
    for i in range(k):
        row = []
        for j in range(k):
            acc = {}
            for t in range(k):
                if A[i][t] is None or B[t][j] is None:
                    continue
                prod = A[i][t].times(B[t][j])
                key = (prod.x_exp, prod.y_exp)
                acc[key] = acc.get(key, 0) + prod.coefficient
            row.append({key: c for key, c in acc.items() if c != 0})
        out.append(row)
    return out


def verify_factorization(mf: MatrixFactorization) -> bool:
    k = mf.k
    target = [[{(k, 0): 1} if i == j else {} for j in range(k)] for i in range(k)]
    return _poly_product(mf.M, mf.N) == target and _poly_product(mf.N, mf.M) == target


def graded_piece_basis(J: GradedIdeal, n: int) -> list[Monomial]:
    """Monomial basis of J(n)_0, by decreasing x-exponent.

    x^a y^b sits in J(n)_0 when a - b = n + j_k, so for a = k - q the
    y-exponent is forced to k - q - n - j_k.
    """
    k = J.k
    basis = []
    for q in range(1, k + 1):
        a = k - q
        b = a - n - J.shift
        if b >= 0 and contains_monomial(J, a, b):
            basis.append(mono(a, b))
    return basis


def _component_bases(J: GradedIdeal, shifts: list[int]):
    labels = []
    for p, n in enumerate(shifts, start=1):
        labels.extend((p, m) for m in graded_piece_basis(J, n))
    return labels


def _apply_transpose(entries, k, domain, codomain) -> tuple[tuple[int, ...], ...]:
    """Matrix of v |-> entries^T v on monomial bases, with x^k = 0.

    A basis vector living in component p is sent to sum_r entries[p][r] * v in component r.
    """
    index = {(p, m.x_exp): (row, m.y_exp) for row, (p, m) in enumerate(codomain)}
    cols = []
    for p, m in domain:
        col = [0] * len(codomain)
        for r in range(1, k + 1):
            e = entries[p - 1][r - 1]
            if e is None:
                continue
            img = e.times(m)
            if img.x_exp >= k:
                continue
            hit = index.get((r, img.x_exp))
            if hit is None or hit[1] != img.y_exp:
                raise NotAComplex(f"image {img} of {m} in component {r} is not a basis monomial")
            coeff = img.coefficient
            if coeff.denominator != 1:
                raise ValueError(f"non-integral coefficient {coeff}")
            col[hit[0]] += int(coeff)
        cols.append(col)
    n_rows = len(codomain)
    return tuple(tuple(cols[c][r] for c in range(len(domain))) for r in range(n_rows))


def normalize_pair(l: KSubset, m: KSubset) -> tuple[KSubset, KSubset]:
    """Shift both subsets so that I(l) has shift 0, i.e. l_k = k - 1."""
    _check_same_k(l, m)
    t = l.k - 1 - l[l.k - 1]
    return shift(l, t), shift(m, t)


def build_complex(l: KSubset, m: KSubset) -> tuple[GradedMap, GradedMap]:
    l, m = normalize_pair(l, m)
    k = l.k
    I = ideal_from_subset(l)
    J = ideal_from_subset(m)
    mf = matrix_factorization(I)
    n = [(k - p) - I.i(p - 1) for p in range(1, k + 1)]
    d0 = tuple(_component_bases(J, n))
    d1 = tuple(_component_bases(J, [s + 1 for s in n]))
    dk = tuple(_component_bases(J, [s + k for s in n]))
    nt = GradedMap(d0, d1, _apply_transpose(mf.N, k, d0, d1))
    mt = GradedMap(d1, dk, _apply_transpose(mf.M, k, d1, dk))
    return nt, mt


@dataclass(frozen=True)
class ComplexDims:
    dim_j0: int
    dim_j1: int
    ker_nt: int
    rank_nt: int
    rank_mt: int
    ker_mt: int

    @property
    def ext_dim(self) -> int:
        return self.ker_mt - self.rank_nt


def complex_dimensions(l: KSubset, m: KSubset) -> ComplexDims:
    nt, mt = build_complex(l, m)
    if nt.matrix and mt.matrix:
        comp = matmul(mt.matrix, nt.matrix, inner=len(nt.codomain_basis))
        if any(v for row in comp for v in row):
            raise NotAComplex(f"M^T N^T != 0 for l={l}, m={m}\n{dump(nt, mt)}")
    r_nt, r_mt = nt.rank(), mt.rank()
    d0, d1 = len(nt.domain_basis), len(nt.codomain_basis)
    return ComplexDims(d0, d1, d0 - r_nt, r_nt, r_mt, d1 - r_mt)


def ext_dimension_oracle(l: KSubset, m: KSubset) -> int:
    return complex_dimensions(l, m).ext_dim


def dump(nt: GradedMap, mt: GradedMap) -> str:
    def basis(b):
        return "  ".join(f"[{p}]{m}" for p, m in b) or "(empty)"

    def mat(rows):
        return "\n".join(" ".join(f"{v:2d}" for v in r) for r in rows) or "(empty)"

    return "\n".join([
        "J_0:    " + basis(nt.domain_basis),
        "J(1)_0: " + basis(nt.codomain_basis),
        "J(k)_0: " + basis(mt.codomain_basis),
        "N^T:", mat(nt.matrix),
        "M^T:", mat(mt.matrix),
    ])
