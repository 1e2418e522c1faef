from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from infgrass.linalg import det, matmul, rank

small_ints = st.integers(-3, 3)


@st.composite
def int_matrices(draw, max_dim=7):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    return [draw(st.lists(small_ints, min_size=c, max_size=c)) for _ in range(r)]


@given(int_matrices())
def test_rank_matches_sympy(mat):
    assert rank(mat) == sympy.Matrix(mat).rank()


@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.builds(Fraction, st.integers(-9, 9), st.integers(1, 7)),
                                min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_sympy(mat):
    assert det(mat) == sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in mat]).det()


def test_small_cases():
    assert rank([]) == 0
    assert rank([[]]) == 0
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[1, 2], [2, 4]]) == 1
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[Fraction(1, 2), 0], [0, 4]]) == 2
    assert det([[1, 2], [2, 4]]) == 0
    assert matmul([[1, 2]], [[3], [4]]) == [[11]]
