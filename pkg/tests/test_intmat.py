import sympy
from hypothesis import given, strategies as st

from linkfloer import _intmat


def square(n):
    return st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)


matrices = st.integers(1, 4).flatmap(square)


@given(matrices)
def test_det_against_sympy(m):
    assert _intmat.det(m) == sympy.Matrix(m).det()


@given(matrices)
def test_charpoly_against_sympy(m):
    lam = sympy.Symbol("lam")
    expected = tuple(int(c) for c in sympy.Poly(sympy.Matrix(m).charpoly(lam).as_expr(), lam).all_coeffs())
    assert _intmat.charpoly(m) == expected


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=4))
def test_rank_against_sympy(rows):
    assert _intmat.rank_q(rows) == sympy.Matrix(rows).rank()


@given(matrices, st.integers(0, 5))
def test_matpow_against_sympy(m, k):
    assert _intmat.matpow(m, k) == _intmat.as_matrix((sympy.Matrix(m) ** k).tolist())


def test_known_charpolys():
    assert _intmat.charpoly(((1, 1), (-1, 0))) == (1, -1, 1)
    assert _intmat.charpoly(((2, 0, 0), (0, 3, 0), (0, 0, 5))) == (1, -10, 31, -30)


def test_content():
    assert _intmat.content((4, -6, 10)) == 2
    assert _intmat.content((0, 0)) == 0
