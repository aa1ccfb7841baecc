from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from erings.exact_numeric import Matrix, SymMatrix, as_rational, char_poly_coeffs, fmt_rational, is_psd
from oracles import principal_minor_sums, psd_by_minors

small = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def sym(n):
    entries = st.lists(small, min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2)

    def build(xs):
        rows = [[F(0)] * n for _ in range(n)]
        it = iter(xs)
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = next(it)
        return SymMatrix(rows)

    return entries.map(build)


def test_rationals_are_canonical():
    q = as_rational(F(6, -4))
    assert (q.numerator, q.denominator) == (-3, 2)
    assert fmt_rational(F(4, 2)) == "2"
    assert F(1, 3) + F(1, 6) == F(1, 2)


def test_floats_are_refused():
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_symmetric_constructor_checks_symmetry():
    with pytest.raises(ValueError):
        SymMatrix([[1, 2], [3, 4]])


def test_products_leave_symmetric_matrices_when_noncommuting():
    p1 = SymMatrix([[1, 0], [0, 0]])
    q1 = SymMatrix([[F(1, 2), F(1, 2)], [F(1, 2), F(1, 2)]])
    prod = p1 * q1
    assert not isinstance(prod, SymMatrix)
    assert prod.rows == ((F(1, 2), F(1, 2)), (0, 0))
    assert isinstance(p1 * p1, SymMatrix)


@pytest.mark.parametrize("rows, expected", [
    ([[2, 1], [1, 1]], [3, 1]),
    ([[0, 0], [0, 0]], [0, 0]),
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [3, 3, 1]),
])
def test_char_poly_examples(rows, expected):
    assert char_poly_coeffs(SymMatrix(rows)) == expected


@pytest.mark.parametrize("rows, expected", [
    ([[2, 1], [1, 1]], True),
    ([[1, 2], [2, 1]], False),
    ([[0, 0], [0, 0]], True),
])
def test_psd_examples(rows, expected):
    assert is_psd(SymMatrix(rows)) is expected


def test_psd_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        is_psd(Matrix([[1, 1], [0, 1]]))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(sym))
def test_char_poly_matches_minor_sums(a):
    assert char_poly_coeffs(a) == principal_minor_sums([list(r) for r in a.rows])


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(sym))
def test_psd_matches_minor_oracle(a):
    assert is_psd(a) == psd_by_minors([list(r) for r in a.rows])


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_gram_matrices_are_psd(rows):
    b = Matrix(rows)
    assert is_psd(b.transpose() * b)


def test_singular_psd_is_not_missed():
    # rank-one with zero determinant: only the lower coefficients are positive
    v = [F(1), F(2), F(-1)]
    a = SymMatrix([[x * y for y in v] for x in v])
    assert is_psd(a) and not is_psd(-a)
