"""Exact rational scalars and square rational matrices.

``fractions.Fraction`` is the scalar type throughout the package: it is
always stored in lowest terms with a positive denominator, so equality of
values is structural and no arithmetic ever rounds.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable

Rational = Fraction

__all__ = [
    "Rational",
    "as_rational",
    "Matrix",
    "SymMatrix",
    "char_poly_coeffs",
    "is_psd",
    "fmt_rational",
]


def as_rational(x) -> Fraction:
    """Coerce ``x`` to a Fraction. Floats are refused: they are not exact."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


class Matrix:
    """Square matrix with Fraction entries; an element of the enveloping ring.

    Results of arithmetic are re-classified: a symmetric result comes back as
    a :class:`SymMatrix`, anything else as a plain ``Matrix``. Being a
    ``SymMatrix`` is therefore exactly membership in the Hermitian group.
    """

    __slots__ = ("rows", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(as_rational(v) for v in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        self.rows = rows
        self._hash = None

    @staticmethod
    def _make(rows) -> "Matrix":
        n = len(rows)
        m = Matrix.__new__(
            SymMatrix
            if all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n))
            else Matrix
        )
        m.rows = rows
        m._hash = None
        return m

    @classmethod
    def identity(cls, n: int) -> "SymMatrix":
        return SymMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "SymMatrix":
        return SymMatrix([[0] * n for _ in range(n)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def is_symmetric(self) -> bool:
        return isinstance(self, SymMatrix)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.dim)), Fraction(0))

    def transpose(self) -> "Matrix":
        return Matrix._make(tuple(zip(*self.rows)))

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.rows for v in row)

    def _check(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch {self.dim} vs {other.dim}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Matrix._make(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Matrix._make(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __neg__(self):
        return Matrix._make(tuple(tuple(-a for a in r) for r in self.rows))

    def __mul__(self, other):
        if _is_scalar(other):
            k = Fraction(other)
            return Matrix._make(tuple(tuple(k * a for a in r) for r in self.rows))
        if self._check(other) is NotImplemented:
            return NotImplemented
        cols = tuple(zip(*other.rows))
        return Matrix._make(
            tuple(
                tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols)
                for r in self.rows
            )
        )

    def __rmul__(self, other):
        if _is_scalar(other):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("matrix", self.rows))
        return self._hash

    def __repr__(self):
        body = ", ".join("[" + ", ".join(fmt_rational(v) for v in r) + "]" for r in self.rows)
        return f"{type(self).__name__}([{body}])"


class SymMatrix(Matrix):
    """Symmetric rational matrix; symmetry is checked at construction."""

    __slots__ = ()

    def __init__(self, rows: Iterable[Iterable]):
        super().__init__(rows)
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                if self.rows[i][j] != self.rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")


def _integer_char_poly(rows) -> list[int]:
    """Faddeev-LeVerrier on an integer matrix; every step stays in Z."""
    n = len(rows)
    out = []
    m = [[int(i == j) for j in range(n)] for i in range(n)]  # M_1 = I
    for k in range(1, n + 1):
        am = [[sum(rows[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(am[i][i] for i in range(n))
        # q is the coefficient of t^(n-k) in det(tI - A)
        q, r = divmod(-tr, k)
        assert r == 0
        out.append(q if k % 2 == 0 else -q)
        m = [[am[i][j] + (q if i == j else 0) for j in range(n)] for i in range(n)]
    return out


def _scaled(a: Matrix) -> tuple[list[list[int]], int]:
    d = 1
    for r in a.rows:
        for v in r:
            d = math.lcm(d, v.denominator)
    return [[int(v * d) for v in r] for r in a.rows], d


def char_poly_coeffs(a: Matrix) -> list[Fraction]:
    """Return ``[c1, ..., cn]`` with det(tI - A) = t^n - c1 t^(n-1) + c2 t^(n-2) - ...

    ``ck`` is the sum of the k-by-k principal minors of ``A``. Computed with
    the Faddeev-LeVerrier recursion on ``D*A``, where ``D`` clears all
    denominators; the coefficients of ``D*A`` are integers and the divisions
    by ``k`` are exact. Then ``ck(A) = ck(D*A) / D**k``.
    """
    rows, d = _scaled(a)
    return [Fraction(c, d ** k) for k, c in enumerate(_integer_char_poly(rows), 1)]


def is_psd(a: Matrix) -> bool:
    """Exact positive semidefiniteness test for a symmetric rational matrix.

    A real symmetric matrix has real eigenvalues, and they are all >= 0 iff
    every elementary symmetric function of them is >= 0.
    """
    if not a.is_symmetric:
        raise ValueError("positivity is only defined for symmetric matrices")
    return all(c >= 0 for c in char_poly_coeffs(a))

