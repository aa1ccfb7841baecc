"""Concrete e-ring models.

A carrier bundles the ring operations of a model with membership oracles
for the directed group G, the positive cone E+ and the unit interval E, and
(when finite) an enumerator for E. Elements are immutable values that carry
their own arithmetic, so laws can be written as ``a * b * a`` directly.

Three kinds are provided:

* function rings: Z- or Q-valued functions on a finite field of sets,
  stored as one value per atom (so every element is measurable);
* matrix models: n x n rational symmetric matrices, with the PSD cone;
* products of two carriers, componentwise.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact_numeric import Matrix, SymMatrix, as_rational, char_poly_coeffs, fmt_rational, is_psd

INTEGERS = "integers"
RATIONALS = "rationals"


class CarrierError(ValueError):
    """Invalid carrier construction or an operation the carrier cannot support."""


class UnsupportedCarrier(CarrierError):
    """The requested operation is not available for this kind of carrier."""


# ----------------------------------------------------------------------------
# Elements
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class MeasurableSpace:
    """Finite point set with a partition into atoms.

    The field of sets is generated by the atoms: its members are exactly the
    unions of atoms.
    """

    points: tuple[str, ...]
    atoms: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if not self.atoms:
            raise CarrierError("a measurable space needs at least one atom")
        seen: list[str] = []
        for block in self.atoms:
            if not block:
                raise CarrierError("atoms must be nonempty")
            seen.extend(block)
        if len(set(seen)) != len(seen):
            raise CarrierError("atoms must be pairwise disjoint")
        if set(seen) != set(self.points) or len(set(self.points)) != len(self.points):
            raise CarrierError("atoms must partition the point set")

    @classmethod
    def from_atoms(cls, atoms: Iterable[Iterable]) -> "MeasurableSpace":
        blocks = tuple(tuple(str(x) for x in block) for block in atoms)
        return cls(tuple(x for block in blocks for x in block), blocks)

    @classmethod
    def discrete(cls, n: int, prefix: str = "x") -> "MeasurableSpace":
        return cls.from_atoms([[f"{prefix}{i}"] for i in range(n)])

    @property
    def n_atoms(self) -> int:
        return len(self.atoms)

    def sets(self) -> list[frozenset]:
        """Every member of the generated field of sets."""
        out = []
        for mask in itertools.product((False, True), repeat=self.n_atoms):
            out.append(frozenset(x for keep, blk in zip(mask, self.atoms) if keep for x in blk))
        return out


def _scalar(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


@dataclass(frozen=True)
class FunctionElement:
    """A measurable function, stored as its value on each atom."""

    space: MeasurableSpace
    values: tuple[Fraction, ...]
    value_ring: str = RATIONALS

    def __post_init__(self):
        vals = tuple(as_rational(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != self.space.n_atoms:
            raise CarrierError(f"expected {self.space.n_atoms} atom values, got {len(vals)}")
        if self.value_ring not in (INTEGERS, RATIONALS):
            raise CarrierError(f"unknown value ring {self.value_ring!r}")
        if self.value_ring == INTEGERS and any(v.denominator != 1 for v in vals):
            raise CarrierError(f"non-integer value in Z-valued function: {self!r}")

    def _like(self, values) -> "FunctionElement":
        return FunctionElement(self.space, tuple(values), self.value_ring)

    def _other(self, other) -> "FunctionElement":
        if not isinstance(other, FunctionElement):
            return NotImplemented
        if other.space != self.space or other.value_ring != self.value_ring:
            raise CarrierError("elements live on different carriers")
        return other

    def __add__(self, other):
        if self._other(other) is NotImplemented:
            return NotImplemented
        return self._like(a + b for a, b in zip(self.values, other.values))

    def __sub__(self, other):
        if self._other(other) is NotImplemented:
            return NotImplemented
        return self._like(a - b for a, b in zip(self.values, other.values))

    def __neg__(self):
        return self._like(-a for a in self.values)

    def __mul__(self, other):
        if _scalar(other):
            return self._like(Fraction(other) * a for a in self.values)
        if self._other(other) is NotImplemented:
            return NotImplemented
        return self._like(a * b for a, b in zip(self.values, other.values))

    def __rmul__(self, other):
        if _scalar(other):
            return self * other
        return NotImplemented

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def __call__(self, point: str) -> Fraction:
        for block, v in zip(self.space.atoms, self.values):
            if point in block:
                return v
        raise KeyError(point)

    def __repr__(self):
        return "(" + ", ".join(fmt_rational(v) for v in self.values) + ")"


@dataclass(frozen=True)
class ProductElement:
    left: object
    right: object

    def __add__(self, other):
        if not isinstance(other, ProductElement):
            return NotImplemented
        return ProductElement(self.left + other.left, self.right + other.right)

    def __sub__(self, other):
        if not isinstance(other, ProductElement):
            return NotImplemented
        return ProductElement(self.left - other.left, self.right - other.right)

    def __neg__(self):
        return ProductElement(-self.left, -self.right)

    def __mul__(self, other):
        if _scalar(other):
            return ProductElement(self.left * other, self.right * other)
        if not isinstance(other, ProductElement):
            return NotImplemented
        return ProductElement(self.left * other.left, self.right * other.right)

    def __rmul__(self, other):
        if _scalar(other):
            return self * other
        return NotImplemented

    def is_zero(self) -> bool:
        return self.left.is_zero() and self.right.is_zero()

    def __repr__(self):
        return f"<{self.left!r} | {self.right!r}>"


def flatten(x) -> tuple[Fraction, ...]:
    """All scalar coordinates of an element, in a fixed order."""
    if isinstance(x, FunctionElement):
        return x.values
    if isinstance(x, Matrix):
        return tuple(v for row in x.rows for v in row)
    if isinstance(x, ProductElement):
        return flatten(x.left) + flatten(x.right)
    raise TypeError(f"not an element: {x!r}")


def scalar_ratio(x, a) -> Fraction | None:
    """The scalar k with ``x == k * a``, or None. ``a`` must be nonzero."""
    xs, as_ = flatten(x), flatten(a)
    k = None
    for u, v in zip(xs, as_):
        if v == 0:
            if u != 0:
                return None
            continue
        r = u / v
        if k is None:
            k = r
        elif r != k:
            return None
    return k if k is not None else None


# ----------------------------------------------------------------------------
# Carriers
# ----------------------------------------------------------------------------


class Carrier:
    """Uniform oracle interface shared by every e-ring model."""

    kind: str = "abstract"
    enumerable_E: bool = False
    archimedean: bool = True

    # -- ring structure -------------------------------------------------
    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def complement(self, e):
        return self.one() - e

    def scalar(self, n) -> object:
        return self.one() * n

    # -- oracles --------------------------------------------------------
    def is_in_G(self, x) -> bool:
        raise NotImplementedError

    def is_in_Eplus(self, x) -> bool:
        raise NotImplementedError

    def is_in_E(self, x) -> bool:
        return self.is_in_G(x) and self.is_in_Eplus(x) and self.is_in_Eplus(self.one() - x)

    def is_projection(self, x) -> bool:
        return self.is_in_G(x) and x * x == x

    def compress(self, p, g):
        """The compression J_p(g) = p g p."""
        return p * g * p

    def is_order_unit(self, u) -> bool:
        """True iff 1 <= n*u for some n, i.e. ``u`` is an order unit."""
        raise NotImplementedError

    # -- enumeration and sampling --------------------------------------
    def enumerate_E(self) -> list:
        raise UnsupportedCarrier(f"{self.kind} carrier does not enumerate its effects")

    def projection_universe(self, rng: random.Random | None = None, size: int = 8) -> list:
        """Projections to test: all of P when enumerable, canonical + sampled otherwise."""
        raise NotImplementedError

    def sample_G(self, rng: random.Random, bound: int):
        raise NotImplementedError

    def sample_effect(self, rng: random.Random):
        """An effect built so that membership in E holds by construction."""
        raise NotImplementedError

    def candidate_effects(self, rng: random.Random, attempts: int) -> list:
        """Random group elements that the E oracle accepts (oracle-filtered)."""
        out = []
        for _ in range(attempts):
            g = self.sample_G(rng, 1)
            if self.is_in_E(g):
                out.append(g)
        return out

    # -- coordinates ----------------------------------------------------
    def basis(self) -> list:
        """A spanning set of G over the coefficient ring, used by endomorphism tables."""
        raise NotImplementedError

    def coordinates(self, g) -> list[Fraction]:
        raise NotImplementedError

    # -- constructive facts --------------------------------------------
    def decompose_positive(self, a) -> list:
        raise NotImplementedError

    def order_unit_index(self, g) -> int:
        raise NotImplementedError

    def supports_split(self) -> bool:
        return False

    def split_positive_negative(self, g):
        raise UnsupportedCarrier(f"{self.kind} carrier has no positive/negative split")

    # -- serialization --------------------------------------------------
    def to_json(self, x):
        raise NotImplementedError

    def from_json(self, obj):
        raise NotImplementedError

    def describe(self) -> dict:
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__} {self.describe()}>"


class FunctionCarrier(Carrier):
    """Bounded measurable functions on a finite field of sets, Z- or Q-valued."""

    kind = "function_ring"

    def __init__(self, space: MeasurableSpace, value_ring: str = INTEGERS,
                 grid_denominator: int | None = None):
        if value_ring not in (INTEGERS, RATIONALS):
            raise CarrierError(f"unknown value ring {value_ring!r}")
        if grid_denominator is not None and grid_denominator < 1:
            raise CarrierError("grid denominator must be positive")
        self.space = space
        self.value_ring = value_ring
        self.grid_denominator = grid_denominator if value_ring == RATIONALS else None
        self.enumerable_E = value_ring == INTEGERS or grid_denominator is not None
        self.archimedean = True

    @property
    def n_atoms(self) -> int:
        return self.space.n_atoms

    def element(self, values: Sequence) -> FunctionElement:
        return FunctionElement(self.space, tuple(values), self.value_ring)

    def constant(self, v) -> FunctionElement:
        return self.element([v] * self.n_atoms)

    def indicator(self, atom_indices: Iterable[int]) -> FunctionElement:
        idx = set(atom_indices)
        return self.element([1 if i in idx else 0 for i in range(self.n_atoms)])

    def zero(self):
        return self.constant(0)

    def one(self):
        return self.constant(1)

    def is_in_G(self, x) -> bool:
        return (isinstance(x, FunctionElement) and x.space == self.space
                and x.value_ring == self.value_ring)

    def is_in_Eplus(self, x) -> bool:
        return self.is_in_G(x) and all(v >= 0 for v in x.values)

    def is_order_unit(self, u) -> bool:
        return self.is_in_G(u) and all(v > 0 for v in u.values)

    def effect_levels(self) -> list[Fraction]:
        if self.value_ring == INTEGERS:
            return [Fraction(0), Fraction(1)]
        if self.grid_denominator is None:
            raise UnsupportedCarrier("rational carrier without a grid cannot enumerate E")
        d = self.grid_denominator
        return [Fraction(k, d) for k in range(d + 1)]

    def enumerate_E(self) -> list:
        levels = self.effect_levels()
        return [self.element(vals) for vals in itertools.product(levels, repeat=self.n_atoms)]

    def projection_universe(self, rng=None, size=8) -> list:
        return [self.element(vals) for vals in itertools.product((0, 1), repeat=self.n_atoms)]

    def _random_value(self, rng: random.Random, lo: Fraction, hi: Fraction) -> Fraction:
        if self.value_ring == INTEGERS:
            return Fraction(rng.randint(math.ceil(lo), math.floor(hi)))
        d = self.grid_denominator or rng.choice((1, 2, 3, 4, 6))
        return Fraction(rng.randint(math.ceil(lo * d), math.floor(hi * d)), d)

    def sample_G(self, rng, bound):
        b = Fraction(bound)
        return self.element([self._random_value(rng, -b, b) for _ in range(self.n_atoms)])

    def sample_effect(self, rng):
        return self.element([self._random_value(rng, Fraction(0), Fraction(1))
                             for _ in range(self.n_atoms)])

    def basis(self) -> list:
        return [self.indicator([i]) for i in range(self.n_atoms)]

    def coordinates(self, g) -> list[Fraction]:
        return list(g.values)

    def decompose_positive(self, a) -> list:
        if not self.is_in_Eplus(a):
            raise CarrierError(f"{a!r} is not in the positive cone")
        top = max(a.values)
        if top == 0:
            return []
        if self.value_ring == INTEGERS:
            # level sets: a = sum over k of the indicator of {a >= k}
            return [self.element([1 if v >= k else 0 for v in a.values])
                    for k in range(1, int(top) + 1)]
        n = math.ceil(top)
        piece = a * Fraction(1, n)
        return [piece] * n

    def order_unit_index(self, g) -> int:
        return max(0, math.ceil(max(g.values)))

    def supports_split(self) -> bool:
        return True

    def split_positive_negative(self, g):
        return self.element([1 if v > 0 else 0 for v in g.values])

    def to_json(self, x):
        if isinstance(x, FunctionElement):
            return {"type": "function", "values": [fmt_rational(v) for v in x.values]}
        raise CarrierError(f"not an element of this carrier: {x!r}")

    def from_json(self, obj):
        if obj.get("type") != "function":
            raise CarrierError(f"expected a function element, got {obj!r}")
        return self.element([Fraction(v) for v in obj["values"]])

    def describe(self) -> dict:
        d = {"kind": self.kind, "atoms": [list(b) for b in self.space.atoms],
             "values": "int" if self.value_ring == INTEGERS else "rat"}
        if self.grid_denominator is not None:
            d["grid"] = self.grid_denominator
        return d


class MatrixCarrier(Carrier):
    """n x n rational symmetric matrices ordered by the PSD cone.

    Products of symmetric matrices are kept as plain :class:`Matrix` values
    of the enveloping ring; ``is_in_G`` flags them as outside G.
    """

    kind = "matrix_model"
    enumerable_E = False
    archimedean = True

    def __init__(self, n: int):
        if n < 1:
            raise CarrierError("matrix dimension must be at least 1")
        self.n = n

    def zero(self):
        return Matrix.zero(self.n)

    def one(self):
        return Matrix.identity(self.n)

    def is_in_G(self, x) -> bool:
        return isinstance(x, SymMatrix) and x.dim == self.n

    def is_in_Eplus(self, x) -> bool:
        return self.is_in_G(x) and is_psd(x)

    def is_order_unit(self, u) -> bool:
        # positive definite: PSD with nonzero determinant
        return self.is_in_Eplus(u) and char_poly_coeffs(u)[-1] > 0

    # canonical elements used throughout the examples
    def unit_projection(self, i: int = 0) -> SymMatrix:
        return SymMatrix([[1 if (r == c == i) else 0 for c in range(self.n)] for r in range(self.n)])

    def uniform_projection(self) -> SymMatrix:
        k = Fraction(1, self.n)
        return SymMatrix([[k] * self.n for _ in range(self.n)])

    def rank_one_projection(self, v: Sequence) -> SymMatrix:
        v = [as_rational(x) for x in v]
        norm = sum(x * x for x in v)
        if norm == 0:
            raise CarrierError("zero vector")
        return SymMatrix([[a * b / norm for b in v] for a in v])

    def symmetric(self, rows) -> SymMatrix:
        m = SymMatrix(rows)
        if m.dim != self.n:
            raise CarrierError(f"expected a {self.n}x{self.n} matrix")
        return m

    def projection_universe(self, rng=None, size=8) -> list:
        base = [self.zero(), self.one()]
        if self.n >= 2:
            for p in (self.unit_projection(0), self.uniform_projection()):
                base += [p, self.one() - p]
        rng = rng or random.Random(0)
        while len(base) < size:
            v = [rng.randint(-2, 2) for _ in range(self.n)]
            if any(v):
                p = self.rank_one_projection(v)
                for q in (p, self.one() - p):
                    if q not in base:
                        base.append(q)
        return base

    def _random_entry(self, rng, bound) -> Fraction:
        d = rng.choice((1, 2, 3, 4))
        return Fraction(rng.randint(-bound * d, bound * d), d)

    def sample_G(self, rng, bound):
        rows = [[Fraction(0)] * self.n for _ in range(self.n)]
        for i in range(self.n):
            for j in range(i, self.n):
                rows[i][j] = rows[j][i] = self._random_entry(rng, bound)
        return SymMatrix(rows)

    def sample_effect(self, rng):
        kind = rng.randrange(4)
        one = self.one()
        if kind == 0:
            v = [rng.randint(-2, 2) for _ in range(self.n)]
            if not any(v):
                return self.zero()
            p = self.rank_one_projection(v)
            return p if rng.random() < 0.5 else one - p
        if kind == 1:
            # diagonal entries in [0, 1]
            return SymMatrix([[Fraction(rng.randint(0, 4), 4) if i == j else 0
                               for j in range(self.n)] for i in range(self.n)])
        # scaled Gram matrix: trace bounds the top eigenvalue of a PSD matrix
        b = Matrix([[rng.randint(-2, 2) for _ in range(self.n)] for _ in range(self.n)])
        gram = b.transpose() * b
        t = gram.trace()
        if t == 0:
            return self.zero()
        e = gram * (Fraction(rng.randint(1, 4), 4) / t)
        return e if kind == 2 else one - e

    def candidate_effects(self, rng, attempts):
        out = []
        for _ in range(attempts):
            rows = [[Fraction(0)] * self.n for _ in range(self.n)]
            for i in range(self.n):
                for j in range(i, self.n):
                    lo = 0 if i == j else -4
                    rows[i][j] = rows[j][i] = Fraction(rng.randint(lo, 4), 4)
            g = SymMatrix(rows)
            if self.is_in_E(g):
                out.append(g)
        return out

    def basis(self) -> list:
        out = []
        for i in range(self.n):
            for j in range(i, self.n):
                out.append(SymMatrix([[1 if (r, c) in ((i, j), (j, i)) else 0
                                       for c in range(self.n)] for r in range(self.n)]))
        return out

    def coordinates(self, g) -> list[Fraction]:
        return [g.rows[i][j] for i in range(self.n) for j in range(i, self.n)]

    def decompose_positive(self, a) -> list:
        if not self.is_in_Eplus(a):
            raise CarrierError(f"{a!r} is not in the positive cone")
        if a.is_zero():
            return []
        n = max(1, math.ceil(a.trace()))
        piece = a * Fraction(1, n)
        return [piece] * n

    def order_unit_index(self, g) -> int:
        # Gershgorin: every eigenvalue is at most the largest absolute row sum
        bound = max(0, math.ceil(max(sum(abs(v) for v in row) for row in g.rows)))
        one = self.one()
        for k in range(bound + 1):
            if is_psd(one * k - g):
                return k
        raise AssertionError("Gershgorin bound violated")  # unreachable for symmetric g

    def supports_split(self) -> bool:
        return self.n == 1

    def split_positive_negative(self, g):
        if self.n != 1:
            return super().split_positive_negative(g)
        return self.one() if g.rows[0][0] > 0 else self.zero()

    def to_json(self, x):
        if isinstance(x, Matrix):
            return {"type": "matrix", "rows": [[fmt_rational(v) for v in r] for r in x.rows]}
        raise CarrierError(f"not an element of this carrier: {x!r}")

    def from_json(self, obj):
        if obj.get("type") != "matrix":
            raise CarrierError(f"expected a matrix element, got {obj!r}")
        m = Matrix([[Fraction(v) for v in r] for r in obj["rows"]])
        return Matrix._make(m.rows)

    def describe(self) -> dict:
        return {"kind": self.kind, "dim": self.n}


class ProductCarrier(Carrier):
    kind = "product"

    def __init__(self, left: Carrier, right: Carrier):
        self.left = left
        self.right = right
        self.enumerable_E = left.enumerable_E and right.enumerable_E
        self.archimedean = left.archimedean and right.archimedean

    def zero(self):
        return ProductElement(self.left.zero(), self.right.zero())

    def one(self):
        return ProductElement(self.left.one(), self.right.one())

    def pair(self, a, b) -> ProductElement:
        return ProductElement(a, b)

    def is_in_G(self, x) -> bool:
        return (isinstance(x, ProductElement) and self.left.is_in_G(x.left)
                and self.right.is_in_G(x.right))

    def is_in_Eplus(self, x) -> bool:
        return (isinstance(x, ProductElement) and self.left.is_in_Eplus(x.left)
                and self.right.is_in_Eplus(x.right))

    def is_order_unit(self, u) -> bool:
        return self.left.is_order_unit(u.left) and self.right.is_order_unit(u.right)

    def enumerate_E(self) -> list:
        return [ProductElement(a, b)
                for a, b in itertools.product(self.left.enumerate_E(), self.right.enumerate_E())]

    def projection_universe(self, rng=None, size=8) -> list:
        rng = rng or random.Random(0)
        return [ProductElement(a, b) for a, b in itertools.product(
            self.left.projection_universe(rng, size), self.right.projection_universe(rng, size))]

    def sample_G(self, rng, bound):
        return ProductElement(self.left.sample_G(rng, bound), self.right.sample_G(rng, bound))

    def sample_effect(self, rng):
        return ProductElement(self.left.sample_effect(rng), self.right.sample_effect(rng))

    def candidate_effects(self, rng, attempts):
        ls = self.left.candidate_effects(rng, attempts) or [self.left.zero()]
        rs = self.right.candidate_effects(rng, attempts) or [self.right.zero()]
        return [ProductElement(ls[i % len(ls)], rs[i % len(rs)])
                for i in range(max(len(ls), len(rs)))]

    def basis(self) -> list:
        return ([ProductElement(b, self.right.zero()) for b in self.left.basis()]
                + [ProductElement(self.left.zero(), b) for b in self.right.basis()])

    def coordinates(self, g) -> list[Fraction]:
        return self.left.coordinates(g.left) + self.right.coordinates(g.right)

    def decompose_positive(self, a) -> list:
        if not self.is_in_Eplus(a):
            raise CarrierError(f"{a!r} is not in the positive cone")
        ls = self.left.decompose_positive(a.left)
        rs = self.right.decompose_positive(a.right)
        n = max(len(ls), len(rs))
        ls += [self.left.zero()] * (n - len(ls))
        rs += [self.right.zero()] * (n - len(rs))
        return [ProductElement(x, y) for x, y in zip(ls, rs)]

    def order_unit_index(self, g) -> int:
        return max(self.left.order_unit_index(g.left), self.right.order_unit_index(g.right))

    def supports_split(self) -> bool:
        return self.left.supports_split() and self.right.supports_split()

    def split_positive_negative(self, g):
        if not self.supports_split():
            return super().split_positive_negative(g)
        return ProductElement(self.left.split_positive_negative(g.left),
                              self.right.split_positive_negative(g.right))

    def to_json(self, x):
        if isinstance(x, ProductElement):
            return {"type": "pair", "left": self.left.to_json(x.left),
                    "right": self.right.to_json(x.right)}
        raise CarrierError(f"not an element of this carrier: {x!r}")

    def from_json(self, obj):
        if obj.get("type") != "pair":
            raise CarrierError(f"expected a pair element, got {obj!r}")
        return ProductElement(self.left.from_json(obj["left"]), self.right.from_json(obj["right"]))

    def describe(self) -> dict:
        return {"kind": self.kind, "left": self.left.describe(), "right": self.right.describe()}


# ----------------------------------------------------------------------------
# Constructors
# ----------------------------------------------------------------------------


def make_function_carrier(space: MeasurableSpace, value_ring: str = INTEGERS,
                          grid_denominator: int | None = None) -> FunctionCarrier:
    if isinstance(space, int):
        space = MeasurableSpace.discrete(space)
    return FunctionCarrier(space, value_ring, grid_denominator)


def make_matrix_carrier(n: int) -> MatrixCarrier:
    return MatrixCarrier(n)


def product_carrier(c1: Carrier, c2: Carrier) -> ProductCarrier:
    return ProductCarrier(c1, c2)


def decompose_positive(c: Carrier, a) -> list:
    """Write ``a`` in E+ as an explicit finite sum of effects."""
    return c.decompose_positive(a)


def value_to_json(c: Carrier, x):
    """Serialize an element, integer or nested list for report payloads."""
    if isinstance(x, (list, tuple)):
        return [value_to_json(c, v) for v in x]
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return {"type": "scalar", "value": fmt_rational(x)}
    return c.to_json(x)


def value_from_json(c: Carrier, obj):
    if isinstance(obj, list):
        return [value_from_json(c, v) for v in obj]
    if obj is None or isinstance(obj, (bool, int)):
        return obj
    if obj.get("type") == "scalar":
        return Fraction(obj["value"])
    return c.from_json(obj)
