"""Commutative structure: lattice order, b-rings and their Stone models.

On function rings the positive/negative split of an element gives suprema
directly, which makes the group lattice ordered and hence an interpolation
group. For carriers where every effect is a projection, each element is an
integer combination of the atoms of the Boolean algebra E, and reading off
those coefficients is a ring and order isomorphism onto Z-valued functions
on the atoms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .axiom_engine import effect_pool, leq
from .carriers import (
    INTEGERS,
    Carrier,
    CarrierError,
    FunctionCarrier,
    MeasurableSpace,
    ProductCarrier,
    UnsupportedCarrier,
    flatten,
    scalar_ratio,
)
from .effect_logic import commutes
from .projection_logic import Projection, is_projection
from .report import EXHAUSTIVE, Recorder, SampleStrategy, VerificationReport, holds, law


class LatticeError(ValueError):
    def __init__(self, message: str, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class NotBoolean(ValueError):
    def __init__(self, message: str, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class NotABRing(CarrierError):
    pass


class BooleanHomError(ValueError):
    def __init__(self, law_id: str, pair):
        super().__init__(f"Boolean law {law_id} fails on {pair!r}")
        self.law_id = law_id
        self.pair = pair


# ----------------------------------------------------------------------------
# Lattice order on function rings
# ----------------------------------------------------------------------------


def split_positive_negative(c: Carrier, g) -> Projection:
    """A projection p with (1-p)g <= 0 <= pg: the indicator of where g > 0."""
    if not c.supports_split():
        raise UnsupportedCarrier(f"{c.kind} carrier has no positive/negative split")
    p = c.split_positive_negative(g)
    one, zero = c.one(), c.zero()
    if not (leq(c, (one - p) * g, zero) and leq(c, zero, p * g)):
        raise LatticeError("split does not separate signs", g)
    return Projection(c, p)


def lattice_sup(c: Carrier, g, h, upper_bounds=()):
    """g v h = p g + (1-p) h where p splits g - h; checked against ``upper_bounds``."""
    p = split_positive_negative(c, g - h).element
    s = p * g + (c.one() - p) * h
    if not (leq(c, g, s) and leq(c, h, s)):
        raise LatticeError("supremum candidate is not an upper bound", (g, h))
    for k in upper_bounds:
        if leq(c, g, k) and leq(c, h, k) and not leq(c, s, k):
            raise LatticeError("supremum candidate is not least", (g, h, k))
    return s


def lattice_inf(c: Carrier, g, h):
    return -lattice_sup(c, -g, -h)


def check_interpolation(c: Carrier, a, b, cc, d):
    """An interpolant t with a, b <= t <= cc, d."""
    for lo, hi in ((a, cc), (a, d), (b, cc), (b, d)):
        if not leq(c, lo, hi):
            raise LatticeError("interpolation precondition fails", (lo, hi))
    t = lattice_sup(c, a, b)
    if not (leq(c, t, cc) and leq(c, t, d)):
        raise LatticeError("supremum is not below both upper elements", (a, b, cc, d))
    return t


# ----------------------------------------------------------------------------
# Boolean views
# ----------------------------------------------------------------------------


@dataclass
class BooleanView:
    """A finite Boolean algebra of pairwise commuting projections."""

    carrier: Carrier
    universe: list
    atoms: list

    def below(self, p) -> list:
        return [a for a in self.atoms if a * p == a]

    def meet(self, p, q):
        return p * q

    def join(self, p, q):
        return p + q - p * q

    def complement(self, p):
        return self.carrier.one() - p


def boolean_view(c: Carrier, universe: list | None = None) -> BooleanView:
    """Check that ``universe`` (default: the carrier's projections) is a Boolean algebra."""
    if universe is None:
        universe = c.projection_universe()
    universe = list(dict.fromkeys(universe))
    for p in universe:
        if not is_projection(c, p):
            raise NotBoolean("not a projection", p)
    members = set(universe)
    one, zero = c.one(), c.zero()
    if zero not in members or one not in members:
        raise NotBoolean("universe must contain 0 and 1")
    for p, q in itertools.combinations(universe, 2):
        if not commutes(p, q):
            raise NotBoolean("projections are not Mackey compatible", (p, q))
    for p in universe:
        if one - p not in members:
            raise NotBoolean("not closed under complement", p)
    for p, q in itertools.combinations(universe, 2):
        if p * q not in members or p + q - p * q not in members:
            raise NotBoolean("not closed under meet and join", (p, q))
    atoms = [a for a in universe
             if a != zero and not any(b != zero and b != a and b * a == b for b in universe)]
    atoms.sort(key=flatten, reverse=True)
    view = BooleanView(c, universe, atoms)
    for p in universe:
        total = zero
        for a in view.below(p):
            total = total + a
        if total != p:
            raise NotBoolean("element is not the join of the atoms below it", p)
    return view


def _integer_coefficients(view: BooleanView, g):
    """Coefficients k_a with g = sum k_a a, or None when none exist in Z."""
    c = view.carrier
    total = c.zero()
    coeffs = []
    for a in view.atoms:
        k = scalar_ratio(g * a, a)
        if k is None or k.denominator != 1:
            return None
        coeffs.append(int(k))
        total = total + a * k
    return coeffs if total == g else None


def _is_integer_function_ring(c: Carrier) -> bool:
    c = getattr(c, "base", c)
    if isinstance(c, FunctionCarrier):
        return c.value_ring == INTEGERS
    if isinstance(c, ProductCarrier):
        return _is_integer_function_ring(c.left) and _is_integer_function_ring(c.right)
    return False


def atom_decomposition(c: Carrier, g) -> list[tuple[Projection, int]]:
    """g as an integer combination of orthogonal atoms; zero terms omitted."""
    if not _is_integer_function_ring(c):
        raise NotABRing(f"{c.kind} carrier is not an integer function ring")
    view = boolean_view(c)
    coeffs = _integer_coefficients(view, g)
    if coeffs is None:
        raise NotABRing(f"{g!r} has non-integer values")
    return [(Projection(c, a), k) for a, k in zip(view.atoms, coeffs) if k != 0]


# ----------------------------------------------------------------------------
# Six b-ring conditions
# ----------------------------------------------------------------------------


@dataclass
class Condition:
    value: bool | None
    evidence: str
    witness: object = None


@dataclass
class BringConditions:
    conditions: list[Condition]
    notes: list[str] = field(default_factory=list)

    @property
    def values(self) -> list[bool | None]:
        return [cond.value for cond in self.conditions]

    @property
    def agree(self) -> bool:
        vals = self.values
        return None not in vals and len(set(vals)) == 1

    @property
    def all_true(self) -> bool:
        return all(v is True for v in self.values)


def _tested_effects(c: Carrier, s: SampleStrategy) -> list:
    if c.enumerable_E:
        return c.enumerate_E()
    return effect_pool(c, s, "bring-effects")


def _noncommuting_witness(group, projections):
    for g in group:
        for p in projections:
            if not commutes(g, p):
                return (g, p)
    return None


def _ell_group(c: Carrier, group: list, projections: list, rng) -> Condition:
    """Lattice order: constructive suprema when available, else a refutation."""
    if c.supports_split():
        for _ in range(min(len(group), 60)):
            g, h = rng.choice(group), rng.choice(group)
            s = lattice_sup(c, g, h)
            uppers = [s + e for e in group if c.is_in_Eplus(e)][:5]
            lattice_sup(c, g, h, uppers)
        return Condition(True, "constructive suprema on samples")
    w = _noncommuting_witness(group, projections)
    if w is not None:
        # lattice-ordered (even interpolation) groups commute with every projection
        return Condition(False, "G not inside C(P)", w)
    return Condition(None, "no supremum constructor and no refutation")


def _complement_witness(c: Carrier, effects: list):
    one, zero = c.one(), c.zero()
    for e in effects:
        comp = one - e
        for d in itertools.chain(effects, [e - e * e]):
            if d != zero and c.is_in_E(d) and leq(c, d, e) and leq(c, d, comp):
                return (e, d)
    return None


def _finite_boolean(c: Carrier, effects: list) -> tuple[bool, object]:
    """Brute-force Boolean algebra test for a small enumerated E under <=."""
    one, zero = c.one(), c.zero()
    le = {(x, y): leq(c, x, y) for x in effects for y in effects}

    def glb(x, y):
        lows = [z for z in effects if le[z, x] and le[z, y]]
        best = [z for z in lows if all(le[w, z] for w in lows)]
        return best[0] if best else None

    def lub(x, y):
        ups = [z for z in effects if le[x, z] and le[y, z]]
        best = [z for z in ups if all(le[z, w] for w in ups)]
        return best[0] if best else None

    meet = {}
    join = {}
    for x, y in itertools.product(effects, repeat=2):
        m, j = glb(x, y), lub(x, y)
        if m is None or j is None:
            return False, (x, y)
        meet[x, y], join[x, y] = m, j
    for x in effects:
        comp = one - x
        if comp not in set(effects) or meet[x, comp] != zero or join[x, comp] != one:
            return False, x
    for x, y, z in itertools.product(effects, repeat=3):
        if meet[x, join[y, z]] != join[meet[x, y], meet[x, z]]:
            return False, (x, y, z)
    return True, None


def bring_conditions(c: Carrier, s: SampleStrategy) -> BringConditions:
    """Evaluate the six equivalent b-ring conditions independently."""
    rng = s.rng("bring")
    effects = _tested_effects(c, s)
    evidence = "enumerated E" if c.enumerable_E else "sampled E"
    projections = list(dict.fromkeys(
        [e for e in effects if is_projection(c, e)]
        + [p for p in c.projection_universe(s.rng("bring-projections")) if is_projection(c, p)]))
    group = [c.sample_G(rng, s.magnitude_bound) for _ in range(max(s.case_budget // 10, 20))]
    group += effects[:40]
    one = c.one()
    notes = ["all six conditions are checked as one equivalence class, "
             "including (vi) which a five-item reading would omit"]

    e_is_p = next((e for e in effects if e * e != e), None)
    cond6 = Condition(e_is_p is None, evidence, e_is_p)

    # P Boolean: pairwise commuting and (when finite) closed under the operations
    pw = next(((p, q) for p, q in itertools.combinations(projections, 2) if not commutes(p, q)), None)
    if pw is not None:
        p_boolean = Condition(False, "noncommuting projections", pw)
        view = None
    else:
        try:
            view = boolean_view(c, projections) if c.enumerable_E else None
            p_boolean = Condition(True, evidence)
        except NotBoolean as exc:
            view = None
            p_boolean = Condition(False, str(exc), exc.counterexample)
        if view is None and p_boolean.value:
            p_boolean = Condition(True, "sampled, pairwise compatible")

    def generates(view_) -> Condition:
        if view_ is None:
            if p_boolean.value is False:
                return Condition(False, "P is not Boolean")
            return Condition(None, "no finite atom set")
        bad = next((g for g in group if _integer_coefficients(view_, g) is None), None)
        return Condition(bad is None, "integer atom decompositions", bad)

    gen = generates(view)
    cond1 = Condition(bool(p_boolean.value and gen.value), f"{p_boolean.evidence}; {gen.evidence}",
                      p_boolean.witness or gen.witness)

    nc = next(((g, h) for g, h in itertools.combinations(group, 2) if not commutes(g, h)), None)
    if nc is not None:
        cond2 = Condition(False, "G not commutative", nc)
    else:
        cond2 = Condition(gen.value, "commutative; " + gen.evidence, gen.witness)

    ell = _ell_group(c, group, projections, rng)
    cond3 = Condition(None if ell.value is None else bool(ell.value and cond6.value),
                      f"{ell.evidence}; E=P: {cond6.value}", ell.witness or cond6.witness)

    if ell.value:
        interp = Condition(True, "suprema give interpolants")
    else:
        interp = ell
    unit = next((e for e in effects if e != one and c.is_order_unit(e)), None)
    minimal = Condition(unit is None, "no effect below 1 is an order unit", unit)
    cond4 = Condition(None if interp.value is None else bool(interp.value and minimal.value),
                      f"{interp.evidence}; {minimal.evidence}", interp.witness or minimal.witness)

    cw = _complement_witness(c, effects)
    if cw is not None:
        cond5 = Condition(False, "nonzero common lower bound of e and 1-e", cw)
    elif c.enumerable_E and len(effects) <= 64:
        ok, bad = _finite_boolean(c, effects)
        cond5 = Condition(ok, "brute-force Boolean algebra check", bad)
    else:
        cond5 = Condition(True, "sampled: no complement violation found")
        notes.append("condition (v) is sampled evidence only")

    return BringConditions([cond1, cond2, cond3, cond4, cond5, cond6], notes)


# ----------------------------------------------------------------------------
# Boolean homomorphisms and their extension
# ----------------------------------------------------------------------------


@dataclass
class BooleanHom:
    """A map between the Boolean algebras of two b-rings, tabulated on the source."""

    source: BooleanView
    target: BooleanView
    table: dict

    @classmethod
    def from_atoms(cls, source: BooleanView, target: BooleanView, atom_images: dict) -> "BooleanHom":
        t = target.carrier
        table = {}
        for p in source.universe:
            img = t.zero()
            for a in source.below(p):
                img = target.join(img, atom_images[a])
            table[p] = img
        return cls(source, target, table)

    def __call__(self, p):
        return self.table[p]

    def violations(self) -> list[tuple[str, object]]:
        s, t = self.source, self.target
        sc, tc = s.carrier, t.carrier
        out = []
        if self(sc.zero()) != tc.zero():
            out.append(("hom.zero", sc.zero()))
        if self(sc.one()) != tc.one():
            out.append(("hom.one", sc.one()))
        for p, q in itertools.product(s.universe, repeat=2):
            if self(s.meet(p, q)) != t.meet(self(p), self(q)):
                out.append(("hom.meet", (p, q)))
            if self(s.join(p, q)) != t.join(self(p), self(q)):
                out.append(("hom.join", (p, q)))
        for p in s.universe:
            if self(s.complement(p)) != t.complement(self(p)):
                out.append(("hom.complement", p))
        return out


class RingHom:
    """Additive extension of a Boolean homomorphism through atom coefficients."""

    def __init__(self, phi: BooleanHom):
        self.phi = phi
        self.source = phi.source.carrier
        self.target = phi.target.carrier

    def __call__(self, g):
        coeffs = _integer_coefficients(self.phi.source, g)
        if coeffs is None:
            raise NotABRing(f"{g!r} is not an integer combination of atoms")
        total = self.target.zero()
        for a, k in zip(self.phi.source.atoms, coeffs):
            if k:
                total = total + self.phi(a) * k
        return total

    def via_effects(self, g):
        """Second route: write g = a - b in E+ and map the effect summands."""
        c = self.source
        m = c.order_unit_index(-g)
        a, b = g + c.scalar(m), c.scalar(m)
        total = self.target.zero()
        for e in c.decompose_positive(a):
            total = total + self.phi(e)
        for e in c.decompose_positive(b):
            total = total - self.phi(e)
        return total


def extend_boolean_hom(phi: BooleanHom, s: SampleStrategy | None = None,
                       report: bool = False):
    """Extend phi to an order-preserving unital ring homomorphism Phi.

    Raises :class:`BooleanHomError` naming the first Boolean law phi breaks.
    With ``report=True`` also returns the verification report of Phi.
    """
    bad = phi.violations()
    if bad:
        raise BooleanHomError(*bad[0])
    big = RingHom(phi)
    if not report:
        return big
    s = s or SampleStrategy(seed=0, case_budget=200)
    return big, verify_hom_extension(big, s)


def verify_hom_extension(big: RingHom, s: SampleStrategy) -> VerificationReport:
    c, t = big.source, big.target
    rec = Recorder("boolean-hom", c, s, "sampled")
    rng = s.rng("hom")
    group = [c.sample_G(rng, s.magnitude_bound) for _ in range(max(s.case_budget // 4, 20))]

    def rec_ok(tag, inputs, ok, expected, actual):
        rec.record(tag, inputs, None if ok else (expected, actual))

    rec_ok("th:Booext.unit", (), big(c.one()) == t.one(), "Phi(1) = 1", big(c.one()))
    for g, h in zip(group, group[1:]):
        a, b = big(g + h), big(g) + big(h)
        rec_ok("th:Booext.additive", (g, h), a == b, "Phi(g+h) = Phi(g)+Phi(h)", (a, b))
        a, b = big(g * h), big(g) * big(h)
        rec_ok("th:Booext.multiplicative", (g, h), a == b, "Phi(gh) = Phi(g)Phi(h)", (a, b))
        k = g + h * h  # g <= k
        rec_ok("th:Booext.order", (g, k), leq(t, big(g), big(k)), "Phi order preserving",
               (big(g), big(k)))
    for g in group:
        a, b = big(g), big.via_effects(g)
        rec_ok("th:Booext.unique", (g,), a == b, "extensions agreeing on E agree on G", (a, b))
    return rec.done()


# ----------------------------------------------------------------------------
# Stone representation
# ----------------------------------------------------------------------------


@dataclass
class StoneModel:
    source: Carrier
    atoms: list
    target: FunctionCarrier
    report: VerificationReport | None = None

    @property
    def points(self) -> tuple[str, ...]:
        return self.target.space.points

    @property
    def field(self) -> list[frozenset]:
        return self.target.space.sets()

    def forward(self, g):
        view = BooleanView(self.source, [], self.atoms)
        coeffs = _integer_coefficients(view, g)
        if coeffs is None:
            raise NotABRing(f"{g!r} is not an integer combination of atoms")
        return self.target.element(coeffs)

    def backward(self, f):
        total = self.source.zero()
        for a, k in zip(self.atoms, f.values):
            if k:
                total = total + a * int(k)
        return total


def _stone_model(c: Carrier) -> StoneModel:
    view = boolean_view(c, [e for e in c.enumerate_E() if is_projection(c, e)])
    space = MeasurableSpace.from_atoms([[f"a{i}"] for i in range(len(view.atoms))])
    return StoneModel(c, view.atoms, FunctionCarrier(space, INTEGERS))


_MODELS: dict[int, tuple[Carrier, StoneModel]] = {}


def _model_for(c: Carrier) -> StoneModel:
    hit = _MODELS.get(id(c))
    if hit is None or hit[0] is not c:
        hit = (c, _stone_model(c))
        _MODELS[id(c)] = hit
    return hit[1]


@law("th:bring.additive")
def _st_add(c, g, h):
    m = _model_for(c)
    a, b = m.forward(g + h), m.forward(g) + m.forward(h)
    return holds(a == b, "Phi(g+h) = Phi(g)+Phi(h)", (a, b))


@law("th:bring.multiplicative")
def _st_mul(c, g, h):
    m = _model_for(c)
    a, b = m.forward(g * h), m.forward(g) * m.forward(h)
    return holds(a == b, "Phi(gh) = Phi(g)Phi(h)", (a, b))


@law("th:bring.order")
def _st_order(c, g, h):
    m = _model_for(c)
    a, b = leq(c, g, h), leq(m.target, m.forward(g), m.forward(h))
    return holds(a == b, "g <= h iff Phi(g) <= Phi(h)", (a, b))


@law("th:bring.unit")
def _st_unit(c):
    m = _model_for(c)
    x = m.forward(c.one())
    return holds(x == m.target.one(), "Phi(1) = 1", x)


@law("th:bring.round-trip")
def _st_round(c, g):
    m = _model_for(c)
    x = m.backward(m.forward(g))
    return holds(x == g, "Phi^-1(Phi(g)) = g", x)


@law("th:bring.round-trip-target")
def _st_round_target(c, values):
    m = _model_for(c)
    f = m.target.element(values)
    x = m.forward(m.backward(f))
    return holds(x == f, "Phi(Phi^-1(f)) = f", x)


@law("th:bring.boolean")
def _st_boolean(c, e, f):
    m = _model_for(c)
    t = m.target
    fe, ff = m.forward(e), m.forward(f)
    ok = (t.is_in_E(fe) and m.forward(e * f) == fe * ff
          and m.forward(e + f - e * f) == fe + ff - fe * ff
          and m.forward(c.one() - e) == t.one() - fe)
    return holds(ok, "phi preserves meet, join, complement on E", (fe, ff))


@law("th:bring.bijective")
def _st_bijective(c):
    m = _model_for(c)
    images = {m.forward(e) for e in c.enumerate_E()}
    target = set(m.target.enumerate_E())
    return holds(images == target and len(images) == len(c.enumerate_E()),
                 "phi is a bijection of E onto the target effects", len(images))


@law("th:bring.reduced")
def _st_reduced(c, g):
    m = _model_for(c)
    x = m.forward(g)
    power = x
    for _ in range(3):
        power = power * x
        if power == m.target.zero():
            return holds(x == m.target.zero(), "no nonzero nilpotents", x)
    return None


def stone_represent(c: Carrier, s: SampleStrategy | None = None) -> StoneModel:
    """Build the isomorphism onto Z-valued functions on the atoms of E and verify it."""
    s = s or SampleStrategy(seed=0, case_budget=1000)
    if not c.enumerable_E:
        raise NotABRing(f"{c.kind} carrier has no finite E")
    verdict = bring_conditions(c, s)
    if not verdict.all_true:
        raise NotABRing(f"not a b-ring: conditions {verdict.values}")
    model = _model_for(c)
    rec = Recorder("stone", c, s, "exhaustive on E, sampled on G")
    rng = s.rng("stone")
    effects = c.enumerate_E()
    group = [c.sample_G(rng, s.magnitude_bound) for _ in range(s.case_budget)]

    rec.check("th:bring.unit")
    rec.check("th:bring.bijective")
    for e, f in itertools.product(effects, repeat=2):
        rec.check("th:bring.boolean", e, f)
        rec.check("th:bring.additive", e, f)
        rec.check("th:bring.multiplicative", e, f)
        rec.check("th:bring.order", e, f)
    for e in effects:
        rec.check("th:bring.round-trip", e)
    for i, g in enumerate(group):
        h = group[(i * 7 + 3) % len(group)]
        rec.check("th:bring.round-trip", g)
        rec.check("th:bring.additive", g, h)
        rec.check("th:bring.multiplicative", g, h)
        rec.check("th:bring.order", g, h)
        rec.check("th:bring.order", g, g + h * h)
        rec.check("th:bring.reduced", g)
        vals = [int(v) for v in model.target.sample_G(rng, s.magnitude_bound).values]
        rec.check("th:bring.round-trip-target", vals)
    model.report = rec.done()
    return model


# ----------------------------------------------------------------------------
# Suites
# ----------------------------------------------------------------------------


@law("th:E=P")
def _th_e_equals_p(c, seed):
    res = bring_conditions(c, SampleStrategy(seed=seed, case_budget=200))
    return holds(res.agree, "six conditions agree", res.values)


def verify_bring_suite(c: Carrier, s: SampleStrategy) -> VerificationReport:
    rec = Recorder("bring", c, s, "exhaustive" if c.enumerable_E else "sampled")
    res = bring_conditions(c, s)
    rec.record("th:E=P", (s.seed,), holds(res.agree, "six conditions agree", res.values))
    for i, cond in enumerate(res.conditions, 1):
        rec.note(f"condition {i}: {cond.value} ({cond.evidence})")
    for n in res.notes:
        rec.note(n)
    return rec.done()


@law("th:ellgroup.sup")
def _ell_sup(c, g, h, k):
    s = lattice_sup(c, g, h)
    if leq(c, g, k) and leq(c, h, k):
        return holds(leq(c, s, k), "g v h <= every upper bound", (s, k))
    return holds(leq(c, g, s) and leq(c, h, s), "g, h <= g v h", s)


@law("th:ellgroup.interpolation")
def _ell_interp(c, a, b, cc, d):
    t = check_interpolation(c, a, b, cc, d)
    ok = all(leq(c, x, t) for x in (a, b)) and all(leq(c, t, y) for y in (cc, d))
    return holds(ok, "a, b <= t <= c, d", t)


@law("th:ellBoo.commute")
def _ell_boo(c, g, p):
    return holds(commutes(g, p), "G inside C(P)", (g * p, p * g))


def verify_boolean_suite(c: Carrier, s: SampleStrategy) -> VerificationReport:
    """Lattice order, interpolation, commutation with P and hom extension."""
    if not c.supports_split():
        raise UnsupportedCarrier(f"{c.kind} carrier is not lattice ordered by construction")
    rec = Recorder("boolean", c, s, "sampled")
    rng = s.rng("boolean")
    group = [c.sample_G(rng, s.magnitude_bound) for _ in range(max(s.case_budget // 4, 20))]
    effects = _tested_effects(c, s)
    projections = [p for p in c.projection_universe() if is_projection(c, p)]
    for _ in range(s.case_budget):
        g, h = rng.choice(group), rng.choice(group)
        k = lattice_sup(c, g, h) + rng.choice(effects)
        rec.check("th:ellgroup.sup", g, h, k)
        rec.check("th:ellgroup.sup", g, h, rng.choice(group))
        cc = k + rng.choice(effects)
        d = k + rng.choice(effects)
        rec.check("th:ellgroup.interpolation", g, h, cc, d)
    for g in group:
        for p in projections:
            rec.check("th:ellBoo.commute", g, p)
    if _is_integer_function_ring(c):
        view = boolean_view(c)
        phis = _sample_homs(view, rng)
        for p, q in itertools.product(view.universe, repeat=2):
            rec.check("hom.meet", p, q)
            rec.check("hom.join", p, q)
        for p in view.universe:
            rec.check("hom.complement", p)
        for phi in phis:
            if not phi.violations():
                rec.report.merge(verify_hom_extension(RingHom(phi), s))
    return rec.done()


def _carrier_hom(c: Carrier) -> BooleanHom:
    """The Boolean map a carrier supplies for testing (identity unless overridden)."""
    view = boolean_view(c)
    return _sample_homs(view, None)[0]


@law("hom.meet")
def _hom_meet(c, p, q):
    phi = _carrier_hom(c)
    a, b = phi(p * q), phi(p) * phi(q)
    return holds(a == b, "phi(p meet q) = phi(p) meet phi(q)", (a, b))


@law("hom.join")
def _hom_join(c, p, q):
    phi = _carrier_hom(c)
    a, b = phi(p + q - p * q), phi.target.join(phi(p), phi(q))
    return holds(a == b, "phi(p join q) = phi(p) join phi(q)", (a, b))


@law("hom.complement")
def _hom_complement(c, p):
    phi = _carrier_hom(c)
    a, b = phi(c.one() - p), c.one() - phi(p)
    return holds(a == b, "phi(1-p) = 1 - phi(p)", (a, b))


def _sample_homs(view: BooleanView, rng) -> list[BooleanHom]:
    """The carrier's own map if it has one; else identity, permutation, evaluation."""
    c = view.carrier
    atoms = view.atoms
    override = getattr(c, "boolean_hom_override", None)
    broken = override(view) if override else None
    if broken is not None:
        return [broken]
    homs = [BooleanHom.from_atoms(view, view, {a: a for a in atoms})]
    if rng is None:
        return homs
    perm = list(atoms)
    rng.shuffle(perm)
    homs.append(BooleanHom.from_atoms(view, view, dict(zip(atoms, perm))))
    # evaluation at the first atom: a0 -> 1, every other atom -> 0
    ev = {a: (c.one() if i == 0 else c.zero()) for i, a in enumerate(atoms)}
    homs.append(BooleanHom.from_atoms(view, view, ev))
    return homs


def verify_stone_suite(c: Carrier, s: SampleStrategy) -> VerificationReport:
    model = stone_represent(c, s)
    return model.report
