"""The unit interval E as an effect algebra.

Covers the partial sum, orthosupplement, sharpness, commutants and a
witness search for coexistence of two effects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .axiom_engine import effect_pool, leq
from .carriers import Carrier, CarrierError, FunctionCarrier, ProductCarrier
from .report import EXHAUSTIVE, SEEDED, Recorder, SampleStrategy, VerificationReport, holds, law


class EffectError(ValueError):
    """An element is not an effect, or effects from different carriers were mixed."""


@dataclass(frozen=True)
class Effect:
    carrier: Carrier = field(compare=False, hash=False, repr=False)
    element: object

    def __post_init__(self):
        if not self.carrier.is_in_E(self.element):
            raise EffectError(f"{self.element!r} is not an effect")

    def __repr__(self):
        return f"Effect({self.element!r})"


class _Undefined:
    """Marker returned by :func:`oplus` when e + f leaves the unit interval."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNDEFINED"

    def __bool__(self):
        return False


UNDEFINED = _Undefined()


def _same(e: Effect, f: Effect) -> Carrier:
    if e.carrier is not f.carrier:
        raise EffectError("effects come from different carriers")
    return e.carrier


def oplus(e: Effect, f: Effect):
    """Partial sum: e + f when it is again an effect, else UNDEFINED."""
    c = _same(e, f)
    s = e.element + f.element
    return Effect(c, s) if c.is_in_E(s) else UNDEFINED


def orthosupplement(e: Effect) -> Effect:
    return Effect(e.carrier, e.carrier.one() - e.element)


def commutes(g, h) -> bool:
    return g * h == h * g


def commutant(g, universe: list) -> list:
    """Members of ``universe`` commuting with ``g``; ``g`` may also be a list X,
    in which case the result commutes with every member of X."""
    xs = g if isinstance(g, (list, tuple)) else [g]
    return [h for h in universe if all(commutes(x, h) for x in xs)]


# ----------------------------------------------------------------------------
# Sharpness
# ----------------------------------------------------------------------------


@dataclass
class SharpnessReport:
    effect: object
    sharp: bool
    down_set_additive: bool
    no_common_lower_bound: bool
    witnesses: dict
    evidence: str
    cases: int

    @property
    def consistent(self) -> bool:
        return self.sharp == self.down_set_additive == self.no_common_lower_bound


def is_sharp(e: Effect, s: SampleStrategy, ds: list | None = None) -> SharpnessReport:
    """Decide sharpness by idempotence and cross-check two order conditions.

    Condition (ii): no nonzero effect lies below both e and 1-e.
    Condition (i): the down-set of e is closed under existing sums.
    Both quantify over E; they are evaluated over ``ds`` (default: all of E
    when enumerable, else seeded samples) together with e - e^2, which is
    the canonical common lower bound whenever e is not idempotent.
    """
    c = e.carrier
    x = e.element
    one, zero = c.one(), c.zero()
    sharp = x * x == x
    if ds is None:
        s.require_compatible(c)
        ds = effect_pool(c, s, "sharp-d")
    canonical = x - x * x
    candidates = list(ds) + [canonical]
    comp = one - x
    cases = 0
    witnesses: dict = {}

    no_common = True
    below = []
    for d in candidates:
        cases += 1
        if not c.is_in_E(d):
            continue
        if leq(c, d, x):
            below.append(d)
            if leq(c, d, comp) and d != zero:
                no_common = False
                witnesses.setdefault("common_lower_bound", d)

    additive = True
    pairs = [(a, b) for a in below for b in below]
    if canonical != zero:
        pairs.append((canonical, x))
    for a, b in pairs:
        cases += 1
        t = a + b
        if c.is_in_E(t) and not leq(c, t, x):
            additive = False
            witnesses.setdefault("sum_escapes", (a, b))
            break
    return SharpnessReport(x, sharp, additive, no_common, witnesses,
                           "exhaustive" if s.mode == EXHAUSTIVE else "sampled", cases)


@law("th:sharp")
def _sharp_law(c, e):
    rep = is_sharp(Effect(c, e), _sharp_strategy(c))
    vals = [rep.down_set_additive, rep.no_common_lower_bound, rep.sharp]
    return holds(len(set(vals)) == 1, "(i), (ii), (iii) agree", vals)


def _sharp_strategy(c: Carrier) -> SampleStrategy:
    return SampleStrategy(EXHAUSTIVE if c.enumerable_E else SEEDED, 0, 200, 2)


# ----------------------------------------------------------------------------
# Coexistence
# ----------------------------------------------------------------------------


class Coexistence(str, Enum):
    COEXISTENT = "coexistent"
    NOT_COEXISTENT = "not_coexistent"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class CoexistenceWitness:
    """Effects d, e1, f1 with e = d + e1, f = d + f1 and d + e1 + f1 in E."""

    d: object
    e1: object
    f1: object

    def validate(self, c: Carrier, e, f) -> bool:
        return (all(c.is_in_E(x) for x in (self.d, self.e1, self.f1))
                and c.is_in_E(self.d + self.e1 + self.f1)
                and e == self.d + self.e1 and f == self.d + self.f1)


@dataclass
class CoexistenceResult:
    verdict: Coexistence
    witness: CoexistenceWitness | None = None
    route: str = ""

    def __bool__(self):
        return self.verdict is Coexistence.COEXISTENT


def witness_from_d(c: Carrier, e, f, d) -> CoexistenceWitness | None:
    """Turn a single effect d into a three-effect witness, if it qualifies.

    Claim: e, f are coexistent iff some d in E has d <= e, d <= f and
    e + f - d in E; then (d, e - d, f - d) is a witness.
    Proof. Given such d: e - d >= 0 and e - d <= e <= 1, so e1 := e - d is
    an effect, likewise f1 := f - d, and d + e1 + f1 = e + f - d is in E.
    Conversely a witness (d, e1, f1) gives d <= d + e1 = e since e1 >= 0,
    d <= f likewise, and e + f - d = d + e1 + f1 lies in E.
    """
    if not c.is_in_E(d) or not leq(c, d, e) or not leq(c, d, f):
        return None
    if not c.is_in_E(e + f - d):
        return None
    return CoexistenceWitness(d, e - d, f - d)


def _base_kind(c: Carrier) -> str:
    if isinstance(c, ProductCarrier):
        kinds = {_base_kind(c.left), _base_kind(c.right)}
        return kinds.pop() if len(kinds) == 1 else "mixed"
    return c.kind


def _pointwise_overlap(c: Carrier, e, f):
    """max(0, e + f - 1) coordinatewise; always a valid d on function rings."""
    if isinstance(c, FunctionCarrier):
        return c.element([max(Fraction(0), a + b - 1) for a, b in zip(e.values, f.values)])
    if isinstance(c, ProductCarrier):
        return c.pair(_pointwise_overlap(c.left, e.left, f.left),
                      _pointwise_overlap(c.right, e.right, f.right))
    raise CarrierError("pointwise overlap only exists on function rings")


def coexistence_witness(e: Effect, f: Effect, s: SampleStrategy) -> CoexistenceResult:
    """Search for a coexistence witness; never reports a false negative.

    Order: d = 0 when e + f is an effect; the pointwise overlap on
    function rings; d = ef when e and f commute; then a seeded search over
    scaled candidates. When one of e, f is a projection, coexistence is
    equivalent to commuting and the answer is certain. Otherwise an exhausted
    search is UNDECIDED.
    """
    c = _same(e, f)
    x, y = e.element, f.element
    zero = c.zero()

    w = witness_from_d(c, x, y, zero)
    if w is not None:
        return CoexistenceResult(Coexistence.COEXISTENT, w, "sum-is-effect")
    # on function rings every pair commutes; the overlap is the smallest d
    if _base_kind(c) == FunctionCarrier.kind:
        w = witness_from_d(c, x, y, _pointwise_overlap(c, x, y))
        if w is not None:
            return CoexistenceResult(Coexistence.COEXISTENT, w, "pointwise-overlap")
    if commutes(x, y):
        w = witness_from_d(c, x, y, x * y)
        if w is not None:
            return CoexistenceResult(Coexistence.COEXISTENT, w, "product")

    # a witness d, e1 = e - d, f1 = f - d with f a projection gives d <= f and
    # e1 <= 1 - f, and effects below a projection commute with it; so e would
    # commute with f
    if (c.is_projection(x) or c.is_projection(y)) and not commutes(x, y):
        return CoexistenceResult(Coexistence.NOT_COEXISTENT, None, "projection-commutation")

    rng = s.rng("coexistence")
    one = c.one()
    seeds = [x, y, x * y * x, y * x * y, (x * y + y * x) * Fraction(1, 2),
             x + y - one, x * x, y * y]
    seeds = [g for g in seeds if c.is_in_G(g)]
    pool = effect_pool(c, s, "coexistence-pool") if c.enumerable_E or s.mode == SEEDED else []
    tried = 0
    for g in seeds + pool:
        for k in (1, 2, 3, 4, 6, 8):
            tried += 1
            w = witness_from_d(c, x, y, g * Fraction(1, k))
            if w is not None:
                return CoexistenceResult(Coexistence.COEXISTENT, w, "search")
    while tried < s.case_budget:
        tried += 1
        d = c.sample_effect(rng) * Fraction(1, rng.randint(1, 8))
        w = witness_from_d(c, x, y, d)
        if w is not None:
            return CoexistenceResult(Coexistence.COEXISTENT, w, "search")
    return CoexistenceResult(Coexistence.UNDECIDED, None, "search-exhausted")


# ----------------------------------------------------------------------------
# Suite
# ----------------------------------------------------------------------------


@law("EA.comm")
def _oplus_comm(c, e, f):
    a, b = oplus(Effect(c, e), Effect(c, f)), oplus(Effect(c, f), Effect(c, e))
    return holds(a == b, "e+f = f+e", (a, b))


@law("EA.assoc")
def _oplus_assoc(c, e, f, g):
    E = lambda x: Effect(c, x)  # noqa: E731
    ef = oplus(E(e), E(f))
    fg = oplus(E(f), E(g))
    left = oplus(ef, E(g)) if ef else UNDEFINED
    right = oplus(E(e), fg) if fg else UNDEFINED
    return holds(left == right, "(e+f)+g = e+(f+g)", (left, right))


@law("EA.ortho")
def _oplus_ortho(c, e):
    s = oplus(Effect(c, e), orthosupplement(Effect(c, e)))
    return holds(s and s.element == c.one(), "e + (1-e) = 1", s)


@law("coexist.commuting")
def _coexist_commuting(c, e, f):
    if not commutes(e, f):
        return None
    res = coexistence_witness(Effect(c, e), Effect(c, f), SampleStrategy(seed=0, case_budget=50))
    ok = res.verdict is Coexistence.COEXISTENT and res.witness.validate(c, e, f)
    return holds(ok, "commuting effects are coexistent", res.verdict.value)


@law("coexist.certificate")
def _coexist_certificate(c, e, f):
    ok = (c.is_projection(e) or c.is_projection(f)) and not commutes(e, f)
    return holds(ok, "a projection that does not commute with the other effect", (e, f))


@law("coexist.witness")
def _coexist_witness(c, e, f, d, e1, f1):
    ok = CoexistenceWitness(d, e1, f1).validate(c, e, f)
    return holds(ok, "d+e1+f1 in E, e = d+e1, f = d+f1", (d, e1, f1))


def verify_effect_suite(c: Carrier, s: SampleStrategy) -> VerificationReport:
    """Effect-algebra laws, sharpness equivalence and coexistence witnesses."""
    s.require_compatible(c)
    rec = Recorder("effects", c, s, "exhaustive" if s.mode == EXHAUSTIVE else "sampled")
    rng = s.rng("effect-suite")
    effects = effect_pool(c, s)
    limit = min(len(effects), 40)
    for e in effects:
        rec.check("EA.ortho", e)
    for _ in range(s.case_budget):
        e, f, g = (effects[rng.randrange(len(effects))] for _ in range(3))
        rec.check("EA.comm", e, f)
        rec.check("EA.assoc", e, f, g)
    for e in effects[:limit]:
        rep = is_sharp(Effect(c, e), s, effects)
        vals = [rep.down_set_additive, rep.no_common_lower_bound, rep.sharp]
        rec.record("th:sharp", (e,), holds(rep.consistent, "(i), (ii), (iii) agree", vals))
    for _ in range(min(s.case_budget, 200)):
        e, f = (effects[rng.randrange(len(effects))] for _ in range(2))
        res = coexistence_witness(Effect(c, e), Effect(c, f), s)
        if res.verdict is Coexistence.COEXISTENT:
            w = res.witness
            rec.check("coexist.witness", e, f, w.d, w.e1, w.f1)
        elif res.verdict is Coexistence.UNDECIDED:
            rec.undecided("coexist.search", (e, f), "bounded witness search exhausted")
        else:
            rec.check("coexist.certificate", e, f)
        if commutes(e, f):
            rec.check("coexist.commuting", e, f)
    return rec.done()
