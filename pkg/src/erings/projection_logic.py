"""Projections as an orthomodular poset, compressions and retractions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from .axiom_engine import effect_pool, leq, positive_pool
from .carriers import Carrier
from .effect_logic import commutes
from .report import EXHAUSTIVE, Recorder, SampleStrategy, VerificationReport, holds, law


class NotAProjection(ValueError):
    def __init__(self, element, reason: str = "not idempotent"):
        super().__init__(f"{element!r} is not a projection ({reason})")
        self.element = element


class IncompatibleProjections(ValueError):
    """Meet or join requested for projections that do not commute."""

    def __init__(self, p, q):
        super().__init__(f"{p!r} and {q!r} do not commute; meet/join need compatible projections")
        self.pair = (p, q)


class NotBelow(ValueError):
    pass


class RetractionError(ValueError):
    def __init__(self, message: str, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


@dataclass(frozen=True)
class Projection:
    carrier: Carrier = field(compare=False, hash=False, repr=False)
    element: object

    def __post_init__(self):
        # exact idempotence, deliberately not the carrier's oracle
        if not self.carrier.is_in_G(self.element):
            raise NotAProjection(self.element, "outside G")
        if self.element * self.element != self.element:
            raise NotAProjection(self.element)

    def __repr__(self):
        return f"Projection({self.element!r})"


def is_projection(c: Carrier, g) -> bool:
    return c.is_in_G(g) and g * g == g


def _pair(p: Projection, q: Projection) -> Carrier:
    if p.carrier is not q.carrier:
        raise ValueError("projections come from different carriers")
    return p.carrier


def proj_meet(p: Projection, q: Projection) -> Projection:
    c = _pair(p, q)
    if not commutes(p.element, q.element):
        raise IncompatibleProjections(p.element, q.element)
    return Projection(c, p.element * q.element)


def proj_join(p: Projection, q: Projection) -> Projection:
    c = _pair(p, q)
    if not commutes(p.element, q.element):
        raise IncompatibleProjections(p.element, q.element)
    return Projection(c, p.element + q.element - p.element * q.element)


def proj_orthodiff(p: Projection, q: Projection) -> Projection:
    """q - p for p <= q."""
    c = _pair(p, q)
    if not leq(c, p.element, q.element):
        raise NotBelow(f"{p.element!r} is not below {q.element!r}")
    return Projection(c, q.element - p.element)


def orthocomplement(p: Projection) -> Projection:
    return Projection(p.carrier, p.carrier.one() - p.element)


@dataclass(frozen=True)
class MackeyDecomposition:
    p1: object
    q1: object
    d: object


def mackey_compatible(p: Projection, q: Projection) -> tuple[bool, MackeyDecomposition | None]:
    """Compatibility of two projections, with d = pq, p1 = p - pq, q1 = q - pq."""
    c = _pair(p, q)
    x, y = p.element, q.element
    if not commutes(x, y):
        return False, None
    d = x * y
    dec = MackeyDecomposition(x - d, y - d, d)
    total = dec.d + dec.p1 + dec.q1
    parts_ok = all(is_projection(c, t) for t in (dec.d, dec.p1, dec.q1, total))
    if not (parts_ok and x == dec.d + dec.p1 and y == dec.d + dec.q1):
        raise AssertionError(f"commuting projections without a Mackey decomposition: {x!r}, {y!r}")
    return True, dec


# ----------------------------------------------------------------------------
# OMP laws
# ----------------------------------------------------------------------------


@law("OMP.bounds")
def _omp_bounds(c, p):
    return holds(leq(c, c.zero(), p) and leq(c, p, c.one()), "0 <= p <= 1", p)


@law("OMP.involution")
def _omp_involution(c, p):
    q = c.one() - p
    return holds(is_projection(c, q) and c.one() - q == p, "1-p in P and 1-(1-p) = p", q)


@law("OMP.order-reversal")
def _omp_reverse(c, p, q):
    if not leq(c, p, q):
        return None
    one = c.one()
    return holds(leq(c, one - q, one - p), "1-q <= 1-p", (one - q, one - p))


@law("OMP.orthogonal-sup")
def _omp_orth_sup(c, p, q):
    if not leq(c, p, c.one() - q):
        return None
    s = p + q
    ok = is_projection(c, s) and leq(c, p, s) and leq(c, q, s)
    return holds(ok, "p+q in P above p and q", s)


@law("OMP.orthogonal-sup.least")
def _omp_orth_least(c, p, q, u):
    if not leq(c, p, c.one() - q) or not (leq(c, p, u) and leq(c, q, u)):
        return None
    return holds(leq(c, p + q, u), "p+q <= every upper bound", (p + q, u))


@law("OMP.orthomodular")
def _omp_orthomodular(c, p, q):
    if not leq(c, p, q):
        return None
    r = q - p
    return holds(is_projection(c, r) and q == p + r, "q = p + (q-p), q-p in P", r)


def p_plus_q_conditions(c, p, q) -> list[bool]:
    s, pq, qp, z = p + q, p * q, q * p, c.zero()
    return [c.is_in_E(s), leq(c, s, c.one()), pq == z, pq == z and qp == z, is_projection(c, s)]


def pq_conditions(c, p, q) -> list[bool]:
    pq = p * q
    return [is_projection(c, pq), c.is_in_E(pq), pq == q * p, pq == pq * p]


@law("th:p+qinP")
def _th_p_plus_q(c, p, q):
    vals = p_plus_q_conditions(c, p, q)
    return holds(len(set(vals)) == 1, "five conditions agree", vals)


@law("th:pqinP")
def _th_pq(c, p, q):
    vals = pq_conditions(c, p, q)
    return holds(len(set(vals)) == 1, "four conditions agree", vals)


@law("th:pqinP.inf")
def _th_pq_inf(c, p, q, e):
    if not commutes(p, q):
        return None
    m = p * q
    ok = leq(c, m, p) and leq(c, m, q)
    if c.is_in_E(e) and leq(c, e, p) and leq(c, e, q):
        ok = ok and leq(c, e, m)
    return holds(ok, "pq is the greatest lower bound", (m, e))


@law("cor:pqinP.sup")
def _cor_pq_sup(c, p, q, e):
    if not commutes(p, q):
        return None
    j = p + q - p * q
    ok = is_projection(c, j) and leq(c, p, j) and leq(c, q, j)
    if c.is_in_E(e) and leq(c, p, e) and leq(c, q, e):
        ok = ok and leq(c, j, e)
    return holds(ok, "p+q-pq is the least upper bound", (j, e))


@law("cor:q-pinP")
def _cor_q_minus_p(c, p, q):
    r = q - p
    vals = [c.is_in_E(r), leq(c, p, q), is_projection(c, r)]
    return holds(len(set(vals)) == 1, "q-p in E iff p <= q iff q-p in P", vals)


@law("lm:Pnormal")
def _lm_pnormal(c, d, e, f):
    if not all(c.is_in_E(x) for x in (d, e, f, d + e + f)):
        return None
    if not (is_projection(c, d + e) and is_projection(c, d + f)):
        return None
    return holds(all(is_projection(c, x) for x in (d, e, f)), "d, e, f in P", (d, e, f))


@law("omp.member")
def _omp_member(c, x):
    return holds(is_projection(c, x), "idempotent member of G", x)


@dataclass
class OmpCertificate:
    universe: list
    report: VerificationReport

    @property
    def laws(self) -> list[str]:
        return list(self.report.laws)

    @property
    def failures(self) -> list:
        return self.report.failures

    @property
    def passed(self) -> bool:
        return self.report.passed


def _as_elements(universe) -> tuple[Carrier, list]:
    if not universe:
        raise ValueError("empty projection universe")
    c = universe[0].carrier
    for p in universe:
        if not isinstance(p, Projection):
            raise NotAProjection(p, "not wrapped as a Projection")
        if p.carrier is not c:
            raise ValueError("projections come from different carriers")
    return c, [p.element for p in universe]


def verify_omp(universe: list[Projection], s: SampleStrategy) -> OmpCertificate:
    """Check the orthomodular-poset laws pairwise over a projection universe."""
    c, ps = _as_elements(universe)
    s.require_compatible(c)
    rec = Recorder("omp", c, s, "exhaustive" if s.mode == EXHAUSTIVE else "sampled")
    for p in ps:
        rec.check("OMP.bounds", p)
        rec.check("OMP.involution", p)
    for p, q in itertools.product(ps, repeat=2):
        rec.check("OMP.order-reversal", p, q)
        rec.check("OMP.orthogonal-sup", p, q)
        rec.check("OMP.orthomodular", p, q)
        rec.check("th:p+qinP", p, q)
        rec.check("th:pqinP", p, q)
        rec.check("cor:q-pinP", p, q)
        for u in ps:
            rec.check("OMP.orthogonal-sup.least", p, q, u)

    # lm:Pnormal: triples built from compatible pairs, then sampled or listed triples
    triples = []
    for p, q in itertools.product(ps, repeat=2):
        if commutes(p, q):
            d = p * q
            triples.append((d, p - d, q - d))
    if c.enumerable_E and len(c.enumerate_E()) <= 16:
        es = c.enumerate_E()
        triples += list(itertools.product(es, repeat=3))
    else:
        rng = s.rng("pnormal")
        es = effect_pool(c, s, "pnormal-effects")
        for _ in range(s.case_budget):
            triples.append(tuple(es[rng.randrange(len(es))] for _ in range(3)))
    for d, e, f in triples:
        rec.check("lm:Pnormal", d, e, f)
    return OmpCertificate(list(universe), rec.done())


def verify_projection_order(universe: list[Projection], s: SampleStrategy,
                            effects: list | None = None) -> VerificationReport:
    """Meet, join and orthodifference against brute-force bounds in E."""
    c, ps = _as_elements(universe)
    s.require_compatible(c)
    if effects is None:
        effects = effect_pool(c, s, "order-effects")
    rec = Recorder("projections", c, s, "exhaustive" if s.mode == EXHAUSTIVE else "sampled")
    for p, q in itertools.product(ps, repeat=2):
        rec.check("th:pqinP", p, q)
        rec.check("th:p+qinP", p, q)
        rec.check("cor:q-pinP", p, q)
        rec.check("mackey", p, q)
        for e in effects:
            rec.check("th:pqinP.inf", p, q, e)
            rec.check("cor:pqinP.sup", p, q, e)
    return rec.done()


@law("mackey")
def _mackey(c, p, q):
    ok, dec = mackey_compatible(Projection(c, p), Projection(c, q))
    return holds(ok == commutes(p, q), "compatible iff commuting", ok)


# ----------------------------------------------------------------------------
# Compressions
# ----------------------------------------------------------------------------


def compress(p: Projection, g):
    """The compression of g by p: p g p."""
    x = p.element
    return x * g * x


def _J(c, p, g):
    return c.compress(p, g)


@law("J.image")
def _j_image(c, p, g):
    x = _J(c, p, g)
    return holds(c.is_in_G(x), "J_p(g) in G", x)


@law("J.additive")
def _j_additive(c, p, g, h):
    a, b = _J(c, p, g + h), _J(c, p, g) + _J(c, p, h)
    return holds(a == b, "J_p(g+h) = J_p(g) + J_p(h)", (a, b))


@law("J.positive")
def _j_positive(c, p, h):
    if not c.is_in_Eplus(h):
        return None
    x = _J(c, p, h)
    return holds(c.is_in_Eplus(x), "J_p(E+) in E+", x)


@law("J.order")
def _j_order(c, p, g, h):
    if not leq(c, g, h):
        return None
    a, b = _J(c, p, g), _J(c, p, h)
    return holds(leq(c, a, b), "J_p order preserving", (a, b))


@law("J.unit")
def _j_unit(c, p):
    x = _J(c, p, c.one())
    return holds(x == p, "J_p(1) = p", x)


@law("J.retraction")
def _j_retraction(c, p, e):
    if not (c.is_in_E(e) and leq(c, e, p)):
        return None
    x = _J(c, p, e)
    return holds(x == e, "e <= p implies J_p(e) = e", x)


@law("J.idempotent")
def _j_idempotent(c, p, g):
    x = _J(c, p, g)
    y = _J(c, p, x)
    return holds(x == y, "J_p J_p = J_p", (x, y))


@law("J.effects")
def _j_effects(c, p, e):
    if not c.is_in_E(e):
        return None
    x = _J(c, p, e)
    return holds(c.is_in_E(x), "J_p(E) in E", x)


@law("J.extremes")
def _j_extremes(c, g):
    ok = _J(c, c.zero(), g) == c.zero() and _J(c, c.one(), g) == g
    return holds(ok, "J_0 = 0, J_1 = id", g)


def verify_compression_base(universe: list[Projection], s: SampleStrategy) -> VerificationReport:
    """Check the compression laws derivable here for every p in the universe."""
    c, ps = _as_elements(universe)
    s.require_compatible(c)
    rec = Recorder("compression", c, s, "exhaustive" if s.mode == EXHAUSTIVE else "sampled")
    rec.note("compression-base (laws derivable without the external definition)")
    rng = s.rng("compression")
    effects = effect_pool(c, s, "compression-effects")
    cone = positive_pool(c, s, effects, "compression-cone")
    per_p = max(s.case_budget // max(len(ps), 1), 10)
    group = [c.sample_G(rng, s.magnitude_bound) for _ in range(per_p)]
    for g in group:
        rec.check("J.extremes", g)
    for p in ps:
        rec.check("J.unit", p)
        for e in effects:
            rec.check("J.effects", p, e)
            rec.check("J.retraction", p, e)
            # compressions of effects sit below p
            rec.check("J.retraction", p, p * e * p)
        for _ in range(per_p):
            g, h = group[rng.randrange(len(group))], group[rng.randrange(len(group))]
            a = cone[rng.randrange(len(cone))]
            rec.check("J.image", p, g)
            rec.check("J.additive", p, g, h)
            rec.check("J.idempotent", p, g)
            rec.check("J.positive", p, a)
            rec.check("J.order", p, g, g + a)
    return rec.done()


# ----------------------------------------------------------------------------
# Retractions
# ----------------------------------------------------------------------------


class EndomorphismTable:
    """Additive map given by its values on the carrier's spanning set."""

    def __init__(self, c: Carrier, images: list):
        basis = c.basis()
        if len(images) != len(basis):
            raise ValueError(f"expected {len(basis)} images, got {len(images)}")
        self.carrier = c
        self.images = list(images)

    @classmethod
    def from_callable(cls, c: Carrier, fn: Callable) -> "EndomorphismTable":
        return cls(c, [fn(b) for b in c.basis()])

    def __call__(self, g):
        c = self.carrier
        total = c.zero()
        for k, img in zip(c.coordinates(g), self.images):
            if k:
                total = total + img * k
        return total


def retraction_projection(c: Carrier, J, s: SampleStrategy | None = None) -> Projection:
    """Recover p with J = J_p from a retraction J on an archimedean carrier."""
    s = s or SampleStrategy(seed=0, case_budget=200)
    if not c.archimedean:
        raise RetractionError("carrier is not declared archimedean")
    rng = s.rng("retraction")
    samples = [c.sample_G(rng, s.magnitude_bound) for _ in range(max(s.case_budget // 4, 20))]
    if isinstance(J, EndomorphismTable):
        table = J
    else:
        table = EndomorphismTable.from_callable(c, J)
        for g, h in zip(samples, samples[1:]):
            if J(g + h) != J(g) + J(h):
                raise RetractionError("map is not additive", (g, h))
            if J(g) != table(g):
                raise RetractionError("map is not additive", (g,))
    p = table(c.one())
    if not c.is_in_E(p):
        raise RetractionError("J(1) is not an effect", p)
    effects = [c.sample_effect(rng) for _ in range(len(samples))]
    for e in effects:
        if not c.is_in_Eplus(table(e)):
            raise RetractionError("map is not order preserving", e)
        below = p * e * p
        if c.is_in_E(below) and leq(c, below, p) and table(below) != below:
            raise RetractionError("e <= J(1) but J(e) != e", below)
    if p * p != p:
        raise RetractionError("J(1) is not a projection", p)
    for g in samples + effects + c.basis():
        if table(g) != p * g * p:
            raise RetractionError("J differs from the compression by J(1)", g)
    return Projection(c, p)


# ----------------------------------------------------------------------------
# Carrier-level suites
# ----------------------------------------------------------------------------


def _checked_universe(c: Carrier, s: SampleStrategy, rec: Recorder) -> list[Projection]:
    """The carrier's projection universe; non-idempotent members become failures."""
    out = []
    for x in c.projection_universe(s.rng("universe")):
        if rec.check("omp.member", x):
            out.append(Projection(c, x))
    return out


def _suite(name: str, c: Carrier, s: SampleStrategy, body) -> VerificationReport:
    s.require_compatible(c)
    rec = Recorder(name, c, s, "exhaustive" if s.mode == EXHAUSTIVE else "sampled")
    universe = _checked_universe(c, s, rec)
    report = rec.done()
    report.merge(body(universe))
    return report


def verify_omp_suite(c: Carrier, s: SampleStrategy) -> VerificationReport:
    return _suite("omp", c, s, lambda u: verify_omp(u, s).report)


def verify_projection_suite(c: Carrier, s: SampleStrategy) -> VerificationReport:
    return _suite("projections", c, s, lambda u: verify_projection_order(u, s))


def verify_compression_suite(c: Carrier, s: SampleStrategy) -> VerificationReport:
    return _suite("compression", c, s, lambda u: verify_compression_base(u, s))
