"""Decide the e-ring axioms on a carrier and check the basic order lemmas.

Universally quantified laws are evaluated on enumerated effects when the
carrier can list them, and on seeded samples otherwise; the report's
``evidence`` field says which. Samples of the positive cone are built as
explicit sums of effects, so their membership in E+ never depends on the
carrier's own oracle, and the oracle is checked against them.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .carriers import Carrier
from .report import (
    EXHAUSTIVE,
    LAWS,
    Recorder,
    SampleStrategy,
    StrategyError,
    VerificationReport,
    holds,
    law,
    replay,
)

__all__ = [
    "SampleStrategy",
    "StrategyError",
    "VerificationReport",
    "leq",
    "order_unit_index",
    "verify_ering_axioms",
    "verify_lemma_suite",
    "effect_pool",
    "positive_pool",
    "replay",
    "LAWS",
]

# cap on distinct exhaustive cone elements before falling back to sampling
_MAX_CONE = 4000


def leq(c: Carrier, g, h) -> bool:
    """g <= h in the order of the directed group: h - g lies in E+."""
    return c.is_in_Eplus(h - g)


def order_unit_index(c: Carrier, g) -> int:
    """Least n >= 0 with g <= n*1."""
    return c.order_unit_index(g)


def _dedupe(xs) -> list:
    seen = set()
    out = []
    for x in xs:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out


def effect_pool(c: Carrier, s: SampleStrategy, label: str = "effects") -> list:
    """Effects to quantify over: all of E, or constructed + oracle-filtered samples."""
    if s.mode == EXHAUSTIVE:
        return c.enumerate_E()
    rng = s.rng(label)
    n = max(8, min(s.case_budget // 10, 80))
    pool = [c.zero(), c.one()]
    pool += c.projection_universe(rng)
    pool += [c.sample_effect(rng) for _ in range(n)]
    pool += c.candidate_effects(rng, n)
    return _dedupe(pool)


def positive_pool(c: Carrier, s: SampleStrategy, effects: list, label: str = "cone") -> list:
    """Elements of E+ generated as sums of at most ``magnitude_bound`` effects.

    Exhaustive mode lists every distinct sum when there are few enough of
    them; otherwise sums are drawn with the strategy's seed.
    """
    length = s.magnitude_bound
    if s.mode == EXHAUSTIVE:
        level = _dedupe(effects)
        seen = set(level)
        everything = list(level)
        for _ in range(length - 1):
            nxt = []
            for a in level:
                for e in effects:
                    x = a + e
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
            everything += nxt
            level = nxt
            if len(everything) > _MAX_CONE:
                break
        else:
            return everything
    rng = s.rng(label)
    out = []
    for _ in range(max(s.case_budget // 4, 16)):
        k = rng.randint(1, length)
        total = c.zero()
        for _ in range(k):
            total = total + rng.choice(effects)
        out.append(total)
    return _dedupe(out)


# ----------------------------------------------------------------------------
# Axioms
# ----------------------------------------------------------------------------


@law("ering.closure.0")
def _closure_zero(c):
    return holds(c.is_in_E(c.zero()), "0 in E", "0 rejected")


@law("ering.closure.1")
def _closure_one(c):
    return holds(c.is_in_E(c.one()), "1 in E", "1 rejected")


@law("ering.closure.ortho")
def _closure_ortho(c, e):
    if not c.is_in_E(e):
        return None
    return holds(c.is_in_E(c.one() - e), "1-e in E", f"1-e = {c.one() - e!r} rejected")


@law("ering.cone")
def _cone(c, a):
    # a is a generated effect sum; the oracle must accept it
    return holds(c.is_in_Eplus(a), "generated sum in E+", f"oracle rejects {a!r}")


@law("ering.i")
def _ax_i(c, a):
    if c.is_in_Eplus(a) and c.is_in_Eplus(-a):
        return holds(a == c.zero(), "a = 0", f"a = {a!r}")
    return None


@law("ering.ii")
def _ax_ii(c, a):
    if c.is_in_Eplus(c.one() - a):
        return holds(c.is_in_E(a), "a in E", f"{a!r} not in E")
    return None


@law("ering.iii")
def _ax_iii(c, a, b):
    ab = a * b
    if ab == b * a:
        return holds(c.is_in_Eplus(ab), "ab in E+", f"ab = {ab!r}")
    return None


@law("ering.iv")
def _ax_iv(c, a, b):
    aba = a * b * a
    return holds(c.is_in_Eplus(aba), "aba in E+", f"aba = {aba!r}")


@law("ering.v")
def _ax_v(c, a, b):
    if a * b * a == c.zero():
        z = c.zero()
        return holds(a * b == z and b * a == z, "ab = ba = 0", f"ab = {a * b!r}, ba = {b * a!r}")
    return None


@law("ering.vi")
def _ax_vi(c, a, b):
    d = a - b
    sq = d * d
    return holds(c.is_in_Eplus(sq), "(a-b)^2 in E+", f"(a-b)^2 = {sq!r}")


def _evidence(s: SampleStrategy) -> str:
    return "exhaustive" if s.mode == EXHAUSTIVE else "sampled"


def verify_ering_axioms(c: Carrier, s: SampleStrategy) -> VerificationReport:
    """Check the e-ring conditions (i)-(vi) and the closure laws on ``c``."""
    s.require_compatible(c)
    rec = Recorder("axioms", c, s, _evidence(s))
    rng = s.rng("axiom-pairs")
    effects = effect_pool(c, s)
    if s.mode == EXHAUSTIVE:
        # oracle-filtered samples still matter when the oracle itself is suspect
        effects = _dedupe(effects + [e for e in c.candidate_effects(s.rng("candidates"), 32)])
    cone = positive_pool(c, s, effects)

    rec.check("ering.closure.0")
    rec.check("ering.closure.1")
    for e in effects:
        rec.check("ering.closure.ortho", e)
    for a in cone:
        rec.check("ering.cone", a)
        rec.check("ering.i", a)
        rec.check("ering.ii", a)

    binary = ("ering.iii", "ering.iv", "ering.v", "ering.vi")
    pairs = []
    if s.mode == EXHAUSTIVE:
        pairs += list(itertools.product(effects, repeat=2))
    else:
        one = c.one()
        pairs += [(e, one - e) for e in effects]
    pairs += [(rng.choice(cone), rng.choice(cone)) for _ in range(s.case_budget)]
    for a, b in pairs:
        for tag in binary:
            rec.check(tag, a, b)
    if s.mode == EXHAUSTIVE and len(cone) > _MAX_CONE:
        rec.note("cone too large to list; sums were sampled")
    return rec.done()


# ----------------------------------------------------------------------------
# Order lemmas
# ----------------------------------------------------------------------------


@law("th:G.directed")
def _directed(c, g):
    m = c.order_unit_index(-g)
    a = g + c.scalar(m)
    b = c.scalar(m)
    ok = c.is_in_Eplus(a) and c.is_in_Eplus(b) and a - b == g
    return holds(ok, "g = a - b with a, b in E+", f"a = {a!r}, b = {b!r}")


@law("AA.i")
def _aa_i(c, g):
    return holds(c.is_in_Eplus(g * g), "g^2 in E+", f"g^2 = {g * g!r}")


@law("AA.ii")
def _aa_ii(c, g, h):
    x = g * h + h * g
    return holds(c.is_in_G(x), "gh+hg in G", f"gh+hg = {x!r}")


@law("AA.iii")
def _aa_iii(c, g, h):
    if not c.is_in_Eplus(g):
        return None
    x = g * h * g
    return holds(c.is_in_G(x), "ghg in G", f"ghg = {x!r}")


@law("AA.iv")
def _aa_iv(c, p, h):
    x = p * h * p
    return holds(c.is_in_G(x), "php in G", f"php = {x!r}")


@law("AA.v")
def _aa_v(c, p, h):
    if not c.is_in_Eplus(h):
        return None
    x = p * h * p
    return holds(c.is_in_Eplus(x), "php in E+", f"php = {x!r}")


@law("E.i")
def _e_i(c, g):
    between = leq(c, c.zero(), g) and leq(c, g, c.one())
    return holds(c.is_in_E(g) == between, "e in E iff 0 <= e <= 1",
                 f"in E: {c.is_in_E(g)}, between: {between}")


@law("E.ii")
def _e_ii(c):
    return holds(c.is_projection(c.zero()) and c.is_projection(c.one()), "0, 1 in P", "missing")


@law("E.iii")
def _e_iii(c, p):
    if not c.is_projection(p):
        return None
    q = c.one() - p
    return holds(c.is_projection(q), "1-p in P", f"1-p = {q!r}")


@law("E.iv")
def _e_iv(c, p):
    if not c.is_projection(p):
        return None
    return holds(c.is_in_E(p), "p in E", f"{p!r} not in E")


def _chain(c, *xs) -> bool:
    return all(leq(c, x, y) for x, y in zip(xs, xs[1:]))


@law("FF.i")
def _ff_i(c, e, f):
    ef = e * f
    if ef != f * e:
        return None
    ok = _chain(c, c.zero(), ef, e, c.one()) and leq(c, ef, f) and leq(c, f, c.one())
    return holds(ok, "0 <= ef <= e, f <= 1", f"ef = {ef!r}")


@law("FF.ii")
def _ff_ii(c, d, e):
    ede = e * d * e
    ok = _chain(c, c.zero(), ede, e * e, e, c.one())
    return holds(ok, "0 <= ede <= e^2 <= e <= 1", f"ede = {ede!r}, e^2 = {e * e!r}")


@law("FF.iii")
def _ff_iii(c, e, f):
    ef = e * f
    if ef != f * e:
        return None
    j = e + f - ef
    ok = leq(c, c.zero(), e) and leq(c, c.zero(), f) and _chain(c, e, j, c.one()) and leq(c, f, j)
    return holds(ok, "0 <= e, f <= e+f-ef <= 1", f"e+f-ef = {j!r}")


@law("FF.iv")
def _ff_iv(c, e):
    x = e - e * e
    ok = (leq(c, c.zero(), x) and leq(c, x, e) and leq(c, x, c.one() - e)
          and leq(c, e, c.one()) and leq(c, c.one() - e, c.one()))
    return holds(ok, "0 <= e-e^2 <= e, 1-e <= 1", f"e-e^2 = {x!r}")


@law("M.i")
def _m_i(c, g, h):
    z = c.zero()
    if g * h == z:
        return holds(h * g == z, "hg = 0", f"hg = {h * g!r}")
    return None


@law("M.ii")
def _m_ii(c, g, h, k):
    if g * k != k * g or h * k != k * h or not leq(c, g, h):
        return None
    return holds(leq(c, g * k, h * k), "gk <= hk", f"gk = {g * k!r}, hk = {h * k!r}")


@law("M.iii")
def _m_iii(c, g, h):
    if g * h != h * g or not leq(c, g, h):
        return None
    return holds(leq(c, g * g, h * h), "g^2 <= h^2", f"g^2 = {g * g!r}, h^2 = {h * h!r}")


@law("M.iv")
def _m_iv(c, g, p, n):
    if not leq(c, g, p * n):
        return None
    return holds(g == g * p and g == p * g, "g = gp = pg", f"gp = {g * p!r}, pg = {p * g!r}")


@law("M.v")
def _m_v(c, g, n):
    x = g
    for _ in range(n - 1):
        x = x * g
    if x == c.zero():
        return holds(g == c.zero(), "g = 0", f"g = {g!r}")
    return None


@law("orderunit.i")
def _ou_i(c, g):
    n = c.order_unit_index(g)
    ok = leq(c, g, c.scalar(n)) and (n == 0 or not leq(c, g, c.scalar(n - 1)))
    return holds(ok, "g <= n*1 with n least", f"n = {n}")


@law("orderunit.ii")
def _ou_ii(c, *parts):
    if not all(c.is_in_Eplus(a) for a in parts):
        return None
    total = c.zero()
    for a in parts:
        total = total + a
    if total != c.zero():
        return None
    return holds(all(a == c.zero() for a in parts), "all summands 0", f"summands {list(parts)!r}")


def cc_conditions(c, e, p) -> list[bool]:
    """The five equivalent ways of saying e <= p for an effect e and projection p."""
    ep, pe = e * p, p * e
    return [leq(c, e, p), e == ep and e == pe, e == p * e * p, e == ep, e == pe]


def dd_conditions(c, e, p) -> list[bool]:
    """The five equivalent ways of saying p <= e."""
    ep, pe = e * p, p * e
    return [leq(c, p, e), p == ep and p == pe, p + p * e * p == pe + ep, p == ep, p == pe]


@law("CC")
def _cc(c, e, p):
    vals = cc_conditions(c, e, p)
    return holds(len(set(vals)) == 1, "all five agree", vals)


@law("DD")
def _dd(c, e, p):
    vals = dd_conditions(c, e, p)
    return holds(len(set(vals)) == 1, "all five agree", vals)


def _commuting_family(c, e):
    """Polynomials in one effect: g = e^2, h = e^2 + e, k = 1 - e all commute, g <= h."""
    g = e * e
    return g, g + e, c.one() - e


def verify_lemma_suite(c: Carrier, s: SampleStrategy) -> VerificationReport:
    """Check the order lemmas of the basic theory (AA, E, FF, M, orderunit, CC, DD)."""
    s.require_compatible(c)
    rec = Recorder("lemmas", c, s, _evidence(s))
    rng = s.rng("lemmas")
    effects = effect_pool(c, s)
    cone = positive_pool(c, s, effects)
    projections = [p for p in c.projection_universe(s.rng("projections")) if c.is_in_G(p)]
    group = [c.sample_G(rng, s.magnitude_bound) for _ in range(max(s.case_budget // 10, 10))]
    group += effects[:20]
    one = c.one()

    def pick(xs):
        return xs[rng.randrange(len(xs))]

    rec.check("E.ii")
    for p in projections:
        rec.check("E.iii", p)
        rec.check("E.iv", p)
    for g in group:
        rec.check("th:G.directed", g)
        rec.check("AA.i", g)
        rec.check("E.i", g)
        rec.check("orderunit.i", g)
    for e in effects:
        rec.check("E.i", e)
        rec.check("FF.iv", e)

    for _ in range(s.case_budget):
        g, h = pick(group), pick(group)
        rec.check("AA.ii", g, h)
        rec.check("AA.iii", pick(cone), h)
        p = pick(projections)
        rec.check("AA.iv", p, g)
        rec.check("AA.v", p, pick(cone))

    # commuting effect pairs: every pair when enumerable, polynomial families otherwise
    if s.mode == EXHAUSTIVE:
        ff_pairs = list(itertools.product(effects, repeat=2))
    else:
        ff_pairs = []
        for _ in range(s.case_budget):
            e = pick(effects)
            ff_pairs.append((e, pick([e * e, one - e, e * Fraction(1, 2), one, c.zero()])))
            ff_pairs.append((e, pick(effects)))
    for e, f in ff_pairs:
        rec.check("FF.i", e, f)
        rec.check("FF.ii", f, e)
        rec.check("FF.iii", e, f)

    for _ in range(s.case_budget):
        e = pick(effects)
        g, h, k = _commuting_family(c, e)
        rec.check("M.ii", g, h, k)
        rec.check("M.iii", g, h)
        a, b = pick(cone), pick(cone)
        rec.check("M.ii", a, b, pick(cone))
        rec.check("M.iii", a, b)
        p = pick(projections)
        # orthogonal compressions multiply to zero
        x, y = p * a * p, (one - p) * b * (one - p)
        rec.check("M.i", x, y)
        rec.check("M.i", a, b)
        n = rng.randint(1, 4)
        rec.check("M.iv", x * n, p, n)
        rec.check("M.iv", a, p, n)
        rec.check("M.v", a, rng.randint(1, 4))
    rec.check("M.v", c.zero(), 3)

    for a in cone[: s.case_budget]:
        rec.check("orderunit.ii", a, c.zero())
        if c.is_in_Eplus(-a):
            rec.check("orderunit.ii", a, -a)

    # CC and DD: enumerate E x P when possible, otherwise build e <= p and p <= e
    if s.mode == EXHAUSTIVE:
        cc_pairs = list(itertools.product(effects, projections))
    else:
        cc_pairs = []
        for _ in range(s.case_budget):
            p, f = pick(projections), pick(effects)
            cc_pairs += [(p * f * p, p), (f, p), (one - (one - p) * f * (one - p), p)]
    for e, p in cc_pairs:
        if not c.is_in_G(e):
            continue
        rec.check("CC", e, p)
        rec.check("DD", e, p)
    rec.note("E.iii is closure of P under 1-p, E.iv is P contained in E")
    return rec.done()
