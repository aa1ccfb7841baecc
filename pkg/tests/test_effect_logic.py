import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from erings.effect_logic import (
    UNDEFINED,
    Coexistence,
    Effect,
    EffectError,
    coexistence_witness,
    commutant,
    commutes,
    is_sharp,
    oplus,
    orthosupplement,
    verify_effect_suite,
)
from erings.exact_numeric import SymMatrix
from erings.report import SampleStrategy
from oracles import coexistent_brute_force

H = F(1, 2)


def test_effect_validation(z2):
    with pytest.raises(EffectError):
        Effect(z2, z2.element([2, 0]))


def test_oplus_examples(z2, m2):
    e = Effect(z2, z2.element([1, 0]))
    assert oplus(e, Effect(z2, z2.zero())) == e
    assert oplus(e, Effect(z2, z2.one())) is UNDEFINED
    s = oplus(Effect(m2, m2.unit_projection(0) * H), Effect(m2, m2.uniform_projection() * H))
    assert s.element == SymMatrix([[F(3, 4), F(1, 4)], [F(1, 4), F(1, 4)]])


def test_orthosupplement_examples(q2g4, m2):
    assert orthosupplement(Effect(q2g4, q2g4.zero())).element == q2g4.one()
    e = Effect(q2g4, q2g4.element([F(3, 4), F(1, 4)]))
    assert orthosupplement(e).element == q2g4.element([F(1, 4), F(3, 4)])
    q1 = m2.uniform_projection()
    assert orthosupplement(orthosupplement(Effect(m2, q1))).element == q1


def test_sharpness_examples(z2, m2):
    from erings.carriers import RATIONALS, make_function_carrier

    rep = is_sharp(Effect(z2, z2.element([1, 0])), SampleStrategy.auto(z2))
    assert rep.sharp and rep.consistent
    q = make_function_carrier(2, RATIONALS, 2)
    rep = is_sharp(Effect(q, q.element([H, 0])), SampleStrategy.auto(q))
    assert not rep.sharp and rep.consistent
    assert rep.witnesses["common_lower_bound"] in (q.element([H, 0]), q.element([F(1, 4), 0]))
    rep = is_sharp(Effect(m2, m2.uniform_projection()), SampleStrategy(seed=1, case_budget=100))
    assert rep.sharp and rep.consistent


def test_commutation_examples(m2, z2):
    p1, q1 = m2.unit_projection(0), m2.uniform_projection()
    assert commutes(q1, q1) and not commutes(p1, q1)
    rng = random.Random(0)
    assert all(commutes(z2.sample_G(rng, 5), z2.sample_G(rng, 5)) for _ in range(50))
    one, zero = m2.one(), m2.zero()
    universe = [zero, one, p1, q1, one - p1]
    assert commutant(one, universe) == universe
    assert commutant(p1, universe) == [zero, one, p1, one - p1]
    assert commutant([p1, q1], universe) == [zero, one]


def test_coexistence_examples(m2, q2g4):
    p1, q1 = m2.unit_projection(0), m2.uniform_projection()
    res = coexistence_witness(Effect(m2, p1 * H), Effect(m2, q1 * H), SampleStrategy(seed=0))
    assert res.verdict is Coexistence.COEXISTENT and res.witness.d == m2.zero()
    assert not commutes(p1 * H, q1 * H)

    e, f = q2g4.element([F(3, 4), F(1, 4)]), q2g4.element([H, F(3, 4)])
    w = coexistence_witness(Effect(q2g4, e), Effect(q2g4, f), SampleStrategy(seed=0)).witness
    assert (w.d, w.e1, w.f1) == (q2g4.element([F(1, 4), 0]), q2g4.element([H, F(1, 4)]),
                                 q2g4.element([F(1, 4), F(3, 4)]))
    one = Effect(q2g4, q2g4.one())
    w = coexistence_witness(one, one, SampleStrategy(seed=0)).witness
    assert (w.d, w.e1, w.f1) == (q2g4.one(), q2g4.zero(), q2g4.zero())


def test_noncommuting_projections_are_not_coexistent(m2):
    res = coexistence_witness(Effect(m2, m2.unit_projection(0)), Effect(m2, m2.uniform_projection()),
                              SampleStrategy(seed=0))
    assert res.verdict is Coexistence.NOT_COEXISTENT


def test_coexistence_matches_definition_on_grid(q2g4):
    es = q2g4.enumerate_E()
    s = SampleStrategy.auto(q2g4)
    for e, f in itertools.product(es, repeat=2):
        res = coexistence_witness(Effect(q2g4, e), Effect(q2g4, f), s)
        assert bool(res) == coexistent_brute_force(q2g4, e, f, es)
        if res:
            assert res.witness.validate(q2g4, e, f)


def _quarter_effects(m2):
    vals = [F(k, 4) for k in range(-2, 5)]
    out = []
    for a, b, d in itertools.product(vals, repeat=3):
        x = SymMatrix([[a, b], [b, d]])
        if m2.is_in_E(x):
            out.append(x)
    return out


def test_matrix_coexistence_never_contradicts_brute_force(m2):
    universe = _quarter_effects(m2)
    rng = random.Random(4)
    s = SampleStrategy(seed=0, case_budget=100)
    for _ in range(40):
        e, f = rng.choice(universe), rng.choice(universe)
        res = coexistence_witness(Effect(m2, e), Effect(m2, f), s)
        if res.verdict is Coexistence.COEXISTENT:
            assert res.witness.validate(m2, e, f)
        if coexistent_brute_force(m2, e, f, universe):
            assert res.verdict is not Coexistence.NOT_COEXISTENT


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=4, max_size=4))
def test_commuting_effects_always_coexist(vals):
    from erings.carriers import RATIONALS, make_function_carrier

    c = make_function_carrier(2, RATIONALS, 4)
    e = c.element([F(v, 4) for v in vals[:2]])
    f = c.element([F(v, 4) for v in vals[2:]])
    res = coexistence_witness(Effect(c, e), Effect(c, f), SampleStrategy(seed=0))
    assert res.verdict is Coexistence.COEXISTENT and res.witness.validate(c, e, f)


def test_effect_suite_passes(q2g4, m2):
    assert verify_effect_suite(q2g4, SampleStrategy.auto(q2g4, 0, 100)).passed
    r = verify_effect_suite(m2, SampleStrategy(seed=0, case_budget=80))
    assert r.passed
