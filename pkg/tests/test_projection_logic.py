import itertools
from fractions import Fraction as F

import pytest

from erings.carriers import make_function_carrier
from erings.exact_numeric import SymMatrix
from erings.mutants import mutate
from erings.projection_logic import (
    EndomorphismTable,
    IncompatibleProjections,
    NotAProjection,
    NotBelow,
    Projection,
    RetractionError,
    compress,
    is_projection,
    mackey_compatible,
    p_plus_q_conditions,
    pq_conditions,
    proj_join,
    proj_meet,
    proj_orthodiff,
    retraction_projection,
    verify_compression_base,
    verify_compression_suite,
    verify_omp,
    verify_projection_order,
)
from erings.report import SampleStrategy, replay
from oracles import brute_inf, brute_sup

H = F(1, 2)


def P(c, *vals):
    return Projection(c, c.element(vals))


def test_is_projection_examples(z2, m2, q2g4):
    assert is_projection(z2, z2.zero()) and is_projection(z2, z2.one())
    assert is_projection(m2, m2.uniform_projection())
    assert not is_projection(q2g4, q2g4.element([H, 1]))
    with pytest.raises(NotAProjection):
        Projection(q2g4, q2g4.element([H, 1]))


def test_meet_join_diff_examples(z2, m2):
    p, q = P(z2, 1, 0), P(z2, 1, 1)
    assert proj_meet(p, p) == p
    assert proj_meet(p, q) == p
    assert proj_join(p, P(z2, 0, 0)) == p
    assert proj_join(p, P(z2, 0, 1)) == q
    assert proj_join(p, Projection(z2, z2.one() - p.element)).element == z2.one()
    assert proj_orthodiff(P(z2, 0, 0), q) == q
    assert proj_orthodiff(p, q) == P(z2, 0, 1)
    assert proj_orthodiff(q, q).element == z2.zero()
    with pytest.raises(NotBelow):
        proj_orthodiff(q, p)
    p1, q1 = Projection(m2, m2.unit_projection(0)), Projection(m2, m2.uniform_projection())
    with pytest.raises(IncompatibleProjections):
        proj_meet(p1, q1)


def test_mackey_examples(z2, m2):
    p = P(z2, 1, 0)
    ok, dec = mackey_compatible(p, Projection(z2, z2.one() - p.element))
    assert ok and dec.d == z2.zero()
    ok, dec = mackey_compatible(p, P(z2, 1, 1))
    assert ok and (dec.d, dec.p1, dec.q1) == (z2.element([1, 0]), z2.zero(), z2.element([0, 1]))
    ok, dec = mackey_compatible(Projection(m2, m2.unit_projection(0)),
                                Projection(m2, m2.uniform_projection()))
    assert not ok and dec is None


def test_order_operations_match_brute_force(z3):
    es = z3.enumerate_E()
    ps = [Projection(z3, x) for x in z3.projection_universe()]
    assert len(ps) == 8
    for p, q in itertools.product(ps, repeat=2):
        assert proj_meet(p, q).element == brute_inf(z3, es, p.element, q.element)
        assert proj_join(p, q).element == brute_sup(z3, es, p.element, q.element)
        below = brute_inf(z3, es, p.element, q.element) == p.element
        if below:
            d = proj_orthodiff(p, q).element
            assert d == q.element - p.element and brute_inf(z3, es, d, p.element) == z3.zero()
        for vals in (p_plus_q_conditions(z3, p.element, q.element),
                     pq_conditions(z3, p.element, q.element)):
            assert len(set(vals)) == 1


def test_multiway_conditions_on_matrices(m2):
    one = m2.one()
    p1, q1 = m2.unit_projection(0), m2.uniform_projection()
    for p, q in itertools.product([m2.zero(), one, p1, one - p1, q1, one - q1], repeat=2):
        assert len(set(p_plus_q_conditions(m2, p, q))) == 1
        assert len(set(pq_conditions(m2, p, q))) == 1
    assert pq_conditions(m2, p1, q1)[0] is False


def test_omp_certificates(z3, m2):
    s = SampleStrategy.auto(z3, 0, 200)
    cert = verify_omp([Projection(z3, x) for x in z3.projection_universe()], s)
    assert cert.passed and "OMP.orthomodular" in cert.laws
    one, p1, q1 = m2.one(), m2.unit_projection(0), m2.uniform_projection()
    universe = [Projection(m2, x) for x in (m2.zero(), one, p1, one - p1, q1, one - q1)]
    assert verify_omp(universe, SampleStrategy(seed=0, case_budget=200)).passed


def test_projection_order_suite(z3, m2):
    es = z3.enumerate_E()
    ps = [Projection(z3, x) for x in z3.projection_universe()]
    assert verify_projection_order(ps, SampleStrategy.auto(z3), es).passed
    universe = [Projection(m2, x) for x in m2.projection_universe()]
    assert verify_projection_order(universe, SampleStrategy(seed=0, case_budget=50)).passed


def test_compress_examples(m2):
    p1, q1 = Projection(m2, m2.unit_projection(0)), m2.uniform_projection()
    assert compress(Projection(m2, m2.one()), q1) == q1
    assert compress(p1, q1) == SymMatrix([[H, 0], [0, 0]])
    a = SymMatrix([[2, 1], [1, 3]])
    assert m2.is_in_Eplus(compress(Projection(m2, m2.uniform_projection()), a))


def test_compression_base(z3, m2):
    ps = [Projection(z3, x) for x in z3.projection_universe()]
    assert verify_compression_base(ps, SampleStrategy.auto(z3, 0, 100)).passed
    pair = [Projection(m2, m2.unit_projection(0)), Projection(m2, m2.uniform_projection())]
    assert verify_compression_base(pair, SampleStrategy(seed=0, case_budget=500)).passed


def test_left_multiplication_is_not_a_compression(m2):
    c = mutate(m2, "left_compression")
    r = verify_compression_suite(c, SampleStrategy(seed=0, case_budget=200))
    assert not r.failures_for("J.additive")
    bad = r.failures_for("J.image")
    assert bad and not replay(c, bad[0])


def test_retraction_examples(z2, m2):
    assert retraction_projection(z2, lambda g: g).element == z2.one()
    p = z2.element([1, 0])
    assert retraction_projection(z2, lambda g: p * g * p).element == p
    with pytest.raises(RetractionError):
        retraction_projection(z2, lambda g: g * 2)
    q1 = m2.uniform_projection()
    J = EndomorphismTable.from_callable(m2, lambda g: q1 * g * q1)
    assert retraction_projection(m2, J).element == q1


def test_retraction_rejects_other_maps(m2):
    p1 = m2.unit_projection(0)
    with pytest.raises(RetractionError):
        retraction_projection(m2, lambda g: p1 * g * p1 * H)
    # J(1) = p but J is not the compression by p
    swap = SymMatrix([[0, 1], [1, 0]])
    with pytest.raises(RetractionError):
        retraction_projection(m2, lambda g: p1 * (swap * g * swap) * p1)


def test_non_idempotent_universe_member_is_reported(m2):
    from erings.projection_logic import verify_projection_suite

    c = mutate(m2, "non_idempotent_projection")
    r = verify_projection_suite(c, SampleStrategy(seed=0, case_budget=20))
    [f] = r.failures_for("omp.member")
    assert f.inputs == [{"type": "matrix", "rows": [["1/2", "0"], ["0", "1/2"]]}]
