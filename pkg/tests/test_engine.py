import itertools
import math
import random
from fractions import Fraction

import pytest

from polydep import (
    Chain,
    FImage,
    Laurent2,
    NewChainElement,
    Relation,
    StdMonomial,
    UniPoly,
    assert_char0_polynomiality,
    prime_field,
    rationals,
    reduce_step,
    run,
    substitute,
)
from polydep.errors import (
    ConstantInput,
    IterationCapExceeded,
    NotDivisible,
    WrongCharacteristic,
)
from gen import random_pair

Q = rationals()
F2 = prime_field(2)


def poly(field, *coeffs):
    return UniPoly.make(field, coeffs)


def z_pow(field, k):
    return UniPoly.monomial(field, k)


def golden_pair(field):
    return z_pow(field, 4), poly(field, 0, -1, 0, 0, 0, 0, 1)  # z^4, z^6 - z


def L(field, mapping):
    return Laurent2.make(field, mapping)


# -- standard monomial lookup --------------------------------------------------


def fresh_chain(field, f, g):
    chain = Chain(field, f)
    chain.append(Laurent2.g_gen(field), FImage.from_poly(g, f))
    return chain


def test_std_monomial_degree12_is_f_cubed():
    chain = fresh_chain(Q, *golden_pair(Q))
    mono = chain.std_monomial_of_degree(0, 12)
    assert mono == StdMonomial(3, (0,))


def test_std_monomial_degree14_is_f2_g():
    result = run(*golden_pair(Q))
    mono = result.chain.std_monomial_of_degree(1, 14)
    assert mono == StdMonomial(2, (1, 0))


def test_std_monomial_degree0_is_empty():
    result = run(*golden_pair(Q))
    s = len(result.chain.steps) - 1
    mono = result.chain.std_monomial_of_degree(s, 0)
    assert mono.fexp == 0 and all(j == 0 for j in mono.gexps)


def test_std_monomial_not_divisible():
    chain = fresh_chain(Q, *golden_pair(Q))
    with pytest.raises(NotDivisible):
        chain.std_monomial_of_degree(0, 7)


def test_std_monomial_negative_degree():
    result = run(*golden_pair(F2))
    mono = result.chain.std_monomial_of_degree(1, -6)
    assert result.chain.monomial_degree(mono) == -6
    assert mono == StdMonomial(-3, (1, 0))


# -- reduce_step ---------------------------------------------------------------


def test_reduce_step_produces_g1():
    chain = fresh_chain(Q, *golden_pair(Q))
    outcome = reduce_step(chain, 0)
    assert isinstance(outcome, NewChainElement)
    assert outcome.symbolic == L(Q, {(0, 2): 1, (3, 0): -1})  # g^2 - f^3
    assert outcome.image == FImage.from_poly(
        poly(Q, 0, 0, 1, 0, 0, 0, 0, -2), chain.f  # -2z^7 + z^2
    )


def test_reduce_step_produces_relation():
    f, g = golden_pair(Q)
    chain = fresh_chain(Q, f, g)
    chain.append(*_new_element(chain, 0))
    outcome = reduce_step(chain, 1)
    assert isinstance(outcome, Relation)
    assert outcome.relation == L(
        Q, {(0, 4): 1, (3, 2): -2, (6, 0): 1, (2, 1): -4, (1, 0): -1}
    )


def test_reduce_step_char2():
    chain = fresh_chain(F2, *golden_pair(F2))
    outcome = reduce_step(chain, 0)
    assert isinstance(outcome, NewChainElement)
    assert outcome.symbolic == L(F2, {(0, 2): 1, (3, 0): 1, (-1, 1): 1})
    assert outcome.image.zdeg() == -3


def _new_element(chain, s):
    outcome = reduce_step(chain, s)
    assert isinstance(outcome, NewChainElement)
    return outcome.symbolic, outcome.image


# -- run: golden examples ------------------------------------------------------


def test_run_golden_rationals():
    result = run(*golden_pair(Q))
    assert result.relation == L(
        Q, {(0, 4): 1, (3, 2): -2, (6, 0): 1, (2, 1): -4, (1, 0): -1}
    )
    assert result.m_sequence == (6, 7)
    assert result.d_sequence == (2, 1)
    assert result.a_sequence == (2, 2)
    assert not result.swapped


def test_run_golden_char2():
    result = run(*golden_pair(F2))
    assert result.relation == L(F2, {(0, 4): 1, (6, 0): 1, (1, 0): 1})
    g1 = result.chain[1]
    assert g1.symbolic == L(F2, {(0, 2): 1, (3, 0): 1, (-1, 1): 1})
    assert g1.image.zdeg() == -3
    assert not g1.symbolic.is_polynomial()
    assert not result.swapped  # 2 divides both degrees: no exchange


def test_run_cusp():
    result = run(z_pow(Q, 2), z_pow(Q, 3))
    assert result.relation == L(Q, {(0, 2): 1, (3, 0): -1})  # g^2 - f^3
    assert len(result.chain.steps) == 1
    assert result.m_sequence == (3,)
    assert result.d_sequence == (1,)


def test_run_962_instance():
    f = poly(Q, 0, 6, 0, 0, 0, 6, 0, 0, 0, 1)  # z^9 + 6z^5 + 6z
    g = poly(Q, 0, 0, 4, 0, 0, 0, 1)  # z^6 + 4z^2
    result = run(f, g)
    assert result.m_sequence == (6, 2)
    assert result.d_sequence == (3, 1)
    assert result.relation_gdeg == 9
    g1 = result.chain[1]
    assert g1.image == FImage.from_poly(poly(Q, 0, 0, -4), f)  # -4z^2
    assert g1.symbolic == L(Q, {(0, 3): 1, (2, 0): -1, (0, 1): 8})  # g^3 - f^2 + 8g


def test_run_linear_f():
    result = run(UniPoly.z(Q), poly(Q, 1, 0, 1))  # f = z, g = z^2 + 1
    assert result.relation == L(Q, {(0, 1): 1, (2, 0): -1, (0, 0): -1})  # g - f^2 - 1


def test_run_linear_nonmonic():
    f, g = poly(Q, 3, 2), poly(Q, 1, 7)  # 2z + 3, 7z + 1
    result = run(f, g)
    assert result.relation == L(Q, {(0, 1): 1, (1, 0): Fraction(-7, 2), (0, 0): Fraction(19, 2)})
    assert not substitute(result.relation, f, g)


def test_run_equal_inputs():
    result = run(z_pow(Q, 2), z_pow(Q, 2))
    assert result.relation == L(Q, {(0, 1): 1, (1, 0): -1})  # g - f
    assert result.d_sequence == (2,)


def test_run_rejects_constants():
    with pytest.raises(ConstantInput):
        run(poly(Q, 5), UniPoly.z(Q))
    with pytest.raises(ConstantInput):
        run(UniPoly.z(Q), poly(Q, 5))


def test_run_iteration_cap_is_diagnostic():
    with pytest.raises(IterationCapExceeded):
        run(*golden_pair(Q), max_reductions=1)


def test_char_p_swap():
    f3 = prime_field(3)
    f = poly(f3, 1, 1, 1)  # degree 2, not divisible by 3
    g = poly(f3, 0, 1, 0, 1)  # degree 3, divisible by 3
    result = run(f, g)
    assert result.swapped
    assert result.f.degree == 3 and result.g.degree == 2
    assert not substitute(result.relation, result.f, result.g)
    # with p not dividing gcd of degrees, the whole chain stays polynomial
    assert all(st.symbolic.is_polynomial() for st in result.chain.steps)


def test_char_p_no_swap_when_g_degree_clean():
    f3 = prime_field(3)
    f = poly(f3, 0, 2, 1, 0, 0, 0, 1)  # degree 6, divisible by 3
    g = poly(f3, 0, 1, 0, 0, 1)  # degree 4, not divisible by 3
    result = run(f, g)
    assert not result.swapped  # deg g is already clean; roles kept


def test_assert_char0_polynomiality():
    assert assert_char0_polynomiality(run(*golden_pair(Q))) is True
    f = poly(Q, 0, 6, 0, 0, 0, 6, 0, 0, 0, 1)
    g = poly(Q, 0, 0, 4, 0, 0, 0, 1)
    assert assert_char0_polynomiality(run(f, g)) is True
    with pytest.raises(WrongCharacteristic):
        assert_char0_polynomiality(run(*golden_pair(F2)))


# -- structural invariants on random runs ---------------------------------------


def check_chain_invariants(result):
    chain = result.chain
    n = result.n
    d_prev = n
    prefix = 1
    for st in chain.steps:
        assert st.m != 0
        if st.index >= 1:
            assert st.m % d_prev != 0
        assert st.d == math.gcd(d_prev, abs(st.m))
        assert st.a == d_prev // st.d
        assert st.d < d_prev or st.index == 0
        assert st.symbolic.deg_g == prefix
        assert st.symbolic.is_monic_in_g()
        prefix *= st.a
        d_prev = st.d
    assert result.relation_gdeg * result.d_final == n
    assert result.relation.is_monic_in_g()
    assert result.relation.is_polynomial()
    assert len(chain.steps) <= n


def check_event_invariants(result):
    by_step = {}
    for ev in result.trace:
        by_step.setdefault(ev.step, []).append(ev)
    for events in by_step.values():
        degrees = [ev.degree_before for ev in events]
        assert degrees == sorted(degrees, reverse=True)
        assert len(set(degrees)) == len(degrees)


def test_random_runs_satisfy_invariants():
    rng = random.Random(2468)
    fields = [Q, F2, prime_field(5)]
    for i in range(60):
        field = fields[i % 3]
        f, g = random_pair(rng, field, max_degree=8)
        result = run(f, g)
        check_chain_invariants(result)
        check_event_invariants(result)
        assert not substitute(result.relation, result.f, result.g)
        for st in result.chain.steps:
            assert substitute(st.symbolic, result.f, result.g) == st.image


def test_symbolic_image_lockstep_replay():
    # replay the trace of a small run and compare both tracks event by event
    f, g = golden_pair(Q)
    result = run(f, g)
    chain = result.chain
    for s, step in enumerate(chain.steps):
        r_sym = step.symbolic**step.a
        r_img = step.image**step.a
        for ev in (e for e in result.trace if e.step == s):
            assert r_img.zdeg() == ev.degree_before
            r_img = r_img - chain.monomial_image(ev.monomial).scale(ev.coefficient)
            r_sym = r_sym - chain.monomial_symbolic(ev.monomial).scale(ev.coefficient)
            assert substitute(r_sym, f, g) == r_img


def test_monomial_combinatorics_on_goldens():
    for field in (Q, F2):
        result = run(*golden_pair(field))
        chain = result.chain
        s = len(chain.steps) - 1
        n = result.n
        d_s = result.d_final
        ranges = [range(st.a) for st in chain.steps]
        degrees = []
        gdegrees = []
        prefix = [1]
        for st in chain.steps:
            prefix.append(prefix[-1] * st.a)
        for gexps in itertools.product(*ranges):
            deg = sum(j * st.m for j, st in zip(gexps, chain.steps))
            degrees.append(deg)
            gdegrees.append(sum(j * prefix[k] for k, j in enumerate(gexps)))
        assert len({d % n for d in degrees}) == n // d_s
        assert all(d % d_s == 0 for d in degrees)
        assert sorted(gdegrees) == list(range(n // d_s))
        # lookup inverts the degree map on a window of multiples of d_s
        for deg in range(-3 * n, 3 * n + 1):
            if deg % d_s == 0:
                mono = chain.std_monomial_of_degree(s, deg)
                assert chain.monomial_degree(mono) == deg
                assert all(0 <= j < st.a for j, st in zip(mono.gexps, chain.steps))


def test_run_field_argument_checked():
    from polydep.errors import FieldMismatch

    f, g = golden_pair(Q)
    with pytest.raises(FieldMismatch):
        run(f, g, field=F2)


def test_nonmonic_inputs():
    # non-monic f and g still give a monic-in-g polynomial relation
    f = poly(Q, 1, 0, 3)  # 3z^2 + 1
    g = poly(Q, 0, 2, 0, -5)  # -5z^3 + 2z
    result = run(f, g)
    check_chain_invariants(result)
    assert not substitute(result.relation, f, g)
    # and with a non-monic base in characteristic p, where negative powers
    # of f can enter the chain, the z-leading-coefficient logic must hold
    f5 = prime_field(5)
    fb = poly(f5, 0, 0, 0, 0, 3)  # 3z^4
    gb = poly(f5, 0, 4, 0, 0, 0, 0, 2)  # 2z^6 + 4z
    res = run(fb, gb)
    check_chain_invariants(res)
    assert not substitute(res.relation, fb, gb)
