"""The Daniell extension: monotone limits and dyadic level-set integration.

Closed-form oracle for the central example x(t) = t on [0, 1):
E_{k,n} = [k·2⁻ⁿ, 1), so the n-th dyadic sum is

    S_n = 2⁻ⁿ Σ_{k=1}^{2ⁿ−1} (1 − k·2⁻ⁿ) = 1/2 − 2^{−n−1},

hence S₁ = 1/4, S₂ = 3/8, and |S_n − 1/2| = 2^{−n−1} < 2⁻ⁿ.
"""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from daniell.extension import (
    Direction,
    MeasurableFunction,
    MonotoneSequence,
    approximate_in_t0,
    dyadic_levels,
    i1_limit,
    indicator_measurable,
    is_daniell_measurable,
    level_set_integral,
    measure_from_integral,
    null_test,
)
from daniell.extreal import POS_INF, ExtReal
from daniell.functional import ElementaryIntegral, NonMonotoneSequence
from daniell.lattice import SimpleFunction
from daniell.rings import (
    RingSet,
    Universe,
    length_premeasure,
    weighted_counting_premeasure,
)

LINE = Universe.real_line()
LENGTH = ElementaryIntegral(length_premeasure())


def dyadic_sum(x, i, n):
    """Oracle: S_n computed directly from the level sets."""
    total = sum((i.mu(e).value for e in dyadic_levels(x, n)), Fraction(0))
    return total / 2**n


# -- the identity-function example -------------------------------------------


def test_identity_level_sets():
    x = MeasurableFunction.identity_on(0, 1)
    levels = dyadic_levels(x, 2)
    # E_{k,2} = [k/4, 1) for k = 1, 2, 3; empty from k = 4 on
    assert levels[0] == RingSet.interval(Fraction(1, 4), 1)
    assert levels[1] == RingSet.interval(Fraction(1, 2), 1)
    assert levels[2] == RingSet.interval(Fraction(3, 4), 1)
    assert len(levels) <= 4


def test_identity_partial_sums_exact():
    x = MeasurableFunction.identity_on(0, 1)
    assert dyadic_sum(x, LENGTH, 1) == Fraction(1, 4)
    assert dyadic_sum(x, LENGTH, 2) == Fraction(3, 8)
    for n in range(1, 11):
        assert dyadic_sum(x, LENGTH, n) == Fraction(1, 2) - Fraction(1, 2 ** (n + 1))


def test_identity_integral_bracket():
    x = MeasurableFunction.identity_on(0, 1)
    res = level_set_integral(x, LENGTH, n_max=10)
    half = ExtReal(Fraction(1, 2))
    assert res.lower <= half <= res.upper
    assert res.upper.value - res.lower.value <= Fraction(1, 2**10)


def test_bracket_rule_width():
    # S_n ≤ ∫x ≤ S_n + 2⁻ⁿ·μ(support), since x − φ_n < 2⁻ⁿ on the support
    x = MeasurableFunction.identity_on(0, 2)
    for n in (3, 5):
        res = level_set_integral(x, LENGTH, n_max=n)
        assert res.lower.value <= Fraction(2) <= res.upper.value
        assert res.upper.value - res.lower.value <= Fraction(2, 2**n)


def test_level_sets_nest():
    x = MeasurableFunction.identity_on(0, 1)
    for n in (1, 2, 3):
        levels = dyadic_levels(x, n)
        for a, b in zip(levels, levels[1:]):
            assert b.subset_of(a)


# -- monotone limits (I1) ----------------------------------------------------


def stabilizing_sequence(values):
    """Simple functions stabilizing at `values` on a finite universe."""
    u = Universe.finite(tuple(values))
    full = SimpleFunction.of(
        u, [(Fraction(v), RingSet.finite(u, (lab,))) for lab, v in values.items()]
    )

    def gen(n):
        if n == 0:
            return SimpleFunction.zero(u)
        return full.scale(min(Fraction(n, 3), Fraction(1)))

    return u, full, gen


def test_monotone_convergence_stabilizing():
    values = {"a": Fraction(2), "b": Fraction(5, 2)}
    u, full, gen = stabilizing_sequence(values)
    i = ElementaryIntegral(weighted_counting_premeasure(u))
    seq = MonotoneSequence(gen, Direction.INCREASING, probes=list(values))
    res = i1_limit(i.integrate, seq, depth=10)
    assert res.converged
    assert res.value == ExtReal(i.integrate(full))


def test_decreasing_to_zero_integrals_vanish():
    # the D2 axiom: x_n ↓ 0 pointwise forces I(x_n) ↓ 0
    values = {"a": Fraction(1), "b": Fraction(3)}
    u, full, gen = stabilizing_sequence(values)
    i = ElementaryIntegral(weighted_counting_premeasure(u))
    seq = MonotoneSequence(
        lambda n: full.scale(Fraction(1, 2**n)),
        Direction.DECREASING,
        probes=list(values),
    )
    seq.check_monotone(12)
    vals = [i.integrate(seq.term(n)) for n in range(1, 13)]
    assert all(a >= b for a, b in zip(vals, vals[1:]))
    assert vals[-1] < Fraction(1, 100)
    # the increasing-limit engine refuses decreasing input outright
    with pytest.raises(ValueError):
        i1_limit(i.integrate, seq, depth=4)


def test_non_monotone_sequence_rejected():
    values = {"a": Fraction(1)}
    u, full, gen = stabilizing_sequence(values)

    def bad(n):
        return full if n % 2 == 0 else SimpleFunction.zero(u)

    seq = MonotoneSequence(bad, Direction.INCREASING, probes=["a"])
    with pytest.raises(NonMonotoneSequence):
        seq.check_monotone(4)


def test_divergent_sequence_reports_infinity():
    u = Universe.finite(("a",))
    i = ElementaryIntegral(weighted_counting_premeasure(u))
    chi = SimpleFunction.indicator(RingSet.finite(u, ("a",)))
    seq = MonotoneSequence(lambda n: chi.scale(2**n), Direction.INCREASING, ["a"])
    res = i1_limit(i.integrate, seq, depth=200, ceiling=Fraction(10**6))
    assert res.value == POS_INF


def test_tail_bound_certifies_bracket():
    u = Universe.finite(("a",))
    i = ElementaryIntegral(weighted_counting_premeasure(u))
    chi = SimpleFunction.indicator(RingSet.finite(u, ("a",)))
    seq = MonotoneSequence(
        lambda n: chi.scale(1 - Fraction(1, n + 1)), Direction.INCREASING, ["a"]
    )
    res = i1_limit(
        i.integrate, seq, depth=50, tail_bound=lambda n: Fraction(1, n + 1)
    )
    assert res.lower <= ExtReal(1) <= res.upper


# -- measure recovered from the integral --------------------------------------


@given(
    st.lists(
        st.tuples(
            st.fractions(min_value=-4, max_value=4, max_denominator=4),
            st.fractions(min_value=Fraction(1, 4), max_value=3, max_denominator=4),
        ),
        min_size=1,
        max_size=3,
    )
)
@settings(max_examples=60, deadline=None)
def test_measure_from_integral_matches_length(pieces):
    e = RingSet.from_intervals([(a, a + w) for a, w in pieces])
    mu = length_premeasure()
    assert measure_from_integral(LENGTH, e) == mu(e)


def test_measure_from_integral_counting_exhaustive():
    u = Universe.finite(tuple("abcd"))
    mu = weighted_counting_premeasure(
        u, {lab: Fraction(i, 2) for i, lab in enumerate(u.labels, 1)}
    )
    i = ElementaryIntegral(mu)
    for k in range(5):
        for labs in itertools.combinations(u.labels, k):
            e = RingSet.finite(u, labs)
            assert measure_from_integral(i, e) == mu(e)


def test_indicator_is_daniell_measurable():
    e = RingSet.interval(0, 1)
    x = indicator_measurable(e)
    rng = random.Random(3)
    probes = [
        SimpleFunction.indicator(
            RingSet.interval(Fraction(rng.randint(-2, 4), 2), Fraction(rng.randint(3, 8), 2)),
            Fraction(rng.randint(1, 4)),
        )
        for _ in range(10)
    ]
    assert is_daniell_measurable(x, probes, LENGTH, n_max=8)["pass"]


# -- null functions and approximation ------------------------------------------


def test_null_test_on_zero_weight_atom():
    u = Universe.finite(("a", "b"))
    mu = weighted_counting_premeasure(u, {"a": Fraction(0), "b": Fraction(1)})
    i = ElementaryIntegral(mu)
    x = MeasurableFunction.from_simple(
        SimpleFunction.indicator(RingSet.finite(u, ("a",)), Fraction(7))
    )
    ok, report = null_test(x, i)
    assert ok, report
    y = MeasurableFunction.from_simple(
        SimpleFunction.indicator(RingSet.finite(u, ("b",)))
    )
    ok, _ = null_test(y, i)
    assert not ok


def test_approximate_in_t0_bracket():
    x = MeasurableFunction.identity_on(0, 1)
    phi = approximate_in_t0(x, LENGTH, eps=Fraction(1, 64))
    # φ ≤ x pointwise and ∫(x − φ) < ε
    for k in range(0, 64):
        t = Fraction(k, 64)
        assert phi.eval(t) <= x.eval(t)
    gap = Fraction(1, 2) - LENGTH.integrate(phi)
    assert 0 <= gap <= Fraction(1, 64)


def test_integral_result_json():
    x = MeasurableFunction.identity_on(0, 1)
    res = level_set_integral(x, LENGTH, n_max=6)
    obj = res.to_json()
    assert ExtReal.from_json(obj["value"]) == res.value
    assert obj["depth"] == res.depth_used
