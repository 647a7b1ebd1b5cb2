"""Simple functions as a vector lattice.

Oracle: pointwise evaluation.  Every lattice identity is checked by
sampling probe points (interval endpoints and midpoints), where simple
functions are piecewise constant, so probing every constancy region is
an exact check, not an approximation.
"""

import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from daniell.extreal import ExtReal, ZERO
from daniell.fuzz import random_simple_function
from daniell.lattice import (
    LatticeOp,
    SimpleFunction,
    absolute,
    canonicalize,
    is_nonnegative,
    join,
    lattice_op,
    level_set,
    meet,
    neg_part,
    pos_part,
)
from daniell.rings import RingSet, Universe

LINE = Universe.real_line()


def iv(a, b):
    return RingSet.interval(Fraction(a), Fraction(b))


def probes(*fns):
    ends = sorted(
        {
            e
            for f in fns
            for _, s in f.terms
            for lo, hi in s.intervals
            for e in (lo, hi)
        }
    )
    if not ends:
        return [Fraction(0)]
    pts = [ends[0] - 1, ends[-1] + 1] + ends
    pts += [(a + b) / 2 for a, b in zip(ends, ends[1:])]
    return pts


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
terms = st.lists(
    st.tuples(
        coeffs,
        st.tuples(
            st.integers(min_value=-4, max_value=4), st.integers(min_value=1, max_value=4)
        ).map(lambda ab: iv(ab[0], ab[0] + ab[1])),
    ),
    min_size=0,
    max_size=4,
)
simple_fns = terms.map(lambda ts: SimpleFunction.of(LINE, ts))


# -- canonical form --------------------------------------------------------


@given(simple_fns)
@settings(max_examples=150)
def test_canonicalize_preserves_values(x):
    xc = canonicalize(x)
    for t in probes(x, xc):
        assert xc.eval(t) == x.eval(t)


@given(simple_fns)
def test_canonical_terms_are_disjoint_nonzero(x):
    xc = canonicalize(x)
    for t in probes(xc):
        hits = [c for c, s in xc.terms if s.contains(t)]
        assert len(hits) <= 1
    assert all(c != 0 for c, _ in xc.terms)


def test_canonicalize_exhaustive_finite():
    import itertools

    u = Universe.finite(("p", "q", "r"))
    subsets = [
        RingSet.finite(u, labs)
        for k in range(1, 4)
        for labs in itertools.combinations("pqr", k)
    ]
    for s1, s2 in itertools.product(subsets, repeat=2):
        x = SimpleFunction.of(u, [(Fraction(2), s1), (Fraction(-1), s2)])
        xc = canonicalize(x)
        for lab in "pqr":
            assert xc.eval(lab) == x.eval(lab)


# -- vector space ops -------------------------------------------------------


@given(simple_fns, simple_fns)
@settings(max_examples=150)
def test_add_sub_pointwise(x, y):
    s, d = x + y, x - y
    for t in probes(x, y):
        assert s.eval(t) == x.eval(t) + y.eval(t)
        assert d.eval(t) == x.eval(t) - y.eval(t)


@given(simple_fns, coeffs)
def test_scale_pointwise(x, c):
    y = x.scale(c)
    for t in probes(x):
        assert y.eval(t) == ExtReal(c) * x.eval(t)


# -- lattice ops ------------------------------------------------------------


@given(simple_fns, simple_fns)
@settings(max_examples=150)
def test_meet_join_pointwise(x, y):
    m, j = meet(x, y), join(x, y)
    for t in probes(x, y):
        assert m.eval(t) == min(x.eval(t), y.eval(t))
        assert j.eval(t) == max(x.eval(t), y.eval(t))


@given(simple_fns)
def test_abs_and_parts(x):
    a, p, n = absolute(x), pos_part(x), neg_part(x)
    for t in probes(x):
        v = x.eval(t)
        assert a.eval(t) == max(v, -v)
        assert p.eval(t) == max(v, ZERO)
        assert n.eval(t) == max(-v, ZERO)
        assert (p - n).eval(t) == v
        assert (p + n).eval(t) == a.eval(t)


@given(simple_fns, simple_fns)
def test_join_via_abs_identity(x, y):
    # x ∨ y = (x + y + |x − y|) / 2, the classical Riesz identity
    lhs = join(x, y)
    rhs = (x + y + absolute(x - y)).scale(Fraction(1, 2))
    for t in probes(x, y):
        assert lhs.eval(t) == rhs.eval(t)


def test_lattice_op_dispatch():
    x = SimpleFunction.indicator(iv(0, 2), Fraction(3))
    y = SimpleFunction.indicator(iv(1, 3), Fraction(-1))
    assert lattice_op(LatticeOp.MEET, x, y).eval(Fraction(3, 2)) == ExtReal(-1)
    assert lattice_op(LatticeOp.JOIN, x, y).eval(Fraction(3, 2)) == ExtReal(3)
    assert lattice_op(LatticeOp.PLUS, x, y).eval(Fraction(3, 2)) == ExtReal(2)
    assert lattice_op(LatticeOp.SCALE, x, c=Fraction(-2)).eval(1) == ExtReal(-6)
    assert lattice_op(LatticeOp.ABS, y).eval(2) == ExtReal(1)


# -- level sets and indicators ----------------------------------------------


def test_level_set_strict_threshold():
    x = SimpleFunction.of(
        LINE, [(Fraction(1), iv(0, 1)), (Fraction(2), iv(1, 2))]
    )
    assert level_set(x, Fraction(1)) == iv(1, 2)  # strict: {t : x(t) > 1}
    assert level_set(x, Fraction(1, 2)) == iv(0, 2)
    assert level_set(x, Fraction(2)) == RingSet.empty(LINE)


@given(simple_fns, st.fractions(min_value=0, max_value=5, max_denominator=4))
def test_level_set_matches_membership(x, thr):
    e = level_set(x, thr)
    for t in probes(x):
        assert e.contains(t) == (x.eval(t) > ExtReal(thr))


def test_is_nonnegative():
    assert is_nonnegative(SimpleFunction.indicator(iv(0, 1)))
    assert not is_nonnegative(SimpleFunction.indicator(iv(0, 1), Fraction(-1)))
    # cancellation makes this one nonnegative despite a negative raw term
    x = SimpleFunction.of(
        LINE, [(Fraction(2), iv(0, 2)), (Fraction(-1), iv(0, 1))]
    )
    assert is_nonnegative(x)


def test_json_roundtrip():
    rng = random.Random(1)
    for _ in range(20):
        x = random_simple_function(rng, LINE)
        y = SimpleFunction.from_json(x.to_json())
        for t in probes(x):
            assert y.eval(t) == x.eval(t)
