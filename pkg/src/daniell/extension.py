"""The extension engine: monotone limits, dyadic level-set integration,
measure extraction, measurability probes, and simple-function approximation.

Values produced here come with certified brackets.  The dyadic scheme
integrates a nonnegative function x through its level sets
E_{k,n} = {t : x(t) > k 2^-n}: the partial sum

    S_n = 2^-n * sum_{k=1}^{2^(2n)} mu(E_{k,n})

increases to the integral, and the defect x - phi_n is < 2^-n on the
support wherever x is finite, which yields the bracket width
2^-n * mu(support).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .extreal import ExtReal, POS_INF
from .functional import ElementaryIntegral, NonMonotoneSequence
from .lattice import SimpleFunction, canonicalize, level_set, meet
from .rings import BooleanOp, RingSet, Universe, UniverseKind, boolean_combine

DEFAULT_LEVEL_DEPTH = 16
DEFAULT_SEQ_DEPTH = 1000
DEFAULT_CEILING = Fraction(10**9)


class Direction(Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"


class MonotoneSequence:
    """A lazily generated monotone sequence of integrands.

    ``generator`` maps n >= 1 to a function with an ``eval`` method.
    Monotonicity is verified at the probe points as terms are produced;
    a violation is a hard error.
    """

    def __init__(self, generator, direction: Direction, probes):
        self.generator = generator
        self.direction = direction
        self.probes = tuple(probes)
        self._cache = {}

    def term(self, n):
        if n not in self._cache:
            self._cache[n] = self.generator(n)
        return self._cache[n]

    def check_monotone(self, depth):
        prev = None
        for n in range(1, depth + 1):
            cur = self.term(n)
            if prev is not None:
                for t in self.probes:
                    a, b = prev.eval(t), cur.eval(t)
                    bad = b < a if self.direction is Direction.INCREASING else b > a
                    if bad:
                        raise NonMonotoneSequence(n, t)
            prev = cur


@dataclass(frozen=True)
class IntegralResult:
    """A numeric value with a certified bracket [lower, upper]."""

    value: ExtReal
    lower: ExtReal
    upper: ExtReal
    depth_used: int
    converged: bool

    def __post_init__(self):
        if not (self.lower <= self.value <= self.upper):
            raise ValueError("bracket does not contain the value")

    def to_json(self):
        return {
            "value": self.value.to_json(),
            "lower": self.lower.to_json(),
            "upper": self.upper.to_json(),
            "depth": self.depth_used,
            "converged": self.converged,
        }


def i1_limit(integrate, seq: MonotoneSequence, depth=DEFAULT_SEQ_DEPTH,
             cauchy_tol=Fraction(1, 10**6), ceiling=DEFAULT_CEILING,
             tail_bound=None) -> IntegralResult:
    """Limit of I(x_n) along an increasing sequence, with a bracket.

    ``tail_bound`` (n -> bound on limit - I(x_n)), when available, gives
    an exact certificate; otherwise the gap is the doubling-window slack
    I(x_depth) - I(x_{depth//2}).  Values past the ceiling without Cauchy
    stabilization report +inf.
    """
    if seq.direction is not Direction.INCREASING:
        raise ValueError("i1_limit expects an increasing sequence")
    seq.check_monotone(depth)
    values = [Fraction(integrate(seq.term(n))) for n in range(1, depth + 1)]
    last = values[-1]
    stabilized = depth >= 2 and abs(values[-1] - values[-2]) < Fraction(cauchy_tol)
    if last > ceiling and not stabilized:
        return IntegralResult(POS_INF, ExtReal(last), POS_INF, depth, False)
    if tail_bound is not None:
        gap = Fraction(tail_bound(depth))
    elif depth >= 2:
        gap = last - values[depth // 2 - 1]
    else:
        gap = Fraction(0)
    return IntegralResult(
        ExtReal(last), ExtReal(last), ExtReal(last + gap), depth, stabilized
    )


class LevelSetNestingError(ValueError):
    pass


class MeasurableFunction:
    """A nonnegative function given through its dyadic level-set oracle.

    ``level_set_oracle(k, n)`` returns the ring set {t : x(t) > k 2^-n}.
    ``support`` is a ring set containing {x > 0} whose measure bounds the
    bracket width; it may be None for indicator-like functions where
    E_{1, n} already covers the support at every used depth.
    """

    def __init__(self, evaluator, level_set_oracle, nonnegative=True,
                 support: RingSet | None = None,
                 simple: SimpleFunction | None = None):
        self.evaluator = evaluator
        self._oracle = level_set_oracle
        self.nonnegative = nonnegative
        self.support = support
        self.simple = simple
        self._checked = set()

    def eval(self, t) -> ExtReal:
        return ExtReal.of(self.evaluator(t))

    def level_set(self, k: int, n: int) -> RingSet:
        e = self._oracle(k, n)
        # spot-check the nesting invariants the dyadic scheme relies on
        # (bounded k so deep sweeps stay cheap)
        if (k, n) not in self._checked and 2 <= k <= 32:
            prev = self._oracle(k - 1, n)
            if not e.subset_of(prev):
                raise LevelSetNestingError(f"E_{k},{n} not inside E_{k-1},{n}")
            self._checked.add((k, n))
        return e

    @staticmethod
    def from_simple(x: SimpleFunction) -> MeasurableFunction:
        xc = canonicalize(x)
        if any(c < 0 for c, _ in xc.terms):
            raise ValueError("from_simple needs a nonnegative function")
        supp = level_set(xc, 0)
        return MeasurableFunction(
            evaluator=lambda t: xc.eval(t),
            level_set_oracle=lambda k, n: level_set(xc, Fraction(k, 2**n)),
            support=supp,
            simple=xc,
        )

    @staticmethod
    def identity_on(a, b) -> MeasurableFunction:
        """x(t) = t on [a, b), 0 elsewhere;  0 <= a < b.

        Level sets are half-open intervals; the boundary point of the
        strict inequality has length zero, so the closed-end realization
        is measure-equivalent.
        """
        a, b = Fraction(a), Fraction(b)
        if not 0 <= a < b:
            raise ValueError("need 0 <= a < b")
        supp = RingSet.interval(a, b)

        def oracle(k, n):
            thr = Fraction(k, 2**n)
            lo = max(a, thr)
            if lo >= b:
                return RingSet.empty(Universe.real_line())
            return RingSet.interval(lo, b)

        return MeasurableFunction(
            evaluator=lambda t: Fraction(t) if a <= Fraction(t) < b else Fraction(0),
            level_set_oracle=oracle,
            support=supp,
        )

    def meet_with_simple(self, phi: SimpleFunction) -> MeasurableFunction:
        """The pointwise minimum phi ^ x, for nonnegative phi."""
        phic = canonicalize(phi)

        def oracle(k, n):
            thr = Fraction(k, 2**n)
            return boolean_combine(
                BooleanOp.INTERSECT, level_set(phic, thr), self._oracle(k, n)
            )

        supp = self.support
        if supp is not None:
            supp = boolean_combine(BooleanOp.INTERSECT, supp, level_set(phic, 0))
        return MeasurableFunction(
            evaluator=lambda t: min(Fraction(phic.eval(t).value),
                                    Fraction(self.eval(t).value))
            if self.eval(t).is_finite
            else Fraction(phic.eval(t).value),
            level_set_oracle=oracle,
            support=supp,
        )


def dyadic_levels(x: MeasurableFunction, n: int, max_depth=DEFAULT_LEVEL_DEPTH):
    """The level sets (E_{1,n}, ..., E_{2^(2n),n}).

    The list is truncated at the first empty set (levels nest downward,
    so all later sets are empty too); callers treat missing entries as
    empty.
    """
    if not x.nonnegative:
        raise ValueError("dyadic levels need a nonnegative function")
    if n > max_depth:
        raise ValueError(f"n={n} exceeds configured max {max_depth}")
    out = []
    for k in range(1, 2 ** (2 * n) + 1):
        e = x.level_set(k, n)
        if e.is_empty:
            break
        out.append(e)
    return out


def level_set_integral(x: MeasurableFunction, i: ElementaryIntegral,
                       n_max=DEFAULT_LEVEL_DEPTH, tol=None,
                       ceiling=DEFAULT_CEILING) -> IntegralResult:
    """Integral of nonnegative x via dyadic level-set sums S_n.

    Stops early when successive sums differ by less than ``tol``.
    Reports +inf when the sums pass the ceiling.
    """
    if not x.nonnegative:
        raise ValueError("level_set_integral needs a nonnegative function")
    prev = None
    s_n = Fraction(0)
    n_used = 0
    for n in range(1, n_max + 1):
        scale = Fraction(1, 2**n)
        if x.simple is not None:
            total = _simple_level_sum(x.simple, i, n)
            if total is None:
                return IntegralResult(POS_INF, ExtReal(s_n), POS_INF, n, False)
        else:
            total = Fraction(0)
            for k in range(1, 2 ** (2 * n) + 1):
                e = x.level_set(k, n)
                if e.is_empty:
                    break
                m = i.mu(e)
                if not m.is_finite:
                    return IntegralResult(POS_INF, ExtReal(total), POS_INF, n, False)
                total += m.value
        s_n = scale * total
        n_used = n
        if s_n > ceiling:
            return IntegralResult(POS_INF, ExtReal(s_n), POS_INF, n, False)
        if prev is not None and tol is not None and abs(s_n - prev) < Fraction(tol):
            break
        prev = s_n
    if x.support is not None:
        supp_measure = i.mu(x.support)
        if not supp_measure.is_finite:
            raise ValueError("support has infinite measure; no finite bracket")
        gap = Fraction(1, 2**n_used) * supp_measure.value
    else:
        gap = Fraction(1, 2**n_used) * i.mu(x.level_set(1, n_used)).value
    return IntegralResult(
        ExtReal(s_n), ExtReal(s_n), ExtReal(s_n + gap), n_used, True
    )


def _simple_level_sum(xc: SimpleFunction, i: ElementaryIntegral, n: int):
    """sum_k mu(E_{k,n}) for canonical simple xc, collapsed analytically.

    The canonical pieces are disjoint, so each piece S with value c
    contributes mu(S) for every k with k 2^-n < c, i.e. for
    min(2^(2n), #{k : k < c 2^n}) values of k.  Returns None when a
    contributing piece has infinite measure.
    """
    cap = 2 ** (2 * n)
    total = Fraction(0)
    for c, s in canonicalize(xc).terms:
        if c <= 0:
            continue
        v = c * 2**n
        count = v.numerator // v.denominator
        if v.denominator == 1:
            count -= 1  # strict inequality k < v
        count = min(max(count, 0), cap)
        if count == 0:
            continue
        m = i.mu(s)
        if not m.is_finite:
            return None
        total += count * m.value
    return total


def indicator_measurable(e: RingSet) -> MeasurableFunction:
    """chi_e as a measurable function (level sets: e below 1, empty above)."""

    def oracle(k, n):
        return e if Fraction(k, 2**n) < 1 else RingSet.empty(e.universe)

    return MeasurableFunction(
        evaluator=lambda t: Fraction(1) if e.contains(t) else Fraction(0),
        level_set_oracle=oracle,
        support=e,
        simple=SimpleFunction.indicator(e) if not e.is_empty
        else SimpleFunction.zero(e.universe),
    )


def measure_from_integral(i: ElementaryIntegral, e: RingSet,
                          n_max=DEFAULT_LEVEL_DEPTH,
                          probes=None) -> ExtReal:
    """The measure extracted from the integral: integral of chi_e,
    or +inf when that diverges.

    For ring sets the indicator is itself simple, so the limit of the
    dyadic sums is the exact elementary value; the level-set bracket is
    still computed and must contain it, as a cross-check of the two
    routes.
    """
    x = indicator_measurable(e)
    if probes is not None:
        report = is_daniell_measurable(x, probes, i, n_max=n_max)
        if not report["pass"]:
            raise ValueError(f"set failed measurability probe: {report}")
    res = level_set_integral(x, i, n_max=n_max)
    if not res.value.is_finite:
        return POS_INF
    exact = i.integrate(x.simple)
    if not (res.lower.value <= exact <= res.upper.value):
        raise ValueError("dyadic bracket excludes the elementary value")
    return ExtReal(exact)


def is_daniell_measurable(x: MeasurableFunction, probes, i: ElementaryIntegral,
                          n_max=DEFAULT_LEVEL_DEPTH) -> dict:
    """Certify phi ^ x integrable for each probe phi from the base lattice.

    x is nonnegative here, so the negative part of phi ^ x is the
    negative part of phi, which is simple and exactly integrable; the
    positive part goes through the level-set bracket.
    """
    failures = []
    certs = []
    for phi in probes:
        try:
            pos = x.meet_with_simple(phi)
            res = level_set_integral(pos, i, n_max=n_max)
            if not res.value.is_finite:
                failures.append({"probe": phi.to_json(), "reason": "divergent"})
            else:
                certs.append(res.to_json())
        except (ValueError, LevelSetNestingError) as exc:
            failures.append({"probe": phi.to_json(), "reason": str(exc)})
    return {"pass": not failures, "failures": failures, "certificates": certs}


def null_test(x: MeasurableFunction, i: ElementaryIntegral, tol=Fraction(0),
              n_max=DEFAULT_LEVEL_DEPTH) -> tuple[bool, dict]:
    """True iff the certified upper bound of the integral of |x| is <= tol."""
    res = level_set_integral(x, i, n_max=n_max)
    ok = res.upper.is_finite and res.upper.value <= Fraction(tol)
    return ok, res.to_json()


class ApproximationUnreachable(ValueError):
    def __init__(self, achievable):
        super().__init__(f"achievable bound is {achievable}")
        self.achievable = achievable


def approximate_in_t0(x: MeasurableFunction, i: ElementaryIntegral, eps,
                      n_max=DEFAULT_LEVEL_DEPTH) -> SimpleFunction:
    """A simple function within eps of x in the upper-functional gap.

    Returns the dyadic approximant phi_n = 2^-n sum chi_{E_{k,n}} with n
    chosen so the bracket width 2^-n * mu(support) is below eps.
    """
    eps = Fraction(eps)
    if x.simple is not None:
        return x.simple
    if x.support is None:
        raise ValueError("approximation needs a support bound")
    supp = i.mu(x.support)
    if not supp.is_finite:
        raise ValueError("support has infinite measure")
    m = supp.value
    n = 1
    while m > 0 and Fraction(1, 2**n) * m >= eps:
        n += 1
        if n > n_max:
            raise ApproximationUnreachable(Fraction(1, 2**n_max) * m)
    universe = x.support.universe
    terms = [(Fraction(1, 2**n), e) for e in dyadic_levels(x, n, max_depth=max(n, n_max))]
    return canonicalize(SimpleFunction(universe, tuple(terms)))
