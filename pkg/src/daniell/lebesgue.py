"""Length on the line recovered through the extension machinery.

The base lattice here is compactly supported piecewise-linear functions
with rational breakpoints; the trapezoid rule is their exact Riemann
integral, and the ramp sequence climbing to an interval indicator drives
the limit that recovers b - a.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .extension import Direction, IntegralResult, MonotoneSequence, i1_limit
from .extreal import ExtReal
from .lattice import LatticeOp


@dataclass(frozen=True)
class PiecewiseLinear:
    """Continuous piecewise-linear function, zero outside [xs[0], xs[-1]].

    Breakpoints strictly increase; the first and last values are 0 so
    the function is continuous with compact support.
    """

    xs: tuple  # Fractions, strictly increasing
    ys: tuple  # Fractions, same length

    @staticmethod
    def of(xs, ys) -> PiecewiseLinear:
        xs = tuple(Fraction(v) for v in xs)
        ys = tuple(Fraction(v) for v in ys)
        if len(xs) != len(ys):
            raise ValueError("xs and ys must have equal length")
        if any(a >= b for a, b in zip(xs, xs[1:])):
            raise ValueError("breakpoints must strictly increase")
        if xs and (ys[0] != 0 or ys[-1] != 0):
            raise ValueError("compact support needs zero boundary values")
        return PiecewiseLinear(xs, ys)

    @staticmethod
    def zero() -> PiecewiseLinear:
        return PiecewiseLinear((), ())

    def eval(self, t) -> ExtReal:
        t = Fraction(t)
        if not self.xs or t <= self.xs[0] or t >= self.xs[-1]:
            return ExtReal(0)
        for (x0, y0), (x1, y1) in zip(zip(self.xs, self.ys),
                                      zip(self.xs[1:], self.ys[1:])):
            if x0 <= t <= x1:
                return ExtReal(y0 + (y1 - y0) * (t - x0) / (x1 - x0))
        return ExtReal(0)


def riemann_integral(f: PiecewiseLinear) -> Fraction:
    """Exact trapezoid sum; exact because the integrand is linear per piece."""
    total = Fraction(0)
    for (x0, y0), (x1, y1) in zip(zip(f.xs, f.ys), zip(f.xs[1:], f.ys[1:])):
        total += Fraction(y0 + y1, 2) * (x1 - x0)
    return total


def ramp_sequence(a, b, n: int) -> PiecewiseLinear:
    """The n-th ramp under chi_(a,b): up on [a, a + (b-a)/2n], plateau at 1,
    down on [b - (b-a)/2n, b].  Increasing in n, integral (b-a)(1 - 1/2n)."""
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise ValueError("need a < b")
    if n < 1:
        raise ValueError("need n >= 1")
    w = Fraction(b - a, 2 * n)
    if n == 1:  # plateau degenerates to the midpoint: a triangle
        return PiecewiseLinear.of((a, a + w, b), (0, 1, 0))
    return PiecewiseLinear.of((a, a + w, b - w, b), (0, 1, 1, 0))


def _crossings(f: PiecewiseLinear, g: PiecewiseLinear):
    """Rational points where f - g changes sign between shared breakpoints."""
    pts = sorted(set(f.xs) | set(g.xs))
    out = []
    for x0, x1 in zip(pts, pts[1:]):
        d0 = f.eval(x0).value - g.eval(x0).value
        d1 = f.eval(x1).value - g.eval(x1).value
        if d0 * d1 < 0:
            out.append(x0 + (x1 - x0) * d0 / (d0 - d1))
    return out


def pl_lattice_op(op: LatticeOp, f: PiecewiseLinear,
                  g: PiecewiseLinear | None = None, c=None) -> PiecewiseLinear:
    """Pointwise Plus/Scale/Meet/Join/Abs on piecewise-linear functions.

    The result's breakpoints are the union of the inputs' plus any
    crossing points (Abs crosses against zero), so it is again exactly
    piecewise linear.
    """
    if op is LatticeOp.SCALE:
        if c is None:
            raise ValueError("Scale needs c")
        c = Fraction(c)
        if c == 0 or not f.xs:
            return PiecewiseLinear.zero()
        return PiecewiseLinear.of(f.xs, tuple(c * y for y in f.ys))
    if op is LatticeOp.ABS:
        g = PiecewiseLinear.zero()
        pts = sorted(set(f.xs) | set(_crossings(f, g)))
        ys = tuple(abs(f.eval(t).value) for t in pts)
        return _trim(pts, ys)
    if g is None:
        raise ValueError(f"{op.value} needs a second argument")
    if op is LatticeOp.PLUS:
        pts = sorted(set(f.xs) | set(g.xs))
        ys = tuple(f.eval(t).value + g.eval(t).value for t in pts)
        return _trim(pts, ys)
    pts = sorted(set(f.xs) | set(g.xs) | set(_crossings(f, g)))
    fn = min if op is LatticeOp.MEET else max
    ys = tuple(fn(f.eval(t).value, g.eval(t).value) for t in pts)
    return _trim(pts, ys)


def _trim(pts, ys) -> PiecewiseLinear:
    """Drop leading/trailing zero stretches so boundary values are zero."""
    pts, ys = list(pts), list(ys)
    while len(pts) > 1 and ys[0] == 0 and ys[1] == 0:
        pts.pop(0)
        ys.pop(0)
    while len(pts) > 1 and ys[-1] == 0 and ys[-2] == 0:
        pts.pop()
        ys.pop()
    if len(pts) <= 1 or all(y == 0 for y in ys):
        return PiecewiseLinear.zero()
    return PiecewiseLinear.of(pts, ys)


def ramp_probe_points(a, b, count=17):
    a, b = Fraction(a), Fraction(b)
    return [a + Fraction(i, count - 1) * (b - a) for i in range(count)]


def interval_length_via_daniell(a, b, n_max=100) -> IntegralResult:
    """Recover b - a as the limit of ramp integrals, with an exact bracket.

    The tail bound (b-a)/(2n) comes from the closed form of the ramp
    integrals, so the bracket always contains b - a.
    """
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise ValueError("need a < b")
    seq = MonotoneSequence(
        lambda n: ramp_sequence(a, b, n),
        Direction.INCREASING,
        probes=ramp_probe_points(a, b),
    )
    return i1_limit(
        riemann_integral,
        seq,
        depth=n_max,
        tail_bound=lambda n: Fraction(b - a, 2 * n),
    )
