"""Boundary-data functionals via numerical harmonic extension.

The point functional here is g -> u_g(x): solve the Laplace boundary
value problem for continuous boundary data g and read off the solution
at an interior point x.  Two independent solvers are provided so each
can serve as the other's oracle:

* a finite-difference solver (polar grid on the unit disk, so the
  boundary is represented exactly; a standard 5-point grid on the unit
  square), and
* walk-on-spheres: unbiased point estimates with a reported standard
  error.

Discontinuous boundary data (arc indicators) never reaches the solvers
directly; it enters only as the limit of monotone continuous ramps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.linalg import spsolve

TWO_PI = 2.0 * math.pi


class Shape(Enum):
    UNIT_DISK = "disk"
    UNIT_SQUARE = "square"


@dataclass(frozen=True)
class DiskDomain:
    shape: Shape = Shape.UNIT_DISK
    h: float = 1.0 / 128.0

    def __post_init__(self):
        if self.h <= 0:
            raise ValueError("grid resolution must be positive")

    @property
    def param_period(self) -> float:
        return TWO_PI if self.shape is Shape.UNIT_DISK else 4.0


class BoundaryKind(Enum):
    CONTINUOUS = "continuous"
    ARC_INDICATOR = "arc_indicator"


@dataclass(frozen=True)
class BoundaryFunction:
    """Boundary data as a function of the boundary parameter.

    Disk: parameter is the angle in [0, 2pi).  Square: arc length in
    [0, 4) running counterclockwise from the origin corner.
    """

    evaluator: object
    kind: BoundaryKind = BoundaryKind.CONTINUOUS
    arc: tuple = ()

    def __call__(self, s):
        return self.evaluator(s)

    @staticmethod
    def constant(c) -> BoundaryFunction:
        return BoundaryFunction(lambda s: c + 0.0 * np.asarray(s))

    @staticmethod
    def arc_indicator(lo, hi) -> BoundaryFunction:
        lo, hi = float(lo), float(hi)

        def f(s):
            s = np.mod(np.asarray(s, dtype=float) - lo, TWO_PI)
            return (s < (hi - lo)).astype(float)

        return BoundaryFunction(f, BoundaryKind.ARC_INDICATOR, (lo, hi))


def arc_ramp(lo, hi, n: int, side: str = "lower") -> BoundaryFunction:
    """Continuous trapezoid approximating an arc indicator.

    ``lower`` ramps sit inside the arc (increase to the indicator from
    below); ``upper`` ramps contain it.  Transition width is
    (hi - lo) / (2n), so the two means straddle the arc fraction
    symmetrically.
    """
    lo, hi = float(lo), float(hi)
    length = hi - lo
    if length <= 0:
        raise ValueError("need lo < hi")
    delta = length / (2.0 * n)

    def f(s):
        s = np.mod(np.asarray(s, dtype=float) - lo, TWO_PI)
        if side == "lower":
            up = s / delta
            down = (length - s) / delta
            inside = (s >= 0) & (s <= length)
            return np.where(inside, np.clip(np.minimum(up, down), 0.0, 1.0), 0.0)
        s = np.where(s > TWO_PI - delta, s - TWO_PI, s)
        up = (s + delta) / delta
        down = (length + delta - s) / delta
        inside = (s >= -delta) & (s <= length + delta)
        return np.where(inside, np.clip(np.minimum(up, down), 0.0, 1.0), 0.0)

    return BoundaryFunction(f)


@dataclass(frozen=True)
class HarmonicField:
    """Grid solution with its measured discrete-Laplacian residual."""

    domain: DiskDomain
    values: np.ndarray
    boundary: np.ndarray
    residual: float

    def at(self, x, y) -> float:
        if self.domain.shape is Shape.UNIT_DISK:
            return _disk_interpolate(self, x, y)
        return _square_interpolate(self, x, y)

    def interior_max(self) -> float:
        return float(np.max(self.values))

    def boundary_max(self) -> float:
        return float(np.max(self.boundary))


class SolverFailure(RuntimeError):
    pass


def _solve_disk_grid(dom: DiskDomain, g: BoundaryFunction, tol: float) -> HarmonicField:
    nr = max(4, round(1.0 / dom.h))
    ntheta = max(16, 1 << int(math.ceil(math.log2(TWO_PI / dom.h))))
    hr = 1.0 / nr
    ht = TWO_PI / ntheta
    thetas = np.arange(ntheta) * ht
    gb = np.asarray(g(thetas), dtype=float)

    n_unknown = 1 + (nr - 1) * ntheta  # center + interior rings

    rows, cols, data = [np.array([0])], [np.array([0])], [np.array([1.0])]
    rhs = np.zeros(n_unknown)

    # center: harmonicity at r=0 as the mean over the first ring
    js = np.arange(ntheta)
    rows.append(np.zeros(ntheta, dtype=int))
    cols.append(1 + js)
    data.append(np.full(ntheta, -1.0 / ntheta))

    for i in range(1, nr):
        r = i * hr
        a_plus = 1.0 / hr**2 + 1.0 / (2.0 * r * hr)
        a_minus = 1.0 / hr**2 - 1.0 / (2.0 * r * hr)
        a_t = 1.0 / (r * ht) ** 2
        diag = -2.0 / hr**2 - 2.0 * a_t
        row = 1 + (i - 1) * ntheta + js
        for shift, coef in ((0, diag), (1, a_t), (-1, a_t)):
            rows.append(row)
            cols.append(1 + (i - 1) * ntheta + (js + shift) % ntheta)
            data.append(np.full(ntheta, coef))
        if i + 1 == nr:
            rhs[row] -= a_plus * gb
        else:
            rows.append(row)
            cols.append(1 + i * ntheta + js)
            data.append(np.full(ntheta, a_plus))
        if i - 1 == 0:
            rows.append(row)
            cols.append(np.zeros(ntheta, dtype=int))
            data.append(np.full(ntheta, a_minus))
        else:
            rows.append(row)
            cols.append(1 + (i - 2) * ntheta + js)
            data.append(np.full(ntheta, a_minus))

    mat = coo_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
        shape=(n_unknown, n_unknown),
    ).tocsr()
    sol = spsolve(mat, rhs)
    residual = float(np.max(np.abs(mat @ sol - rhs)))
    if not np.all(np.isfinite(sol)) or residual > max(tol, 1e-6):
        raise SolverFailure(f"disk grid solve residual {residual}")
    values = np.empty((nr, ntheta))
    values[0, :] = sol[0]
    values[1:, :] = sol[1:].reshape(nr - 1, ntheta)
    return HarmonicField(dom, values, gb, residual)


def _disk_interpolate(field: HarmonicField, x, y) -> float:
    nr, ntheta = field.values.shape  # rows i=0..nr-1 at radius i/nr
    r = math.hypot(x, y)
    theta = math.atan2(y, x) % TWO_PI
    ri = r * nr
    i0 = min(int(ri), nr - 1)
    fr = ri - i0
    tj = theta / (TWO_PI / ntheta)
    j0 = int(tj) % ntheta
    ft = tj - int(tj)

    def ring(i):
        if i >= nr:
            vals = field.boundary
        else:
            vals = field.values[i]
        return (1 - ft) * vals[j0] + ft * vals[(j0 + 1) % ntheta]

    return (1 - fr) * ring(i0) + fr * ring(i0 + 1)


def _solve_square_grid(dom: DiskDomain, g: BoundaryFunction, tol: float) -> HarmonicField:
    n = max(4, round(1.0 / dom.h))
    h = 1.0 / n
    xs = np.arange(n + 1) * h

    def bparam(x, y):
        # arc length around the unit square, counterclockwise from (0,0)
        if y == 0.0:
            return x
        if x == 1.0:
            return 1.0 + y
        if y == 1.0:
            return 3.0 - x
        return 4.0 - y

    bvals = np.zeros((n + 1, n + 1))
    for i in (0, n):
        for j in range(n + 1):
            bvals[i, j] = g(bparam(xs[i], xs[j]))
            bvals[j, i] = g(bparam(xs[j], xs[i]))

    m = n - 1

    def idx(i, j):
        return (i - 1) * m + (j - 1)

    rows, cols, data = [], [], []
    rhs = np.zeros(m * m)
    for i in range(1, n):
        for j in range(1, n):
            row = idx(i, j)
            rows.append(row); cols.append(row); data.append(-4.0)
            for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                ii, jj = i + di, j + dj
                if ii in (0, n) or jj in (0, n):
                    rhs[row] -= bvals[ii, jj]
                else:
                    rows.append(row); cols.append(idx(ii, jj)); data.append(1.0)
    mat = coo_matrix((data, (rows, cols)), shape=(m * m, m * m)).tocsr()
    sol = spsolve(mat, rhs)
    residual = float(np.max(np.abs(mat @ sol - rhs))) / h**2
    if not np.all(np.isfinite(sol)):
        raise SolverFailure("square grid solve failed")
    full = np.array(bvals)
    full[1:n, 1:n] = sol.reshape(m, m)
    boundary = np.concatenate([bvals[0, :], bvals[:, 0], bvals[n, :], bvals[:, n]])
    return HarmonicField(dom, full, boundary, residual)


def _square_interpolate(field: HarmonicField, x, y) -> float:
    n = field.values.shape[0] - 1
    fx, fy = x * n, y * n
    i0, j0 = min(int(fx), n - 1), min(int(fy), n - 1)
    ax, ay = fx - i0, fy - j0
    v = field.values
    return float(
        (1 - ax) * (1 - ay) * v[i0, j0]
        + ax * (1 - ay) * v[i0 + 1, j0]
        + (1 - ax) * ay * v[i0, j0 + 1]
        + ax * ay * v[i0 + 1, j0 + 1]
    )


class Solver(Enum):
    GRID = "grid"
    WALK_ON_SPHERES = "wos"


def solve_dirichlet(dom: DiskDomain, g: BoundaryFunction,
                    solver: Solver = Solver.GRID, tol: float = 1e-8,
                    seed: int | None = None, walks: int = 100_000,
                    shell: float = 1e-6):
    """Harmonic extension of continuous boundary data.

    Grid returns a :class:`HarmonicField`; walk-on-spheres returns a
    point evaluator ``(x, y) -> (value, stderr)``.
    """
    if g.kind is not BoundaryKind.CONTINUOUS:
        raise ValueError("discontinuous data must go through extend_boundary")
    if solver is Solver.GRID:
        if dom.shape is Shape.UNIT_DISK:
            return _solve_disk_grid(dom, g, tol)
        return _solve_square_grid(dom, g, tol)
    seed = 0 if seed is None else seed

    def evaluator(x, y):
        return _wos_estimate(dom, g, x, y, walks, seed, shell)

    return evaluator


def _wos_estimate(dom: DiskDomain, g: BoundaryFunction, x, y, walks, seed,
                  shell, max_steps=10_000):
    rng = np.random.default_rng(seed)
    px = np.full(walks, float(x))
    py = np.full(walks, float(y))
    active = np.ones(walks, dtype=bool)
    for _ in range(max_steps):
        if dom.shape is Shape.UNIT_DISK:
            dist = 1.0 - np.hypot(px, py)
        else:
            dist = np.minimum(np.minimum(px, 1.0 - px), np.minimum(py, 1.0 - py))
        active = dist > shell
        if not active.any():
            break
        ang = rng.uniform(0.0, TWO_PI, size=int(active.sum()))
        px[active] += dist[active] * np.cos(ang)
        py[active] += dist[active] * np.sin(ang)
    else:
        raise SolverFailure("walk-on-spheres did not terminate")
    if dom.shape is Shape.UNIT_DISK:
        params = np.mod(np.arctan2(py, px), TWO_PI)
    else:
        params = _square_project(px, py)
    vals = np.asarray(g(params), dtype=float)
    value = float(vals.mean())
    stderr = float(vals.std(ddof=1) / math.sqrt(walks))
    return value, stderr


def _square_project(px, py):
    d = np.stack([py, 1.0 - px, 1.0 - py, px])  # distance to each side
    side = np.argmin(d, axis=0)
    s = np.empty_like(px)
    s[side == 0] = px[side == 0]
    s[side == 1] = 1.0 + py[side == 1]
    s[side == 2] = 3.0 - px[side == 2]
    s[side == 3] = 4.0 - py[side == 3]
    return np.mod(s, 4.0)


@dataclass(frozen=True)
class SolveConfig:
    domain: DiskDomain = DiskDomain()
    solver: Solver = Solver.GRID
    tol: float = 1e-8
    seed: int = 0
    walks: int = 100_000
    shell: float = 1e-6


def ix_eval(x, g: BoundaryFunction, cfg: SolveConfig = SolveConfig()):
    """u_g at the interior point x = (x0, x1).

    Returns (value, stderr); stderr is 0 for the grid solver.
    """
    x0, x1 = float(x[0]), float(x[1])
    if cfg.domain.shape is Shape.UNIT_DISK:
        if math.hypot(x0, x1) >= 1.0:
            raise ValueError("point must be strictly interior")
    elif not (0.0 < x0 < 1.0 and 0.0 < x1 < 1.0):
        raise ValueError("point must be strictly interior")
    if cfg.solver is Solver.GRID:
        field = solve_dirichlet(cfg.domain, g, Solver.GRID, cfg.tol)
        return field.at(x0, x1), 0.0
    est = solve_dirichlet(cfg.domain, g, Solver.WALK_ON_SPHERES, cfg.tol,
                          cfg.seed, cfg.walks, cfg.shell)
    return est(x0, x1)


class NonMonotoneBoundary(ValueError):
    pass


def extend_boundary(x, f_seq, depth: int, tol: float,
                    cfg: SolveConfig = SolveConfig(),
                    probes: int = 64) -> dict:
    """Limit of u_{f_n}(x) along a monotone sequence of boundary data.

    ``f_seq`` maps n >= 1 to a continuous BoundaryFunction; monotonicity
    is verified at boundary probes.  The values are evaluated on a
    doubling schedule 1, 2, 4, ..., depth, and the certificate reports
    the observed gap between the last two evaluations (the Harnack-style
    convergence surrogate).
    """
    period = cfg.domain.param_period
    ss = np.arange(probes) * (period / probes)
    schedule = []
    n = 1
    while n < depth:
        schedule.append(n)
        n *= 2
    schedule.append(depth)
    prev = None
    prev_n = None
    values = []
    for n in schedule:
        f = f_seq(n)
        fv = np.asarray(f(ss), dtype=float)
        if prev is not None and np.any(fv < prev - 1e-12):
            raise NonMonotoneBoundary(f"boundary data decreased at n={n}")
        prev = fv
        v, se = ix_eval(x, f, cfg)
        values.append((n, v, se))
        prev_n = n
    gap = abs(values[-1][1] - values[-2][1]) if len(values) > 1 else 0.0
    if gap > tol:
        raise NonMonotoneBoundary(
            f"bracket {gap} wider than tol {tol} at depth {prev_n}"
        )
    _, v, se = values[-1]
    return {"value": v, "stderr": se, "harnack_gap": gap, "depth": prev_n,
            "history": [(n, v) for n, v, _ in values]}


def harmonic_measure_of_arc(x, lo, hi, cfg: SolveConfig = SolveConfig(),
                            n: int = 16) -> dict:
    """Harmonic measure of the boundary arc [lo, hi] at interior point x.

    Brackets the measure between the harmonic extensions of inner and
    outer continuous ramps; the midpoint cancels the symmetric ramp bias.
    """
    lower = arc_ramp(lo, hi, n, side="lower")
    upper = arc_ramp(lo, hi, n, side="upper")
    v_lo, se_lo = ix_eval(x, lower, cfg)
    v_hi, se_hi = ix_eval(x, upper, cfg)
    return {
        "value": 0.5 * (v_lo + v_hi),
        "lower": v_lo,
        "upper": v_hi,
        "stderr": 0.5 * math.hypot(se_lo, se_hi),
        "ramp_n": n,
    }
