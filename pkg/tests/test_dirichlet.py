"""Harmonic measure through the Dirichlet problem on the unit disk.

Oracle: the Poisson integral

    u(r, θ) = (1/2π) ∫ g(φ) (1 − r²) / (1 − 2r cos(θ − φ) + r²) dφ,

evaluated with adaptive quadrature.  Special cases used below:
g ≡ c gives u ≡ c; g = cos gives u = r cos θ; an arc indicator evaluated
at the center gives the arc's angular fraction.
"""

import math
import random

import numpy as np
import pytest
from scipy.integrate import quad

from daniell.dirichlet import (
    BoundaryFunction,
    DiskDomain,
    NonMonotoneBoundary,
    Shape,
    SolveConfig,
    Solver,
    arc_ramp,
    extend_boundary,
    harmonic_measure_of_arc,
    ix_eval,
    solve_dirichlet,
)

COARSE = SolveConfig(domain=DiskDomain(Shape.UNIT_DISK, 1 / 32))
FINE = SolveConfig(domain=DiskDomain(Shape.UNIT_DISK, 1 / 128))


def poisson_oracle(g, r, theta):
    def integrand(phi):
        return g(phi) * (1 - r * r) / (1 - 2 * r * math.cos(theta - phi) + r * r)

    val, _ = quad(integrand, 0, 2 * math.pi, limit=400)
    return val / (2 * math.pi)


INTERIOR_POINTS = [
    (0.0, 0.0),
    (0.5, 0.0),
    (0.0, -0.7),
    (0.3, 0.4),
    (-0.6, 0.1),
    (0.2, -0.2),
]


# -- closed forms ------------------------------------------------------------


def test_constant_data_extends_to_constant():
    g = BoundaryFunction.constant(2.5)
    for x in INTERIOR_POINTS:
        val, err = ix_eval(x, g, COARSE)
        assert abs(val - 2.5) < 1e-6


def test_cos_theta_closed_form():
    field = solve_dirichlet(COARSE.domain, BoundaryFunction(np.cos))
    for x, y in INTERIOR_POINTS:
        assert abs(field.at(x, y) - x) < 30 * (1 / 32) ** 2


def test_poisson_oracle_agrees_with_grid_solver():
    rng = random.Random(2)
    g = arc_ramp(0.7, 2.9, 8)
    field = solve_dirichlet(FINE.domain, g)
    for _ in range(5):
        r = rng.uniform(0, 0.6)
        th = rng.uniform(0, 2 * math.pi)
        x, y = r * math.cos(th), r * math.sin(th)
        assert abs(field.at(x, y) - poisson_oracle(g, r, th)) < 2e-3


# -- harmonic measure -----------------------------------------------------------


def test_arc_measure_at_center_is_arc_fraction():
    for lo, hi in [(0.0, math.pi), (0.0, math.pi / 3), (1.0, 2.5)]:
        r = harmonic_measure_of_arc((0.0, 0.0), lo, hi, FINE, n=16)
        assert abs(r["value"] - (hi - lo) / (2 * math.pi)) < 1e-3
        assert r["lower"] <= r["value"] <= r["upper"]


def test_arc_measure_off_center_matches_poisson_oracle():
    g = BoundaryFunction.arc_indicator(0.5, 1.5)
    r = harmonic_measure_of_arc((0.3, -0.2), 0.5, 1.5, FINE, n=16)
    rad = math.hypot(0.3, -0.2)
    th = math.atan2(-0.2, 0.3)
    assert abs(r["value"] - poisson_oracle(g, rad, th)) < 2e-3


def test_arc_ramps_bracket_the_indicator():
    lo, hi = 0.5, 2.0
    ind = BoundaryFunction.arc_indicator(lo, hi)
    lower, upper = arc_ramp(lo, hi, 8, side="lower"), arc_ramp(lo, hi, 8, side="upper")
    for phi in np.linspace(0, 2 * math.pi, 200):
        assert lower(phi) <= ind(phi) <= upper(phi) + 1e-12


# -- structure: maximum principle, monotone data ----------------------------------


def test_maximum_principle_fuzz():
    rng = random.Random(9)
    for _ in range(10):
        coeffs = [(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(3)]

        def g(phi, coeffs=coeffs):
            return sum(
                a * math.cos((k + 1) * phi) + b * math.sin((k + 1) * phi)
                for k, (a, b) in enumerate(coeffs)
            )

        gb = BoundaryFunction(np.vectorize(g))
        field = solve_dirichlet(COARSE.domain, gb)
        assert field.interior_max() <= field.boundary_max() + 1e-9


def test_extend_boundary_increasing_ramps():
    # increasing ramp approximations of an arc indicator: the extension
    # converges and reports a certified gap
    lo, hi = 0.2, 1.8
    out = extend_boundary(
        (0.0, 0.0),
        lambda n: arc_ramp(lo, hi, n, side="lower"),
        depth=16,
        tol=1e-2,
        cfg=COARSE,
    )
    assert abs(out["value"] - (hi - lo) / (2 * math.pi)) < 1e-2
    assert out["harnack_gap"] <= 1e-2


def test_extend_boundary_rejects_nonmonotone():
    lo, hi = 0.2, 1.8

    def flip(n):
        side = "lower" if n % 2 else "upper"
        return arc_ramp(lo, hi, n, side=side)

    with pytest.raises(NonMonotoneBoundary):
        extend_boundary((0.0, 0.0), flip, depth=8, tol=1e-3, cfg=COARSE)


# -- walk on spheres ---------------------------------------------------------------


def test_wos_agrees_with_grid():
    g = arc_ramp(0.0, math.pi, 4)
    wos_cfg = SolveConfig(
        domain=DiskDomain(Shape.UNIT_DISK, 1 / 32),
        solver=Solver.WALK_ON_SPHERES,
        seed=5,
        walks=40_000,
    )
    for x in [(0.0, 0.0), (0.4, 0.1)]:
        val, err = ix_eval(x, g, wos_cfg)
        ref, _ = ix_eval(x, g, COARSE)
        assert err > 0
        assert abs(val - ref) < 4 * err + 1e-3


def test_wos_deterministic_under_seed():
    g = arc_ramp(0.0, math.pi, 4)
    cfg = SolveConfig(
        domain=DiskDomain(Shape.UNIT_DISK, 1 / 32),
        solver=Solver.WALK_ON_SPHERES, seed=8, walks=10_000,
    )
    assert ix_eval((0.2, 0.3), g, cfg) == ix_eval((0.2, 0.3), g, cfg)
