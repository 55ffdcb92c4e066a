"""Injectivity and convexity certification for the one-parameter family

    u(z) = F_1(|z|^2) z + c F_k(|z|^2) zbar^k,   c real.

Two explicit constants govern the family: ``bound_n`` (sense-preserving
injectivity for |c| < N, valid for alpha in (0, 2]) and ``bound_m`` (convex
boundary image iff |c| < M, any alpha > -1). All geometric checks here are
grid- or sample-based at declared resolution; they certify behaviour on the
grid and claim nothing beyond it.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import field, specfun
from .errors import DomainError
from .field import AlphaHarmonicMap, CoefficientSequence
from .poisson import BoundaryCurve

RKC_RADII = (0.25, 0.5, 0.75, 0.9, 0.99)
DEFAULT_GRID = (200, 256)
# Certification grids stop at 0.999: within the series domain, and the
# adaptive summation stays comfortably under its term cap for every weight.
GRID_R_MAX = 0.999


@dataclass(frozen=True)
class SpecialMap:
    """Parameters (alpha, k, c) of the two-mode family; c must be real.

    The injectivity bound N only applies for alpha in (0, 2], but the map
    itself is constructible for any alpha > -1 so that diagnostic runs can
    probe failures (for example the classical counterexample at alpha = 0).
    """

    alpha: float
    k: int
    c_minus_k: float

    def __post_init__(self):
        if self.alpha <= -1.0:
            raise DomainError(f"alpha={self.alpha} must be > -1")
        if self.k < 1:
            raise DomainError(f"k={self.k} must be >= 1")
        if isinstance(self.c_minus_k, complex):
            raise DomainError("c_minus_k must be real; complex coefficients "
                              "are outside the certified family")


@dataclass(frozen=True)
class GridScan:
    """Minimum Jacobian over a polar grid."""

    jacobian_min: float
    n_r: int
    n_theta: int
    r_max: float

    @property
    def certified(self) -> bool:
        return self.jacobian_min > 0.0


@dataclass(frozen=True)
class UnivalenceReport:
    """Aggregate certification outcome; fields reflect exactly what was
    tested on the declared grids, with no extrapolation claim."""

    jacobian_min: float
    arg_monotone: tuple[tuple[float, bool], ...]
    convex: bool
    boundary_homeomorphic: bool
    grid_spec: tuple[int, int]
    passed: bool
    failure: str | None = None


def bound_n(alpha: float, k: int) -> float:
    """Injectivity constant N = (alpha/2) / ((k - alpha/2) Gamma(k+1)
    Gamma(2+alpha/2) / Gamma(k+1+alpha/2) + k); requires alpha in (0, 2]."""
    if not (0.0 < alpha <= 2.0):
        raise DomainError(f"alpha={alpha} outside (0, 2]")
    if k < 1:
        raise DomainError(f"k={k} must be >= 1")
    ratio = (specfun.gamma(k + 1.0) * specfun.gamma(2.0 + 0.5 * alpha)
             / specfun.gamma(k + 1.0 + 0.5 * alpha))
    return (0.5 * alpha) / ((k - 0.5 * alpha) * ratio + k)


def bound_m(alpha: float, k: int) -> float:
    """Convexity constant M = Gamma(k+1+alpha/2) / (k^2 Gamma(k+1)
    Gamma(2+alpha/2)) = F_1(1) / (k^2 F_k(1)); any alpha > -1."""
    if alpha <= -1.0:
        raise DomainError(f"alpha={alpha} must be > -1")
    if k < 1:
        raise DomainError(f"k={k} must be >= 1")
    return specfun.gamma(k + 1.0 + 0.5 * alpha) / (
        k * k * specfun.gamma(k + 1.0) * specfun.gamma(2.0 + 0.5 * alpha))


@dataclass(frozen=True)
class BoundConstants:
    """The pair (N, M) and their minimum L for one (alpha, k)."""

    n_bound: float
    m_bound: float
    l_bound: float
    alpha: float
    k: int


def bounds(alpha: float, k: int) -> BoundConstants:
    n = bound_n(alpha, k)
    m = bound_m(alpha, k)
    return BoundConstants(n_bound=n, m_bound=m, l_bound=min(n, m),
                          alpha=alpha, k=k)


def special_map(s: SpecialMap) -> AlphaHarmonicMap:
    """The family member as a general map: coefficients {c_1 = 1, c_{-k} = c}."""
    data = {1: 1.0 + 0j}
    if s.c_minus_k != 0.0:
        data[-s.k] = complex(s.c_minus_k)
    return AlphaHarmonicMap(s.alpha, CoefficientSequence.from_dict(data))


def check_sense_preserving(s: SpecialMap, grid: tuple[int, int] = DEFAULT_GRID,
                           r_max: float = GRID_R_MAX) -> GridScan:
    """Minimum Jacobian of the family member over an (n_r x n_theta) polar
    grid; a positive minimum certifies sense-preservation on the grid."""
    n_r, n_theta = grid
    if n_r < 2 or n_theta < 4:
        raise DomainError(f"grid {grid} too coarse")
    m = special_map(s)
    r = np.linspace(1e-3, r_max, n_r)
    theta = np.linspace(0.0, 2.0 * math.pi, n_theta, endpoint=False)
    jac = field.jacobian_grid(m, r, theta)
    return GridScan(jacobian_min=float(jac.min()), n_r=n_r,
                    n_theta=n_theta, r_max=r_max)


def _winding_increments(w: np.ndarray) -> np.ndarray:
    """Principal-branch argument steps between cyclically consecutive points."""
    if np.any(w == 0):
        raise DomainError("degenerate sample: image point at the origin")
    return np.angle(np.roll(w, -1) * np.conj(w))


def check_circle_injectivity(s: SpecialMap, r: float, n_samples: int = 1024) -> bool:
    """True iff the sampled image of |z| = r has strictly increasing argument
    and winds exactly once around the origin.

    Consecutive argument steps must stay below pi/2 (nearest-branch
    continuation); larger steps mean the sampling is too coarse to certify
    and the check reports False.
    """
    if not (0.0 < r < 1.0):
        raise DomainError(f"r={r} must be in (0, 1)")
    if n_samples < 4 * s.k + 8:
        raise DomainError(f"n_samples={n_samples} below minimum {4 * s.k + 8}")
    m = special_map(s)
    theta = np.linspace(0.0, 2.0 * math.pi, n_samples, endpoint=False)
    w = field.eval_u_grid(m, np.array([r]), theta)[0]
    steps = _winding_increments(w)
    if steps.min() <= 0.0 or steps.max() >= 0.5 * math.pi:
        return False
    winding = steps.sum() / (2.0 * math.pi)
    return bool(round(winding) == 1)


def boundary_curve(s: SpecialMap) -> BoundaryCurve:
    """Boundary limit of the family member in mode form:
    F_1(1) e^{i theta} + c F_k(1) e^{-i k theta}."""
    data = {1: specfun.f_k_at_one(s.alpha, 1) + 0j}
    if s.c_minus_k != 0.0:
        data[-s.k] = complex(s.c_minus_k * specfun.f_k_at_one(s.alpha, s.k))
    return BoundaryCurve.from_modes(CoefficientSequence.from_dict(data))


def _mode_tangents(modes: CoefficientSequence, theta: np.ndarray) -> np.ndarray:
    out = np.zeros(theta.shape, dtype=np.complex128)
    for k, dk in modes.items():
        out += 1j * k * dk * np.exp(1j * k * theta)
    return out


def check_convexity(bc: BoundaryCurve, n_samples: int = 4096) -> bool:
    """True iff the sampled tangent direction of the closed curve turns
    monotonically (all cross products of consecutive tangents share a sign),
    the discrete analogue of a monotone tangent angle."""
    if bc.modes is not None:
        k_max = max((abs(k) for k in bc.modes.support), default=1)
        if n_samples < 8 * k_max + 16:
            raise DomainError(
                f"n_samples={n_samples} below minimum {8 * k_max + 16}")
        theta = np.linspace(0.0, 2.0 * math.pi, n_samples, endpoint=False)
        tangents = _mode_tangents(bc.modes, theta)
    else:
        pts = bc.samples[1]
        if pts.size < 24:
            raise DomainError("too few samples for a convexity verdict")
        tangents = np.roll(pts, -1) - pts
    norms = np.abs(tangents)
    if norms.min() <= 1e-14 * norms.max():
        raise DomainError("degenerate sample: vanishing tangent vector")
    nxt = np.roll(tangents, -1)
    cross = (tangents.real * nxt.imag - tangents.imag * nxt.real)
    return bool(cross.min() >= 0.0 or cross.max() <= 0.0)


def _boundary_homeomorphic(bc: BoundaryCurve, n_samples: int = 4096) -> bool:
    theta = np.linspace(0.0, 2.0 * math.pi, n_samples, endpoint=False)
    w = bc.values_at(theta)
    steps = _winding_increments(w)
    if steps.min() <= 0.0 or steps.max() >= 0.5 * math.pi:
        return False
    return bool(round(steps.sum() / (2.0 * math.pi)) == 1)


def rkc_certificate(s: SpecialMap, grid: tuple[int, int] = DEFAULT_GRID,
                    radii: tuple[float, ...] = RKC_RADII) -> UnivalenceReport:
    """Full certification run: boundary homeomorphism and convexity, interior
    Jacobian positivity, and circle injectivity at the standard radii.

    Precondition violations (alpha outside (0, 2], or |c| at or beyond
    min(N, M)) come back as a structured failing report, not an exception.
    """
    empty = dict(jacobian_min=math.nan, arg_monotone=(), convex=False,
                 boundary_homeomorphic=False, grid_spec=grid, passed=False)
    if not (0.0 < s.alpha <= 2.0):
        return UnivalenceReport(failure=f"alpha={s.alpha} outside (0, 2]", **empty)
    limit = bounds(s.alpha, s.k).l_bound
    if not abs(s.c_minus_k) < limit:
        return UnivalenceReport(
            failure=f"|c|={abs(s.c_minus_k)} not inside the open interval "
                    f"(-L, L), L={limit:.6g}", **empty)
    scan = check_sense_preserving(s, grid=grid)
    circles = tuple((r, check_circle_injectivity(s, r)) for r in radii)
    bc = boundary_curve(s)
    convex = check_convexity(bc)
    homeo = _boundary_homeomorphic(bc)
    ok = (scan.certified and convex and homeo
          and all(flag for _, flag in circles))
    return UnivalenceReport(
        jacobian_min=scan.jacobian_min, arg_monotone=circles, convex=convex,
        boundary_homeomorphic=homeo, grid_spec=grid, passed=ok,
        failure=None if ok else "one or more grid checks failed")
