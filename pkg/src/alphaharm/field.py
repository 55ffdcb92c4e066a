"""Disk mappings built from two-sided coefficient sequences.

A map u is determined by a weight alpha > -1 and finitely many complex
coefficients c_k, k in Z:

    u(z) = sum_{k>=0} c_k F_k(|z|^2) z^k + sum_{k>=1} c_{-k} F_k(|z|^2) zbar^k

with F_k from :mod:`alphaharm.specfun`. The companion harmonic map v shares
the coefficients and drops the F_k factors. This module evaluates u and v,
their Wirtinger derivatives and Jacobian, and a finite-difference residual
of the weighted-Laplacian operator that u annihilates.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from . import specfun
from .errors import DomainError

# Evaluation radius cap for non-polynomial weights; the boundary itself is
# reached through f_k_at_one, not through the series.
R_MAX_OPEN = 1.0 - 1e-4

_RESIDUAL_H_MIN = 1e-6
_RESIDUAL_H_MAX = 1e-3


@dataclass(frozen=True)
class CoefficientSequence:
    """Finitely supported two-sided sequence {c_k}, k in Z.

    Indices k >= 0 carry the analytic part, k <= -1 the co-analytic part.
    Zero entries are dropped on construction; the mapping is read-only.
    """

    entries: MappingProxyType = field(default_factory=lambda: MappingProxyType({}))

    @classmethod
    def from_dict(cls, data: dict[int, complex]) -> "CoefficientSequence":
        cleaned = {}
        for k, v in data.items():
            if not isinstance(k, (int, np.integer)):
                raise DomainError(f"coefficient index {k!r} is not an integer")
            v = complex(v)
            if v != 0:
                cleaned[int(k)] = v
        return cls(MappingProxyType(dict(sorted(cleaned.items()))))

    @classmethod
    def from_pairs(cls, pairs) -> "CoefficientSequence":
        data = {}
        for k, v in pairs:
            if int(k) in data:
                raise DomainError(f"duplicate coefficient index {k}")
            data[int(k)] = v
        return cls.from_dict(data)

    def coeff(self, k: int) -> complex:
        return self.entries.get(k, 0j)

    def items(self):
        return self.entries.items()

    @property
    def max_index(self) -> int:
        return max((abs(k) for k in self.entries), default=0)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self.entries)

    def map_values(self, fn) -> "CoefficientSequence":
        return CoefficientSequence.from_dict({k: fn(v) for k, v in self.items()})

    def __len__(self):
        return len(self.entries)


def coefficients(data: dict[int, complex]) -> CoefficientSequence:
    """Shorthand constructor used throughout the tests and the CLI."""
    return CoefficientSequence.from_dict(data)


@dataclass(frozen=True)
class AlphaHarmonicMap:
    """Weight alpha > -1 plus a coefficient sequence."""

    alpha: float
    coeffs: CoefficientSequence

    def __post_init__(self):
        if not self.alpha > -1.0:
            raise DomainError(f"alpha={self.alpha} must be > -1")

    @property
    def is_polyharmonic(self) -> bool:
        return specfun.is_even_alpha(self.alpha)


@dataclass(frozen=True)
class DiskPoint:
    """Point r e^{i theta} in the open unit disk; t = r^2 by construction."""

    r: float
    theta: float

    def __post_init__(self):
        if not (0.0 <= self.r < 1.0):
            raise DomainError(f"r={self.r} must lie in [0, 1)")

    @classmethod
    def from_z(cls, z: complex) -> "DiskPoint":
        return cls(abs(z), cmath.phase(z) % (2.0 * math.pi))

    @property
    def t(self) -> float:
        return self.r * self.r

    @property
    def z(self) -> complex:
        return cmath.rect(self.r, self.theta)


@dataclass(frozen=True)
class WirtingerPair:
    """Complex partials (du/dz, du/dzbar) at a point."""

    u_z: complex
    u_zbar: complex

    @property
    def jacobian(self) -> float:
        return abs(self.u_z) ** 2 - abs(self.u_zbar) ** 2


def _check_radius(m: AlphaHarmonicMap, r: float) -> None:
    if r >= 1.0:
        raise DomainError(f"r={r} must be < 1")
    if not m.is_polyharmonic and r > R_MAX_OPEN:
        raise DomainError(
            f"r={r} exceeds the series evaluation radius {R_MAX_OPEN} "
            "for non-even alpha; boundary values go through f_k_at_one")


def eval_u_grid(m: AlphaHarmonicMap, r: np.ndarray,
                theta: np.ndarray) -> np.ndarray:
    """u on the tensor grid (r_i, theta_j); returns an (len(r), len(theta))
    complex array. Signed index k contributes c_k F_|k| r^|k| e^{i k theta}."""
    r = np.ascontiguousarray(r, dtype=np.float64)
    theta = np.ascontiguousarray(theta, dtype=np.float64)
    if r.size:
        _check_radius(m, float(r.max()))
        if r.min() < 0.0:
            raise DomainError("r must be >= 0")
    t = r * r
    out = np.zeros((r.size, theta.size), dtype=np.complex128)
    for k, ck in m.coeffs.items():
        fk = specfun.f_k_array(m.alpha, abs(k), t)
        radial = ck * fk * r ** abs(k)
        out += radial[:, None] * np.exp(1j * k * theta)[None, :]
    return out


def eval_u(m: AlphaHarmonicMap, p: DiskPoint) -> complex:
    """Series value of the map at one disk point."""
    grid = eval_u_grid(m, np.array([p.r]), np.array([p.theta]))
    return complex(grid[0, 0])


def eval_v_grid(coeffs: CoefficientSequence, r: np.ndarray,
                theta: np.ndarray) -> np.ndarray:
    """Companion harmonic map on a tensor grid (no F_k factors)."""
    r = np.ascontiguousarray(r, dtype=np.float64)
    theta = np.ascontiguousarray(theta, dtype=np.float64)
    out = np.zeros((r.size, theta.size), dtype=np.complex128)
    for k, ck in coeffs.items():
        radial = ck * r ** abs(k)
        out += radial[:, None] * np.exp(1j * k * theta)[None, :]
    return out


def eval_v(coeffs: CoefficientSequence, p: DiskPoint) -> complex:
    grid = eval_v_grid(coeffs, np.array([p.r]), np.array([p.theta]))
    return complex(grid[0, 0])


def wirtinger_grid(m: AlphaHarmonicMap, r: np.ndarray, theta: np.ndarray):
    """(u_z, u_zbar) on a tensor grid, each (len(r), len(theta)) complex.

    For a mode c_k F(t) z^k (k >= 1):
        d/dz    = c_k [F_t r^{k+1} + k F r^{k-1}] e^{i(k-1) theta}
        d/dzbar = c_k F_t r^{k+1} e^{i(k+1) theta}
    and symmetrically for c_{-k} F(t) zbar^k. The k = 0 mode contributes
    c_0 F_t(t) zbar to u_z and c_0 F_t(t) z to u_zbar (dt/dz = zbar).
    """
    r = np.ascontiguousarray(r, dtype=np.float64)
    theta = np.ascontiguousarray(theta, dtype=np.float64)
    if r.size:
        _check_radius(m, float(r.max()))
    t = r * r
    u_z = np.zeros((r.size, theta.size), dtype=np.complex128)
    u_zbar = np.zeros((r.size, theta.size), dtype=np.complex128)
    for k, ck in m.coeffs.items():
        ka = abs(k)
        fk_t = specfun.f_k_t_array(m.alpha, ka, t)
        if k == 0:
            rad = ck * fk_t * r
            u_z += rad[:, None] * np.exp(-1j * theta)[None, :]
            u_zbar += rad[:, None] * np.exp(1j * theta)[None, :]
            continue
        fk = specfun.f_k_array(m.alpha, ka, t)
        main = ck * (fk_t * r ** (ka + 1) + ka * fk * r ** (ka - 1))
        cross = ck * fk_t * r ** (ka + 1)
        if k > 0:
            u_z += main[:, None] * np.exp(1j * (ka - 1) * theta)[None, :]
            u_zbar += cross[:, None] * np.exp(1j * (ka + 1) * theta)[None, :]
        else:
            u_zbar += main[:, None] * np.exp(-1j * (ka - 1) * theta)[None, :]
            u_z += cross[:, None] * np.exp(-1j * (ka + 1) * theta)[None, :]
    return u_z, u_zbar


def wirtinger(m: AlphaHarmonicMap, p: DiskPoint) -> WirtingerPair:
    u_z, u_zbar = wirtinger_grid(m, np.array([p.r]), np.array([p.theta]))
    return WirtingerPair(complex(u_z[0, 0]), complex(u_zbar[0, 0]))


def jacobian_grid(m: AlphaHarmonicMap, r: np.ndarray,
                  theta: np.ndarray) -> np.ndarray:
    u_z, u_zbar = wirtinger_grid(m, r, theta)
    return np.abs(u_z) ** 2 - np.abs(u_zbar) ** 2


def jacobian(m: AlphaHarmonicMap, p: DiskPoint) -> float:
    """|u_z|^2 - |u_zbar|^2 at a point; positive where sense-preserving."""
    return wirtinger(m, p).jacobian


def t_alpha_residual_of(alpha: float, func, p: DiskPoint,
                        h: float = 1e-4) -> float:
    """|T_alpha f| at p for an arbitrary callable f(z), by finite differences.

    T_alpha f = -alpha^2 w1 f + 2 alpha w1 (x f_x + y f_y) + w0 Lap f
    with w1 = (1-|z|^2)^(-alpha-1), w0 = (1-|z|^2)^(-alpha). This is the
    annihilating operator of the series family, normalized so that the
    weight-zero case is exactly the Euclidean Laplacian. The Laplacian uses
    the 5-point second-difference stencil; the radial term uses central
    first differences (z d/dz + zbar d/dzbar = x d/dx + y d/dy).
    """
    if not (_RESIDUAL_H_MIN <= h <= _RESIDUAL_H_MAX):
        raise DomainError(f"step h={h} outside [{_RESIDUAL_H_MIN}, {_RESIDUAL_H_MAX}]")
    if p.r + 2.0 * h >= R_MAX_OPEN:
        raise DomainError(f"point r={p.r} too close to the boundary for step {h}")
    z = p.z
    x, y = z.real, z.imag
    f0 = func(complex(x, y))
    fxp = func(complex(x + h, y))
    fxm = func(complex(x - h, y))
    fyp = func(complex(x, y + h))
    fym = func(complex(x, y - h))
    lap = (fxp + fxm + fyp + fym - 4.0 * f0) / (h * h)
    fx = (fxp - fxm) / (2.0 * h)
    fy = (fyp - fym) / (2.0 * h)
    radial = x * fx + y * fy
    one_mt = 1.0 - p.t
    w1 = one_mt ** (-alpha - 1.0)
    w0 = one_mt ** (-alpha)
    value = -(alpha * alpha) * w1 * f0 + 2.0 * alpha * w1 * radial + w0 * lap
    return abs(value)


def t_alpha_residual(m: AlphaHarmonicMap, p: DiskPoint, h: float = 1e-4) -> float:
    """Discretized operator residual of the map itself; pure discretization
    error (small) when the coefficients describe a genuine solution."""
    return t_alpha_residual_of(
        m.alpha, lambda z: eval_u(m, DiskPoint.from_z(z)), p, h)
