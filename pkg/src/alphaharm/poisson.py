"""Positive real kernel on the disk and the boundary-value solver.

The kernel

    K_alpha(z) = c_alpha (1 - |z|^2)^(alpha+1) / |1 - z|^(alpha+2)

reproduces a map from its boundary data through the circle average
(1/2pi) int K_alpha(z e^{-i tau}) u*(e^{i tau}) d tau, discretized here by
the uniform trapezoid rule (spectrally accurate for smooth periodic data).
Boundary data is restricted to trigonometric polynomials or uniform samples.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import DomainError, QuadratureResolutionWarning
from .field import AlphaHarmonicMap, CoefficientSequence, DiskPoint

SOLVE_R_MAX = 1.0 - 1e-3
MIN_NODES = 64


@dataclass(frozen=True)
class BoundaryCurve:
    """Boundary data on the unit circle: trig-polynomial modes or uniform
    samples (exactly one of the two)."""

    modes: CoefficientSequence | None = None
    samples: tuple[np.ndarray, np.ndarray] | None = None

    @classmethod
    def from_modes(cls, modes: CoefficientSequence) -> "BoundaryCurve":
        return cls(modes=modes)

    @classmethod
    def from_samples(cls, thetas, values) -> "BoundaryCurve":
        thetas = np.ascontiguousarray(thetas, dtype=np.float64)
        values = np.ascontiguousarray(values, dtype=np.complex128)
        if thetas.shape != values.shape or thetas.ndim != 1 or thetas.size < 4:
            raise DomainError("samples need matching 1-D theta/value arrays")
        step = 2.0 * math.pi / thetas.size
        expected = thetas[0] + step * np.arange(thetas.size)
        if not np.allclose(thetas, expected, atol=1e-12):
            raise DomainError("sample angles must be uniformly spaced")
        return cls(samples=(thetas, values))

    def __post_init__(self):
        if (self.modes is None) == (self.samples is None):
            raise DomainError("exactly one of modes/samples must be given")

    @property
    def degree(self) -> int:
        if self.modes is not None:
            return self.modes.max_index
        return self.samples[0].size // 2

    def values_at(self, tau: np.ndarray) -> np.ndarray:
        """Evaluate the boundary data at the given angles (mode form only)."""
        if self.modes is None:
            raise DomainError("sampled boundary data has no off-node values")
        out = np.zeros(tau.shape, dtype=np.complex128)
        for k, dk in self.modes.items():
            out += dk * np.exp(1j * k * tau)
        return out


def kernel_k_alpha(alpha: float, z: complex) -> float:
    """Kernel value at z, |z| < 1; strictly positive. Evaluated in log space
    so extreme weights neither underflow nor overflow prematurely."""
    if alpha <= -1.0:
        raise DomainError(f"alpha={alpha} must be > -1")
    az2 = z.real * z.real + z.imag * z.imag
    if az2 >= 1.0:
        raise DomainError(f"|z|={math.sqrt(az2)} must be < 1")
    log_c = 2.0 * specfun.lgamma(0.5 * alpha + 1.0) - specfun.lgamma(1.0 + alpha)
    one_minus = (1.0 - z.real) ** 2 + z.imag * z.imag
    log_val = (log_c + (alpha + 1.0) * math.log1p(-az2)
               - 0.5 * (alpha + 2.0) * math.log(one_minus))
    return math.exp(log_val)


def _kernel_ring(alpha: float, r: float, angles: np.ndarray) -> np.ndarray:
    """K_alpha(r e^{i angle}) for a fixed radius over many angles."""
    log_c = 2.0 * specfun.lgamma(0.5 * alpha + 1.0) - specfun.lgamma(1.0 + alpha)
    one_minus = (1.0 - r * np.cos(angles)) ** 2 + (r * np.sin(angles)) ** 2
    log_val = (log_c + (alpha + 1.0) * math.log1p(-r * r)
               - 0.5 * (alpha + 2.0) * np.log(one_minus))
    return np.exp(log_val)


def recommended_nodes(degree: int, r: float) -> int:
    return math.ceil(8.0 * (degree + 1) / (1.0 - r))


def solve_dirichlet(alpha: float, bc: BoundaryCurve, p: DiskPoint,
                    n_nodes: int = 2048) -> complex:
    """Trapezoid-rule circle average of kernel times boundary data.

    Accuracy is stated for |z| <= 0.9 with the recommended node count; the
    routine warns when the request falls below that bound. Weights alpha <= -1
    are rejected: every admissible map vanishes identically there, so the
    boundary problem degenerates.
    """
    if alpha <= -1.0:
        raise DomainError(
            f"alpha={alpha} rejected: for alpha <= -1 any admissible solution "
            "is identically zero, so there is nothing to solve")
    if p.r > SOLVE_R_MAX:
        raise DomainError(f"evaluation radius {p.r} exceeds {SOLVE_R_MAX}")
    if bc.samples is not None:
        taus, vals = bc.samples
        if n_nodes != taus.size:
            raise DomainError(
                "sampled boundary data fixes the quadrature nodes; "
                f"pass n_nodes={taus.size}")
    else:
        if n_nodes < MIN_NODES:
            raise DomainError(f"n_nodes={n_nodes} below minimum {MIN_NODES}")
        taus = 2.0 * math.pi * np.arange(n_nodes) / n_nodes
        vals = bc.values_at(taus)
    rec = recommended_nodes(bc.degree, p.r)
    if taus.size < rec:
        warnings.warn(
            f"{taus.size} quadrature nodes below the recommended {rec} for "
            f"degree {bc.degree} at r={p.r}", QuadratureResolutionWarning,
            stacklevel=2)
    kern = _kernel_ring(alpha, p.r, p.theta - taus)
    return complex(np.sum(kern * vals)) / taus.size


def boundary_of_map(m: AlphaHarmonicMap) -> BoundaryCurve:
    """Radial boundary limit of a map, mode by mode: d_k = c_k F_|k|(1)."""
    data = {}
    for k, ck in m.coeffs.items():
        data[k] = ck * specfun.f_k_at_one(m.alpha, abs(k))
    return BoundaryCurve.from_modes(CoefficientSequence.from_dict(data))


def map_of_boundary(alpha: float, bc: BoundaryCurve) -> AlphaHarmonicMap:
    """Series solution matching the given boundary modes: c_k = d_k / F_|k|(1)."""
    if bc.modes is None:
        raise DomainError("series construction needs mode-form boundary data")
    data = {}
    for k, dk in bc.modes.items():
        data[k] = dk / specfun.f_k_at_one(alpha, abs(k))
    return AlphaHarmonicMap(alpha, CoefficientSequence.from_dict(data))


def kernel_mean(alpha: float, r: float, n_nodes: int = 2048) -> float:
    """Quadrature circle average of the kernel at radius r; equals
    c_alpha * F(-alpha/2, -alpha/2; 1; r^2)."""
    taus = 2.0 * math.pi * np.arange(n_nodes) / n_nodes
    return float(np.mean(_kernel_ring(alpha, r, taus)))
