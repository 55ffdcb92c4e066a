"""Explicit polyharmonic form for even weights alpha = 2(p - 1).

For those weights every map splits as

    u(z) = sum_{n=0}^{p-1} |z|^{2n} (1-p)_n / n! * (I_n(z) + conj(J_n(z)))

where I_0 carries the analytic coefficients, J_0 the co-analytic ones, and
each next layer follows from the previous by an exact rational rescaling of
Taylor coefficients: coeff_k(I_n) = coeff_k(I_{n-1}) * (1 - p/(k+n)), i.e.
coeff_k(I_n) = (k+1-p)_n / (k+1)_n * c_k. Both the recurrence and the closed
ratio are implemented and cross-checked. The same layers bound the Lipschitz
constant of u in terms of a bound on the derivative of the harmonic companion.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import DomainError
from .field import AlphaHarmonicMap, CoefficientSequence, DiskPoint


@dataclass(frozen=True)
class PolyharmonicRep:
    """Layer coefficients of the representation.

    ``i_series[n]`` holds the analytic layer I_n on indices k >= 0;
    ``j_series[n]`` holds the co-analytic layer on indices k >= 1, stored
    directly as the coefficients multiplying zbar^k (values c_{-k} at n = 0).
    """

    p: int
    i_series: tuple[CoefficientSequence, ...]
    j_series: tuple[CoefficientSequence, ...]


@dataclass(frozen=True)
class LipschitzReport:
    """Derivative bound C for the full map given |h'|, |g'| <= m_bound."""

    m_bound: float
    c_bound: float
    per_n_sup: tuple[float, ...]


def _rescale_layer(layer: dict[int, complex], p: int, n: int) -> dict[int, complex]:
    return {k: v * (1.0 - p / (k + n)) for k, v in layer.items()}


def build_rep(m: AlphaHarmonicMap) -> PolyharmonicRep:
    """Layer decomposition of a map with even alpha; alpha/2 must snap to a
    nonnegative integer within 1e-12."""
    p = specfun.even_alpha_order(m.alpha)
    i0 = {k: v for k, v in m.coeffs.items() if k >= 0}
    j0 = {-k: v for k, v in m.coeffs.items() if k <= -1}
    i_layers = [i0]
    j_layers = [j0]
    for n in range(1, p):
        i_layers.append(_rescale_layer(i_layers[-1], p, n))
        j_layers.append(_rescale_layer(j_layers[-1], p, n))
    return PolyharmonicRep(
        p,
        tuple(CoefficientSequence.from_dict(d) for d in i_layers),
        tuple(CoefficientSequence.from_dict(d) for d in j_layers),
    )


def layer_ratio(k: int, p: int, n: int) -> float:
    """Closed form (k+1-p)_n / (k+1)_n relating layer n to the base layer."""
    return specfun.pochhammer(k + 1.0 - p, n) / specfun.pochhammer(k + 1.0, n)


def _eval_polynomial(coeffs: CoefficientSequence, w: complex) -> complex:
    return sum(v * w ** k for k, v in coeffs.items())


def eval_rep(rep: PolyharmonicRep, pt: DiskPoint) -> complex:
    """Value of the representation at a disk point."""
    z = pt.z
    zbar = z.conjugate()
    t = pt.t
    total = 0j
    for n in range(rep.p):
        weight = t ** n * specfun.pochhammer(1.0 - rep.p, n) / specfun.gamma(n + 1.0)
        total += weight * (_eval_polynomial(rep.i_series[n], z)
                           + _eval_polynomial(rep.j_series[n], zbar))
    return total


def derivative_series(rep: PolyharmonicRep):
    """Taylor coefficients of I_n' and of the zbar-derivatives of the
    co-analytic layers, by term-wise differentiation."""
    i_derivs = []
    j_derivs = []
    for layer in rep.i_series:
        i_derivs.append(CoefficientSequence.from_dict(
            {k - 1: k * v for k, v in layer.items() if k >= 1}))
    for layer in rep.j_series:
        j_derivs.append(CoefficientSequence.from_dict(
            {k - 1: k * v for k, v in layer.items() if k >= 1}))
    return tuple(i_derivs), tuple(j_derivs)


def derivative_series_recurrence(rep: PolyharmonicRep):
    """Same derivatives built from the layer recurrence instead: the degree
    k-1 coefficient of layer n equals that of layer n-1 minus
    p * k/(k+n) * coeff_k(layer n-1)."""
    def recur(layers):
        out = [CoefficientSequence.from_dict(
            {k - 1: k * v for k, v in layers[0].items() if k >= 1})]
        for n in range(1, rep.p):
            prev = layers[n - 1]
            data = dict(out[-1].items())
            for k, v in prev.items():
                if k < 0:
                    continue
                corr = rep.p * v * (k / (k + n))
                key = k - 1
                data[key] = data.get(key, 0j) - corr
            out.append(CoefficientSequence.from_dict(data))
        return tuple(out)

    return recur(rep.i_series), recur(rep.j_series)


def lipschitz_constant(rep: PolyharmonicRep, m_bound: float) -> LipschitzReport:
    """Bound (1 + p sum_{i=1}^{p-1} (i+1)(p+1)^{i-1}) * m_bound on each
    layer derivative, plus the per-layer sup bounds (p+1)^n * m_bound."""
    if not m_bound > 0.0:
        raise DomainError(f"m_bound={m_bound} must be positive")
    p = rep.p
    total = sum((i + 1) * (p + 1) ** (i - 1) for i in range(1, p))
    c_bound = (1.0 + p * total) * m_bound
    per_n = tuple((p + 1.0) ** n * m_bound for n in range(p))
    return LipschitzReport(m_bound=m_bound, c_bound=c_bound, per_n_sup=per_n)


def crude_m_bound(coeffs: CoefficientSequence) -> float:
    """sum k |c_k| over each side, the larger of the two: a simple derivative
    bound for finite series (valid for maps with c_0 = 0)."""
    pos = sum(abs(k) * abs(v) for k, v in coeffs.items() if k >= 1)
    neg = sum(abs(k) * abs(v) for k, v in coeffs.items() if k <= -1)
    return max(pos, neg)


def gradient_sup_on_grid(m: AlphaHarmonicMap, n_r: int = 60,
                         n_theta: int = 96, r_max: float = 0.999) -> float:
    """Numeric sup of |du/dx| and |du/dy| over a polar grid, from the
    Wirtinger pair (du/dx = u_z + u_zbar, du/dy = i(u_z - u_zbar))."""
    from . import field

    r = np.linspace(1e-3, r_max, n_r)
    theta = np.linspace(0.0, 2.0 * np.pi, n_theta, endpoint=False)
    u_z, u_zbar = field.wirtinger_grid(m, r, theta)
    dx = np.abs(u_z + u_zbar)
    dy = np.abs(1j * (u_z - u_zbar))
    return float(max(dx.max(), dy.max()))
