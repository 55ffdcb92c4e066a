"""Real special functions used throughout the package.

Self-contained double-precision implementations: Gamma via a 14-term
Lanczos-type rational approximation, digamma/trigamma via upward recurrence
plus asymptotic expansion, Pochhammer symbols, and the Gauss hypergeometric
series F(a, b; c; t) on [0, 1) together with its t-derivative and t -> 1
limit for the one-parameter family

    F_k(t) = F(-alpha/2, k - alpha/2; k + 1; t),   alpha > -1, k >= 0,

which generates every disk mapping handled by the rest of the library.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .backend import hyp2f1_series
from .errors import ConvergenceError, DomainError, RangeOverflowError

# Adaptive summation policy: stop after three consecutive terms below
# SERIES_RTOL * |partial sum|, give up past SERIES_MAX_TERMS. Non-terminating
# parameters are only evaluated for t <= T_MAX_OPEN; the t -> 1 value has a
# Gamma-ratio closed form (f_k_at_one).
SERIES_RTOL = 1e-16
SERIES_MAX_TERMS = 100_000
T_MAX_OPEN = 1.0 - 1e-4

# Snap tolerance for detecting terminating (polynomial) parameter values.
INTEGER_SNAP = 1e-12

GAMMA_X_MAX = 171.62437695630272  # largest x with Gamma(x) finite in double

_LANCZOS_G = 4.7421875
_LANCZOS_SER0 = 0.999999999999997092
_LANCZOS_COEF = (
    57.1562356658629235,
    -59.5979603554754912,
    14.1360979747417471,
    -0.491913816097620199,
    0.339946499848118887e-4,
    0.465236289270485756e-4,
    -0.983744753048795646e-4,
    0.158088703224912494e-3,
    -0.210264441724104883e-3,
    0.217439618115212643e-3,
    -0.164318106536763890e-3,
    0.844182239838527433e-4,
    -0.261908384015814087e-4,
    0.368991826595316234e-5,
)
_SQRT_2PI = 2.5066282746310005

# Asymptotic tails (Bernoulli-number coefficients), applied after shifting
# the argument above _PSI_SHIFT where the x^-14 truncation error is < 1e-15.
_PSI_SHIFT = 10.0
_DIGAMMA_TAIL = (
    -1.0 / 12.0,
    1.0 / 120.0,
    -1.0 / 252.0,
    1.0 / 240.0,
    -1.0 / 132.0,
    691.0 / 32760.0,
    -1.0 / 12.0,
)
_TRIGAMMA_TAIL = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
)


@dataclass(frozen=True)
class HyperTriple:
    """Parameters (a, b, c) of the Gauss series; c not a nonpositive integer."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if _nonpositive_integer_order(self.c) is not None:
            raise DomainError(f"c={self.c} is zero or a negative integer")

    @classmethod
    def for_mode(cls, alpha: float, k: int) -> "HyperTriple":
        """Specialized triple (-alpha/2, k - alpha/2, k + 1) for frequency k."""
        if alpha <= -1.0:
            raise DomainError(f"alpha={alpha} must be > -1")
        if k < 0:
            raise DomainError(f"k={k} must be >= 0")
        return cls(-0.5 * alpha, k - 0.5 * alpha, float(k + 1))


@dataclass(frozen=True)
class AlphaK:
    """Weight parameter alpha > -1 and frequency index k >= 0."""

    alpha: float
    k: int

    def __post_init__(self):
        if self.alpha <= -1.0:
            raise DomainError(f"alpha={self.alpha} must be > -1")
        if self.k < 0:
            raise DomainError(f"k={self.k} must be >= 0")

    @property
    def triple(self) -> HyperTriple:
        return HyperTriple.for_mode(self.alpha, self.k)


def _lanczos_series(x: float) -> float:
    s = _LANCZOS_SER0
    for j, cj in enumerate(_LANCZOS_COEF):
        s += cj / (x + 1.0 + j)
    return s


def gamma(x: float) -> float:
    """Gamma function for x > 0, relative error well under 1e-13 on (0, 170]."""
    if not x > 0.0:
        raise DomainError(f"gamma requires x > 0, got {x}")
    if x < 0.5:
        # Reflection keeps the Lanczos core on arguments >= 0.5.
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    t = x + _LANCZOS_G + 0.5
    s = _SQRT_2PI * _lanczos_series(x) / x
    logt = math.log(t)
    log_total = (x + 0.5) * logt - t + math.log(s)
    if log_total > 709.782:
        raise RangeOverflowError(f"gamma({x}) exceeds the double range")
    # t**(x + 0.5) = t**x * sqrt(t): the pow exponent x is exact, and the
    # split below keeps intermediates finite near the overflow boundary.
    if x * logt > 705.0:
        q = math.pow(t, 0.5 * x) * math.exp(-0.5 * t)
        return q * q * math.sqrt(t) * s
    return math.pow(t, x) * math.sqrt(t) * math.exp(-t) * s


def lgamma(x: float) -> float:
    """log Gamma(x) for x > 0 (internal helper for ratio-of-Gamma formulas)."""
    if not x > 0.0:
        raise DomainError(f"lgamma requires x > 0, got {x}")
    if x < 0.5:
        return math.log(math.pi / math.sin(math.pi * x)) - lgamma(1.0 - x)
    t = x + _LANCZOS_G + 0.5
    s = _SQRT_2PI * _lanczos_series(x) / x
    return (x + 0.5) * math.log(t) - t + math.log(s)


def digamma(x: float) -> float:
    """psi(x) for x > 0; shifts with psi(1+x) = 1/x + psi(x), then expands."""
    if not x > 0.0:
        raise DomainError(f"digamma requires x > 0, got {x}")
    acc = 0.0
    while x < _PSI_SHIFT:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    p = 0.0
    for coef in reversed(_DIGAMMA_TAIL):
        p = (p + coef) * inv2
    return acc + math.log(x) - 0.5 / x + p


def trigamma(x: float) -> float:
    """psi'(x) for x > 0 via the same shift plus its asymptotic tail."""
    if not x > 0.0:
        raise DomainError(f"trigamma requires x > 0, got {x}")
    acc = 0.0
    while x < _PSI_SHIFT:
        acc += 1.0 / (x * x)
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    p = 0.0
    for coef in reversed(_TRIGAMMA_TAIL):
        p = (p + coef) * inv2
    return acc + inv + 0.5 * inv2 + p * inv


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.

    Exact zeros from nonpositive-integer a are preserved by using the plain
    product whenever a factor can vanish; the Gamma-ratio shortcut is used
    only for large n on safely positive arguments.
    """
    if n < 0:
        raise DomainError(f"pochhammer requires n >= 0, got {n}")
    if n == 0:
        return 1.0
    if a > 0.0 and n > 40 and a + n <= GAMMA_X_MAX:
        return math.exp(lgamma(a + n) - lgamma(a))
    p = 1.0
    for i in range(n):
        p *= a + i
    return p


def _nonpositive_integer_order(v: float) -> int | None:
    """Return m >= 0 when v is within snap distance of -m, else None."""
    r = round(v)
    if r <= 0 and abs(v - r) <= INTEGER_SNAP:
        return -int(r)
    return None


def terminating_order(a: float, b: float) -> int:
    """Polynomial degree of the series when a or b snaps to a nonpositive
    integer; -1 when the series does not terminate."""
    orders = [m for m in (_nonpositive_integer_order(a),
                          _nonpositive_integer_order(b)) if m is not None]
    if not orders:
        return -1
    return min(orders)


def _as_triple(params) -> tuple[float, float, float]:
    if isinstance(params, HyperTriple):
        return params.a, params.b, params.c
    a, b, c = params
    if _nonpositive_integer_order(float(c)) is not None:
        raise DomainError(f"c={c} is zero or a negative integer")
    return float(a), float(b), float(c)


def hyper_f_array(params, t: np.ndarray) -> np.ndarray:
    """F(a, b; c; t) over a 1-D array of t values in [0, 1).

    Terminating parameter values (a or b within 1e-12 of a nonpositive
    integer) are snapped and summed as an exact polynomial, in which case
    t = 1 is also accepted. Otherwise the sum is adaptive and the domain is
    capped at t <= 1 - 1e-4; use ``f_k_at_one`` for the boundary value.
    """
    a, b, c = _as_triple(params)
    tv = np.ascontiguousarray(t, dtype=np.float64)
    if tv.size and (tv.min() < 0.0):
        raise DomainError("t must be >= 0")
    n_poly = terminating_order(a, b)
    if n_poly >= 0:
        if tv.size and tv.max() > 1.0:
            raise DomainError("t must be <= 1")
        # Polynomial family: snap drifted parameters so coefficients like
        # (k-1)/(k+1) come out as exact rationals of the intended integers.
        if abs(a - round(a)) <= INTEGER_SNAP:
            a = float(round(a))
        if abs(b - round(b)) <= INTEGER_SNAP:
            b = float(round(b))
    elif tv.size and tv.max() > T_MAX_OPEN:
        raise DomainError(
            f"non-terminating series evaluated only for t <= {T_MAX_OPEN}")
    vals, n_bad = hyp2f1_series(a, b, c, tv, n_poly,
                                SERIES_MAX_TERMS, SERIES_RTOL)
    if n_bad:
        raise ConvergenceError(
            f"series for (a={a}, b={b}, c={c}) failed to converge at "
            f"{n_bad} point(s) within {SERIES_MAX_TERMS} terms")
    return vals


def hyper_f(params, t: float) -> float:
    """F(a, b; c; t) at a single point; see ``hyper_f_array``."""
    return float(hyper_f_array(params, np.array([float(t)]))[0])


def hyper_f_t_array(params, t: np.ndarray) -> np.ndarray:
    """dF/dt over an array, via the contiguous relation
    F'(a, b; c; t) = (a b / c) F(a+1, b+1; c+1; t)."""
    a, b, c = _as_triple(params)
    # A vanishing prefactor means F is constant; skip the shifted series,
    # which need not terminate (or converge near t = 1) on its own.
    if terminating_order(a, b) == 0:
        tv = np.ascontiguousarray(t, dtype=np.float64)
        return np.zeros_like(tv)
    shifted = (a + 1.0, b + 1.0, c + 1.0)
    return (a * b / c) * hyper_f_array(shifted, t)


def hyper_f_t(params, t: float) -> float:
    """dF/dt at a single point; see ``hyper_f_t_array``."""
    return float(hyper_f_t_array(params, np.array([float(t)]))[0])


def f_k(alpha: float, k: int, t: float) -> float:
    """F_k(t) for the specialized family."""
    return hyper_f(HyperTriple.for_mode(alpha, k), t)


def f_k_array(alpha: float, k: int, t: np.ndarray) -> np.ndarray:
    return hyper_f_array(HyperTriple.for_mode(alpha, k), t)


def f_k_t_array(alpha: float, k: int, t: np.ndarray) -> np.ndarray:
    return hyper_f_t_array(HyperTriple.for_mode(alpha, k), t)


def f_k_at_one(alpha: float, k: int) -> float:
    """Boundary value F_k(1) = Gamma(k+1) Gamma(1+alpha) /
    (Gamma(k+1+alpha/2) Gamma(1+alpha/2)); finite for every alpha > -1."""
    if alpha <= -1.0:
        raise DomainError(f"alpha={alpha} must be > -1")
    if k < 0:
        raise DomainError(f"k={k} must be >= 0")
    num = gamma(k + 1.0) * gamma(1.0 + alpha)
    den = gamma(k + 1.0 + 0.5 * alpha) * gamma(1.0 + 0.5 * alpha)
    return num / den


def c_alpha(alpha: float) -> float:
    """Kernel normalization Gamma(alpha/2 + 1)^2 / Gamma(1 + alpha)."""
    if alpha <= -1.0:
        raise DomainError(f"alpha={alpha} must be > -1")
    g = gamma(0.5 * alpha + 1.0)
    return g * g / gamma(1.0 + alpha)


def is_even_alpha(alpha: float) -> bool:
    """True when alpha/2 snaps to a nonnegative integer (polynomial family)."""
    half = 0.5 * alpha
    r = round(half)
    return r >= 0 and abs(half - r) <= INTEGER_SNAP


def even_alpha_order(alpha: float) -> int:
    """p = alpha/2 + 1 for even alpha; raises otherwise."""
    if not is_even_alpha(alpha):
        raise DomainError(f"alpha={alpha} is not an even nonnegative integer")
    return int(round(0.5 * alpha)) + 1
