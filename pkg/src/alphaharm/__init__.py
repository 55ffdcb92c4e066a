"""Real-kernel weighted-Laplacian mappings on the unit disk.

Evaluate series solutions of the weighted Laplace equation, solve the
boundary-value problem through the positive real kernel, decompose
polyharmonic cases into explicit layers, certify injectivity/convexity of
the two-mode family, and compute image-surface areas in closed form with an
independent quadrature cross-check. The ``verify`` module re-derives every
identity the package relies on; ``alphaharm verify`` runs it from the shell.
"""

from .area import (AreaReport, area_closed, area_harmonic, area_quadrature,
                   area_report, area_sweep, h_aux, ratio_f)
from .backend import BACKEND
from .errors import (AlphaHarmError, ConfigError, ConvergenceError,
                     DomainError, RangeOverflowError)
from .field import (AlphaHarmonicMap, CoefficientSequence, DiskPoint,
                    WirtingerPair, coefficients, eval_u, eval_u_grid, eval_v,
                    jacobian, jacobian_grid, t_alpha_residual, wirtinger)
from .poisson import (BoundaryCurve, boundary_of_map, kernel_k_alpha,
                      map_of_boundary, solve_dirichlet)
from .represent import (LipschitzReport, PolyharmonicRep, build_rep,
                        crude_m_bound, derivative_series, eval_rep,
                        lipschitz_constant)
from .specfun import (AlphaK, HyperTriple, c_alpha, digamma, f_k_at_one,
                      gamma, hyper_f, hyper_f_t, pochhammer, trigamma)
from .univalence import (BoundConstants, SpecialMap, UnivalenceReport,
                         bound_m, bound_n, bounds, boundary_curve,
                         check_circle_injectivity, check_convexity,
                         check_sense_preserving, rkc_certificate, special_map)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
