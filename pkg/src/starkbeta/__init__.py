"""p-adic gamma and beta special functions with exact cyclotomic and
high-precision real cross-checks of Stark-unit identities over Q."""

__version__ = "0.1.0"

from .bernoulli import BERNOULLI, BernoulliCache, bernoulli_number, bernoulli_poly
from .checks import (CheckReport, check_alg_prime, check_bpvsbc_scalar,
                     check_btog2, check_gross_koblitz_shadow,
                     check_rec_exact, check_rec_mod_roots, class_of_star,
                     frobenius_on_fraction)
from .classical import (BetaFactor, BetaProductExpr,
                        InsufficientPrecisionError, beta_real,
                        decompose_gamma_product, gamma_real, hurwitz_zeta,
                        hurwitz_zeta_deriv0, recognize_algebraic,
                        stark_unit_real, stark_unit_real_routes,
                        verify_beta_product)
from .config import RunConfig
from .cyclotomic import (CyclotomicNumber, cyclotomic_polynomial, euler_phi,
                         galois_apply, min_poly, rec_exact_check,
                         stark_unit_exact)
from .padic import (PadicNumber, UnitModRoots, exp_extended, exp_small,
                    is_prime, log_iwasawa, padic_from_rational,
                    padic_from_rational_abs, star, teichmuller)
from .padic_gamma import (FrobeniusFactor, LGammaValue, beta_p,
                          beta_p_pointed, epsilon, frac01, fractional_p_part,
                          frobenius_factor, gamma_coleman, gamma_ext,
                          gamma_morita, jacobi_sum, jacobi_sum_embedded,
                          jx_oracle, lgamma, lgamma_general)
from .suites import SUITES, run_suite
from .unramified import UnramifiedContext, context_for_conductor, embed_cyclotomic

__all__ = [name for name in dir() if not name.startswith("_")]
