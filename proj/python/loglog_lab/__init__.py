"""Numerical verification of the doubly logarithmic Gradshteyn-Ryzhik integrals."""

from ._core import (
    ConvergenceError,
    DomainError,
    closed_form,
    digamma,
    dirichlet_beta,
    dirichlet_beta_prime_half,
    eta,
    eta_prime,
    gamma,
    gr_4_325_2_series,
    gr_4_325_7_sine_series,
    gr_4_325_10_series,
    integrand,
    integrate_01,
    integrate_halfline,
    kummer_log_gamma,
    list_identities,
    log_gamma,
    sawtooth_series,
    sum_alternating,
    sum_phase,
    verify,
    verify_all,
    zeta,
    zeta_laurent,
    zeta_prime,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "closed_form",
    "digamma",
    "dirichlet_beta",
    "dirichlet_beta_prime_half",
    "eta",
    "eta_prime",
    "gamma",
    "gr_4_325_2_series",
    "gr_4_325_7_sine_series",
    "gr_4_325_10_series",
    "integrand",
    "integrate_01",
    "integrate_halfline",
    "kummer_log_gamma",
    "list_identities",
    "log_gamma",
    "sawtooth_series",
    "sum_alternating",
    "sum_phase",
    "verify",
    "verify_all",
    "zeta",
    "zeta_laurent",
    "zeta_prime",
]

__version__ = "0.1.0"
