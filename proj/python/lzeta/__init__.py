"""Odd zeta values, odd powers of pi and log 2, 3, 5 from fast Lambert series."""

import json

from ._lzeta import (
    ConvergenceError,
    bernoulli,
    check_multisection,
    convergence_profile,
    log_prime,
    oracle,
    pi_power,
    run_cli,
    zeta3_first_order,
    zeta_methods,
    zeta_odd,
)
from . import _lzeta


def coeffs_zeta(s, method="auto", rewrite_positive_q=False):
    """Coefficient table of zeta(s) as a dict (exact coefficients as strings)."""
    return json.loads(_lzeta.coeffs_zeta(s, method, rewrite_positive_q))


def coeffs_pi(power, method):
    return json.loads(_lzeta.coeffs_pi(power, method))


def coeffs_log(p):
    return json.loads(_lzeta.coeffs_log(p))


__all__ = [
    "ConvergenceError",
    "bernoulli",
    "check_multisection",
    "coeffs_log",
    "coeffs_pi",
    "coeffs_zeta",
    "convergence_profile",
    "log_prime",
    "oracle",
    "pi_power",
    "run_cli",
    "zeta3_first_order",
    "zeta_methods",
    "zeta_odd",
]
