"""The triple-product obstruction on the resolved torus quotient.

For the family of threefolds X_tau (the crepant resolution of the
two-involution quotient of a product of elliptic curves, fibered over
C/(Z + Z*tau)), the distinguished triple product of combinations of four exceptional
divisor classes, integrated against one of them, reduces to a holomorphic
linking number on the base curve:

    value(tau) = 8 * < [0] - [1/2], [tau/2] - [(1+tau)/2] >_{C_tau}
               = (4/pi) * log|1 - lambda(tau)|.

The two routes share only the theta primitives and are computed
independently here; their agreement is one of the package's acceptance
checks.  The value vanishes exactly on the locus |1 - lambda(tau)| = 1
(which contains the whole vertical line Re tau = 1/2), and is nonzero for
generic tau, so the obstruction it measures does not vanish identically in
the family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DivergenceError, DomainError
from .linking import Divisor, linking_elliptic
from .special_functions import TauParameter, as_tau, modular_lambda

#: Default threshold deciding the ``nonvanishing`` flag of a report.
DEFAULT_NONVANISHING_TOL = 1e-6


def _closed_form_from_lambda(lam: complex) -> float:
    modulus = abs(1.0 - lam)
    if modulus == 0.0:
        raise DivergenceError(
            "lambda(tau) = 1: the product value diverges to -infinity"
        )
    return (4.0 / math.pi) * math.log(modulus)


def massey_value_closed_form(tau: TauParameter | complex) -> float:
    """value(tau) = (4/pi) * log|1 - lambda(tau)|."""
    return _closed_form_from_lambda(modular_lambda(as_tau(tau)))


def massey_value_via_linking(tau: TauParameter | complex) -> float:
    """Same value through the linking pairing on the base curve.

    The reduction chain contributes the prefactor 8 = 2^4 / 2: pulling the
    four exceptional classes back along the degree-two covering torus
    doubles each class (2^4), while integrating upstairs costs the covering
    factor 1/2.  The remaining factor is the elliptic linking number of the
    half-period configuration, evaluated by the Green-kernel double sum.
    """
    t = as_tau(tau)
    tv = t.value
    z = Divisor.elliptic(t, [(0.0, 1), (0.5, -1)])
    w = Divisor.elliptic(t, [(tv / 2.0, 1), ((1.0 + tv) / 2.0, -1)])
    return 8.0 * linking_elliptic(z, w).value


@dataclass(frozen=True)
class MasseyReport:
    """Both evaluation routes at one tau, with the nonvanishing verdict.

    ``nonvanishing`` is |value_closed_form| > tolerance.  ``diverged``
    flags the degenerate case lambda(tau) = 1 (value -infinity), which is
    reported in-band rather than raised.
    """

    tau: complex
    value_closed_form: float
    value_via_linking: float
    residual: float
    nonvanishing: bool
    lambda_at_tau: complex
    diverged: bool = False


def massey_report(tau: TauParameter | complex,
                  tolerance: float = DEFAULT_NONVANISHING_TOL) -> MasseyReport:
    """Evaluate both routes and package the comparison."""
    if not (tolerance > 0.0):
        raise DomainError(f"tolerance must be positive, got {tolerance!r}")
    t = as_tau(tau)
    lam = modular_lambda(t)
    via_linking = massey_value_via_linking(t)
    try:
        closed = _closed_form_from_lambda(lam)
    except DivergenceError:
        return MasseyReport(
            tau=t.value, value_closed_form=-math.inf,
            value_via_linking=via_linking, residual=math.inf,
            nonvanishing=True, lambda_at_tau=lam, diverged=True,
        )
    return MasseyReport(
        tau=t.value, value_closed_form=closed, value_via_linking=via_linking,
        residual=abs(closed - via_linking),
        nonvanishing=abs(closed) > tolerance, lambda_at_tau=lam,
    )


def find_vanishing_crossing(im_tau: float = 1.0, re_lo: float = 0.25,
                            re_hi: float = 0.75, *, xtol: float = 1e-12,
                            max_iter: int = 200) -> complex:
    """Locate a zero of |1 - lambda(tau)| - 1 by bisection in Re tau.

    The vanishing locus of the product value contains the whole line
    Re tau = 1/2: there lambda(tau - 1) equals both conj(lambda(tau)) and
    lambda/(lambda - 1), which forces |lambda|^2 = 2 Re lambda and hence
    |1 - lambda| = 1.  A horizontal path therefore crosses the locus
    transversally (the two sides carry reciprocal values of |1 - lambda|),
    whereas a path *along* the line sees the function vanish identically
    and admits no sign change.  Bisection runs at fixed Im tau across the
    line and converges to Re tau = 1/2.
    """
    def f(re: float) -> float:
        return abs(1.0 - modular_lambda(TauParameter(complex(re, im_tau)))) - 1.0

    lo, hi = float(re_lo), float(re_hi)
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0.0:
        return complex(lo, im_tau)
    if f_hi == 0.0:
        return complex(hi, im_tau)
    if f_lo * f_hi > 0.0:
        raise DomainError(
            f"no sign change of |1 - lambda| - 1 on [{re_lo}, {re_hi}] "
            f"at Im tau = {im_tau}"
        )
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0.0 or (hi - lo) < xtol:
            return complex(mid, im_tau)
        if f_lo * f_mid < 0.0:
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
    return complex(0.5 * (lo + hi), im_tau)
