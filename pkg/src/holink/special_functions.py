"""Jacobi theta series, Weierstrass half-period data and the modular lambda
function, in double precision.

Conventions, pinned here and relied on by every consumer in the package:

* the nome is q = exp(i*pi*tau), and theta arguments use the unit-period
  normalization, so that

      theta1(z + 1, tau) = -theta1(z, tau),
      theta1(z + tau, tau) = -exp(-i*pi*tau - 2*pi*i*z) * theta1(z, tau);

* lambda(tau) = theta2(0, tau)^4 / theta3(0, tau)^4, and ``modular_lambda``
  checks on every call that this equals the half-period quotient
  (e3 - e2) / (e1 - e2), so the convention is enforced rather than assumed;

* half-period values are e1 = p(1/2), e2 = p(tau/2), e3 = p((1+tau)/2)
  for the Weierstrass p-function of the lattice Z + Z*tau.  In terms of
  the zero-argument theta constants these are

      e1 =  (pi^2/3) * (theta3^4 + theta4^4)
      e2 = -(pi^2/3) * (theta2^4 + theta3^4)
      e3 =  (pi^2/3) * (theta2^4 - theta4^4)

  which sum to zero identically and reproduce p(1/2; Z+Zi) = 6.87518...
  (the lemniscatic value) at tau = i.

All series are truncated adaptively: summation stops once an upper bound
for the next term drops below EPS_SERIES * (1 + |partial sum|), and a
ConvergenceError is raised if MAX_TERMS terms do not get there.  No
fundamental-domain reduction of tau is performed; instead construction of
``TauParameter`` requires Im tau >= MIN_IM_TAU (= 0.05).  Precision of the
q-series degrades as Im tau approaches that floor (|q| -> 0.855), which is
why the floor exists.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, DomainError, InternalError, PoleError

MIN_IM_TAU = 0.05
EPS_SERIES = 1e-18
MAX_TERMS = 10_000

# Largest exponent handed to exp() before we give up; doubles overflow at ~709.
_EXP_CAP = 700.0

_PI = math.pi
_PI2_3 = math.pi ** 2 / 3.0


@dataclass(frozen=True)
class TauParameter:
    """Modulus of the curve C / (Z + Z*tau).

    Requires Im tau >= MIN_IM_TAU.  There is deliberately no reduction to a
    fundamental domain: callers get the lattice they asked for, and the
    translation identities (lambda(tau + 1), lambda(tau + 2)) stay testable.
    """

    value: complex

    def __post_init__(self) -> None:
        v = complex(self.value)
        object.__setattr__(self, "value", v)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise DomainError(f"tau must be finite, got {v!r}")
        if v.imag <= 0.0:
            raise DomainError(f"tau {v!r} not in upper half-plane")
        if v.imag < MIN_IM_TAU:
            raise DomainError(
                f"Im tau = {v.imag:g} is below the supported floor {MIN_IM_TAU:g}; "
                "the q-series loses double-precision accuracy near the real axis"
            )
        # Implied by the floor; kept as a recorded guarantee for the nome.
        if abs(cmath.exp(1j * _PI * v)) >= 1.0 - 1e-12:
            raise InternalError("nome magnitude check failed for valid tau")

    @property
    def nome(self) -> complex:
        """q = exp(i*pi*tau), with |q| < 1."""
        return cmath.exp(1j * _PI * self.value)


def as_tau(tau: TauParameter | complex) -> TauParameter:
    """Coerce a bare complex number to a validated TauParameter."""
    if isinstance(tau, TauParameter):
        return tau
    return TauParameter(complex(tau))


def theta(kind: int, z: complex, tau: TauParameter | complex, *,
          eps: float = EPS_SERIES, max_terms: int = MAX_TERMS) -> complex:
    """Jacobi theta function theta_kind(z, tau), kind in {1, 2, 3, 4}.

    Unit-period convention (q = exp(i*pi*tau)):

        theta1(z) = -i * sum_n (-1)^n q^((n+1/2)^2) e^(i*pi*(2n+1)*z)
        theta2(z) =      sum_n        q^((n+1/2)^2) e^(i*pi*(2n+1)*z)
        theta3(z) =      sum_n        q^(n^2)       e^(2*pi*i*n*z)
        theta4(z) =      sum_n (-1)^n q^(n^2)       e^(2*pi*i*n*z)

    with n over Z; terms are grouped as n and -(n+1) (kinds 1, 2) or +-n
    (kinds 3, 4), so oddness of theta1 holds exactly in floating point.
    Truncation stops once an upper bound for the next grouped term falls
    below eps * (1 + |partial sum|); exceeding max_terms raises
    ConvergenceError, as does a term too large for double precision.
    """
    if kind not in (1, 2, 3, 4):
        raise ValueError(f"theta kind must be 1..4, got {kind!r}")
    t = as_tau(tau).value
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"theta argument must be finite, got {z!r}")

    im_tau = t.imag
    abs_im_z = abs(z.imag)

    if kind in (1, 2):
        total = 0.0 + 0.0j
        for n in range(max_terms):
            a = n + 0.5
            k = 2 * n + 1
            # |term| <= exp(-pi*Im(tau)*a^2 + pi*k*|Im z|) for each exponential.
            log_mag = -_PI * im_tau * a * a + _PI * k * abs_im_z
            if log_mag > _EXP_CAP:
                raise ConvergenceError(
                    f"theta{kind} term at n={n} exceeds double range "
                    f"(z={z!r}, tau={t!r}); reduce z modulo the lattice first"
                )
            bound = 2.0 * math.exp(log_mag)
            if bound < eps * (1.0 + abs(total)):
                return total
            e_plus = cmath.exp(1j * _PI * (t * a * a + k * z))
            e_minus = cmath.exp(1j * _PI * (t * a * a - k * z))
            if kind == 1:
                term = (-1) ** n * (-1j) * (e_plus - e_minus)
            else:
                term = (e_plus + e_minus)
            total += term
        raise ConvergenceError(f"theta{kind} did not converge in {max_terms} terms")

    total = 1.0 + 0.0j
    for n in range(1, max_terms):
        log_mag = -_PI * im_tau * n * n + 2.0 * _PI * n * abs_im_z
        if log_mag > _EXP_CAP:
            raise ConvergenceError(
                f"theta{kind} term at n={n} exceeds double range "
                f"(z={z!r}, tau={t!r}); reduce z modulo the lattice first"
            )
        bound = 2.0 * math.exp(log_mag)
        if bound < eps * (1.0 + abs(total)):
            return total
        e_plus = cmath.exp(1j * _PI * (t * n * n + 2 * n * z))
        e_minus = cmath.exp(1j * _PI * (t * n * n - 2 * n * z))
        term = e_plus + e_minus
        if kind == 4 and n % 2 == 1:
            term = -term
        total += term
    raise ConvergenceError(f"theta{kind} did not converge in {max_terms} terms")


@lru_cache(maxsize=512)
def _theta_constants(tau_value: complex) -> tuple[complex, complex, complex]:
    """(theta2, theta3, theta4) at z = 0.  Cached; pure function of tau."""
    t = TauParameter(tau_value)
    return theta(2, 0.0, t), theta(3, 0.0, t), theta(4, 0.0, t)


@dataclass(frozen=True)
class HalfPeriodValues:
    """Weierstrass p at the three half-periods of Z + Z*tau.

    e1 = p(1/2), e2 = p(tau/2), e3 = p((1+tau)/2); e1 + e2 + e3 = 0.
    """

    e1: complex
    e2: complex
    e3: complex

    def as_tuple(self) -> tuple[complex, complex, complex]:
        return (self.e1, self.e2, self.e3)


def half_period_values(tau: TauParameter | complex) -> HalfPeriodValues:
    """Half-period values via zero-argument theta constants.

    Derivation sketch: p(z) - p(omega_j) is a perfect square of a theta
    quotient with a double zero at omega_j, which yields the pairwise
    differences e1 - e2 = pi^2 theta3^4, e1 - e3 = pi^2 theta4^4,
    e3 - e2 = pi^2 theta2^4; combining with e1 + e2 + e3 = 0 gives the
    closed forms below.  Independently cross-checked against the direct
    lattice sum (``lattice_sum_p``) in the test suite.
    """
    t = as_tau(tau)
    c2, c3, c4 = _theta_constants(t.value)
    t2, t3, t4 = c2 ** 4, c3 ** 4, c4 ** 4
    e1 = _PI2_3 * (t3 + t4)
    e2 = -_PI2_3 * (t2 + t3)
    e3 = _PI2_3 * (t2 - t4)
    return HalfPeriodValues(e1, e2, e3)


def lattice_coords(z: complex, tau: TauParameter | complex) -> tuple[float, float]:
    """Real coordinates (x, y) of z in the basis (1, tau): z = x + y*tau."""
    t = as_tau(tau).value
    z = complex(z)
    y = z.imag / t.imag
    x = z.real - y * t.real
    return x, y


def _snap_unit(x: float, snap: float) -> float:
    """Reduce x mod 1 and snap to the nearest half-integer within ``snap``."""
    x = x - math.floor(x)
    half = round(2.0 * x) / 2.0
    if abs(x - half) < snap:
        x = half % 1.0
    if x >= 1.0:
        x -= 1.0
    return x


def reduce_mod_lattice(z: complex, tau: TauParameter | complex, *,
                       snap: float = 1e-12) -> complex:
    """Representative of z in the fundamental cell [0,1) x [0,1) of (1, tau).

    Coordinates within ``snap`` of a half-integer are snapped onto it, so
    points meant to be half-periods are recognized exactly downstream.
    """
    t = as_tau(tau).value
    x, y = lattice_coords(z, t)
    x = _snap_unit(x, snap)
    y = _snap_unit(y, snap)
    return complex(x + y * t.real, y * t.imag)


def torus_distance(u: complex, v: complex, tau: TauParameter | complex) -> float:
    """Euclidean distance between u and v modulo the lattice Z + Z*tau."""
    t = as_tau(tau).value
    d = reduce_mod_lattice(complex(u) - complex(v), t)
    best = abs(d)
    for m in (0, -1):
        for n in (0, -1):
            if m == 0 and n == 0:
                continue
            best = min(best, abs(d + m + n * t))
    return best


def lattice_sum_p(z: complex, tau: TauParameter | complex, radius: int) -> complex:
    """Weierstrass p(z) by direct lattice summation; the slow oracle.

    Sums 1/z^2 + sum' [1/(z-w)^2 - 1/w^2] over w = m + n*tau with
    |m|, |n| <= radius (symmetric square truncation), grouping w with -w so
    that evenness in z holds exactly in floating point and the conditionally
    convergent odd part cancels identically.  The remaining truncation error
    is O(|z|^2 / radius^2) (absolute bound O(1/radius)); radius 400 gives
    roughly 1e-6 * |z|^2 near the square lattice.  Summation order is fixed
    (n = 0 row first, then rows n = 1..radius), so results are reproducible
    bit for bit.
    """
    t = as_tau(tau).value
    z = complex(z)
    if not isinstance(radius, int):
        raise ValueError(f"radius must be an int, got {radius!r}")
    if radius < 10:
        raise ValueError(f"radius must be >= 10, got {radius}")
    if torus_distance(z, 0.0, t) < 1e-12:
        raise PoleError(f"z = {z!r} lies on the lattice of tau = {t!r}")

    # Half-lattice enumeration: (m, 0) for m = 1..R, then (m, n) for n >= 1.
    m0 = np.arange(1, radius + 1, dtype=np.float64)
    w0 = m0.astype(np.complex128)
    mg, ng = np.meshgrid(np.arange(-radius, radius + 1, dtype=np.float64),
                         np.arange(1, radius + 1, dtype=np.float64))
    w1 = (mg + ng * t).ravel()
    w = np.concatenate([w0, w1])

    terms = 1.0 / (z - w) ** 2 + 1.0 / (z + w) ** 2 - 2.0 / w ** 2
    return complex(1.0 / z ** 2 + np.sum(terms))


def weierstrass_p(z: complex, tau: TauParameter | complex) -> complex:
    """Weierstrass p(z) for the lattice Z + Z*tau, via theta functions.

    Uses p(z) = e1 + (pi * theta3(0) * theta4(0) * theta2(z) / theta1(z))^2
    after reducing z into the fundamental cell.  Raises PoleError on the
    lattice itself.
    """
    t = as_tau(tau)
    zr = reduce_mod_lattice(z, t)
    if torus_distance(zr, 0.0, t) < 1e-12:
        raise PoleError(f"p(z) has a pole at lattice point z = {z!r}")
    c2, c3, c4 = _theta_constants(t.value)
    e1 = _PI2_3 * (c3 ** 4 + c4 ** 4)
    quot = theta(2, zr, t) / theta(1, zr, t)
    return e1 + (_PI * c3 * c4 * quot) ** 2


_LAMBDA_PIN_TOL = 1e-9


def modular_lambda(tau: TauParameter | complex) -> complex:
    """Modular lambda(tau) = theta2(0)^4 / theta3(0)^4.

    The labeling convention is self-verified on every call: the value must
    match the half-period quotient (e3 - e2) / (e1 - e2) to 1e-9, which in
    particular exercises the quartic theta identity
    theta3^4 = theta2^4 + theta4^4 numerically.  A failure raises
    InternalError because no valid input can produce it.
    """
    t = as_tau(tau)
    c2, c3, c4 = _theta_constants(t.value)
    t2, t3, t4 = c2 ** 4, c3 ** 4, c4 ** 4
    lam = t2 / t3
    e1 = _PI2_3 * (t3 + t4)
    e2 = -_PI2_3 * (t2 + t3)
    e3 = _PI2_3 * (t2 - t4)
    pin = (e3 - e2) / (e1 - e2)
    if abs(lam - pin) > _LAMBDA_PIN_TOL:
        raise InternalError(
            f"lambda convention pin violated at tau = {t.value!r}: "
            f"theta quotient {lam!r} vs half-period quotient {pin!r}"
        )
    return lam


def lambda_complement_ratio(tau: TauParameter | complex) -> complex:
    """The half-period quotient (e3 - e1) / (e2 - e1).

    Contract: equals 1 - lambda(tau); the equality is asserted by the test
    suite rather than here, so the two routes stay independent.
    """
    hp = half_period_values(tau)
    denom = hp.e2 - hp.e1
    if denom == 0:
        raise InternalError("e1 = e2 cannot occur for tau in the upper half-plane")
    return (hp.e3 - hp.e1) / denom


@dataclass(frozen=True)
class LambdaInversionReport:
    """How the two candidate inversions of tau relate to 1 - lambda(tau).

    ``neg_inverse_*`` describes lambda(-1/tau), which stays in the upper
    half-plane and satisfies lambda(-1/tau) = 1 - lambda(tau).  ``inverse_*``
    describes lambda(1/tau); for Im tau > 0 the point 1/tau always lies in
    the lower half-plane where the q-series diverges, so that comparison is
    reported as unavailable.  This pins down which reading of "the inverse
    modulus" the complement identity actually supports.
    """

    tau: complex
    lam: complex
    complement: complex
    neg_inverse_lambda: complex | None
    neg_inverse_residual: float | None
    neg_inverse_note: str
    inverse_lambda: complex | None
    inverse_residual: float | None
    inverse_note: str


def lambda_inversion_report(tau: TauParameter | complex) -> LambdaInversionReport:
    """Evaluate lambda at -1/tau and 1/tau and compare both with 1 - lambda(tau)."""
    t = as_tau(tau)
    lam = modular_lambda(t)
    comp = 1.0 - lam

    neg_lam = neg_res = None
    try:
        neg_lam = modular_lambda(TauParameter(-1.0 / t.value))
        neg_res = abs(neg_lam - comp)
        neg_note = "lambda(-1/tau) evaluated in the upper half-plane"
    except DomainError as exc:
        neg_note = f"unavailable: {exc}"

    inv_lam = inv_res = None
    try:
        inv_lam = modular_lambda(TauParameter(1.0 / t.value))
        inv_res = abs(inv_lam - comp)
        inv_note = "lambda(1/tau) evaluated"
    except DomainError:
        inv_note = ("unavailable: 1/tau lies in the lower half-plane for "
                    "Im tau > 0, where the q-series diverges")

    return LambdaInversionReport(
        tau=t.value, lam=lam, complement=comp,
        neg_inverse_lambda=neg_lam, neg_inverse_residual=neg_res,
        neg_inverse_note=neg_note,
        inverse_lambda=inv_lam, inverse_residual=inv_res,
        inverse_note=inv_note,
    )
