"""Holomorphic linking of degree-zero divisors on the sphere and on
elliptic curves.

The pairing of two disjoint degree-zero divisors Z, W on a compact curve
is the integral over Z of a Green primitive for W; on curves it collapses
to finite sums of logarithms:

* sphere:   <Z, W> = (1/pi) * sum_{(P,a) in Z} sum_{(Q,b) in W} a*b*log|P - Q|,
  with terms containing the point at infinity dropped (the cross-ratio
  limit convention); for two-point divisors this is
  (1/pi) * log|cross ratio|.

* elliptic: <Z, W> = sum sum a*b*g_tau(P - Q), where

      g_tau(u) = (1/pi) * (log|theta1(u, tau)| - pi * (Im u)^2 / Im tau)

  is the translation-invariant Green kernel of C/(Z + Z*tau).  The kernel
  normalization makes (i/pi)*d d-bar g = (delta_0 - area form / Im tau),
  and any additive constant cancels in degree-zero double sums, so the
  constant is fixed to zero.

Both evaluators accumulate the pairwise terms in an order that is
symmetric in (Z, W), so linking(z, w) == linking(w, z) holds bit for bit.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import (
    BranchError,
    CapabilityError,
    CurveMismatchError,
    DisjointnessError,
    DomainError,
    HomologyError,
    PoleError,
)
from .special_functions import (
    TauParameter,
    as_tau,
    half_period_values,
    lattice_coords,
    reduce_mod_lattice,
    theta,
    torus_distance,
)

#: Tolerance below which two support points count as colliding.
DISJOINTNESS_TOL = 1e-9

#: Snap radius used when reducing elliptic points into the fundamental cell.
SNAP_TOL = 1e-12


class _InfinityType:
    """Marker for the point at infinity on the sphere."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _InfinityType()

Point = complex | _InfinityType


@dataclass(frozen=True)
class Curve:
    """Either the Riemann sphere or the elliptic curve C/(Z + Z*tau)."""

    kind: str
    tau: TauParameter | None = None

    @classmethod
    def sphere(cls) -> "Curve":
        return cls("sphere", None)

    @classmethod
    def elliptic(cls, tau: TauParameter | complex) -> "Curve":
        return cls("elliptic", as_tau(tau))

    def __post_init__(self) -> None:
        if self.kind not in ("sphere", "elliptic"):
            raise ValueError(f"unknown curve kind {self.kind!r}")
        if self.kind == "elliptic" and self.tau is None:
            raise ValueError("elliptic curve needs a tau parameter")
        if self.kind == "sphere" and self.tau is not None:
            raise ValueError("the sphere carries no tau parameter")

    def __repr__(self) -> str:
        if self.kind == "sphere":
            return "Curve.sphere()"
        return f"Curve.elliptic({self.tau.value!r})"


SPHERE = Curve.sphere()


def _point_key(p: Point) -> tuple:
    if isinstance(p, _InfinityType):
        return (1, 0.0, 0.0)
    return (0, p.real, p.imag)


class Divisor:
    """Formal integer combination of points on a fixed curve.

    Terms are canonicalized on construction: elliptic points are reduced
    into the fundamental cell (with half-period snapping), duplicate points
    are merged, zero multiplicities are dropped, and the term list is
    sorted.  Instances are immutable.
    """

    __slots__ = ("curve", "terms")

    def __init__(self, curve: Curve, terms: Iterable[tuple[Point, int]]):
        object.__setattr__(self, "curve", curve)
        canon: list[tuple[Point, int]] = []
        for point, mult in terms:
            if not isinstance(mult, int) or isinstance(mult, bool):
                raise ValueError(f"multiplicity must be an int, got {mult!r}")
            if isinstance(point, _InfinityType):
                if curve.kind != "sphere":
                    raise DomainError("infinity marker is only meaningful on the sphere")
            else:
                point = complex(point)
                if not (math.isfinite(point.real) and math.isfinite(point.imag)):
                    raise DomainError(f"divisor point must be finite, got {point!r}")
                if curve.kind == "elliptic":
                    point = reduce_mod_lattice(point, curve.tau, snap=SNAP_TOL)
            # merge with an existing representative, if any
            for i, (p0, m0) in enumerate(canon):
                if self._same_point(curve, p0, point):
                    canon[i] = (p0, m0 + mult)
                    break
            else:
                canon.append((point, mult))
        canon = [(p, m) for (p, m) in canon if m != 0]
        canon.sort(key=lambda t: _point_key(t[0]))
        object.__setattr__(self, "terms", tuple(canon))

    @staticmethod
    def _same_point(curve: Curve, p: Point, q: Point) -> bool:
        p_inf = isinstance(p, _InfinityType)
        q_inf = isinstance(q, _InfinityType)
        if p_inf or q_inf:
            return p_inf and q_inf
        if curve.kind == "elliptic":
            return torus_distance(p, q, curve.tau) < SNAP_TOL
        return abs(p - q) < SNAP_TOL

    def __setattr__(self, name, value):
        raise AttributeError("Divisor is immutable")

    @classmethod
    def sphere(cls, terms: Iterable[tuple[Point, int]]) -> "Divisor":
        return cls(SPHERE, terms)

    @classmethod
    def elliptic(cls, tau: TauParameter | complex,
                 terms: Iterable[tuple[Point, int]]) -> "Divisor":
        return cls(Curve.elliptic(tau), terms)

    def degree(self) -> int:
        return sum(m for _, m in self.terms)

    def support(self) -> tuple[Point, ...]:
        return tuple(p for p, _ in self.terms)

    def __neg__(self) -> "Divisor":
        return Divisor(self.curve, [(p, -m) for p, m in self.terms])

    def __add__(self, other: "Divisor") -> "Divisor":
        if not isinstance(other, Divisor):
            return NotImplemented
        if self.curve != other.curve:
            raise CurveMismatchError(
                f"cannot add divisors on {self.curve!r} and {other.curve!r}"
            )
        return Divisor(self.curve, list(self.terms) + list(other.terms))

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __rmul__(self, k: int) -> "Divisor":
        if not isinstance(k, int):
            return NotImplemented
        return Divisor(self.curve, [(p, k * m) for p, m in self.terms])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Divisor) and self.curve == other.curve
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.curve, tuple((_point_key(p), m) for p, m in self.terms)))

    def __repr__(self) -> str:
        return f"Divisor({self.curve!r}, {list(self.terms)!r})"


def degree(d: Divisor) -> int:
    """Total multiplicity of a divisor (its class in H^2, i.e. the degree)."""
    return d.degree()


class LinkingMethod(enum.Enum):
    CROSS_RATIO = "cross-ratio"
    ARAKELOV_GREEN = "arakelov-green"
    HALF_PERIOD_CLOSED_FORM = "half-period-closed-form"


@dataclass(frozen=True)
class LinkingResult:
    """Linking value plus provenance.

    ``value`` always comes from the generic evaluator for the curve
    (cross-ratio log sum on the sphere, Green-kernel double sum on an
    elliptic curve).  ``method`` records which routes ran:
    HALF_PERIOD_CLOSED_FORM means the divisors matched the half-period
    configuration, the p-function closed form was evaluated as well, and
    ``residual`` holds the disagreement between the two routes.  Otherwise
    ``residual`` is 0.0.
    """

    value: float
    method: LinkingMethod
    residual: float


def _check_pair(z: Divisor, w: Divisor, kind: str) -> None:
    if z.curve.kind != kind or w.curve.kind != kind:
        raise CurveMismatchError(
            f"expected two divisors on a {kind} curve, got "
            f"{z.curve!r} and {w.curve!r}"
        )
    if kind == "elliptic" and z.curve.tau.value != w.curve.tau.value:
        raise CurveMismatchError(
            f"divisors live on different elliptic curves: tau = "
            f"{z.curve.tau.value!r} vs {w.curve.tau.value!r}"
        )
    if z.degree() != 0:
        raise HomologyError(f"first divisor has degree {z.degree()}, expected 0")
    if w.degree() != 0:
        raise HomologyError(f"second divisor has degree {w.degree()}, expected 0")
    for p, _ in z.terms:
        for q, _ in w.terms:
            p_inf = isinstance(p, _InfinityType)
            q_inf = isinstance(q, _InfinityType)
            if p_inf or q_inf:
                if p_inf and q_inf:
                    raise DisjointnessError("both divisors contain infinity")
                continue
            if kind == "elliptic":
                dist = torus_distance(p, q, z.curve.tau)
            else:
                dist = abs(p - q)
            if dist < DISJOINTNESS_TOL:
                raise DisjointnessError(
                    f"supports collide near {p!r} (distance {dist:.3e})"
                )


def linking_sphere(z: Divisor, w: Divisor) -> LinkingResult:
    """<Z, W> on the sphere: (1/pi) sum a*b*log|P - Q|.

    Any pair containing the infinity marker contributes nothing (the factor
    containing infinity drops out of the cross-ratio limit).  Pairwise terms
    are evaluated on the sorted unordered pair and accumulated in sorted
    order, making the swap symmetry exact.
    """
    _check_pair(z, w, "sphere")
    contributions = []
    for p, a in z.terms:
        for q, b in w.terms:
            if isinstance(p, _InfinityType) or isinstance(q, _InfinityType):
                continue
            u, v = sorted((p, q), key=_point_key)
            contributions.append(((_point_key(u), _point_key(v)),
                                  a * b * math.log(abs(u - v))))
    contributions.sort(key=lambda c: c[0])
    total = 0.0
    for _, val in contributions:
        total += val
    return LinkingResult(total / math.pi, LinkingMethod.CROSS_RATIO, 0.0)


def arakelov_green(u: complex, tau: TauParameter | complex) -> float:
    """Green kernel g_tau(u) of the flat torus C/(Z + Z*tau).

    g_tau(u) = (1/pi) * (log|theta1(u, tau)| - pi*(Im u)^2 / Im tau), with
    additive constant zero.  The argument is reduced into the fundamental
    cell first, so periodicity is exact; theta1's quasi-periodicity makes
    the unreduced formula periodic as well, up to roundoff.  Lattice points
    are poles (log -infinity) and raise PoleError.
    """
    t = as_tau(tau)
    ur = reduce_mod_lattice(u, t)
    if torus_distance(ur, 0.0, t) < 1e-12:
        raise PoleError(f"green kernel has a logarithmic pole at {u!r}")
    th1 = theta(1, ur, t)
    return math.log(abs(th1)) / math.pi - ur.imag ** 2 / t.value.imag


# Fundamental-cell coordinates of the half-period configuration:
# [0] - [1/2]  paired with  [tau/2] - [(1+tau)/2].
_HALF_CONFIG_A = (((0.0, 0.0), 1), ((0.5, 0.0), -1))
_HALF_CONFIG_B = (((0.0, 0.5), 1), ((0.5, 0.5), -1))


def _match_half_config(d: Divisor, target) -> int:
    """+1/-1 if d equals the target configuration up to overall sign, else 0."""
    if len(d.terms) != 2:
        return 0
    for sign in (1, -1):
        ok = True
        for (p, m) in d.terms:
            x, y = lattice_coords(p, d.curve.tau)
            for (tx, ty), tm in target:
                if abs(x - tx) < SNAP_TOL and abs(y - ty) < SNAP_TOL:
                    if m != sign * tm:
                        ok = False
                    break
            else:
                ok = False
            if not ok:
                break
        if ok:
            return sign
    return 0


def linking_elliptic(z: Divisor, w: Divisor, *,
                     green: Callable[[complex, TauParameter], float] | None = None,
                     ) -> LinkingResult:
    """<Z, W> on C/(Z + Z*tau) via the Green-kernel double sum.

    value = sum_{(P,a)} sum_{(Q,b)} a * b * g_tau(P - Q).  When the two
    divisors form the half-period configuration [0] - [1/2] against
    [tau/2] - [(1+tau)/2] (in either order, up to overall sign), the
    p-function closed form

        (1/2pi) * log( |p((1+tau)/2) - p(1/2)| / |p(tau/2) - p(1/2)| )

    is evaluated as well and the cross-route disagreement is reported in
    ``residual``.

    ``green`` substitutes the kernel (used by the flexibility tests); the
    default is ``arakelov_green``.  Kernels must be even on the torus, since
    each difference P - Q is evaluated with a canonical orientation so that
    swap symmetry holds bit for bit.
    """
    _check_pair(z, w, "elliptic")
    tau = z.curve.tau
    kernel = arakelov_green if green is None else green

    contributions = []
    for p, a in z.terms:
        for q, b in w.terms:
            u, v = sorted((p, q), key=_point_key)
            contributions.append(((_point_key(u), _point_key(v)),
                                  a * b * kernel(u - v, tau)))
    contributions.sort(key=lambda c: c[0])
    total = 0.0
    for _, val in contributions:
        total += val

    sign = 0
    s_za = _match_half_config(z, _HALF_CONFIG_A)
    s_wb = _match_half_config(w, _HALF_CONFIG_B)
    if s_za and s_wb:
        sign = s_za * s_wb
    else:
        s_zb = _match_half_config(z, _HALF_CONFIG_B)
        s_wa = _match_half_config(w, _HALF_CONFIG_A)
        if s_zb and s_wa:
            sign = s_zb * s_wa

    if sign and green is None:
        hp = half_period_values(tau)
        closed = sign * math.log(abs(hp.e3 - hp.e1) / abs(hp.e2 - hp.e1)) / (2 * math.pi)
        return LinkingResult(total, LinkingMethod.HALF_PERIOD_CLOSED_FORM,
                             abs(total - closed))
    return LinkingResult(total, LinkingMethod.ARAKELOV_GREEN, 0.0)


def linking(z: Divisor, w: Divisor) -> LinkingResult:
    """Dispatch to the sphere or elliptic evaluator by the divisors' curve."""
    if z.curve != w.curve:
        raise CurveMismatchError(f"divisors on different curves: {z.curve!r} vs {w.curve!r}")
    if z.curve.kind == "sphere":
        return linking_sphere(z, w)
    return linking_elliptic(z, w)


@dataclass(frozen=True)
class RationalMapSpec:
    """A map from the supported catalog.

    kind = "identity" (either curve), "power" with exponent n in {2, 3}
    (sphere to sphere, z -> z^n), or "translation" by a fixed offset
    (elliptic curve to itself).  Anything else raises CapabilityError when
    applied.
    """

    kind: str
    exponent: int | None = None
    offset: complex | None = None

    @classmethod
    def identity(cls) -> "RationalMapSpec":
        return cls("identity")

    @classmethod
    def power(cls, n: int) -> "RationalMapSpec":
        return cls("power", exponent=n)

    @classmethod
    def translation(cls, offset: complex) -> "RationalMapSpec":
        return cls("translation", offset=complex(offset))

    def _validate_for(self, curve: Curve) -> None:
        if self.kind == "identity":
            return
        if self.kind == "power":
            if self.exponent not in (2, 3):
                raise CapabilityError(
                    f"power maps are supported for exponents 2 and 3 only, "
                    f"got {self.exponent!r}"
                )
            if curve.kind != "sphere":
                raise CapabilityError("power maps are defined on the sphere only")
            return
        if self.kind == "translation":
            if curve.kind != "elliptic":
                raise CapabilityError("translations are defined on elliptic curves only")
            if self.offset is None:
                raise CapabilityError("translation map needs an offset")
            return
        raise CapabilityError(f"map kind {self.kind!r} is outside the catalog")


def pushforward(d: Divisor, spec: RationalMapSpec) -> Divisor:
    """Image divisor: each point P with multiplicity a maps to (f(P), a)."""
    spec._validate_for(d.curve)
    if spec.kind == "identity":
        return d
    if spec.kind == "power":
        n = spec.exponent
        terms = []
        for p, m in d.terms:
            if isinstance(p, _InfinityType):
                terms.append((INFINITY, m))
            else:
                terms.append((p ** n, m))
        return Divisor(d.curve, terms)
    # translation
    return Divisor(d.curve, [(p + spec.offset, m) for p, m in d.terms])


def pullback(d: Divisor, spec: RationalMapSpec) -> Divisor:
    """Preimage divisor: each point Q with multiplicity b yields every
    preimage with multiplicity b.

    Power maps branch exactly over 0 and infinity; a divisor meeting either
    critical value (within the disjointness tolerance) raises BranchError.
    """
    spec._validate_for(d.curve)
    if spec.kind == "identity":
        return d
    if spec.kind == "power":
        n = spec.exponent
        terms = []
        for q, b in d.terms:
            if isinstance(q, _InfinityType):
                raise BranchError("infinity is a critical value of z -> z^n")
            if abs(q) < DISJOINTNESS_TOL:
                raise BranchError("0 is a critical value of z -> z^n")
            r = abs(q) ** (1.0 / n)
            phase = cmath.phase(q)
            for k in range(n):
                root = cmath.rect(r, (phase + 2 * math.pi * k) / n)
                terms.append((root, b))
        return Divisor(d.curve, terms)
    # translation
    return Divisor(d.curve, [(q - spec.offset, b) for q, b in d.terms])


@dataclass(frozen=True)
class AdjunctionCheck:
    """Both sides of <Z, f^* W> = <f_* Z, W> and their disagreement."""

    lhs: float
    rhs: float
    residual: float


def check_adjunction(spec: RationalMapSpec, z: Divisor, w: Divisor) -> AdjunctionCheck:
    """Evaluate <z, pullback(w)> and <pushforward(z), w> and compare.

    z lives on the source curve, w on the target (the catalog maps are all
    endomorphisms, so both divisors carry the same curve).  Support
    collisions, including images of z hitting w, surface as
    DisjointnessError from the pairing evaluators.
    """
    if z.curve != w.curve:
        raise CurveMismatchError(
            f"adjunction needs both divisors on the map's curve, got "
            f"{z.curve!r} and {w.curve!r}"
        )
    lhs = linking(z, pullback(w, spec)).value
    rhs = linking(pushforward(z, spec), w).value
    return AdjunctionCheck(lhs, rhs, abs(lhs - rhs))
