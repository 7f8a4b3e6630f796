"""Command-line front end.

Subcommands: ``lambda`` (modular lambda at a point), ``massey`` (both
evaluation routes plus the nonvanishing verdict), ``hodge`` (the exact
diamond and a JSON matrix), ``link`` (pairing of two divisors given as JSON
files), ``scan`` (CSV grid over tau), and ``verify`` (the seeded invariant
suites).

Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
3 mathematical domain error, 4 I/O error.  The environment variable
HOLINK_TOL supplies a default tolerance; an explicit --tol flag wins over
it.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from dataclasses import dataclass

from .errors import DivergenceError, DomainError, HolinkError
from .hodge import hodge_diamond_x
from .linking import Curve, Divisor, INFINITY, SPHERE, linking
from .massey import DEFAULT_NONVANISHING_TOL, massey_report, massey_value_closed_form
from .special_functions import modular_lambda
from .verify import format_summary, run_all

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_FULL_RE = re.compile(rf"^(?P<re>[+-]?{_NUM})(?P<imsign>[+-])(?P<im>{_NUM})?i$")
_IMAG_RE = re.compile(rf"^(?P<imsign>[+-]?)(?P<im>{_NUM})?i$")
_REAL_RE = re.compile(rf"^[+-]?{_NUM}$")


def parse_complex(text: str) -> complex:
    """Parse "a+bi", "a-bi", "bi", or "a"; whitespace is ignored.

    The shorthand "i", "+i", "-i" and "a+i"/"a-i" mean a unit imaginary
    part.  Raises ValueError on anything else.
    """
    s = "".join(str(text).split())
    m = _FULL_RE.match(s)
    if m:
        im = float(m.group("im")) if m.group("im") is not None else 1.0
        if m.group("imsign") == "-":
            im = -im
        return complex(float(m.group("re")), im)
    m = _IMAG_RE.match(s)
    if m:
        im = float(m.group("im")) if m.group("im") is not None else 1.0
        if m.group("imsign") == "-":
            im = -im
        return complex(0.0, im)
    if _REAL_RE.match(s):
        return complex(float(s), 0.0)
    raise ValueError(f"cannot parse {text!r} as a complex number "
                     f"(expected forms: a+bi, a-bi, bi, a)")


def format_complex(value: complex, digits: int = 15) -> str:
    """Render a complex as "a+bi" with the given significant digits."""
    value = complex(value)
    re_s = f"{value.real:.{digits}g}"
    sign = "+" if value.imag >= 0 else "-"
    im_s = f"{abs(value.imag):.{digits}g}"
    return f"{re_s}{sign}{im_s}i"


def divisor_from_json(obj) -> Divisor:
    """Build a Divisor from the JSON schema
    {"curve": "sphere" | {"elliptic": "a+bi"}, "terms": [[re, im, mult], ...]}
    where a term may also be ["inf", mult] for the point at infinity.
    """
    if not isinstance(obj, dict):
        raise ValueError("divisor JSON must be an object")
    extra = set(obj) - {"curve", "terms"}
    if extra:
        raise ValueError(f"unknown divisor keys: {sorted(extra)}")
    if "curve" not in obj or "terms" not in obj:
        raise ValueError('divisor JSON needs "curve" and "terms"')
    curve_spec = obj["curve"]
    if curve_spec == "sphere":
        curve = SPHERE
    elif isinstance(curve_spec, dict) and set(curve_spec) == {"elliptic"}:
        curve = Curve.elliptic(parse_complex(curve_spec["elliptic"]))
    else:
        raise ValueError('curve must be "sphere" or {"elliptic": "a+bi"}')
    if not isinstance(obj["terms"], list):
        raise ValueError("terms must be a list")
    terms = []
    for entry in obj["terms"]:
        if not isinstance(entry, list):
            raise ValueError(f"term must be a list, got {entry!r}")
        if len(entry) == 2 and entry[0] == "inf":
            point, mult = INFINITY, entry[1]
        elif len(entry) == 3 and all(isinstance(x, (int, float))
                                     and not isinstance(x, bool)
                                     for x in entry[:2]):
            point, mult = complex(entry[0], entry[1]), entry[2]
        else:
            raise ValueError(f"term must be [re, im, mult] or [\"inf\", mult], "
                             f"got {entry!r}")
        terms.append((point, mult))
    return Divisor(curve, terms)


def _load_divisor_file(path: str) -> Divisor:
    with open(path, "r", encoding="utf-8") as fh:
        return divisor_from_json(json.load(fh))


def _tolerance(args, default: float | None):
    """--tol flag, else HOLINK_TOL, else the given default."""
    if getattr(args, "tol", None) is not None:
        value = args.tol
    else:
        env = os.environ.get("HOLINK_TOL")
        if env is None:
            return default
        try:
            value = float(env)
        except ValueError:
            raise ValueError(f"HOLINK_TOL is not a number: {env!r}")
    if not (value > 0 and math.isfinite(value)):
        raise DomainError(f"tolerance must be a positive finite number, got {value!r}")
    return value


@dataclass(frozen=True)
class ScanGrid:
    """Inclusive rectangular tau grid; steps of 1 pin the axis to its minimum."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    steps_re: int
    steps_im: int

    def __post_init__(self) -> None:
        for steps, name in ((self.steps_re, "steps-re"), (self.steps_im, "steps-im")):
            if not isinstance(steps, int) or steps < 1:
                raise ValueError(f"{name} must be a positive integer, got {steps!r}")
        if not all(math.isfinite(v) for v in
                   (self.re_min, self.re_max, self.im_min, self.im_max)):
            raise ValueError("grid bounds must be finite")
        if self.re_min > self.re_max or (self.re_min == self.re_max
                                         and self.steps_re != 1):
            raise ValueError("need re-min < re-max (equality only with steps-re 1)")
        if self.im_min <= 0:
            raise ValueError("need im-min > 0")
        if self.im_min > self.im_max or (self.im_min == self.im_max
                                         and self.steps_im != 1):
            raise ValueError("need im-min < im-max (equality only with steps-im 1)")

    def axis(self, lo: float, hi: float, steps: int) -> list[float]:
        if steps == 1:
            return [lo]
        return [lo + k * (hi - lo) / (steps - 1) for k in range(steps)]

    def points(self):
        """Row-major iteration, re varying fastest."""
        for im in self.axis(self.im_min, self.im_max, self.steps_im):
            for re_ in self.axis(self.re_min, self.re_max, self.steps_re):
                yield re_, im


CSV_HEADER = "re_tau,im_tau,lambda_re,lambda_im,massey_value"


def cmd_lambda(args) -> int:
    tau = parse_complex(args.tau)
    print(format_complex(modular_lambda(tau)))
    return 0


def cmd_massey(args) -> int:
    tau = parse_complex(args.tau)
    tol = _tolerance(args, DEFAULT_NONVANISHING_TOL)
    report = massey_report(tau, tolerance=tol)
    print(f"tau                = {format_complex(report.tau)}")
    print(f"lambda(tau)        = {format_complex(report.lambda_at_tau)}")
    print(f"value_closed_form  = {report.value_closed_form:.15g}")
    print(f"value_via_linking  = {report.value_via_linking:.15g}")
    print(f"residual           = {report.residual:.3e}")
    print(f"nonvanishing       = {'true' if report.nonvanishing else 'false'}")
    print(f"tolerance          = {tol:g}")
    print(f"diverged           = {'true' if report.diverged else 'false'}")
    return 0


def cmd_hodge(args) -> int:
    dims = hodge_diamond_x()
    print(dims.diamond())
    betti = [dims.betti(k) for k in range(7)]
    print(f"betti numbers      : {betti}")
    print(f"euler characteristic: {dims.euler_characteristic()}")
    payload = {
        "hodge": dims.as_matrix(),
        "betti": betti,
        "euler_characteristic": dims.euler_characteristic(),
    }
    print(json.dumps(payload, sort_keys=True))
    return 0


def cmd_link(args) -> int:
    z = _load_divisor_file(args.z)
    w = _load_divisor_file(args.w)
    res = linking(z, w)
    print(f"value    = {res.value:.15g}")
    print(f"method   = {res.method.value}")
    print(f"residual = {res.residual:.3e}")
    return 0


def cmd_scan(args) -> int:
    try:
        grid = ScanGrid(args.re_min, args.re_max, args.im_min, args.im_max,
                        args.steps_re, args.steps_im)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rows = [CSV_HEADER]
    for re_, im in grid.points():
        tau = complex(re_, im)
        lam = modular_lambda(tau)
        try:
            value = massey_value_closed_form(tau)
        except DivergenceError:
            value = -math.inf
        rows.append(f"{re_:.12g},{im:.12g},{lam.real:.12g},{lam.imag:.12g},"
                    f"{value:.12g}")
    tmp_path = args.out + ".tmp"
    try:
        with open(tmp_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(rows) + "\n")
        os.replace(tmp_path, args.out)
    except OSError:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise
    return 0


def cmd_verify(args) -> int:
    tol = _tolerance(args, None)
    results = run_all(seed=args.seed, tol=tol)
    sys.stdout.write(format_summary(results, args.seed, tol))
    return 0 if all(r.passed for r in results) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holink",
        description="Holomorphic linking numbers, the modular lambda "
                    "function, Massey product values on the quotient "
                    "Calabi-Yau family, and its Hodge diamond.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lambda", help="evaluate the modular lambda function")
    p.add_argument("tau", help='tau in the upper half-plane, e.g. "0.3+1.7i"')
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("massey", help="Massey product value via both routes")
    p.add_argument("tau", help='tau in the upper half-plane, e.g. "0+1i"')
    p.add_argument("--tol", type=float, default=None,
                   help="nonvanishing threshold (default 1e-6, or HOLINK_TOL)")
    p.set_defaults(func=cmd_massey)

    p = sub.add_parser("hodge", help="print the exact Hodge diamond")
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("link", help="pair two divisors given as JSON files")
    p.add_argument("z", help="path to the first divisor JSON file")
    p.add_argument("w", help="path to the second divisor JSON file")
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("scan", help="write a CSV grid of lambda and Massey values")
    p.add_argument("--re-min", type=float, required=True)
    p.add_argument("--re-max", type=float, required=True)
    p.add_argument("--im-min", type=float, required=True)
    p.add_argument("--im-max", type=float, required=True)
    p.add_argument("--steps-re", type=int, required=True)
    p.add_argument("--steps-im", type=int, required=True)
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run the seeded invariant suites")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=None,
                   help="override every suite tolerance (default: per-suite)")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if isinstance(code, int) else (0 if code is None else 2)
    try:
        return args.func(args)
    except HolinkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
