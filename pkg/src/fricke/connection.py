"""Logarithmic flat connections: numerical holonomy, exponents, and the PVI layer.

A residue tuple is four traceless 2x2 complex matrices summing to zero,
attached to the punctures ``(0, 1, t, infinity)``.  Parallel transport of the
fundamental solution of ``Y' = -(sum_i X_i/(z - c_i)) Y`` around the finite
punctures yields monodromy matrices; the tuple is re-ordered to puncture order
with conjugation moves so that ``A1 A2 A3 A4 = I`` holds with
``A4 = (A1 A2 A3)^-1`` conjugate to the monodromy at infinity.

Orientation convention: loops are counterclockwise and transports are
inverted, so for commuting residues ``A1 = exp(2 pi i X1)``.

All floating-point and complex arithmetic of the package lives in this module;
everything upstream is exact.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .charvariety import NON_REAL, SL2R, SU2, ClassLabel, fricke_cubic
from .exactalg import Polynomial
from .groebner import Ideal

THETA_VARS = ("th1", "th2", "th3", "th4")

RESIDUE_TOL = 1e-12
DEFAULT_HOLONOMY_TOL = 1e-10
MAX_INTEGRATION_STEPS = 1_000_000

_Mat = tuple[complex, complex, complex, complex]  # row-major 2x2


class HolonomyError(RuntimeError):
    pass


class PathTooClosePunctureError(HolonomyError):
    """Step-size collapse: the integration path came too close to a puncture."""


# -- small matrix helpers -----------------------------------------------------

def _flat(m: np.ndarray) -> _Mat:
    return (complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1]))


def _unflat(m: _Mat) -> np.ndarray:
    return np.array([[m[0], m[1]], [m[2], m[3]]], dtype=complex)


def matrix_exp_traceless(m: np.ndarray) -> np.ndarray:
    """exp of a traceless 2x2 matrix via the closed form cosh/sinh expansion."""
    lam = cmath.sqrt(-complex(np.linalg.det(m)))
    if abs(lam) < 1e-30:
        return np.eye(2, dtype=complex) + m
    return cmath.cosh(lam) * np.eye(2, dtype=complex) + (cmath.sinh(lam) / lam) * m


def matrix_to_json(m: np.ndarray) -> list[list[float]]:
    return [[float(x.real), float(x.imag)] for x in np.asarray(m, dtype=complex).reshape(4)]


def matrix_from_json(data: Sequence[Sequence[float]]) -> np.ndarray:
    if len(data) != 4:
        raise ValueError("a 2x2 matrix needs exactly four [re, im] entries (row-major)")
    entries = [complex(re, im) for re, im in data]
    return np.array([[entries[0], entries[1]], [entries[2], entries[3]]], dtype=complex)


def complex_to_json(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


# -- residue tuples and punctures ---------------------------------------------

@dataclass(frozen=True)
class ResidueTuple:
    """Four traceless 2x2 residues with zero sum (checked to 1e-12)."""

    X: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]

    def __post_init__(self):
        mats = tuple(np.asarray(m, dtype=complex) for m in self.X)
        if len(mats) != 4 or any(m.shape != (2, 2) for m in mats):
            raise ValueError("a residue tuple is four 2x2 complex matrices")
        object.__setattr__(self, "X", mats)
        for i, m in enumerate(mats):
            if abs(m[0, 0] + m[1, 1]) > RESIDUE_TOL:
                raise ValueError(f"residue {i + 1} is not traceless: trace {m[0, 0] + m[1, 1]}")
        total = mats[0] + mats[1] + mats[2] + mats[3]
        if float(np.max(np.abs(total))) > RESIDUE_TOL:
            raise ValueError(f"residues do not sum to zero (max entry {np.max(np.abs(total))})")

    def conjugated(self, g: np.ndarray) -> "ResidueTuple":
        ginv = np.linalg.inv(g)
        return ResidueTuple(tuple(g @ m @ ginv for m in self.X))

    def to_json(self) -> dict:
        return {"X": [matrix_to_json(m) for m in self.X]}

    @staticmethod
    def from_json(data: dict) -> "ResidueTuple":
        return ResidueTuple(tuple(matrix_from_json(m) for m in data["X"]))


@dataclass(frozen=True)
class PunctureConfig:
    """Punctures at (0, 1, t, infinity); t may be any complex except 0 and 1."""

    t: complex

    def __post_init__(self):
        t = complex(self.t)
        object.__setattr__(self, "t", t)
        if min(abs(t), abs(t - 1)) < 1e-12:
            raise ValueError(f"puncture position t={t} collides with 0 or 1")

    @property
    def finite(self) -> tuple[complex, complex, complex]:
        return (0j, 1 + 0j, self.t)


@dataclass(frozen=True)
class MonodromyTuple:
    """Four unimodular-within-tolerance matrices with A1 A2 A3 A4 = I."""

    A: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]

    def det_residuals(self) -> tuple[float, float, float, float]:
        return tuple(abs(complex(np.linalg.det(m)) - 1) for m in self.A)

    def product_residual(self) -> float:
        prod = self.A[0] @ self.A[1] @ self.A[2] @ self.A[3]
        return float(np.max(np.abs(prod - np.eye(2))))


# -- exponents ----------------------------------------------------------------

def theta_of(residues: ResidueTuple) -> tuple[complex, complex, complex, complex]:
    """Exponents: each residue has eigenvalues +/- theta_i/2.

    Branch: nonnegative real part, ties broken toward nonnegative imaginary
    part.  A nilpotent residue yields exponent 0.
    """
    out = []
    for m in residues.X:
        lam = cmath.sqrt(-complex(np.linalg.det(m)))
        if lam.real < 0 or (lam.real == 0 and lam.imag < 0):
            lam = -lam
        out.append(2 * lam)
    return tuple(out)


def exp_map(theta: Sequence[complex]) -> tuple[complex, ...]:
    """Componentwise class exponential: theta -> 2 cos(pi theta)."""
    return tuple(2 * cmath.cos(math.pi * th) for th in theta)


def is_resonant(theta: Sequence[complex], margin: float = 1e-9) -> bool:
    """True when some exponent is within ``margin`` of a nonzero integer."""
    for th in theta:
        nearest = round(th.real)
        if nearest != 0 and abs(th - nearest) < margin:
            return True
    return False


# -- adaptive Dormand-Prince transport -----------------------------------------

_DP_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_DP_C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
_DP_ERR = (
    71 / 57600,
    0.0,
    -71 / 16695,
    71 / 1920,
    -17253 / 339200,
    22 / 525,
    -1 / 40,
)


def _mat_add_scaled(y: _Mat, scale: float, k: _Mat) -> _Mat:
    return (
        y[0] + scale * k[0],
        y[1] + scale * k[1],
        y[2] + scale * k[2],
        y[3] + scale * k[3],
    )


class _Transporter:
    """Integrates Y' = -(sum X_i/(z - c_i)) Y along parametrized path pieces."""

    def __init__(self, residues: Sequence[_Mat], punctures: Sequence[complex],
                 tol: float, min_distance: float):
        self.residues = list(residues)
        self.punctures = list(punctures)
        self.tol = tol
        self.min_distance = min_distance
        self.steps = 0
        self.error_estimate = 0.0

    def _rhs(self, z: complex, dz: complex, y: _Mat) -> _Mat:
        a00 = a01 = a10 = a11 = 0j
        for (x00, x01, x10, x11), c in zip(self.residues, self.punctures):
            d = z - c
            if abs(d) < self.min_distance * 1e-3:
                raise PathTooClosePunctureError(
                    f"integration path within {abs(d):.3e} of puncture {c}"
                )
            w = -dz / d
            a00 += w * x00
            a01 += w * x01
            a10 += w * x10
            a11 += w * x11
        return (
            a00 * y[0] + a01 * y[2],
            a00 * y[1] + a01 * y[3],
            a10 * y[0] + a11 * y[2],
            a10 * y[1] + a11 * y[3],
        )

    def run_piece(self, zfun: Callable[[float], complex],
                  dzfun: Callable[[float], complex], y: _Mat) -> _Mat:
        s = 0.0
        h = 0.05
        k1 = self._rhs(zfun(s), dzfun(s), y)
        while s < 1.0:
            h = min(h, 1.0 - s)
            if h < 1e-13:
                raise PathTooClosePunctureError("step size collapse on integration path")
            ks = [k1]
            for stage in range(1, 7):
                ys = y
                for coeff, k in zip(_DP_A[stage], ks):
                    if coeff:
                        ys = _mat_add_scaled(ys, h * coeff, k)
                ks.append(self._rhs(zfun(s + _DP_C[stage] * h), dzfun(s + _DP_C[stage] * h), ys))
            y_new = y
            for coeff, k in zip(_DP_A[6], ks):
                if coeff:
                    y_new = _mat_add_scaled(y_new, h * coeff, k)
            err_vec = (0j, 0j, 0j, 0j)
            for coeff, k in zip(_DP_ERR, ks):
                if coeff:
                    err_vec = _mat_add_scaled(err_vec, h * coeff, k)
            scale = self.tol * (1.0 + max(abs(v) for v in y_new))
            err = max(abs(v) for v in err_vec) / scale
            self.steps += 1
            if self.steps > MAX_INTEGRATION_STEPS:
                raise HolonomyError(
                    f"tolerance not achieved within {MAX_INTEGRATION_STEPS} steps"
                )
            if err <= 1.0:
                s += h
                y = y_new
                k1 = ks[6]  # first-same-as-last
                self.error_estimate += err * scale
            else:
                k1 = ks[0]
            factor = 0.9 * (err ** -0.2) if err > 0 else 5.0
            h *= min(5.0, max(0.2, factor))
        return y


def _loop_pieces(p: complex, c: complex, r: float):
    """Segment in, counterclockwise circle, segment back."""
    entry = c + r * (p - c) / abs(p - c)
    phi0 = cmath.phase(entry - c)
    return [
        (lambda s: p + s * (entry - p), lambda s: entry - p),
        (
            lambda s: c + r * cmath.exp(1j * (phi0 + 2 * math.pi * s)),
            lambda s: 2j * math.pi * r * cmath.exp(1j * (phi0 + 2 * math.pi * s)),
        ),
        (lambda s: entry + s * (p - entry), lambda s: p - entry),
    ]


def _segment_clearance(p: complex, q: complex, c: complex) -> float:
    """Distance from the segment [p, q] to the point c."""
    d = q - p
    denom = abs(d) ** 2
    if denom == 0:
        return abs(c - p)
    u = ((c - p) * d.conjugate()).real / denom
    u = min(1.0, max(0.0, u))
    return abs(p + u * d - c)


def _choose_basepoint(punctures: Sequence[complex], radius: float) -> complex:
    """Deterministic basepoint below the punctures, nudged off bad alignments."""
    scale = 1 + max(abs(c) for c in punctures)
    for k in range(40):
        p = -2j * scale * cmath.exp(0.37j * k)
        ok = True
        for c in punctures:
            entry = c + radius * (p - c) / abs(p - c)
            for other in punctures:
                if other == c:
                    continue
                if _segment_clearance(p, entry, other) < 1.5 * radius:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return p
    raise HolonomyError("could not place a basepoint clear of all punctures")


@dataclass(frozen=True)
class HolonomyResult:
    """Monodromy tuple plus the post-hoc certification data."""

    monodromy: MonodromyTuple
    theta: tuple[complex, complex, complex, complex]
    a: tuple[complex, complex, complex, complex]
    v: tuple[complex, complex, complex]
    fricke_residual: float
    det_residuals: tuple[float, float, float, float]
    product_residual: float
    integration_error: float
    tolerance: float
    steps: int

    def to_json(self) -> dict:
        return {
            "a": [complex_to_json(x) for x in self.a],
            "v": [complex_to_json(x) for x in self.v],
            "theta": [complex_to_json(x) for x in self.theta],
            "fricke_residual": self.fricke_residual,
            "det_residuals": list(self.det_residuals),
            "product_residual": self.product_residual,
            "integration_error": self.integration_error,
            "tolerance": self.tolerance,
            "matrices": [matrix_to_json(m) for m in self.monodromy.A],
        }


def evaluate_complex(poly: Polynomial, point: dict[str, complex]) -> complex:
    """Floating-point evaluation of an exact polynomial at a complex point."""
    total = 0j
    for mono, coeff in poly.items():
        value = complex(coeff)
        for name, exp in mono.pairs:
            value *= point[name] ** exp
        total += value
    return total


def traces(monodromy: MonodromyTuple) -> tuple[tuple[complex, ...], tuple[complex, ...], float]:
    """The seven trace coordinates of a monodromy tuple and the cubic residual."""
    A1, A2, A3, A4 = monodromy.A
    a = tuple(complex(np.trace(m)) for m in (A1, A2, A3, A4))
    v = (
        complex(np.trace(A1 @ A2)),
        complex(np.trace(A2 @ A3)),
        complex(np.trace(A1 @ A3)),
    )
    assignment = dict(zip(("a1", "a2", "a3", "a4"), a))
    assignment.update(zip(("v1", "v2", "v3"), v))
    residual = abs(evaluate_complex(fricke_cubic(), assignment))
    return a, v, residual


def holonomy(residues: ResidueTuple, config: PunctureConfig,
             tol: float = DEFAULT_HOLONOMY_TOL) -> HolonomyResult:
    """Monodromy of the connection with the given residues and puncture position.

    The three finite-puncture transports are computed by adaptive embedded
    Runge-Kutta 4(5); the tuple is then reordered from angular order (seen
    from the basepoint) to puncture order by conjugation moves, which
    preserves the total product and every conjugacy class.  ``A4`` is defined
    as ``(A1 A2 A3)^-1`` rather than by integrating around infinity.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    punctures = list(config.finite)
    radius = min(
        abs(punctures[i] - punctures[j])
        for i in range(3)
        for j in range(i + 1, 3)
    ) / 4
    basepoint = _choose_basepoint(punctures, radius)

    centroid = sum(punctures) / 3
    def rel_angle(c: complex) -> float:
        return cmath.phase((c - basepoint) / (centroid - basepoint))

    angular = sorted(range(3), key=lambda i: rel_angle(punctures[i]))

    transporter = _Transporter(
        [_flat(m) for m in residues.X[:3]], punctures, tol, radius
    )
    rho: dict[int, np.ndarray] = {}
    for i in range(3):
        y: _Mat = (1 + 0j, 0j, 0j, 1 + 0j)
        for zfun, dzfun in _loop_pieces(basepoint, punctures[i], radius):
            y = transporter.run_piece(zfun, dzfun, y)
        # the exact flow conserves det (traceless coefficients); project the
        # drift away so the tuple lands exactly on the representation variety
        det = y[0] * y[3] - y[1] * y[2]
        scale = 1 / cmath.sqrt(det)
        y = (y[0] * scale, y[1] * scale, y[2] * scale, y[3] * scale)
        rho[i] = _unflat((y[3], -y[1], -y[2], y[0]))  # adjugate = inverse at det 1

    # geometric tuple in angular order; bubble-sort to puncture order with
    # conjugation moves (g, h) -> (g h g^-1, g), which preserve the product
    labels = list(angular)
    mats = [rho[i] for i in angular]
    for i in range(len(labels)):
        for j in range(len(labels) - 1 - i):
            if labels[j] > labels[j + 1]:
                g, h = mats[j], mats[j + 1]
                mats[j], mats[j + 1] = g @ h @ np.linalg.inv(g), g
                labels[j], labels[j + 1] = labels[j + 1], labels[j]

    A1, A2, A3 = mats
    A4 = np.linalg.inv(A1 @ A2 @ A3)
    monodromy = MonodromyTuple((A1, A2, A3, A4))
    a, v, fricke_residual = traces(monodromy)
    return HolonomyResult(
        monodromy=monodromy,
        theta=theta_of(residues),
        a=a,
        v=v,
        fricke_residual=fricke_residual,
        det_residuals=monodromy.det_residuals(),
        product_residual=monodromy.product_residual(),
        integration_error=transporter.error_estimate,
        tolerance=tol,
        steps=transporter.steps,
    )


# -- approximate classification for complex trace data -------------------------

def classify_numeric(a: Sequence[complex], v: Sequence[complex], tol: float = 1e-8) -> ClassLabel:
    """Float version of the unitarity test for holonomy output.

    Real within ``tol`` plus the box and interval conditions (evaluated in
    floating point with ``tol`` slack) gives SU2; real but failing gives SL2R;
    otherwise NonReal.
    """
    real = all(abs(x.imag) <= tol for x in a) and all(abs(x.imag) <= tol for x in v)
    if not real:
        return ClassLabel(label=NON_REAL, real=False, box=False, overlap=None)
    ar = [x.real for x in a]
    box = all(abs(x) <= 2 + tol for x in ar)
    overlap = None
    if box:
        def endpoints(s: float, t: float) -> tuple[float, float]:
            s = min(2.0, max(-2.0, s))
            t = min(2.0, max(-2.0, t))
            half = math.sqrt(max(0.0, (s * s - 4) * (t * t - 4))) / 2
            return s * t / 2 - half, s * t / 2 + half

        lo1, hi1 = endpoints(ar[0], ar[1])
        lo2, hi2 = endpoints(ar[2], ar[3])
        overlap = max(lo1, lo2) <= min(hi1, hi2) + tol
    label = SU2 if (box and overlap) else SL2R
    return ClassLabel(label=label, real=True, box=box, overlap=overlap)


# -- Painleve VI layer ----------------------------------------------------------

def pvi_params(theta: Sequence) -> tuple:
    """The four equation parameters, quadratic in the exponents.

    Exact when handed rationals: ``r1 = (th4-1)^2/2, r2 = -th1^2/2,
    r3 = th3^2/2, r4 = (1-th2^2)/2``.
    """
    th1, th2, th3, th4 = theta
    half = 0.5 if isinstance(th1, (float, complex)) else Fraction(1, 2)
    return (
        (th4 - 1) ** 2 * half,
        -(th1 ** 2) * half,
        th3 ** 2 * half,
        (1 - th2 ** 2) * half,
    )


def pvi_residual(t: complex, y: complex, y_prime: complex, y_second: complex,
                 theta: Sequence[complex]) -> complex:
    """Left side minus right side of the sixth Painleve equation at a 2-jet.

    Linear in ``y_second`` with unit coefficient; vanishes exactly when the
    jet satisfies the equation at ``t``.
    """
    t, y = complex(t), complex(y)
    if min(abs(t), abs(t - 1)) < 1e-12:
        raise ValueError(f"equation parameter t={t} collides with 0 or 1")
    if min(abs(y), abs(y - 1), abs(y - t)) < 1e-12:
        raise ValueError(f"dependent value y={y} is at a pole of the equation")
    r1, r2, r3, r4 = (complex(r) for r in pvi_params(theta))
    lhs = (
        y_second
        - (1 / y + 1 / (y - 1) + 1 / (y - t)) * y_prime ** 2 / 2
        + (1 / t + 1 / (t - 1) + 1 / (y - t)) * y_prime
    )
    rhs = (
        y * (y - 1) * (y - t) / (t ** 2 * (t - 1) ** 2)
        * (r1 + r2 * t / y ** 2 + r3 * (t - 1) / (y - 1) ** 2
           + r4 * t * (t - 1) / (y - t) ** 2)
    )
    return lhs - rhs


def _theta_polynomials() -> tuple[Polynomial, ...]:
    return tuple(Polynomial.variable(n) for n in THETA_VARS)


def family_constraints(theta0: Sequence[Fraction]) -> Ideal:
    """The ideal of exponent deformations keeping every equation parameter fixed.

    Generated by ``r_i(theta) - r_i(theta0)`` over the rationals; every
    generator vanishes at ``theta0``, and the ideal is invariant under the
    sign symmetries fixing each ``r_i``.
    """
    theta0 = tuple(Fraction(x) for x in theta0)
    th = _theta_polynomials()
    symbolic = pvi_params(th)
    values = pvi_params(theta0)
    gens = tuple(sym - Polynomial.constant(val) for sym, val in zip(symbolic, values))
    return Ideal(gens, THETA_VARS)


#: Shipped verification data: constraint sets of known deformation families,
#: parameterized in the exponent variables.  The two-point-orbit family below
#: has a 2-dimensional constraint variety strictly larger than the zero set of
#: :func:`family_constraints`; it is shipped as data, not derived.
FAMILY_CONSTRAINT_SETS: dict[str, tuple[Polynomial, ...]] = {
    "tetrahedral-two-point": (
        Polynomial.parse("0 - th2^2 + th3^2", THETA_VARS),
        Polynomial.parse("1 - th1^2 - 2*th4 + th4^2", THETA_VARS),
    ),
}
