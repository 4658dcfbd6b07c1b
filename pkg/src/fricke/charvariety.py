"""The moduli layer: the trace-coordinate cubic, membership, and unitarity tests.

The character variety of the four-punctured sphere embeds in C^7 via the
boundary traces ``a = (a1..a4)`` and the pair traces
``v = (v1, v2, v3) = (tr(A1 A2), tr(A2 A3), tr(A1 A3))``.  Its defining cubic
is :func:`fricke_cubic`.  A real point is a unitary (SU(2)) class exactly when
all ``a_i`` lie in ``[-2, 2]`` and the two trace intervals ``I(a1,a2)`` and
``I(a3,a4)`` meet; interval endpoints are quadratic surds, and all comparisons
here are exact (no floating point anywhere in this module).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactalg import Polynomial, format_rational, parse_rational

A_VARS = ("a1", "a2", "a3", "a4")
V_VARS = ("v1", "v2", "v3")
ALL_VARS = A_VARS + V_VARS


class OffVarietyError(ValueError):
    """Classification was requested for a point with nonzero cubic value."""


@lru_cache(maxsize=1)
def fricke_cubic() -> Polynomial:
    """The 7-variable trace relation cutting out the moduli space.

    Expanded form has exactly 16 monomials; the constant block is symmetric
    in all four boundary traces.
    """
    a1, a2, a3, a4 = (Polynomial.variable(n) for n in A_VARS)
    v1, v2, v3 = (Polynomial.variable(n) for n in V_VARS)
    return (
        v1 ** 2 + v2 ** 2 + v3 ** 2 + v1 * v2 * v3
        - (a1 * a2 + a3 * a4) * v1
        - (a1 * a4 + a2 * a3) * v2
        - (a1 * a3 + a2 * a4) * v3
        + a1 ** 2 + a2 ** 2 + a3 ** 2 + a4 ** 2
        + a1 * a2 * a3 * a4
        - 4
    )


def trace_coefficients(a: Sequence[Fraction]) -> tuple[Fraction, Fraction, Fraction]:
    """The linear-coefficient data (p1, p2, p3) of the cubic at fixed a."""
    a1, a2, a3, a4 = (Fraction(x) for x in a)
    return (a1 * a2 + a3 * a4, a1 * a4 + a2 * a3, a1 * a3 + a2 * a4)


@dataclass(frozen=True)
class TracePoint:
    """An exact point (a, v) of the trace coordinates."""

    a: tuple[Fraction, Fraction, Fraction, Fraction]
    v: tuple[Fraction, Fraction, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))
        object.__setattr__(self, "v", tuple(Fraction(x) for x in self.v))
        if len(self.a) != 4 or len(self.v) != 3:
            raise ValueError("a trace point needs 4 boundary traces and 3 pair traces")

    def assignment(self) -> dict[str, Fraction]:
        out = dict(zip(A_VARS, self.a))
        out.update(zip(V_VARS, self.v))
        return out

    def cubic_value(self) -> Fraction:
        return fricke_cubic().evaluate(self.assignment())

    def to_json(self) -> dict:
        return {
            "a": [format_rational(x) for x in self.a],
            "v": [format_rational(x) for x in self.v],
        }

    @staticmethod
    def from_json(data: dict) -> "TracePoint":
        return TracePoint(
            tuple(parse_rational(str(x)) for x in data["a"]),
            tuple(parse_rational(str(x)) for x in data["v"]),
        )


def on_variety(point: TracePoint) -> bool:
    """Exact membership test: the cubic vanishes at the point."""
    return point.cubic_value() == 0


# -- exact arithmetic with p + s*sqrt(q) ------------------------------------

def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def sqrt_expr_sign(p: Fraction, s: int, q: Fraction) -> int:
    """Exact sign of ``p + s*sqrt(q)`` for rational p, q >= 0 and s in {-1,0,1}.

    Decided by at most one squaring; square roots are never evaluated
    numerically.
    """
    if q < 0:
        raise ValueError("negative radicand")
    if s == 0 or q == 0:
        return _sign(p)
    if p == 0:
        return s
    if p > 0 and s > 0:
        return 1
    if p < 0 and s < 0:
        return -1
    # opposite signs: compare p^2 with q
    cmp = _sign(p * p - q)
    return cmp if p > 0 else -cmp


@dataclass(frozen=True)
class QuadraticNumber:
    """The exact real number ``p + s*sqrt(q)`` with p, q rational, q >= 0."""

    p: Fraction
    s: int
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q < 0:
            raise ValueError("negative radicand")
        if self.q == 0 and self.s != 0:
            object.__setattr__(self, "s", 0)
        if self.s == 0 and self.q != 0:
            object.__setattr__(self, "q", Fraction(0))
        if self.s not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or 1")

    def compare(self, other: "QuadraticNumber") -> int:
        """Exact three-way comparison, by sign analysis with at most two squarings."""
        delta = self.p - other.p
        if self.q == other.q:
            # common radicand: delta + (s1 - s2) sqrt(q), coefficient in {-2..2}
            coeff = self.s - other.s
            if coeff == 0:
                return _sign(delta)
            return sqrt_expr_sign(delta / abs(coeff), _sign(coeff), self.q)
        left_sign = sqrt_expr_sign(delta, self.s, self.q)   # sign of (delta + s1 sqrt(q1))
        right_sign = other.s if other.q else 0              # sign of s2 sqrt(q2)
        if left_sign != right_sign:
            return 1 if left_sign > right_sign else -1
        if left_sign == 0:
            return 0
        # equal nonzero signs: compare squares
        # (delta + s1 sqrt(q1))^2 - q2 = (delta^2 + q1 - q2) + 2 delta s1 sqrt(q1)
        sq_diff_p = delta * delta + self.q - other.q
        if delta:
            sq_cmp = sqrt_expr_sign(
                sq_diff_p / (2 * abs(delta)), _sign(2 * delta * self.s), self.q
            )
        else:
            sq_cmp = _sign(sq_diff_p)
        return sq_cmp if left_sign > 0 else -sq_cmp

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def to_float(self) -> float:
        from math import sqrt

        return float(self.p) + self.s * sqrt(float(self.q))

    def __str__(self) -> str:
        if self.s == 0:
            return format_rational(self.p)
        sign = "+" if self.s > 0 else "-"
        return f"{format_rational(self.p)} {sign} sqrt({format_rational(self.q)})"


@dataclass(frozen=True)
class AlgebraicInterval:
    """Closed interval with endpoints ``center -/+ sqrt(radicand)``."""

    center: Fraction
    radicand: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", Fraction(self.center))
        object.__setattr__(self, "radicand", Fraction(self.radicand))
        if self.radicand < 0:
            raise ValueError("negative radicand")

    @property
    def lower(self) -> QuadraticNumber:
        return QuadraticNumber(self.center, -1, self.radicand)

    @property
    def upper(self) -> QuadraticNumber:
        return QuadraticNumber(self.center, 1, self.radicand)

    def __str__(self) -> str:
        return f"[{self.lower}, {self.upper}]"


def trace_interval(s: Fraction, t: Fraction) -> AlgebraicInterval:
    """The closed interval of possible ``tr(AB)`` for unitary A, B with traces s, t.

    Endpoints are ``(s t -/+ sqrt((s^2-4)(t^2-4)))/2``; requires s, t in [-2, 2]
    so the radicand is nonnegative.
    """
    s, t = Fraction(s), Fraction(t)
    if abs(s) > 2 or abs(t) > 2:
        raise ValueError(f"traces must lie in [-2, 2], got ({s}, {t})")
    center = s * t / 2
    radicand = (s * s - 4) * (t * t - 4) / 4
    return AlgebraicInterval(center, radicand)


def intervals_intersect(one: AlgebraicInterval, two: AlgebraicInterval) -> bool:
    """Exact closed-interval intersection test (tangency counts)."""
    lower = one.lower if two.lower < one.lower else two.lower
    upper = one.upper if one.upper < two.upper else two.upper
    return lower <= upper


# -- classification -----------------------------------------------------------

SU2 = "SU2"
SL2R = "SL2R"
NON_REAL = "NonReal"


@dataclass(frozen=True)
class ClassLabel:
    """Outcome of the unitarity test with the flags that produced it."""

    label: str
    real: bool
    box: bool
    overlap: bool | None

    def to_json(self) -> dict:
        return {
            "class": self.label,
            "real": self.real,
            "box": self.box,
            "overlap": self.overlap,
        }


def classify(point: TracePoint) -> ClassLabel:
    """Decide SU(2) vs SL(2,R) for an exact on-variety point.

    The input is rational, hence real; SU2 requires all boundary traces in
    [-2, 2] and the two trace intervals to meet (decided exactly).  Points off
    the variety are refused: there is no representation to classify.
    """
    value = point.cubic_value()
    if value != 0:
        raise OffVarietyError(
            f"point is not on the variety (cubic value {format_rational(value)})"
        )
    box = all(abs(x) <= 2 for x in point.a)
    overlap: bool | None = None
    if box:
        overlap = intervals_intersect(
            trace_interval(point.a[0], point.a[1]),
            trace_interval(point.a[2], point.a[3]),
        )
    label = SU2 if (box and overlap) else SL2R
    return ClassLabel(label=label, real=True, box=box, overlap=overlap)
