"""Braid dynamics on the trace coordinates: generator maps, words, orbits, fixed loci.

The three generators act on ``(v1, v2, v3)`` at fixed boundary traces.  Each
generator factors into two of the root-swap involutions

    sj : vj  |->  pj - (product of the other two v) - vj

of the cubic, which is monic quadratic in each ``vj``; this is why the inverse
maps are again polynomial.  Words are strings over ``t1 t2 t3`` (capitals for
inverses) and act both pointwise on exact trace points and symbolically as
polynomial triples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import groebner
from .charvariety import (
    ALL_VARS,
    TracePoint,
    V_VARS,
    fricke_cubic,
    on_variety,
    trace_coefficients,
)
from .exactalg import Polynomial
from .groebner import (
    GroebnerBasis,
    Ideal,
    NotZeroDimensionalError,
    ZeroDimensionalSolution,
)

DEFAULT_ORBIT_CAP = 10_000

_TRIPLE = tuple[Fraction, Fraction, Fraction]

# which two involutions compose to each generator: tau_i = second after first
_GENERATOR_FACTORS = {1: (3, 2), 2: (1, 3), 3: (2, 1)}


class OffVarietyInputError(ValueError):
    """Braid maps act on representation classes, which live on the cubic only."""


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators; letters are (index in 1..3, sign in {-1,+1})."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for index, sign in self.letters:
            if index not in (1, 2, 3) or sign not in (-1, 1):
                raise ValueError(f"bad braid letter ({index}, {sign})")

    @staticmethod
    def parse(text: str) -> "BraidWord":
        """Parse e.g. ``"t1t1"`` or ``"T2t3"``; capitals are inverse letters."""
        letters = []
        pos = 0
        while pos < len(text):
            head = text[pos]
            if head not in "tT" or pos + 1 >= len(text) or text[pos + 1] not in "123":
                raise ValueError(f"bad braid word {text!r} at position {pos}")
            letters.append((int(text[pos + 1]), 1 if head == "t" else -1))
            pos += 2
        return BraidWord(tuple(letters))

    def __str__(self) -> str:
        return "".join(
            f"{'t' if sign > 0 else 'T'}{index}" for index, sign in self.letters
        )

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple((i, -s) for i, s in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class SubgroupSpec:
    """A subgroup given by a nonempty list of generator words."""

    generators: tuple[BraidWord, ...]

    def __post_init__(self):
        if not self.generators:
            raise ValueError("a subgroup needs at least one generator word")

    @staticmethod
    def parse(words: Iterable[str]) -> "SubgroupSpec":
        return SubgroupSpec(tuple(BraidWord.parse(w) for w in words))

    def __str__(self) -> str:
        return ";".join(str(w) for w in self.generators)


# -- pointwise action ---------------------------------------------------------

def _involution_step(j: int, p: _TRIPLE, v: list[Fraction]) -> None:
    """In-place root swap of the cubic in the j-th pair trace."""
    if j == 1:
        v[0] = p[0] - v[1] * v[2] - v[0]
    elif j == 2:
        v[1] = p[1] - v[0] * v[2] - v[1]
    else:
        v[2] = p[2] - v[0] * v[1] - v[2]


def apply_letter(a: Sequence[Fraction], v: _TRIPLE, index: int, sign: int) -> _TRIPLE:
    """One signed generator applied exactly at fixed boundary traces."""
    p = trace_coefficients(a)
    first, second = _GENERATOR_FACTORS[index]
    if sign < 0:
        first, second = second, first
    out = list(v)
    _involution_step(first, p, out)
    _involution_step(second, p, out)
    return (out[0], out[1], out[2])


def apply_word(word: BraidWord, point: TracePoint) -> TracePoint:
    """Apply a word letters-first-to-last to an exact on-variety point."""
    if not on_variety(point):
        raise OffVarietyInputError(f"point {point.to_json()} is not on the variety")
    v = point.v
    for index, sign in word.letters:
        v = apply_letter(point.a, v, index, sign)
    return TracePoint(point.a, v)


# -- symbolic action ----------------------------------------------------------

def _symbolic_involution(j: int) -> dict[str, Polynomial]:
    a1, a2, a3, a4 = (Polynomial.variable(n) for n in ("a1", "a2", "a3", "a4"))
    v1, v2, v3 = (Polynomial.variable(n) for n in V_VARS)
    p = (a1 * a2 + a3 * a4, a1 * a4 + a2 * a3, a1 * a3 + a2 * a4)
    others = {1: v2 * v3, 2: v1 * v3, 3: v1 * v2}
    target = V_VARS[j - 1]
    return {target: p[j - 1] - others[j] - Polynomial.variable(target)}


def _compose(outer: tuple[Polynomial, ...], inner: tuple[Polynomial, ...]) -> tuple[Polynomial, ...]:
    """Triple of (outer after inner): substitute inner images into outer."""
    images = dict(zip(V_VARS, inner))
    return tuple(poly.substitute(images) for poly in outer)


@lru_cache(maxsize=64)
def generator_triple(index: int, sign: int = 1) -> tuple[Polynomial, Polynomial, Polynomial]:
    """The symbolic images (of v1, v2, v3) under one signed generator."""
    identity = tuple(Polynomial.variable(n) for n in V_VARS)
    first, second = _GENERATOR_FACTORS[index]
    if sign < 0:
        first, second = second, first
    step1 = tuple(
        poly.substitute(_symbolic_involution(first)) for poly in identity
    )
    return _compose(
        tuple(poly.substitute(_symbolic_involution(second)) for poly in identity),
        step1,
    )


@lru_cache(maxsize=256)
def word_triple(word: BraidWord) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Symbolic images of (v1, v2, v3) under a word (letters applied first-to-last)."""
    current = tuple(Polynomial.variable(n) for n in V_VARS)
    for index, sign in word.letters:
        current = _compose(generator_triple(index, sign), current)
    return current


# -- orbits -------------------------------------------------------------------

ORBIT_COMPLETE = "complete"
ORBIT_CAP_EXCEEDED = "cap-exceeded"


@dataclass(frozen=True)
class Orbit:
    """Closure of a point's pair traces under all six signed generators."""

    basepoint: TracePoint
    points: tuple[_TRIPLE, ...]
    status: str
    frontier_sizes: tuple[int, ...] = field(default_factory=tuple)

    @property
    def size(self) -> int:
        return len(self.points)


def enumerate_orbit(point: TracePoint, cap: int = DEFAULT_ORBIT_CAP) -> Orbit:
    """Breadth-first closure under the six signed generator maps.

    Deterministic: frontiers are expanded in sorted order.  Exceeding ``cap``
    stops the search and is reported through the status, not an error.
    """
    if cap <= 0:
        raise ValueError("orbit cap must be positive")
    if not on_variety(point):
        raise OffVarietyInputError(f"point {point.to_json()} is not on the variety")
    a = point.a
    seen: set[_TRIPLE] = {point.v}
    frontier: list[_TRIPLE] = [point.v]
    sizes: list[int] = [1]
    status = ORBIT_COMPLETE
    while frontier:
        next_frontier: set[_TRIPLE] = set()
        for v in frontier:
            for index in (1, 2, 3):
                for sign in (1, -1):
                    image = apply_letter(a, v, index, sign)
                    if image not in seen:
                        next_frontier.add(image)
        if not next_frontier:
            break
        if len(seen) + len(next_frontier) > cap:
            status = ORBIT_CAP_EXCEEDED
            for image in sorted(next_frontier):
                if len(seen) >= cap:
                    break
                seen.add(image)
            sizes.append(len(next_frontier))
            break
        seen.update(next_frontier)
        sizes.append(len(next_frontier))
        frontier = sorted(next_frontier)
    return Orbit(
        basepoint=point,
        points=tuple(sorted(seen)),
        status=status,
        frontier_sizes=tuple(sizes),
    )


# -- fixed loci ---------------------------------------------------------------

def fixed_ideal_generators(subgroup: SubgroupSpec) -> tuple[Polynomial, ...]:
    """Raw generators: the cubic plus (word image - v) components per generator word."""
    gens: list[Polynomial] = [fricke_cubic()]
    for word in subgroup.generators:
        images = word_triple(word)
        for name, image in zip(V_VARS, images):
            diff = image - Polynomial.variable(name)
            if not diff.is_zero():
                gens.append(diff)
    return tuple(gens)


@lru_cache(maxsize=32)
def fixed_ideal(subgroup: SubgroupSpec) -> GroebnerBasis:
    """Reduced Gröbner basis (grevlex over all 7 variables) of the fixed locus."""
    ideal = Ideal(fixed_ideal_generators(subgroup), ALL_VARS)
    return groebner.buchberger(ideal)


@dataclass(frozen=True)
class FixedPoints:
    """Rational fixed pair traces at a specialized boundary, plus diagnostics."""

    a: tuple[Fraction, Fraction, Fraction, Fraction]
    solutions: tuple[_TRIPLE, ...]
    residuals: tuple[Polynomial, ...]
    zero_dimensional: bool
    positive_dimensional_basis: tuple[Polynomial, ...] = ()

    @property
    def complete(self) -> bool:
        return self.zero_dimensional and not self.residuals


def fixed_points_at(a: Sequence[Fraction], subgroup: SubgroupSpec) -> FixedPoints:
    """Specialize the fixed locus at boundary traces ``a`` and solve it.

    Solves by elimination to univariate polynomials with rational-root
    extraction and back-substitution.  Non-rational univariate factors are
    reported unsolved; a positive-dimensional specialization is reported with
    its basis instead of a solution list.
    """
    a = tuple(Fraction(x) for x in a)
    assignment = {name: Polynomial.constant(val) for name, val in zip(("a1", "a2", "a3", "a4"), a)}
    specialized = []
    for gen in fixed_ideal_generators(subgroup):
        g = gen.substitute(assignment)
        if not g.is_zero():
            specialized.append(g)
    ideal = Ideal(tuple(specialized), V_VARS)
    try:
        solution: ZeroDimensionalSolution = groebner.solve_zero_dimensional(ideal)
    except NotZeroDimensionalError as err:
        return FixedPoints(
            a=a,
            solutions=(),
            residuals=(),
            zero_dimensional=False,
            positive_dimensional_basis=err.basis.polynomials,
        )
    points = tuple(
        (pt["v1"], pt["v2"], pt["v3"]) for pt in solution.points
    )
    return FixedPoints(
        a=a,
        solutions=points,
        residuals=solution.residuals,
        zero_dimensional=True,
    )
