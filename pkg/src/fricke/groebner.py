"""Multivariate division, Buchberger's algorithm, and zero-dimensional solving.

Polynomials enter and leave as :class:`fricke.exactalg.Polynomial`; internally
they are converted to exponent-vector form relative to a monomial order's
variable list, which keeps the reduction loop tight.

Monomial orders: lexicographic, graded reverse lexicographic, and the
block (elimination) product of two grevlex orders.  Gröbner bases are always
returned reduced (monic, auto-reduced, deterministically sorted), so for a
fixed order the output is the unique reduced basis of the ideal.

Resource discipline: the pair queue and intermediate degrees are capped;
exceeding a cap raises :class:`ResourceCapError` rather than truncating.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Callable, Iterable, Sequence

from .exactalg import Monomial, Polynomial

DEFAULT_MAX_PAIRS = 100_000
DEFAULT_MAX_DEGREE = 30

_Vec = tuple[int, ...]
_VecPoly = dict[_Vec, Fraction]


class GroebnerError(RuntimeError):
    pass


class ResourceCapError(GroebnerError):
    """A configured pair or degree budget was exceeded."""


class NotZeroDimensionalError(GroebnerError):
    """Raised by the solver when the ideal has positive dimension.

    Carries the offending Gröbner basis so callers can report it.
    """

    def __init__(self, basis: "GroebnerBasis"):
        super().__init__("ideal is not zero-dimensional")
        self.basis = basis


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order over an explicit, ordered variable list.

    ``kind`` is one of ``lex``, ``grevlex`` or ``block``; for ``block`` the
    first ``block_size`` variables form the front block and both blocks are
    compared by grevlex, so the order eliminates the front block.
    """

    kind: str
    variables: tuple[str, ...]
    block_size: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable in order")
        if self.kind == "block" and not 0 < self.block_size < len(self.variables):
            raise ValueError("block size must split the variables in two")

    @staticmethod
    def lex(variables: Iterable[str]) -> "MonomialOrder":
        return MonomialOrder("lex", tuple(variables))

    @staticmethod
    def grevlex(variables: Iterable[str]) -> "MonomialOrder":
        return MonomialOrder("grevlex", tuple(variables))

    @staticmethod
    def elimination(drop: Iterable[str], keep: Iterable[str]) -> "MonomialOrder":
        drop = tuple(drop)
        keep = tuple(keep)
        return MonomialOrder("block", drop + keep, block_size=len(drop))

    def key(self) -> Callable[[_Vec], tuple[int, ...]]:
        """Sort key on exponent vectors (flat integer tuple); larger = larger monomial."""
        n = len(self.variables)
        if self.kind == "lex":
            return lambda v: v
        if self.kind == "grevlex":
            return lambda v: (sum(v), *(-v[i] for i in range(n - 1, -1, -1)))
        k = self.block_size
        return lambda v: (
            sum(v[:k]),
            *(-v[i] for i in range(k - 1, -1, -1)),
            sum(v[k:]),
            *(-v[i] for i in range(n - 1, k - 1, -1)),
        )

    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.variables)}

    def sort_terms(self, poly: Polynomial) -> list[tuple[Monomial, Fraction]]:
        """Terms of ``poly`` in decreasing order."""
        idx = self.index()
        keyf = self.key()
        return sorted(
            poly.items(),
            key=lambda item: keyf(_mono_vec(item[0], idx, len(self.variables))),
            reverse=True,
        )

    def leading_monomial(self, poly: Polynomial) -> Monomial:
        if poly.is_zero():
            raise ValueError("zero polynomial has no leading monomial")
        return self.sort_terms(poly)[0][0]


@dataclass(frozen=True)
class Ideal:
    """A finitely generated ideal with an explicit ambient variable list."""

    generators: tuple[Polynomial, ...]
    variables: tuple[str, ...]

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero())
        object.__setattr__(self, "generators", gens)
        ambient = frozenset(self.variables)
        for g in gens:
            extra = g.variables() - ambient
            if extra:
                raise ValueError(f"generator uses variables outside the ambient list: {sorted(extra)}")

    @staticmethod
    def of(generators: Iterable[Polynomial], variables: Iterable[str] | None = None) -> "Ideal":
        gens = tuple(generators)
        if variables is None:
            seen: set[str] = set()
            for g in gens:
                seen.update(g.variables())
            variables = tuple(sorted(seen))
        return Ideal(gens, tuple(variables))

    def default_order(self) -> MonomialOrder:
        return MonomialOrder.grevlex(self.variables)


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Gröbner basis together with the order it was computed under."""

    polynomials: tuple[Polynomial, ...]
    order: MonomialOrder

    def contains(self, poly: Polynomial) -> bool:
        return reduce(poly, self.polynomials, self.order).is_zero()

    def as_ideal(self) -> Ideal:
        return Ideal(self.polynomials, self.order.variables)


# -- conversion helpers -----------------------------------------------------

def _mono_vec(mono: Monomial, idx: dict[str, int], n: int) -> _Vec:
    vec = [0] * n
    for name, exp in mono.pairs:
        pos = idx.get(name)
        if pos is None:
            raise ValueError(f"variable {name!r} not covered by the monomial order")
        vec[pos] = exp
    return tuple(vec)


def _to_vec(poly: Polynomial, order: MonomialOrder) -> _VecPoly:
    idx = order.index()
    n = len(order.variables)
    return {_mono_vec(m, idx, n): c for m, c in poly.items()}


def _from_vec(vp: _VecPoly, order: MonomialOrder) -> Polynomial:
    names = order.variables
    return Polynomial(
        {Monomial(tuple(zip(names, vec))): coeff for vec, coeff in vp.items()}
    )


def _vec_divides(a: _Vec, b: _Vec) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _vec_sub(a: _Vec, b: _Vec) -> _Vec:
    return tuple(x - y for x, y in zip(a, b))


def _vec_lcm(a: _Vec, b: _Vec) -> _Vec:
    return tuple(max(x, y) for x, y in zip(a, b))


def _vec_is_coprime(a: _Vec, b: _Vec) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _axpy(target: _VecPoly, coeff: Fraction, shift: _Vec, source: _VecPoly) -> None:
    """In-place ``target -= coeff * x^shift * source``."""
    for vec, c in source.items():
        key = tuple(x + y for x, y in zip(vec, shift))
        acc = target.get(key)
        total = -coeff * c if acc is None else acc - coeff * c
        if total:
            target[key] = total
        elif acc is not None:
            del target[key]


def _make_primitive(vp: _VecPoly, keyf) -> _VecPoly:
    """Scale to integer coefficients with content 1 and positive leading sign."""
    if not vp:
        return vp
    den = 1
    for c in vp.values():
        den = den * c.denominator // gcd(den, c.denominator)
    num = 0
    for c in vp.values():
        num = gcd(num, abs(c.numerator * (den // c.denominator)))
    scale = Fraction(den, num)
    lead = max(vp, key=keyf)
    if vp[lead] < 0:
        scale = -scale
    return {v: c * scale for v, c in vp.items()}


def _normal_form(vp: _VecPoly, basis: Sequence[tuple[_Vec, Fraction, _VecPoly]], keyf) -> _VecPoly:
    """Full normal form of ``vp`` against ``basis`` entries (lm, lc, poly).

    The current maximum of the work polynomial is tracked with a lazy
    max-heap: monomials are pushed once, stale entries are skipped on pop.
    A monomial popped as the leading term can never re-enter the work
    polynomial (all later contributions are strictly smaller), so each heap
    entry is processed at most once.
    """
    remainder: _VecPoly = {}
    work = dict(vp)
    heap = [(tuple(-x for x in keyf(vec)), vec) for vec in work]
    heapq.heapify(heap)
    while heap:
        _, lead = heapq.heappop(heap)
        coeff = work.get(lead)
        if coeff is None:
            continue
        for lm, lc, poly in basis:
            if _vec_divides(lm, lead):
                shift = _vec_sub(lead, lm)
                factor = coeff / lc
                for vec, c in poly.items():
                    key = tuple(x + y for x, y in zip(vec, shift))
                    acc = work.get(key)
                    total = -factor * c if acc is None else acc - factor * c
                    if total:
                        if acc is None:
                            heapq.heappush(heap, (tuple(-x for x in keyf(key)), key))
                        work[key] = total
                    elif acc is not None:
                        del work[key]
                break
        else:
            remainder[lead] = coeff
            del work[lead]
    return remainder


# -- public operations ------------------------------------------------------

def reduce(poly: Polynomial, basis: Iterable[Polynomial], order: MonomialOrder) -> Polynomial:
    """Remainder of multivariate division of ``poly`` by ``basis``.

    No term of the result is divisible by any leading monomial of the basis,
    and the difference ``poly - result`` lies in the ideal the basis generates.
    """
    keyf = order.key()
    entries = []
    for g in basis:
        if g.is_zero():
            continue
        vg = _to_vec(g, order)
        lm = max(vg, key=keyf)
        entries.append((lm, vg[lm], vg))
    return _from_vec(_normal_form(_to_vec(poly, order), entries, keyf), order)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    keyf = order.key()
    vf, vg = _to_vec(f, order), _to_vec(g, order)
    lf, lg = max(vf, key=keyf), max(vg, key=keyf)
    lcm = _vec_lcm(lf, lg)
    out: _VecPoly = {}
    _axpy(out, Fraction(-1) / vf[lf], _vec_sub(lcm, lf), vf)
    _axpy(out, Fraction(1) / vg[lg], _vec_sub(lcm, lg), vg)
    return _from_vec(out, order)


def buchberger(
    ideal: Ideal,
    order: MonomialOrder | None = None,
    *,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> GroebnerBasis:
    """Reduced Gröbner basis of ``ideal`` under ``order`` (default grevlex).

    Pair selection is the normal strategy (minimal lcm degree, ties broken by
    the order key); useless pairs are dropped by Buchberger's coprimality and
    chain criteria.  Deterministic for fixed input and order.
    """
    if order is None:
        order = ideal.default_order()
    keyf = order.key()

    basis: list[_VecPoly] = []
    lms: list[_Vec] = []
    for g in ideal.generators:
        if g.degree() > max_degree:
            raise ResourceCapError(
                f"generator degree {g.degree()} exceeds the cap of {max_degree}"
            )
        vg = _make_primitive(_to_vec(g, order), keyf)
        if vg:
            basis.append(vg)
            lms.append(max(vg, key=keyf))

    def entries() -> list[tuple[_Vec, Fraction, _VecPoly]]:
        return [(lms[i], basis[i][lms[i]], basis[i]) for i in range(len(basis))]

    pairs: set[tuple[int, int]] = {
        (i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))
    }
    handled: set[tuple[int, int]] = set()
    processed = 0

    def chain_criterion(i: int, j: int, lcm_ij: _Vec) -> bool:
        # Buchberger's second criterion with treated-pair bookkeeping
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _vec_divides(lms[k], lcm_ij):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in handled and pjk in handled:
                    return True
        return False

    while pairs:
        processed += 1
        if processed > max_pairs:
            raise ResourceCapError(f"S-pair budget of {max_pairs} exceeded")
        i, j = min(
            pairs,
            key=lambda p: (
                sum(_vec_lcm(lms[p[0]], lms[p[1]])),
                keyf(_vec_lcm(lms[p[0]], lms[p[1]])),
                p,
            ),
        )
        pairs.discard((i, j))
        handled.add((i, j))
        lcm_ij = _vec_lcm(lms[i], lms[j])
        if _vec_is_coprime(lms[i], lms[j]):
            continue
        if chain_criterion(i, j, lcm_ij):
            continue
        if sum(lcm_ij) > max_degree:
            raise ResourceCapError(f"intermediate degree cap of {max_degree} exceeded")

        spoly: _VecPoly = {}
        _axpy(spoly, Fraction(-1) / basis[i][lms[i]], _vec_sub(lcm_ij, lms[i]), basis[i])
        _axpy(spoly, Fraction(1) / basis[j][lms[j]], _vec_sub(lcm_ij, lms[j]), basis[j])
        remainder = _normal_form(spoly, entries(), keyf)
        if not remainder:
            continue
        remainder = _make_primitive(remainder, keyf)
        lm = max(remainder, key=keyf)
        if sum(lm) > max_degree:
            raise ResourceCapError(f"intermediate degree cap of {max_degree} exceeded")
        new_index = len(basis)
        basis.append(remainder)
        lms.append(lm)
        pairs.update((k, new_index) for k in range(new_index))

    reduced = _inter_reduce(basis, keyf)
    polys = tuple(
        _from_vec(vp, order)
        for vp in sorted(reduced, key=lambda vp: keyf(max(vp, key=keyf)))
    )
    return GroebnerBasis(polys, order)


def _inter_reduce(elements: list[_VecPoly], keyf) -> list[_VecPoly]:
    """Turn a Gröbner basis into the unique reduced one.

    First minimalize (drop elements whose leading monomial is divisible by
    another's), then tail-reduce each survivor against the rest; tail
    reduction never changes leading monomials, so one pass suffices.
    """
    def lead(vp: _VecPoly) -> _Vec:
        return max(vp, key=keyf)

    nonzero = sorted((e for e in elements if e), key=lambda vp: keyf(lead(vp)))
    minimal: list[_VecPoly] = []
    for vp in nonzero:
        lm = lead(vp)
        if not any(_vec_divides(lead(w), lm) for w in minimal):
            minimal.append(vp)
    out = []
    for pos, vp in enumerate(minimal):
        others = [
            (lead(w), w[lead(w)], w) for q, w in enumerate(minimal) if q != pos
        ]
        nf = _normal_form(vp, others, keyf)
        lc = nf[lead(nf)]
        out.append({v: c / lc for v, c in nf.items()})
    return out


def _reduces_to_zero_fraction_free(
    start: dict[_Vec, int], entries: Sequence[tuple[_Vec, int, dict[_Vec, int]]], keyf
) -> bool:
    """Integer pseudo-reduction: scale instead of divide, strip content.

    Zero-ness of the remainder is invariant under the scalings, so this
    decides membership-by-reduction without rational arithmetic.  Content is
    stripped periodically to keep the integers small.
    """
    work = dict(start)
    heap = [(tuple(-x for x in keyf(vec)), vec) for vec in work]
    heapq.heapify(heap)
    steps = 0
    while heap:
        _, lead = heapq.heappop(heap)
        coeff = work.get(lead)
        if coeff is None:
            continue
        for lm, lc, poly in entries:
            if _vec_divides(lm, lead):
                # work := lc * work - coeff * x^shift * poly  (lead cancels)
                shift = _vec_sub(lead, lm)
                if lc != 1:
                    for key in work:
                        work[key] *= lc
                for vec, c in poly.items():
                    key = tuple(x + y for x, y in zip(vec, shift))
                    acc = work.get(key)
                    total = (0 if acc is None else acc) - coeff * c
                    if total:
                        if acc is None:
                            heapq.heappush(heap, (tuple(-x for x in keyf(key)), key))
                        work[key] = total
                    elif acc is not None:
                        del work[key]
                steps += 1
                if steps % 16 == 0 and work:
                    content = 0
                    for c in work.values():
                        content = gcd(content, c)
                    if content > 1:
                        work = {k: c // content for k, c in work.items()}
                break
        else:
            return False
    return True


def verify_groebner(gb: GroebnerBasis) -> bool:
    """Direct re-check: every pairwise S-polynomial reduces to zero."""
    keyf = gb.order.key()
    primitive = [
        _make_primitive(_to_vec(g, gb.order), keyf) for g in gb.polynomials
    ]
    as_int = [{v: int(c) for v, c in vp.items()} for vp in primitive]
    lms = [max(vp, key=keyf) for vp in as_int]
    entries = [(lm, vp[lm], vp) for lm, vp in zip(lms, as_int)]
    for i in range(len(as_int)):
        for j in range(i + 1, len(as_int)):
            lcm = _vec_lcm(lms[i], lms[j])
            spoly: dict[_Vec, int] = {}
            # lc_j * x^(lcm-lm_i) * f_i - lc_i * x^(lcm-lm_j) * f_j
            for sign, src, other in ((1, i, j), (-1, j, i)):
                shift = _vec_sub(lcm, lms[src])
                scale = sign * entries[other][1]
                for vec, c in as_int[src].items():
                    key = tuple(x + y for x, y in zip(vec, shift))
                    total = spoly.get(key, 0) + scale * c
                    if total:
                        spoly[key] = total
                    else:
                        spoly.pop(key, None)
            if not _reduces_to_zero_fraction_free(spoly, entries, keyf):
                return False
    return True


@lru_cache(maxsize=256)
def _cached_basis(ideal: Ideal, order: MonomialOrder) -> GroebnerBasis:
    return buchberger(ideal, order)


def groebner_basis(ideal: Ideal, order: MonomialOrder | None = None) -> GroebnerBasis:
    """Cached reduced Gröbner basis (ideals and orders are immutable)."""
    if order is None:
        order = ideal.default_order()
    return _cached_basis(ideal, order)


def ideal_member(poly: Polynomial, ideal: Ideal, order: MonomialOrder | None = None) -> bool:
    gb = groebner_basis(ideal, order)
    return gb.contains(poly)


def ideal_equal(left: Ideal, right: Ideal, order: MonomialOrder | None = None) -> bool:
    if set(left.variables) != set(right.variables):
        raise ValueError("ideal comparison requires the same ambient variables")
    gl = groebner_basis(left, order)
    gr = groebner_basis(right, order if order is not None else left.default_order())
    return all(gr.contains(g) for g in left.generators) and all(
        gl.contains(g) for g in right.generators
    )


def containment_report(left: Ideal, right: Ideal, order: MonomialOrder | None = None) -> dict:
    """Per-generator membership in both directions; basis for equality diagnostics."""
    gl = groebner_basis(left, order)
    gr = groebner_basis(right, order if order is not None else left.default_order())
    left_in_right = {str(g): gr.contains(g) for g in left.generators}
    right_in_left = {str(g): gl.contains(g) for g in right.generators}
    return {
        "left_subset_right": all(left_in_right.values()),
        "right_subset_left": all(right_in_left.values()),
        "left_generators_in_right": left_in_right,
        "right_generators_in_left": right_in_left,
    }


def eliminate(ideal: Ideal, drop: Iterable[str], order: MonomialOrder | None = None) -> Ideal:
    """Generators of the elimination ideal in the kept variables."""
    drop_set = set(drop)
    keep = tuple(v for v in ideal.variables if v not in drop_set)
    dropped = tuple(v for v in ideal.variables if v in drop_set)
    if not dropped:
        return ideal
    if order is None:
        order = MonomialOrder.elimination(dropped, keep)
    else:
        if order.kind == "block":
            front = set(order.variables[: order.block_size])
        elif order.kind == "lex":
            front = set(order.variables[: len(dropped)])
        else:
            front = None
        if front != drop_set:
            raise ValueError("elimination order must rank dropped variables above kept ones")
    gb = buchberger(ideal, order)
    keep_set = set(keep)
    kept_polys = tuple(g for g in gb.polynomials if g.variables() <= keep_set)
    return Ideal(kept_polys, keep)


# -- univariate helpers and zero-dimensional solving -------------------------

def univariate_coefficients(poly: Polynomial, name: str) -> list[Fraction]:
    """Coefficient list (ascending) of a polynomial univariate in ``name``."""
    if not poly.variables() <= {name}:
        raise ValueError(f"polynomial is not univariate in {name!r}: {poly}")
    coeffs = [Fraction(0)] * (poly.degree() + 1)
    for mono, coeff in poly.items():
        coeffs[mono.exponent(name)] = coeff
    return coeffs


def _uni_trim(c: list[Fraction]) -> list[Fraction]:
    while c and not c[-1]:
        c.pop()
    return c


def _uni_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and any(a):
        _uni_trim(a)
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        q[shift] = factor
        for i, bc in enumerate(b):
            a[shift + i] -= factor * bc
        _uni_trim(a)
    return q, a


def _uni_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _uni_trim(list(a)), _uni_trim(list(b))
    while b:
        _, r = _uni_divmod(a, b)
        a, b = b, _uni_trim(r)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def squarefree_part(poly: Polynomial, name: str) -> Polynomial:
    """The square-free part of a univariate polynomial (monic)."""
    coeffs = univariate_coefficients(poly, name)
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    g = _uni_gcd(coeffs, deriv)
    q, r = _uni_divmod(coeffs, g)
    assert not any(r)
    lead = q[-1]
    q = [c / lead for c in q]
    x = Polynomial.variable(name)
    return sum((x ** i).scale(c) for i, c in enumerate(q) if c) or Polynomial.zero()


_DIVISOR_CAP = 10**12


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n > _DIVISOR_CAP:
        raise GroebnerError(f"coefficient {n} too large for rational root search")
    out = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


def _deflate(ints: list[int], root: Fraction) -> list[int]:
    """Divide the ascending integer coefficient list by (x - root), re-cleared."""
    descending = ints[::-1]
    quotient = [Fraction(descending[0])]
    for c in descending[1:-1]:
        quotient.append(quotient[-1] * root + c)
    den = 1
    for c in quotient:
        den = den * c.denominator // gcd(den, c.denominator)
    return [int(c * den) for c in quotient[::-1]]


def rational_roots(poly: Polynomial, name: str) -> tuple[list[Fraction], Polynomial | None]:
    """All rational roots (with multiplicity via deflation) and the rootless cofactor.

    Returns ``(roots, residual)`` where ``residual`` is the square-free part
    of the factor with no rational roots, or None when the polynomial splits
    completely over the rationals.
    """
    coeffs = _uni_trim(univariate_coefficients(poly, name))
    if not coeffs:
        raise ValueError("the zero polynomial has every value as a root")
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    roots: list[Fraction] = []
    while len(ints) > 1 and ints[0] == 0:
        roots.append(Fraction(0))
        ints = ints[1:]

    def find_root(ints: list[int]) -> Fraction | None:
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                if gcd(p, q) != 1:
                    continue
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    val = Fraction(0)
                    for c in reversed(ints):
                        val = val * cand + c
                    if val == 0:
                        return cand
        return None

    while len(ints) > 1:
        root = find_root(ints)
        if root is None:
            break
        roots.append(root)
        ints = _deflate(ints, root)
    roots.sort()
    if len(ints) <= 1:
        return roots, None
    x = Polynomial.variable(name)
    residual = sum((x ** i).scale(Fraction(c)) for i, c in enumerate(ints) if c)
    return roots, squarefree_part(residual, name)


@dataclass(frozen=True)
class ZeroDimensionalSolution:
    """Rational points of a zero-dimensional ideal plus unsolved residuals."""

    points: tuple[dict, ...]
    residuals: tuple[Polynomial, ...] = field(default_factory=tuple)

    @property
    def complete(self) -> bool:
        return not self.residuals


def _is_zero_dimensional(gb: GroebnerBasis) -> bool:
    # standard criterion: some leading monomial is a pure power of each variable
    keyf = gb.order.key()
    idx = gb.order.index()
    n = len(gb.order.variables)
    lead_vecs = [_mono_vec(gb.order.leading_monomial(g), idx, n) for g in gb.polynomials]
    for pos in range(n):
        if not any(
            vec[pos] > 0 and all(vec[q] == 0 for q in range(n) if q != pos)
            for vec in lead_vecs
        ):
            return False
    return True


def solve_zero_dimensional(ideal: Ideal) -> ZeroDimensionalSolution:
    """Solve by lex triangularization, rational-root extraction, back-substitution.

    Raises :class:`NotZeroDimensionalError` (carrying the grevlex basis) when
    the variety is not finite.  Irreducible univariate factors without
    rational roots are reported as residuals instead of being solved.
    """
    gb = groebner_basis(ideal)
    if any(g == Polynomial.constant(1) for g in gb.polynomials):
        return ZeroDimensionalSolution(points=())
    if not _is_zero_dimensional(gb):
        raise NotZeroDimensionalError(gb)

    residuals: list[Polynomial] = []

    def solve_rec(gens: list[Polynomial], names: tuple[str, ...]) -> list[dict]:
        order = MonomialOrder.lex(names)
        sub_gb = buchberger(Ideal(tuple(gens), names), order)
        polys = sub_gb.polynomials
        if any(p == Polynomial.constant(1) for p in polys):
            return []
        last = names[-1]
        eliminant = None
        for p in polys:
            if p.variables() <= {last}:
                eliminant = p
                break
        if eliminant is None:
            raise NotZeroDimensionalError(sub_gb)
        roots, residual = rational_roots(eliminant, last)
        if residual is not None:
            residuals.append(residual)
        points = []
        for root in roots:
            if len(names) == 1:
                points.append({last: root})
                continue
            substituted = [
                p.substitute({last: Polynomial.constant(root)}) for p in polys
            ]
            substituted = [p for p in substituted if not p.is_zero()]
            for partial in solve_rec(substituted, names[:-1]):
                partial[last] = root
                points.append(partial)
        return points

    points = solve_rec(list(ideal.generators), tuple(ideal.variables))
    ordered = tuple(
        sorted(points, key=lambda pt: tuple(pt[v] for v in ideal.variables))
    )
    return ZeroDimensionalSolution(points=ordered, residuals=tuple(residuals))
