"""Exact arithmetic: arbitrary-precision rationals and sparse multivariate polynomials.

Coefficients are :class:`fractions.Fraction`, which is always kept in canonical
form (reduced, positive denominator).  Polynomials are immutable sparse term
maps ``{Monomial: Fraction}``; two polynomials are equal exactly when their
term maps are equal, independently of any ambient variable list.

The accepted text grammar: integer and ``p/q`` literals, variable names
matching ``[a-z][a-z0-9]*``, operators ``+ - * / ^`` and parentheses.
Implicit multiplication is a syntax error.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Rational = Fraction

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational literal, ``"p"`` or ``"p/q"``."""
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    """Render a rational as ``"p"`` or ``"p/q"`` (round-trips via parse_rational)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class ParseError(ValueError):
    """Syntax error in a polynomial expression; carries the 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EvaluationError(KeyError):
    """A variable required for evaluation was not assigned."""

    def __init__(self, name: str):
        super().__init__(f"no value assigned to variable {name!r}")
        self.name = name


class Monomial:
    """A power product of variables with positive integer exponents.

    Stored as a sorted tuple of (name, exponent) pairs with all exponents > 0,
    so equal monomials always have identical representations.
    """

    __slots__ = ("_pairs", "_hash")

    def __init__(self, exponents: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        merged: dict[str, int] = {}
        for name, exp in items:
            if exp < 0:
                raise ValueError(f"negative exponent for {name!r}")
            if exp:
                merged[name] = merged.get(name, 0) + int(exp)
        self._pairs = tuple(sorted(merged.items()))
        self._hash = hash(self._pairs)

    @staticmethod
    def one() -> "Monomial":
        return _MONOMIAL_ONE

    @staticmethod
    def of(name: str, exp: int = 1) -> "Monomial":
        return Monomial(((name, exp),))

    @property
    def pairs(self) -> tuple[tuple[str, int], ...]:
        return self._pairs

    def exponent(self, name: str) -> int:
        for n, e in self._pairs:
            if n == name:
                return e
        return 0

    def degree(self) -> int:
        return sum(e for _, e in self._pairs)

    def variables(self) -> frozenset[str]:
        return frozenset(n for n, _ in self._pairs)

    def is_one(self) -> bool:
        return not self._pairs

    def __mul__(self, other: "Monomial") -> "Monomial":
        merged = dict(self._pairs)
        for n, e in other._pairs:
            merged[n] = merged.get(n, 0) + e
        return Monomial(merged)

    def divides(self, other: "Monomial") -> bool:
        it = dict(other._pairs)
        return all(it.get(n, 0) >= e for n, e in self._pairs)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        merged = dict(self._pairs)
        for n, e in other._pairs:
            merged[n] = merged.get(n, 0) - e
        return Monomial(merged)  # raises on negative exponents

    def lcm(self, other: "Monomial") -> "Monomial":
        merged = dict(self._pairs)
        for n, e in other._pairs:
            merged[n] = max(merged.get(n, 0), e)
        return Monomial(merged)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self._pairs == other._pairs

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self._pairs:
            return "1"
        return "*".join(n if e == 1 else f"{n}^{e}" for n, e in self._pairs)

    def __repr__(self) -> str:
        return f"Monomial({dict(self._pairs)!r})"


_MONOMIAL_ONE = Monomial()


class Polynomial:
    """Immutable sparse multivariate polynomial over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | Iterable[tuple[Monomial, Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            coeff = Fraction(coeff)
            if coeff:
                acc = clean.get(mono)
                total = coeff if acc is None else acc + coeff
                if total:
                    clean[mono] = total
                elif acc is not None:
                    del clean[mono]
        self._terms = clean
        self._hash: int | None = None

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return _POLY_ZERO

    @staticmethod
    def constant(value) -> "Polynomial":
        return Polynomial({_MONOMIAL_ONE: Fraction(value)})

    @staticmethod
    def variable(name: str) -> "Polynomial":
        return Polynomial({Monomial.of(name): Fraction(1)})

    # -- inspection ----------------------------------------------------

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def term_count(self) -> int:
        return len(self._terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get(_MONOMIAL_ONE, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m.is_one() for m in self._terms)

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1 by convention."""
        if not self._terms:
            return -1
        return max(m.degree() for m in self._terms)

    def variables(self) -> frozenset[str]:
        out: set[str] = set()
        for m in self._terms:
            out.update(m.variables())
        return frozenset(out)

    # -- ring operations -----------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self._terms)
        for m, c in other._terms.items():
            acc = merged.get(m)
            total = c if acc is None else acc + c
            if total:
                merged[m] = total
            elif acc is not None:
                del merged[m]
        return _wrap(merged)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return _wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return -(self - other)

    def __mul__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                acc = out.get(m)
                total = c1 * c2 if acc is None else acc + c1 * c2
                if total:
                    out[m] = total
                elif acc is not None:
                    del out[m]
        return _wrap(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Polynomial.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, value) -> "Polynomial":
        value = Fraction(value)
        if not value:
            return _POLY_ZERO
        return _wrap({m: c * value for m, c in self._terms.items()})

    # -- evaluation and substitution -------------------------------------

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        """Exact value at a rational point; every occurring variable must be assigned."""
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            val = coeff
            for name, exp in mono.pairs:
                if name not in point:
                    raise EvaluationError(name)
                val *= Fraction(point[name]) ** exp
            total += val
        return total

    def substitute(self, images: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Simultaneous substitution of polynomials for variables."""
        result = Polynomial.zero()
        for mono, coeff in self._terms.items():
            term = Polynomial.constant(coeff)
            for name, exp in mono.pairs:
                base = images.get(name)
                if base is None:
                    base = Polynomial.variable(name)
                term = term * base ** exp
            result = result + term
        return result

    # -- equality, hashing, printing -------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in the canonical display order (graded, then lexicographic)."""
        def key(item):
            mono, _ = item
            return (-mono.degree(), tuple((n, -e) for n, e in mono.pairs))
        return sorted(self._terms.items(), key=key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for mono, coeff in self.sorted_terms():
            if mono.is_one():
                body = format_rational(abs(coeff))
            elif abs(coeff) == 1:
                body = str(mono)
            else:
                body = f"{format_rational(abs(coeff))}*{mono}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    @staticmethod
    def parse(text: str, variables: Iterable[str] | None = None) -> "Polynomial":
        return parse_polynomial(text, variables)


_POLY_ZERO = Polynomial()


def _wrap(terms: dict[Monomial, Fraction]) -> Polynomial:
    poly = Polynomial.__new__(Polynomial)
    poly._terms = terms
    poly._hash = None
    return poly


def _coerce(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(value)
    return NotImplemented


# -- parser ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<name>[a-z][a-z0-9]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            where = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[where]!r}", where)
        if m.group("number"):
            tokens.append(("number", m.group("number"), m.start("number")))
        elif m.group("name"):
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive-descent parser for the polynomial expression grammar."""

    def __init__(self, text: str, variables: frozenset[str] | None):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0
        self.variables = variables

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def parse(self) -> Polynomial:
        poly = self.expression()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"expected operator, found {value!r}", pos)
        return poly

    def expression(self) -> Polynomial:
        kind, value, _ = self.peek()
        negate = False
        if kind == "op" and value in "+-":
            self.advance()
            negate = value == "-"
        poly = self.term()
        if negate:
            poly = -poly
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.term()
                poly = poly - rhs if value == "-" else poly + rhs
            else:
                return poly

    def term(self) -> Polynomial:
        poly = self.factor()
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                poly = poly * self.factor()
            elif kind == "op" and value == "/":
                self.advance()
                divisor = self.factor()
                if not divisor.is_constant() or divisor.is_zero():
                    raise ParseError("division only by a nonzero integer constant", pos)
                poly = poly.scale(1 / divisor.constant_term())
            else:
                return poly

    def factor(self) -> Polynomial:
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.advance()
            inner = self.factor()
            return -inner if value == "-" else inner
        poly = self.primary()
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value == "^":
                self.advance()
                ekind, evalue, epos = self.advance()
                if ekind != "number":
                    raise ParseError("exponent must be a nonnegative integer", epos)
                poly = poly ** int(evalue)
            else:
                return poly

    def primary(self) -> Polynomial:
        kind, value, pos = self.advance()
        if kind == "number":
            return Polynomial.constant(int(value))
        if kind == "name":
            if self.variables is not None and value not in self.variables:
                raise ParseError(f"unknown variable {value!r}", pos)
            return Polynomial.variable(value)
        if kind == "op" and value == "(":
            poly = self.expression()
            ckind, cvalue, cpos = self.advance()
            if not (ckind == "op" and cvalue == ")"):
                raise ParseError("expected ')'", cpos)
            return poly
        raise ParseError(f"expected a number, variable or '(', found {value!r}" if value else "unexpected end of input", pos)


def parse_polynomial(text: str, variables: Iterable[str] | None = None) -> Polynomial:
    """Parse an expression into canonical form.

    When ``variables`` is given, any name outside it is rejected (reported
    with the offending name and position).
    """
    allowed = frozenset(variables) if variables is not None else None
    return _Parser(text, allowed).parse()
