"""Exact multivariate Laurent polynomials over the integers.

A ``LaurentPoly`` in ``m`` variables ``a1..am`` is a finite map from exponent
vectors (tuples of ints, possibly negative) to nonzero integer coefficients.
Values are immutable; every operation returns a new polynomial.
"""
from __future__ import annotations

import itertools
import math
import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import MismatchedContext, NotDivisible, ParseError, SearchBudgetExceeded, Undefined

Monomial = tuple  # tuple[int, ...]


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(u, v))


class LaurentPoly:
    __slots__ = ("m", "_terms", "_hash")

    def __init__(self, m: int, terms: Mapping[Sequence[int], int] | None = None):
        if m < 1:
            raise ValueError("variable count must be >= 1")
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(x) for x in e)
                if len(e) != m:
                    raise ValueError(f"exponent {e} does not have length {m}")
                if c:
                    clean[e] = clean.get(e, 0) + int(c)
            clean = {e: c for e, c in clean.items() if c}
        self.m = m
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, m: int, terms: dict) -> "LaurentPoly":
        # caller guarantees: correct lengths, no zero coefficients
        p = object.__new__(cls)
        p.m = m
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, m: int) -> "LaurentPoly":
        return cls._raw(m, {})

    @classmethod
    def const(cls, m: int, c: int) -> "LaurentPoly":
        return cls._raw(m, {(0,) * m: c} if c else {})

    @classmethod
    def one(cls, m: int) -> "LaurentPoly":
        return cls.const(m, 1)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        exps = tuple(exps)
        return cls._raw(len(exps), {exps: coeff} if coeff else {})

    @classmethod
    def var(cls, m: int, i: int, power: int = 1) -> "LaurentPoly":
        """The monomial a_i^power, with 1-based ``i``."""
        e = [0] * m
        e[i - 1] = power
        return cls._raw(m, {tuple(e): 1})

    # basic protocol

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.m == other.m and self._terms == other._terms
        if isinstance(other, int):
            return self == LaurentPoly.const(self.m, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.m, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    def _check(self, other: "LaurentPoly"):
        if self.m != other.m:
            raise MismatchedContext(f"variable counts differ: {self.m} vs {other.m}")

    def _coerce(self, other):
        if isinstance(other, int):
            return LaurentPoly.const(self.m, other)
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        return NotImplemented

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.m, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.m)
            return LaurentPoly._raw(self.m, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) == 1:
            (e2, c2), = other._terms.items()
            return self.shift(e2) * c2 if c2 != 1 else self.shift(e2)
        out = defaultdict(int)
        rhs = list(other._terms.items())
        if self.m == 1:
            for (x,), c1 in self._terms.items():
                for (y,), c2 in rhs:
                    out[(x + y,)] += c1 * c2
        elif self.m == 2:
            for (x0, x1), c1 in self._terms.items():
                for (y0, y1), c2 in rhs:
                    out[(x0 + y0, x1 + y1)] += c1 * c2
        else:
            for e1, c1 in self._terms.items():
                for e2, c2 in rhs:
                    out[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
        return LaurentPoly._raw(self.m, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise ValueError("negative powers only exist for units")
            (e, c), = self._terms.items()
            return LaurentPoly._raw(self.m, {tuple(x * k for x in e): c ** -k})
        result = LaurentPoly.one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial a^exps."""
        if not any(exps):
            return self
        if self.m == 1:
            d = exps[0]
            return LaurentPoly._raw(1, {(e[0] + d,): c for e, c in self._terms.items()})
        if self.m == 2:
            d0, d1 = exps
            return LaurentPoly._raw(2, {(e[0] + d0, e[1] + d1): c for e, c in self._terms.items()})
        return LaurentPoly._raw(
            self.m, {tuple(x + y for x, y in zip(e, exps)): c for e, c in self._terms.items()})

    # predicates and simple invariants

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """Units of the Laurent ring are exactly the signed monomials."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def is_polynomial(self) -> bool:
        return all(x >= 0 for e in self._terms for x in e)

    def min_exponents(self) -> tuple:
        if not self._terms:
            return (0,) * self.m
        return tuple(min(col) for col in zip(*self._terms))

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def inverse_unit(self) -> "LaurentPoly":
        if not self.is_unit():
            raise NotDivisible(f"{self} is not a unit")
        (e, c), = self._terms.items()
        return LaurentPoly._raw(self.m, {tuple(-x for x in e): c})

    def substitute_monomials(self, images: Sequence[Sequence[int]]) -> "LaurentPoly":
        """Ring map sending variable i to the monomial with exponent vector ``images[i]``.

        The target variable count is ``len(images[0])``.
        """
        k = len(images[0])
        out = defaultdict(int)
        for e, c in self._terms.items():
            f = [0] * k
            for ei, img in zip(e, images):
                if ei:
                    for j in range(k):
                        f[j] += ei * img[j]
            out[tuple(f)] += c
        return LaurentPoly._raw(k, {e: c for e, c in out.items() if c})


# public operations


def poly_arith(p: LaurentPoly, q: LaurentPoly, op: str) -> LaurentPoly:
    p._check(q)
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def deglex_key(e: Sequence[int]):
    # total degree first, then lex with a1 > a2 > ... > am
    return (sum(e), tuple(e))


def deglex_leading_term(p: LaurentPoly) -> tuple[tuple, int]:
    if p.is_zero():
        raise ValueError("zero polynomial has no leading term")
    if not p.is_polynomial():
        raise ValueError("deglex order is defined on ordinary polynomials only")
    e = max(p._terms, key=deglex_key)
    return e, p._terms[e]


def sorted_terms(p: LaurentPoly) -> list[tuple[tuple, int]]:
    """Terms in descending deglex order."""
    return sorted(p._terms.items(), key=lambda t: deglex_key(t[0]), reverse=True)


@dataclass(frozen=True)
class CanonicalFraction:
    numerator: LaurentPoly
    denominator: tuple

    def reconstitute(self) -> LaurentPoly:
        return self.numerator.shift(tuple(-b for b in self.denominator))


def canonical_fraction(q: LaurentPoly) -> CanonicalFraction:
    """Write q = P / a^beta with P an ordinary polynomial and beta minimal."""
    beta = tuple(max(0, -x) for x in q.min_exponents())
    return CanonicalFraction(q.shift(beta), beta)


def binomial_divide(q: LaurentPoly, sigma: Sequence[int]) -> LaurentPoly:
    """Exact quotient of q by (a^sigma - 1); raises NotDivisible if there is none.

    Exponents are grouped into cosets of the line Z*sigma.  Each exponent e is
    written e = r + t*sigma with 0 <= r.sigma < sigma.sigma; q is divisible iff
    every coset's coefficients sum to zero, and the quotient's coefficients
    along a coset are the negated prefix sums.
    """
    sigma = tuple(sigma)
    if len(sigma) != q.m:
        raise MismatchedContext("sigma has the wrong length")
    ss = _dot(sigma, sigma)
    if ss == 0:
        raise ValueError("sigma must be a nonzero exponent vector")
    cosets: dict = defaultdict(dict)
    for e, c in q._terms.items():
        t = _dot(e, sigma) // ss
        r = tuple(x - t * s for x, s in zip(e, sigma))
        cosets[r][t] = c
    out = {}
    for r, line in cosets.items():
        ts = sorted(line)
        if sum(line.values()) != 0:
            raise NotDivisible(f"{q} is not divisible by a^{sigma} - 1")
        running = 0
        for t0, t1 in zip(ts, ts[1:]):
            running += line[t0]
            if running:
                for t in range(t0, t1):
                    out[tuple(x + t * s for x, s in zip(r, sigma))] = -running
    return LaurentPoly._raw(q.m, out)


def evaluate(p: LaurentPoly, alpha: Sequence[int]) -> Fraction:
    """Substitute a_i -> alpha_i.  Raises Undefined on division by zero."""
    alpha = tuple(alpha)
    if len(alpha) != p.m:
        raise MismatchedContext("point has the wrong dimension")
    total = Fraction(0)
    for e, c in p._terms.items():
        v = Fraction(c)
        for x, a in zip(e, alpha):
            if x < 0 and a == 0:
                raise Undefined(f"{p} has a pole at {alpha}")
            if x:
                v *= Fraction(a) ** x
        total += v
    return total


def y_substitution(p: LaurentPoly, max_degree: int | None = None) -> dict:
    """Rewrite an ordinary polynomial in the variables y_i = a_i - 1.

    Returns a dict from y-exponent vectors to nonzero coefficients.  With
    ``max_degree`` only terms of total y-degree up to it are produced, which
    keeps large exponents cheap.
    """
    if not p.is_polynomial():
        raise ValueError("y-substitution expects an ordinary polynomial")
    out = defaultdict(int)
    for e, c in p._terms.items():
        partial = {(): c}
        for x in e:
            nxt = {}
            for f, v in partial.items():
                top = x if max_degree is None else min(x, max_degree - sum(f))
                for k in range(top + 1):
                    nxt[f + (k,)] = v * math.comb(x, k)
            partial = nxt
        for f, v in partial.items():
            out[f] += v
    return {f: v for f, v in out.items() if v}


def delta_degree(q: LaurentPoly) -> float:
    """Largest k with q in the k-th power of the augmentation ideal (inf for 0)."""
    if q.is_zero():
        return math.inf
    ys = y_substitution(canonical_fraction(q).numerator)
    return min(sum(f) for f in ys)


def in_delta_power(q: LaurentPoly, k: int) -> bool:
    """Decide q in the k-th power of the augmentation ideal."""
    if q.is_zero() or k <= 0:
        return True
    return not y_substitution(canonical_fraction(q).numerator, max_degree=k - 1)


def homogeneous_y_part(q: LaurentPoly, degree: int) -> dict:
    """Degree-``degree`` part of the y-expansion of q's numerator."""
    if q.is_zero():
        return {}
    ys = y_substitution(canonical_fraction(q).numerator, max_degree=degree)
    return {f: v for f, v in ys.items() if sum(f) == degree}


def discriminate(polys: Sequence[LaurentPoly], budget: int = 1_000_000) -> tuple:
    """Find a point alpha (all coordinates nonzero) separating the given polynomials.

    Boxes {1..B}^m are searched with B doubling.  Positive points suffice:
    a nonzero polynomial of degree < B in each variable cannot vanish on the
    whole box, so the search always terminates for distinct inputs.
    """
    polys = list(polys)
    if len(set(polys)) != len(polys):
        raise ValueError("inputs must be pairwise distinct")
    if not polys:
        raise ValueError("nothing to discriminate")
    m = polys[0].m
    for p in polys:
        polys[0]._check(p)
    tried = 0
    prev, B = 0, 1
    while True:
        for alpha in itertools.product(range(1, B + 1), repeat=m):
            if max(alpha) <= prev:
                continue
            tried += 1
            if tried > budget:
                raise SearchBudgetExceeded(f"no separating point after {budget} candidates")
            values = [evaluate(p, alpha) for p in polys]
            if len(set(values)) == len(values):
                return alpha
        prev, B = B, 2 * B


# text format

_VAR_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def default_names(m: int) -> tuple:
    return tuple(f"a{i}" for i in range(1, m + 1))


def _format_monomial(e, names) -> str:
    parts = []
    for x, name in zip(e, names):
        if x == 1:
            parts.append(name)
        elif x:
            parts.append(f"{name}^{x}")
    return "*".join(parts)


def _format_sum(terms, names) -> str:
    out = []
    for idx, (e, c) in enumerate(terms):
        mono = _format_monomial(e, names)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out) if out else "0"


def format_poly(p: LaurentPoly, names: Sequence[str] | None = None) -> str:
    """Canonical text: numerator terms in descending deglex, then ``/ monomial``."""
    names = names or default_names(p.m)
    frac = canonical_fraction(p)
    body = _format_sum(sorted_terms(frac.numerator), names)
    if not any(frac.denominator):
        return body
    return f"({body}) / {_format_monomial(frac.denominator, names)}"


class _Parser:
    def __init__(self, text: str, m: int, names: Sequence[str]):
        self.tokens = re.findall(r"\d+|[A-Za-z_][A-Za-z_0-9]*|[-+*/^()]|\S", text)
        self.pos = 0
        self.m = m
        self.index = {name: i for i, name in enumerate(names)}
        self.text = text

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'token'} in {self.text!r}")
        self.pos += 1
        return tok

    def parse(self) -> LaurentPoly:
        if not self.tokens:
            raise ParseError("empty polynomial")
        p = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r} in {self.text!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        # "/" takes the whole remaining product as divisor: x / a1*a2 = x / (a1*a2)
        p = self.unary()
        while self.peek() == "*":
            self.take()
            p = p * self.unary()
        if self.peek() == "/":
            self.take()
            q = self.unary()
            while self.peek() == "*":
                self.take()
                q = q * self.unary()
            if not q.is_unit():
                raise ParseError("division is only allowed by a signed monomial")
            p = p * q.inverse_unit()
            if self.peek() == "/":
                raise ParseError("chained division is ambiguous; use one denominator")
        return p

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            tok = self.take()
            if not tok.isdigit():
                raise ParseError(f"bad exponent {tok!r}")
            k = sign * int(tok)
            if k < 0 and not base.is_unit():
                raise ParseError("negative exponent on a non-monomial")
            base = base ** k
        return base

    def atom(self):
        tok = self.take()
        if tok.isdigit():
            return LaurentPoly.const(self.m, int(tok))
        if tok == "(":
            p = self.expr()
            self.take(")")
            return p
        if _VAR_RE.fullmatch(tok):
            if tok not in self.index:
                raise ParseError(f"unknown variable {tok!r}")
            return LaurentPoly.var(self.m, self.index[tok] + 1)
        raise ParseError(f"unexpected token {tok!r}")


def parse_poly(text: str, m: int, names: Sequence[str] | None = None) -> LaurentPoly:
    return _Parser(text, m, names or default_names(m)).parse()
