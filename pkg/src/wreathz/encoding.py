"""Integer codes: Cantor pairing, tuple codes and the code of a Laurent polynomial.

Conventions (fixed so codes are reproducible bit for bit):

* ``pair(x, y) = (x+y)(x+y+1)/2 + y``
* integers enter tuple codes through the zigzag map ``z >= 0 -> 2z``, ``z < 0 -> -2z-1``
* a tuple ``(z1..zk)`` is folded right to left with ``pair`` and the result is
  paired with ``k - 1`` (length first)
* ``nu(Q) = pair(tuple_encode(u_Q), tuple_encode(beta))`` where ``Q = P / a^beta``
  in lowest terms and ``u_Q`` lists ``(coeff, e1..em)`` for the terms of ``P`` in
  descending deglex order.  The zero polynomial uses the single pseudo-term
  ``(0, 0..0)``.
"""
from __future__ import annotations

from typing import Sequence

from gmpy2 import isqrt, mpz

from .errors import NotACode
from .laurent import LaurentPoly, canonical_fraction, deglex_key, sorted_terms


def pair(x: int, y: int) -> int:
    if x < 0 or y < 0:
        raise ValueError("pair is defined on natural numbers")
    # codes nest, so operands grow to hundreds of kilobits; gmpy2 keeps this fast
    s = mpz(x) + y
    return int(s * (s + 1) // 2 + y)


def unpair(z: int) -> tuple[int, int]:
    if z < 0:
        raise ValueError("unpair is defined on natural numbers")
    z = mpz(z)
    w = (isqrt(8 * z + 1) - 1) // 2
    y = z - w * (w + 1) // 2
    return int(w - y), int(y)


def zigzag(z: int) -> int:
    return 2 * z if z >= 0 else -2 * z - 1


def unzigzag(k: int) -> int:
    return k // 2 if k % 2 == 0 else -(k + 1) // 2


def tuple_encode(v: Sequence[int]) -> int:
    v = list(v)
    if not v:
        raise ValueError("tuple_encode needs a nonempty tuple")
    acc = zigzag(v[-1])
    for z in reversed(v[:-1]):
        acc = pair(zigzag(z), acc)
    return pair(len(v) - 1, acc)


def tuple_decode(k: int) -> tuple:
    extra, acc = unpair(k)
    out = []
    for _ in range(extra):
        head, acc = unpair(acc)
        out.append(unzigzag(head))
    out.append(unzigzag(acc))
    return tuple(out)


def nu_encode(q: LaurentPoly) -> int:
    frac = canonical_fraction(q)
    if q.is_zero():
        u = [0] * (q.m + 1)
    else:
        u = []
        for e, c in sorted_terms(frac.numerator):
            u.append(c)
            u.extend(e)
    return pair(tuple_encode(u), tuple_encode(frac.denominator))


def nu_decode(k: int, m: int | None = None) -> LaurentPoly:
    """Inverse of ``nu_encode``; raises NotACode unless ``k`` is a canonical code.

    If ``m`` is given the code must describe a polynomial in exactly ``m`` variables.
    """
    if not isinstance(k, int) or k < 0:
        raise NotACode(f"{k!r} is not a natural number")
    ku, kv = unpair(k)
    u, beta = tuple_decode(ku), tuple_decode(kv)
    width = len(beta)
    if m is not None and width != m:
        raise NotACode(f"code {k} has {width} variables, expected {m}")
    if any(b < 0 for b in beta):
        raise NotACode(f"code {k}: negative denominator exponent")
    if len(u) % (width + 1):
        raise NotACode(f"code {k}: term list has the wrong arity")
    terms = [(tuple(u[i + 1:i + 1 + width]), u[i]) for i in range(0, len(u), width + 1)]
    if len(terms) == 1 and terms[0][1] == 0:
        if any(terms[0][0]) or any(beta):
            raise NotACode(f"code {k}: malformed zero polynomial")
        return LaurentPoly.zero(width)
    for e, c in terms:
        if c == 0:
            raise NotACode(f"code {k}: zero coefficient")
        if any(x < 0 for x in e):
            raise NotACode(f"code {k}: negative exponent in numerator")
    keys = [deglex_key(e) for e, _ in terms]
    if any(k1 <= k2 for k1, k2 in zip(keys, keys[1:])):
        raise NotACode(f"code {k}: terms not strictly descending")
    for i, b in enumerate(beta):
        if b > 0 and all(e[i] > 0 for e, _ in terms):
            raise NotACode(f"code {k}: denominator not minimal")
    numerator = LaurentPoly(width, dict(terms))
    return numerator.shift(tuple(-b for b in beta))


def is_code(k: int, m: int | None = None) -> bool:
    try:
        nu_decode(k, m)
    except NotACode:
        return False
    return True
