"""The two interpretation codes and their coordinate maps.

* ``delta_encode`` / ``delta_decode``: G inside Z via integer tuples
  ``(gamma_1..gamma_m, nu(P_1)..nu(P_n))``.  Codes are natural numbers and
  not every natural number is a code, so the domain carries a decidable
  membership test.
* ``IntAsPower``: Z inside G on the cyclic subgroup <a>, with addition,
  divisibility and multiplication realised on powers of ``a``.
* ``lambda_G``: the composite coordinate map, from powers of c1 back to G,
  for any basis (c, u).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .definable import Basis, discrete_log, div_witness, exp_G
from .encoding import nu_decode, nu_encode
from .errors import BaseMismatch, NotACode, NotInDomain
from .wreath import GroupContext, WreathElement, mul


def delta_encode(g: WreathElement) -> tuple:
    return tuple(g.top) + tuple(nu_encode(p) for p in g.bottom)


def in_delta_domain(ctx: GroupContext, t: Sequence[int]) -> bool:
    try:
        delta_decode(ctx, t)
    except NotInDomain:
        return False
    return True


def delta_decode(ctx: GroupContext, t: Sequence[int]) -> WreathElement:
    t = tuple(t)
    if len(t) != ctx.m + ctx.n:
        raise NotInDomain(f"tuple has length {len(t)}, expected {ctx.m + ctx.n}")
    try:
        polys = tuple(nu_decode(k, ctx.m) for k in t[ctx.m:])
    except NotACode as exc:
        raise NotInDomain(str(exc)) from exc
    return ctx.element(t[:ctx.m], polys)


def tuple_mul(ctx: GroupContext, t1: Sequence[int], t2: Sequence[int]) -> tuple:
    """The multiplication the tuple codes inherit from G."""
    return delta_encode(mul(delta_decode(ctx, t1), delta_decode(ctx, t2)))


# integers as powers of a fixed element


@dataclass(frozen=True)
class IntAsPower:
    """The integer ``exponent`` carried by the group element ``base^exponent``.

    The element is materialised on demand: codes can be far too large for
    an explicit normal form when ``base`` has a nontrivial base-group part.
    """
    base: WreathElement
    exponent: int

    @classmethod
    def of(cls, base: WreathElement, k: int) -> "IntAsPower":
        return cls(base, k)

    @classmethod
    def from_element(cls, base: WreathElement, x: WreathElement) -> "IntAsPower":
        return cls(base, discrete_log(base, x))

    @property
    def element(self) -> WreathElement:
        return exp_G(self.base, self.exponent)


def _same_base(x: IntAsPower, y: IntAsPower):
    if x.base != y.base:
        raise BaseMismatch("powers of different bases")


def gamma_add(x: IntAsPower, y: IntAsPower) -> IntAsPower:
    _same_base(x, y)
    return IntAsPower.from_element(x.base, mul(x.element, y.element))


def gamma_divides(x: IntAsPower, y: IntAsPower) -> bool:
    """For x = a^l, y = a^k: l divides k, decided by the commutator equation."""
    _same_base(x, y)
    l, k = x.exponent, y.exponent
    if l == 0:
        return k == 0
    return div_witness(x.base, k, l) is not None


def gamma_mul(x: IntAsPower, y: IntAsPower) -> IntAsPower:
    _same_base(x, y)
    return IntAsPower.of(x.base, x.exponent * y.exponent)


def embed_int(ctx: GroupContext, k: int) -> IntAsPower:
    return IntAsPower.of(ctx.a(1), k)


def lift_tuple(base: WreathElement, t: Sequence[int]) -> list:
    """Turn an integer tuple into powers of ``base``.

    When ``base`` lies in A the power is built as a group element and the
    exponent read back by discrete log; otherwise codes are too large to
    materialise and the exponent is carried symbolically.
    """
    if base.in_top():
        return [IntAsPower.from_element(base, exp_G(base, k)) for k in t]
    return [IntAsPower.of(base, k) for k in t]


def lambda_G(basis: Basis | tuple, gamma_powers: Sequence[IntAsPower],
             code_powers: Sequence[IntAsPower]) -> WreathElement:
    """g = prod c_i^gamma_i prod u_j^P_j from powers of c1 encoding gamma_i and nu(P_j).

    ``basis`` is a validated ``Basis`` or a pair (cs, us), which is validated here.
    The decoded polynomials are read as elements of Z[c^+-1].
    """
    if not isinstance(basis, Basis):
        basis = Basis.validated(*basis)
    c1 = basis.tops[0]
    ctx = basis.ctx
    if len(gamma_powers) != ctx.m or len(code_powers) != ctx.n:
        raise BaseMismatch("wrong number of powers")
    for x in list(gamma_powers) + list(code_powers):
        if x.base != c1:
            raise BaseMismatch("all powers must be taken along c1")
    gammas = [x.exponent for x in gamma_powers]
    codes = [x.exponent for x in code_powers]
    if any(k < 0 for k in codes):
        raise NotACode("negative code")
    polys = [nu_decode(k, ctx.m) for k in codes]
    return basis.element(gammas, polys)


def roundtrip_via_lambda(basis: Basis, g: WreathElement) -> WreathElement:
    """g -> coordinates in ``basis`` -> tuple codes -> c1-powers -> lambda_G."""
    gammas, polys = basis.coordinates(g)
    c1 = basis.tops[0]
    codes = [nu_encode(p) for p in polys]
    return lambda_G(basis, lift_tuple(c1, gammas), lift_tuple(c1, codes))


def int_roundtrip(ctx: GroupContext, k: int) -> int:
    """Z -> <a1> -> tuple code -> Z."""
    x = embed_int(ctx, k)
    t = delta_encode(x.element)
    return t[0]
