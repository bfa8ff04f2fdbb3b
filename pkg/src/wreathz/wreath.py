"""The wreath product G = Z^n wr Z^m in normal form.

An element is ``a^gamma * b1^P1 ... bn^Pn`` with ``gamma`` in Z^m and each
``Pj`` a Laurent polynomial in ``a1..am``.  Conjugation is ``x^y = y^-1 x y``
and commutators are ``[x, y] = x^-1 y^-1 x y``; with these conventions

    (gamma, P) * (beta, Q) = (gamma + beta, P * a^beta + Q).

``FnRepElement`` is the independent oracle: the base-group part is a finitely
supported function Z^m -> Z^n.  Lattice point ``alpha`` carries the
coefficient of ``a^alpha``, so multiplying on the right by ``a^beta`` moves the
support by ``+beta``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import MismatchedContext, NotInBaseGroup, ParseError
from .laurent import LaurentPoly, default_names, format_poly, parse_poly


@dataclass(frozen=True)
class GroupContext:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("both ranks must be at least 1")

    @property
    def top_names(self) -> tuple:
        return default_names(self.m)

    @property
    def bottom_names(self) -> tuple:
        return tuple(f"b{j}" for j in range(1, self.n + 1))

    def identity(self) -> "WreathElement":
        zero = LaurentPoly.zero(self.m)
        return WreathElement(self, (0,) * self.m, (zero,) * self.n)

    def a(self, i: int, power: int = 1) -> "WreathElement":
        top = [0] * self.m
        top[i - 1] = power
        return self.top_element(top)

    def b(self, j: int, poly: LaurentPoly | int = 1) -> "WreathElement":
        bottom = [LaurentPoly.zero(self.m)] * self.n
        if isinstance(poly, int):
            poly = LaurentPoly.const(self.m, poly)
        bottom[j - 1] = poly
        return WreathElement(self, (0,) * self.m, tuple(bottom))

    def top_element(self, top: Sequence[int]) -> "WreathElement":
        return WreathElement(self, tuple(top), (LaurentPoly.zero(self.m),) * self.n)

    def base_element(self, bottom: Sequence[LaurentPoly]) -> "WreathElement":
        return WreathElement(self, (0,) * self.m, tuple(bottom))

    def element(self, top: Sequence[int], bottom: Sequence[LaurentPoly]) -> "WreathElement":
        return WreathElement(self, tuple(top), tuple(bottom))

    def parse(self, text: str) -> "WreathElement":
        return parse_element(self, text)


class WreathElement:
    __slots__ = ("ctx", "top", "bottom", "_hash")

    def __init__(self, ctx: GroupContext, top: tuple, bottom: tuple):
        if len(top) != ctx.m or len(bottom) != ctx.n:
            raise ValueError("coordinate vector does not fit the context")
        for p in bottom:
            if p.m != ctx.m:
                raise MismatchedContext("bottom polynomial has the wrong variable count")
        self.ctx = ctx
        self.top = top
        self.bottom = bottom
        self._hash = None

    def __eq__(self, other):
        if not isinstance(other, WreathElement):
            return NotImplemented
        return self.ctx == other.ctx and self.top == other.top and self.bottom == other.bottom

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, self.top, self.bottom))
        return self._hash

    def __mul__(self, other):
        return mul(self, other)

    def __repr__(self):
        return f"<{format_element(self)}>"

    def __str__(self):
        return format_element(self)

    def in_base(self) -> bool:
        return not any(self.top)

    def in_top(self) -> bool:
        return all(p.is_zero() for p in self.bottom)

    def is_identity(self) -> bool:
        return self.in_base() and self.in_top()

    def top_part(self) -> "WreathElement":
        return self.ctx.top_element(self.top)

    def bottom_part(self) -> "WreathElement":
        return self.ctx.base_element(self.bottom)


def _same(g: WreathElement, h: WreathElement):
    if g.ctx != h.ctx:
        raise MismatchedContext(f"{g.ctx} vs {h.ctx}")


def mul(g: WreathElement, h: WreathElement) -> WreathElement:
    _same(g, h)
    top = tuple(x + y for x, y in zip(g.top, h.top))
    bottom = tuple(p.shift(h.top) + q for p, q in zip(g.bottom, h.bottom))
    return WreathElement(g.ctx, top, bottom)


def inv(g: WreathElement) -> WreathElement:
    neg = tuple(-x for x in g.top)
    return WreathElement(g.ctx, neg, tuple(-p.shift(neg) for p in g.bottom))


def conj(g: WreathElement, h: WreathElement) -> WreathElement:
    """g^h = h^-1 g h."""
    return mul(mul(inv(h), g), h)


def comm(g: WreathElement, h: WreathElement) -> WreathElement:
    """[g, h] = g^-1 h^-1 g h."""
    return mul(mul(inv(g), inv(h)), mul(g, h))


def comm_left(*xs: WreathElement) -> WreathElement:
    """Left-normed commutator [x1, x2, ..., xk]."""
    acc = xs[0]
    for x in xs[1:]:
        acc = comm(acc, x)
    return acc


def module_act(u: WreathElement, q: LaurentPoly | int) -> WreathElement:
    """u^q for u in the base group and q in the group ring."""
    if not u.in_base():
        raise NotInBaseGroup(f"{u} is not in the base group")
    if isinstance(q, int):
        return WreathElement(u.ctx, u.top, tuple(p * q for p in u.bottom))
    if q.m != u.ctx.m:
        raise MismatchedContext("ring element has the wrong variable count")
    return WreathElement(u.ctx, u.top, tuple(p * q for p in u.bottom))


def mul_chain(g: WreathElement, k: int) -> WreathElement:
    """g^k by |k| successive multiplications (reference oracle for powers)."""
    base = g if k >= 0 else inv(g)
    acc = g.ctx.identity()
    for _ in range(abs(k)):
        acc = mul(acc, base)
    return acc


# function representation


@dataclass(frozen=True)
class FnRepElement:
    top: tuple
    support: tuple  # sorted ((point, value-vector), ...) with no zero vectors

    @classmethod
    def build(cls, top: Sequence[int], support: Mapping[tuple, Sequence[int]]) -> "FnRepElement":
        items = tuple(sorted((tuple(k), tuple(v)) for k, v in support.items() if any(v)))
        return cls(tuple(top), items)

    def as_dict(self) -> dict:
        return dict(self.support)


def fnrep_mul(x: FnRepElement, y: FnRepElement) -> FnRepElement:
    """(g1, f1)(g2, f2) = (g1 + g2, f1 shifted by g2, plus f2)."""
    out: dict = {}
    for point, vec in x.support:
        moved = tuple(p + s for p, s in zip(point, y.top))
        out[moved] = list(vec)
    for point, vec in y.support:
        cur = out.setdefault(point, [0] * len(vec))
        for i, v in enumerate(vec):
            cur[i] += v
    top = tuple(a + b for a, b in zip(x.top, y.top))
    return FnRepElement.build(top, out)


def to_fnrep(g: WreathElement) -> FnRepElement:
    n = g.ctx.n
    out: dict = {}
    for j, p in enumerate(g.bottom):
        for e, c in p.items():
            out.setdefault(e, [0] * n)[j] = c
    return FnRepElement.build(g.top, out)


def from_fnrep(ctx: GroupContext, f: FnRepElement) -> WreathElement:
    polys: list[dict] = [{} for _ in range(ctx.n)]
    for point, vec in f.support:
        for j, v in enumerate(vec):
            if v:
                polys[j][point] = v
    return WreathElement(ctx, f.top, tuple(LaurentPoly(ctx.m, d) for d in polys))


# text and record formats


def format_top(ctx: GroupContext, top: Sequence[int]) -> str:
    parts = []
    for name, x in zip(ctx.top_names, top):
        if x == 1:
            parts.append(name)
        elif x:
            parts.append(f"{name}^{x}")
    return " ".join(parts) if parts else "1"


def format_element(g: WreathElement) -> str:
    """``a1^2 a2^-3 | <P1> ; <P2>`` (top ``1`` when trivial)."""
    bottom = " ; ".join(format_poly(p, g.ctx.top_names) for p in g.bottom)
    return f"{format_top(g.ctx, g.top)} | {bottom}"


_TOP_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?$")


def parse_element(ctx: GroupContext, text: str) -> WreathElement:
    if text.lstrip().startswith("{"):
        return from_record(ctx, json.loads(text))
    # a bare top part such as "a1^2 a2" is allowed; it has trivial bottom
    top_txt, _, bottom_txt = text.partition("|")
    top = [0] * ctx.m
    names = {name: i for i, name in enumerate(ctx.top_names)}
    for tok in top_txt.split():
        if tok == "1":
            continue
        mt = _TOP_RE.match(tok)
        if not mt or mt.group(1) not in names:
            raise ParseError(f"bad top factor {tok!r}")
        top[names[mt.group(1)]] += int(mt.group(2) or 1)
    parts = [s for s in bottom_txt.split(";")]
    if len(parts) == 1 and not parts[0].strip():
        parts = []
    if len(parts) > ctx.n:
        raise ParseError(f"expected at most {ctx.n} bottom coordinates")
    polys = [parse_poly(s, ctx.m, ctx.top_names) for s in parts]
    polys += [LaurentPoly.zero(ctx.m)] * (ctx.n - len(polys))
    return WreathElement(ctx, tuple(top), tuple(polys))


def to_record(g: WreathElement) -> dict:
    return {"top": list(g.top), "bottom": [format_poly(p, g.ctx.top_names) for p in g.bottom]}


def from_record(ctx: GroupContext, rec: Mapping) -> WreathElement:
    try:
        top = tuple(int(x) for x in rec["top"])
        bottom = tuple(parse_poly(s, ctx.m, ctx.top_names) for s in rec["bottom"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed element record: {exc}") from exc
    if len(top) != ctx.m or len(bottom) != ctx.n:
        raise ParseError("record does not fit the context")
    return WreathElement(ctx, top, bottom)
