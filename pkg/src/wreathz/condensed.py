"""The groups G_S: central extensions of Z^2 wr Z by Z/2 indexed by S in 2^Z.

Elements are kept in the normal form ``t^tau a^P b^Q c^eps`` where
``a^P = prod_i a_i^{p_i}`` with ``a_i = a^(t^i)`` (likewise for b) and
``c`` is the central involution.  Commuting ``b^Q`` past ``a^P`` costs
``c^beta(Q, P)`` with ``beta(Q, P) = sum_{j - i in S} p_i q_j mod 2``.
"""
from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import BadParameter, ParseError, RadiusTooLarge
from .laurent import LaurentPoly, format_poly
from .wreath import GroupContext, WreathElement

DEFAULT_RADIUS_CAP = 6
_T = ("t",)


# subsets of Z


class SubsetOfZ:
    spec = "?"

    def __contains__(self, i: int) -> bool:
        raise NotImplementedError

    def window(self, lo: int, hi: int) -> str:
        """Indicator string of S on [lo, hi] ('1' = member)."""
        return "".join("1" if i in self else "0" for i in range(lo, hi + 1))

    def members(self, lo: int, hi: int) -> list:
        return [i for i in range(lo, hi + 1) if i in self]

    def __repr__(self):
        return f"<SubsetOfZ {self.spec}>"


class FiniteSet(SubsetOfZ):
    def __init__(self, elements: Iterable[int]):
        self.elements = frozenset(elements)
        self.spec = "finite:{" + ",".join(map(str, sorted(self.elements))) + "}"

    def __contains__(self, i):
        return i in self.elements


class PeriodicSet(SubsetOfZ):
    """All i with i mod period in ``residues`` (default: the multiples of period)."""

    def __init__(self, period: int, residues: Iterable[int] = (0,)):
        if period < 1:
            raise BadParameter("period must be positive")
        self.period = period
        self.residues = frozenset(r % period for r in residues)
        if self.residues == {0}:
            self.spec = f"periodic:{period}"
        else:
            self.spec = f"periodic:{period}:{{" + ",".join(map(str, sorted(self.residues))) + "}"

    def __contains__(self, i):
        return i % self.period in self.residues


class Complement(SubsetOfZ):
    def __init__(self, inner: SubsetOfZ):
        self.inner = inner
        self.spec = f"complement:{inner.spec}"

    def __contains__(self, i):
        return i not in self.inner


class Shifted(SubsetOfZ):
    """n o S = {s - n : s in S}."""

    def __init__(self, inner: SubsetOfZ, n: int):
        self.inner = inner
        self.n = n
        self.spec = f"shift:{n}:{inner.spec}"

    def __contains__(self, i):
        return i + self.n in self.inner

    def window(self, lo, hi):
        return self.inner.window(lo + self.n, hi + self.n)


@lru_cache(maxsize=8)
def _universal_prefix(length: int) -> str:
    chunks, total, L = [], 0, 1
    while total < length:
        for w in range(2 ** L):
            chunks.append(format(w, f"0{L}b"))
        total += L * 2 ** L
        L += 1
    return "".join(chunks)[:length]


def _universal_bit(k: int) -> bool:
    L = 1
    while k >= L * 2 ** L:
        k -= L * 2 ** L
        L += 1
    word, pos = divmod(k, L)
    return format(word, f"0{L}b")[pos] == "1"


class UniversalSet(SubsetOfZ):
    """Concatenation of every binary word (length-lex order) on i >= 0, mirrored: S(-i) = S(i).

    Every finite pattern occurs in it, so its shift orbit is dense in 2^Z.
    """
    spec = "universal"

    def __contains__(self, i):
        return _universal_bit(abs(i))

    def window(self, lo, hi):
        if hi < lo:
            return ""
        size = 1024
        while size <= max(abs(lo), abs(hi)):
            size *= 2
        prefix = _universal_prefix(size)
        if lo >= 0:
            return prefix[lo:hi + 1]
        if hi <= 0:
            return prefix[-hi:-lo + 1][::-1]
        return prefix[1:-lo + 1][::-1] + prefix[:hi + 1]


def shift(S: SubsetOfZ, n: int) -> SubsetOfZ:
    return Shifted(S, n) if n else S


def parse_set(spec: str) -> SubsetOfZ:
    spec = spec.strip()
    if spec in ("universal", "univ"):
        return UniversalSet()
    if spec == "empty":
        return FiniteSet(())
    head, _, rest = spec.partition(":")
    if head == "finite":
        return FiniteSet(_int_set(rest))
    if head == "periodic":
        period, _, residues = rest.partition(":")
        return PeriodicSet(int(period), _int_set(residues) if residues else (0,))
    if head == "complement":
        return Complement(parse_set(rest))
    if head == "shift":
        n, _, inner = rest.partition(":")
        try:
            return Shifted(parse_set(inner), int(n))
        except ValueError as exc:
            raise ParseError(f"bad shift amount in {spec!r}") from exc
    raise ParseError(f"unknown set spec {spec!r}")


def _int_set(text: str) -> list:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ParseError(f"expected {{...}}, got {text!r}")
    body = text[1:-1].strip()
    try:
        return [int(x) for x in body.split(",")] if body else []
    except ValueError as exc:
        raise ParseError(f"bad integer list {text!r}") from exc


# the group


@dataclass(frozen=True)
class GSElement:
    t_exp: int
    a_poly: LaurentPoly
    b_poly: LaurentPoly
    center: int

    @classmethod
    def identity(cls) -> "GSElement":
        z = LaurentPoly.zero(1)
        return cls(0, z, z, 0)

    def is_identity(self) -> bool:
        return self.t_exp == 0 and self.a_poly.is_zero() and self.b_poly.is_zero() and not self.center

    def key(self):
        return (self.t_exp, self.a_poly, self.b_poly, self.center)

    def __str__(self):
        return format_gs(self)


GEN_A = GSElement(0, LaurentPoly.one(1), LaurentPoly.zero(1), 0)
GEN_T = GSElement(1, LaurentPoly.zero(1), LaurentPoly.zero(1), 0)
GEN_C = GSElement(0, LaurentPoly.zero(1), LaurentPoly.zero(1), 1)


def gen_b(k: int = 0) -> GSElement:
    """b_k = b^(t^k)."""
    return GSElement(0, LaurentPoly.zero(1), LaurentPoly.monomial((k,)), 0)


def cocycle(q: LaurentPoly, p: LaurentPoly, S: SubsetOfZ) -> int:
    """beta(Q, P) = sum over (i, j) with j - i in S of p_i q_j, mod 2."""
    total = 0
    for (i,), pc in p.items():
        if pc & 1 == 0:
            continue
        for (j,), qc in q.items():
            if qc & 1 and (j - i) in S:
                total ^= 1
    return total


def gs_mul(x: GSElement, y: GSElement, S: SubsetOfZ) -> GSElement:
    s = (y.t_exp,)
    p1, q1 = x.a_poly.shift(s), x.b_poly.shift(s)
    bit = (x.center + y.center + cocycle(q1, y.a_poly, S)) & 1
    return GSElement(x.t_exp + y.t_exp, p1 + y.a_poly, q1 + y.b_poly, bit)


def gs_inv(x: GSElement, S: SubsetOfZ) -> GSElement:
    s = (-x.t_exp,)
    bit = (x.center + cocycle(x.b_poly, x.a_poly, S)) & 1
    return GSElement(-x.t_exp, -x.a_poly.shift(s), -x.b_poly.shift(s), bit)


def gs_comm(x: GSElement, y: GSElement, S: SubsetOfZ) -> GSElement:
    out = gs_mul(gs_inv(x, S), gs_inv(y, S), S)
    return gs_mul(gs_mul(out, x, S), y, S)


def gs_power(x: GSElement, k: int, S: SubsetOfZ) -> GSElement:
    base = x if k >= 0 else gs_inv(x, S)
    acc = GSElement.identity()
    for _ in range(abs(k)):
        acc = gs_mul(acc, base, S)
    return acc


# words

_WORD_RE = re.compile(r"\s*([aAbBtTcC])(?:\^(-?\d+))?")


def parse_word(text: str) -> list:
    """Tokens like ``a``, ``B`` (= b^-1), ``t^-3``, ``c``; whitespace optional."""
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        mt = _WORD_RE.match(text, pos)
        if not mt:
            raise ParseError(f"bad word at {text[pos:]!r}")
        letter, exp = mt.group(1), int(mt.group(2) or 1)
        if letter.isupper():
            letter, exp = letter.lower(), -exp
        out.append((letter, exp))
        pos = mt.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def _letter(letter: str, b_index: int) -> GSElement:
    return {"a": GEN_A, "t": GEN_T, "c": GEN_C}.get(letter) or gen_b(b_index)


def gs_eval_word(word, S: SubsetOfZ, b_index: int = 0) -> GSElement:
    """Evaluate a word (text or token list) in G_S; the letter b stands for b_{b_index}."""
    if isinstance(word, str):
        word = parse_word(word)
    acc = GSElement.identity()
    for letter, exp in word:
        g = _letter(letter, b_index)
        if exp < 0:
            g = gs_inv(g, S)
        for _ in range(abs(exp)):
            acc = gs_mul(acc, g, S)
    return acc


def commutator_word(i: int) -> str:
    """[a, b^(t^i)] spelled in the generators a, b, t."""
    return f"A t^{-i} B t^{i} a t^{-i} b t^{i}"


def center_fingerprint(S: SubsetOfZ, r: int) -> list:
    """The i in [-r, r] with [a, b0^(t^i)] = 1 in G_S."""
    if r < 0:
        raise BadParameter("radius must be nonnegative")
    return [i for i in range(-r, r + 1) if gs_eval_word(commutator_word(i), S).is_identity()]


def _conj_t(x: GSElement, i: int, S: SubsetOfZ) -> GSElement:
    """x^(t^i) = t^-i x t^i."""
    return gs_mul(gs_mul(gs_power(GEN_T, -i, S), x, S), gs_power(GEN_T, i, S), S)


def relators(S: SubsetOfZ, n: int = 0, bound: int = 6) -> list:
    """The defining relators of G_S on the generators (a, b_n, t), instantiated for |i| <= bound.

    Returns (label, value) pairs; every value must be the identity.
    """
    a, b = GEN_A, gen_b(n)
    out = []
    cs = {}
    for i in range(-bound, bound + 1):
        ci = gs_comm(a, _conj_t(b, i, S), S)
        cs[i] = ci
        out.append((f"[a,a^t^{i}]", gs_comm(a, _conj_t(a, i, S), S)))
        out.append((f"[b,b^t^{i}]", gs_comm(b, _conj_t(b, i, S), S)))
        out.append((f"[a,c{i}]", gs_comm(a, ci, S)))
        out.append((f"[b,c{i}]", gs_comm(b, ci, S)))
        out.append((f"[t,c{i}]", gs_comm(GEN_T, ci, S)))
        out.append((f"c{i}^2", gs_mul(ci, ci, S)))
    inside = [i for i in cs if i + n in S]
    for j in cs:
        if j + n not in S:
            out.append((f"c{j}", cs[j]))
    for k, l in zip(inside, inside[1:]):
        out.append((f"c{k}=c{l}", gs_mul(cs[k], gs_inv(cs[l], S), S)))
    return out


# balls in the marked group (G_S, (a, b_n, t))

LETTERS = "aAbBtT"


@dataclass(frozen=True)
class BallFingerprint:
    radius: int
    classes: tuple  # tuple of tuples of words, canonically sorted

    def digest(self) -> str:
        text = "|".join(",".join(w or "1" for w in cls) for cls in self.classes)
        return hashlib.sha256(f"{self.radius}:{text}".encode()).hexdigest()[:16]

    def is_discrete(self) -> bool:
        return all(len(c) == 1 for c in self.classes)


def _word_key(w: str):
    return (len(w), w)


def ball_fingerprint(S: SubsetOfZ, r: int, b_index: int = 0,
                     cap: int = DEFAULT_RADIUS_CAP) -> BallFingerprint:
    """Partition of all words of length <= r in a^+-1, b^+-1, t^+-1 by their value in G_S."""
    if r < 0:
        raise BadParameter("radius must be nonnegative")
    if r > cap:
        raise RadiusTooLarge(f"radius {r} exceeds cap {cap}")
    gens = {
        "a": GEN_A, "A": gs_inv(GEN_A, S),
        "b": gen_b(b_index), "B": gs_inv(gen_b(b_index), S),
        "t": GEN_T, "T": gs_inv(GEN_T, S),
    }
    classes: dict = {}
    frontier = [("", GSElement.identity())]
    classes.setdefault(frontier[0][1].key(), []).append("")
    for _ in range(r):
        nxt = []
        for w, g in frontier:
            for letter in LETTERS:
                h = gs_mul(g, gens[letter], S)
                word = w + letter
                nxt.append((word, h))
                classes.setdefault(h.key(), []).append(word)
        frontier = nxt
    canon = sorted((tuple(sorted(ws, key=_word_key)) for ws in classes.values()),
                   key=lambda c: _word_key(c[0]))
    return BallFingerprint(r, tuple(canon))


def iso_check(S: SubsetOfZ, n: int, r: int, cap: int = DEFAULT_RADIUS_CAP) -> bool:
    """(G_S, (a, b_n, t)) and (G_{n o S}, (a, b_0, t)) agree on the radius-r ball."""
    return ball_fingerprint(S, r, b_index=n, cap=cap) == ball_fingerprint(shift(S, n), r, cap=cap)


def _symmetric_range(w: int):
    yield 0
    for k in range(1, w + 1):
        yield k
        yield -k


def injectivity_witness(S: SubsetOfZ, T: SubsetOfZ, w: int):
    """An i in [-w, w] lying in exactly one of S, T (checked in both groups), or None."""
    for i in _symmetric_range(w):
        if (i in S) != (i in T):
            word = commutator_word(i)
            in_s = gs_eval_word(word, S).is_identity()
            in_t = gs_eval_word(word, T).is_identity()
            if in_s == in_t:
                raise AssertionError(f"separating word failed to separate at i={i}")
            return i
    return None


@dataclass
class DemoRow:
    radius: int
    found: bool
    shift: int | None = None
    window: tuple | None = None
    separation: int | None = None
    fingerprint_digest: str | None = None
    fingerprints_equal: bool | None = None

    def as_record(self) -> dict:
        return dict(self.__dict__)


def find_agreeing_shift(S: SubsetOfZ, w: int, budget: int) -> int | None:
    """Smallest |n| (positive first), 0 < |n| <= budget, with S(x + n) = S(x) on [-w, w]."""
    pattern = S.window(-w, w)
    reach = 1024
    while True:
        reach = min(reach, budget)
        text = S.window(-w - reach, w + reach)
        origin = w + reach  # index of 0 in text
        best = None
        idx = text.find(pattern, origin + 1 - w)
        if idx >= 0:
            best = idx - origin + w
        idx = text.rfind(pattern, 0, origin - 1 - w + len(pattern))
        if idx >= 0:
            cand = idx - origin + w
            if best is None or -cand < best:
                best = cand
        if best is not None:
            return best
        if reach >= budget:
            return None
        reach *= 2


def condensation_demo(r_max: int, S: SubsetOfZ | None = None, budget: int = 10_000_000,
                      cap: int = DEFAULT_RADIUS_CAP) -> list:
    """For each radius r <= r_max, a shift n != 0 whose marked group is r-close to G_S but distinct."""
    if r_max > cap:
        raise RadiusTooLarge(f"radius {r_max} exceeds cap {cap}")
    S = S if S is not None else UniversalSet()
    rows = []
    for r in range(1, r_max + 1):
        w = 2 * r
        n = find_agreeing_shift(S, w, budget)
        if n is None:
            rows.append(DemoRow(r, False))
            continue
        T = shift(S, n)
        sep, width = None, 2 * w + 1
        while sep is None and width <= budget:
            sep = injectivity_witness(S, T, width)
            width *= 2
        if sep is None:
            rows.append(DemoRow(r, False, n, (-w, w)))
            continue
        f_s, f_t = ball_fingerprint(S, r, cap=cap), ball_fingerprint(T, r, cap=cap)
        rows.append(DemoRow(r, f_s == f_t, n, (-w, w), sep, f_s.digest(), f_s == f_t))
    return rows


# quotient by the center and formatting


def gs_to_wreath(x: GSElement) -> WreathElement:
    """Image in Z^2 wr Z (t -> a1, a -> b1, b -> b2); forgets the center bit."""
    ctx = GroupContext(1, 2)
    return ctx.element((x.t_exp,), (x.a_poly, x.b_poly))


def format_gs(x: GSElement) -> str:
    parts = []
    if x.t_exp:
        parts.append("t" if x.t_exp == 1 else f"t^{x.t_exp}")
    if x.a_poly:
        parts.append(f"a^({format_poly(x.a_poly, _T)})")
    if x.b_poly:
        parts.append(f"b^({format_poly(x.b_poly, _T)})")
    if x.center:
        parts.append("c")
    return " ".join(parts) if parts else "1"


def gs_record(x: GSElement) -> dict:
    return {"t": x.t_exp, "a": format_poly(x.a_poly, _T), "b": format_poly(x.b_poly, _T),
            "c": x.center}
