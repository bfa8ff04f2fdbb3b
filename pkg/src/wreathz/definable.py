"""Decision procedures for the definable predicates of G, with witnesses.

Every predicate is decided from normal forms; where the group-theoretic
characterisation involves an existential (a commutator equation with an
unknown z in the base group), the solver constructs the witness and the
caller can re-check the equation with plain multiplication.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import (BadParameter, BaseMismatch, IdentityElement, NotABasis,
                     NotDivisible, NotInBaseGroup, NotInCommutant)
from .laurent import LaurentPoly, binomial_divide, canonical_fraction, discriminate, evaluate
from .lcs import in_lcs
from .wreath import (GroupContext, WreathElement, comm, comm_left, inv, module_act,
                     mul)

BASE_GROUP, TOP_GROUP, NEITHER = "BaseGroup", "TopGroup", "Neither"


# small helpers


def _require_top(a: WreathElement, what: str = "a"):
    if not a.in_top() or a.is_identity():
        raise BadParameter(f"{what} must be a nontrivial element of A, got {a}")


def _require_base(*us: WreathElement):
    for u in us:
        if not u.in_base():
            raise NotInBaseGroup(f"{u} is not in the base group")


def _binomial(ctx: GroupContext, top: Sequence[int]) -> LaurentPoly:
    """a^top - 1 in the group ring."""
    return LaurentPoly.monomial(tuple(top)) - 1


def _scaled(top: Sequence[int], k: int) -> tuple:
    return tuple(k * x for x in top)


def _det(rows, zero):
    n = len(rows)
    total = zero
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = None
        for i, j in enumerate(perm):
            term = rows[i][j] if term is None else term * rows[i][j]
        total = total - term if inversions % 2 else total + term
    return total


def _adjugate(rows, zero, one):
    n = len(rows)
    if n == 1:
        return [[one]]
    adj = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[rows[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            cof = _det(minor, zero)
            adj[j][i] = -cof if (i + j) % 2 else cof
    return adj


# membership and centralizers


def in_N(g: WreathElement) -> bool:
    return g.in_base()


def centralizer_class(g: WreathElement) -> str:
    """Which of N, A (if either) is the centralizer of g."""
    if g.is_identity():
        raise IdentityElement("the identity is central")
    if g.in_base():
        return BASE_GROUP
    if g.in_top():
        return TOP_GROUP
    return NEITHER


# cyclic subgroups of A


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: WreathElement | None = None


def cyc_member(a: WreathElement, g: WreathElement) -> Verdict:
    """Decide g in <a> for a in A \\ {1}.

    Two independent routes must agree: reading exponents directly, and
    solving [b1, g] = [z, a] for z in N by binomial division.
    """
    _require_top(a)
    ctx = a.ctx
    direct = g.in_top() and _integer_ratio(g.top, a.top) is not None

    witness = None
    if comm(g, a).is_identity():
        try:
            w = binomial_divide(_binomial(ctx, g.top), a.top)
        except NotDivisible:
            pass
        else:
            witness = ctx.b(1, w)
            if comm(ctx.b(1), g) != comm(witness, a):
                raise AssertionError("cyclic-membership witness fails its equation")
    via_witness = witness is not None
    if direct != via_witness:
        raise AssertionError(f"cyclic membership routes disagree for a={a}, g={g}")
    return Verdict(direct, witness)


def cyc_witness_for(u: WreathElement, a: WreathElement, g: WreathElement) -> WreathElement | None:
    """Solve [u, g] = [z, a] for z in N (the 'for every u' form), or None."""
    _require_top(a)
    _require_base(u)
    if not comm(g, a).is_identity():
        return None
    target = comm(u, g)
    try:
        z_bottom = tuple(binomial_divide(p, a.top) for p in target.bottom)
    except NotDivisible:
        return None
    z = u.ctx.base_element(z_bottom)
    assert comm(z, a) == target
    return z


def _integer_ratio(v: Sequence[int], w: Sequence[int]) -> int | None:
    """k with v = k*w, or None.  w must be nonzero."""
    k = None
    for x, y in zip(v, w):
        if y:
            if x % y:
                return None
            k = x // y
            break
    if k is None:
        return None
    return k if all(x == k * y for x, y in zip(v, w)) else None


def div_witness(a: WreathElement, k: int, l: int) -> WreathElement | None:
    """Solve [b1, a^k] = [z, a^l] for z in N.

    A solution exists iff l divides k (the quotient (a^k-1)/(a^l-1) is then
    a polynomial); returns the witness z or None.
    """
    _require_top(a)
    if l == 0:
        raise BadParameter("l must be nonzero")
    ctx = a.ctx
    try:
        w = binomial_divide(_binomial(ctx, _scaled(a.top, k)), _scaled(a.top, l))
    except NotDivisible:
        return None
    z = ctx.b(1, w)
    ak, al = ctx.top_element(_scaled(a.top, k)), ctx.top_element(_scaled(a.top, l))
    if comm(ctx.b(1), ak) != comm(z, al):
        raise AssertionError("divisibility witness fails its equation")
    return z


# exponentiation


def _geometric(a: WreathElement, k: int) -> LaurentPoly:
    """(a^k - 1) / (a - 1) = 1 + a + ... + a^(k-1) (Laurent for k < 0)."""
    return binomial_divide(_binomial(a.ctx, _scaled(a.top, k)), a.top)


def exp_mix(a: WreathElement, u: WreathElement, k: int) -> WreathElement:
    """(a u)^k = a^k u^((a^k - 1)/(a - 1)) for a in A \\ {1}, u in N."""
    _require_top(a)
    _require_base(u)
    w = module_act(u, _geometric(a, k))
    # w is the unique solution of [u, a^k] = [w, a]; a - 1 is not a zero divisor.
    # For u in N and a in A the commutator [u, a] is u^(a - 1).
    ak = a.ctx.top_element(_scaled(a.top, k))
    if module_act(u, _binomial(a.ctx, ak.top)) != module_act(w, _binomial(a.ctx, a.top)):
        raise AssertionError("exp_mix: w does not solve [u, a^k] = [w, a]")
    return mul(ak, w)


def exp_N(a: WreathElement, u: WreathElement, k: int) -> tuple[WreathElement, WreathElement]:
    """Return (u^k, v) with (a u)^k = a^k u^k [v, a]."""
    _require_top(a)
    _require_base(u)
    q = binomial_divide(_geometric(a, k) - k, a.top)
    return module_act(u, k), module_act(u, q)


def exp_N_witness(a: WreathElement, u: WreathElement, k: int, w: WreathElement) -> WreathElement | None:
    """Solve (a u)^k = a^k w [v, a] for v in N, or None if w admits no solution."""
    _require_top(a)
    _require_base(u, w)
    lhs = exp_mix(a, u, k)
    ak = a.ctx.top_element(_scaled(a.top, k))
    target = mul(inv(mul(ak, w)), lhs)  # must equal [v, a] = v^(a-1)
    try:
        v = a.ctx.base_element(tuple(binomial_divide(p, a.top) for p in target.bottom))
    except NotDivisible:
        return None
    return v


def exp_G(g: WreathElement, k: int) -> WreathElement:
    """g^k via the closed forms: module action on N, exp_mix otherwise."""
    a, u = g.top_part(), g.bottom_part()
    if a.is_identity():
        return module_act(u, k)
    if u.is_identity():
        return g.ctx.top_element(_scaled(a.top, k))
    return exp_mix(a, u, k)


def discrete_log(base: WreathElement, x: WreathElement) -> int:
    """The k with base^k = x; raises BaseMismatch if x is not in <base>."""
    if base.is_identity():
        raise BadParameter("discrete log along the identity")
    if any(base.top):
        k = _integer_ratio(x.top, base.top)
    else:
        k = None
        if not any(x.top):
            j, (e, c) = next((j, next(iter(q.items()))) for j, q in enumerate(base.bottom) if q)
            d = x.bottom[j].terms.get(e, 0)
            k = d // c if d % c == 0 else None
    if k is None or exp_G(base, k) != x:
        raise BaseMismatch(f"{x} is not a power of {base}")
    return k


def prod_A(ds: Sequence[WreathElement], gammas: Sequence[int]) -> WreathElement:
    """d1^g1 ... dm^gm for d_i in A, by exponent-vector arithmetic."""
    if len(ds) != len(gammas) or not ds:
        raise BadParameter("need matching, nonempty tuples")
    for d in ds:
        if not d.in_top():
            raise BadParameter(f"{d} is not in A")
    ctx = ds[0].ctx
    top = [0] * ctx.m
    for d, g in zip(ds, gammas):
        for i, x in enumerate(d.top):
            top[i] += g * x
    return ctx.top_element(top)


# Z[A]-action and its approximation through evaluations


def act_decide(g: WreathElement, h: WreathElement, q: LaurentPoly) -> bool:
    """Decide g^q = h."""
    _require_base(g, h)
    return module_act(g, q) == h


def congruent_mod_Ialpha(g: WreathElement, h: WreathElement, s, alpha: Sequence[int]) -> bool:
    """Decide g^s h^-1 in the submodule N^(I_alpha), I_alpha = (a_i - alpha_i).

    ``s`` is an integer, or the Fraction q(alpha) for a Laurent q.  With every
    alpha_i nonzero the test is evaluation of each coordinate at alpha.

    A zero coordinate makes the extended ideal the whole ring (a_i is a
    unit lying in it), so the answer is then always True.
    """
    _require_base(g, h)
    alpha = tuple(alpha)
    if len(alpha) != g.ctx.m:
        raise BadParameter("alpha has the wrong dimension")
    if any(x == 0 for x in alpha):
        return True
    for p, q in zip(g.bottom, h.bottom):
        if evaluate(p, alpha) * s != evaluate(q, alpha):
            return False
    return True


def act_refute(g: WreathElement, h: WreathElement, q: LaurentPoly, budget: int = 1_000_000):
    """Return None if g^q = h, else a point alpha at which the congruence fails.

    For q = P / a^beta the check is run on the cleared pair: g^P against
    h^(a^beta), with s = P(alpha).  For ordinary q this is exactly
    congruent_mod_Ialpha(g, h, q(alpha), alpha) = False.
    """
    _require_base(g, h)
    if act_decide(g, h, q):
        return None
    frac = canonical_fraction(q)
    p = frac.numerator
    h_cleared = module_act(h, LaurentPoly.monomial(frac.denominator))
    diffs = [gp * p - hp for gp, hp in zip(g.bottom, h_cleared.bottom)]
    nonzero = next(d for d in diffs if not d.is_zero())
    alpha = discriminate([nonzero, LaurentPoly.zero(g.ctx.m)], budget=budget)
    s = evaluate(p, alpha)
    assert s.denominator == 1
    if congruent_mod_Ialpha(g, h_cleared, int(s), alpha):
        raise AssertionError("refutation point failed re-verification")
    return alpha


# lower central quotient G / G_4 and isomorphisms Z_a -> Z_d


def congruent_mod_G4(x: WreathElement, y: WreathElement) -> bool:
    if not (in_lcs(x, 2) and in_lcs(y, 2)):
        raise NotInCommutant("both arguments must lie in [G, G]")
    return in_lcs(mul(x, inv(y)), 4)


def transfer_relation(u: WreathElement, a: WreathElement, d: WreathElement, k: int, l: int) -> bool:
    """[u, a, d^k] == [u, a^l, d] mod G_4 (holds iff k == l when u is not in G_2)."""
    ctx = a.ctx
    dk = ctx.top_element(_scaled(d.top, k))
    al = ctx.top_element(_scaled(a.top, l))
    return congruent_mod_G4(comm_left(u, a, dk), comm_left(u, al, d))


def iso_transfer(a: WreathElement, d: WreathElement, k: int) -> WreathElement:
    """Image of a^k under the isomorphism <a> -> <d>, i.e. d^k, checked mod G_4."""
    _require_top(a)
    _require_top(d, "d")
    y = a.ctx.top_element(_scaled(d.top, k))
    if not transfer_relation(a.ctx.b(1), a, d, k, k):
        raise AssertionError("transfer failed the G_4 criterion")
    return y


def iso_graph_member(a: WreathElement, d: WreathElement, x: WreathElement, y: WreathElement) -> bool:
    """Decide whether (x, y) lies on the graph of <a> -> <d>, a^k -> d^k."""
    _require_top(a)
    _require_top(d, "d")
    try:
        k = discrete_log(a, x)
        l = discrete_log(d, y)
    except BaseMismatch:
        return False
    return transfer_relation(a.ctx.b(1), a, d, l, k)


# bases


def is_top_basis(cs: Sequence[WreathElement]) -> bool:
    if not cs:
        return False
    ctx = cs[0].ctx
    if len(cs) != ctx.m or any(c.in_base() for c in cs):
        return False
    for c1, c2 in itertools.combinations(cs, 2):
        if not comm(c1, c2).is_identity():
            return False
    return abs(_det([list(c.top) for c in cs], 0)) == 1


@dataclass(frozen=True)
class Basis:
    """A validated basis (c1..cm, u1..un) with the data needed to change coordinates.

    ``top_matrix`` has the top exponent vectors of the c_i as rows: the ring
    Z[c^+-1] acts on N through c^e -> a^(e * top_matrix).
    """
    tops: tuple
    bottoms: tuple
    top_matrix: tuple
    top_inverse: tuple
    bottom_matrix_inv: tuple  # over Z[a^+-1]: rows give b_k in terms of the u_j

    @classmethod
    def standard(cls, ctx: GroupContext) -> "Basis":
        return cls.validated([ctx.a(i) for i in range(1, ctx.m + 1)],
                             [ctx.b(j) for j in range(1, ctx.n + 1)])

    @classmethod
    def validated(cls, cs: Sequence[WreathElement], us: Sequence[WreathElement]) -> "Basis":
        cs, us = tuple(cs), tuple(us)
        if not is_top_basis(cs):
            raise NotABasis("top tuple is not a top basis")
        ctx = cs[0].ctx
        if len(us) != ctx.n or any(u.ctx != ctx or not u.in_base() for u in us):
            raise NotABasis("bottom tuple must be n elements of N")
        D = [list(c.top) for c in cs]
        d = _det(D, 0)
        Dinv = tuple(tuple(x * d for x in row) for row in _adjugate(D, 0, 1))
        M = [list(u.bottom) for u in us]
        zero, one = LaurentPoly.zero(ctx.m), LaurentPoly.one(ctx.m)
        Mc = [[p.substitute_monomials(Dinv) for p in row] for row in M]
        det_c = _det(Mc, LaurentPoly.zero(ctx.m))
        if not det_c.is_unit():
            raise NotABasis("bottom tuple is not a free basis of N")
        det_a = det_c.substitute_monomials(D)
        scale = det_a.inverse_unit()
        Minv = tuple(tuple(x * scale for x in row) for row in _adjugate(M, zero, one))
        return cls(cs, us, tuple(map(tuple, D)), Dinv, Minv)

    @property
    def ctx(self) -> GroupContext:
        return self.tops[0].ctx

    def to_a_vars(self, p: LaurentPoly) -> LaurentPoly:
        return p.substitute_monomials(self.top_matrix)

    def to_c_vars(self, p: LaurentPoly) -> LaurentPoly:
        return p.substitute_monomials(self.top_inverse)

    def element(self, gammas: Sequence[int], polys_c: Sequence[LaurentPoly]) -> WreathElement:
        """prod c_i^gamma_i * prod u_j^P_j with P_j over Z[c^+-1]."""
        ctx = self.ctx
        g = ctx.identity()
        for c, k in zip(self.tops, gammas):
            g = mul(g, exp_G(c, k))
        for u, p in zip(self.bottoms, polys_c):
            g = mul(g, module_act(u, self.to_a_vars(p)))
        return g

    def coordinates(self, g: WreathElement) -> tuple[tuple, tuple]:
        """Inverse of ``element``: (gammas, polys over Z[c^+-1])."""
        gammas = tuple(sum(g.top[i] * self.top_inverse[i][j] for i in range(len(g.top)))
                       for j in range(len(self.tops)))
        ctx = self.ctx
        head = ctx.identity()
        for c, k in zip(self.tops, gammas):
            head = mul(head, exp_G(c, k))
        rest = mul(inv(head), g)
        assert rest.in_base()
        H = rest.bottom
        n = len(self.bottoms)
        polys = []
        for j in range(n):
            acc = LaurentPoly.zero(ctx.m)
            for k in range(n):
                acc = acc + H[k] * self.bottom_matrix_inv[k][j]
            polys.append(self.to_c_vars(acc))
        return gammas, tuple(polys)


def is_basis(cs: Sequence[WreathElement], us: Sequence[WreathElement]) -> bool:
    try:
        Basis.validated(cs, us)
    except NotABasis:
        return False
    return True
