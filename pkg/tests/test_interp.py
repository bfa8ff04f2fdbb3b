import random

import pytest
from hypothesis import assume, given, strategies as st

from strategies import element_lists, elements, polys
from wreathz.definable import Basis, div_witness
from wreathz.encoding import is_code, nu_encode
from wreathz.errors import BaseMismatch, NotABasis, NotACode, NotInDomain
from wreathz.interp import (IntAsPower, delta_decode, delta_encode, embed_int, gamma_add,
                            gamma_divides, gamma_mul, in_delta_domain, int_roundtrip, lambda_G,
                            lift_tuple, roundtrip_via_lambda, tuple_mul)
from wreathz.laurent import LaurentPoly
from wreathz.sampling import random_basis_tuple, random_poly, random_top
from wreathz.wreath import GroupContext, inv, mul

C21 = GroupContext(2, 1)
C12 = GroupContext(1, 2)


def first_non_code(m):
    return next(k for k in range(10_000) if not is_code(k, m))


# integer tuples


def test_identity_tuple():
    ctx = GroupContext(2, 3)
    assert delta_encode(ctx.identity()) == (0, 0) + (nu_encode(LaurentPoly.zero(2)),) * 3


def test_non_code_entry_is_rejected():
    bad = first_non_code(1)
    with pytest.raises(NotInDomain):
        delta_decode(C12, (0, 0, bad))
    assert not in_delta_domain(C12, (0, 0, bad))
    assert not in_delta_domain(C12, (0, 0))
    assert in_delta_domain(C12, delta_encode(C12.b(2)))


@given(elements())
def test_delta_roundtrip(g):
    t = delta_encode(g)
    assert all(k >= 0 for k in t[g.ctx.m:])
    assert delta_decode(g.ctx, t) == g


@given(element_lists(2))
def test_delta_is_a_homomorphism(gs):
    g, h = gs
    ctx = g.ctx
    tg, th = delta_encode(g), delta_encode(h)
    assert tuple_mul(ctx, tg, th) == delta_encode(mul(g, h))
    e = delta_encode(ctx.identity())
    assert tuple_mul(ctx, tg, e) == tg
    assert tuple_mul(ctx, tg, delta_encode(inv(g))) == e


def test_tuple_mul_rejects_non_codes():
    with pytest.raises(NotInDomain):
        tuple_mul(C12, (0, 0, 0), (0, first_non_code(1), 0))


# integers as powers of a


def test_gamma_examples():
    a = C21.a(1)
    x = gamma_add(IntAsPower.of(a, 3), IntAsPower.of(a, 4))
    assert x.exponent == 7 and x.element == C21.a(1, 7)
    assert gamma_divides(IntAsPower.of(a, 2), IntAsPower.of(a, 6))
    assert not gamma_divides(IntAsPower.of(a, 4), IntAsPower.of(a, 6))
    assert gamma_mul(IntAsPower.of(a, 2), IntAsPower.of(a, 3)).element == C21.a(1, 6)
    with pytest.raises(BaseMismatch):
        gamma_add(IntAsPower.of(a, 1), IntAsPower.of(C21.a(2), 1))


def test_gamma_divides_grid():
    a = C21.top_element((2, -1))
    for k in range(-20, 21):
        for l in range(-20, 21):
            if l:
                expected = k % l == 0
                assert gamma_divides(IntAsPower.of(a, l), IntAsPower.of(a, k)) == expected
                assert (div_witness(a, k, l) is not None) == expected


@given(st.integers(-100, 100), st.integers(-100, 100), st.integers(-100, 100))
def test_gamma_ring_identities(i, j, k):
    a = C21.a(1)
    x, y, z = (IntAsPower.of(a, v) for v in (i, j, k))
    assert gamma_add(x, y).exponent == i + j
    assert gamma_mul(x, y).exponent == i * j
    lhs = gamma_mul(x, gamma_add(y, z))
    rhs = gamma_add(gamma_mul(x, y), gamma_mul(x, z))
    assert lhs.element == rhs.element


def test_integer_roundtrip():
    for k in range(-100, 101):
        assert int_roundtrip(C21, k) == k
        assert embed_int(C21, k).element == C21.a(1, k)


# the composite coordinate map


def test_lambda_standard_basis_without_top():
    ctx = GroupContext(2, 2)
    basis = Basis.standard(ctx)
    a1 = ctx.a(1)
    ps = [LaurentPoly.var(2, 1) - 3, LaurentPoly.var(2, 2, -2)]
    codes = [IntAsPower.of(a1, nu_encode(p)) for p in ps]
    g = lambda_G(basis, [IntAsPower.of(a1, 0)] * 2, codes)
    assert g == ctx.base_element(ps)


@given(elements())
def test_full_roundtrip_standard_basis(g):
    ctx = g.ctx
    basis = Basis.standard(ctx)
    t = delta_encode(g)
    powers = lift_tuple(basis.tops[0], t)
    assert lambda_G(basis, powers[:ctx.m], powers[ctx.m:]) == g
    assert roundtrip_via_lambda(basis, g) == g


@pytest.mark.parametrize("seed", range(10))
def test_roundtrip_random_basis(seed):
    rng = random.Random(seed)
    ctx = GroupContext(rng.randint(1, 3), rng.randint(1, 3))
    basis = Basis.validated(*random_basis_tuple(rng, ctx))
    for _ in range(20):
        gammas = random_top(rng, ctx.m)
        ps = [random_poly(rng, ctx.m) for _ in range(ctx.n)]
        g = basis.element(gammas, ps)
        assert basis.coordinates(g) == (tuple(gammas), tuple(ps))
        assert roundtrip_via_lambda(basis, g) == g


def test_lambda_errors():
    basis = Basis.standard(C21)
    a1 = C21.a(1)
    ok = [IntAsPower.of(a1, 0)] * 2
    with pytest.raises(BaseMismatch):
        lambda_G(basis, [IntAsPower.of(C21.a(2), 0)] * 2, [IntAsPower.of(a1, 0)])
    with pytest.raises(BaseMismatch):
        lambda_G(basis, ok, [])
    with pytest.raises(NotACode):
        lambda_G(basis, ok, [IntAsPower.of(a1, -1)])
    with pytest.raises(NotACode):
        lambda_G(basis, ok, [IntAsPower.of(a1, first_non_code(2))])
    with pytest.raises(NotABasis):
        lambda_G(([C21.a(1, 2), C21.a(2)], [C21.b(1)]), ok, [IntAsPower.of(a1, 0)])


@given(polys(m=1, max_terms=3))
def test_symbolic_powers_off_A(p):
    # bases outside A keep the exponent symbolic; the value is unchanged
    assume(not p.is_zero())
    base = C12.element((1,), (p, LaurentPoly.zero(1)))
    xs = lift_tuple(base, [0, 5, 123456789])
    assert [x.exponent for x in xs] == [0, 5, 123456789]
    assert xs[1].element == mul(xs[0].element, xs[1].element)
