import random

import pytest
from hypothesis import assume, given, strategies as st

from strategies import elements, polys
from wreathz.definable import (BASE_GROUP, NEITHER, TOP_GROUP, Basis, act_decide, act_refute,
                               centralizer_class, congruent_mod_G4, congruent_mod_Ialpha,
                               cyc_member, cyc_witness_for, discrete_log, div_witness, exp_G,
                               exp_mix, exp_N, exp_N_witness, in_N, is_basis, is_top_basis,
                               iso_graph_member, iso_transfer, transfer_relation, prod_A)
from wreathz.errors import (BadParameter, BaseMismatch, IdentityElement, NotABasis,
                            NotInCommutant)
from wreathz.laurent import LaurentPoly, evaluate, parse_poly
from wreathz.sampling import random_basis_tuple
from wreathz.wreath import GroupContext, comm, conj, inv, module_act, mul, mul_chain

C11 = GroupContext(1, 1)
C21 = GroupContext(2, 1)
C22 = GroupContext(2, 2)


def p1(text):
    return parse_poly(text, 1)


# classification


def test_centralizer_examples():
    assert centralizer_class(C21.parse("1 | a1 - 1")) == BASE_GROUP
    assert centralizer_class(C21.parse("a1 a2 | 0")) == TOP_GROUP
    assert centralizer_class(C21.parse("a1 | 1")) == NEITHER
    assert in_N(C21.parse("1 | a1 - 1")) and not in_N(C21.a(1))
    with pytest.raises(IdentityElement):
        centralizer_class(C21.identity())


@given(elements(C22), elements(C22))
def test_commuting_elements_share_the_centralizer_class(g, h):
    assume(not g.is_identity())
    if comm(g, h).is_identity():
        kind = centralizer_class(g)
        if kind == BASE_GROUP:
            assert h.in_base()
        elif kind == TOP_GROUP:
            assert h.in_top()


# cyclic membership


def test_cyc_examples():
    a = C11.a(1)
    v = cyc_member(a, C11.a(1, 2))
    assert v.holds and v.witness == C11.b(1, p1("a1 + 1"))
    v = cyc_member(a, C11.identity())
    assert v.holds and v.witness.is_identity()
    assert not cyc_member(C21.a(1), C21.a(2)).holds
    with pytest.raises(BadParameter):
        cyc_member(C11.identity(), a)
    with pytest.raises(BadParameter):
        cyc_member(C11.parse("a1 | 1"), a)


@given(elements(C21, base=True), st.integers(1, 3), st.integers(-4, 4), st.integers(-4, 4))
def test_cyc_for_every_u(u, beta, x, y):
    # g in <a> iff [u, g] = [z, a] is solvable for every u in N
    a = C21.a(1, beta)
    g = C21.top_element((x, y))
    member = cyc_member(a, g).holds
    if member:
        z = cyc_witness_for(u, a, g)
        assert z is not None and comm(u, g) == comm(z, a)
    else:
        assert cyc_witness_for(C21.b(1), a, g) is None


# divisibility


def test_div_examples():
    a = C11.a(1)
    assert div_witness(a, 6, 2) == C11.b(1, p1("a1^4 + a1^2 + 1"))
    assert div_witness(a, 0, 5).is_identity()
    assert div_witness(a, 2, 6) is None
    with pytest.raises(BadParameter):
        div_witness(a, 2, 0)


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_div_matches_integer_divisibility(k, l):
    assume(l != 0)
    a = C21.top_element((1, -2))
    z = div_witness(a, k, l)
    assert (z is not None) == (k % l == 0)
    if z is not None:
        assert comm(C21.b(1), exp_G(a, k)) == comm(z, exp_G(a, l))


# exponentiation


def test_exp_mix_examples():
    a, b = C11.a(1), C11.b(1)
    assert exp_mix(a, b, 3) == C11.parse("a1^3 | a1^2 + a1 + 1")
    assert exp_mix(a, b, 0).is_identity()
    assert exp_mix(a, b, -2) == inv(mul_chain(mul(a, b), 2))


def test_exp_N_examples():
    a, b = C11.a(1), C11.b(1)
    uk, v = exp_N(a, b, 1)
    assert uk == b and v.is_identity()
    uk, v = exp_N(a, b, 2)
    assert v == b
    assert mul(mul(C11.a(1, 2), uk), comm(v, a)) == mul_chain(mul(a, b), 2)


@given(elements(C22, base=True), st.integers(-8, 8), st.tuples(st.integers(-2, 2), st.integers(-2, 2)))
def test_exp_N_uniqueness(u, k, top):
    assume(any(top))
    a = C22.top_element(top)
    uk, v = exp_N(a, u, k)
    assert mul(mul(exp_G(a, k), uk), comm(v, a)) == mul_chain(mul(a, u), k)
    assert exp_N_witness(a, u, k, uk) == v
    assert exp_N_witness(a, u, k, mul(uk, C22.b(1))) is None


@given(elements(), st.integers(-10, 10), st.integers(-10, 10))
def test_exp_G_power_laws(g, k, l):
    assert exp_G(g, 0).is_identity()
    assert mul(exp_G(g, k), exp_G(g, l)) == exp_G(g, k + l)
    assert exp_G(g, 7) == mul_chain(g, 7)


@given(elements())
def test_discrete_log(g):
    assume(not g.is_identity())
    for k in (-3, 0, 5):
        assert discrete_log(g, exp_G(g, k)) == k
    if not g.in_base():
        # the top part pins k = 2, the bottom part is off
        with pytest.raises(BaseMismatch):
            discrete_log(g, mul(exp_G(g, 2), g.ctx.b(1)))


def test_discrete_log_in_N():
    g = C21.b(1, parse_poly("3*a1 - a2", 2))
    assert discrete_log(g, module_act(g, -4)) == -4
    with pytest.raises(BaseMismatch):
        discrete_log(g, C21.b(1, parse_poly("6*a1", 2)))


def test_prod_A():
    ds = [C21.a(1), C21.a(2)]
    assert prod_A(ds, (0, 0)).is_identity()
    assert prod_A(ds, (3, -4)).top == (3, -4)
    ds = [C21.top_element((1, 1)), C21.top_element((2, -1))]
    assert prod_A(ds, (2, 3)) == mul(exp_G(ds[0], 2), exp_G(ds[1], 3))
    with pytest.raises(BadParameter):
        prod_A([C21.b(1)], (1,))


# module action and the congruences modulo I_alpha


def test_act_examples():
    g = C21.b(1)
    q = parse_poly("a1 - 1", 2)
    h = module_act(g, q)
    assert act_decide(g, g, LaurentPoly.one(2))
    assert act_decide(g, h, q)
    assert not act_decide(g, mul(h, g), q)


def test_congruence_examples():
    g, h = C11.b(1), C11.b(1, p1("a1"))
    assert not congruent_mod_Ialpha(g, h, 1, (2,))
    assert congruent_mod_Ialpha(g, h, 1, (1,))
    assert congruent_mod_Ialpha(g, mul(h, g), 5, (0,))  # the ideal is the whole ring


def test_act_refute_examples():
    g = C11.b(1)
    assert act_refute(g, g, p1("1")) is None
    alpha = act_refute(g, g, p1("a1"))
    assert alpha[0] not in (0, 1)
    assert not congruent_mod_Ialpha(g, g, alpha[0], alpha)


@given(elements(C22, base=True), polys(m=2, max_terms=3),
       st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
def test_congruence_holds_for_true_action(g, q, alpha):
    h = module_act(g, q)
    s = 0 if 0 in alpha else evaluate(q, alpha)
    assert congruent_mod_Ialpha(g, h, s, alpha)


@given(elements(C22, base=True), polys(m=2, max_terms=3), elements(C22, base=True))
def test_act_refute_finds_failing_point(g, q, noise):
    h = mul(module_act(g, q), noise)
    alpha = act_refute(g, h, q)
    if noise.is_identity():
        assert alpha is None
    else:
        assert all(alpha) and not congruent_mod_Ialpha(g, h, evaluate(q, alpha), alpha)


# bases


def test_top_basis_examples():
    assert is_top_basis([C22.a(1), C22.a(2)])
    x = C22.b(1)
    assert is_top_basis([conj(C22.a(1), x), conj(C22.a(2), x)])
    assert not is_top_basis([mul(C22.a(1), C22.b(1)), C22.a(2)])
    assert not is_top_basis([C22.a(1, 2), C22.a(2)])
    assert not is_top_basis([C22.b(1), C22.a(2)])


def test_basis_examples():
    std = Basis.standard(C22)
    assert is_basis(std.tops, std.bottoms)
    a1 = parse_poly("a1", 2)
    assert is_basis(std.tops, [C22.b(1, a1), C22.b(2)])
    assert not is_basis(std.tops, [C22.b(1, 2), C22.b(2)])
    with pytest.raises(NotABasis):
        Basis.validated(std.tops, [C22.b(1), C22.b(1)])


@pytest.mark.parametrize("seed", range(12))
def test_random_bases_and_coordinates(seed):
    rng = random.Random(seed)
    ctx = GroupContext(rng.randint(1, 3), rng.randint(1, 3))
    cs, us = random_basis_tuple(rng, ctx)
    basis = Basis.validated(cs, us)
    for _ in range(5):
        gammas = tuple(rng.randint(-3, 3) for _ in range(ctx.m))
        polys_c = [LaurentPoly(ctx.m, {tuple(rng.randint(-2, 2) for _ in range(ctx.m)):
                                       rng.randint(-3, 3)}) for _ in range(ctx.n)]
        g = basis.element(gammas, polys_c)
        got_gammas, got_polys = basis.coordinates(g)
        assert got_gammas == gammas and list(got_polys) == polys_c


# G / G_4 and the isomorphisms between cyclic subgroups


def test_congruent_mod_G4_examples():
    b1, a1 = C11.b(1), C11.a(1)
    assert transfer_relation(b1, a1, a1, 1, 1)
    assert not transfer_relation(b1, a1, a1, 1, 2)
    x = comm(b1, a1)
    assert congruent_mod_G4(x, x)
    with pytest.raises(NotInCommutant):
        congruent_mod_G4(b1, x)


@pytest.mark.parametrize("seed", range(6))
def test_transfer_relation_criterion(seed):
    rng = random.Random(seed)
    ctx = C22
    a = ctx.top_element((rng.randint(-2, 2) or 1, rng.randint(-2, 2)))
    d = ctx.top_element((rng.randint(-2, 2), rng.randint(-2, 2) or 1))
    # u outside G_2: some coordinate has nonzero coefficient sum
    u = mul(ctx.b(1, LaurentPoly(2, {(1, 0): 2, (0, 0): -1})), ctx.b(2, LaurentPoly.var(2, 2)))
    for k in range(-6, 7):
        for l in range(-6, 7):
            assert transfer_relation(u, a, d, k, l) == (k == l)


def test_transfer_relation_needs_u_outside_G2():
    # for u in G_2 the relation holds for k != l as well
    u = comm(C11.b(1), C11.a(1))
    a = d = C11.a(1)
    assert transfer_relation(u, a, d, 1, 2)


def test_iso_transfer():
    a, d = C21.a(1), C21.top_element((1, 2))
    assert iso_transfer(a, d, 0).is_identity()
    for k in (-3, 1, 4):
        y = iso_transfer(a, d, k)
        assert y == exp_G(d, k)
        assert iso_transfer(d, a, k) == exp_G(a, k)
        assert iso_graph_member(a, d, exp_G(a, k), y)
        assert not iso_graph_member(a, d, exp_G(a, k), exp_G(d, k + 1))
    # (a^k, d^(2^k)) never lies on the graph since 2^k != k
    for k in range(11):
        assert not iso_graph_member(a, d, exp_G(a, k), exp_G(d, 2 ** k))
