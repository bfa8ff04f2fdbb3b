"""Randomised property checks, one per acceptance criterion.

Each check takes an explicit ``random.Random`` and sample sizes, re-verifies
every answer against an independent route, and returns a ``CheckResult``.
The acceptance tests run them at full size; ``selftest`` runs them small.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from . import condensed as cz
from .definable import (Basis, act_refute, congruent_mod_Ialpha, cyc_member, div_witness,
                        exp_G, exp_mix, exp_N, exp_N_witness, is_basis)
from .encoding import (is_code, nu_decode, nu_encode, pair, tuple_decode, tuple_encode,
                       unpair)
from .interp import delta_encode, int_roundtrip, lambda_G, lift_tuple
from .laurent import LaurentPoly, evaluate
from .lcs import (basic_commutator, basic_commutator_labels, in_lcs, lcs_coords, lcs_rank)
from .sampling import (corrupt_basis, random_base_element, random_basis_tuple, random_element,
                       random_gs, random_poly)
from .wreath import (GroupContext, comm, from_fnrep, fnrep_mul, inv, module_act, mul,
                     to_fnrep)


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def record(self, ok: bool, detail=None):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 5:
                self.failures.append(detail)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.passed} passed, {self.failed} failed ({self.seconds:.1f}s)"


def _timed(fn):
    def wrapper(*args, **kw):
        t0 = time.perf_counter()
        res = fn(*args, **kw)
        res.seconds = time.perf_counter() - t0
        return res
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _ctx(rng, max_m=3, max_n=3):
    return GroupContext(rng.randint(1, max_m), rng.randint(1, max_n))


@_timed
def check_mul_oracle(rng: random.Random, pairs: int = 100_000) -> CheckResult:
    """Normal-form product equals the function-representation product."""
    res = CheckResult("multiplication oracle")
    for _ in range(pairs):
        ctx = _ctx(rng)
        g, h = random_element(rng, ctx), random_element(rng, ctx)
        via_fn = from_fnrep(ctx, fnrep_mul(to_fnrep(g), to_fnrep(h)))
        res.record(mul(g, h) == via_fn, (g, h))
    return res


@_timed
def check_codecs(rng: random.Random, samples: int = 10_000, exhaustive: int = 10_000) -> CheckResult:
    res = CheckResult("codec exactness")
    for _ in range(samples):
        x, y = rng.randrange(10 ** rng.randint(1, 12)), rng.randrange(10 ** rng.randint(1, 12))
        res.record(unpair(pair(x, y)) == (x, y), ("pair", x, y))
        t = tuple(rng.randint(-10 ** 6, 10 ** 6) for _ in range(rng.randint(1, 8)))
        res.record(tuple_decode(tuple_encode(t)) == t, ("tuple", t))
        m = rng.randint(1, 3)
        p = random_poly(rng, m)
        res.record(nu_decode(nu_encode(p), m) == p, ("nu", p))
    for k in range(exhaustive + 1):
        res.record(pair(*unpair(k)) == k, ("unpair", k))
        res.record(tuple_encode(tuple_decode(k)) == k, ("tuple_decode", k))
        if is_code(k):
            res.record(nu_encode(nu_decode(k)) == k, ("nu_decode", k))
    return res


@_timed
def check_cyc_grid(max_beta: int = 4, bound: int = 6) -> CheckResult:
    """Both cyclic-membership routes agree; witnesses re-verified by plain mul."""
    res = CheckResult("cyclic membership grid")
    for m in (1, 2):
        ctx = GroupContext(m, 1)
        b1 = ctx.b(1)
        for beta in range(1, max_beta + 1):
            a = ctx.a(1, beta)
            for top in itertools.product(range(-bound, bound + 1), repeat=m):
                g = ctx.top_element(top)
                v = cyc_member(a, g)  # raises if the two routes disagree
                truth = all(x == 0 for x in top[1:]) and top[0] % beta == 0
                ok = v.holds == truth
                if v.witness is not None:
                    lhs = mul(mul(inv(b1), inv(g)), mul(b1, g))
                    z = v.witness
                    rhs = mul(mul(inv(z), inv(a)), mul(z, a))
                    ok = ok and lhs == rhs
                res.record(ok, (m, beta, top))
    return res


@_timed
def check_div_grid(bound: int = 20) -> CheckResult:
    res = CheckResult("divisibility grid")
    for m in (1, 2):
        ctx = GroupContext(m, 1)
        a = ctx.top_element((1,) + (2,) * (m - 1)) if m > 1 else ctx.a(1)
        b1 = ctx.b(1)
        for k in range(-bound, bound + 1):
            for l in range(-bound, bound + 1):
                if k == 0 or l == 0:
                    continue
                z = div_witness(a, k, l)
                ok = (z is not None) == (k % l == 0)
                if z is not None:
                    ak, al = exp_G(a, k), exp_G(a, l)
                    ok = ok and comm(b1, ak) == comm(z, al)
                res.record(ok, (m, k, l))
    return res


@_timed
def check_exponentiation(rng: random.Random, elements: int = 1000, kmax: int = 20) -> CheckResult:
    res = CheckResult("exponentiation")
    for _ in range(elements):
        ctx = _ctx(rng, 2, 2)
        g = random_element(rng, ctx, degree=2, coeff=5, max_terms=3, top_bound=2)
        a, u = g.top_part(), g.bottom_part()
        mixed = not a.is_identity()
        power = ctx.identity()
        chain = {0: power}
        for k in range(1, kmax + 1):
            power = mul(power, g)
            chain[k] = power
        ginv, power = inv(g), ctx.identity()
        for k in range(1, kmax + 1):
            power = mul(power, ginv)
            chain[-k] = power
        ok = True
        for k in range(-kmax, kmax + 1):
            ok = ok and exp_G(g, k) == chain[k]
            if mixed:
                ok = ok and exp_mix(a, u, k) == chain[k]
                uk, v = exp_N(a, u, k)
                ak = ctx.top_element(tuple(k * x for x in a.top))
                ok = ok and mul(mul(ak, uk), comm(v, a)) == chain[k]
                # uniqueness: u^k admits exactly the witness v, u^k b1 admits none
                ok = ok and exp_N_witness(a, u, k, uk) == v
                ok = ok and exp_N_witness(a, u, k, mul(uk, ctx.b(1))) is None
        res.record(ok, g)
    return res


@_timed
def check_action(rng: random.Random, instances: int = 1000, points: int = 50,
                 corrupted: int = 100) -> CheckResult:
    """h = g^q satisfies every sampled congruence; corrupted h is refuted at a checked point."""
    res = CheckResult("module action congruences")
    for idx in range(instances):
        ctx = _ctx(rng, 2, 2)
        g = random_base_element(rng, ctx, degree=2, coeff=5, max_terms=3)
        q = random_poly(rng, ctx.m, degree=2, coeff=5, max_terms=3)
        h = module_act(g, q)
        ok = act_refute(g, h, q) is None
        for _ in range(points):
            alpha = tuple(rng.randint(-6, 6) for _ in range(ctx.m))
            s = evaluate(q, alpha) if all(alpha) else 0
            ok = ok and congruent_mod_Ialpha(g, h, s, alpha)
        res.record(ok, ("sound", g, q))
        if idx < corrupted:
            j = rng.randint(1, ctx.n)
            bump = LaurentPoly.monomial(tuple(rng.randint(-2, 2) for _ in range(ctx.m)),
                                        rng.choice((-2, -1, 1, 2)))
            bad = mul(h, ctx.b(j, bump))
            alpha = act_refute(g, bad, q)
            ok = alpha is not None and all(alpha)
            ok = ok and not congruent_mod_Ialpha(g, bad, evaluate(q, alpha), alpha)
            res.record(ok, ("refute", g, q, bad))
    return res


@_timed
def check_basis_recognition(rng: random.Random, images: int = 200) -> CheckResult:
    res = CheckResult("basis recognition")
    for _ in range(images):
        ctx = _ctx(rng, 3, 3)
        cs, us = random_basis_tuple(rng, ctx)
        ok = is_basis(cs, us)
        cs2, us2, where = corrupt_basis(rng, cs, us)
        ok = ok and not is_basis(cs2, us2)
        res.record(ok, (ctx, cs, us, where))
    return res


@_timed
def check_roundtrip(rng: random.Random, standard: int = 10_000, bases: int = 20,
                    per_basis: int = 500, kmax: int = 100) -> CheckResult:
    res = CheckResult("bi-interpretability roundtrip")
    for _ in range(standard):
        ctx = _ctx(rng, 3, 3)
        basis = _standard_basis(ctx)
        g = random_element(rng, ctx)
        t = delta_encode(g)
        c1 = basis.tops[0]
        back = lambda_G(basis, lift_tuple(c1, t[:ctx.m]), lift_tuple(c1, t[ctx.m:]))
        res.record(back == g, g)
    for _ in range(bases):
        ctx = _ctx(rng, 3, 3)
        basis = Basis.validated(*random_basis_tuple(rng, ctx))
        c1 = basis.tops[0]
        for _ in range(per_basis):
            # sample through the basis: codes grow doubly exponentially in the
            # number of terms, so g must have short coordinates in this basis
            gammas0 = tuple(rng.randint(-4, 4) for _ in range(ctx.m))
            polys0 = [random_poly(rng, ctx.m) for _ in range(ctx.n)]
            g = basis.element(gammas0, polys0)
            gammas, polys = basis.coordinates(g)
            codes = [nu_encode(p) for p in polys]
            back = lambda_G(basis, lift_tuple(c1, gammas), lift_tuple(c1, codes))
            res.record(back == g and gammas == gammas0 and list(polys) == polys0, (basis, g))
    for m in (1, 2, 3):
        ctx = GroupContext(m, 1)
        for k in range(-kmax, kmax + 1):
            res.record(int_roundtrip(ctx, k) == k, (m, k))
    return res


_STANDARD: dict = {}


def _standard_basis(ctx):
    if ctx not in _STANDARD:
        _STANDARD[ctx] = Basis.standard(ctx)
    return _STANDARD[ctx]


@_timed
def check_lcs(rng: random.Random, max_level: int = 5, planted: int = 5) -> CheckResult:
    res = CheckResult("lower central series")
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            ctx = GroupContext(m, n)
            for i in range(2, max_level + 1):
                labels = basic_commutator_labels(m, n, i)
                res.record(lcs_rank(m, n, i) == len(labels) == len(set(labels)), (m, n, i))
                for k, js in labels:
                    c = basic_commutator(ctx, k, js)
                    ok = lcs_coords(c, i).coeffs == {(k, js): 1} and not in_lcs(c, i + 1)
                    res.record(ok, ("basic", m, n, i, k, js))
                for _ in range(planted):
                    want, g = {}, ctx.identity()
                    for label in rng.sample(labels, min(3, len(labels))):
                        e = rng.choice((-3, -2, -1, 1, 2, 3))
                        want[label] = e
                        g = mul(g, exp_G(basic_commutator(ctx, *label), e))
                    # noise from the next level must not move the coordinates
                    k2, js2 = rng.choice(basic_commutator_labels(m, n, i + 1))
                    g = mul(g, exp_G(basic_commutator(ctx, k2, js2), rng.randint(-3, 3)))
                    ok = in_lcs(g, i) and lcs_coords(g, i).coeffs == want
                    e = rng.choice((-3, -2, 2, 3))
                    ge = exp_G(g, e)
                    # torsion-freeness of G_i / G_(i+1)
                    ok = ok and not in_lcs(ge, i + 1)
                    ok = ok and lcs_coords(ge, i).coeffs == {lb: e * v for lb, v in want.items()}
                    res.record(ok, ("planted", m, n, i, want))
            # g outside G_i stays outside after taking powers
            for _ in range(planted):
                g = random_element(rng, ctx, degree=2, coeff=5, max_terms=3, top_bound=1)
                i = rng.randint(2, max_level)
                if not in_lcs(g, i):
                    res.record(not in_lcs(exp_G(g, rng.randint(2, 5)), i), ("torsion", g, i))
    return res


def gs_sets() -> list:
    return [cz.FiniteSet(()), cz.FiniteSet((0, 3)), cz.PeriodicSet(2),
            cz.Complement(cz.FiniteSet((1,))), cz.Shifted(cz.FiniteSet((0, 2, 5)), 2),
            cz.UniversalSet()]


@_timed
def check_gs(rng: random.Random, triples: int = 100_000, bound: int = 6) -> CheckResult:
    res = CheckResult("G_S suite")
    sets = gs_sets()
    for S in sets:
        for n in (0, 1, -2):
            for label, value in cz.relators(S, n, bound):
                res.record(value.is_identity(), (S.spec, n, label))
        res.record(cz.center_fingerprint(S, bound) == [i for i in range(-bound, bound + 1)
                                                      if i not in S], ("center", S.spec))
        c = cz.GEN_C
        res.record(not c.is_identity() and cz.gs_mul(c, c, S).is_identity(), ("c", S.spec))
    for idx in range(triples):
        S = sets[idx % len(sets)]
        x, y, z = random_gs(rng), random_gs(rng), random_gs(rng)
        lhs = cz.gs_mul(cz.gs_mul(x, y, S), z, S)
        rhs = cz.gs_mul(x, cz.gs_mul(y, z, S), S)
        ok = lhs == rhs
        if idx % 10 == 0:
            ok = ok and cz.gs_mul(x, cz.GEN_C, S) == cz.gs_mul(cz.GEN_C, x, S)
            ok = ok and cz.gs_mul(x, cz.gs_inv(x, S), S).is_identity()
            ok = ok and cz.gs_to_wreath(cz.gs_mul(x, y, S)) == mul(cz.gs_to_wreath(x),
                                                                   cz.gs_to_wreath(y))
        res.record(ok, (S.spec, x, y, z))
    return res


@_timed
def check_condensation(rng: random.Random, r_max: int = 4, iso_samples: int = 20) -> CheckResult:
    res = CheckResult("condensation demo")
    S = cz.UniversalSet()
    rows = cz.condensation_demo(r_max, S, cap=r_max)
    for row in rows:
        ok = row.found and row.shift != 0 and row.fingerprints_equal
        if ok:
            T = cz.shift(S, row.shift)
            w = 2 * row.radius
            ok = S.window(-w, w) == T.window(-w, w)
            ok = ok and cz.ball_fingerprint(S, row.radius) == cz.ball_fingerprint(T, row.radius)
            i = row.separation
            ok = ok and (i in S) != (i in T)
            word = cz.commutator_word(i)
            ok = ok and (cz.gs_eval_word(word, S).is_identity()
                         != cz.gs_eval_word(word, T).is_identity())
        res.record(ok, row)
    res.record(len(rows) == r_max, "rows")
    sets = gs_sets()
    for _ in range(iso_samples):
        S = rng.choice(sets)
        n, r = rng.randint(-5, 5), rng.randint(1, r_max)
        res.record(cz.iso_check(S, n, r, cap=r_max), (S.spec, n, r))
    return res
