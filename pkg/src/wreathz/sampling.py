"""Seeded random generators for polynomials, group elements and bases."""
from __future__ import annotations

import random

from .condensed import GSElement
from .definable import exp_G
from .laurent import LaurentPoly
from .wreath import GroupContext, WreathElement, conj, module_act, mul


def random_poly(rng: random.Random, m: int, degree: int = 4, coeff: int = 9,
                max_terms: int = 4, laurent: bool = True) -> LaurentPoly:
    lo = -degree if laurent else 0
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = tuple(rng.randint(lo, degree) for _ in range(m))
        terms[e] = rng.randint(-coeff, coeff)
    return LaurentPoly(m, terms)


def random_top(rng: random.Random, m: int, bound: int = 4) -> tuple:
    return tuple(rng.randint(-bound, bound) for _ in range(m))


def random_element(rng: random.Random, ctx: GroupContext, degree: int = 4, coeff: int = 9,
                   max_terms: int = 4, top_bound: int = 4) -> WreathElement:
    top = random_top(rng, ctx.m, top_bound)
    bottom = tuple(random_poly(rng, ctx.m, degree, coeff, max_terms) for _ in range(ctx.n))
    return ctx.element(top, bottom)


def random_base_element(rng: random.Random, ctx: GroupContext, **kw) -> WreathElement:
    g = random_element(rng, ctx, **kw)
    return g.bottom_part()


def random_nontrivial_top(rng: random.Random, ctx: GroupContext, bound: int = 3) -> WreathElement:
    while True:
        top = random_top(rng, ctx.m, bound)
        if any(top):
            return ctx.top_element(top)


# automorphism images of the standard basis


def _unit(rng: random.Random, m: int) -> LaurentPoly:
    e = tuple(rng.randint(-2, 2) for _ in range(m))
    return LaurentPoly.monomial(e, rng.choice((1, -1)))


def random_basis_tuple(rng: random.Random, ctx: GroupContext, moves: int = 6) -> tuple[list, list]:
    """Apply random basis-preserving moves to (a1..am, b1..bn).

    Moves: elementary GL_m(Z) moves on the tops, elementary moves over Z[A] on
    the bottoms (add a ring multiple of one u to another, scale by a unit),
    and conjugation of the whole tuple by a random element.  For m = 1 the
    top may also absorb an arbitrary base-group factor.
    """
    cs = [ctx.a(i) for i in range(1, ctx.m + 1)]
    us = [ctx.b(j) for j in range(1, ctx.n + 1)]
    for _ in range(moves):
        kind = rng.randrange(5)
        if kind == 0 and ctx.m > 1:
            i, j = rng.sample(range(ctx.m), 2)
            k = rng.choice((-2, -1, 1, 2))
            cs[i] = mul(cs[i], exp_G(cs[j], k))
        elif kind == 1:
            i = rng.randrange(ctx.m)
            cs[i] = exp_G(cs[i], -1)
        elif kind == 2 and ctx.n > 1:
            i, j = rng.sample(range(ctx.n), 2)
            q = random_poly(rng, ctx.m, degree=2, coeff=3, max_terms=2)
            us[i] = mul(us[i], module_act(us[j], q))
        elif kind == 3:
            i = rng.randrange(ctx.n)
            us[i] = module_act(us[i], _unit(rng, ctx.m))
        else:
            g = random_element(rng, ctx, degree=2, coeff=3, max_terms=2, top_bound=2)
            cs = [conj(c, g) for c in cs]
            us = [conj(u, g) for u in us]
    if ctx.m == 1 and rng.random() < 0.5:
        v = random_base_element(rng, ctx, degree=2, coeff=3, max_terms=2)
        cs[0] = mul(cs[0], v)
    return cs, us


def corrupt_basis(rng: random.Random, cs: list, us: list) -> tuple[list, list, str]:
    """One move that destroys the basis property: square a top or a bottom entry.

    Squaring c_i makes the top determinant +-2; squaring u_j makes the bottom
    determinant 2 times a unit, which is not a unit.
    """
    cs, us = list(cs), list(us)
    if rng.random() < 0.5:
        i = rng.randrange(len(cs))
        cs[i] = mul(cs[i], cs[i])
        return cs, us, "top"
    j = rng.randrange(len(us))
    us[j] = mul(us[j], us[j])
    return cs, us, "bottom"


# G_S


def random_gs(rng: random.Random, degree: int = 3, coeff: int = 3, max_terms: int = 3) -> GSElement:
    return GSElement(rng.randint(-3, 3),
                     random_poly(rng, 1, degree, coeff, max_terms),
                     random_poly(rng, 1, degree, coeff, max_terms),
                     rng.randint(0, 1))


def random_word(rng: random.Random, length: int, letters: str = "aAbBtT") -> str:
    return "".join(rng.choice(letters) for _ in range(length))
