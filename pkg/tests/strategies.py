"""Hypothesis strategies shared by the test modules."""
from hypothesis import strategies as st

from wreathz.condensed import GSElement
from wreathz.laurent import LaurentPoly
from wreathz.wreath import GroupContext

coeffs = st.integers(-9, 9)


@st.composite
def polys(draw, m=None, lo=-4, hi=4, max_terms=4):
    if m is None:
        m = draw(st.integers(1, 3))
    exps = st.tuples(*[st.integers(lo, hi)] * m)
    terms = draw(st.dictionaries(exps, coeffs, max_size=max_terms))
    return LaurentPoly(m, terms)


def ordinary_polys(m, max_terms=4, hi=4):
    return polys(m=m, lo=0, hi=hi, max_terms=max_terms)


contexts = st.builds(GroupContext, st.integers(1, 3), st.integers(1, 3))


@st.composite
def elements(draw, ctx=None, base=False, top=None):
    if ctx is None:
        ctx = draw(contexts)
    gamma = (0,) * ctx.m if base else draw(st.tuples(*[st.integers(-3, 3)] * ctx.m))
    bottom = tuple(draw(polys(m=ctx.m, lo=-3, hi=3, max_terms=3)) for _ in range(ctx.n))
    return ctx.element(gamma, bottom)


@st.composite
def element_lists(draw, k, base=False):
    ctx = draw(contexts)
    return [draw(elements(ctx, base=base)) for _ in range(k)]


@st.composite
def gs_elements(draw):
    p = polys(m=1, lo=-3, hi=3, max_terms=3)
    return GSElement(draw(st.integers(-3, 3)), draw(p), draw(p), draw(st.integers(0, 1)))
