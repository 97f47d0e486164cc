import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from spinsym.algebra import Field, Multivector, Signature
from spinsym.exact import QC


def signatures(max_n=6):
    pairs = [(p, q) for p in range(max_n + 1) for q in range(max_n + 1)
             if 1 <= p + q <= max_n]
    return st.sampled_from(pairs)


@st.composite
def multivectors(draw, ctx: Signature, max_terms=4, bound=6):
    nterms = draw(st.integers(min_value=0, max_value=max_terms))
    terms = {}
    for _ in range(nterms):
        mask = draw(st.integers(min_value=0, max_value=(1 << ctx.n) - 1))
        re = draw(st.integers(min_value=-bound, max_value=bound))
        im = draw(st.integers(min_value=-bound, max_value=bound))
        terms[mask] = terms.get(mask, QC(0)) + QC(re, im)
    return Multivector(ctx, terms)


@st.composite
def context_and_triple(draw, max_n=5):
    p, q = draw(signatures(max_n))
    field = draw(st.sampled_from([Field.REAL, Field.COMPLEX]))
    ctx = Signature(p, q, field)
    return ctx, tuple(draw(multivectors(ctx)) for _ in range(3))


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def fr():
    return Fraction
