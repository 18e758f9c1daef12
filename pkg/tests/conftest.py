import random

import pytest
from hypothesis import strategies as st

from lgmirror import GF, QQ, PolynomialRing


@pytest.fixture
def R3():
    return PolynomialRing("x y z", QQ)


def polynomials(ring, max_terms=5, max_exp=3, coeff=st.integers(-6, 6)):
    """Hypothesis strategy for small polynomials in ``ring``."""
    exps = st.tuples(*[st.integers(0, max_exp)] * ring.nvars)
    return st.dictionaries(exps, coeff, max_size=max_terms).map(ring.from_terms)


def random_poly(ring, rng: random.Random, terms=4, max_exp=3, bound=9):
    return ring.from_terms({
        tuple(rng.randint(0, max_exp) for _ in range(ring.nvars)): rng.randint(-bound, bound)
        for _ in range(terms)
    })
