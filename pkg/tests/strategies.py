"""
Hypothesis strategies shared by the property tests.
"""

from math import gcd

from hypothesis import strategies as st

from knotobs.models.knot_sum import NEGATIVE, POSITIVE, KnotSum, TorusKnotFactor
from knotobs.models.laurent import LaurentPoly

signs = st.sampled_from([POSITIVE, NEGATIVE])

torus_params = st.tuples(st.integers(2, 7), st.integers(3, 15)).filter(
    lambda pq: pq[0] != pq[1] and gcd(*pq) == 1
)

two_strand_params = st.integers(1, 12).map(lambda n: (2, 2 * n + 1))


@st.composite
def torus_factors(draw, params=torus_params):
    p, q = draw(params)
    return TorusKnotFactor(p, q, draw(signs))


def knot_sums(max_size: int = 5, params=torus_params):
    return st.lists(torus_factors(params), max_size=max_size).map(lambda fs: KnotSum(tuple(fs)))


two_strand_sums = knot_sums(max_size=5, params=two_strand_params)

laurent_polys = st.dictionaries(
    st.integers(-8, 8), st.integers(-20, 20), max_size=6
).map(LaurentPoly)

nonzero_laurent_polys = laurent_polys.filter(lambda p: not p.is_zero())
