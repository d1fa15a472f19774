from hypothesis import given, settings
from hypothesis import strategies as st

from girthlab import (
    SimplicialComplex,
    betti_vector,
    euler_characteristic,
    girth,
    reduced_betti,
    suspension,
)

facet = st.sets(st.integers(1, 6), min_size=1, max_size=4).map(sorted)
complexes = st.lists(facet, min_size=1, max_size=5).map(SimplicialComplex)


@settings(max_examples=60, deadline=None)
@given(complexes, st.sampled_from([2, 3, 5]))
def test_euler_poincare(c, p):
    bv = betti_vector(c, p)
    assert sum((-1) ** q * bv[q] for q in range(-1, c.dim + 1)) == euler_characteristic(c)


@settings(max_examples=60, deadline=None)
@given(complexes)
def test_suspension_shift(c):
    s = suspension(c, 50, 51)
    assert all(reduced_betti(s, q + 1) == reduced_betti(c, q) for q in range(-1, c.dim + 1))


@settings(max_examples=60, deadline=None)
@given(complexes, st.data())
def test_girth_monotone_under_restriction(c, data):
    w = data.draw(st.sets(st.sampled_from(c.vertices), min_size=1))
    f = data.draw(st.sampled_from(c.faces()))
    for q in range(c.dim + 1):
        g = girth(c, q).value
        assert g <= girth(c.induced(w), q).value
        assert g <= girth(c.link(f), q).value


@settings(max_examples=60, deadline=None)
@given(complexes)
def test_increasing_girths(c):
    gs = [girth(c, q).value for q in range(c.dim + 1)]
    for q, g in enumerate(gs):
        if g != float("inf"):
            assert all(gs[q - j] <= g - j for j in range(q + 1))
