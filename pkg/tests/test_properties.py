"""Hypothesis property tests for the core inequalities."""

import numpy as np
from hypothesis import given, settings, strategies as st

from orthobound import (
    DependentVectors,
    ZeroVector,
    extremizer,
    gram2,
    inner,
    make_dense,
    make_weighted,
    norm_sq,
    ostrowski_bound,
    schwarz_gap,
)

REL_EPS = 1e-9

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)


def vectors(dim_min=1, dim_max=8):
    return st.integers(dim_min, dim_max).flatmap(
        lambda n: st.tuples(
            st.lists(finite, min_size=n, max_size=n),
            st.lists(finite, min_size=n, max_size=n),
        )
    )


def complex_pairs(dim_min=1, dim_max=8):
    def build(n):
        coord = st.tuples(finite, finite).map(lambda p: complex(*p))
        vec = st.lists(coord, min_size=n, max_size=n)
        return st.tuples(vec, vec)

    return st.integers(dim_min, dim_max).flatmap(build)


@given(complex_pairs())
@settings(max_examples=300)
def test_schwarz_gap_nonnegative(pair):
    u, v = pair
    s = make_dense(len(u))
    assert schwarz_gap(s, u, v) >= -REL_EPS * norm_sq(s, u) * norm_sq(s, v)


@given(vectors())
@settings(max_examples=300)
def test_gram_det_symmetric(pair):
    a, b = pair
    s = make_dense(len(a))
    da = gram2(s, a, b).det
    db = gram2(s, b, a).det
    assert abs(da - db) <= REL_EPS * (1 + abs(da))


@given(complex_pairs())
@settings(max_examples=200)
def test_inner_conjugate_symmetry(pair):
    u, v = pair
    s = make_dense(len(u))
    lhs = inner(s, u, v)
    rhs = inner(s, v, u).conjugate()
    assert abs(lhs - rhs) <= 1e-12 * (1 + abs(lhs))


@given(
    complex_pairs(dim_min=2),
    st.floats(min_value=0.01, max_value=100.0),
    st.floats(min_value=0.01, max_value=100.0),
)
@settings(max_examples=200)
def test_bound_scale_covariance(pair, lam, mu):
    a, b = pair
    s = make_dense(len(a))
    if norm_sq(s, a) == 0.0:
        return
    bound = ostrowski_bound(s, a, b)
    scaled_a = ostrowski_bound(s, [lam * z for z in a], b)
    scaled_b = ostrowski_bound(s, a, [mu * z for z in b])
    # the determinant's rounding error scales with ||a||^2 ||b||^2, so the
    # bound's error scales with ||b||^2, not with the bound itself
    nb = norm_sq(s, b)
    assert abs(scaled_a - bound) <= REL_EPS * (1 + bound + nb)
    assert abs(scaled_b - mu**2 * bound) <= REL_EPS * mu**2 * (1 + bound + nb)


@given(complex_pairs(dim_min=2), st.sampled_from([1.0, -1.0, 1j, -1j, np.exp(0.7j)]))
@settings(max_examples=200)
def test_extremizer_phase_invariance(pair, phase):
    """Rotating the extremizer by a unit scalar changes none of the
    quantities the equality case is stated in."""
    a, b = pair
    s = make_dense(len(a))
    try:
        x = extremizer(s, a, b)
    except (DependentVectors, ZeroVector):
        return
    y = phase * x
    bound = ostrowski_bound(s, a, b)
    assert abs(norm_sq(s, y) - norm_sq(s, x)) <= 1e-12 * (1 + norm_sq(s, x))
    assert abs(abs(inner(s, y, b)) ** 2 - abs(inner(s, x, b)) ** 2) <= 1e-9 * (1 + bound)
    assert abs(abs(inner(s, y, a)) - abs(inner(s, x, a))) <= 1e-12 * (1 + norm_sq(s, a))


@given(
    st.lists(st.floats(min_value=0.1, max_value=10.0), min_size=2, max_size=6),
    st.integers(0, 2**32 - 1),
)
@settings(max_examples=100)
def test_weighted_schwarz(weights, seed):
    s = make_weighted(weights)
    rng = np.random.default_rng(seed)
    u = rng.standard_normal(s.dim) + 1j * rng.standard_normal(s.dim)
    v = rng.standard_normal(s.dim) + 1j * rng.standard_normal(s.dim)
    assert schwarz_gap(s, u, v) >= -REL_EPS * norm_sq(s, u) * norm_sq(s, v)
