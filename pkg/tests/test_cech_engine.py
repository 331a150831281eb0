import itertools
import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kodaira_kit.cech_engine import (
    CechCochain,
    TwistingSheaf,
    coboundary,
    coboundary_matrix,
    cochain_basis,
    cohomology,
    cohomology_dim,
    cohomology_dim_matrices,
    expected_dims,
    monomial_cochain,
    multidegrees,
    section_dim,
    verify_delta_squared,
)
from kodaira_kit.cover_nerve import Simplex
from kodaira_kit.errors import DegreeMismatch, DimensionMismatch
from kodaira_kit.symbolic import LaurentPoly


def oracle_h0(n, d):
    """Count exponent vectors >= 0 summing to d (brute force)."""
    if d < 0:
        return 0
    return sum(1 for a in itertools.product(range(d + 1), repeat=n + 1) if sum(a) == d)


def oracle_hn(n, d):
    """Count exponent vectors <= -1 summing to d (brute force)."""
    if d > -(n + 1):
        return 0
    return sum(1 for a in itertools.product(range(d, 0), repeat=n + 1) if sum(a) == d)


def test_section_dim_examples():
    assert section_dim(TwistingSheaf(1, 2), (0,), (2, 0)) == 1
    assert section_dim(TwistingSheaf(1, 2), (0,), (3, -1)) == 0
    assert section_dim(TwistingSheaf(1, -2), (0, 1), (-1, -1)) == 1
    with pytest.raises(DegreeMismatch):
        section_dim(TwistingSheaf(1, 2), (0,), (1, 0))
    with pytest.raises(DimensionMismatch):
        section_dim(TwistingSheaf(1, 2), (0,), (1, 0, 1))


def test_coboundary_matrix_examples():
    m = coboundary_matrix(TwistingSheaf(1, 0), 0, (0, 0))
    # row (0,1), columns (0),(1): (delta s)_{01} = s_1 - s_0
    assert m.shape == (1, 2)
    assert m.to_rows() == [[-1, 1]]
    empty = coboundary_matrix(TwistingSheaf(1, 0), 1, (0, 0))
    assert empty.shape == (0, 1)
    m = coboundary_matrix(TwistingSheaf(1, -2), 0, (-1, -1))
    assert m.shape == (1, 0)


def test_delta_squared_examples():
    s = TwistingSheaf(2, 1)
    assert all(verify_delta_squared(s, 0, a) for a in multidegrees(s).tolist())
    assert verify_delta_squared(TwistingSheaf(1, 5), 1, (3, 2))
    s = TwistingSheaf(2, -3)
    # x^a lives only on the triple overlap: no 0- or 1-cochain slots, one 2-cochain slot
    assert coboundary_matrix(s, 0, (-1, -1, -1)).shape == (0, 0)
    assert coboundary_matrix(s, 1, (-1, -1, -1)).shape == (1, 0)
    assert verify_delta_squared(s, 0, (-1, -1, -1))
    full = coboundary_matrix(TwistingSheaf(2, 0), 0, (0, 0, 0))
    assert full.to_rows() == [[-1, 1, 0], [-1, 0, 1], [0, -1, 1]]
    assert (coboundary_matrix(TwistingSheaf(2, 0), 1, (0, 0, 0)) @ full).is_zero()


def test_cohomology_examples():
    assert cohomology_dim(TwistingSheaf(1, 0), 0) == 1
    assert cohomology_dim(TwistingSheaf(1, 3), 0) == 4
    r = cohomology(TwistingSheaf(1, -3), 1)
    assert r.dim == 2 and r.window == 4
    assert [a for a, _ in r.graded_pieces] == [(-2, -1), (-1, -2)]
    assert cohomology_dim(TwistingSheaf(2, 1), 5) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cohomology_against_counting_oracle(n):
    for d in range(-6, 7):
        s = TwistingSheaf(n, d)
        assert cohomology_dim(s, 0) == oracle_h0(n, d) == (comb(n + d, n) if d >= 0 else 0)
        assert cohomology_dim(s, n) == oracle_hn(n, d)
        for q in range(1, n):
            assert cohomology_dim(s, q) == 0
        assert expected_dims(n, d) == {q: cohomology_dim(s, q) for q in range(n + 1)}


def test_matrix_path_matches_kernel_path():
    for n, d in [(1, -3), (1, 2), (2, -4), (2, 1), (2, -1)]:
        s = TwistingSheaf(n, d)
        for q in range(n + 1):
            assert cohomology_dim_matrices(s, q) == cohomology_dim(s, q)


def test_window_sufficiency():
    for n in (1, 2, 3):
        for d in range(-6, 7):
            s = TwistingSheaf(n, d)
            for q in range(n + 1):
                assert cohomology_dim(s, q) == cohomology_dim(s, q, window=abs(d) + 3)


def test_thread_count_does_not_change_results():
    s = TwistingSheaf(3, -6)
    one = cohomology(s, 3, threads=1)
    many = cohomology(s, 3, threads=8)
    assert one == many


@settings(max_examples=150)
@given(st.data())
def test_delta_squared_property(data):
    n = data.draw(st.integers(min_value=1, max_value=3))
    d = data.draw(st.integers(min_value=-6, max_value=6))
    p = data.draw(st.integers(min_value=0, max_value=n))
    s = TwistingSheaf(n, d)
    a = data.draw(st.sampled_from(multidegrees(s).tolist()))
    assert verify_delta_squared(s, p, a)


def test_explicit_cochains():
    s = TwistingSheaf(1, -2)
    # a 0-cochain cannot carry x0^-1 x1^-1 on a single chart
    with pytest.raises(ValueError):
        CechCochain.from_dict(s, 0, {(0,): LaurentPoly.monomial(s.variables, (-1, -1))})
    c = monomial_cochain(TwistingSheaf(2, 1), 0, (1, 0, 0), [1, 2, 3])
    dc = coboundary(c)
    assert dc.as_dict()[Simplex((0, 1))] == LaurentPoly.monomial(("x0", "x1", "x2"), (1, 0, 0), 1)
    assert coboundary(dc).is_zero()
    basis = cochain_basis(TwistingSheaf(2, 1), 0, (2, -1, 0))
    assert [t.indices for t in basis] == [(1,)]


def test_random_cochain_coboundary_squares_to_zero():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(1, 3)
        d = rng.randint(-4, 4)
        s = TwistingSheaf(n, d)
        p = rng.randint(0, n - 1)
        vals = {}
        for a in rng.sample(multidegrees(s).tolist(), min(4, len(multidegrees(s)))):
            for t in cochain_basis(s, p, a):
                coeff = Fraction(rng.randint(-3, 3))
                vals[t] = vals.get(t, LaurentPoly.zero(s.variables)) + LaurentPoly.monomial(s.variables, a, coeff)
        c = CechCochain.from_dict(s, p, vals)
        assert coboundary(coboundary(c)).is_zero()
