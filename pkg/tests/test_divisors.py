import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kodaira_kit.cech_engine import TwistingSheaf, cohomology_dim
from kodaira_kit.divisors import (
    INFINITY,
    DivisorP1,
    PointP1,
    bundle_of_divisor,
    homogenize_section,
    is_effective,
    linear_equivalence_witness,
    linearly_equivalent,
    ord_at,
    point,
    principal_divisor,
    rational_roots,
    section_space,
)
from kodaira_kit.errors import NonSplitPolynomial, ZeroFunction
from kodaira_kit.line_bundles import check_cocycle, equivalence_degree
from kodaira_kit.linalg_exact import ExactMatrix, rank
from kodaira_kit.symbolic import RationalFunc, parse_rational

Z = ("z",)


def P(text):
    return parse_rational(text, Z)


def D(*pairs):
    return DivisorP1.of(*pairs)


def test_ord_examples():
    f = P("z^2/(z-1)")
    assert ord_at(f, 0) == 2
    assert ord_at(f, "inf") == -1
    assert ord_at(f, 1) == -1
    assert ord_at(P("z^2+1"), 3) == 0  # a unit near 3
    with pytest.raises(ZeroFunction):
        ord_at(P("0"), 0)


def test_principal_examples():
    assert principal_divisor(P("(z-1)/(z+1)")) == D((1, 1), (-1, -1))
    assert principal_divisor(P("z")) == D((0, 1), ("inf", -1))
    assert principal_divisor(P("7")).is_zero()
    assert principal_divisor(P("(2*z-1)^2*z/(3*z+1)")) == D(("1/2", 2), (0, 1), ("-1/3", -1), ("inf", -2))
    with pytest.raises(NonSplitPolynomial):
        principal_divisor(P("(z^2+1)/z"))


def test_rational_roots():
    roots, rest = rational_roots([Fraction(-2), 0, 1])  # z^2 - 2
    assert roots == {} and len(rest) == 3
    roots, rest = rational_roots([6, -5, 1])
    assert roots == {2: 1, 3: 1} and len(rest) == 1


def test_bundle_examples():
    for p in ("1/2", -3, 5):
        b = bundle_of_divisor(D((p, 1)))
        assert b.degree == 1
        # f0/f1 = -p z: a unit multiple of x1/x0
        assert b.transition == P("z") * -point(p).value
    assert bundle_of_divisor(D()).degree == 0
    b = bundle_of_divisor(D((0, 2), ("inf", -1)))
    assert b.degree == 1
    assert check_cocycle(b.witness) and equivalence_degree(b.witness) == 1


def test_section_space_examples():
    s = section_space(D((0, 3)))
    assert s.dim == 4
    assert list(s.basis) == [P("1"), P("1/z"), P("1/z^2"), P("1/z^3")]
    assert list(section_space(D()).basis) == [P("1")]
    assert section_space(D((0, -1))).dim == 0


def test_effective_and_equivalence_examples():
    assert is_effective(D((0, 2), (1, 1)))
    assert not is_effective(D((0, 2), (1, -1)))
    assert linearly_equivalent(D((0, 1)), D(("inf", 1)))
    assert linear_equivalence_witness(D((0, 1)), D(("inf", 1))) == P("z")
    assert linearly_equivalent(D((0, 1), (1, 1)), D(("inf", 2)))
    assert linear_equivalence_witness(D((0, 1), (1, 1)), D(("inf", 2))) == P("z*(z-1)")
    assert not linearly_equivalent(D((0, 1)), D((0, 2)))


def test_divisor_arithmetic_and_printing():
    a = D((0, 2), ("inf", -1), (0, -2))
    assert a == D(("inf", -1))
    assert str(D((0, 2), ("inf", -1), ("1/2", 1))) == "2[0] + [1/2] - [inf]"
    assert (D((1, 1)) * 3).degree == 3
    assert PointP1(Fraction(1)) < INFINITY


# -- properties -----------------------------------------------------------------

roots = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))


@st.composite
def split_functions(draw):
    z = RationalFunc.var(Z, "z")
    f = RationalFunc.constant(Z, draw(st.integers(1, 9)) * draw(st.sampled_from([1, -1])))
    for _ in range(draw(st.integers(0, 4))):
        f = f * (z - draw(roots)) ** draw(st.sampled_from([-2, -1, 1, 2, 3]))
    return f


@given(split_functions())
def test_principal_divisor_has_degree_zero(f):
    assert principal_divisor(f).degree == 0


@given(split_functions(), split_functions(), st.one_of(roots.map(PointP1), st.just(INFINITY)))
def test_order_is_additive(f, g, p):
    assert ord_at(f * g, p) == ord_at(f, p) + ord_at(g, p)
    assert ord_at(1 / f, p) == -ord_at(f, p)


@st.composite
def divisors_(draw, effective=False):
    lo = 0 if effective else -3
    pairs = draw(st.lists(st.tuples(st.one_of(roots, st.just("inf")), st.integers(lo, 3)), max_size=4))
    return DivisorP1.of(*pairs)


@given(divisors_())
def test_section_space_matches_cohomology(Dv):
    s = section_space(Dv)
    expected = Dv.degree + 1 if Dv.degree >= 0 else 0
    assert s.dim == expected
    if Dv.degree >= 0:
        assert s.dim == cohomology_dim(TwistingSheaf(1, Dv.degree), 0)


@given(divisors_())
def test_section_space_basis_is_admissible_and_independent(Dv):
    s = section_space(Dv)
    for f in s.basis:
        assert is_effective(Dv + principal_divisor(f))
    if s.basis:
        forms = [homogenize_section(f, Dv) for f in s.basis]
        mons = sorted({e for p in forms for e, _ in p.terms()})
        m = ExactMatrix.from_rows([[p.coeff(e) for e in mons] for p in forms])
        assert rank(m) == len(forms)


@given(divisors_(), divisors_())
def test_equivalence_iff_same_degree(a, b):
    assert linearly_equivalent(a, b) == (a.degree == b.degree)
    w = linear_equivalence_witness(a, b)
    if w is not None:
        assert principal_divisor(w) == a - b


@given(divisors_())
def test_bundle_degree_is_divisor_degree(Dv):
    b = bundle_of_divisor(Dv)
    assert b.degree == Dv.degree == equivalence_degree(b.witness)


def test_random_split_functions_corpus():
    rng = random.Random(5)
    z = RationalFunc.var(Z, "z")
    for _ in range(100):
        expect = {}
        f = RationalFunc.constant(Z, rng.randint(1, 5))
        for _ in range(rng.randint(1, 4)):
            r = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
            k = rng.choice([-2, -1, 1, 2])
            f = f * (z - r) ** k
            expect[PointP1(r)] = expect.get(PointP1(r), 0) + k
        expect[INFINITY] = -sum(expect.values())
        assert principal_divisor(f) == DivisorP1(tuple(expect.items()))
