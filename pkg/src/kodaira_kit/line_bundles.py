"""Line bundles on projective n-space as multiplicative cocycles of unit monomials.

Convention: ``g(i, j)`` lives on ``U_i ∩ U_j`` and relates local
trivializations by ``s_i = g(i, j) * s_j``. The twisting sheaf O(d) has
``g(i, j) = (x_j / x_i)^d`` (a degree-d form F gives ``s_i = F / x_i^d``).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .errors import DimensionMismatch, NotEquivalent
from .symbolic import LaurentPoly, RationalFunc, to_scalar


@dataclass(frozen=True)
class UnitMonomial:
    coeff: Fraction
    exponents: tuple

    def __post_init__(self):
        c = to_scalar(self.coeff)
        if c == 0:
            raise ValueError("a unit monomial needs a nonzero coefficient")
        object.__setattr__(self, "coeff", c)
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))

    @classmethod
    def one(cls, nvars):
        return cls(Fraction(1), (0,) * nvars)

    @property
    def degree(self):
        return sum(self.exponents)

    def is_one(self):
        return self.coeff == 1 and not any(self.exponents)

    def __mul__(self, other):
        if len(other.exponents) != len(self.exponents):
            raise DimensionMismatch("unit monomials over different variable counts")
        return UnitMonomial(
            self.coeff * other.coeff,
            tuple(a + b for a, b in zip(self.exponents, other.exponents)),
        )

    def inverse(self):
        return UnitMonomial(1 / self.coeff, tuple(-e for e in self.exponents))

    def __pow__(self, k):
        return UnitMonomial(self.coeff ** k, tuple(k * e for e in self.exponents))

    def to_laurent(self, variables):
        return LaurentPoly.monomial(variables, self.exponents, self.coeff)

    def to_rational(self, variables):
        return RationalFunc(self.to_laurent(variables))

    def __str__(self):
        return str(self.to_laurent(tuple(f"x{i}" for i in range(len(self.exponents)))))


def _homogeneous_names(n):
    return tuple(f"x{i}" for i in range(n + 1))


@dataclass(frozen=True)
class MonomialCocycle:
    """Transition functions ``g(i, j)`` for every ordered pair of distinct charts 0..n."""

    n: int
    g: tuple  # (((i, j), UnitMonomial), ...) sorted
    variables: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("cocycles live on at least two charts")
        variables = tuple(self.variables) or _homogeneous_names(self.n)
        if len(variables) != self.n + 1:
            raise DimensionMismatch("one homogeneous variable per chart")
        object.__setattr__(self, "variables", variables)
        table = dict(self.g)
        need = set(permutations(range(self.n + 1), 2))
        if set(table) != need:
            missing = sorted(need - set(table))
            extra = sorted(set(table) - need)
            raise ValueError(f"cocycle table mismatch: missing {missing}, unexpected {extra}")
        for key, m in table.items():
            if len(m.exponents) != self.n + 1:
                raise DimensionMismatch(f"g{key} has the wrong number of exponents")
            if m.degree != 0:
                raise ValueError(f"g{key} is not homogeneous of degree 0")
        object.__setattr__(self, "g", tuple(sorted(table.items())))

    @classmethod
    def from_mapping(cls, n, mapping, variables=()):
        return cls(n, tuple(mapping.items()), variables)

    @classmethod
    def from_upper(cls, n, upper, variables=()):
        """Build from ``g(i, j)`` for ``i < j``; ``g(j, i)`` is the inverse."""
        table = {}
        for (i, j), m in upper.items():
            if i >= j:
                raise ValueError("from_upper expects pairs with i < j")
            table[(i, j)] = m
            table[(j, i)] = m.inverse()
        return cls(n, tuple(table.items()), variables)

    def __getitem__(self, key):
        return dict(self.g)[key]

    def table(self):
        return dict(self.g)


def standard_bundle(n, d):
    """Cocycle ``g(i, j) = (x_j / x_i)^d`` of O(d) on projective n-space."""
    if n < 1:
        raise ValueError("n must be at least 1")
    table = {}
    for i, j in permutations(range(n + 1), 2):
        e = [0] * (n + 1)
        e[i] -= d
        e[j] += d
        table[(i, j)] = UnitMonomial(Fraction(1), tuple(e))
    return MonomialCocycle(n, tuple(table.items()))


def trivial_bundle(n):
    return standard_bundle(n, 0)


def check_cocycle(c):
    """Inverse law on pairs and the triple-product law on triples."""
    t = c.table()
    for i, j in combinations(range(c.n + 1), 2):
        if not (t[(i, j)] * t[(j, i)]).is_one():
            return False
    for i, j, k in combinations(range(c.n + 1), 3):
        if not (t[(i, j)] * t[(j, k)] * t[(k, i)]).is_one():
            return False
    return True


def _same_shape(a, b):
    if a.n != b.n:
        raise DimensionMismatch(f"cocycles on P^{a.n} and P^{b.n}")


def tensor(a, b):
    _same_shape(a, b)
    ta, tb = a.table(), b.table()
    return MonomialCocycle(a.n, tuple((k, ta[k] * tb[k]) for k in ta), a.variables)


def dual(a):
    return MonomialCocycle(a.n, tuple((k, m.inverse()) for k, m in a.g), a.variables)


def power(a, k):
    return MonomialCocycle(a.n, tuple((key, m ** k) for key, m in a.g), a.variables)


def equivalence_degree(c):
    """The d with ``c`` cohomologous to O(d) through constant (global unit) coboundaries.

    Units on the affine charts of the standard cover are nonzero constants, so
    ``c`` is equivalent to O(d) iff ``g(i, j) = (c_i / c_j) (x_j / x_i)^d``.
    """
    if not check_cocycle(c):
        raise NotEquivalent("input fails the cocycle conditions")
    t = c.table()
    e01 = t[(0, 1)].exponents
    d = e01[1]
    for (i, j), m in t.items():
        expected = [0] * (c.n + 1)
        expected[i] -= d
        expected[j] += d
        if list(m.exponents) != expected:
            raise NotEquivalent(
                f"g({i},{j}) = {m} is not a constant multiple of (x{j}/x{i})^{d}"
            )
    # constants: c_i = g(i, 0) coefficient, consistency follows from the cocycle law
    scale = {0: Fraction(1)}
    for i in range(1, c.n + 1):
        scale[i] = t[(i, 0)].coeff
    for (i, j), m in t.items():
        if m.coeff != scale[i] / scale[j]:
            raise NotEquivalent(f"coefficient of g({i},{j}) is not a constant coboundary")
    return d


def coboundary_constants(c):
    """Per-chart constants ``c_i`` with ``g(i, j) = (c_i / c_j) * standard`` (``c_0 = 1``)."""
    equivalence_degree(c)
    t = c.table()
    return [Fraction(1)] + [t[(i, 0)].coeff for i in range(1, c.n + 1)]
