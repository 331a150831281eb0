"""Divisors on the projective line over the rationals.

The affine coordinate is ``z = x1/x0`` on the chart ``U_0 = {x0 != 0}``; the
point at infinity is ``[0:1]``. Rational functions are univariate
RationalFuncs (a single variable, ``z`` by default).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

from .errors import NonSplitPolynomial, ZeroFunction
from .line_bundles import MonomialCocycle, UnitMonomial, equivalence_degree
from .symbolic import RationalFunc, format_scalar, to_scalar, univariate_parts
from .symbolic.laurent import upoly_divmod, upoly_trim

Z = ("z",)


@dataclass(frozen=True)
class PointP1:
    value: Fraction = None  # None encodes the point at infinity

    def __post_init__(self):
        if self.value is not None:
            object.__setattr__(self, "value", to_scalar(self.value))

    @classmethod
    def affine(cls, value):
        return cls(to_scalar(value))

    @property
    def is_infinity(self):
        return self.value is None

    def sort_key(self):
        return (1, Fraction(0)) if self.value is None else (0, self.value)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "inf" if self.value is None else format_scalar(self.value)

    def homogeneous(self):
        """Coordinates ``[x0 : x1]``."""
        if self.value is None:
            return (Fraction(0), Fraction(1))
        return (Fraction(1), self.value)


INFINITY = PointP1(None)


def point(text_or_value):
    """Parse ``"inf"``/``"oo"`` or a rational into a PointP1."""
    if isinstance(text_or_value, PointP1):
        return text_or_value
    if isinstance(text_or_value, str) and text_or_value.strip().lower() in ("inf", "oo", "infinity"):
        return INFINITY
    return PointP1.affine(text_or_value)


@dataclass(frozen=True)
class DivisorP1:
    support: tuple = ()  # ((PointP1, int), ...) sorted, no zero coefficients

    def __post_init__(self):
        acc = {}
        for p, k in self.support:
            p = point(p)
            acc[p] = acc.get(p, 0) + int(k)
        items = sorted(((p, k) for p, k in acc.items() if k), key=lambda pk: pk[0].sort_key())
        object.__setattr__(self, "support", tuple(items))

    @classmethod
    def from_dict(cls, mapping):
        return cls(tuple(mapping.items()))

    @classmethod
    def of(cls, *pairs):
        """``DivisorP1.of((0, 2), ("inf", -1))`` is ``2[0] - [inf]``."""
        return cls(tuple((point(p), k) for p, k in pairs))

    def as_dict(self):
        return dict(self.support)

    def coefficient(self, p):
        return self.as_dict().get(point(p), 0)

    @property
    def degree(self):
        return sum(k for _, k in self.support)

    def is_zero(self):
        return not self.support

    def __add__(self, other):
        return DivisorP1(self.support + other.support)

    def __neg__(self):
        return DivisorP1(tuple((p, -k) for p, k in self.support))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        return DivisorP1(tuple((p, k * m) for p, m in self.support))

    __rmul__ = __mul__

    def __str__(self):
        if not self.support:
            return "0"
        parts = []
        for p, k in self.support:
            coef = "" if abs(k) == 1 else f"{abs(k)}"
            parts.append(("-" if k < 0 else "+", f"{coef}[{p}]"))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out


# -- univariate root helpers ----------------------------------------------------


def _eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _multiplicity(coeffs, root):
    coeffs = upoly_trim(coeffs)
    k = 0
    lin = [-root, Fraction(1)]
    while len(coeffs) > 1 and _eval(coeffs, root) == 0:
        coeffs, _ = upoly_divmod(coeffs, lin)
        k += 1
    return k


def _divisors(n):
    n = abs(n)
    small, large = [], []
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
    return small + large[::-1]


def rational_roots(coeffs):
    """``{root: multiplicity}`` over the rationals and the unsplit cofactor."""
    poly = upoly_trim([Fraction(c) for c in coeffs])
    roots = {}
    zero_mult = 0
    while len(poly) > 1 and poly[0] == 0:
        poly = poly[1:]
        zero_mult += 1
    if zero_mult:
        roots[Fraction(0)] = zero_mult
    if len(poly) <= 1:
        return roots, poly
    scale = lcm(*(c.denominator for c in poly))
    ints = [int(c * scale) for c in poly]
    candidates = set()
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            candidates.add(Fraction(p, q))
            candidates.add(Fraction(-p, q))
    for r in sorted(candidates):
        if len(poly) <= 1:
            break
        m = _multiplicity(poly, r)
        if m:
            roots[r] = m
            for _ in range(m):
                poly, _ = upoly_divmod(poly, [-r, Fraction(1)])
    return roots, poly


# -- operations -----------------------------------------------------------------


def _parts(f):
    if f.is_zero():
        raise ZeroFunction("the zero function has no divisor")
    _, nc, dc, shift = univariate_parts(f)
    return nc, dc, shift


def ord_at(f, p):
    """Order of ``f`` at ``p``: zero multiplicity if positive, minus pole order if negative."""
    p = point(p)
    nc, dc, shift = _parts(f)
    if p.is_infinity:
        return (len(upoly_trim(dc)) - 1) - (shift + len(upoly_trim(nc)) - 1)
    order = _multiplicity(nc, p.value) - _multiplicity(dc, p.value)
    if p.value == 0:
        order += shift
    return order


def principal_divisor(f):
    """Divisor of zeros minus poles of ``f`` (including infinity)."""
    nc, dc, shift = _parts(f)
    acc = {}
    for coeffs, sign in ((nc, 1), (dc, -1)):
        roots, rest = rational_roots(coeffs)
        if len(rest) > 1:
            raise NonSplitPolynomial(
                f"factor of degree {len(rest) - 1} has no rational linear factors"
            )
        for r, m in roots.items():
            acc[PointP1(r)] = acc.get(PointP1(r), 0) + sign * m
    if shift:
        acc[PointP1(Fraction(0))] = acc.get(PointP1(Fraction(0)), 0) + shift
    acc[INFINITY] = ord_at(f, INFINITY)
    return DivisorP1(tuple(acc.items()))


def is_effective(D):
    return all(k >= 0 for _, k in D.support)


def local_defining_functions(D, variables=Z):
    """``(f0, f1)``: defining functions on ``U_0`` (coordinate z) and ``U_1`` (w = 1/z), both in z."""
    z = RationalFunc.var(variables, variables[0])
    one = RationalFunc.constant(variables, 1)
    f0 = one
    f1 = one
    w = 1 / z
    for p, k in D.support:
        if p.is_infinity:
            f1 = f1 * w ** k
            continue
        f0 = f0 * (z - p.value) ** k
        if p.value != 0:
            f1 = f1 * (w - 1 / p.value) ** k
    return f0, f1


@dataclass(frozen=True)
class BundleOfDivisor:
    degree: int
    witness: MonomialCocycle
    transition: RationalFunc  # f0/f1 as a function of z on U_0 ∩ U_1


def bundle_of_divisor(D):
    """The line bundle [D] as its Picard degree, with the cocycle ``g01 = f0/f1`` as witness."""
    f0, f1 = local_defining_functions(D)
    g01 = f0 / f1
    mono = g01.as_laurent()
    if mono is None or not mono.is_monomial():
        raise AssertionError(f"transition {g01} is not a unit monomial on U_0 ∩ U_1")
    (e,), c = mono.terms()[0]
    witness = MonomialCocycle.from_upper(1, {(0, 1): UnitMonomial(c, (-e, e))})
    degree = equivalence_degree(witness)
    if degree != D.degree:
        raise AssertionError(f"cocycle degree {degree} disagrees with deg D = {D.degree}")
    return BundleOfDivisor(degree, witness, g01)


@dataclass(frozen=True)
class SectionSpace:
    divisor: DivisorP1
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)


def section_space(D, variables=Z):
    """Basis of L(D) = {f : D + (f) >= 0}.

    ``f = N z^k / Q`` with Q the product of ``(z - p)^{a_p}`` over affine
    poles allowed by D, N the product of ``(z - p)^{-a_p}`` over forced affine
    zeros, and ``0 <= k <= deg D``; listed with k descending.
    """
    z = RationalFunc.var(variables, variables[0])
    one = RationalFunc.constant(variables, 1)
    Q = one
    N = one
    for p, k in D.support:
        if p.is_infinity:
            continue
        if k > 0:
            Q = Q * (z - p.value) ** k
        else:
            N = N * (z - p.value) ** (-k)
    if D.degree < 0:
        return SectionSpace(D, ())
    base = N / Q
    basis = tuple(base * z ** k for k in range(D.degree, -1, -1))
    return SectionSpace(D, basis)


def linear_equivalence_witness(D, E, variables=Z):
    """``f`` with ``D - E = (f)``, or None when the degrees differ."""
    diff = D - E
    if diff.degree != 0:
        return None
    z = RationalFunc.var(variables, variables[0])
    f = RationalFunc.constant(variables, 1)
    for p, k in diff.support:
        if not p.is_infinity:
            f = f * (z - p.value) ** k
    return f


def linearly_equivalent(D, E):
    f = linear_equivalence_witness(D, E)
    if f is None:
        return False
    if principal_divisor(f) != D - E:
        raise AssertionError("witness does not certify the equivalence")
    return True


def homogenize_section(f, D):
    """The degree-(deg D) form ``f * s0`` where ``(s0) = D``; a polynomial in ``x0, x1``."""
    X = ("x0", "x1")
    x0 = RationalFunc.var(X, "x0")
    x1 = RationalFunc.var(X, "x1")
    from .symbolic import substitute

    fz = substitute(f, {f.variables[0]: x1 / x0}) if f.variables else RationalFunc.coerce(f.constant_value(), X)
    s0 = RationalFunc.constant(X, 1)
    for p, k in D.support:
        s0 = s0 * (x0 if p.is_infinity else (x1 - p.value * x0)) ** k
    s = fz * s0
    if not s.is_polynomial():
        raise ValueError(f"{f} is not in L(D): product {s} is not a polynomial")
    return s.num.scale(1 / s.den.constant_value())


__all__ = [
    "BundleOfDivisor",
    "DivisorP1",
    "INFINITY",
    "PointP1",
    "SectionSpace",
    "bundle_of_divisor",
    "homogenize_section",
    "is_effective",
    "linear_equivalence_witness",
    "linearly_equivalent",
    "local_defining_functions",
    "ord_at",
    "point",
    "principal_divisor",
    "rational_roots",
    "section_space",
]
