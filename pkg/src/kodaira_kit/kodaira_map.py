"""Maps to projective space defined by a basis of sections, checked exactly at sample points.

Sections are homogeneous polynomials in ``x0..xn``; points of projective
space carry Gaussian-rational coordinates scaled so that the first nonzero
coordinate is 1.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from ._parallel import ordered_map
from .errors import (
    BasePointEvaluation,
    DegreeMismatch,
    DimensionMismatch,
    EmptyBasis,
    EqualPoints,
)
from .linalg_exact import ExactMatrix, field_rank, rank
from .symbolic import GaussRat, LaurentPoly, format_scalar, to_scalar
from .symbolic.laurent import upoly_gcd, upoly_trim


def _exact(value):
    if isinstance(value, GaussRat):
        return value.re if value.im == 0 else value
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return _exact(GaussRat(value[0], value[1]))
    if isinstance(value, complex):
        raise TypeError("floating complex values are not exact; use GaussRat")
    return to_scalar(value)


def _fmt(value):
    if isinstance(value, GaussRat):
        return [format_scalar(value.re), format_scalar(value.im)]
    return format_scalar(value)


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple

    def __post_init__(self):
        c = tuple(_exact(x) for x in self.coords)
        if len(c) < 2:
            raise DimensionMismatch("a projective point needs at least two coordinates")
        lead = next((x for x in c if x != 0), None)
        if lead is None:
            raise ValueError("all homogeneous coordinates are zero")
        object.__setattr__(self, "coords", tuple(_exact(x / lead) for x in c))

    @classmethod
    def of(cls, *coords):
        return cls(tuple(coords))

    @property
    def n(self):
        return len(self.coords) - 1

    @property
    def chart(self):
        """Index of the first nonzero coordinate (whose value is 1)."""
        return next(i for i, x in enumerate(self.coords) if x != 0)

    def scaled(self, lam):
        return ProjPoint(tuple(x * _exact(lam) for x in self.coords))

    def to_json(self):
        return [_fmt(x) for x in self.coords]

    def __str__(self):
        return "[" + ":".join(str(x) for x in self.coords) + "]"


DEFAULT_SAMPLES = tuple(
    ProjPoint.of(*c)
    for c in [
        (1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (1, -2),
        (1, Fraction(1, 2)), (1, 3), (1, Fraction(-1, 3)), (2, 3), (1, 5), (3, -4),
    ]
)


def _variables(n):
    return tuple(f"x{i}" for i in range(n + 1))


@dataclass(frozen=True)
class SectionBasis:
    n: int
    d: int
    sections: tuple

    def __post_init__(self):
        secs = tuple(self.sections)
        if not secs:
            raise EmptyBasis("a section basis needs at least one section")
        names = _variables(self.n)
        for s in secs:
            if s.variables != names:
                raise DimensionMismatch(f"sections must use variables {names}")
            if s.is_zero():
                raise ValueError("zero section")
            for e, _ in s.terms():
                if sum(e) != self.d:
                    raise DegreeMismatch(f"section {s} is not homogeneous of degree {self.d}")
                if min(e) < 0:
                    raise ValueError(f"section {s} has negative exponents")
        object.__setattr__(self, "sections", secs)
        if rank(self.coefficient_matrix()) != len(secs):
            raise ValueError("sections are linearly dependent")

    def __len__(self):
        return len(self.sections)

    @property
    def variables(self):
        return _variables(self.n)

    def monomials(self):
        return sorted({e for s in self.sections for e, _ in s.terms()}, reverse=True)

    def coefficient_matrix(self, extra=()):
        polys = list(self.sections) + list(extra)
        mons = sorted({e for s in polys for e, _ in s.terms()}, reverse=True)
        return ExactMatrix.from_rows([[s.coeff(e) for e in mons] for s in polys], len(mons))

    def spans(self, poly):
        return rank(self.coefficient_matrix([poly])) == len(self.sections)

    def values(self, p):
        return [s.evaluate(list(p.coords)) for s in self.sections]


def monomial_basis(n, d):
    """All degree-``d`` monomials in ``x0..xn``, lexicographically descending."""
    if d < 0:
        raise EmptyBasis(f"O({d}) has no global sections")
    names = _variables(n)
    exps = []
    for combo in combinations_with_replacement(range(n + 1), d):
        e = [0] * (n + 1)
        for i in combo:
            e[i] += 1
        exps.append(tuple(e))
    exps.sort(reverse=True)
    return SectionBasis(n, d, tuple(LaurentPoly.monomial(names, e, 1) for e in exps))


def basis_from_section_space(space):
    """Homogenized L(D) basis as a section basis of O(deg D) on the projective line."""
    from .divisors import homogenize_section

    D = space.divisor
    polys = tuple(homogenize_section(f, D) for f in space.basis)
    return SectionBasis(1, D.degree, polys)


# -- base points ------------------------------------------------------------------


@dataclass(frozen=True)
class BasePointReport:
    points: tuple
    complete: bool


def _sweep_points(n, values=(0, 1, -1, 2)):
    seen = set()
    out = []

    def rec(prefix):
        if len(prefix) == n + 1:
            if any(prefix):
                p = ProjPoint(tuple(prefix))
                if p not in seen:
                    seen.add(p)
                    out.append(p)
            return
        for v in values:
            rec(prefix + [v])

    rec([])
    return out


def base_points(b):
    """Common zeros of the sections: exact on the projective line, a sample sweep otherwise."""
    if not b.sections:
        raise EmptyBasis("no sections")
    if b.n == 1:
        from .divisors import rational_roots

        g = None
        for s in b.sections:
            coeffs = [Fraction(0)] * (b.d + 1)
            for (e0, e1), c in s.terms():
                coeffs[e1] = c  # dehomogenize at x0 = 1: polynomial in z = x1
            g = upoly_trim(coeffs) if g is None else upoly_gcd(g, coeffs)
        roots, rest = rational_roots(g)
        pts = [ProjPoint.of(1, r) for r in sorted(roots)]
        infinity = ProjPoint.of(0, 1)
        if all(v == 0 for v in b.values(infinity)):
            pts.append(infinity)
        return BasePointReport(tuple(pts), len(upoly_trim(rest)) <= 1)
    names = b.variables
    certified = all(
        b.spans(LaurentPoly.monomial(names, tuple(b.d if j == i else 0 for j in range(b.n + 1)), 1))
        for i in range(b.n + 1)
    )
    if certified:
        return BasePointReport((), True)
    found = tuple(p for p in _sweep_points(b.n) if all(v == 0 for v in b.values(p)))
    return BasePointReport(found, False)


# -- evaluation ------------------------------------------------------------------


def _check_point(b, p):
    if p.n != b.n:
        raise DimensionMismatch(f"point {p} is not in P^{b.n}")


def eval_map(b, p):
    """Image ``[s_0(p) : ... : s_N(p)]``, canonically scaled."""
    _check_point(b, p)
    vals = b.values(p)
    if all(v == 0 for v in vals):
        raise BasePointEvaluation(f"{p} is a base point")
    if len(vals) == 1:
        return ProjPoint((vals[0], 0))  # P^0 embedded as [1:0]
    return ProjPoint(tuple(vals))


@dataclass(frozen=True)
class PairVerdict:
    p: ProjPoint
    q: ProjPoint
    ok: bool


@dataclass(frozen=True)
class PairReport:
    verdicts: tuple

    @property
    def passed(self):
        return all(v.ok for v in self.verdicts)


def check_injective(b, pairs, threads=None):
    """Per pair: do the images differ?"""

    def one(pq):
        p, q = pq
        if p == q:
            raise EqualPoints(f"pair repeats the point {p}")
        return PairVerdict(p, q, eval_map(b, p) != eval_map(b, q))

    return PairReport(tuple(ordered_map(one, list(pairs), threads=threads)))


@dataclass(frozen=True)
class ImmersionVerdict:
    point: ProjPoint
    chart: int
    rank: int
    ok: bool


@dataclass(frozen=True)
class ImmersionReport:
    verdicts: tuple

    @property
    def passed(self):
        return all(v.ok for v in self.verdicts)


def differential_matrix(b, p):
    """Rows: section values, then partials in the affine coordinates of the chart of ``p``."""
    _check_point(b, p)
    vals = b.values(p)
    if all(v == 0 for v in vals):
        raise BasePointEvaluation(f"{p} is a base point")
    c = p.chart
    rows = [vals]
    for name in (v for i, v in enumerate(b.variables) if i != c):
        rows.append([s.diff(name).evaluate(list(p.coords)) for s in b.sections])
    return c, rows


def check_immersion(b, samples, threads=None):
    """The differential matrix at each sample must have full rank ``n + 1``."""

    def one(p):
        c, rows = differential_matrix(b, p)
        r = field_rank(rows)
        return ImmersionVerdict(p, c, r, r == b.n + 1)

    return ImmersionReport(tuple(ordered_map(one, list(samples), threads=threads)))


def two_point_surjectivity(d, p, q):
    """Rank 2 of the evaluation matrix of the monomial basis of O(d) at two distinct points."""
    if p == q:
        raise EqualPoints(f"{p} given twice")
    if p.n != q.n:
        raise DimensionMismatch("points in different projective spaces")
    if d < 0:
        return False
    b = monomial_basis(p.n, d)
    return field_rank([b.values(p), b.values(q)]) == 2


def all_pairs(samples):
    return list(combinations(samples, 2))


@dataclass(frozen=True)
class EmbeddingCheck:
    d: int
    base_point_free: bool
    injective: bool
    immersion: bool
    two_point: bool

    @property
    def passed(self):
        return self.base_point_free and self.injective and self.immersion and self.two_point


def embedding_check(d, samples=DEFAULT_SAMPLES, threads=None):
    """Every desk-scale embedding test for the full basis of O(d) on the projective line."""
    samples = tuple(samples)
    pairs = all_pairs(samples)
    if d < 0:
        return EmbeddingCheck(d, False, False, False, False)
    b = monomial_basis(samples[0].n, d)
    bp = base_points(b)
    return EmbeddingCheck(
        d,
        bp.complete and not bp.points,
        check_injective(b, pairs, threads).passed,
        check_immersion(b, samples, threads).passed,
        all(ordered_map(lambda pq: two_point_surjectivity(d, *pq), pairs, threads=threads)),
    )


@dataclass(frozen=True)
class EmbeddingSearch:
    degree: int  # None if no degree up to d_max passes
    samples: tuple
    checks: tuple = field(default=())


def smallest_embedding_degree(d_max, samples=DEFAULT_SAMPLES, threads=None):
    """Smallest ``d <= d_max`` whose full basis passes every check on ``samples``."""
    checks = []
    for d in range(d_max + 1):
        chk = embedding_check(d, samples, threads)
        checks.append(chk)
        if chk.passed:
            return EmbeddingSearch(d, tuple(samples), tuple(checks))
    return EmbeddingSearch(None, tuple(samples), tuple(checks))
