"""Graded Cech complex of O(d) on projective n-space over the standard affine cover.

Sections of O(d) over the chart intersection ``U_I`` are spanned by the
Laurent monomials ``x^a`` with ``sum(a) = d`` and ``a_i >= 0`` for every
``i`` outside ``I``. The coboundary preserves the multidegree ``a``, so the
complex splits into finite pieces, one per multidegree; each piece has at
most one basis vector per simplex.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from . import kernels
from ._parallel import chunks, ordered_map, worker_count
from .cover_nerve import Cover, Simplex, face, nerve
from .errors import DegreeMismatch, DimensionMismatch
from .linalg_exact import ExactMatrix, kernel_dim, rank
from .symbolic import LaurentPoly

WINDOW_MARGIN = 1


@dataclass(frozen=True)
class TwistingSheaf:
    n: int
    d: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("projective dimension must be at least 1")

    @property
    def cover(self):
        return Cover.projective_standard(self.n)

    @property
    def variables(self):
        return tuple(f"x{i}" for i in range(self.n + 1))

    def window(self, margin=WINDOW_MARGIN):
        return abs(self.d) + margin


def _check_multidegree(s, a):
    a = tuple(int(x) for x in a)
    if len(a) != s.n + 1:
        raise DimensionMismatch(f"multidegree {a} needs {s.n + 1} entries")
    if sum(a) != s.d:
        raise DegreeMismatch(f"multidegree {a} sums to {sum(a)}, not {s.d}")
    return a


def section_dim(s, simplex, a):
    """1 if ``x^a`` is a section of O(d) over ``U_simplex``, else 0."""
    a = _check_multidegree(s, a)
    if not isinstance(simplex, Simplex):
        simplex = Simplex(simplex)
    if simplex.indices[-1] > s.n:
        raise DimensionMismatch(f"simplex {simplex.indices} uses a chart beyond x{s.n}")
    return int(all(a[i] >= 0 for i in range(s.n + 1) if i not in simplex))


def cochain_basis(s, p, a):
    """The p-simplices whose section space contains ``x^a``, in lex order."""
    a = _check_multidegree(s, a)
    return [t for t in nerve(s.cover, p) if section_dim(s, t, a)]


def coboundary_matrix(s, p, a):
    """Matrix of the degree-p coboundary on the multidegree-a piece.

    Rows are (p+1)-simplices, columns p-simplices, both restricted to simplices
    carrying ``x^a``; the entry for ``face(row, j) == col`` is ``(-1)^j``.
    """
    a = _check_multidegree(s, a)
    cols = cochain_basis(s, p, a)
    rows = cochain_basis(s, p + 1, a)
    index = {t: k for k, t in enumerate(cols)}
    entries = []
    for big in rows:
        row = [0] * len(cols)
        for j in range(len(big)):
            k = index.get(face(big, j))
            if k is not None:
                row[k] = -1 if j % 2 else 1
        entries.extend(row)
    return ExactMatrix(len(rows), len(cols), entries)


def verify_delta_squared(s, p, a):
    """True iff the composite of the degree-p and degree-(p+1) coboundaries vanishes."""
    first = coboundary_matrix(s, p, a)
    second = coboundary_matrix(s, p + 1, a)
    return (second @ first).is_zero()


def multidegrees(s, window=None):
    """All multidegrees with ``|a_i| <= window`` summing to ``d``, as an int64 array in lex order."""
    if window is None:
        window = s.window()
    n = s.n
    axis = np.arange(-window, window + 1, dtype=np.int64)
    if n == 0:
        grid = np.zeros((1, 0), dtype=np.int64)
    else:
        grid = np.stack(np.meshgrid(*([axis] * n), indexing="ij"), axis=-1).reshape(-1, n)
    last = s.d - grid.sum(axis=1)
    keep = np.abs(last) <= window
    return np.ascontiguousarray(np.column_stack([grid[keep], last[keep]]))


@dataclass(frozen=True)
class CohomologyResult:
    n: int
    d: int
    q: int
    dim: int
    window: int
    graded_pieces: tuple = field(default=())
    backend: str = field(default="", compare=False)  # which kernel ran; not part of the value

    def as_dict(self):
        return {
            "n": self.n,
            "d": self.d,
            "q": self.q,
            "dim": self.dim,
            "window": self.window,
            "graded_pieces": [
                {"multidegree": list(a), "dim": k} for a, k in self.graded_pieces
            ],
        }


def cohomology(s, q, window=None, threads=None, backend=None):
    """Total dimension of H^q(P^n, O(d)) with its contributing graded pieces."""
    if q < 0:
        raise ValueError("cohomological degree must be nonnegative")
    if window is None:
        window = s.window()
    pieces = multidegrees(s, window)
    if q > s.n:
        return CohomologyResult(s.n, s.d, q, 0, window, (), kernels.BACKEND)
    workers = worker_count(threads)
    parts = chunks(pieces, workers)
    dims = ordered_map(
        lambda part: kernels.cech_piece_dims(s.n, q, part, backend=backend), parts, threads=workers
    )
    dims = np.concatenate(dims) if dims else np.zeros(0, dtype=np.int64)
    nz = np.flatnonzero(dims)
    graded = tuple((tuple(int(x) for x in pieces[i]), int(dims[i])) for i in nz)
    return CohomologyResult(
        s.n, s.d, q, int(dims.sum()), window, graded, backend or kernels.BACKEND
    )


def cohomology_dim(s, q, window=None, threads=None, backend=None):
    return cohomology(s, q, window=window, threads=threads, backend=backend).dim


def cohomology_dim_matrices(s, q, window=None):
    """Same total via explicit ``coboundary_matrix`` objects and ``linalg_exact``; slow."""
    if window is None:
        window = s.window()
    total = 0
    for a in multidegrees(s, window).tolist():
        dq = coboundary_matrix(s, q, a)
        prev = rank(coboundary_matrix(s, q - 1, a)) if q >= 1 else 0
        total += kernel_dim(dq) - prev
    return total


def expected_dims(n, d):
    """Closed forms ``{q: dim}``: C(n+d, n) in degree 0, C(-d-1, n) in degree n."""
    out = {q: 0 for q in range(n + 1)}
    if d >= 0:
        out[0] = comb(n + d, n)
    if d <= -n - 1:
        out[n] = comb(-d - 1, n)
    return out


# -- cochains with explicit section values ------------------------------------


@dataclass(frozen=True)
class CechCochain:
    """A p-cochain: Laurent sections of O(d) on the p-fold intersections."""

    sheaf: TwistingSheaf
    p: int
    values: tuple  # ((Simplex, LaurentPoly), ...) sorted by simplex

    def __post_init__(self):
        vals = dict(self.values)
        for t, poly in vals.items():
            if len(t) != self.p + 1:
                raise DimensionMismatch(f"{t.indices} is not a {self.p}-simplex")
            if poly.variables != self.sheaf.variables:
                raise DimensionMismatch("section uses the wrong variables")
            for e, _ in poly.terms():
                if sum(e) != self.sheaf.d:
                    raise DegreeMismatch(f"monomial {e} is not of degree {self.sheaf.d}")
                if any(e[i] < 0 for i in range(self.sheaf.n + 1) if i not in t):
                    raise ValueError(f"monomial {e} is not a section over U_{t.indices}")
        object.__setattr__(
            self, "values", tuple(sorted((t, v) for t, v in vals.items() if not v.is_zero()))
        )

    @classmethod
    def from_dict(cls, sheaf, p, mapping):
        return cls(sheaf, p, tuple((Simplex(k) if not isinstance(k, Simplex) else k, v) for k, v in mapping.items()))

    def as_dict(self):
        return dict(self.values)

    def is_zero(self):
        return not self.values


def coboundary(c):
    """Apply the Cech coboundary to a cochain with explicit section values."""
    s = c.sheaf
    vals = c.as_dict()
    zero = LaurentPoly.zero(s.variables)
    out = {}
    for big in nerve(s.cover, c.p + 1):
        total = zero
        for j in range(len(big)):
            v = vals.get(face(big, j))
            if v is not None:
                total = total + v if j % 2 == 0 else total - v
        if not total.is_zero():
            out[big] = total
    return CechCochain(s, c.p + 1, tuple(out.items()))


def monomial_cochain(s, p, a, coefficients):
    """Cochain supported on multidegree ``a`` with given coefficient per basis simplex."""
    a = _check_multidegree(s, a)
    basis = cochain_basis(s, p, a)
    if len(coefficients) != len(basis):
        raise DimensionMismatch(f"expected {len(basis)} coefficients")
    vals = {
        t: LaurentPoly.monomial(s.variables, a, Fraction(c))
        for t, c in zip(basis, coefficients)
        if c
    }
    return CechCochain(s, p, tuple(vals.items()))
