"""Wirtinger calculus, Chern curvature of Hermitian line-bundle metrics, Fubini-Study forms.

Chart expressions are RationalFuncs in ``z1..zn, w1..wn`` where ``w_i``
stands for the conjugate of ``z_i``; the two are independent symbols until
evaluation, when ``w = conj(z)`` is substituted exactly (rationals or
Gaussian rationals).

Orientation: the curvature matrix of a metric ``h`` is
``Theta_ij = -d/dw_j d/dz_i log h`` (``ORIENTATION = -1`` times the mixed
log-derivative), so the standard metric ``(1 + z w)^-1`` of O(1) is positive and
``1 + z w`` is negative. Every report carries this constant and the
``1/(2*pi)`` normalization of ``(i/2pi) Theta``, which never enters the
exact arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction

from ._parallel import ordered_map
from .errors import DimensionMismatch, PoleAtSample, UnknownVariable, ZeroDenominator, ZeroMetric
from .linalg_exact import leading_principal_minors
from .symbolic import GaussRat, RationalFunc, formal_partial, substitute

ORIENTATION = -1
SCALE = "1/(2*pi)"


def herm_variables(n):
    if n < 1:
        raise ValueError("need at least one complex coordinate")
    return tuple(f"z{i}" for i in range(1, n + 1)) + tuple(f"w{i}" for i in range(1, n + 1))


def herm_dim(e):
    names = e.variables
    n = len(names) // 2
    if len(names) != 2 * n or names != herm_variables(n):
        raise DimensionMismatch(f"expected variables z1..zn, w1..wn, got {names}")
    return n


def herm_var(n, name):
    return RationalFunc.var(herm_variables(n), name)


def conjugate_swap(e):
    """Swap ``z_i <-> w_i`` (coefficients are rational, hence self-conjugate)."""
    n = herm_dim(e)
    names = herm_variables(n)
    swapped = names[n:] + names[:n]
    return RationalFunc(e.num.rename(swapped), e.den.rename(swapped)).embed(names)


def is_real(e):
    return conjugate_swap(e) == e


def wirtinger(e, i, anti=False):
    """``d/dz_i`` (or ``d/dw_i`` when ``anti``), with z and w independent."""
    n = herm_dim(e)
    if not 1 <= i <= n:
        raise UnknownVariable(f"coordinate index {i} outside 1..{n}")
    return formal_partial(e, f"{'w' if anti else 'z'}{i}")


def chern_theta(h):
    """Connection coefficients ``theta_i = (dh/dz_i) / h``."""
    if h.is_zero():
        raise ZeroMetric("metric is identically zero")
    n = herm_dim(h)
    return [wirtinger(h, i) / h for i in range(1, n + 1)]


def _logddbar(p, i, j):
    """``d/dw_j d/dz_i log p`` via ``(p p_zw - p_z p_w) / p^2``."""
    pz = wirtinger(p, i)
    pw = wirtinger(p, j, anti=True)
    pzw = wirtinger(pz, j, anti=True)
    return (p * pzw - pz * pw) / (p * p)


def log_ddbar(h, i, j):
    """Mixed derivative of ``log h``, computed as ``log num - log den``."""
    if h.is_zero():
        raise ZeroMetric("metric is identically zero")
    names = h.variables
    num = RationalFunc(h.num)
    out = _logddbar(num, i, j)
    if not h.den.is_constant():
        out = out - _logddbar(RationalFunc(h.den), i, j)
    return RationalFunc.coerce(out, names)


@dataclass(frozen=True)
class FormCoeffMatrix:
    """Coefficients ``M_ij`` of ``dz_i ^ dw_j`` with normalization metadata."""

    n: int
    entries: tuple
    orientation: int = ORIENTATION
    scale: str = SCALE
    kind: str = "curvature"

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise DimensionMismatch("form coefficient matrix must be n x n")
        object.__setattr__(self, "entries", rows)

    @property
    def variables(self):
        return herm_variables(self.n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def _combine(self, other, op):
        if other.n != self.n:
            raise DimensionMismatch("forms on different dimensions")
        rows = tuple(
            tuple(op(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)
        )
        return FormCoeffMatrix(self.n, rows, self.orientation, self.scale, self.kind)

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def scaled(self, k):
        rows = tuple(tuple(a * k for a in r) for r in self.entries)
        return FormCoeffMatrix(self.n, rows, self.orientation, self.scale, self.kind)

    def is_zero(self):
        return all(a.is_zero() for r in self.entries for a in r)

    def is_hermitian(self):
        return all(
            self.entries[j][i] == conjugate_swap(self.entries[i][j])
            for i in range(self.n)
            for j in range(i, self.n)
        )

    def evaluate(self, point):
        """Numeric matrix at ``z = point`` and ``w = conj(point)``."""
        return [[_eval_at(a, point) for a in r] for r in self.entries]

    def metadata(self):
        return {
            "kind": self.kind,
            "orientation": self.orientation,
            "scale": self.scale,
            "convention": "M_ij = orientation * d/dw_j d/dz_i log(potential); form = (i*scale) sum M_ij dz_i^dw_j"
            if self.kind == "curvature"
            else "omega = (i*scale) sum M_ij dz_i^dw_j with M_ij = d/dw_j d/dz_i log(1 + sum z_k w_k)",
        }


def curvature(h):
    """Curvature matrix of the Chern connection of the metric ``h``."""
    n = herm_dim(h)
    rows = tuple(
        tuple(log_ddbar(h, i, j) * ORIENTATION for j in range(1, n + 1)) for i in range(1, n + 1)
    )
    return FormCoeffMatrix(n, rows)


def fubini_study(n, chart=0):
    """Fubini-Study matrix ``d/dw_j d/dz_i log(1 + sum z_k w_k)`` on chart ``x_chart != 0``.

    The chart coordinates are ``x_l / x_chart`` for ``l != chart`` in increasing ``l``.
    """
    if not 0 <= chart <= n:
        raise ValueError(f"chart {chart} outside 0..{n}")
    names = herm_variables(n)
    phi = RationalFunc.constant(names, 1)
    for k in range(1, n + 1):
        phi = phi + herm_var(n, f"z{k}") * herm_var(n, f"w{k}")
    rows = tuple(tuple(log_ddbar(phi, i, j) for j in range(1, n + 1)) for i in range(1, n + 1))
    return FormCoeffMatrix(n, rows, orientation=1, kind="fubini_study")


def projective_chart_map(n, source, target):
    """Chart-``target`` coordinates of projective n-space as holomorphic functions of chart ``source``."""
    z_names = tuple(f"z{k}" for k in range(1, n + 1))
    u = [RationalFunc.var(z_names, name) for name in z_names]
    one = RationalFunc.constant(z_names, 1)
    x = []
    it = iter(u)
    for l in range(n + 1):
        x.append(one if l == source else next(it))
    return [x[l] / x[target] for l in range(n + 1) if l != target]


def pullback_form(m, holo_map):
    """Pull back ``sum M_ab dz_a ^ dw_b`` along ``z = F(u)`` (``F`` holomorphic, rational coefficients).

    ``holo_map`` lists ``F_a`` as RationalFuncs in ``z1..zn`` (naming the source
    coordinates u). Returns ``J^T M(F) conj(J)`` in ``z1..zn, w1..wn``.
    """
    n = m.n
    if len(holo_map) != n:
        raise DimensionMismatch("map needs one component per coordinate")
    names = herm_variables(n)
    z_part = [f.embed(names) for f in holo_map]
    w_part = [conjugate_swap(f) for f in z_part]
    binding = {f"z{a}": z_part[a - 1] for a in range(1, n + 1)}
    binding.update({f"w{a}": w_part[a - 1] for a in range(1, n + 1)})
    moved = [[substitute(e, binding, names) for e in r] for r in m.entries]
    J = [[formal_partial(z_part[a], f"z{c}") for c in range(1, n + 1)] for a in range(n)]
    Jb = [[conjugate_swap(J[a][c]) for c in range(n)] for a in range(n)]
    zero = RationalFunc.constant(names, 0)
    rows = []
    for c in range(n):
        row = []
        for d in range(n):
            acc = zero
            for a in range(n):
                for b in range(n):
                    if not moved[a][b].is_zero():
                        acc = acc + J[a][c] * moved[a][b] * Jb[b][d]
            row.append(acc)
        rows.append(tuple(row))
    return FormCoeffMatrix(n, tuple(rows), m.orientation, m.scale, m.kind)


# -- evaluation and positivity --------------------------------------------------


def _coerce_point(point, n):
    pt = tuple(point)
    if len(pt) != n:
        raise DimensionMismatch(f"sample point needs {n} coordinates")
    out = []
    for c in pt:
        if isinstance(c, GaussRat):
            out.append(c if c.im else c.re)
        elif isinstance(c, complex):
            raise TypeError("use GaussRat for exact complex samples")
        else:
            out.append(Fraction(c))
    return tuple(out)


def _conj(c):
    return c.conjugate() if isinstance(c, GaussRat) else c


def _eval_at(e, point):
    n = len(e.variables) // 2
    pt = _coerce_point(point, n)
    values = list(pt) + [_conj(c) for c in pt]
    try:
        return e.evaluate(values)
    except ZeroDenominator:
        raise PoleAtSample(f"pole at sample {tuple(str(c) for c in pt)}") from None


def _real_part(x):
    if isinstance(x, GaussRat):
        if x.im != 0:
            raise ArithmeticError("leading minor of a Hermitian matrix is not real")
        return x.re
    return Fraction(x)


@dataclass(frozen=True)
class PointVerdict:
    point: tuple
    minors: tuple
    positive: bool


@dataclass(frozen=True)
class PositivityReport:
    verdicts: tuple
    orientation: int
    scale: str
    kind: str = "curvature"

    @property
    def all_positive(self):
        return bool(self.verdicts) and all(v.positive for v in self.verdicts)

    @property
    def all_negative(self):
        """Negative definite at every sample (leading minors alternate in sign, starting negative)."""
        return bool(self.verdicts) and all(
            all((m < 0) if k % 2 == 0 else (m > 0) for k, m in enumerate(v.minors))
            for v in self.verdicts
        )

    @property
    def min_minor(self):
        return min((min(v.minors) for v in self.verdicts), default=None)


def _verdict(m, point):
    vals = m.evaluate(point)
    one = Fraction(1)
    minors = tuple(_real_part(x) for x in leading_principal_minors(vals, one=one))
    return PointVerdict(_coerce_point(point, m.n), minors, all(x > 0 for x in minors))


def positivity_sample(m, points, threads=None):
    """Leading-principal-minor test of the evaluated Hermitian matrix at each point."""
    verdicts = ordered_map(lambda p: _verdict(m, p), list(points), threads=threads)
    return PositivityReport(tuple(verdicts), m.orientation, m.scale, m.kind)


def minimum_scaling(positive_form, bounded_form, points, k_max=64):
    """Smallest ``k`` in ``0..k_max`` with ``k * positive_form + bounded_form`` positive at every point."""
    for k in range(k_max + 1):
        if positivity_sample(positive_form.scaled(k) + bounded_form, points, threads=1).all_positive:
            return k
    return None


def default_points(n, count=20):
    """A fixed grid of rational sample points in C^n (real rational coordinates)."""
    base = [Fraction(0), Fraction(1), Fraction(-2), Fraction(1, 3), Fraction(5, 2), Fraction(-3, 4),
            Fraction(7), Fraction(-1, 5), Fraction(2, 7), Fraction(-9, 2)]
    out = []
    k = 0
    while len(out) < count:
        shift = Fraction(k // len(base), 11)
        out.append(tuple(base[(k + 3 * j) % len(base)] + (j + 1) * shift for j in range(n)))
        k += 1
    return out
