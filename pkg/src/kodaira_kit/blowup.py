"""The blowup of C^n at the origin through its chart atlas.

Chart ``i`` (1 <= i <= n) is ``{l_i != 0}`` with coordinates ``z^i_j = z_j / z_i``
for ``j != i`` and ``z^i_i = z_i``; its variables are named ``z{i}_{j}``. The
base C^n uses ``z1..zn``. Transition maps, their Jacobian determinants (the
canonical-bundle transitions), and the exceptional-divisor bundle [E] are
all monomial in these coordinates.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .errors import InvalidChart
from .line_bundles import MonomialCocycle, UnitMonomial
from .linalg_exact import field_det
from .symbolic import RationalFunc, formal_partial, substitute


@dataclass(frozen=True)
class BlowupAtlas:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("the blowup atlas needs n >= 2")

    @property
    def charts(self):
        return tuple(range(1, self.n + 1))

    def check_chart(self, i):
        if i not in self.charts:
            raise InvalidChart(f"chart index {i} outside 1..{self.n}")
        return i

    def chart_variables(self, i):
        self.check_chart(i)
        return tuple(f"z{i}_{j}" for j in range(1, self.n + 1))

    @property
    def base_variables(self):
        return tuple(f"z{j}" for j in range(1, self.n + 1))

    def chart_var(self, i, j):
        v = self.chart_variables(i)
        return RationalFunc.var(v, v[j - 1])

    def to_base(self, i):
        """Base coordinates ``(z_1..z_n)`` as functions on chart ``i``."""
        zi = self.chart_var(i, i)
        return tuple(zi if j == i else zi * self.chart_var(i, j) for j in range(1, self.n + 1))

    def from_base(self, i):
        """Chart-``i`` coordinates as functions of the base (defined off ``z_i = 0``)."""
        self.check_chart(i)
        b = self.base_variables
        z = [RationalFunc.var(b, name) for name in b]
        zi = z[i - 1]
        return tuple(zi if j == i else z[j - 1] / zi for j in range(1, self.n + 1))

    def line_coordinates(self, i):
        """Homogeneous coordinates ``[l_1 : ... : l_n]`` on chart ``i`` with ``l_i = 1``."""
        one = RationalFunc.constant(self.chart_variables(i), 1)
        return tuple(one if j == i else self.chart_var(i, j) for j in range(1, self.n + 1))


@dataclass(frozen=True)
class RationalMapTuple:
    source: int
    target: int
    variables: tuple
    components: tuple

    def __len__(self):
        return len(self.components)

    def binding(self, names):
        return dict(zip(names, self.components))


def _pair(atlas, j, k):
    atlas.check_chart(j)
    atlas.check_chart(k)
    if j == k:
        raise InvalidChart("transition needs two distinct charts")


def chart_transition(atlas, j, k):
    """Chart-``k`` coordinates in terms of chart-``j`` coordinates."""
    _pair(atlas, j, k)
    src = atlas.chart_variables(j)
    to_base = dict(zip(atlas.base_variables, atlas.to_base(j)))
    comps = tuple(substitute(f, to_base, src) for f in atlas.from_base(k))
    return RationalMapTuple(j, k, src, comps)


def compose(first, second):
    """``second`` after ``first`` (requires ``first.target == second.source``)."""
    if first.target != second.source:
        raise InvalidChart("maps do not compose")
    names = tuple(second.variables)
    bind = dict(zip(names, first.components))
    comps = tuple(substitute(f, bind, first.variables) for f in second.components)
    return RationalMapTuple(first.source, second.target, first.variables, comps)


def jacobian_matrix(m):
    return [[formal_partial(f, v) for v in m.variables] for f in m.components]


def jacobian_det(atlas, j, k):
    """Determinant of the Jacobian of the transition from chart ``j`` to chart ``k``."""
    m = chart_transition(atlas, j, k)
    return field_det(jacobian_matrix(m), one=RationalFunc.constant(m.variables, 1))


def jacobian_closed_form(atlas, j, k):
    """``(z_j / z_k)^(n-1)`` in chart-``j`` coordinates, i.e. ``(z^j_k)^(1-n)``."""
    _pair(atlas, j, k)
    return atlas.chart_var(j, k) ** (1 - atlas.n)


@dataclass(frozen=True)
class JacobianComparison:
    j: int
    k: int
    det: RationalFunc
    closed_form: RationalFunc
    sign: int  # det = sign * closed_form; 0 if they differ by more than a sign


def compare_jacobian(atlas, j, k):
    det = jacobian_det(atlas, j, k)
    closed = jacobian_closed_form(atlas, j, k)
    ratio = det / closed
    sign = int(ratio.constant_value()) if ratio.is_constant() and ratio.constant_value() in (1, -1) else 0
    return JacobianComparison(j, k, det, closed, sign)


def exceptional_cocycle(atlas):
    """[E] on the blowup charts: ``g(i, j) = l_i / l_j``.

    The local defining function of E on chart ``i`` is ``z^i_i``, and
    ``z^i_i / z^j_j = l_i / l_j`` on the overlap. Charts ``1..n`` map to
    indices ``0..n-1`` of a cocycle over ``l_1..l_n``; restricted to
    ``E = P^{n-1}`` this is the tautological class (degree -1).
    """
    n = atlas.n
    names = tuple(f"l{i}" for i in range(1, n + 1))
    table = {}
    for a, b in permutations(range(n), 2):
        e = [0] * n
        e[a] += 1
        e[b] -= 1
        table[(a, b)] = UnitMonomial(Fraction(1), tuple(e))
    return MonomialCocycle(n - 1, tuple(table.items()), names)


def exceptional_transition(atlas, j, k):
    """``f_j / f_k`` for E's local equations, in chart-``j`` coordinates (``= 1 / z^j_k``)."""
    _pair(atlas, j, k)
    fk = substitute(atlas.from_base(k)[k - 1], dict(zip(atlas.base_variables, atlas.to_base(j))))
    return atlas.chart_var(j, j) / fk


@dataclass(frozen=True)
class CanonicalEntry:
    pair: tuple  # (j, k) chart pair, or ("base", i) for base-to-chart
    canonical: RationalFunc
    exceptional: RationalFunc
    pullback: RationalFunc
    residual: RationalFunc
    sign: int

    @property
    def ok(self):
        return self.residual == 1


@dataclass(frozen=True)
class CanonicalReport:
    n: int
    multiplicity: int
    entries: tuple = field(default=())

    @property
    def passed(self):
        return all(e.ok for e in self.entries)


def verify_canonical_lemma(atlas, m_cocycle=None, multiplicity=None):
    """Check ``K * [E]^(-m) * (pi^* K_base)^(-1) == 1`` on every overlap.

    ``m`` defaults to ``n - 1``. ``m_cocycle`` optionally maps chart pairs
    ``(j, k)`` (and ``("base", i)``) to pulled-back base transitions as
    RationalFuncs in the source chart's variables; missing entries are 1,
    which is the case for the base C^n covered by a single chart. The
    residual is reported up to the sign of the Jacobian.
    """
    n = atlas.n
    m = n - 1 if multiplicity is None else multiplicity
    factors = dict(m_cocycle or {})
    entries = []
    for j, k in permutations(atlas.charts, 2):
        variables = atlas.chart_variables(j)
        K = jacobian_det(atlas, j, k)
        E = exceptional_transition(atlas, j, k)
        pb = RationalFunc.coerce(factors.get((j, k), 1), variables)
        residual = K * E ** (-m) / pb
        sign = 1
        if residual.is_constant() and residual.constant_value() == -1:
            sign, residual = -1, -residual
        entries.append(CanonicalEntry((j, k), K, E, pb, residual, sign))
    # base chart to blowup chart i, away from E: identity of C^n \ {0}
    b = atlas.base_variables
    for i in atlas.charts:
        m_to_chart = atlas.from_base(i)
        K = field_det(
            [[formal_partial(f, v) for v in b] for f in m_to_chart],
            one=RationalFunc.constant(b, 1),
        )
        E = 1 / RationalFunc.var(b, b[i - 1])
        pb = RationalFunc.coerce(factors.get(("base", i), 1), b)
        residual = K * E ** (-m) / pb
        sign = 1
        if residual.is_constant() and residual.constant_value() == -1:
            sign, residual = -1, -residual
        entries.append(CanonicalEntry(("base", i), K, E, pb, residual, sign))
    return CanonicalReport(n, m, tuple(entries))


def defining_relations_hold(atlas):
    """``x_a l_b - x_b l_a`` vanishes on every chart parameterization."""
    for i in atlas.charts:
        x = atlas.to_base(i)
        lam = atlas.line_coordinates(i)
        for a in range(atlas.n):
            for b in range(a + 1, atlas.n):
                if not (x[a] * lam[b] - x[b] * lam[a]).is_zero():
                    return False
    return True
