"""Rational functions over Laurent polynomials, with canonical forms.

Canonical form of ``num/den``:

* both parts are polynomials and share no monomial factor;
* univariate functions are reduced by their polynomial gcd;
* multivariate functions are reduced only when one part divides the other;
* ``den`` has lex-leading coefficient 1.

Equality is decided by cross-multiplication, so incompletely reduced
multivariate representatives still compare correctly.
"""

from ..errors import DimensionMismatch, UnknownVariable, ZeroDenominator
from .laurent import LaurentPoly, upoly_divmod, upoly_gcd
from .scalars import to_scalar


def _canonical(num, den):
    if den.is_zero():
        raise ZeroDenominator("denominator is the zero polynomial")
    variables = num.variables
    if num.is_zero():
        return LaurentPoly.zero(variables), LaurentPoly.constant(variables, 1)

    # strip monomial content from both sides, then put the net monomial back
    mn = num.min_exponents()
    md = den.min_exponents()
    net = tuple(a - b for a, b in zip(mn, md))
    num = num.shift(tuple(max(x, 0) - a for x, a in zip(net, mn)))
    den = den.shift(tuple(max(-x, 0) - b for x, b in zip(net, md)))

    active = sorted(set(num.active_variables()) | set(den.active_variables()))
    if len(active) == 1:
        idx = active[0]
        sn, nc = num.univariate(idx)
        sd, dc = den.univariate(idx)
        g = upoly_gcd(nc, dc)
        if len(g) > 1:
            nq, _ = upoly_divmod(nc, g)
            dq, _ = upoly_divmod(dc, g)
            num = LaurentPoly.from_univariate(variables, idx, nq, sn)
            den = LaurentPoly.from_univariate(variables, idx, dq, sd)
    elif len(active) > 1 and not den.is_monomial():
        q = num.divide_exact(den)
        if q is not None:
            num, den = q, LaurentPoly.constant(variables, 1)
        elif not num.is_monomial():
            q = den.divide_exact(num)
            if q is not None:
                _, c = num.leading_term()
                num, den = LaurentPoly.constant(variables, c), q.scale(c)

    _, lead = den.leading_term()
    if lead != 1:
        inv = 1 / lead
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


class RationalFunc:
    """Immutable quotient ``num / den`` of Laurent polynomials over one variable list."""

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num, den=None, *, normalize=True):
        if not isinstance(num, LaurentPoly):
            raise TypeError("numerator must be a LaurentPoly; use RationalFunc.constant")
        if den is None:
            den = LaurentPoly.constant(num.variables, 1)
        elif not isinstance(den, LaurentPoly):
            den = LaurentPoly.constant(num.variables, to_scalar(den))
        if den.variables != num.variables:
            raise DimensionMismatch(
                f"numerator/denominator variables differ: {num.variables} vs {den.variables}"
            )
        if normalize:
            num, den = _canonical(num, den)
        elif den.is_zero():
            raise ZeroDenominator("denominator is the zero polynomial")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, key, value):
        raise AttributeError("RationalFunc is immutable")

    @classmethod
    def constant(cls, variables, value):
        return cls(LaurentPoly.constant(variables, value))

    @classmethod
    def var(cls, variables, name):
        return cls(LaurentPoly.var(variables, name))

    @classmethod
    def coerce(cls, value, variables):
        if isinstance(value, RationalFunc):
            return value
        if isinstance(value, LaurentPoly):
            return cls(value)
        return cls.constant(variables, value)

    @property
    def variables(self):
        return self.num.variables

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        return self.num.constant_value() / self.den.constant_value()

    def is_polynomial(self):
        return self.den.is_constant()

    def as_laurent(self):
        """The function as a Laurent polynomial, or None if it is not one."""
        if self.den.is_monomial():
            return self.num * (self.den ** -1)
        return None

    def _other(self, other):
        if isinstance(other, RationalFunc):
            if other.variables != self.variables:
                raise DimensionMismatch(
                    f"variable mismatch: {self.variables} vs {other.variables}"
                )
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunc(other)
        try:
            return RationalFunc.constant(self.variables, to_scalar(other))
        except TypeError:
            return None

    def __eq__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __neg__(self):
        return RationalFunc(-self.num, self.den, normalize=False)

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFunc(self.num + other.num, self.den)
        return RationalFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return RationalFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDenominator("division by the zero function")
        return RationalFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if self.is_zero():
                raise ZeroDenominator("zero raised to a negative power")
            return RationalFunc(self.den ** (-k), self.num ** (-k))
        return RationalFunc(self.num ** k, self.den ** k)

    def evaluate(self, values):
        d = self.den.evaluate(values)
        if d == 0:
            raise ZeroDenominator("denominator vanishes at the evaluation point")
        return self.num.evaluate(values) / d

    def embed(self, variables):
        return RationalFunc(self.num.embed(variables), self.den.embed(variables))

    def rename(self, variables):
        return RationalFunc(self.num.rename(variables), self.den.rename(variables), normalize=False)

    def __repr__(self):
        return f"RationalFunc({str(self)!r})"

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        num = str(self.num)
        if len(self.num) > 1:
            num = f"({num})"
        den = str(self.den)
        if len(self.den) > 1 or not self.den.is_constant() and "*" in den:
            den = f"({den})"
        return f"{num}/{den}"


def normalize(f):
    """Canonical representative of ``f``; idempotent."""
    return RationalFunc(f.num, f.den)


def _power_cache(binding, name, k, cache):
    key = (name, k)
    if key not in cache:
        cache[key] = binding[name] ** k
    return cache[key]


def _substitute_poly(poly, binding, target, cache):
    total = RationalFunc.constant(target, 0)
    for e, c in poly.terms():
        term = RationalFunc.constant(target, c)
        for name, k in zip(poly.variables, e):
            if k:
                term = term * _power_cache(binding, name, k, cache)
        total = total + term
    return total


def substitute(f, binding, variables=None):
    """Compose ``f`` with ``binding`` (variable name -> RationalFunc) and normalize.

    Every variable of ``f`` must be bound. All bound values share one variable
    list, which becomes the variable list of the result; ``variables`` supplies
    it when ``binding`` is empty.
    """
    if isinstance(f, LaurentPoly):
        f = RationalFunc(f)
    missing = [v for v in f.variables if v not in binding]
    if missing:
        raise UnknownVariable(f"unbound variables: {missing}")
    values = list(binding.values())
    if variables is None:
        rf = [v for v in values if isinstance(v, (RationalFunc, LaurentPoly))]
        if not rf:
            if variables is None and not f.variables:
                return f
            raise ValueError("cannot infer target variables from binding")
        variables = rf[0].variables
    variables = tuple(variables)
    coerced = {k: RationalFunc.coerce(v, variables) for k, v in binding.items()}
    for k, v in coerced.items():
        if v.variables != variables:
            raise DimensionMismatch(f"binding for {k!r} uses variables {v.variables}")
    cache = {}
    num = _substitute_poly(f.num, coerced, variables, cache)
    den = _substitute_poly(f.den, coerced, variables, cache)
    if den.is_zero():
        raise ZeroDenominator("substitution makes the denominator identically zero")
    return num / den


def formal_partial(f, name):
    """Quotient-rule derivative of ``f`` with respect to variable ``name``."""
    if isinstance(f, LaurentPoly):
        f = RationalFunc(f)
    if name not in f.variables:
        raise UnknownVariable(f"{name!r} is not one of {f.variables}")
    dn = f.num.diff(name)
    dd = f.den.diff(name)
    if dd.is_zero():
        return RationalFunc(dn, f.den)
    return RationalFunc(dn * f.den - f.num * dd, f.den * f.den)


def univariate_parts(f):
    """``(var_index, num_coeffs, den_coeffs, shift)`` for a univariate function.

    ``f = x^shift * num(x) / den(x)`` with dense coefficient lists. Constant
    functions report ``var_index = None``.
    """
    active = sorted(set(f.num.active_variables()) | set(f.den.active_variables()))
    if len(active) > 1:
        raise ValueError("function is not univariate")
    if not active:
        return None, [f.num.constant_value()], [f.den.constant_value()], 0
    idx = active[0]
    sn, nc = f.num.univariate(idx)
    sd, dc = f.den.univariate(idx)
    return idx, nc, dc, sn - sd
