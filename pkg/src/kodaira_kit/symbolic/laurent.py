"""Sparse multivariate Laurent polynomials with exact rational coefficients."""

from fractions import Fraction

from ..errors import DimensionMismatch, UnknownVariable
from .scalars import format_scalar, to_scalar


def _add_exps(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub_exps(a, b):
    return tuple(x - y for x, y in zip(a, b))


class LaurentPoly:
    """Finite sum of ``c * x^e`` with integer (possibly negative) exponents.

    Immutable. ``terms`` maps exponent tuples to nonzero Fractions; every
    exponent tuple has one entry per variable.
    """

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables, terms=None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise DimensionMismatch(
                    f"exponent vector {exps} does not match variables {variables}"
                )
            clean[exps] = clean.get(exps, 0) + to_scalar(coeff)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "_terms", {e: c for e, c in clean.items() if c != 0})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, key, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def _raw(cls, variables, terms):
        # terms already clean: exponents are tuples of the right length, no zeros
        obj = cls.__new__(cls)
        object.__setattr__(obj, "variables", variables)
        object.__setattr__(obj, "_terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def zero(cls, variables):
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, variables, value):
        variables = tuple(variables)
        value = to_scalar(value)
        if value == 0:
            return cls._raw(variables, {})
        return cls._raw(variables, {(0,) * len(variables): value})

    @classmethod
    def monomial(cls, variables, exponents, coeff=1):
        return cls(variables, {tuple(exponents): coeff})

    @classmethod
    def var(cls, variables, name):
        variables = tuple(variables)
        try:
            idx = variables.index(name)
        except ValueError:
            raise UnknownVariable(f"{name!r} is not one of {variables}") from None
        exps = [0] * len(variables)
        exps[idx] = 1
        return cls._raw(variables, {tuple(exps): Fraction(1)})

    # -- inspection ---------------------------------------------------------

    @property
    def nvars(self):
        return len(self.variables)

    def terms(self):
        """Terms as ``(exponents, coeff)`` pairs, lexicographically descending."""
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, exponents):
        return self._terms.get(tuple(exponents), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or (
            len(self._terms) == 1 and (0,) * self.nvars in self._terms
        )

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def is_monomial(self):
        return len(self._terms) == 1

    def leading_term(self):
        """Lex-largest term ``(exponents, coeff)``."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self._terms)
        return exps, self._terms[exps]

    def min_exponents(self):
        if not self._terms:
            return (0,) * self.nvars
        return tuple(min(col) for col in zip(*self._terms))

    def max_exponents(self):
        if not self._terms:
            return (0,) * self.nvars
        return tuple(max(col) for col in zip(*self._terms))

    def degree_in(self, name):
        idx = self._index(name)
        return max(e[idx] for e in self._terms) if self._terms else None

    def total_degrees(self):
        return {sum(e) for e in self._terms}

    def is_homogeneous(self):
        return len(self.total_degrees()) <= 1

    def active_variables(self):
        """Indices of variables appearing with a nonzero exponent."""
        active = set()
        for e in self._terms:
            active.update(i for i, x in enumerate(e) if x)
        return sorted(active)

    def has_nonnegative_exponents(self):
        return all(x >= 0 for e in self._terms for x in e)

    def _index(self, name):
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariable(f"{name!r} is not one of {self.variables}") from None

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise DimensionMismatch(
                    f"variable mismatch: {self.variables} vs {other.variables}"
                )
            return other
        try:
            return LaurentPoly.constant(self.variables, to_scalar(other))
        except TypeError:
            return None

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.variables == other.variables and self._terms == other._terms
        try:
            value = to_scalar(other)
        except TypeError:
            return NotImplemented
        return self.is_constant() and self.constant_value() == value

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.variables, frozenset(self._terms.items())))
            )
        return self._hash

    def __neg__(self):
        return LaurentPoly._raw(self.variables, {e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return LaurentPoly._raw(self.variables, terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add_exps(e1, e2)
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.variables, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def scale(self, value):
        value = to_scalar(value)
        if value == 0:
            return LaurentPoly.zero(self.variables)
        return LaurentPoly._raw(self.variables, {e: c * value for e, c in self._terms.items()})

    def shift(self, exponents):
        """Multiply by the monomial ``x^exponents``."""
        exponents = tuple(exponents)
        return LaurentPoly._raw(
            self.variables, {_add_exps(e, exponents): c for e, c in self._terms.items()}
        )

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent-polynomial inverses")
            (e, c), = self._terms.items()
            return LaurentPoly._raw(
                self.variables, {tuple(k * x for x in e): Fraction(1) / c ** (-k)}
            )
        result = LaurentPoly.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def content(self):
        """Positive rational ``c`` with ``self / c`` having coprime integer coefficients."""
        from math import gcd, lcm

        if not self._terms:
            return Fraction(0)
        nums = 0
        dens = 1
        for c in self._terms.values():
            nums = gcd(nums, c.numerator)
            dens = lcm(dens, c.denominator)
        return Fraction(nums, dens)

    def diff(self, name):
        idx = self._index(name)
        terms = {}
        for e, c in self._terms.items():
            k = e[idx]
            if k:
                ne = list(e)
                ne[idx] -= 1
                terms[tuple(ne)] = c * k
        return LaurentPoly._raw(self.variables, terms)

    def divide_exact(self, other):
        """Return ``q`` with ``q * other == self``, or None if no such polynomial.

        Lex-order division; exponents must be nonnegative on both sides.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.variables)
        if not (self.has_nonnegative_exponents() and other.has_nonnegative_exponents()):
            return None
        lt_e, lt_c = other.leading_term()
        rem = dict(self._terms)
        quot = {}
        other_terms = list(other._terms.items())
        while rem:
            e = max(rem)
            d = _sub_exps(e, lt_e)
            if any(x < 0 for x in d):
                return None
            q = rem[e] / lt_c
            quot[d] = q
            for oe, oc in other_terms:
                te = _add_exps(oe, d)
                s = rem.get(te, 0) - q * oc
                if s:
                    rem[te] = s
                else:
                    rem.pop(te, None)
        return LaurentPoly._raw(self.variables, quot)

    # -- evaluation / substitution -------------------------------------------

    def evaluate(self, values):
        """Evaluate at a point given as a mapping name -> value or a sequence.

        Values may be Fractions, GaussRats, floats or complex numbers.
        """
        if isinstance(values, dict):
            try:
                point = [values[v] for v in self.variables]
            except KeyError as exc:
                raise UnknownVariable(f"no value for variable {exc.args[0]!r}") from None
        else:
            point = list(values)
            if len(point) != self.nvars:
                raise DimensionMismatch("point has the wrong number of coordinates")
        total = 0
        powers = {}
        for e, c in self._terms.items():
            term = None
            for i, k in enumerate(e):
                if k == 0:
                    continue
                key = (i, k)
                if key not in powers:
                    powers[key] = point[i] ** k
                term = powers[key] if term is None else term * powers[key]
            if term is None:
                total = total + c
            elif isinstance(term, (float, complex)):
                total = total + float(c) * term
            else:
                total = total + term * c
        return total

    def rename(self, variables):
        """Same coefficients over a new, equally long variable tuple."""
        variables = tuple(variables)
        if len(variables) != self.nvars:
            raise DimensionMismatch("rename requires the same number of variables")
        return LaurentPoly._raw(variables, dict(self._terms))

    def embed(self, variables):
        """Re-express over a superset of variables (missing exponents are 0)."""
        variables = tuple(variables)
        idx = []
        for v in self.variables:
            if v not in variables:
                raise UnknownVariable(f"{v!r} missing from target variables")
            idx.append(variables.index(v))
        terms = {}
        for e, c in self._terms.items():
            ne = [0] * len(variables)
            for i, k in zip(idx, e):
                ne[i] = k
            terms[tuple(ne)] = c
        return LaurentPoly._raw(variables, terms)

    # -- univariate view ------------------------------------------------------

    def univariate(self, idx):
        """``(shift, coeffs)`` with self = x^shift * sum(coeffs[k] x^k) in variable idx.

        Requires all other exponents to be zero.
        """
        if not self._terms:
            return 0, []
        for e in self._terms:
            if any(k for j, k in enumerate(e) if j != idx):
                raise ValueError("polynomial is not univariate in the requested variable")
        low = min(e[idx] for e in self._terms)
        high = max(e[idx] for e in self._terms)
        coeffs = [Fraction(0)] * (high - low + 1)
        for e, c in self._terms.items():
            coeffs[e[idx] - low] = c
        return low, coeffs

    @classmethod
    def from_univariate(cls, variables, idx, coeffs, shift=0):
        variables = tuple(variables)
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                e = [0] * len(variables)
                e[idx] = k + shift
                terms[tuple(e)] = Fraction(c)
        return cls._raw(variables, terms)

    # -- printing ---------------------------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self.variables!r}, {str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms():
            mono = []
            for name, k in zip(self.variables, e):
                if k == 1:
                    mono.append(name)
                elif k:
                    mono.append(f"{name}^{k}")
            body = "*".join(mono)
            mag = abs(c)
            if body:
                text = body if mag == 1 else f"{format_scalar(mag)}*{body}"
            else:
                text = format_scalar(mag)
            parts.append(("-" if c < 0 else "+", text))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out


# -- dense univariate helpers (coefficient lists, index = power) ---------------


def upoly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def upoly_divmod(a, b):
    a = upoly_trim(a)
    b = upoly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    r = list(a)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for i, bc in enumerate(b):
                r[k + i] -= c * bc
    return upoly_trim(q), upoly_trim(r[: len(b) - 1])


def upoly_gcd(a, b):
    """Monic gcd of two dense univariate polynomials."""
    a = upoly_trim(a)
    b = upoly_trim(b)
    while b:
        _, r = upoly_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]
