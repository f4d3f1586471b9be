"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Polynomial` is an immutable map from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients over an ordered tuple of variable
names. Two polynomials only combine when their variable tuples agree.

Printing uses the graded order in which, inside one total degree, monomials
with a smaller exponent in the first variable come first (then the second,
and so on). For the ring ``(X, Y, Z)`` this gives
``Y^4 + 2*X*Y^2*Z + X^2*Z^2 + X^3*Y``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence, Union

from .errors import NonPolynomialRewrite, VariableMismatch

Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]
NEG_INF = float("-inf")


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


def _order_key(e: Exponents):
    return (-sum(e),) + e


class Polynomial:
    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponents, Scalar] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        n = len(variables)
        clean: dict[Exponents, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(k) for k in e)
            if len(e) != n or any(k < 0 for k in e):
                raise ValueError(f"bad exponent vector {e} for variables {variables}")
            c = _as_fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self._vars = variables
        self._terms = clean
        self._hash = None

    @classmethod
    def _make(cls, variables: tuple[str, ...], terms: dict[Exponents, Fraction]) -> Polynomial:
        # trusted constructor: terms already normalized
        p = object.__new__(cls)
        p._vars = variables
        p._terms = terms
        p._hash = None
        return p

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> Polynomial:
        return cls._make(tuple(variables), {})

    @classmethod
    def constant(cls, c: Scalar, variables: Sequence[str]) -> Polynomial:
        variables = tuple(variables)
        c = _as_fraction(c)
        return cls._make(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> Polynomial:
        variables = tuple(variables)
        if name not in variables:
            raise VariableMismatch(f"unknown variable {name!r}; ring has {variables}")
        e = tuple(1 if v == name else 0 for v in variables)
        return cls._make(variables, {e: Fraction(1)})

    @classmethod
    def monomial(cls, exponents: Exponents, variables: Sequence[str], coeff: Scalar = 1) -> Polynomial:
        return cls(variables, {tuple(exponents): coeff})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> tuple[Polynomial, ...]:
        return tuple(cls.variable(v, variables) for v in variables)

    # -- basic accessors ------------------------------------------------

    @property
    def variables(self) -> tuple[str, ...]:
        return self._vars

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0,) * len(self._vars), Fraction(0))

    def coefficient(self, exponents: Exponents) -> Fraction:
        return self._terms.get(tuple(exponents), Fraction(0))

    def index(self, var: str) -> int:
        try:
            return self._vars.index(var)
        except ValueError:
            raise VariableMismatch(f"unknown variable {var!r}; ring has {self._vars}") from None

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: _order_key(t[0]))

    def leading_term(self) -> tuple[Exponents, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = min(self._terms, key=_order_key)
        return e, self._terms[e]

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other._vars != self._vars:
                raise VariableMismatch(f"variable lists differ: {self._vars} vs {other._vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self._vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for e, c in small.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s += c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._make(self._vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._make(self._vars, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: Scalar) -> Polynomial:
        c = _as_fraction(c)
        if not c:
            return Polynomial._make(self._vars, {})
        return Polynomial._make(self._vars, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[Exponents, Fraction] = {}
        get = out.get
        n = len(self._vars)
        if n == 3:
            for (e0, e1, e2), c in b.items():
                for (f0, f1, f2), d in a.items():
                    k = (e0 + f0, e1 + f1, e2 + f2)
                    out[k] = get(k, 0) + c * d
        else:
            for e, c in b.items():
                for f, d in a.items():
                    k = tuple(x + y for x, y in zip(e, f))
                    out[k] = get(k, 0) + c * d
        return Polynomial._make(self._vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {e!r}")
        result = Polynomial.constant(1, self._vars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._vars == other._vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and gradings -------------------------------------------

    def partial(self, var: str) -> Polynomial:
        i = self.index(var)
        out = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return Polynomial._make(self._vars, out)

    def weighted_degree(self, weights: Sequence[int]):
        """Largest weighted degree of a term; ``NEG_INF`` for zero."""
        if len(weights) != len(self._vars):
            raise VariableMismatch(f"weight vector {tuple(weights)} does not fit {self._vars}")
        if not self._terms:
            return NEG_INF
        return max(sum(w * k for w, k in zip(weights, e)) for e in self._terms)

    def total_degree(self):
        return self.weighted_degree((1,) * len(self._vars))

    def homogeneous_components(self, weights: Sequence[int]) -> dict[int, Polynomial]:
        if len(weights) != len(self._vars):
            raise VariableMismatch(f"weight vector {tuple(weights)} does not fit {self._vars}")
        buckets: dict[int, dict[Exponents, Fraction]] = {}
        for e, c in self._terms.items():
            buckets.setdefault(sum(w * k for w, k in zip(weights, e)), {})[e] = c
        return {d: Polynomial._make(self._vars, t) for d, t in sorted(buckets.items())}

    def top_component(self, weights: Sequence[int]) -> Polynomial:
        comps = self.homogeneous_components(weights)
        return comps[max(comps)] if comps else self

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        if weights is None:
            weights = (1,) * len(self._vars)
        return len(self.homogeneous_components(weights)) <= 1

    def degree_in(self, var: str):
        i = self.index(var)
        if not self._terms:
            return NEG_INF
        return max(e[i] for e in self._terms)

    def coefficients_in(self, var: str) -> dict[int, Polynomial]:
        """Coefficients of ``self`` viewed as a polynomial in ``var``.

        The coefficients live in the same ring and are free of ``var``.
        """
        i = self.index(var)
        buckets: dict[int, dict[Exponents, Fraction]] = {}
        for e, c in self._terms.items():
            buckets.setdefault(e[i], {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: Polynomial._make(self._vars, t) for k, t in sorted(buckets.items())}

    def free_of(self, var: str) -> bool:
        i = self.index(var)
        return all(e[i] == 0 for e in self._terms)

    def support_variables(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self._vars) if any(e[i] for e in self._terms))

    # -- change of rings -------------------------------------------------

    def substitute(self, bindings: Mapping[str, Polynomial | Scalar],
                   variables: Sequence[str] | None = None) -> Polynomial:
        """Apply the evaluation homomorphism ``v -> bindings[v]``.

        The target ring is ``variables`` if given, otherwise the ring of the
        polynomial-valued bindings (or of ``self`` when none are polynomials).
        Unbound variables map to the same-named variable of the target ring.
        """
        for name in bindings:
            self.index(name)
        if variables is None:
            rings = {b._vars for b in bindings.values() if isinstance(b, Polynomial)}
            if len(rings) > 1:
                raise VariableMismatch(f"bindings live in different rings: {sorted(rings)}")
            target = rings.pop() if rings else self._vars
        else:
            target = tuple(variables)
        images = []
        for v in self._vars:
            b = bindings[v] if v in bindings else v
            if isinstance(b, str):
                b = Polynomial.variable(b, target)
            elif isinstance(b, Polynomial):
                if b._vars != target:
                    raise VariableMismatch(f"binding for {v} is over {b._vars}, expected {target}")
            else:
                b = Polynomial.constant(b, target)
            images.append(b)
        powers: list[dict[int, Polynomial]] = [{0: Polynomial.constant(1, target), 1: b} for b in images]

        def power(i: int, k: int) -> Polynomial:
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        acc: dict[Exponents, Fraction] = {}
        for e, c in self._terms.items():
            term = Polynomial.constant(c, target)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            for f, d in term._terms.items():
                s = acc.get(f, 0) + d
                if s:
                    acc[f] = s
                else:
                    acc.pop(f, None)
        return Polynomial._make(target, acc)

    def embed(self, variables: Sequence[str]) -> Polynomial:
        """Re-express in a ring whose variables include every variable used here."""
        variables = tuple(variables)
        idx = []
        for i, v in enumerate(self._vars):
            if v in variables:
                idx.append(variables.index(v))
            elif any(e[i] for e in self._terms):
                raise VariableMismatch(f"variable {v!r} is used but missing from {variables}")
            else:
                idx.append(None)
        out = {}
        for e, c in self._terms.items():
            f = [0] * len(variables)
            for i, k in enumerate(e):
                if k:
                    f[idx[i]] = k
            out[tuple(f)] = c
        return Polynomial._make(variables, out)

    def rename(self, mapping: Mapping[str, str]) -> Polynomial:
        return Polynomial._make(tuple(mapping.get(v, v) for v in self._vars), self._terms)

    # -- content ---------------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c such that ``self / c`` has coprime integer coefficients."""
        if not self._terms:
            return Fraction(0)
        num = reduce(math.gcd, (abs(c.numerator) for c in self._terms.values()))
        den = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in self._terms.values()))
        return Fraction(num, den)

    def normalized(self) -> Polynomial:
        """Canonical associate: integer coprime coefficients, positive leading coefficient."""
        if not self._terms:
            return self
        c = self.content()
        if self.leading_term()[1] < 0:
            c = -c
        return self.scale(1 / c)

    def monic(self) -> Polynomial:
        return self.scale(1 / self.leading_term()[1])

    # -- printing --------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self._vars, e) if k)
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self._vars}, {str(self)!r})"


# ---------------------------------------------------------------------------
# module-level operations


def arith(f: Polynomial, g: Polynomial, kind: str) -> Polynomial:
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def _lex_max(terms: Iterable[Exponents]) -> Exponents:
    return max(terms)


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial | None:
    """Return ``q`` with ``f == q * g``, or ``None`` if ``g`` does not divide ``f``."""
    g = f._coerce(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f
    n = len(f.variables)
    if len(g) == 1:
        (ge, gc), = g.items()
        out = {}
        for e, c in f.items():
            d = tuple(a - b for a, b in zip(e, ge))
            if min(d) < 0:
                return None
            out[d] = c / gc
        return Polynomial._make(f.variables, out)
    ge = _lex_max(g._terms)
    gc = g._terms[ge]
    rem = dict(f._terms)
    quo: dict[Exponents, Fraction] = {}
    while rem:
        e = _lex_max(rem)
        d = tuple(a - b for a, b in zip(e, ge))
        if min(d) < 0:
            return None
        c = rem[e] / gc
        quo[d] = c
        for h, hc in g._terms.items():
            k = tuple(d[i] + h[i] for i in range(n))
            s = rem.get(k, 0) - c * hc
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return Polynomial._make(f.variables, quo)


def pow_(f: Polynomial, e: int) -> Polynomial:
    return f ** e


def partial(f: Polynomial, var: str) -> Polynomial:
    return f.partial(var)


def weighted_degree(f: Polynomial, weights: Sequence[int]):
    return f.weighted_degree(weights)


def homogeneous_components(f: Polynomial, weights: Sequence[int]) -> dict[int, Polynomial]:
    return f.homogeneous_components(weights)


def substitute(f: Polynomial, bindings: Mapping[str, Polynomial | Scalar],
               variables: Sequence[str] | None = None) -> Polynomial:
    return f.substitute(bindings, variables)


def rewrite_in_slice_coordinate(f: Polynomial, t_def: Polynomial, q: int, new_name: str = "T",
                                kernel_var: str | None = None, slice_var: str | None = None) -> Polynomial:
    """Express ``f`` as a polynomial ``g(X, Y, T)`` with ``g(X, Y, t_def) == f``.

    ``t_def`` must read ``h + X^(q-1)*Z`` with ``h`` free of ``Z``. The slice
    variable ``Z`` (default: last variable) is replaced by ``new_name`` in the
    result ring, and ``X`` defaults to the first variable.
    """
    vars_ = f.variables
    if t_def.variables != vars_:
        raise VariableMismatch(f"slice definition is over {t_def.variables}, expected {vars_}")
    x = kernel_var or vars_[0]
    z = slice_var or vars_[-1]
    ix, iz = f.index(x), f.index(z)
    lead = Polynomial.monomial(tuple((q - 1) if i == ix else (1 if i == iz else 0) for i in range(len(vars_))), vars_)
    h = t_def - lead
    if not h.free_of(z):
        raise ValueError(f"slice definition {t_def} is not of the form h + {x}^{q - 1}*{z}")
    new_vars = tuple(new_name if v == z else v for v in vars_)
    if new_name in vars_ and new_name != z:
        raise VariableMismatch(f"new variable name {new_name!r} clashes with {vars_}")
    t = Polynomial.variable(new_name, new_vars)
    h_new = h.rename({z: new_name})
    shift = t - h_new
    coeffs = f.coefficients_in(z)
    top = max(coeffs) if coeffs else 0
    acc = Polynomial.zero(new_vars)
    xpow_exp = [0] * len(vars_)
    for j, cj in coeffs.items():
        xpow_exp[ix] = (q - 1) * (top - j)
        acc = acc + cj.rename({z: new_name}) * shift ** j * Polynomial.monomial(tuple(xpow_exp), new_vars)
    drop = (q - 1) * top
    out = {}
    for e, c in acc.items():
        if e[ix] < drop:
            raise NonPolynomialRewrite(
                f"{f} is not a polynomial in {new_vars} with {new_name} = {t_def}", term=e)
        out[e[:ix] + (e[ix] - drop,) + e[ix + 1:]] = c
    return Polynomial._make(new_vars, out)


# -- gcd ---------------------------------------------------------------------


def _main_variable(f: Polynomial, g: Polynomial) -> str | None:
    used = set(f.support_variables()) | set(g.support_variables())
    for v in reversed(f.variables):
        if v in used:
            return v
    return None


def _content_in(f: Polynomial, var: str) -> Polynomial:
    return reduce(_gcd, f.coefficients_in(var).values())


def _lc_in(f: Polynomial, var: str) -> tuple[int, Polynomial]:
    coeffs = f.coefficients_in(var)
    k = max(coeffs)
    return k, coeffs[k]


def _prem(a: Polynomial, b: Polynomial, var: str) -> Polynomial:
    """Pseudo-remainder of ``a`` by ``b`` in ``var``: ``lc(b)^(deg a - deg b + 1) * a mod b``."""
    da, _ = _lc_in(a, var)
    db, lb = _lc_in(b, var)
    steps = da - db + 1
    xv = Polynomial.variable(var, a.variables)
    r = a
    while not r.is_zero() and r.degree_in(var) >= db:
        dr, lr = _lc_in(r, var)
        r = r * lb - lr * xv ** (dr - db) * b
        steps -= 1
    if steps > 0:
        r = r * lb ** steps
    return r


def _gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero():
        return g.normalized()
    if g.is_zero():
        return f.normalized()
    var = _main_variable(f, g)
    if var is None:
        return Polynomial.constant(1, f.variables)
    if f.free_of(var):
        return _gcd(f, _content_in(g, var))
    if g.free_of(var):
        return _gcd(_content_in(f, var), g)
    cf, cg = _content_in(f, var), _content_in(g, var)
    c = _gcd(cf, cg)
    a, b = exact_divide(f, cf), exact_divide(g, cg)
    if a.degree_in(var) < b.degree_in(var):
        a, b = b, a
    # subresultant remainder sequence
    one = Polynomial.constant(1, f.variables)
    gg = hh = one
    while True:
        delta = a.degree_in(var) - b.degree_in(var)
        r = _prem(a, b, var)
        if r.is_zero():
            break
        if r.free_of(var):
            b = one
            break
        a, b = b, exact_divide(r, gg * hh ** delta)
        gg = _lc_in(a, var)[1]
        if delta == 0:
            pass
        elif delta == 1:
            hh = gg
        else:
            hh = exact_divide(gg ** delta, hh ** (delta - 1))
    if not b.is_constant():
        b = exact_divide(b, _content_in(b, var))
    return (c * b).normalized()


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Greatest common divisor, normalized by :meth:`Polynomial.normalized`."""
    g = f._coerce(g)
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return _gcd(f, g)


def gcd_many(polys: Iterable[Polynomial]) -> Polynomial:
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        raise ValueError("gcd of zero polynomials is undefined")
    return reduce(gcd, nonzero[1:], nonzero[0].normalized())
