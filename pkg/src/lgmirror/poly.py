"""Sparse multivariate polynomials over QQ or a prime field.

A polynomial is a mapping from exponent tuples to nonzero coefficients,
tied to a :class:`PolynomialRing` that fixes the variable names, their
order and the coefficient field.  Everything is immutable.

>>> R = PolynomialRing("x y", QQ)
>>> x, y = R.gens
>>> str((x + y) ** 2)
'x^2 + 2*x*y + y^2'
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .fields import QQ, GF

Exponent = tuple


class UnknownVariableError(ValueError):
    """A variable name that the ring does not know about."""


class VariableRegistry:
    """Ordered, duplicate-free tuple of variable names.

    The order is fixed for the lifetime of the registry and decides how
    monomials compare.  Extending returns a new registry.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not name or not (name[0].isalpha()) or not all(c.isalnum() or c == "_" for c in name):
                raise ValueError(f"invalid variable name {name!r}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __setattr__(self, key, value):
        raise AttributeError("VariableRegistry is immutable")

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, VariableRegistry) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VariableRegistry({' '.join(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(f"unknown variable {name!r}") from None

    def extend(self, *names: str) -> "VariableRegistry":
        return VariableRegistry(self.names + tuple(names))


# -- monomial orders ---------------------------------------------------------

def _grevlex_key(e):
    return (sum(e), tuple(-a for a in reversed(e)))


class MonomialOrder:
    """A monomial order given by a sort key on exponent tuples.

    ``kind`` is one of ``grevlex``, ``grlex``, ``lex`` or ``elim``; the
    elimination order compares the first ``split`` variables by grevlex
    before looking at the rest, so every monomial involving an eliminated
    variable beats every monomial that does not.
    """

    __slots__ = ("kind", "split", "key")

    def __init__(self, kind: str = "grevlex", split: int | None = None):
        if kind == "grevlex":
            key = _grevlex_key
        elif kind == "grlex":
            def key(e):
                return (sum(e), e)
        elif kind == "lex":
            def key(e):
                return e
        elif kind == "elim":
            if split is None or split < 0:
                raise ValueError("elimination order needs a block split index")

            def key(e, k=split):
                return (_grevlex_key(e[:k]), _grevlex_key(e[k:]))
        else:
            raise ValueError(f"unknown monomial order {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "split", split)
        object.__setattr__(self, "key", key)

    def __setattr__(self, key, value):
        raise AttributeError("MonomialOrder is immutable")

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.split) == (other.kind, other.split)

    def __hash__(self):
        return hash((self.kind, self.split))

    def __repr__(self):
        if self.kind == "elim":
            return f"MonomialOrder('elim', split={self.split})"
        return f"MonomialOrder({self.kind!r})"

    def describe(self) -> str:
        return f"elim({self.split})" if self.kind == "elim" else self.kind

    @classmethod
    def grevlex(cls):
        return cls("grevlex")

    @classmethod
    def lex(cls):
        return cls("lex")

    @classmethod
    def elimination(cls, split: int):
        return cls("elim", split)


GREVLEX = MonomialOrder("grevlex")


def monomial_divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


# -- rings and polynomials ---------------------------------------------------

class PolynomialRing:
    """Polynomial ring ``field[names]``."""

    def __init__(self, names, field=QQ):
        self.registry = names if isinstance(names, VariableRegistry) else VariableRegistry(names)
        self.field = field
        self.nvars = len(self.registry)
        self._zero_exp = (0,) * self.nvars

    def __repr__(self):
        return f"PolynomialRing({' '.join(self.registry.names)!r}, {self.field!r})"

    def __eq__(self, other):
        return (isinstance(other, PolynomialRing) and self.registry == other.registry
                and self.field == other.field)

    def __hash__(self):
        return hash((self.registry, self.field))

    @property
    def names(self) -> tuple:
        return self.registry.names

    @property
    def gens(self) -> tuple:
        return tuple(self.var(n) for n in self.registry.names)

    def index(self, name: str) -> int:
        return self.registry.index(name)

    def var(self, name: str) -> "Polynomial":
        i = self.registry.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, value) -> "Polynomial":
        c = self.field.convert(value)
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, {self._zero_exp: c})

    def monomial(self, exp: Sequence[int], coeff=1) -> "Polynomial":
        exp = tuple(exp)
        if len(exp) != self.nvars or any(a < 0 for a in exp):
            raise ValueError(f"bad exponent vector {exp} for {self.nvars} variables")
        c = self.field.convert(coeff)
        return Polynomial(self, {exp: c} if not self.field.is_zero(c) else {})

    def from_terms(self, terms: Mapping) -> "Polynomial":
        F = self.field
        out = {}
        for e, c in terms.items():
            c = F.convert(c)
            if not F.is_zero(c):
                out[tuple(e)] = c
        return Polynomial(self, out)

    def parse(self, src: str) -> "Polynomial":
        from .parse import parse_poly
        return parse_poly(src, self)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value.change_ring(self)
        if isinstance(value, str):
            return self.parse(value)
        return self.const(value)

    def extend(self, *names: str) -> "PolynomialRing":
        return PolynomialRing(self.registry.extend(*names), self.field)

    def with_field(self, field) -> "PolynomialRing":
        return PolynomialRing(self.registry, field)


class Polynomial:
    """Immutable sparse polynomial.

    ``terms`` maps exponent tuples to nonzero field elements; treat it as
    read-only.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- coercion helpers --------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring is self.ring or other.ring == self.ring:
                return other
            raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ring.const(other)
        return NotImplemented

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = F.add(out[e], c) if e in out else c
            if F.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

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

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = F.mul(c1, c2)
                if e in out:
                    s = F.add(out[e], c)
                    if F.is_zero(s):
                        del out[e]
                    else:
                        out[e] = s
                else:
                    out[e] = c
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        c = F.convert(c)
        if F.is_zero(c):
            return self.ring.zero()
        return Polynomial(self.ring, {e: F.mul(a, c) for e, a in self.terms.items()})

    def mul_term(self, exp: Exponent, c) -> "Polynomial":
        F = self.ring.field
        return Polynomial(self.ring, {monomial_mul(e, exp): F.mul(a, c) for e, a in self.terms.items()})

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection ----------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {self.ring._zero_exp}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def variables(self) -> tuple:
        """Names of the variables that actually occur, in ring order."""
        used = [False] * self.ring.nvars
        for e in self.terms:
            for i, a in enumerate(e):
                if a:
                    used[i] = True
        return tuple(n for n, u in zip(self.ring.names, used) if u)

    def constant_term(self):
        return self.terms.get(self.ring._zero_exp, self.ring.field.zero)

    def coefficient(self, exp: Sequence[int]):
        return self.terms.get(tuple(exp), self.ring.field.zero)

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list:
        """Terms in decreasing order."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder = GREVLEX):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(self.ring.field.inv(c))

    # -- printing --------------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"

    # -- calculus and ring maps --------------------------------------------------
    def diff(self, name: str) -> "Polynomial":
        return partial_derivative(self, name)

    def subs(self, assignment: Mapping, target: PolynomialRing | None = None) -> "Polynomial":
        return substitute(self, assignment, target)

    def evaluate(self, point: Mapping):
        return evaluate_point(self, point)

    def homogenize(self, name: str) -> "Polynomial":
        return homogenize(self, name)

    def change_ring(self, ring: PolynomialRing) -> "Polynomial":
        """Embed into ``ring`` by variable name (and convert coefficients)."""
        if ring == self.ring:
            return self
        idx = []
        for i, name in enumerate(self.ring.names):
            if name in ring.registry:
                idx.append(ring.index(name))
            else:
                idx.append(None)
        F = ring.field
        out: dict = {}
        for e, c in self.terms.items():
            ne = [0] * ring.nvars
            for i, a in enumerate(e):
                if a:
                    if idx[i] is None:
                        raise UnknownVariableError(
                            f"variable {self.ring.names[i]!r} not in target ring")
                    ne[idx[i]] = a
            ne = tuple(ne)
            c2 = F.convert(c)
            s = F.add(out[ne], c2) if ne in out else c2
            if F.is_zero(s):
                out.pop(ne, None)
            else:
                out[ne] = s
        return Polynomial(ring, out)

    def divide_exact(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient ``self / divisor``; raises ``ValueError`` if not exact."""
        divisor = self._coerce(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.ring.field
        le, lc = divisor.leading_term()
        inv = F.inv(lc)
        rem = self
        q: dict = {}
        while rem.terms:
            e, c = rem.leading_term()
            if not monomial_divides(le, e):
                raise ValueError(f"{divisor} does not divide {self}")
            qe = monomial_div(e, le)
            qc = F.mul(c, inv)
            q[qe] = qc
            rem = rem - divisor.mul_term(qe, qc)
        return Polynomial(self.ring, q)


def format_term(ring: PolynomialRing, e: Exponent, c, leading: bool) -> str:
    F = ring.field
    parts = []
    for name, a in zip(ring.names, e):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    mono = "*".join(parts)
    neg = F.is_negative(c)
    mag = F.neg(c) if neg else c
    if not mono:
        body = F.format(mag)
    elif F.is_one(mag):
        body = mono
    else:
        body = f"{F.format(mag)}*{mono}"
    if leading:
        return f"-{body}" if neg else body
    return f" - {body}" if neg else f" + {body}"


def format_poly(P: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    """Canonical text form, terms in decreasing ``order`` (grevlex default)."""
    if not P.terms:
        return "0"
    return "".join(format_term(P.ring, e, c, i == 0)
                   for i, (e, c) in enumerate(P.sorted_terms(order)))


def partial_derivative(P: Polynomial, name: str) -> Polynomial:
    i = P.ring.index(name)
    F = P.ring.field
    out = {}
    for e, c in P.terms.items():
        a = e[i]
        if a:
            d = F.mul(c, F.convert(a))
            if not F.is_zero(d):
                ne = list(e)
                ne[i] = a - 1
                out[tuple(ne)] = d
    return Polynomial(P.ring, out)


def substitute(P: Polynomial, assignment: Mapping, target: PolynomialRing | None = None) -> Polynomial:
    """Ring homomorphism sending each named variable to a polynomial.

    Unassigned variables map to the variable of the same name in
    ``target`` (default: ``P.ring`` or the common ring of the images).
    """
    src = P.ring
    for name in assignment:
        src.index(name)
    if target is None:
        rings = {v.ring for v in assignment.values() if isinstance(v, Polynomial)}
        if len(rings) > 1:
            raise ValueError("substituted values live in different rings; pass target=")
        target = rings.pop() if rings else src
    images = []
    for name in src.names:
        if name in assignment:
            v = assignment[name]
            if isinstance(v, Polynomial):
                v = v.change_ring(target)
            elif isinstance(v, str):
                v = target.parse(v)
            else:
                v = target.const(v)
            images.append(v)
        elif name in target.registry:
            images.append(target.var(name))
        else:
            images.append(None)
    powers = [dict() for _ in images]

    def power(i, a):
        cache = powers[i]
        if a not in cache:
            cache[a] = images[i] ** a
        return cache[a]

    F = target.field
    result = target.zero()
    for e, c in P.terms.items():
        term = target.const(F.convert(c))
        for i, a in enumerate(e):
            if a:
                if images[i] is None:
                    raise UnknownVariableError(
                        f"variable {src.names[i]!r} has no image in the target ring")
                term = term * power(i, a)
        result = result + term
    return result


def evaluate_point(P: Polynomial, point: Mapping):
    """Evaluate at a point given as ``{name: scalar}``; returns a field element."""
    F = P.ring.field
    vals = []
    for name in P.ring.names:
        vals.append(F.convert(point[name]) if name in point else None)
    for name in point:
        P.ring.index(name)
    total = F.zero
    for e, c in P.terms.items():
        t = c
        for i, a in enumerate(e):
            if a:
                if vals[i] is None:
                    raise ValueError(f"no value assigned to variable {P.ring.names[i]!r}")
                t = F.mul(t, _field_pow(F, vals[i], a))
        total = F.add(total, t)
    return total


def _field_pow(F, x, a):
    if isinstance(F, GF):
        return pow(x, a, F.p)
    return x ** a


def homogenize(P: Polynomial, name: str) -> Polynomial:
    """Pad every term with powers of ``name`` up to the total degree of ``P``.

    If ``name`` is new, the result lives in the ring extended by it.
    """
    ring = P.ring
    if name in ring.registry:
        if P.degree_in(name) > 0:
            raise ValueError(f"variable {name!r} already occurs in {P}")
        target = ring
    else:
        target = ring.extend(name)
        P = P.change_ring(target)
    i = target.index(name)
    d = P.degree()
    out = {}
    for e, c in P.terms.items():
        ne = list(e)
        ne[i] += d - sum(e)
        out[tuple(ne)] = c
    return Polynomial(target, out)


def dehomogenize(P: Polynomial, name: str) -> Polynomial:
    return substitute(P, {name: 1})


def prod(polys: Iterable[Polynomial], ring: PolynomialRing) -> Polynomial:
    out = ring.one()
    for p in polys:
        out = out * p
    return out


def clear_fraction_substitution(P: Polynomial, name: str, num: Polynomial, den: Polynomial) -> Polynomial:
    """``den^k * P(name = num/den)`` where ``k`` is the degree of ``P`` in ``name``."""
    k = P.degree_in(name)
    if k < 0:
        return P
    ring = num.ring
    i = P.ring.index(name)
    out = ring.zero()
    by_power: dict = {}
    for e, c in P.terms.items():
        ne = list(e)
        a = ne[i]
        ne[i] = 0
        by_power.setdefault(a, {})[tuple(ne)] = c
    for a, terms in by_power.items():
        coeff = Polynomial(P.ring, terms).change_ring(ring)
        out = out + coeff * num ** a * den ** (k - a)
    return out
