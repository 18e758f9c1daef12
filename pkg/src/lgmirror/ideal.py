"""Groebner bases, normal forms and the ideal operations built on them.

Buchberger's algorithm with the sugar selection strategy and the
Gebauer-Moeller criteria.  The instances that come up here are small, so
the implementation favours readability over speed.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

from .fields import GF
from .poly import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    PolynomialRing,
    format_poly,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    partial_derivative,
)


class MissingGroebnerError(ValueError):
    """Raised when an operation needs a cached Groebner basis that is absent."""


class GroebnerLimitError(RuntimeError):
    """The S-pair ceiling was hit before Buchberger's algorithm finished."""


class IdealBasis:
    """Generators of an ideal, optionally with a cached reduced Groebner basis."""

    def __init__(self, generators: Sequence[Polynomial], ring: PolynomialRing | None = None,
                 groebner: Sequence[Polynomial] | None = None, order: MonomialOrder | None = None):
        generators = tuple(generators)
        if ring is None:
            if not generators:
                raise ValueError("an empty ideal needs an explicit ring")
            ring = generators[0].ring
        for g in generators:
            if g.ring != ring:
                raise ValueError("generators live in different rings")
        self.ring = ring
        self.generators = generators
        self.groebner = tuple(groebner) if groebner is not None else None
        self.order = order

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"IdealBasis([{gens}])"

    @classmethod
    def parse(cls, ring: PolynomialRing, *sources: str) -> "IdealBasis":
        return cls([ring.parse(s) for s in sources], ring)

    @property
    def has_groebner(self) -> bool:
        return self.groebner is not None

    def with_groebner(self, order: MonomialOrder = GREVLEX) -> "IdealBasis":
        if self.groebner is not None and self.order == order:
            return self
        return groebner_basis(self, order)

    def contains(self, P: Polynomial) -> bool:
        G = self.with_groebner(self.order or GREVLEX)
        return normal_form(P, G).is_zero

    def is_unit(self) -> bool:
        G = self.with_groebner(self.order or GREVLEX)
        return any(g.is_constant() and not g.is_zero for g in G.groebner)

    def same_ideal(self, other: "IdealBasis") -> bool:
        return all(other.contains(g) for g in self.generators) and all(
            self.contains(g) for g in other.generators)

    def to_text(self) -> str:
        """One generator per line, reduced basis if cached, canonical print order."""
        polys = self.groebner if self.groebner is not None else self.generators
        return "\n".join(format_poly(g) for g in polys)

    def to_json(self, verified: bool | None = None) -> dict:
        polys = self.groebner if self.groebner is not None else self.generators
        return {
            "generators": [format_poly(g) for g in polys],
            "order": self.order.describe() if self.order is not None else None,
            "verified": verified,
        }


# -- Buchberger ------------------------------------------------------------

class _GPoly:
    """Working polynomial for Buchberger: terms dict plus cached leading data."""

    __slots__ = ("terms", "lm", "lc", "sugar")

    def __init__(self, terms, key, sugar):
        self.terms = terms
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]
        self.sugar = sugar


def _reduce_terms(terms: dict, basis: list, key, F, full: bool = True) -> dict:
    """Remainder of ``terms`` on division by ``basis`` (monic _GPoly list)."""
    p = dict(terms)
    rem = {}
    while p:
        e = max(p, key=key)
        c = p[e]
        g = None
        for cand in basis:
            if monomial_divides(cand.lm, e):
                g = cand
                break
        if g is None:
            if not full:
                rem.update(p)
                return rem
            rem[e] = c
            del p[e]
            continue
        shift = monomial_div(e, g.lm)
        f = F.div(c, g.lc)
        for ge, gc in g.terms.items():
            ne = tuple(a + b for a, b in zip(ge, shift))
            s = F.sub(p.get(ne, F.zero), F.mul(f, gc))
            if F.is_zero(s):
                p.pop(ne, None)
            else:
                p[ne] = s
    return rem


def _monic(terms, lc, F):
    inv = F.inv(lc)
    return {e: F.mul(c, inv) for e, c in terms.items()}


def _spoly(f: _GPoly, g: _GPoly, F) -> dict:
    lcm = monomial_lcm(f.lm, g.lm)
    sf = monomial_div(lcm, f.lm)
    sg = monomial_div(lcm, g.lm)
    out = {}
    a = F.inv(f.lc)
    b = F.inv(g.lc)
    for e, c in f.terms.items():
        out[tuple(x + y for x, y in zip(e, sf))] = F.mul(c, a)
    for e, c in g.terms.items():
        ne = tuple(x + y for x, y in zip(e, sg))
        s = F.sub(out.get(ne, F.zero), F.mul(c, b))
        if F.is_zero(s):
            out.pop(ne, None)
        else:
            out[ne] = s
    return out


def _coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def buchberger(polys: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
               max_pairs: int = 200000) -> list:
    """Reduced Groebner basis of the ideal generated by ``polys``."""
    nonzero = [p for p in polys if not p.is_zero]
    if not nonzero:
        return []
    ring = nonzero[0].ring
    F = ring.field
    key = order.key

    allp: list = []      # every polynomial ever added; pairs index into it
    current: list = []   # indices of the non-redundant basis elements
    pairs: list = []     # (sugar, lcm, i, j)

    def lcm_key(pair):
        return (pair[0], key(pair[1]))

    def update(hidx):
        nonlocal pairs, current
        h = allp[hidx]
        mh = h.lm
        # new pairs (h, g): drop those whose lcm is a multiple of another candidate's
        cands = list(current)
        kept = []
        while cands:
            g = cands.pop()
            lcm = monomial_lcm(mh, allp[g].lm)

            def divides(other):
                return monomial_divides(monomial_lcm(mh, allp[other].lm), lcm)

            if _coprime(mh, allp[g].lm) or (
                    not any(divides(o) for o in cands) and not any(divides(o) for o in kept)):
                kept.append(g)
        new_pairs = []
        for g in kept:
            gp = allp[g]
            if _coprime(mh, gp.lm):
                continue
            lcm = monomial_lcm(mh, gp.lm)
            deg = sum(lcm)
            sugar = max(h.sugar + deg - sum(mh), gp.sugar + deg - sum(gp.lm))
            new_pairs.append((sugar, lcm, g, hidx))
        # old pairs made redundant by h
        survivors = []
        for pr in pairs:
            _, lcm, i, j = pr
            if (monomial_divides(mh, lcm)
                    and monomial_lcm(allp[i].lm, mh) != lcm
                    and monomial_lcm(allp[j].lm, mh) != lcm):
                continue
            survivors.append(pr)
        pairs = survivors + new_pairs
        current = [g for g in current if not monomial_divides(mh, allp[g].lm)] + [hidx]

    # seed with inter-reduced, monic inputs sorted small-first
    seeds = sorted(nonzero, key=lambda p: key(p.leading_term(order)[0]))
    for p in seeds:
        basis = [allp[g] for g in current]
        terms = _reduce_terms(p.terms, basis, key, F)
        if not terms:
            continue
        gp = _GPoly(terms, key, p.degree())
        gp.terms = _monic(gp.terms, gp.lc, F)
        gp.lc = F.one
        allp.append(gp)
        update(len(allp) - 1)

    processed = 0
    while pairs:
        pairs.sort(key=lcm_key)
        sugar, lcm, i, j = pairs.pop(0)
        processed += 1
        if processed > max_pairs:
            raise GroebnerLimitError(
                f"S-pair ceiling {max_pairs} reached with {len(pairs)} pairs pending")
        s = _spoly(allp[i], allp[j], F)
        if not s:
            continue
        basis = [allp[g] for g in current]
        r = _reduce_terms(s, basis, key, F)
        if not r:
            continue
        gp = _GPoly(r, key, sugar)
        gp.terms = _monic(gp.terms, gp.lc, F)
        gp.lc = F.one
        allp.append(gp)
        update(len(allp) - 1)

    # minimal basis, then inter-reduce tails
    minimal = [allp[g] for g in current]
    minimal = [g for g in minimal
               if not any(h is not g and monomial_divides(h.lm, g.lm) for h in minimal)]
    reduced = []
    for g in minimal:
        others = [h for h in minimal if h is not g]
        tail = dict(g.terms)
        lead = {g.lm: tail.pop(g.lm)}
        tail = _reduce_terms(tail, others, key, F)
        tail.update(lead)
        reduced.append(Polynomial(ring, tail))
    reduced.sort(key=lambda p: key(p.leading_term(order)[0]))
    return reduced


def groebner_basis(I: IdealBasis, order: MonomialOrder = GREVLEX,
                   max_pairs: int = 200000) -> IdealBasis:
    """Return ``I`` with a cached reduced Groebner basis for ``order``."""
    G = buchberger(I.generators, order, max_pairs)
    return IdealBasis(I.generators, I.ring, G, order)


def normal_form(P: Polynomial, G: IdealBasis) -> Polynomial:
    """Fully reduced remainder of ``P`` modulo the cached Groebner basis."""
    if G.groebner is None:
        raise MissingGroebnerError("normal_form needs an IdealBasis with a Groebner basis")
    if P.ring != G.ring:
        P = P.change_ring(G.ring)
    if not G.groebner or P.is_zero:
        return P
    F = G.ring.field
    key = G.order.key
    basis = [_GPoly(dict(g.terms), key, 0) for g in G.groebner]
    return Polynomial(G.ring, _reduce_terms(P.terms, basis, key, F))


def is_groebner(G: IdealBasis) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    if G.groebner is None:
        raise MissingGroebnerError("no Groebner basis cached")
    F = G.ring.field
    key = G.order.key
    basis = [_GPoly(dict(g.terms), key, 0) for g in G.groebner]
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            s = _spoly(basis[a], basis[b], F)
            if s and _reduce_terms(s, basis, key, F):
                return False
    return True


def is_reduced(G: IdealBasis) -> bool:
    if G.groebner is None:
        raise MissingGroebnerError("no Groebner basis cached")
    order = G.order
    leads = [g.leading_term(order) for g in G.groebner]
    for (lm, lc), g in zip(leads, G.groebner):
        if not G.ring.field.is_one(lc):
            return False
        for (lm2, _), h in zip(leads, G.groebner):
            if h is g:
                continue
            if any(monomial_divides(lm2, e) for e in g.terms):
                return False
    return True


# -- derived ideal operations --------------------------------------------------

def _fresh_name(ring: PolynomialRing, base: str) -> str:
    name = base
    while name in ring.registry:
        name += "_"
    return name


def ideal_intersection(I: IdealBasis, J: IdealBasis) -> IdealBasis:
    """``I ∩ J`` by eliminating ``t`` from ``t*I + (1-t)*J``."""
    ring = I.ring
    t = _fresh_name(ring, "tElim")
    big = PolynomialRing((t,) + ring.names, ring.field)
    tv = big.var(t)
    gens = [tv * g.change_ring(big) for g in I.generators if not g.is_zero]
    gens += [(1 - tv) * g.change_ring(big) for g in J.generators if not g.is_zero]
    if not gens:
        return IdealBasis([], ring)
    G = buchberger(gens, MonomialOrder.elimination(1))
    kept = [g for g in G if g.degree_in(t) <= 0]
    back = [g.change_ring(ring) for g in kept]
    return groebner_basis(IdealBasis(back, ring), GREVLEX)


def ideal_quotient(I: IdealBasis, f: Polynomial) -> IdealBasis:
    """Generators of ``(I : f) = {g : g*f in I}`` via ``(I ∩ (f)) / f``."""
    if f.is_zero:
        raise ValueError("ideal quotient by the zero polynomial")
    f = f.change_ring(I.ring) if f.ring != I.ring else f
    inter = ideal_intersection(I, IdealBasis([f], I.ring))
    gens = [g.divide_exact(f) for g in inter.groebner]
    return groebner_basis(IdealBasis(gens, I.ring), GREVLEX)


def jacobian_ideal(P: Polynomial, variables: Sequence[str] | None = None) -> IdealBasis:
    """``P`` together with its partial derivatives in ``variables`` (default: all)."""
    if variables is None:
        variables = P.ring.names
    gens = [P] + [partial_derivative(P, v) for v in variables]
    return IdealBasis(gens, P.ring)


def vanishes_on_component(polys: Sequence[Polynomial], comp: IdealBasis) -> bool:
    """True iff every polynomial reduces to zero modulo the component ideal."""
    G = comp.with_groebner(comp.order or GREVLEX)
    return all(normal_form(q, G).is_zero for q in polys)


# -- singular locus reports --------------------------------------------------------

class DegenerateSamplingError(RuntimeError):
    """Too few usable points on the variety were found."""


@dataclass(frozen=True)
class SmoothnessSample:
    smooth: int
    usable: int
    attempts: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.smooth, self.usable) if self.usable else Fraction(0)


def _on_component(point, comp: IdealBasis, F) -> bool:
    gens = comp.groebner if comp.groebner is not None else comp.generators
    return all(F.is_zero(g.evaluate(point)) for g in gens)


def sample_smoothness(P: Polynomial, excluded: Sequence[IdealBasis] = (), trials: int = 100,
                      p: int = 101, seed: int = 0,
                      variables: Sequence[str] | None = None) -> SmoothnessSample:
    """Probabilistic converse check: how often is a random point of V(P) smooth?

    Points over ``Z/p`` are drawn by solving ``P`` for a variable in which
    it is linear (falling back to rejection sampling), points on any
    excluded component are discarded, and a point counts as smooth when
    some partial derivative is nonzero there.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    F = GF(p)
    ring = P.ring.with_field(F)
    Pp = P.change_ring(ring)
    names = ring.names
    if variables is None:
        variables = names
    partials = [partial_derivative(Pp, v) for v in variables]
    excluded = [IdealBasis([g.change_ring(ring) for g in (c.groebner or c.generators)], ring)
                for c in excluded]
    linear = [v for v in names if Pp.degree_in(v) == 1]
    rng = random.Random(seed)

    smooth = usable = attempts = 0
    while usable < trials and attempts < 100 * trials:
        attempts += 1
        point = {v: rng.randrange(p) for v in names}
        if linear:
            v = linear[rng.randrange(len(linear))]
            rest = {k: val for k, val in point.items() if k != v}
            a = partial_derivative(Pp, v).evaluate(rest)
            if F.is_zero(a):
                continue
            b = Pp.evaluate({**rest, v: 0})
            point[v] = F.neg(F.div(b, a))
        if not F.is_zero(Pp.evaluate(point)):
            continue
        if any(_on_component(point, c, F) for c in excluded):
            continue
        usable += 1
        if any(not F.is_zero(d.evaluate(point)) for d in partials):
            smooth += 1
    if usable < max(1, trials // 10):
        raise DegenerateSamplingError(
            f"only {usable} usable points after {attempts} attempts")
    return SmoothnessSample(smooth, usable, attempts)


@dataclass
class SingularReport:
    polynomial: Polynomial
    claimed_components: list
    containment_verified: list
    sampled_smooth_fraction: Fraction | None = None
    labels: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "polynomial": format_poly(self.polynomial),
            "components": [
                {"label": lab, **comp.to_json(verified=ok)}
                for lab, comp, ok in zip(self.labels or [None] * len(self.claimed_components),
                                         self.claimed_components, self.containment_verified)
            ],
            "sampled_smooth_fraction": (str(self.sampled_smooth_fraction)
                                        if self.sampled_smooth_fraction is not None else None),
        }

    def to_text(self) -> str:
        lines = [f"polynomial: {format_poly(self.polynomial)}"]
        for lab, comp, ok in zip(self.labels or [None] * len(self.claimed_components),
                                 self.claimed_components, self.containment_verified):
            lines.append(f"component {lab or ''} ({'verified' if ok else 'FAILED'}):")
            lines.extend("  " + line for line in comp.to_text().splitlines())
        if self.sampled_smooth_fraction is not None:
            lines.append(f"sampled smooth fraction: {self.sampled_smooth_fraction}")
        return "\n".join(lines)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def singular_report(P: Polynomial, components: Sequence[IdealBasis],
                    variables: Sequence[str] | None = None, labels: Sequence[str] = (),
                    sample: dict | None = None) -> SingularReport:
    """Check that the Jacobian ideal of ``P`` vanishes on each claimed component.

    ``sample`` (keyword arguments for :func:`sample_smoothness`, plus an
    optional ``"polynomial"`` override for a numeric specialisation) adds
    the probabilistic converse.
    """
    jac = jacobian_ideal(P, variables)
    comps = [c.with_groebner() for c in components]
    verified = [vanishes_on_component(jac.generators, c) for c in comps]
    frac = None
    if sample is not None:
        sample = dict(sample)
        target = sample.pop("polynomial", P)
        excluded = sample.pop("excluded", comps)
        frac = sample_smoothness(target, excluded, **sample).fraction
    return SingularReport(P, comps, verified, frac, list(labels))
