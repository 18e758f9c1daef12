"""Landau-Ginzburg mirror data for the minimal adjoint orbits.

Constructs, for every rank, the mirror hypersurface, its potential, the
homogenised pencil and the component bookkeeping of the two critical
fibres, together with the theta-function pipeline for the rank-one case.
Fractions are never formed: denominators are cleared and the locus they
exclude is kept as an ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

from .fields import QQ
from .homology import DEFAULT_FIELD, ExtDescriptor, ext_groups
from .ideal import IdealBasis, SingularReport, groebner_basis, singular_report
from .poly import (
    MonomialOrder,
    Polynomial,
    PolynomialRing,
    clear_fraction_substitution,
    format_poly,
    homogenize,
    prod,
    substitute,
)


@dataclass(frozen=True, order=True)
class Label:
    """Structured identifier for components, sheaves and vanishing cycles.

    ``family`` is one of ``F`` (sheaf), ``L`` (vanishing cycle), ``D``
    (divisor / component), ``Y`` (component of the rank-one critical
    fibre) or ``Lsh`` (the rank-one sheaves script-L).
    """

    family: str
    index: object = None

    def __str__(self):
        if self.family == "F":
            return f"F({self.index})"
        if self.family == "D":
            return f"D_{self.index}"
        if self.family == "Lsh":
            return f"Lsh{self.index}"
        return f"{self.family}{self.index}"


# -- theta functions (rank one) ----------------------------------------------------

THETA_NAMES = ("theta1", "theta2", "theta3", "theta4", "a", "b", "c", "d")


@dataclass
class ThetaSystem:
    """The two theta-function relations with theta0 = 1.

    ``eq1`` is ``theta2*theta4 - (a + b + c*theta1 + d*theta3)`` and
    ``eq2`` the cleared form ``c*d*theta1*theta3 - a*b`` of
    ``theta1*theta3 = ab/(cd)``.
    """

    ring: PolynomialRing
    eq1: Polynomial
    eq2: Polynomial
    eq2_rhs: tuple          # (numerator, denominator) of theta1*theta3
    coefficients: dict      # name -> Polynomial (symbol or constant)

    def as_text(self) -> list:
        num, den = self.eq2_rhs
        return [
            f"theta2*theta4 = {format_poly(self.ring.var('theta2') * self.ring.var('theta4') - self.eq1)}",
            f"theta1*theta3 = ({format_poly(num)})/({format_poly(den)})",
        ]


def theta_equations(a=None, b=None, c=None, d=None) -> ThetaSystem:
    """Relations among theta1..theta4 with curve-class coefficients a, b, c, d.

    Omitted coefficients stay symbolic (ring variables); numeric ones are
    substituted.
    """
    R = PolynomialRing(THETA_NAMES, QQ)
    coeffs = {}
    for name, val in zip("abcd", (a, b, c, d)):
        coeffs[name] = R.var(name) if val is None else R.const(val)
    th1, th2, th3, th4 = (R.var(f"theta{k}") for k in range(1, 5))
    A, B, C, D = (coeffs[k] for k in "abcd")
    eq1 = th2 * th4 - (A + B + C * th1 + D * th3)
    eq2 = C * D * th1 * th3 - A * B
    return ThetaSystem(R, eq1, eq2, (A * B, C * D), coeffs)


@dataclass
class ThetaElimination:
    """Result of eliminating theta3.

    ``cleared`` is ``c*theta1*theta2*theta4 - c^2*theta1^2 - c(a+b)*theta1 - ab``,
    i.e. ``c`` times ``theta1*theta2*theta4 - (alpha*theta1^2 + gamma*theta1 + beta)``
    with ``alpha = c``, ``gamma = a + b`` and ``beta = ab/c``.
    """

    ring: PolynomialRing
    cleared: Polynomial
    alpha: Polynomial
    gamma: Polynomial
    beta: tuple              # (numerator, denominator)
    excluded: IdealBasis     # theta1 != 0

    def laurent_text(self) -> str:
        num, den = self.beta
        return (f"theta2*theta4 = {format_poly(self.gamma)} + ({format_poly(self.alpha)})*theta1"
                f" + ({format_poly(num)})/({format_poly(den)})*theta1^-1")


def _nonzero_symbolically(P: Polynomial) -> bool:
    return not P.is_zero


def theta_eliminate(T: ThetaSystem) -> ThetaElimination:
    """Substitute ``theta3 = ab/(cd*theta1)`` into the first relation and clear denominators."""
    C, D = T.coefficients["c"], T.coefficients["d"]
    if not (_nonzero_symbolically(C) and _nonzero_symbolically(D)):
        raise ValueError("elimination divides by c*d; both must be nonzero")
    R = T.ring
    th1 = R.var("theta1")
    num, den = T.eq2_rhs
    # cd*theta1 * eq1(theta3 = ab/(cd theta1)) carries a spurious factor d
    cleared = clear_fraction_substitution(T.eq1, "theta3", num, den * th1)
    cleared = cleared.divide_exact(D)
    A, B = T.coefficients["a"], T.coefficients["b"]
    th2, th4 = R.var("theta2"), R.var("theta4")
    alpha, gamma = C, A + B
    expected = C * (th1 * th2 * th4 - alpha * th1 ** 2 - gamma * th1) - A * B
    if cleared != expected:
        raise AssertionError("elimination does not match the alpha/beta/gamma form")
    small = PolynomialRing(("theta1", "theta2", "theta4", "a", "b", "c", "d"), QQ)
    return ThetaElimination(small, cleared.change_ring(small), alpha.change_ring(small),
                            gamma.change_ring(small), (A * B, C),
                            IdealBasis([small.var("theta1")]))


def mir_polynomial(alpha=1, beta=1, gamma=1) -> Polynomial:
    """``theta1*theta2*theta4 - (alpha*theta1^2 + gamma*theta1 + beta)`` with numeric coefficients."""
    R = PolynomialRing(("theta1", "theta2", "theta4"), QQ)
    t1, t2, t4 = R.gens
    return t1 * t2 * t4 - (R.const(alpha) * t1 ** 2 + R.const(gamma) * t1 + R.const(beta))


def surface_from_mir(alpha=1, beta=1, gamma=1) -> Polynomial:
    """Projectivise theta4 as ``u/v`` and rename ``theta1 -> x``, ``theta2 -> y``."""
    P = mir_polynomial(alpha, beta, gamma)
    S = PolynomialRing("x y u v", QQ)
    x, y, u, v = S.gens
    renamed = substitute(P, {"theta1": x, "theta2": y, "theta4": u}, target=S)
    return clear_fraction_substitution(renamed, "u", u, v)


# -- the rank-one surface ------------------------------------------------------------

@dataclass
class Component:
    label: Label
    ideal: IdealBasis
    note: str = ""

    def to_json(self) -> dict:
        return {"label": str(self.label), "generators": [format_poly(g) for g in self.ideal.generators],
                "note": self.note}


@dataclass
class LG2Surface:
    ring: PolynomialRing
    polynomial: Polynomial            # u*y*x - v*(x^2 + x + 1)
    excluded: IdealBasis              # x != 0
    potential: str
    fibre_polynomial: Polynomial      # restriction to y = 0
    components: list
    double_points: IdealBasis         # singular locus of the chart-u=1 fibre curve
    branes: list
    objects: list
    symmetry: dict


def lg2_surface() -> LG2Surface:
    """The surface ``uy = v(x + 1 + 1/x)`` with potential ``y`` and its critical fibre."""
    S = PolynomialRing("x y u v", QQ)
    x, y, u, v = S.gens
    P = u * y * x - v * (x ** 2 + x + 1)
    fibre = substitute(P, {"y": 0})
    q = x ** 2 + x + 1
    comps = [
        Component(Label("Y", 0), IdealBasis([y, v]), "C* x [1:0]"),
        Component(Label("Y", 1), IdealBasis([y, q]), "{x1} x P^1, x1 a root of x^2 + x + 1"),
        Component(Label("Y", 2), IdealBasis([y, q]), "{x2} x P^1, x2 the other root"),
    ]
    # chart u = 1 of the fibre: the plane curve v*(x^2+x+1) = 0 in (x, v)
    C = PolynomialRing("x v", QQ)
    h = substitute(fibre, {"u": 1, "y": 0}).change_ring(C)
    sing = groebner_basis(IdealBasis([h, h.diff("x"), h.diff("v")]))
    # x -> 1/x swaps the roots of x^2 + x + 1; x -> -x does not preserve it
    Q1 = PolynomialRing("x", QQ)
    qx = Q1.parse("x^2 + x + 1")
    inv_sym = clear_fraction_substitution(qx, "x", Q1.one(), Q1.var("x")) == qx
    neg_sym = substitute(qx, {"x": -Q1.var("x")}) == qx
    branes = [Label("D", k) for k in range(3)]
    return LG2Surface(
        ring=S, polynomial=P, excluded=IdealBasis([x]), potential="y",
        fibre_polynomial=fibre, components=comps, double_points=sing,
        branes=branes, objects=[Label("D", 0), Label("D", 1)],
        symmetry={"x -> 1/x preserves x^2+x+1": inv_sym, "x -> -x preserves x^2+x+1": neg_sym},
    )


# -- general rank ---------------------------------------------------------------------

def mirror_ring(n: int, symbolic_t: bool = True, with_x: bool = True, with_y2: bool = False,
                field=QQ) -> PolynomialRing:
    names = []
    if with_x:
        names += ["x1", "x2"]
    names += ["y1"] + (["y2"] if with_y2 else [])
    names += [f"z{k}" for k in range(1, n)] + [f"w{k}" for k in range(1, n)]
    if symbolic_t:
        names += ["t1", "t2"]
    return PolynomialRing(names, field)


def _t_values(R: PolynomialRing, t1, t2):
    T1 = R.var("t1") if t1 is None else R.const(t1)
    T2 = R.var("t2") if t2 is None else R.const(t2)
    return T1, T2


@dataclass
class MirrorModel:
    """Mirror data for rank ``n``: the hypersurface, its potential and the pencil."""

    n: int
    ring: PolynomialRing
    defining: Polynomial
    expanded: Polynomial
    potential_num: Polynomial
    potential_den: Polynomial
    t1: object
    t2: object
    pencil_ring: PolynomialRing | None = None
    pencil_f: Polynomial | None = None
    pencil_g: Polynomial | None = None
    indeterminacy: IdealBasis | None = None

    @property
    def symbolic(self) -> bool:
        return self.t1 is None or self.t2 is None

    def prod_z(self, R=None):
        R = R or self.ring
        return prod((R.var(f"z{k}") for k in range(1, self.n)), R)

    def prod_w(self, R=None):
        R = R or self.ring
        return prod((R.var(f"w{k}") for k in range(1, self.n)), R)

    def equation_text(self) -> str:
        lhs = self.potential_num
        rhs = self.potential_den * self.ring.var("x2")
        return f"{format_poly(lhs)} = {format_poly(rhs)}"

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "variables": list(self.ring.names),
            "defining": format_poly(self.defining),
            "equation": self.equation_text(),
            "potential": {"numerator": format_poly(self.potential_num),
                          "denominator": format_poly(self.potential_den)},
        }
        if self.pencil_f is not None:
            out["pencil"] = {"f": format_poly(self.pencil_f), "g": format_poly(self.pencil_g),
                             "indeterminacy": [format_poly(p) for p in self.indeterminacy.generators]}
        return out


def mirror_equation(n: int, t1=None, t2=None) -> MirrorModel:
    """``(y1 + t1*prod w)(y1 + t2*prod z) = y1*x1*x2*prod(w*z)`` for the mirror of LG(n+1).

    ``t1``/``t2`` of ``None`` keep them as ring variables.
    """
    if n < 2:
        raise ValueError("mirror_equation needs n >= 2; the rank-one case goes through theta_equations")
    R = mirror_ring(n, symbolic_t=(t1 is None or t2 is None))
    T1, T2 = _t_values(R, t1, t2)
    x1, x2, y1 = R.var("x1"), R.var("x2"), R.var("y1")
    Pz = prod((R.var(f"z{k}") for k in range(1, n)), R)
    Pw = prod((R.var(f"w{k}") for k in range(1, n)), R)
    num = (y1 + T1 * Pw) * (y1 + T2 * Pz)
    den = y1 * x1 * Pw * Pz
    defining = num - x2 * den
    expanded = y1 ** 2 + y1 * (T1 * Pw + T2 * Pz - x1 * x2 * Pw * Pz) + T1 * T2 * Pw * Pz
    if defining != expanded:
        raise AssertionError("expanded and factored mirror equations disagree")
    model = MirrorModel(n, R, defining, expanded, num, den, t1, t2)
    f, g, ideal = pencil_polys(model)
    model.pencil_ring = f.ring
    model.pencil_f, model.pencil_g, model.indeterminacy = f, g, ideal
    return model


def two_equation_system(n: int, t1=None, t2=None) -> IdealBasis:
    """The pair of relations in ``x1, x2, y1, y2, z, w`` before ``y2`` is eliminated."""
    R = mirror_ring(n, symbolic_t=(t1 is None or t2 is None), with_y2=True)
    T1, T2 = _t_values(R, t1, t2)
    x1, x2, y1, y2 = (R.var(v) for v in ("x1", "x2", "y1", "y2"))
    Pz = prod((R.var(f"z{k}") for k in range(1, n)), R)
    Pw = prod((R.var(f"w{k}") for k in range(1, n)), R)
    r1 = x1 * x2 * Pw * Pz - (y1 + y2 + T1 * Pw + T2 * Pz)
    r2 = y1 * y2 - T1 * T2 * Pw * Pz
    return IdealBasis([r1, r2], R)


def eliminate_y2(n: int, t1=None, t2=None) -> Polynomial:
    """Eliminate ``y2`` from the two-equation system by a Groebner basis.

    Returns the single generator of the elimination ideal, normalised to
    match the sign of the mirror equation.
    """
    I = two_equation_system(n, t1, t2)
    R = I.ring
    order_names = ("y2",) + tuple(nm for nm in R.names if nm != "y2")
    E = PolynomialRing(order_names, R.field)
    G = groebner_basis(IdealBasis([g.change_ring(E) for g in I.generators], E),
                       MonomialOrder.elimination(1))
    kept = [g for g in G.groebner if g.degree_in("y2") <= 0]
    if len(kept) != 1:
        raise AssertionError(f"expected a principal elimination ideal, got {len(kept)} generators")
    target = mirror_ring(n, symbolic_t=(t1 is None or t2 is None))
    gen = kept[0].change_ring(target)
    e, c = mirror_equation(n, t1, t2).defining.leading_term()
    other = gen.coefficient(e)
    return gen.scale(Fraction(c) / Fraction(other)) if other else gen


def swap_z_w(P: Polynomial, swap_t: bool = True) -> Polynomial:
    """Apply ``z_i <-> w_i`` (and ``t1 <-> t2``) to a polynomial of a mirror ring."""
    R = P.ring
    assign = {}
    for name in R.names:
        if name.startswith("z") and f"w{name[1:]}" in R.registry:
            assign[name] = R.var(f"w{name[1:]}")
        elif name.startswith("w") and f"z{name[1:]}" in R.registry:
            assign[name] = R.var(f"z{name[1:]}")
    if swap_t and "t1" in R.registry and "t2" in R.registry:
        assign["t1"], assign["t2"] = R.var("t2"), R.var("t1")
    return substitute(P, assign)


def pencil_polys(M: MirrorModel):
    """Homogenised pencil ``(f, g)`` on ``[y1 : y2 : z : w]`` and its base ideal.

    ``f = (y1*y2^(n-2) + t1*prod w)(y1*y2^(n-2) + t2*prod z)*y2`` and
    ``g = y1*prod(w*z)``; ``x1`` is dropped because it only marks the fibre
    at infinity.
    """
    n = M.n
    R = mirror_ring(n, symbolic_t=M.symbolic, with_x=False, with_y2=True)
    T1, T2 = _t_values(R, M.t1, M.t2)
    y1, y2 = R.var("y1"), R.var("y2")
    Pz = prod((R.var(f"z{k}") for k in range(1, n)), R)
    Pw = prod((R.var(f"w{k}") for k in range(1, n)), R)
    lead = y1 * y2 ** (n - 2)
    f = (lead + T1 * Pw) * (lead + T2 * Pz) * y2
    g = y1 * Pw * Pz
    proj = [nm for nm in R.names if nm not in ("t1", "t2")]
    df, dg = projective_degrees(f, proj), projective_degrees(g, proj)
    if len(df) != 1 or df != dg:
        raise AssertionError(f"pencil is not homogeneous of equal degree: {df} vs {dg}")
    # chart y2 = 1 (and x1 = 1) gives back the potential fraction
    full = M.ring
    back_f = substitute(f, {"y2": 1}).change_ring(full)
    back_g = substitute(g, {"y2": 1}).change_ring(full)
    if back_f != M.potential_num or back_g != substitute(M.potential_den, {"x1": 1}):
        raise AssertionError("pencil does not dehomogenise to the potential")
    return f, g, IdealBasis([f, g], R)


def projective_degrees(P: Polynomial, names: Sequence[str]) -> set:
    """Set of term degrees counted only in the given variables."""
    idx = [P.ring.index(nm) for nm in names]
    return {sum(e[i] for i in idx) for e in P.terms}


def homogenized_numerator(n: int, t1=1, t2=1) -> Polynomial:
    """``(y1 + t1*prod w)(y1 + t2*prod z)`` homogenised by ``y2`` (numeric t only)."""
    R = mirror_ring(n, symbolic_t=False, with_x=False)
    y1 = R.var("y1")
    Pz = prod((R.var(f"z{k}") for k in range(1, n)), R)
    Pw = prod((R.var(f"w{k}") for k in range(1, n)), R)
    return homogenize((y1 + R.const(t1) * Pw) * (y1 + R.const(t2) * Pz), "y2")


def lg3_renaming(model: MirrorModel, convention: str = "consistent") -> Polynomial:
    """Rewrite the rank-2 mirror equation in the variables ``x3, x4``.

    ``convention="literal"`` uses ``w1 -> x3, z1 -> x4`` literally; that
    reproduces the LG(3) equation only after exchanging ``t1`` and ``t2``.
    ``"consistent"`` uses ``w1 -> x4, z1 -> x3``, which matches it as is.
    """
    if model.n != 2:
        raise ValueError("renaming applies to n = 2 only")
    names = ["x1", "x2", "x3", "x4", "y1"] + (["t1", "t2"] if model.symbolic else [])
    R = PolynomialRing(names, QQ)
    if convention == "literal":
        assign = {"w1": R.var("x3"), "z1": R.var("x4")}
    elif convention == "consistent":
        assign = {"w1": R.var("x4"), "z1": R.var("x3")}
    else:
        raise ValueError(convention)
    return substitute(model.defining, assign, target=R)


def lg3_polynomial(symbolic_t: bool = True, t1=1, t2=1) -> Polynomial:
    """``p = -x1*x2*x3*x4*y1 + (y1 + t1*x4)(y1 + t2*x3)``, the LG(3) mirror equation."""
    names = ["x1", "x2", "x3", "x4", "y1"] + (["t1", "t2"] if symbolic_t else [])
    R = PolynomialRing(names, QQ)
    x1, x2, x3, x4, y1 = (R.var(v) for v in ("x1", "x2", "x3", "x4", "y1"))
    T1 = R.var("t1") if symbolic_t else R.const(t1)
    T2 = R.var("t2") if symbolic_t else R.const(t2)
    return -x1 * x2 * x3 * x4 * y1 + (y1 + T1 * x4) * (y1 + T2 * x3)


def lg3_components(R: PolynomialRing, t1=None, t2=None) -> list:
    """The two claimed singular components of the LG(3) mirror."""
    x1, x2, x3, x4, y1 = (R.var(v) for v in ("x1", "x2", "x3", "x4", "y1"))
    T1 = R.var("t1") if t1 is None else R.const(t1)
    T2 = R.var("t2") if t2 is None else R.const(t2)
    return [
        IdealBasis([y1, x3, x4], R),
        IdealBasis([x1, x2, y1 + T2 * x3, y1 + T1 * x4], R),
    ]


LG3_COMPONENT_LABELS = ("Lemma sings3 component 1: y1=x3=x4=0",
                        "Lemma sings3 component 2: x1=x2=y1+t2*x3=y1+t1*x4=0")

# Sentence from the LG(3) discussion that is broader than what the lemma
# proves; reported, never asserted.
UNVERIFIED_PROSE = ("variety singular wherever any of x1, x2, x3, x4, y1 vanishes",)


def lg3_singular_report(trials: int = 100, p: int = 101, seed: int = 0,
                        sample: bool = True) -> SingularReport:
    """Jacobian containment with symbolic t1, t2 plus sampling at t1 = t2 = 1."""
    P = lg3_polynomial(symbolic_t=True)
    comps = lg3_components(P.ring)
    variables = ("x1", "x2", "x3", "x4", "y1")
    opts = None
    if sample:
        P1 = lg3_polynomial(symbolic_t=False)
        opts = {"polynomial": P1, "excluded": lg3_components(P1.ring, 1, 1),
                "trials": trials, "p": p, "seed": seed}
    return singular_report(P, comps, variables, LG3_COMPONENT_LABELS, opts)


# -- critical fibres --------------------------------------------------------------------

@dataclass
class FibreReport:
    fibre: str
    components: list
    symmetry_classes: list
    objects: list
    ignored: list = dc_field(default_factory=list)
    product_check: bool = False

    def to_json(self) -> dict:
        return {
            "fibre": self.fibre,
            "components": [c.to_json() for c in self.components],
            "symmetry_classes": [[str(l) for l in cls] for cls in self.symmetry_classes],
            "objects": [str(o) for o in self.objects],
            "ignored": [str(o) for o in self.ignored],
            "product_check": self.product_check,
        }


def _symmetry_classes(components: Sequence[Component]) -> list:
    """Group components whose generators are exchanged by ``z <-> w`` (with ``t1 <-> t2``)."""
    gens = {c.label: c.ideal.generators[0] for c in components}
    classes, seen = [], set()
    for c in components:
        if c.label in seen:
            continue
        img = swap_z_w(gens[c.label])
        partner = [d.label for d in components
                   if d.label not in seen and (gens[d.label] == img or gens[d.label] == -img)]
        cls = sorted({c.label, *partner}, key=str)
        seen.update(cls)
        classes.append(cls)
    return classes


def fibre_report(M: MirrorModel, which: str) -> FibreReport:
    """Components, symmetry classes and sheaf objects of the fibre over 0 or infinity."""
    n = M.n
    R = M.pencil_ring
    T1, T2 = _t_values(R, M.t1, M.t2)
    y1 = R.var("y1")
    Pz = prod((R.var(f"z{k}") for k in range(1, n)), R)
    Pw = prod((R.var(f"w{k}") for k in range(1, n)), R)
    if which == "zero":
        comps = [Component(Label("D", "z"), IdealBasis([y1 + T2 * Pz], R), "y1 = -t2*prod z"),
                 Component(Label("D", "w"), IdealBasis([y1 + T1 * Pw], R), "y1 = -t1*prod w")]
        chart = substitute(M.pencil_f, {"y2": 1})
        ok = prod((c.ideal.generators[0] for c in comps), R) == chart
        return FibreReport("zero", comps, _symmetry_classes(comps), [Label("F", "z0")],
                           ignored=[Label("D", "y2")], product_check=ok)
    if which in ("infinity", "inf"):
        comps = [Component(Label("D", "y1"), IdealBasis([y1], R), "F(z%d) := F(y1)" % n)]
        comps += [Component(Label("D", f"z{k}"), IdealBasis([R.var(f"z{k}")], R)) for k in range(1, n)]
        comps += [Component(Label("D", f"w{k}"), IdealBasis([R.var(f"w{k}")], R)) for k in range(1, n)]
        ok = prod((c.ideal.generators[0] for c in comps), R) == M.pencil_g
        objects = [Label("F", f"z{k}") for k in range(1, n + 1)]
        return FibreReport("infinity", comps, _symmetry_classes(comps), objects, product_check=ok)
    raise ValueError(f"unknown fibre {which!r}; expected 'zero' or 'infinity'")


def dsg_generators(n: int) -> list:
    """Generators ``F(z0), ..., F(zn)`` of the category of singularities."""
    if n < 2:
        raise ValueError("n must be at least 2")
    M = mirror_equation(n, 1, 1)
    return fibre_report(M, "zero").objects + fibre_report(M, "infinity").objects


@dataclass
class MirrorMapReport:
    pairs: list
    middle_homology_rank: int

    def is_bijection(self) -> bool:
        left = [a for a, _ in self.pairs]
        right = [b for _, b in self.pairs]
        return len(set(left)) == len(left) == len(set(right)) == len(right)

    def to_json(self) -> dict:
        return {"pairs": [[str(a), str(b)] for a, b in self.pairs],
                "middle_homology_rank": self.middle_homology_rank}


def mirror_map(n: int) -> MirrorMapReport:
    """``L_i <-> F(z_i)`` for i = 1..n and ``L_{n+1} <-> F(z0)``."""
    gens = dsg_generators(n)
    by_name = {str(g): g for g in gens}
    pairs = [(Label("L", k), by_name[f"F(z{k})"]) for k in range(1, n + 1)]
    pairs.append((Label("L", n + 1), by_name["F(z0)"]))
    return MirrorMapReport(pairs, n)


# -- morphisms ----------------------------------------------------------------------------

@dataclass
class HomEntry:
    """Shift-indexed summands of a Hom group.

    ``summands`` maps a shift to a description: a free abelian rank for the
    rank-one reference table, or an :class:`ExtDescriptor` for the sheaves
    ``F(z_i)``.
    """

    source: Label
    target: Label
    summands: dict
    provenance: str = "computed"

    @property
    def is_zero(self) -> bool:
        return all(_summand_zero(v) for v in self.summands.values())

    def text(self) -> str:
        parts = []
        for shift, v in sorted(self.summands.items()):
            if _summand_zero(v):
                continue
            body = v.closed_form_text if isinstance(v, ExtDescriptor) else (
                "Z" if v == 1 else f"Z^{v}")
            parts.append(body if shift == 0 else f"{body}[{shift}]")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "source": str(self.source), "target": str(self.target), "provenance": self.provenance,
            "summands": {str(s): (v.to_json() if isinstance(v, ExtDescriptor) else v)
                         for s, v in sorted(self.summands.items())},
            "text": self.text(),
        }


def _summand_zero(v) -> bool:
    if isinstance(v, ExtDescriptor):
        return v.closed_form == "zero"
    return v == 0


def hom_sheaves(n: int, i: int, j: int, kmax: int = 4, D: int | None = None,
                field=DEFAULT_FIELD) -> HomEntry:
    """``Hom(F(z_i), F(z_j))`` as ``N_ij`` in shift 0 plus ``M_ij`` in odd shifts.

    The summands come from :func:`ext_groups`.  ``Hom(F(z0), F(z_j))`` is
    zero for ``j >= 1``.
    """
    if not (0 <= i <= n and 0 <= j <= n):
        raise IndexError(f"indices ({i}, {j}) out of range 0..{n}")
    src, tgt = Label("F", f"z{i}"), Label("F", f"z{j}")
    if i == 0:
        if j == 0:
            raise ValueError("Hom(F(z0), F(z0)) is not covered")
        return HomEntry(src, tgt, {}, provenance="reference")
    if j == 0 or i == j:
        raise ValueError(f"Hom(F(z{i}), F(z{j})) is not covered")
    if D is None:
        D = max(6, n + 3)
    exts = ext_groups(n, i, j, kmax, D, field)
    return HomEntry(src, tgt, {e.k: e for e in exts})


def hom_table_lg2() -> dict:
    """Reference morphisms between the two rank-one sheaves (not recomputed)."""
    L0, L1 = Label("Lsh", 0), Label("Lsh", 1)
    table = {
        (L0, L0): HomEntry(L0, L0, {0: 1}, "reference"),
        (L1, L1): HomEntry(L1, L1, {0: 1}, "reference"),
        (L0, L1): HomEntry(L0, L1, {0: 1, -1: 1}, "reference"),
        (L1, L0): HomEntry(L1, L0, {}, "reference"),
    }
    return table


# -- sl(3) rational potential --------------------------------------------------------------

@dataclass
class SL3Potential:
    numerator: Polynomial
    denominator: Polynomial
    flag_ideal: IdealBasis
    indeterminacy: IdealBasis


def rational_potential_sl3(l1=None, l2=None, l3=None) -> SL3Potential:
    """``(l1 x1y1 + l2 x2y2 + l3 x3y3) / (x1y1 + x2y2 + x3y3)`` on P^2 x P^2.

    Numeric weights must sum to zero and not all vanish; ``None`` keeps a
    weight symbolic.
    """
    numeric = [l is not None for l in (l1, l2, l3)]
    names = ["x1", "x2", "x3", "y1", "y2", "y3"]
    names += [f"lam{k}" for k, num in zip((1, 2, 3), numeric) if not num]
    R = PolynomialRing(names, QQ)
    lams = []
    for k, l in zip((1, 2, 3), (l1, l2, l3)):
        lams.append(R.var(f"lam{k}") if l is None else R.const(l))
    if all(numeric):
        vals = [Fraction(l) for l in (l1, l2, l3)]
        if all(v == 0 for v in vals):
            raise ValueError("all weights zero: the numerator vanishes identically")
        if sum(vals) != 0:
            raise ValueError(f"weights {vals} violate the trace condition")
    xs = [R.var(f"x{k}") for k in (1, 2, 3)]
    ys = [R.var(f"y{k}") for k in (1, 2, 3)]
    num = sum((l * x * y for l, x, y in zip(lams, xs, ys)), R.zero())
    den = sum((x * y for x, y in zip(xs, ys)), R.zero())
    return SL3Potential(num, den, IdealBasis([den], R), IdealBasis([num, den], R))
