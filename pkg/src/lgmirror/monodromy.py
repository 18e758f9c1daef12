"""Dehn-twist monodromy around the critical values of the rank-two mirror.

Matrices are 2x2 with polynomial entries and an optional polynomial
denominator kept on the side; identities are checked after clearing it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import QQ
from .linalg import nullspace, rank
from .poly import Polynomial, PolynomialRing, format_poly

MONODROMY_RING = PolynomialRing("x1 x2 y1 y2", QQ)


@dataclass(frozen=True)
class TwistMatrix:
    """``(1/denominator) * entries`` for a 2x2 polynomial matrix."""

    entries: tuple
    denominator: Polynomial

    def __post_init__(self):
        if len(self.entries) != 2 or any(len(r) != 2 for r in self.entries):
            raise ValueError("twist matrices are 2x2")
        if self.denominator.is_zero:
            raise ZeroDivisionError("zero denominator")

    @classmethod
    def from_rows(cls, rows, ring: PolynomialRing = MONODROMY_RING, denominator=None):
        entries = tuple(tuple(e if isinstance(e, Polynomial) else ring.const(e) for e in r) for r in rows)
        den = ring.one() if denominator is None else denominator
        return cls(entries, den)

    @property
    def ring(self) -> PolynomialRing:
        return self.denominator.ring

    def __matmul__(self, other: "TwistMatrix") -> "TwistMatrix":
        a, b = self.entries, other.entries
        prod = tuple(tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)) for i in range(2))
        return TwistMatrix(prod, self.denominator * other.denominator)

    def numerator_det(self) -> Polynomial:
        (a, b), (c, d) = self.entries
        return a * d - b * c

    def trace_numerator(self) -> Polynomial:
        return self.entries[0][0] + self.entries[1][1]

    def is_scalar_identity(self) -> bool:
        """True iff the matrix equals I, i.e. entries = denominator * I."""
        (a, b), (c, d) = self.entries
        return a == self.denominator and d == self.denominator and b.is_zero and c.is_zero

    def is_integral(self) -> bool:
        return self.denominator == 1 and all(e.is_constant() for r in self.entries for e in r)

    def rational_entries(self) -> list:
        if not self.denominator.is_constant():
            raise ValueError("symbolic denominator; specialise first")
        den = self.denominator.constant_term()
        out = []
        for r in self.entries:
            if not all(e.is_constant() for e in r):
                raise ValueError("symbolic entries; specialise first")
            out.append([Fraction(e.constant_term()) / Fraction(den) for e in r])
        return out

    def specialize(self, values: dict) -> "TwistMatrix":
        ev = lambda P: P.subs(values)
        return TwistMatrix(tuple(tuple(ev(e) for e in r) for r in self.entries), ev(self.denominator))

    def text(self) -> str:
        body = "[" + ", ".join("[" + ", ".join(format_poly(e) for e in r) + "]" for r in self.entries) + "]"
        if self.denominator == 1:
            return body
        return f"(1/({format_poly(self.denominator)}))*{body}"

    def __str__(self):
        return self.text()


def concrete_triple():
    """``T1 = [[1,1],[0,1]]``, ``T2 = [[1,0],[1,1]]`` and ``T3 = (T2 T1)^-1 = [[2,-1],[-1,1]]``."""
    T1 = TwistMatrix.from_rows([[1, 1], [0, 1]])
    T2 = TwistMatrix.from_rows([[1, 0], [1, 1]])
    T3 = TwistMatrix.from_rows([[2, -1], [-1, 1]])
    return T1, T2, T3


def symbolic_pair(ring: PolynomialRing = MONODROMY_RING):
    """``T1 = [[1, x1], [0, y1]]`` and ``T2 = [[x2, 0], [y2, 1]]``."""
    x1, x2, y1, y2 = (ring.var(v) for v in ("x1", "x2", "y1", "y2"))
    one, zero = ring.one(), ring.zero()
    T1 = TwistMatrix(((one, x1), (zero, y1)), one)
    T2 = TwistMatrix(((x2, zero), (y2, one)), one)
    return T1, T2


def symbolic_T3(ring: PolynomialRing = MONODROMY_RING) -> TwistMatrix:
    """``(T2 T1)^-1 = (1/(x2*y1)) * [[x1*y2 + y1, -x1*x2], [-y2, x2]]``, checked by expansion."""
    x1, x2, y1, y2 = (ring.var(v) for v in ("x1", "x2", "y1", "y2"))
    T1, T2 = symbolic_pair(ring)
    T3 = TwistMatrix(((x1 * y2 + y1, -x1 * x2), (-y2, x2)), x2 * y1)
    if (T2 @ T1).numerator_det() != x2 * y1:
        raise AssertionError("det(T2 T1) != x2*y1")
    if not (T3 @ T2 @ T1).is_scalar_identity():
        raise AssertionError("T3 T2 T1 != I after clearing x2*y1")
    return T3


@dataclass
class FixedSpace:
    basis: list
    dimension: int

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "basis": [[str(c) for c in v] for v in self.basis]}


def fixed_space(M: TwistMatrix) -> FixedSpace:
    """Exact kernel of ``M - I`` over the rationals."""
    A = M.rational_entries()
    shifted = [[A[i][j] - (1 if i == j else 0) for j in range(2)] for i in range(2)]
    basis = nullspace(shifted, QQ)
    if len(basis) != 2 - rank(shifted, QQ):
        raise AssertionError("rank-nullity violated")
    for v in basis:
        if any(sum(shifted[i][j] * v[j] for j in range(2)) != 0 for i in range(2)):
            raise AssertionError("fixed vector check failed")
    return FixedSpace(basis, len(basis))


def candidate_fixed_check(T3: TwistMatrix, v) -> tuple:
    """Residual ``(den*T3^-1 - den*I) v`` for a clearing denominator ``den``.

    For the symbolic ``T3`` this is ``(T2 T1 - I) v``: a vector fixed by
    ``T3`` is fixed by its inverse.  Both components are returned expanded;
    nothing is decided here.
    """
    R = T3.ring
    v = [e if isinstance(e, Polynomial) else R.const(e) for e in v]
    (a, b), (c, d) = T3.entries
    # T3 = N/den with N = [[a,b],[c,d]]; T3^-1 = den * adj(N) / det(N)
    # and det(N) = den for the symbolic triple, so T3^-1 = adj(N)
    detN = a * d - b * c
    den = T3.denominator
    if detN == den:
        inv = ((d, -b), (-c, a))
        scale = R.one()
    else:
        # general case: clear by det(N)
        inv = tuple(tuple(e * den for e in r) for r in ((d, -b), (-c, a)))
        scale = detN
    return tuple(inv[i][0] * v[0] + inv[i][1] * v[1] - scale * v[i] for i in range(2))


def dehn_conjugator():
    """``P`` with ``P T2 P^-1 = T1`` for the concrete pair; ``P`` swaps the coordinates."""
    T1, T2, _ = concrete_triple()
    P = TwistMatrix.from_rows([[0, 1], [1, 0]])
    if (P @ T2 @ P) != T1:
        raise AssertionError("conjugator does not relate T2 to T1")
    return P


def trace_witness(M: TwistMatrix) -> Fraction:
    """Trace of an integral matrix; for determinant 1 a nonzero fixed vector needs trace 2."""
    A = M.rational_entries()
    return A[0][0] + A[1][1]
