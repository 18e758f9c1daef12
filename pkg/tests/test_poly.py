import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import polynomials, random_poly
from lgmirror import (
    GF,
    QQ,
    PolynomialRing,
    PolynomialSyntaxError,
    UnknownVariableError,
    dehomogenize,
    evaluate_point,
    field_from_spec,
    format_poly,
    homogenize,
    parse_poly,
    partial_derivative,
    substitute,
)
from lgmirror.mirror import lg3_polynomial

QR = PolynomialRing("x y z", QQ)
PR = PolynomialRing("x y z", GF(101))


class TestParsePrint:
    def test_sings3_text(self):
        R = PolynomialRing("x1 x2 y1 z w", QQ)
        p = R.parse("(y1+z)*(y1+w) - x1*x2*y1*z*w")
        assert p == lg3_polynomial(symbolic_t=False).subs(
            {"x3": R.var("w"), "x4": R.var("z")}, target=R)

    def test_grevlex_order(self):
        assert format_poly(QR.parse("z + x^2 + y*z + 1 + x*y")) == "x^2 + x*y + y*z + z + 1"

    def test_rational_coefficients(self):
        assert str(QR.parse("3/4*x - 1/2")) == "3/4*x - 1/2"
        assert str(QR.parse("-x")) == "-x"

    def test_zero(self):
        assert str(QR.parse("x - x")) == "0"
        assert QR.parse("0").degree() == -1

    def test_powers_of_groups(self):
        assert QR.parse("(x + y)^2") == QR.parse("x^2 + 2*x*y + y^2")

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariableError):
            QR.parse("x + q")

    @pytest.mark.parametrize("bad", ["x +", "x**2", "(x", "x^", "2x y", "x^-1", ""])
    def test_syntax_errors(self, bad):
        with pytest.raises((PolynomialSyntaxError, UnknownVariableError)):
            parse_poly(bad, QR)

    def test_error_position(self):
        with pytest.raises(PolynomialSyntaxError) as info:
            QR.parse("x + * y")
        assert info.value.position == 4

    def test_prime_field_symmetric_print(self):
        p = PR.parse("100*x + 50*x*y")
        assert str(p) == "50*x*y - x"
        assert PR.parse(str(p)) == p

    def test_round_trip_thousand(self):
        rng = random.Random(2024)
        for _ in range(1000):
            ring = QR if rng.random() < 0.5 else PR
            p = random_poly(ring, rng, terms=rng.randint(0, 6))
            if ring is QR and rng.random() < 0.3:
                p = p.scale(Fraction(1, rng.randint(2, 7)))
            assert ring.parse(format_poly(p)) == p


class TestFields:
    def test_spec(self):
        assert field_from_spec("q") == QQ
        assert field_from_spec("zp:101") == GF(101)
        with pytest.raises(ValueError):
            field_from_spec("zp:100")
        with pytest.raises(ValueError):
            field_from_spec("r")

    def test_gf_inverse(self):
        F = GF(101)
        assert all(F.mul(a, F.inv(a)) == 1 for a in range(1, 101))


class TestCalculus:
    def test_lg3_partials(self):
        p = lg3_polynomial()
        R = p.ring
        assert p.diff("x1") == R.parse("-x2*x3*x4*y1")
        assert p.diff("y1") == R.parse("-x1*x2*x3*x4 + 2*y1 + t1*x4 + t2*x3")

    def test_power_rule(self):
        assert partial_derivative(QR.parse("y^2"), "y") == QR.parse("2*y")

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariableError):
            partial_derivative(QR.parse("x"), "q")

    def test_lift_kills_first_relation(self):
        R = PolynomialRing("x y beta0 beta1", QQ)
        T = PolynomialRing("u z", QQ)
        u, z = T.gens
        rel = R.parse("beta0*y - beta1*x")
        img = substitute(rel, {"x": u, "y": z * u, "beta0": u ** 2, "beta1": z * u ** 2}, target=T)
        assert img.is_zero

    def test_identity_substitution(self):
        p = QR.parse("x^2*y - 3*z + 1")
        assert substitute(p, {}) == p
        assert substitute(p, {"x": QR.var("x")}) == p

    def test_lg3_rename(self):
        p = lg3_polynomial()
        R = PolynomialRing("x1 x2 y1 z w", QQ)
        q = substitute(p, {"t1": 1, "t2": 1, "x3": R.var("w"), "x4": R.var("z")}, target=R)
        assert q == R.parse("(y1+z)*(y1+w) - x1*x2*y1*z*w")

    def test_homogenize(self):
        R = PolynomialRing("y1 z1 z2", QQ)
        h = homogenize(R.parse("y1 + z1*z2"), "y2")
        assert h == h.ring.parse("y1*y2 + z1*z2")
        assert dehomogenize(h, "y2").change_ring(R) == R.parse("y1 + z1*z2")

    def test_homogenize_rejects_used_variable(self):
        with pytest.raises(ValueError):
            homogenize(QR.parse("x + y^2"), "x")

    def test_evaluate_missing(self):
        with pytest.raises(ValueError):
            evaluate_point(QR.parse("x*y"), {"x": 1})

    def test_divide_exact(self):
        a, b = QR.parse("x^2 - y^2"), QR.parse("x - y")
        assert a.divide_exact(b) == QR.parse("x + y")
        with pytest.raises(ValueError):
            QR.parse("x^2 + 1").divide_exact(b)


@pytest.mark.parametrize("ring", [QR, PR], ids=["QQ", "GF101"])
class TestRingAxioms:
    @settings(max_examples=60, deadline=None)
    @given(data=st.data())
    def test_axioms(self, ring, data):
        a, b, c = (data.draw(polynomials(ring)) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == ring.zero()
        assert a * ring.one() == a

    @settings(max_examples=40, deadline=None)
    @given(data=st.data())
    def test_degree_of_product(self, ring, data):
        a, b = data.draw(polynomials(ring)), data.draw(polynomials(ring))
        if a and b:
            assert (a * b).degree() == a.degree() + b.degree()

    @settings(max_examples=40, deadline=None)
    @given(data=st.data())
    def test_partials_commute_and_leibniz(self, ring, data):
        a, b = data.draw(polynomials(ring)), data.draw(polynomials(ring))
        assert a.diff("x").diff("y") == a.diff("y").diff("x")
        assert (a * b).diff("z") == a.diff("z") * b + a * b.diff("z")

    @settings(max_examples=40, deadline=None)
    @given(data=st.data())
    def test_substitute_then_evaluate(self, ring, data):
        a, b = data.draw(polynomials(ring)), data.draw(polynomials(ring, max_exp=2))
        pt = {n: data.draw(st.integers(-5, 5)) for n in ring.names}
        F = ring.field
        lhs = evaluate_point(substitute(a, {"x": b}), pt)
        rhs = evaluate_point(a, {**pt, "x": evaluate_point(b, pt)})
        assert lhs == rhs
        # substitution is a ring homomorphism
        assert substitute(a * b, {"y": b}) == substitute(a, {"y": b}) * substitute(b, {"y": b})
        assert F.convert(0) == F.zero

    @settings(max_examples=40, deadline=None)
    @given(data=st.data())
    def test_homogenize_round_trip(self, ring, data):
        a = data.draw(polynomials(ring))
        if a.is_zero:
            return
        h = homogenize(a, "h")
        assert h.is_homogeneous() and h.degree() == a.degree()
        assert dehomogenize(h, "h") == a.change_ring(h.ring)

    @settings(max_examples=60, deadline=None)
    @given(data=st.data())
    def test_print_parse(self, ring, data):
        a = data.draw(polynomials(ring))
        assert ring.parse(format_poly(a)) == a
