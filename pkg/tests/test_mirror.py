from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lgmirror import PolynomialRing, QQ
from lgmirror.mirror import (
    Label,
    dsg_generators,
    eliminate_y2,
    fibre_report,
    hom_sheaves,
    hom_table_lg2,
    homogenized_numerator,
    lg2_surface,
    lg3_polynomial,
    lg3_renaming,
    mir_polynomial,
    mirror_equation,
    mirror_map,
    projective_degrees,
    rational_potential_sl3,
    surface_from_mir,
    swap_z_w,
    theta_eliminate,
    theta_equations,
)
from lgmirror.poly import substitute


class TestTheta:
    def test_symbolic_elimination(self):
        E = theta_eliminate(theta_equations())
        R = E.ring
        assert E.cleared == R.parse(
            "c*theta1*theta2*theta4 - c^2*theta1^2 - c*(a + b)*theta1 - a*b")
        assert str(E.alpha) == "c" and str(E.gamma) == "a + b"
        assert [str(p) for p in E.beta] == ["a*b", "c"]
        assert [str(g) for g in E.excluded.generators] == ["theta1"]

    def test_numeric_coefficients(self):
        E = theta_eliminate(theta_equations(1, 1, 1, 1))
        assert E.cleared == E.ring.parse("theta1*theta2*theta4 - theta1^2 - 2*theta1 - 1")

    @pytest.mark.parametrize("c,d", [(0, 1), (1, 0)])
    def test_zero_denominator(self, c, d):
        with pytest.raises(ValueError):
            theta_eliminate(theta_equations(c=c, d=d))

    def test_surface(self):
        S = surface_from_mir(1, 1, 1)
        assert S == S.ring.parse("u*y*x - v*(x^2 + x + 1)")

    def test_mir_default(self):
        assert mir_polynomial() == mir_polynomial().ring.parse(
            "theta1*theta2*theta4 - theta1^2 - theta1 - 1")

    @settings(max_examples=30, deadline=None)
    @given(a=st.integers(1, 9), b=st.integers(-9, 9), c=st.integers(1, 9), d=st.integers(1, 9))
    def test_cleared_identity(self, a, b, c, d):
        # c * (mir with alpha=c, gamma=a+b, beta=ab/c) equals the cleared elimination
        E = theta_eliminate(theta_equations(a, b, c, d))
        m = mir_polynomial(c, Fraction(a * b, c), a + b).change_ring(E.ring)
        assert E.cleared == m.scale(c)


class TestLG2Surface:
    def test_fibre(self):
        L = lg2_surface()
        x, y, u, v = L.ring.gens
        assert L.fibre_polynomial == -v * (x ** 2 + x + 1)
        assert [str(c.label) for c in L.components] == ["Y0", "Y1", "Y2"]
        assert [str(g) for g in L.double_points.groebner] == ["v", "x^2 + x + 1"]

    def test_branes(self):
        L = lg2_surface()
        assert len(L.branes) == 3
        assert L.objects == [Label("D", 0), Label("D", 1)]

    def test_root_symmetry(self):
        sym = lg2_surface().symmetry
        assert sym["x -> 1/x preserves x^2+x+1"]
        assert not sym["x -> -x preserves x^2+x+1"]


class TestMirrorEquation:
    def test_lg3_boxed(self):
        M = mirror_equation(2)
        assert lg3_renaming(M) == lg3_polynomial()
        R = M.ring
        assert M.defining == R.parse("(y1 + t1*w1)*(y1 + t2*z1) - y1*x1*x2*z1*w1")

    def test_literal_renaming_swaps_t(self):
        p = lg3_renaming(mirror_equation(2), "literal")
        R = p.ring
        assert p == substitute(lg3_polynomial().change_ring(R), {"t1": R.var("t2"), "t2": R.var("t1")})

    def test_numeric_t(self):
        M = mirror_equation(2, 1, 1)
        assert M.ring.names == ("x1", "x2", "y1", "z1", "w1")
        assert M.defining == M.ring.parse("(y1+z1)*(y1+w1) - x1*x2*y1*z1*w1")

    def test_rank_one_rejected(self):
        with pytest.raises(ValueError):
            mirror_equation(1)

    @pytest.mark.parametrize("n", [2, 3])
    def test_y2_elimination(self, n):
        assert eliminate_y2(n, 1, 2) == mirror_equation(n, 1, 2).defining

    def test_symbolic_elimination(self):
        assert eliminate_y2(2) == mirror_equation(2).defining

    @settings(max_examples=20, deadline=None)
    @given(n=st.integers(2, 6), t1=st.fractions(max_denominator=5), t2=st.fractions(max_denominator=5))
    def test_expanded_matches_factored(self, n, t1, t2):
        M = mirror_equation(n, t1, t2)
        assert M.defining == M.expanded
        assert M.potential_num - M.ring.var("x2") * M.potential_den == M.defining


class TestPencil:
    @pytest.mark.parametrize("n", range(2, 7))
    def test_homogeneous(self, n):
        M = mirror_equation(n)
        proj = [v for v in M.pencil_ring.names if v not in ("t1", "t2")]
        assert projective_degrees(M.pencil_f, proj) == {2 * n - 1}
        assert projective_degrees(M.pencil_g, proj) == {2 * n - 1}

    @pytest.mark.parametrize("n", range(2, 6))
    def test_matches_homogenized_numerator(self, n):
        M = mirror_equation(n, 1, 1)
        h = homogenized_numerator(n).change_ring(M.pencil_ring)
        assert h * M.pencil_ring.var("y2") == M.pencil_f

    def test_indeterminacy(self):
        M = mirror_equation(3)
        assert M.indeterminacy.generators == (M.pencil_f, M.pencil_g)


class TestFibres:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_infinity(self, n):
        r = fibre_report(mirror_equation(n, 1, 1), "infinity")
        assert len(r.components) == 2 * n - 1
        assert r.objects == [Label("F", f"z{k}") for k in range(1, n + 1)]
        assert r.product_check
        assert sorted(len(c) for c in r.symmetry_classes) == [1] + [2] * (n - 1)

    def test_zero(self):
        r = fibre_report(mirror_equation(3), "zero")
        assert [str(c.label) for c in r.components] == ["D_z", "D_w"]
        assert r.symmetry_classes == [[Label("D", "w"), Label("D", "z")]]
        assert r.objects == [Label("F", "z0")] and r.ignored == [Label("D", "y2")]
        assert r.product_check

    def test_unknown_fibre(self):
        with pytest.raises(ValueError):
            fibre_report(mirror_equation(2), "one")

    def test_swap_is_involution(self):
        M = mirror_equation(3)
        assert swap_z_w(swap_z_w(M.defining)) == M.defining
        assert swap_z_w(M.defining) == M.defining

    @pytest.mark.parametrize("n", range(2, 9))
    def test_generators_and_mirror_map(self, n):
        gens = dsg_generators(n)
        assert [str(g) for g in gens] == ["F(z0)"] + [f"F(z{k})" for k in range(1, n + 1)]
        mm = mirror_map(n)
        assert mm.is_bijection() and mm.middle_homology_rank == n
        assert [str(a) for a, _ in mm.pairs] == [f"L{k}" for k in range(1, n + 2)]
        assert mm.pairs[-1][1] == Label("F", "z0")


class TestHom:
    def test_sheaves(self):
        h = hom_sheaves(4, 1, 2)
        assert h.text() == "(z1*z2)S + coker[z2 z1][1] + coker[z2 z1][3]"
        assert all(d.verified for d in h.summands.values())

    def test_from_f_z0(self):
        assert hom_sheaves(3, 0, 2).is_zero
        with pytest.raises(ValueError):
            hom_sheaves(3, 0, 0)
        with pytest.raises(IndexError):
            hom_sheaves(3, 1, 7)

    def test_lg2_reference_table(self):
        T = hom_table_lg2()
        L0, L1 = Label("Lsh", 0), Label("Lsh", 1)
        assert T[(L0, L0)].text() == "Z"
        assert T[(L0, L1)].text() == "Z[-1] + Z"
        assert T[(L1, L0)].is_zero
        assert all(e.provenance == "reference" for e in T.values())


class TestSL3:
    def test_numeric(self):
        P = rational_potential_sl3(2, -1, -1)
        assert P.numerator == P.numerator.ring.parse("2*x1*y1 - x2*y2 - x3*y3")
        assert P.denominator.is_homogeneous() and P.denominator.degree() == 2

    def test_trace_and_zero(self):
        with pytest.raises(ValueError):
            rational_potential_sl3(1, 1, 1)
        with pytest.raises(ValueError):
            rational_potential_sl3(0, 0, 0)

    def test_symbolic(self):
        P = rational_potential_sl3()
        assert "lam1" in P.numerator.ring.names
