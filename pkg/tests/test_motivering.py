import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from siegeleis.motivering import (
    ONE,
    AmbiguousSplitError,
    MotiveExpr,
    NotExpandableError,
    Symbol,
    UnsupportedProductError,
    VerificationReport,
    cusp_dim,
)

one = MotiveExpr.unit
L = MotiveExpr.lefschetz
S = MotiveExpr.cusp_motive
Ec = MotiveExpr.euler

CUSP_TABLE = {
    2: -1, 4: 0, 6: 0, 8: 0, 10: 0, 12: 1, 14: 0,
    16: 1, 18: 1, 20: 1, 22: 1, 24: 2, 26: 1,
}


class TestCuspDim:
    @pytest.mark.parametrize("k,expected", sorted(CUSP_TABLE.items()))
    def test_table(self, k, expected):
        assert cusp_dim(k) == expected

    def test_odd_and_small(self):
        assert cusp_dim(3) == 0
        assert cusp_dim(0) == 0
        assert cusp_dim(-4) == 0

    def test_large(self):
        assert cusp_dim(36) == 3
        assert cusp_dim(38) == 2  # 38 = 12*3 + 2


class TestSymbol:
    def test_validation(self):
        with pytest.raises(ValueError):
            Symbol("S", k=3)
        with pytest.raises(ValueError):
            Symbol("S", k=0)
        with pytest.raises(ValueError):
            Symbol("Ec", g=2, lam=(0, 1))
        with pytest.raises(ValueError):
            Symbol("nope")


class TestArith:
    def test_cancellation(self):
        x = Ec(2, (2, 0)) + L(3) * 5
        assert (x - x).is_zero()

    def test_l_multiplication(self):
        k = 7
        assert (one() - L(k + 1)) * L(1) == L(1) - L(k + 2)

    def test_distributivity(self):
        x = Ec(2, (2, 0)) * (one() - L(3))
        assert len(x.items()) == 2
        assert x.render() == "Ec(2;2,0) - Ec(2;2,0)*L^3"

    def test_symbol_product_rejected(self):
        with pytest.raises(UnsupportedProductError):
            S(12) * S(16)
        with pytest.raises(UnsupportedProductError):
            Ec(2, (2, 0)) * S(12)


class TestNormalize:
    def test_ec1_zero_weight(self):
        assert Ec(1, (0,)).normalize() == L(1)

    def test_ec1_odd_vanishes(self):
        assert Ec(1, (3,)).normalize().is_zero()

    def test_ec1_ten(self):
        assert Ec(1, (10,)).normalize() == -S(12) - one()

    def test_ec0_is_unit(self):
        assert Ec(0, ()).normalize() == one()

    def test_s2_rewrite(self):
        assert S(2).normalize() == -L(1) - one()

    def test_s_with_no_cusp_forms_vanishes(self):
        for k in (4, 6, 8, 10, 14):
            assert S(k).normalize().is_zero()

    def test_g2_symbol_left_alone(self):
        x = Ec(2, (4, 2))
        assert x.normalize() == x

    @pytest.mark.parametrize("k", range(0, 61, 2))
    def test_eichler_shimura_range(self, k):
        got = Ec(1, (k,)).normalize()
        expected = (-S(k + 2) - one()).normalize()
        assert got == expected
        has_s = any(sym.kind == "S" for (sym, _), _ in got.items())
        # S[2] itself is rewritten away by the -L-1 convention
        assert has_s == (k + 2 > 2 and cusp_dim(k + 2) != 0)

    def test_idempotent(self):
        exprs = [
            Ec(1, (0,)) * (one() - L(5)) + S(2) * L(2) - Ec(2, (3, 1)),
            S(12) * (one() - L(7)) + Ec(1, (12,)),
        ]
        for x in exprs:
            n = x.normalize()
            assert n.normalize() == n

    def test_restricted_mode_keeps_genus_one(self):
        x = Ec(1, (2,)) + Ec(1, (3,)) + Ec(0, ())
        n = x.normalize(expand_genus_one=False)
        assert n == Ec(1, (2,)) + one()


class TestDual:
    def test_unit(self):
        assert one().dual() == one()

    def test_monomial(self):
        k = 5
        assert (one() - L(k + 1)).dual() == one() - L(-(k + 1))

    def test_cusp_motive(self):
        assert S(12).dual() == S(12) * L(-11)

    def test_involution(self):
        x = one() * 3 - L(4) + S(12) * L(2) - S(16) * 2
        assert x.dual().dual() == x

    def test_not_expandable(self):
        with pytest.raises(NotExpandableError):
            Ec(2, (2, 0)).dual()


class TestWeightSplit:
    def test_straddle(self):
        k = 4
        low, high = (one() - L(k + 1)).motivic_weight_split(k + 1)
        assert low == one()
        assert high == -L(k + 1)

    def test_with_cusp_motive(self):
        x = S(14) * (one() - L(7))
        low, high = x.motivic_weight_split(16)
        assert low == S(14)
        assert high == -S(14) * L(7)

    def test_threshold_hit(self):
        with pytest.raises(AmbiguousSplitError):
            L(3).motivic_weight_split(6)

    def test_additive(self):
        x, y = one() - L(5), L(1) * 2
        lx, hx = x.motivic_weight_split(4)
        ly, hy = y.motivic_weight_split(4)
        lxy, hxy = (x + y).motivic_weight_split(4)
        assert (lxy, hxy) == (lx + ly, hx + hy)

    def test_symbolic_rejected(self):
        with pytest.raises(NotExpandableError):
            Ec(2, (2, 0)).motivic_weight_split(1)


class TestRender:
    def test_zero(self):
        assert MotiveExpr.zero().render() == "0"

    def test_polynomial(self):
        x = one() + L(1) - L(2) - L(3)
        assert x.render() == "1 + L - L^2 - L^3"

    def test_cusp_term(self):
        assert (-S(12) * L(2)).render() == "-S[12]*L^2"

    def test_coefficients(self):
        assert (L(14) * -2 + L(1)).render() == "L - 2*L^14"

    def test_json_roundtrip(self):
        exprs = [
            MotiveExpr.zero(),
            one() + L(1) - L(2) - L(3),
            S(12) * L(-4) - Ec(2, (2, 0)) * 3,
        ]
        for x in exprs:
            blob = x.render("json")
            assert MotiveExpr.from_obj(json.loads(blob)) == x

    def test_json_deterministic(self):
        x = S(12) * L(2) + one() - L(7)
        assert x.render("json") == x.render("json")


simple_exprs = st.lists(
    st.tuples(st.integers(-3, 3), st.integers(-5, 5)), max_size=6
).map(
    lambda pairs: sum(
        (MotiveExpr.lefschetz(e, c) for c, e in pairs), MotiveExpr.zero()
    )
)


class TestRingProperties:
    @given(simple_exprs, simple_exprs)
    def test_commutative_addition(self, x, y):
        assert x + y == y + x

    @given(simple_exprs)
    def test_negation(self, x):
        assert (x + (-x)).is_zero()

    @given(simple_exprs, simple_exprs)
    def test_dual_additive(self, x, y):
        assert (x + y).dual() == x.dual() + y.dual()


class TestVerificationReport:
    def test_pass_fail(self):
        r = VerificationReport()
        r.record("good", True, "fine")
        assert r.passed
        r.record("bad", False, "broken", counterexample="x=1")
        assert not r.passed
        assert len(r.failures()) == 1
        text = r.render()
        assert "PASS good" in text and "FAIL bad" in text
        assert "x=1" in text

    def test_json(self):
        r = VerificationReport()
        r.record("only", True)
        data = json.loads(r.render("json"))
        assert data == [
            {"name": "only", "status": "pass", "detail": "",
             "counterexample": None}
        ]
