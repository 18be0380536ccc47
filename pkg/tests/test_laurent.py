import math
import random
from fractions import Fraction

import pytest

from periodjet.laurent import (
    INF, LaurentSeries, NonUnitLeadingCoefficient, NonzeroResidue, OddOrder,
    PrecisionExhausted, ZeroSeries, arith, derive, from_json, integrate,
    invert, rational_from_str, rational_to_str, residue, sqrt_unit,
    symplectic_pair, to_json)


def random_series(rng, lo=-6, hi=6, trunc=None, nterms=5):
    coeffs = {}
    for _ in range(nterms):
        e = rng.randint(lo, hi - 1)
        coeffs[e] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    t = hi if trunc is None else trunc
    return LaurentSeries(coeffs, t)


def test_constructor_normalizes():
    f = LaurentSeries({2: Fraction(0), -1: Fraction(3), 7: Fraction(1)}, 5)
    assert f.coeffs == {-1: Fraction(3)}  # zero dropped, exp >= trunc dropped
    assert f.trunc == 5
    assert LaurentSeries({}, 3).is_visible_zero()
    with pytest.raises(ValueError):
        LaurentSeries({0: 1}, trunc=2.5)


def test_coeff_access_and_precision():
    f = LaurentSeries({-2: 1, 3: Fraction(1, 2)}, 4)
    assert f.coeff(-2) == 1
    assert f.coeff(0) == 0
    assert f.coeff(3) == Fraction(1, 2)
    with pytest.raises(PrecisionExhausted):
        f.coeff(4)
    g = LaurentSeries.monomial(5)
    assert g.coeff(10 ** 6) == 0  # exact series knows every coefficient


def test_add_sub_trunc_rule():
    a = LaurentSeries({-1: 1, 2: 3}, 5)
    b = LaurentSeries({2: -3, 4: 1}, 7)
    s = arith(a, b, "add")
    assert s.trunc == 5
    assert s.coeffs == {-1: Fraction(1), 4: Fraction(1)}
    d = arith(a, a, "sub")
    assert d.is_visible_zero() and d.trunc == 5
    exact = LaurentSeries.monomial(0) + LaurentSeries.monomial(3)
    assert exact.trunc is INF


def test_mul_trunc_rule():
    # trunc(ab) = min(ta + ord b, tb + ord a)
    a = LaurentSeries({-2: 1}, 3)
    b = LaurentSeries({1: 1, 2: 5}, 6)
    p = arith(a, b, "mul")
    assert p.trunc == min(3 + 1, 6 - 2)
    assert p.coeffs == {-1: Fraction(1), 0: Fraction(5)}
    # visible zero: its order counts as its truncation
    z = LaurentSeries.zero(2)
    q = z * b
    assert q.trunc == min(2 + 1, 6 + 2) and q.is_visible_zero()
    # exact * exact stays exact
    e = LaurentSeries({0: 1, 1: -1}) * LaurentSeries({0: 1, 1: 1})
    assert e == LaurentSeries({0: 1, 2: -1})


def test_scale_keeps_trunc():
    a = LaurentSeries({-1: 2, 3: 4}, 6)
    s = arith(a, Fraction(1, 2), "scale")
    assert s.trunc == 6 and s.coeffs == {-1: Fraction(1), 3: Fraction(2)}
    assert arith(a, 0, "scale").is_visible_zero()
    assert arith(a, 0, "scale").trunc == 6


def test_arith_rejects_unknown_kind():
    a = LaurentSeries.one()
    with pytest.raises(ValueError):
        arith(a, a, "div")


def test_derive_integrate_roundtrip():
    rng = random.Random(101)
    for _ in range(20):
        f = random_series(rng)
        g = LaurentSeries({e: c for e, c in f.coeffs.items() if e != 0},
                          f.trunc)  # kill constant so integrate(derive(g)) = g
        assert integrate(derive(g)) == g
    # derivative loses one order of knowledge
    f = LaurentSeries({0: 1, 4: 2}, 5)
    assert derive(f).trunc == 4
    assert integrate(derive(f)) == LaurentSeries({4: 2}, 5)


def test_integrate_requires_zero_residue():
    with pytest.raises(NonzeroResidue):
        integrate(LaurentSeries({-1: 1}, 3))
    # residue hidden beyond the truncation: refuse rather than guess
    with pytest.raises(PrecisionExhausted):
        integrate(LaurentSeries({-3: 1}, -1))
    ok = integrate(LaurentSeries({-3: 1}, 0))
    assert ok == LaurentSeries({-2: Fraction(-1, 2)}, 1)


def test_invert_geometric_series():
    f = LaurentSeries({0: 1, 1: -1}, 8)
    g = invert(f)
    assert g == LaurentSeries({e: 1 for e in range(8)}, 8)


def test_invert_is_right_inverse():
    rng = random.Random(7)
    for _ in range(25):
        f = random_series(rng, lo=-4, hi=5, nterms=4)
        o = f.order()
        if o is None:
            continue
        if f.coeffs[o] == 0:
            continue
        g = invert(f)
        assert g.trunc == f.trunc - 2 * o
        prod = f * g
        one = LaurentSeries.one().truncate(prod.trunc)
        assert prod == one


def test_invert_errors():
    with pytest.raises(ZeroSeries):
        invert(LaurentSeries.zero(5))
    with pytest.raises(ZeroSeries):
        invert(LaurentSeries.zero())
    # exact monomial inverts exactly
    assert invert(LaurentSeries.monomial(-3, 2)) == \
        LaurentSeries.monomial(3, Fraction(1, 2))
    with pytest.raises(ValueError):
        invert(LaurentSeries({0: 1, 1: 1}))  # exact, needs explicit precision


def test_sqrt_unit_squares_back():
    rng = random.Random(13)
    for _ in range(25):
        w = random_series(rng, lo=0, hi=7, nterms=4)
        f = (w + LaurentSeries.one()).shift(2 * rng.randint(-2, 2))
        f = LaurentSeries({e: c for e, c in f.coeffs.items()
                           if e >= f.order()}, f.trunc)
        o = f.order()
        if f.coeffs[o] != 1:
            continue
        r = sqrt_unit(f)
        assert r.coeff(o // 2) == 1
        assert r.trunc == f.trunc - o + o // 2
        sq = r * r
        assert sq == f.truncate(sq.trunc)


def test_sqrt_unit_known_expansion():
    # sqrt(1+z) = 1 + z/2 - z^2/8 + z^3/16 - 5 z^4/128 + ...
    f = LaurentSeries({0: 1, 1: 1}, 5)
    r = sqrt_unit(f)
    assert r == LaurentSeries({0: 1, 1: Fraction(1, 2), 2: Fraction(-1, 8),
                               3: Fraction(1, 16), 4: Fraction(-5, 128)}, 5)


def test_sqrt_unit_errors():
    with pytest.raises(ZeroSeries):
        sqrt_unit(LaurentSeries.zero(4))
    with pytest.raises(OddOrder):
        sqrt_unit(LaurentSeries({1: 1, 2: 1}, 6))
    with pytest.raises(NonUnitLeadingCoefficient):
        sqrt_unit(LaurentSeries({0: 4, 1: 1}, 6))
    assert sqrt_unit(LaurentSeries.monomial(-4)) == LaurentSeries.monomial(-2)
    with pytest.raises(ValueError):
        sqrt_unit(LaurentSeries({0: 1, 2: 1}))  # exact, needs a precision


def test_residue():
    assert residue(LaurentSeries({-1: Fraction(5, 3), 2: 1}, 3)) == \
        Fraction(5, 3)
    assert residue(LaurentSeries({2: 1}, 0)) == 0
    with pytest.raises(PrecisionExhausted):
        residue(LaurentSeries({-2: 1}, -1))


def test_symplectic_pair_monomials():
    # <z^a, z^b> = b * Res z^{a+b-1} = b if a = -b, else 0
    for a in range(-5, 6):
        for b in range(-5, 6):
            f = LaurentSeries.monomial(a)
            g = LaurentSeries.monomial(b)
            want = Fraction(b) if a + b == 0 else Fraction(0)
            assert symplectic_pair(f, g) == want


def test_symplectic_pair_antisymmetric():
    rng = random.Random(31)
    for _ in range(30):
        f = random_series(rng, lo=-5, hi=6)
        g = random_series(rng, lo=-5, hi=6)
        assert symplectic_pair(f, g) == -symplectic_pair(g, f)


def test_rational_strings():
    assert rational_from_str("3/4") == Fraction(3, 4)
    assert rational_from_str("-7") == Fraction(-7)
    assert rational_to_str(Fraction(-6, 4)) == "-3/2"
    assert rational_to_str(Fraction(5)) == "5/1"
    with pytest.raises(ValueError):
        rational_from_str("1/0")
    with pytest.raises(ValueError):
        rational_from_str("x")
    with pytest.raises(ValueError):
        rational_from_str(3)


def test_json_roundtrip():
    rng = random.Random(47)
    for _ in range(10):
        f = random_series(rng)
        assert from_json(to_json(f)) == f
    obj = to_json(LaurentSeries({-2: Fraction(-3, 2)}, 4))
    assert obj == {"trunc": 4, "coeffs": {"-2": "-3/2"}}


def test_json_rejects_bad_input():
    with pytest.raises(ValueError):
        to_json(LaurentSeries.one())  # exact series has no finite trunc
    with pytest.raises(ValueError):
        from_json([1, 2])
    with pytest.raises(ValueError):
        from_json({"trunc": "4", "coeffs": {}})
    with pytest.raises(ValueError):
        from_json({"trunc": 4, "coeffs": {"x": "1/1"}})
    with pytest.raises(ValueError):
        from_json({"trunc": 4, "coeffs": {"5": "1/1"}})  # exp >= trunc
    with pytest.raises(ValueError):
        from_json({"trunc": 4, "coeffs": {}, "tail": 0})


def test_str_forms():
    assert str(LaurentSeries.zero(3)) == "0 + O(z^3)"
    assert str(LaurentSeries({-1: -1, 0: Fraction(1, 2), 2: 3})) == \
        "-z^-1 + 1/2 + 3*z^2"
    assert str(LaurentSeries({1: 1}, 9)) == "z + O(z^9)"
