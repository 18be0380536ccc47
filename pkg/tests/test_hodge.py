import random
from fractions import Fraction

import pytest

from periodjet.curve import HyperellipticCurve, default_precision, expand_curve
from periodjet.hodge import (
    H1OClass, HomMatrix, KSClass, UnreducibleExponent, duality_det,
    duality_matrix, hom_from_json, hom_to_json, is_symmetric_hom, reduce_O,
    reduce_Theta, rho)
from periodjet.laurent import (
    LaurentSeries, PrecisionExhausted, symplectic_pair)
from periodjet.linalg import in_row_span, row_echelon
from periodjet.witt import DiffOp, WittElement, phi

E5 = expand_curve(HyperellipticCurve([1, 0, 0, 0, 0, 1]),
                  default_precision(2))
E7 = expand_curve(HyperellipticCurve([1, -1, 0, 0, 0, 0, 0, 1]),
                  default_precision(3))


def random_tail(rng, lo, nterms=4):
    coeffs = {rng.randint(lo, -1): Fraction(rng.randint(-7, 7))
              for _ in range(nterms)}
    return LaurentSeries(coeffs)


def solve_square(a, b):
    """Solve a x = b exactly; a invertible."""
    n = len(a)
    aug = [list(a[i]) + [b[i]] for i in range(n)]
    rows, rank = row_echelon(aug)
    assert rank == n
    return [rows[i][n] for i in range(n)]


def test_reduce_O_gap_monomials_and_k0():
    for e in (E5, E7):
        g = e.curve.genus
        for idx, n in enumerate(e.gaps_O):
            cls = reduce_O(LaurentSeries.monomial(-n), e)
            want = [Fraction(0)] * g
            want[idx] = Fraction(1)
            assert cls == H1OClass(want, e.gaps_O)
        for _, k in e.k0_basis:
            assert reduce_O(k, e).is_zero()
        # anything in H+ dies too
        assert reduce_O(LaurentSeries({0: 5, 3: 1}), e).is_zero()


def test_reduce_O_linear():
    rng = random.Random(3)
    for e in (E5, E7):
        for _ in range(10):
            f = random_tail(rng, -12)
            h = random_tail(rng, -12)
            a, b = Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4))
            lhs = reduce_O(f.scaled(a) + h.scaled(b), e)
            assert lhs.coords == [a * x + b * y for x, y in
                                  zip(reduce_O(f, e).coords,
                                      reduce_O(h, e).coords)]


def test_reduce_O_against_duality_solve():
    # independent oracle: pairing with the g_i determines the class, since
    # <g_i, .> kills H+ and K0 and D is invertible
    rng = random.Random(9)
    for e in (E5, E7):
        d = duality_matrix(e)
        for _ in range(10):
            h = random_tail(rng, -14, nterms=5)
            rhs = [symplectic_pair(gi, h) for gi in e.h10_basis]
            assert reduce_O(h, e).coords == solve_square(d, rhs)


def test_reduce_O_span_oracle():
    # sweep result consistent with membership modulo span(k0 tails) + H+
    rng = random.Random(15)
    e = E7
    window = range(-14, 0)
    rows = [[k.coeff(x) for x in window] for _, k in e.k0_basis]
    for _ in range(10):
        h = random_tail(rng, -14, nterms=5)
        cls = reduce_O(h, e)
        resid = h - LaurentSeries(
            {-n: c for n, c in zip(e.gaps_O, cls.coords)})
        assert in_row_span(rows, [resid.coeff(x) for x in window])


def test_reduce_O_errors():
    with pytest.raises(PrecisionExhausted):
        reduce_O(LaurentSeries({-2: 1}, 0), E5)
    deep = LaurentSeries.monomial(-(E5.precision - 1))
    with pytest.raises(UnreducibleExponent):
        reduce_O(deep, E5)
    # pole N-2 is still within the window
    ok = reduce_O(LaurentSeries.monomial(-(E5.precision - 2)), E5)
    assert len(ok.coords) == 2


def test_reduce_Theta_gap_fields_and_theta():
    for e in (E5, E7):
        for idx, n in enumerate(e.gaps_Theta):
            cls = reduce_Theta(WittElement.monomial(-n), e)
            want = [Fraction(0)] * (3 * e.curve.genus - 3)
            want[idx] = Fraction(1)
            assert cls == KSClass(want, e.gaps_Theta)
        for _, w in e.theta_basis:
            assert reduce_Theta(w, e).is_zero()
        assert reduce_Theta(WittElement.monomial(0), e).is_zero()
        assert reduce_Theta(WittElement.monomial(4, 7), e).is_zero()


def test_reduce_Theta_span_oracle():
    rng = random.Random(21)
    e = E7
    window = range(-16, 0)
    rows = [[w.f.coeff(x) for x in window] for _, w in e.theta_basis]
    for _ in range(10):
        zeta = WittElement(random_tail(rng, -16, nterms=5))
        cls = reduce_Theta(zeta, e)
        resid = zeta.f - LaurentSeries(
            {-n: c for n, c in zip(e.gaps_Theta, cls.coords)})
        assert in_row_span(rows, [resid.coeff(x) for x in window])


def test_reduce_Theta_trunc_floor():
    # trunc >= 0 suffices for fields (remainder only needs ord >= 0)
    cls = reduce_Theta(WittElement(LaurentSeries({-1: 1}, 0)), E5)
    assert cls.coords[0] == 1
    with pytest.raises(PrecisionExhausted):
        reduce_Theta(WittElement(LaurentSeries({-2: 1}, -1)), E5)


def test_duality_matrix_fixture():
    d = duality_matrix(E5)
    assert d == [[0, 2], [2, 0]]
    assert duality_det(E5) == -4
    assert duality_det(E7) != 0
    # pairing formula: <g_i, z^-n> = -n * coeff(g_i, n)
    for e in (E5, E7):
        d = duality_matrix(e)
        for i, gi in enumerate(e.h10_basis):
            for j, n in enumerate(e.gaps_O):
                assert d[i][j] == -n * gi.coeff(n)
                assert d[i][j] == -symplectic_pair(
                    LaurentSeries.monomial(-n), gi)


def test_duality_class_invariance():
    # adding a K0 element to the gap monomial does not move the pairing
    for e in (E5, E7):
        _, k = e.k0_basis[2]
        for i, gi in enumerate(e.h10_basis):
            for j, n in enumerate(e.gaps_O):
                shifted = LaurentSeries.monomial(-n) + k
                assert symplectic_pair(gi, shifted) == duality_matrix(e)[i][j]


def test_rho_zero_and_theta_kernel():
    for e in (E5, E7):
        assert rho(DiffOp.zero(), e).is_zero()
        for _, w in e.theta_basis:
            assert rho(phi(w), e).is_zero()


def test_rho_symmetry_criterion():
    rng = random.Random(27)
    for e in (E5, E7):
        for _ in range(8):
            zeta = WittElement(random_tail(rng, -6, nterms=3) +
                               LaurentSeries.monomial(rng.randint(0, 4)))
            m = rho(phi(zeta), e)
            assert is_symmetric_hom(m, e)
    # negative control: an operator that is not symplectic
    skew = DiffOp({2: LaurentSeries.monomial(-2)})
    assert not is_symmetric_hom(rho(skew, E5), E5)


def test_hom_matrix_json():
    m = HomMatrix([[Fraction(1, 2), 0], [-3, 4]], [1, 3])
    obj = hom_to_json(m)
    assert obj == {"basis_gaps": [1, 3],
                   "entries": [["1/2", "0/1"], ["-3/1", "4/1"]]}
    assert hom_from_json(obj) == m
    with pytest.raises(ValueError):
        hom_from_json({"basis_gaps": [3, 1], "entries": [["1", "0"],
                                                         ["0", "1"]]})
    with pytest.raises(ValueError):
        hom_from_json({"basis_gaps": [1, 3]})
    with pytest.raises(ValueError):
        HomMatrix([[1, 2]], [1, 3])


def test_hom_matrix_arithmetic():
    a = HomMatrix([[1, 2], [3, 4]], [1, 3])
    b = HomMatrix([[0, 1], [1, 0]], [1, 3])
    assert (a + b).entries == [[1, 3], [4, 4]]
    assert (a - b).entries == [[1, 1], [2, 4]]
    assert a.scaled(Fraction(1, 2)).entries == [[Fraction(1, 2), 1],
                                                [Fraction(3, 2), 2]]
    with pytest.raises(ValueError):
        a + HomMatrix([[0]], [2])
