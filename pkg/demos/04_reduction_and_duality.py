"""Reduction to canonical representatives and the duality pairing.

Any series is reduced against the function basis until only gap
exponents remain: the resulting coordinate vector is its class in the
g-dimensional quotient. Pairing the holomorphic integrals against the
gap monomials gives an invertible g x g matrix, the exact form of the
duality between the two quotients the package works in.
"""

from fractions import Fraction

from periodjet.curve import (
    HyperellipticCurve, default_precision, expand_curve)
from periodjet.hodge import (
    duality_det, duality_matrix, reduce_O, reduce_Theta)
from periodjet.laurent import LaurentSeries, symplectic_pair

exp = expand_curve(HyperellipticCurve([1, 0, 0, 0, 0, 1]),
                   default_precision(2))

# --- reducing a series ---------------------------------------------------------

h = LaurentSeries({-5: 4, -3: 7, -1: 2, 6: 1})
cls = reduce_O(h, exp)
print("class of 4z^-5 + 7z^-3 + 2z^-1 + z^6 on gaps", cls.gaps,
      "is", cls.coords)
# z^-5 is a realized pole (the y function), so it reduces away; the gap
# coefficients survive up to the corrections the subtraction introduces
assert cls.gaps == [1, 3]
assert cls.coords[1] == 7        # nothing with pole 3 exists to subtract

# reducing any basis function gives zero, and positive parts never matter
for _, e in exp.k0_basis:
    assert reduce_O(e, exp).is_zero()
assert reduce_O(LaurentSeries({2: 9, 11: -4}), exp).is_zero()

# the same machinery on vector fields, against the field basis
zeta = exp.theta_basis[0][1]
assert reduce_Theta(zeta, exp).is_zero()
print("every basis element reduces to the zero class")

# --- duality --------------------------------------------------------------------

d = duality_matrix(exp)
print("duality matrix:", d, " det =", duality_det(exp))
assert duality_det(exp) == -4

# entry (i, j) is the pairing of the integral g_i against the j-th gap
# monomial z^-n_j
for i, gi in enumerate(exp.h10_basis):
    for j, n in enumerate(exp.gaps_O):
        assert d[i][j] == symplectic_pair(gi, LaurentSeries.monomial(-n))

# duality converts classes to linear functionals: <g_i, h> can be read
# off from the class coordinates alone, whatever representative h had
vec = [sum(d[i][j] * cls.coords[j] for j in range(len(cls.coords)))
       for i in range(2)]
full = [symplectic_pair(gi, h) for gi in exp.h10_basis]
print("pairings via class coordinates:", vec, " directly:", full)
assert vec == full

print("ok")
