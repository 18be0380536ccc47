"""Expanding a hyperelliptic curve at its point at infinity.

For y^2 = p(x) with p monic squarefree of odd degree 2g+1, the single
point at infinity has local parameter z with x = z^-2 and y an odd-pole
unit times z^-(2g+1). From these expansions come the three bases the
rest of the package consumes: the pole-order function basis, the
vector-field basis, and the integrals of the holomorphic forms.
"""

from periodjet.curve import (
    HyperellipticCurve, default_precision, expand_curve)
from periodjet.laurent import symplectic_pair

curve = HyperellipticCurve([1, 0, 0, 0, 0, 1])      # y^2 = x^5 + 1
exp = expand_curve(curve, default_precision(curve.genus))
print("genus", curve.genus, " precision", exp.precision)

print("x =", exp.x_series)
print("y =", exp.y_series.truncate(8))
assert (exp.y_series * exp.y_series -
        curve.p_at(exp.x_series)).is_visible_zero()

# --- function basis and Weierstrass gaps -------------------------------------

print("realized function pole orders:", [m for m, _ in exp.k0_basis])
print("function gaps:", exp.gaps_O)
assert len(exp.gaps_O) == curve.genus

# functions pair to zero among themselves: the function space is isotropic
for _, e in exp.k0_basis:
    for _, e2 in exp.k0_basis:
        assert symplectic_pair(e, e2) == 0
print("the function space is isotropic for the residue pairing")

# --- field basis ---------------------------------------------------------------

print("realized field pole orders:", [m for m, _ in exp.theta_basis])
print("field gaps:", exp.gaps_Theta)
assert len(exp.gaps_Theta) == 3 * curve.genus - 3

# --- holomorphic integrals ------------------------------------------------------

for i, gi in enumerate(exp.h10_basis, start=1):
    print("g_%d = %s" % (i, gi.truncate(6)))
    assert gi.order() == 2 * (curve.genus - i) + 1
    # integrals pair to zero with every basis function
    assert all(symplectic_pair(e, gi) == 0 for _, e in exp.k0_basis)

# the same walk on a genus-3 curve, where an even field gap appears
curve7 = HyperellipticCurve([1, -1, 0, 0, 0, 0, 0, 1])  # y^2 = x^7 - x + 1
exp7 = expand_curve(curve7, default_precision(curve7.genus))
print("genus 3 gaps:", exp7.gaps_O, exp7.gaps_Theta)
assert exp7.gaps_Theta == [1, 2, 3, 5, 7, 9]

print("ok")
