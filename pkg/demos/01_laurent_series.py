"""Tour of the exact Laurent series layer: arithmetic, truncation
bookkeeping, inversion, square roots, and the residue pairing.

Every coefficient is a Fraction; a series either knows all its
coefficients (exact) or carries an integer truncation order, and every
operation propagates the tightest honest truncation.
"""

from fractions import Fraction

from periodjet.laurent import (
    INF, LaurentSeries, derive, integrate, invert, sqrt_unit, residue,
    symplectic_pair)

# --- construction and printing ---------------------------------------------

f = LaurentSeries({-2: Fraction(1, 2), 0: 3, 5: -1})
print("an exact series:      ", f)
assert f.trunc is INF and f.order() == -2

g = f.truncate(4)
print("truncated at z^4:     ", g)
assert g.trunc == 4 and 5 not in g.coeffs

# --- arithmetic tracks what is knowable -------------------------------------

a = LaurentSeries({0: 1, 1: 1}, trunc=6)
b = LaurentSeries({-1: 2}, trunc=3)
print("(1 + z) * 2z^-1 =     ", a * b)
# the product is reliable only where both factors are: min(6 + (-1), 3 + 0)
assert (a * b).trunc == 3 + a.order()

# --- inversion and square root ----------------------------------------------

geo = invert(LaurentSeries({0: 1, 1: -1}, trunc=8))
print("1/(1 - z) =           ", geo)
assert all(geo.coeff(i) == 1 for i in range(8))

s = sqrt_unit(LaurentSeries({0: 1, 1: 1}, trunc=6))
print("sqrt(1 + z) =         ", s)
assert s * s == LaurentSeries({0: 1, 1: 1}, trunc=6)
assert s.coeff(1) == Fraction(1, 2) and s.coeff(2) == Fraction(-1, 8)

# --- calculus and the pairing ------------------------------------------------

h = LaurentSeries({-1: 3, 2: 1})
assert residue(h) == 3
assert integrate(derive(f)) == f - LaurentSeries.monomial(0, f.coeff(0))

# <f, g> = Res f dg is antisymmetric, the structure the whole package
# hangs on
u = LaurentSeries({-3: 1, 4: 2})
v = LaurentSeries({3: 5, -4: 1})
print("<u, v> =", symplectic_pair(u, v), "  <v, u> =", symplectic_pair(v, u))
assert symplectic_pair(u, v) + symplectic_pair(v, u) == 0
assert symplectic_pair(LaurentSeries.monomial(-3),
                       LaurentSeries.monomial(3)) == 3

print("ok")
