"""The differentials of the period map, to fourth order.

Each differential is a g x g matrix over the gap basis. The package
computes every order by two independent prescriptions (composing the
induced operators vs. iterating Lie derivatives on the holomorphic
forms) and they agree exactly, coefficient by coefficient. This script
walks the whole ladder on the genus-2 curve y^2 = x^5 + 1 and shows the
symmetry phenomenon: first differentials are duality-symmetric, raw
second differentials are not, and the failure is precisely a first
differential of a bracket, which the symmetrized form quotients away.
"""

import random
from fractions import Fraction

from periodjet.curve import (
    HyperellipticCurve, default_precision, expand_curve)
from periodjet.hodge import duality_matrix, is_symmetric_hom
from periodjet.laurent import LaurentSeries
from periodjet.period import (
    canonical_second_rep, ell2, ell2_via_lie, ell1_n, ell1_n_contraction,
    ell_k_n, fundamental_form_II, in_nu1_image, nu1, nu2)
from periodjet.witt import WittElement, witt_bracket

exp = expand_curve(HyperellipticCurve([1, 0, 0, 0, 0, 1]),
                   default_precision(2))
z1 = WittElement.monomial(-1)
z3 = WittElement.monomial(-3)

# --- first order ---------------------------------------------------------------

m = nu1(z1, exp)
print("nu1(z^-1 d/dz) =", m.entries)
assert is_symmetric_hom(m, exp)
# fields with no pole deform nothing
assert nu1(WittElement.monomial(3), exp).is_zero()
assert nu1(exp.theta_basis[0][1], exp).is_zero()

# --- second order: two routes, one answer ---------------------------------------

a = ell2(z1, z1, exp)
b = ell2_via_lie(z1, z1, exp)
print("ell2(z^-1, z^-1) =", a.entries)
assert a == b

# duality symmetry holds for nu1 but not for the raw ell2 ...
d = duality_matrix(exp)
prod = [[sum(d[i][k] * a.entries[k][j] for k in range(2))
         for j in range(2)] for i in range(2)]
print("D * ell2 =", prod, " (antisymmetric, not symmetric)")
assert not is_symmetric_hom(a, exp)

# ... and the defect is exactly a bracket: swapping the arguments
# changes ell2 by nu1 of the bracket, so the symmetrization is clean
rng = random.Random(5)
for _ in range(5):
    f1 = WittElement(LaurentSeries(
        {rng.randint(-6, 6): Fraction(rng.choice([-2, -1, 1, 2]))}))
    f2 = WittElement(LaurentSeries(
        {rng.randint(-6, 6): Fraction(rng.choice([-2, -1, 1, 2]))}))
    assert ell2(f1, f2, exp) - ell2(f2, f1, exp) == \
        nu1(witt_bracket(f1, f2), exp)
print("ell2(f1,f2) - ell2(f2,f1) = nu1([f1,f2]) on five random pairs")

# the symmetrized second fundamental form differs from ell2 by something
# in the image of nu1, so it is well defined modulo first-order data
ii, tag = fundamental_form_II(z1, z3, exp)
assert tag == "mod image nu1"
assert in_nu1_image(ii - ell2(z1, z3, exp), exp)

# --- second-order tangent representatives ----------------------------------------

rep = canonical_second_rep(z1, z3)
print("canonical representative: upsilon =", rep.upsilon,
      "with one symmetrized pair")
assert nu2(rep, exp) == ell2(z1, z3, exp)

# --- the full ladder -------------------------------------------------------------

assert ell1_n([z1], exp) == nu1(z1, exp)
assert ell1_n([z1, z3], exp) == ell2(z1, z3, exp)
triple = [z1, z3, WittElement.monomial(-5)]
assert ell1_n(triple, exp) == ell1_n_contraction(triple, exp)
print("order 3, both routes:", ell1_n(triple, exp).entries)

# mixed orders: sum over ways to split three fields into two blocks
s = ell_k_n(triple, 2, exp)
print("three fields in two blocks:", len(s.terms), "terms, flagged",
      repr(s.interpretation))
assert len(s.terms) == 3 and s.interpretation == "set-partition"

print("ok")
