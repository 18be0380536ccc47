"""Vector fields on the punctured disk and the operators they induce.

A field zeta = f d/dz acts on series as g |-> f g'; brackets of fields
match commutators of operators, and every induced operator is
antisymmetric for the residue pairing, which a finite witness verifies.
"""

import random
from fractions import Fraction

from periodjet.laurent import LaurentSeries
from periodjet.witt import (
    DiffOp, WittElement, diffop_apply, diffop_compose, phi, sp_witness,
    witt_bracket)

# --- the bracket ------------------------------------------------------------

za = WittElement.monomial(-1)           # z^-1 d/dz
zb = WittElement.monomial(2)            # z^2  d/dz
print("[z^-1 d, z^2 d] =", witt_bracket(za, zb))
# monomial rule: [z^a d, z^b d] = (b - a) z^(a+b-1) d
assert witt_bracket(za, zb) == WittElement.monomial(0, 3)

# --- first-order operators and composition -----------------------------------

op = phi(za)
x = LaurentSeries({3: 1, -2: 5})
print("z^-1 (z^3 + 5z^-2)' =", diffop_apply(op, x))
assert diffop_apply(op, x) == LaurentSeries({1: 3, -4: -10})

second = diffop_compose(phi(za), phi(zb))
print("phi(z^-1 d) o phi(z^2 d) has orders", sorted(second.terms))
assert second.max_order() == 2

# composing in both orders and subtracting recovers the bracket operator
comm = diffop_compose(phi(za), phi(zb)) - diffop_compose(phi(zb), phi(za))
assert comm == phi(witt_bracket(za, zb))

# --- the pairing witness ------------------------------------------------------

# every phi(zeta) satisfies <op x, y> + <x, op y> = 0; the witness checks
# this on all monomials up to a radius
rng = random.Random(2)
for _ in range(5):
    coeffs = {rng.randint(-5, 5): Fraction(rng.choice([-2, -1, 1, 2]))
              for _ in range(3)}
    zeta = WittElement(LaurentSeries(coeffs))
    assert sp_witness(phi(zeta), 8)
print("five random fields pass the antisymmetry witness at radius 8")

# a genuinely second-order operator fails it
bad = DiffOp({2: LaurentSeries.monomial(-2)})
assert not sp_witness(bad, 4)
print("z^-2 (d/dz)^2 is rejected, as it should be")

print("ok")
