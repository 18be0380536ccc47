"""The Witt algebra of vector fields on the punctured disc, and its image
in differential operators.

A WittElement is f(z) d/dz with f a LaurentSeries; the bracket is

    [f d/dz, g d/dz] = (f g' - g f') d/dz.

phi sends f d/dz to the first-order operator g -> f g' acting on series
without constant term. Compositions of such operators live in DiffOp, a
finite sum  g -> sum_k a_k g^(k)  with k >= 1; order-0 terms never arise
from composing phi-images, and the constructor enforces that.

sp_witness checks the symplectic-compatibility identity

    <op(z^a), z^b> = <op(z^b), z^a>

for all monomial exponents 0 < |a|,|b| <= radius. This is a finite
certificate, not a proof of membership in sp(H'). Every phi-image passes
(for x, y in H and alpha = phi(f d/dz): <alpha(x),y> - <alpha(y),x> =
Res(f x'y' + x(fy')') = Res (xfy')' = 0), while the genuinely
non-symplectic second derivative g -> g'' fails already at radius 4.
"""

from math import comb

from .laurent import LaurentSeries, arith, derive, symplectic_pair


class WittElement(object):
    """A vector field f(z) d/dz."""

    def __init__(self, f):
        if not isinstance(f, LaurentSeries):
            raise ValueError("WittElement wants a LaurentSeries coefficient")
        self.f = f

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls(LaurentSeries.monomial(exponent, coefficient))

    def in_d_plus(self):
        """Membership in d+ = H+ d/dz (vector fields regular at 0)."""
        return self.f.in_h_plus()

    def __eq__(self, other):
        if not isinstance(other, WittElement):
            return NotImplemented
        return self.f == other.f

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __neg__(self):
        return WittElement(-self.f)

    def __add__(self, other):
        if not isinstance(other, WittElement):
            return NotImplemented
        return WittElement(self.f + other.f)

    def __sub__(self, other):
        if not isinstance(other, WittElement):
            return NotImplemented
        return WittElement(self.f - other.f)

    def scaled(self, c):
        return WittElement(self.f.scaled(c))

    def __str__(self):
        return "(%s) d/dz" % (self.f,)

    def __repr__(self):
        return "WittElement(%r)" % (self.f,)


class DiffOp(object):
    """g -> sum_k a_k g^(k), finitely many orders k >= 1."""

    def __init__(self, terms=None):
        stored = {}
        if terms:
            for k, a in terms.items():
                if not isinstance(k, int) or k < 1:
                    raise ValueError("operator order must be an integer >= 1,"
                                     " got %r" % (k,))
                if not isinstance(a, LaurentSeries):
                    raise ValueError("operator coefficient must be a "
                                     "LaurentSeries")
                if not a.is_visible_zero():
                    stored[k] = a
        self.terms = stored

    @classmethod
    def zero(cls):
        return cls({})

    def max_order(self):
        return max(self.terms) if self.terms else 0

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __add__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        out = dict(self.terms)
        for k, a in other.terms.items():
            out[k] = arith(out[k], a, "add") if k in out else a
        return DiffOp(out)

    def __neg__(self):
        return DiffOp({k: -a for k, a in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self + (-other)

    def scaled(self, c):
        return DiffOp({k: a.scaled(c) for k, a in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join("(%s)*D^%d" % (self.terms[k], k)
                          for k in sorted(self.terms))

    def __repr__(self):
        return "DiffOp(%r)" % (self.terms,)


def witt_bracket(a, b):
    """[a, b] with coefficient f_a f_b' - f_b f_a'."""
    return WittElement(a.f * derive(b.f) - b.f * derive(a.f))


def phi(zeta):
    """The order-1 operator g -> f g' attached to zeta = f d/dz."""
    return DiffOp({1: zeta.f})


def diffop_apply(op, g):
    """Evaluate sum_k a_k g^(k); truncation follows the min-rule."""
    out = LaurentSeries.zero()
    for k, a in op.terms.items():
        dg = g
        for _ in range(k):
            dg = derive(dg)
        out = out + a * dg
    return out


def diffop_compose(w, v):
    """The operator g -> w(v(g)), expanded by the Leibniz rule.

    a_k D^k (b_m D^m) = a_k sum_{i=0..k} C(k,i) b_m^(k-i) D^(m+i), so order
    m+i collects a_k * C(k,i) * derive^{k-i}(b_m) over all (k, m).
    """
    acc = {}
    for k, a in w.terms.items():
        for m, b in v.terms.items():
            db = b
            derivatives = [db]
            for _ in range(k):
                db = derive(db)
                derivatives.append(db)
            # derivatives[j] = b^(j)
            for i in range(k + 1):
                piece = (a * derivatives[k - i]).scaled(comb(k, i))
                o = m + i
                acc[o] = acc[o] + piece if o in acc else piece
    return DiffOp(acc)


def sp_witness(op, radius):
    """Finite symplectic-compatibility certificate on monomials.

    True iff <op(z^a), z^b> = <op(z^b), z^a> for all a, b with
    0 < |a|, |b| <= radius. Raises PrecisionExhausted if a required
    residue is hidden by truncation.
    """
    exponents = [e for e in range(-radius, radius + 1) if e != 0]
    images = {a: diffop_apply(op, LaurentSeries.monomial(a))
              for a in exponents}
    for a in exponents:
        for b in exponents:
            if b < a:
                continue  # the identity is symmetric in (a, b)
            zb = LaurentSeries.monomial(b)
            za = LaurentSeries.monomial(a)
            if symplectic_pair(images[a], zb) != symplectic_pair(images[b], za):
                return False
    return True


def to_json(op):
    """JSON form {"terms": {"<order>": <series JSON>}}."""
    from .laurent import to_json as series_to_json
    return {"terms": {str(k): series_to_json(a)
                      for k, a in op.terms.items()}}


def from_json(obj):
    from .laurent import from_json as series_from_json
    if not isinstance(obj, dict) or set(obj) - {"terms"}:
        raise ValueError("operator JSON must be {\"terms\": {...}}")
    raw = obj.get("terms", {})
    if not isinstance(raw, dict):
        raise ValueError("operator terms must be an object")
    terms = {}
    for k, v in raw.items():
        try:
            order = int(k)
        except (TypeError, ValueError):
            raise ValueError("operator order key %r is not an integer" % (k,))
        terms[order] = series_from_json(v)
    return DiffOp(terms)
