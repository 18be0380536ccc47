"""Truncated formal Laurent series with exact rational coefficients.

The ambient field is H = Q((z)), stored sparsely as a finite map from
integer exponents to nonzero rationals together with a truncation order:
coefficients at exponents >= trunc are unknown, everything below is exact.
Exact Laurent polynomials carry trunc = +infinity and behave as genuinely
exact values under all operations.

Distinguished subspaces, decidable from the stored exponents:

    H+  = Q[[z]]            (no negative exponents)
    H-  = span of negative powers
    H'+ = z*Q[[z]]          (exponents >= 1)
    H'  = H'+ (+) H-        (no constant term)

The symplectic residue pairing <f,g> = Res_{z=0} f dg is nondegenerate on
H' and is the single primitive everything downstream is built from.

Scalars are `fractions.Fraction` throughout: always lowest terms, positive
denominator, arbitrary precision.
"""

import math
from fractions import Fraction

INF = math.inf


class PrecisionExhausted(Exception):
    """A coefficient (or residue) beyond the known truncation was required."""


class NonzeroResidue(Exception):
    """integrate() applied to a series with a nonzero z^-1 coefficient."""


class ZeroSeries(Exception):
    """invert()/sqrt_unit() applied to a series with no visible terms."""


class OddOrder(Exception):
    """sqrt_unit() applied to a series of odd order."""


class NonUnitLeadingCoefficient(Exception):
    """sqrt_unit() applied to a series whose leading coefficient is not 1."""


def rational_from_str(s):
    """Parse "p/q" (or a bare integer string "p") into a Fraction."""
    if not isinstance(s, str):
        raise ValueError("rational must be given as a string, got %r" % (s,))
    try:
        q = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ValueError("not a rational: %r" % (s,))
    return q


def rational_to_str(q):
    """Canonical "p/q" form: q > 0, lowest terms, denominator always shown."""
    q = Fraction(q)
    return "%d/%d" % (q.numerator, q.denominator)


class LaurentSeries(object):
    """A truncated Laurent series sum_{e < trunc} c_e z^e.

    Immutable by convention: no method mutates self, all operations return
    new instances, so values can be shared freely.
    """

    def __init__(self, coeffs=None, trunc=INF):
        if isinstance(trunc, float) and math.isinf(trunc) and trunc > 0:
            trunc = INF  # canonicalize arithmetic like INF - 1
        elif not isinstance(trunc, int) or isinstance(trunc, bool):
            raise ValueError("trunc must be an int or math.inf")
        stored = {}
        if coeffs:
            for e, c in coeffs.items():
                if not isinstance(e, int):
                    raise ValueError("exponent must be an int, got %r" % (e,))
                c = Fraction(c)
                # exponents at or beyond trunc are unknown, not storable
                if c != 0 and e < trunc:
                    stored[e] = c
        self.coeffs = stored
        self.trunc = trunc

    @classmethod
    def zero(cls, trunc=INF):
        return cls({}, trunc)

    @classmethod
    def monomial(cls, exponent, coefficient=1, trunc=INF):
        return cls({exponent: Fraction(coefficient)}, trunc)

    @classmethod
    def one(cls, trunc=INF):
        return cls({0: Fraction(1)}, trunc)

    def order(self):
        """Smallest stored exponent, or None if no terms are visible."""
        if not self.coeffs:
            return None
        return min(self.coeffs)

    def coeff(self, exponent):
        """Coefficient at the given exponent; raises beyond the truncation."""
        if exponent >= self.trunc:
            raise PrecisionExhausted(
                "coefficient at z^%d requested but series is only known "
                "below z^%s" % (exponent, self.trunc))
        return self.coeffs.get(exponent, Fraction(0))

    def is_visible_zero(self):
        """True if no nonzero coefficient is stored (zero up to trunc)."""
        return not self.coeffs

    def truncate(self, trunc):
        """Forget all coefficients at exponents >= trunc."""
        t = min(self.trunc, trunc)
        return LaurentSeries({e: c for e, c in self.coeffs.items() if e < t}, t)

    def shift(self, k):
        """Multiply by z^k (exact)."""
        return LaurentSeries({e + k: c for e, c in self.coeffs.items()},
                             self.trunc + k)

    def in_h_plus(self):
        o = self.order()
        return o is None or o >= 0

    def in_h_prime(self):
        return 0 not in self.coeffs

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.coeffs == other.coeffs and self.trunc == other.trunc

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __neg__(self):
        return LaurentSeries({e: -c for e, c in self.coeffs.items()}, self.trunc)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        t = min(self.trunc, other.trunc)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentSeries(out, t)

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def _ord_for_trunc(self):
        # the min-rule needs a starting exponent for the unknown tail;
        # for a visible zero that is the truncation itself
        o = self.order()
        return self.trunc if o is None else o

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        t = min(self.trunc + other._ord_for_trunc(),
                other.trunc + self._ord_for_trunc())
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e < t:
                    out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentSeries(out, t)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, c):
        c = Fraction(c)
        return LaurentSeries({e: c * v for e, v in self.coeffs.items()},
                             self.trunc)

    def __str__(self):
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for e in sorted(self.coeffs):
                c = self.coeffs[e]
                if e == 0:
                    parts.append(str(c))
                else:
                    mono = "z" if e == 1 else "z^%d" % e
                    if c == 1:
                        parts.append(mono)
                    elif c == -1:
                        parts.append("-" + mono)
                    else:
                        parts.append("%s*%s" % (c, mono))
            body = " + ".join(parts).replace("+ -", "- ")
        if self.trunc is INF:
            return body
        return "%s + O(z^%d)" % (body, self.trunc)

    def __repr__(self):
        return "LaurentSeries(%r, trunc=%r)" % (self.coeffs, self.trunc)


def arith(a, b, kind):
    """Field operations with truncation propagation.

    kind is one of "add", "sub", "mul", "scale"; for "scale" b is a rational
    scalar. Truncations: min(ta,tb) for add/sub, min(ta+ord b, tb+ord a) for
    mul (with ord of a visible zero taken as its truncation), unchanged for
    scale. Zero results keep the propagated truncation.
    """
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "scale":
        return a.scaled(b)
    raise ValueError("unknown arith kind %r" % (kind,))


def derive(f):
    """d/dz, termwise; the truncation drops by one."""
    return LaurentSeries({e - 1: e * c for e, c in f.coeffs.items() if e != 0},
                         f.trunc - 1)


def integrate(f):
    """Termwise antiderivative with zero constant term (lands in H').

    Requires a zero z^-1 coefficient; that coefficient must be visible.
    """
    if f.trunc < 0:
        raise PrecisionExhausted(
            "z^-1 coefficient is beyond the truncation, cannot integrate")
    if f.coeffs.get(-1, 0) != 0:
        raise NonzeroResidue("series has residue %s, not integrable in H"
                             % (f.coeffs[-1],))
    return LaurentSeries(
        {e + 1: c / (e + 1) for e, c in f.coeffs.items() if e != -1},
        f.trunc + 1)


def invert(f):
    """Multiplicative inverse, by recursive coefficient solving.

    The output is known below trunc(f) - 2*ord(f). Exact inputs (infinite
    truncation) are only invertible when they are monomials; truncate an
    exact series first to choose an output precision.
    """
    o = f.order()
    if o is None:
        if f.trunc is INF:
            raise ZeroSeries("cannot invert the zero series")
        raise ZeroSeries("no visible leading coefficient below z^%s; "
                         "cannot invert" % (f.trunc,))
    if f.trunc is INF:
        if len(f.coeffs) == 1:
            return LaurentSeries.monomial(-o, 1 / f.coeffs[o])
        raise ValueError("inverting an exact multi-term series needs a "
                         "precision: truncate() it first")
    lead = f.coeffs[o]
    # normalize to u = 1 + (higher terms), known below trunc - ord
    n = f.trunc - o
    u = {e - o: c / lead for e, c in f.coeffs.items()}
    v = [Fraction(0)] * n
    v[0] = Fraction(1)
    for i in range(1, n):
        s = Fraction(0)
        for j in range(1, i + 1):
            uj = u.get(j)
            if uj is not None and v[i - j] != 0:
                s += uj * v[i - j]
        v[i] = -s
    out = {i - o: c / lead for i, c in enumerate(v) if c != 0}
    return LaurentSeries(out, f.trunc - 2 * o)


def sqrt_unit(f):
    """Square root of a series of even order with leading coefficient 1.

    Returns the branch with leading coefficient +1; the result is known
    below trunc(f) - ord(f)/2. The coefficients solve w^2 = f directly
    (one quadratic convolution per coefficient).
    """
    o = f.order()
    if o is None:
        raise ZeroSeries("cannot take sqrt of a series with no visible terms")
    if o % 2 != 0:
        raise OddOrder("order %d is odd, no Laurent square root" % o)
    if f.coeffs[o] != 1:
        raise NonUnitLeadingCoefficient(
            "leading coefficient is %s, expected 1" % (f.coeffs[o],))
    if f.trunc is INF:
        if len(f.coeffs) == 1:
            return LaurentSeries.monomial(o // 2)
        raise ValueError("sqrt of an exact multi-term series needs a "
                         "precision: truncate() it first")
    s = o // 2
    n = f.trunc - o
    u = {e - o: c for e, c in f.coeffs.items()}
    w = [Fraction(0)] * n
    w[0] = Fraction(1)
    for i in range(1, n):
        conv = Fraction(0)
        for j in range(1, i):
            if w[j] != 0 and w[i - j] != 0:
                conv += w[j] * w[i - j]
        w[i] = (u.get(i, Fraction(0)) - conv) / 2
    out = {i + s: c for i, c in enumerate(w) if c != 0}
    return LaurentSeries(out, f.trunc - o + s)


def residue(f):
    """Coefficient of z^-1; requires it to be visible (trunc >= 0)."""
    if f.trunc < 0:
        raise PrecisionExhausted(
            "residue needs the z^-1 coefficient, series only known below "
            "z^%s" % (f.trunc,))
    return f.coeffs.get(-1, Fraction(0))


def symplectic_pair(f, g):
    """<f,g> = Res_{z=0} f dg.

    Antisymmetric on H' (integration by parts: <f,g>+<g,f> = Res d(fg) = 0
    for any f,g, without restriction). Raises PrecisionExhausted when the
    product f*g' is not known at z^-1.
    """
    return residue(f * derive(g))


def to_json(f):
    """JSON form {"trunc": int, "coeffs": {"<exp>": "p/q"}}.

    Exact series (infinite truncation) must be truncate()d first; an
    unbounded truncation is not representable in the schema.
    """
    if f.trunc is INF:
        raise ValueError("exact series has no JSON form; truncate() it first")
    return {"trunc": f.trunc,
            "coeffs": {str(e): rational_to_str(c)
                       for e, c in f.coeffs.items()}}


def from_json(obj):
    """Strict parse of the to_json() schema."""
    if not isinstance(obj, dict):
        raise ValueError("series JSON must be an object, got %r" % (obj,))
    extra = set(obj) - {"trunc", "coeffs"}
    if extra:
        raise ValueError("unknown series keys %s" % sorted(extra))
    trunc = obj.get("trunc")
    if not isinstance(trunc, int) or isinstance(trunc, bool):
        raise ValueError("series trunc must be an integer, got %r" % (trunc,))
    raw = obj.get("coeffs", {})
    if not isinstance(raw, dict):
        raise ValueError("series coeffs must be an object")
    coeffs = {}
    for k, v in raw.items():
        try:
            e = int(k)
        except (TypeError, ValueError):
            raise ValueError("exponent key %r is not an integer" % (k,))
        if e >= trunc:
            raise ValueError("coefficient at z^%d contradicts trunc %d"
                             % (e, trunc))
        coeffs[e] = rational_from_str(v)
    return LaurentSeries(coeffs, trunc)
