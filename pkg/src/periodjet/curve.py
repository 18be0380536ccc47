"""Expansion data of a hyperelliptic curve at its point at infinity.

The curve is y^2 = p(x) with p monic, squarefree, of odd degree 2g+1 >= 5,
so there is exactly one point at infinity, a Weierstrass point, and the
genus is g >= 2. In the local parameter z there,

    x = z^-2,
    y = z^-(2g+1) * sqrt(z^(2(2g+1)) p(z^-2)),

with the sqrt normalized to leading coefficient 1, all coefficients
rational. From these, the expansion bundles everything the reduction and
period-map layers consume:

    k0_basis     functions x^a y^b (b in {0,1}) minus their constant term,
                 one for each realized pole order up to 4g+2; the Weierstrass
                 gaps below that cutoff number exactly g.
    theta_basis  vector fields x^a y^b * v0, v0 = (y/x') d/dz, one per
                 realized pole order up to 6g-2; gaps number exactly 3g-3.
    h10_basis    integrals g_i of the holomorphic forms x^(i-1) dx / y,
                 i = 1..g, each of positive order.

Pole orders are arithmetic here: a function x^a y^b has pole order
2a + (2g+1)b, a field x^a y^b v0 has 2a + (2g+1)b + (2g-2). Elements of
larger pole order than the public cutoffs are still constructible (the
reduction layer asks for them up to precision - 2) via element_of_pole_O /
element_of_pole_Theta; both return None at gap orders.
"""

from fractions import Fraction

from .laurent import (
    LaurentSeries, derive, integrate, invert, rational_from_str,
    rational_to_str, sqrt_unit)
from .witt import WittElement


def default_precision(genus):
    return 8 * genus + 24


def _poly_trim(c):
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def _poly_deriv(c):
    return _poly_trim([i * c[i] for i in range(1, len(c))])


def _poly_mod(a, b):
    # remainder of a by b over Q; b nonzero
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    while len(a) - 1 >= db and _poly_trim(a):
        a = _poly_trim(a)
        if len(a) - 1 < db:
            break
        q = a[-1] / lead
        shift = len(a) - 1 - db
        for i in range(len(b)):
            a[shift + i] -= q * b[i]
        a = _poly_trim(a)
    return _poly_trim(a)


def _poly_gcd(a, b):
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b)
    return a


class HyperellipticCurve(object):
    """y^2 = p(x), p monic squarefree of odd degree 2g+1 >= 5."""

    def __init__(self, p_coeffs):
        coeffs = [Fraction(c) for c in p_coeffs]
        coeffs = _poly_trim(coeffs)
        deg = len(coeffs) - 1
        if deg < 5 or deg % 2 == 0:
            raise ValueError("p must have odd degree >= 5, got degree %d"
                             % deg)
        if coeffs[-1] != 1:
            raise ValueError("p must be monic, leading coefficient is %s"
                             % coeffs[-1])
        g = _poly_gcd(coeffs, _poly_deriv(coeffs))
        if len(g) != 1:
            raise ValueError("p must be squarefree; gcd(p, p') has degree %d"
                             % (len(g) - 1))
        self.p_coeffs = coeffs
        self.genus = deg // 2

    def p_at(self, series):
        """Evaluate p on a LaurentSeries by Horner's rule."""
        acc = LaurentSeries.zero()
        for c in reversed(self.p_coeffs):
            acc = acc * series + LaurentSeries.monomial(0, c)
        return acc

    def __eq__(self, other):
        if not isinstance(other, HyperellipticCurve):
            return NotImplemented
        return self.p_coeffs == other.p_coeffs

    def __repr__(self):
        return "HyperellipticCurve(%r)" % (self.p_coeffs,)


class CurveExpansion(object):
    """All z-expansions of a curve at infinity, to a fixed precision.

    Immutable after construction apart from internal caches of
    reduction-basis elements keyed by pole order.
    """

    def __init__(self, curve, precision):
        g = curve.genus
        if precision < 4 * g + 4:
            raise ValueError("precision %d too small, need at least 4g+4 = %d"
                             % (precision, 4 * g + 4))
        self.curve = curve
        self.precision = precision

        self.x_series = LaurentSeries.monomial(-2)
        # z^(2(2g+1)) p(z^-2) is a polynomial in z^2 with constant term 1;
        # clamp it to the working precision so the sqrt has a finite job
        inner = curve.p_at(self.x_series).shift(2 * (2 * g + 1))
        self.y_series = sqrt_unit(inner.truncate(precision)).shift(-(2 * g + 1))
        self._inv_y = invert(self.y_series)

        dx = derive(self.x_series)  # -2 z^-3, exact
        self.v0_series = WittElement(self.y_series * invert(dx))

        self._o_cache = {}
        self._theta_cache = {}

        self.h10_basis = holomorphic_integrals(self)

        cutoff_o = 4 * g + 2
        cutoff_theta = 6 * g - 2
        self.k0_basis = []
        self.gaps_O = []
        for m in range(1, cutoff_o + 1):
            elem = self.element_of_pole_O(m)
            if elem is None:
                self.gaps_O.append(m)
            else:
                self.k0_basis.append((m, elem))
        self.theta_basis = []
        self.gaps_Theta = []
        for m in range(1, cutoff_theta + 1):
            elem = self.element_of_pole_Theta(m)
            if elem is None:
                self.gaps_Theta.append(m)
            else:
                self.theta_basis.append((m, elem))
        # Weierstrass gap counts; a mismatch means the cutoffs are wrong
        assert len(self.gaps_O) == g, self.gaps_O
        assert len(self.gaps_Theta) == 3 * g - 3, self.gaps_Theta

    def _monomial_pair(self, m, offset):
        """Solve 2a + (2g+1)b = m - offset with a >= 0, b in {0,1}."""
        g = self.curve.genus
        r = m - offset
        if r >= 0 and r % 2 == 0:
            return r // 2, 0
        r -= 2 * g + 1
        if r >= 0 and r % 2 == 0:
            return r // 2, 1
        return None

    def _x_power(self, a):
        return LaurentSeries.monomial(-2 * a)

    def element_of_pole_O(self, m):
        """The function x^a y^b - const of pole order m >= 1, or None.

        Leading coefficient 1; no constant term; truncation at least
        precision - m.
        """
        if m in self._o_cache:
            return self._o_cache[m]
        ab = self._monomial_pair(m, 0)
        if ab is None:
            elem = None
        else:
            a, b = ab
            elem = self._x_power(a)
            if b:
                elem = elem * self.y_series
            const = elem.coeff(0)
            if const != 0:
                elem = elem - LaurentSeries.monomial(0, const)
        self._o_cache[m] = elem
        return elem

    def element_of_pole_Theta(self, m):
        """The field x^a y^b v0 of pole order m >= 1, or None.

        Leading coefficient -1/2; truncation at least precision - m.
        """
        if m in self._theta_cache:
            return self._theta_cache[m]
        ab = self._monomial_pair(m, 2 * self.curve.genus - 2)
        if ab is None:
            elem = None
        else:
            a, b = ab
            f = self._x_power(a) * self.v0_series.f
            if b:
                f = f * self.y_series
            elem = WittElement(f)
        self._theta_cache[m] = elem
        return elem


def expand_curve(curve, precision):
    """Build the full expansion; precision must be at least 4g+4."""
    return CurveExpansion(curve, precision)


def holomorphic_integrals(exp):
    """Integrals g_i of x^(i-1) dx / y, i = 1..genus, each of order
    2(g-i)+1 > 0. The integrands only have even exponents, so the residue
    precondition of integrate() holds automatically.
    """
    dx = derive(exp.x_series)
    out = []
    xpow = LaurentSeries.one()
    for _ in range(exp.curve.genus):
        out.append(integrate(xpow * dx * exp._inv_y))
        xpow = xpow * exp.x_series
    return out


def curve_to_json(curve, precision):
    """{"p": ["<c0>", ..., "1"], "precision": N}, index = degree."""
    return {"p": [rational_to_str(c) for c in curve.p_coeffs],
            "precision": precision}


def curve_from_json(obj):
    """Parse the curve schema; returns (curve, precision or None).

    Coefficients are "p/q" strings (bare integer strings accepted).
    """
    if not isinstance(obj, dict):
        raise ValueError("curve JSON must be an object")
    extra = set(obj) - {"p", "precision"}
    if extra:
        raise ValueError("unknown curve keys %s" % sorted(extra))
    raw = obj.get("p")
    if not isinstance(raw, list) or not raw:
        raise ValueError("curve JSON needs a coefficient list under \"p\"")
    coeffs = [rational_from_str(c) for c in raw]
    precision = obj.get("precision")
    if precision is not None and (not isinstance(precision, int)
                                  or isinstance(precision, bool)):
        raise ValueError("precision must be an integer, got %r" % (precision,))
    return HyperellipticCurve(coeffs), precision
