"""Command-line front end: curve ingestion, expansion info, every
period-map differential, and an embedded invariant check suite.

Subcommands:

    periodjet info    --curve FILE [--precision N] [--out FILE]
    periodjet compute WHICH --curve FILE --fields JSON
                      [--n N] [--k K] [--precision N] [--out FILE]
    periodjet check   [--curve FILE] [--precision N] [--out FILE]

WHICH is one of nu1, ell2, ell2-lie, d2phi, nu2, ii, elln. Output is JSON
with sorted keys and canonical "p/q" rationals, so identical configuration
yields byte-identical bytes for info and compute; check reports include
wall-clock timings, which is the one non-reproducible field.

Precision resolution order: --precision flag, then the "precision" field
of the curve file, then the PERIODJET_PRECISION environment variable,
then the default 8g+24.

Exit codes: 0 success, 1 invariant failure, 2 input error, 3 precision
error, 4 unsupported order.
"""

import argparse
import json
import os
import random
import sys
import time
from fractions import Fraction

from .curve import (
    HyperellipticCurve, curve_from_json, curve_to_json, default_precision,
    expand_curve)
from .hodge import (
    UnreducibleExponent, duality_det, hom_to_json, is_symmetric_hom)
from .laurent import LaurentSeries, PrecisionExhausted, symplectic_pair
from .laurent import from_json as series_from_json
from .period import (
    UnsupportedOrder, canonical_second_rep, d2Phi, ell2, ell2_via_lie,
    ell1_n, ell1_n_contraction, ell_k_n, fundamental_form_II, jet_to_json,
    nu1, nu2, sym_sum_to_json, t2rep_from_json)
from .witt import (
    WittElement, diffop_apply, diffop_compose, phi, sp_witness, witt_bracket)

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_INPUT = 2
EXIT_PRECISION = 3
EXIT_ORDER = 4

FIXTURE_CURVES = ([1, 0, 0, 0, 0, 1],          # y^2 = x^5 + 1
                  [1, -1, 0, 0, 0, 0, 0, 1])   # y^2 = x^7 - x + 1

# frozen regression values for the two fixture curves, keyed by the
# canonical coefficient strings of p
EXPECTED_REGRESSIONS = {
    ("1/1", "0/1", "0/1", "0/1", "0/1", "1/1"): {
        "gaps_O": [1, 3],
        "gaps_Theta": [1, 3, 5],
        "duality_det": "-4/1",
        "nu1_z^-1": [["0/1", "2/1"], ["0/1", "0/1"]],
        "ell2_z^-1": [["-2/1", "0/1"], ["0/1", "2/1"]],
    },
    ("1/1", "-1/1", "0/1", "0/1", "0/1", "0/1", "0/1", "1/1"): {
        "gaps_O": [1, 3, 5],
        "gaps_Theta": [1, 2, 3, 5, 7, 9],
        "duality_det": "-8/1",
        "nu1_z^-1": [["0/1", "0/1", "2/1"],
                     ["0/1", "0/1", "0/1"],
                     ["0/1", "0/1", "0/1"]],
        "ell2_z^-1": [["0/1", "-2/1", "0/1"],
                      ["0/1", "0/1", "2/1"],
                      ["0/1", "0/1", "0/1"]],
    },
}


class JobConfig(object):
    """Resolved inputs of one invocation: the curve, the working precision,
    and the command-specific parameters."""

    def __init__(self, curve, precision, fields=None, n=None, k=None,
                 out=None):
        self.curve = curve
        self.precision = precision
        self.fields = fields
        self.n = n
        self.k = k
        self.out = out


class CheckFailure(Exception):
    """An invariant check did not hold; the message names the witness."""


def _rat_str(x):
    from .laurent import rational_to_str
    return rational_to_str(Fraction(x))


def poly_label(curve):
    """Readable form of p, e.g. 'x^5 + 1' or 'x^7 - x + 1'."""
    parts = []
    for d in range(len(curve.p_coeffs) - 1, -1, -1):
        c = curve.p_coeffs[d]
        if c == 0:
            continue
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            body = "x" if d == 1 else "x^%d" % d
            if mag != 1:
                body = "%s %s" % (mag, body)
        if not parts:
            parts.append(body if c > 0 else "-%s" % body)
        else:
            parts.append("+ %s" % body if c > 0 else "- %s" % body)
    return " ".join(parts) if parts else "0"


def _dumps(payload):
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _emit(payload, out):
    text = _dumps(payload)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _parse_series(obj):
    return series_from_json(obj)


def _parse_field_list(raw, want=None):
    """--fields JSON: a series object or a list of them."""
    if isinstance(raw, dict):
        raw = [raw]
    if not isinstance(raw, list) or not raw:
        raise ValueError("fields must be a series object or a list of them")
    fields = [WittElement(_parse_series(item)) for item in raw]
    if want is not None and len(fields) != want:
        raise ValueError("expected %d field(s), got %d" % (want, len(fields)))
    return fields


def _matrix_payload(m, exp):
    return {"matrix": hom_to_json(m), "symmetry": is_symmetric_hom(m, exp)}


def _expand(curve, precision):
    # the expansion rejects precisions below its floor with ValueError;
    # at the command line that is a precision error, not a parse error
    try:
        return expand_curve(curve, precision)
    except ValueError as e:
        raise PrecisionExhausted(str(e))


def cmd_info(config):
    exp = _expand(config.curve, config.precision)
    g = config.curve.genus
    return {
        "command": "info",
        "curve": curve_to_json(config.curve, config.precision),
        "polynomial": poly_label(config.curve),
        "genus": g,
        "gaps_O": list(exp.gaps_O),
        "gaps_Theta": list(exp.gaps_Theta),
        "k0_pole_orders": [m for m, _ in exp.k0_basis],
        "theta_pole_orders": [m for m, _ in exp.theta_basis],
        "h10_orders": [s.order() for s in exp.h10_basis],
        "dim_h1_O": len(exp.gaps_O),
        "dim_h1_Theta": len(exp.gaps_Theta),
    }


def cmd_compute(config, which):
    exp = _expand(config.curve, config.precision)
    base = {
        "command": "compute",
        "which": which,
        "curve": curve_to_json(config.curve, config.precision),
    }
    raw = config.fields
    if raw is None:
        raise ValueError("compute needs --fields")

    if which == "nu1":
        (f,) = _parse_field_list(raw, want=1)
        base["result"] = _matrix_payload(nu1(f, exp), exp)
    elif which in ("ell2", "ell2-lie"):
        f1, f2 = _parse_field_list(raw, want=2)
        fn = ell2 if which == "ell2" else ell2_via_lie
        base["result"] = _matrix_payload(fn(f1, f2, exp), exp)
    elif which == "d2phi":
        f1, f2 = _parse_field_list(raw, want=2)
        jet = d2Phi(f1, f2, exp)
        base["result"] = {
            "jet": jet_to_json(jet),
            "symmetry": {
                "linear": is_symmetric_hom(jet.linear, exp),
                "quadratic": [[is_symmetric_hom(a, exp),
                               is_symmetric_hom(b, exp)]
                              for a, b in jet.quadratic],
            },
        }
    elif which == "nu2":
        if not isinstance(raw, dict) or "upsilon" not in raw:
            raise ValueError(
                "nu2 takes a second-order representative object with "
                "upsilon and sym_pairs")
        rep = t2rep_from_json(raw)
        base["result"] = _matrix_payload(nu2(rep, exp), exp)
    elif which == "ii":
        f1, f2 = _parse_field_list(raw, want=2)
        m, interpretation = fundamental_form_II(f1, f2, exp)
        payload = _matrix_payload(m, exp)
        payload["interpretation"] = interpretation
        base["result"] = payload
    elif which == "elln":
        fields = _parse_field_list(raw)
        if config.n is not None and config.n != len(fields):
            raise ValueError("--n %d does not match %d supplied fields"
                             % (config.n, len(fields)))
        k = 1 if config.k is None else config.k
        if k == 1:
            base["result"] = _matrix_payload(ell1_n(fields, exp), exp)
        else:
            s = ell_k_n(fields, k, exp)
            base["result"] = {
                "sum": sym_sum_to_json(s),
                "symmetry": [[is_symmetric_hom(m, exp) for m in term]
                             for term in s.terms],
            }
    else:
        raise ValueError("unknown computation %r" % (which,))
    return base


# --- the embedded check suite ----------------------------------------------

def _random_sparse_field(rng, lo=-6, hi=6, max_terms=3):
    coeffs = {}
    for _ in range(rng.randint(1, max_terms)):
        coeffs[rng.randint(lo, hi)] = Fraction(
            rng.choice([-3, -2, -1, 1, 2, 3]))
    return WittElement(LaurentSeries(coeffs))


def _drop_constant(s):
    return s - LaurentSeries.monomial(0, s.coeffs.get(0, 0))


def _check_lie_homomorphism():
    for a in range(-5, 6):
        for b in range(-5, 6):
            za, zb = WittElement.monomial(a), WittElement.monomial(b)
            lhs = phi(witt_bracket(za, zb))
            rhs = diffop_compose(phi(za), phi(zb)) - \
                diffop_compose(phi(zb), phi(za))
            if lhs != rhs:
                raise CheckFailure(
                    "phi([z^%d d, z^%d d]) != commutator" % (a, b))


def _check_sp_witness():
    rng = random.Random(804)
    for i in range(50):
        zeta = _random_sparse_field(rng)
        if not sp_witness(phi(zeta), 8):
            raise CheckFailure("phi(%s) failed the pairing witness" % zeta)


def _check_pair_action_embedding():
    # The symmetric pair sum (1/2) sum_j z^-j z^(j+k) acts on x by
    # h k -> <h, x> k + <k, x> h; on a monomial z^m only j = m and
    # j = -(m+k) contribute. The target space carries no constant term,
    # so the comparison drops the degree-zero coefficient.
    for k in range(-4, 5):
        zeta = WittElement.monomial(k + 1)
        for m in range(-8, 9):
            if m == 0:
                continue
            x = LaurentSeries.monomial(m)
            acted = LaurentSeries.zero()
            for j in {m, -(m + k)}:
                if j == 0:
                    continue
                h = LaurentSeries.monomial(-j)
                kk = LaurentSeries.monomial(j + k)
                acted = acted + (
                    kk.scaled(symplectic_pair(h, x)) +
                    h.scaled(symplectic_pair(kk, x))).scaled(Fraction(1, 2))
            direct = diffop_apply(phi(zeta), x)
            if _drop_constant(acted) != _drop_constant(direct):
                raise CheckFailure(
                    "pair action disagrees with the vector field at "
                    "k=%d, m=%d" % (k, m))


def _check_curve_expansion(exp):
    g = exp.curve.genus
    resid = exp.y_series * exp.y_series - exp.curve.p_at(exp.x_series)
    if not resid.is_visible_zero():
        raise CheckFailure("y^2 - p(x) has visible terms: %s" % resid)
    for m, e in exp.k0_basis:
        for m2, e2 in exp.k0_basis:
            if symplectic_pair(e, e2) != 0:
                raise CheckFailure(
                    "<pole %d, pole %d> != 0 inside the function space"
                    % (m, m2))
        for gi in exp.h10_basis:
            if symplectic_pair(e, gi) != 0:
                raise CheckFailure(
                    "function of pole %d pairs with an integral" % m)
    if len(exp.gaps_O) != g:
        raise CheckFailure("expected %d function gaps, got %r"
                           % (g, exp.gaps_O))
    if len(exp.gaps_Theta) != 3 * g - 3:
        raise CheckFailure("expected %d field gaps, got %r"
                           % (3 * g - 3, exp.gaps_Theta))


def _check_serre_duality(exp):
    if duality_det(exp) == 0:
        raise CheckFailure("duality matrix is singular")


def _check_first_differential_vanishing(exp):
    rng = random.Random(912)
    for m, t in exp.theta_basis:
        if not nu1(t, exp).is_zero():
            raise CheckFailure("nu1 != 0 on the field of pole %d" % m)
    for e in (3, 4):
        if not nu1(WittElement.monomial(e), exp).is_zero():
            raise CheckFailure("nu1 != 0 on z^%d d/dz" % e)
    for _ in range(5):
        zeta = _random_sparse_field(rng)
        t = exp.theta_basis[0][1].scaled(rng.randint(1, 3)) + \
            WittElement.monomial(3, rng.randint(-2, 2)) + \
            WittElement.monomial(4, rng.randint(-2, 2))
        if nu1(zeta + t, exp) != nu1(zeta, exp):
            raise CheckFailure("nu1 moved under a trivial direction")


def _check_second_order_routes(exp):
    for a in range(-6, 7):
        for b in range(-6, 7):
            f1, f2 = WittElement.monomial(a), WittElement.monomial(b)
            if ell2(f1, f2, exp) != ell2_via_lie(f1, f2, exp):
                raise CheckFailure(
                    "operator and contraction routes differ at "
                    "(z^%d, z^%d)" % (a, b))


def _check_commutator_sign(exp):
    rng = random.Random(1123)
    for i in range(100):
        f1 = _random_sparse_field(rng)
        f2 = _random_sparse_field(rng)
        diff = ell2(f1, f2, exp) - ell2(f2, f1, exp)
        if diff != nu1(witt_bracket(f1, f2), exp):
            raise CheckFailure(
                "commutator identity broke with sign +1 at pair %d" % i)


def _check_second_rep_consistency(exp):
    rng = random.Random(1301)
    for i in range(50):
        zeta = _random_sparse_field(rng)
        xi = _random_sparse_field(rng)
        if nu2(canonical_second_rep(zeta, xi), exp) != ell2(zeta, xi, exp):
            raise CheckFailure(
                "canonical representative disagrees with ell2 at pair %d" % i)


def _check_higher_order_routes(exp):
    rng = random.Random(1510)
    for _ in range(5):
        f1, f2 = _random_sparse_field(rng), _random_sparse_field(rng)
        if ell1_n([f1], exp) != nu1(f1, exp):
            raise CheckFailure("order 1 does not reduce to nu1")
        if ell1_n([f1, f2], exp) != ell2(f1, f2, exp):
            raise CheckFailure("order 2 does not reduce to ell2")
    for i in range(20):
        fields = [WittElement.monomial(rng.randint(-6, 6))
                  for _ in range(3)]
        if ell1_n(fields, exp) != ell1_n_contraction(fields, exp):
            raise CheckFailure("order-3 routes differ at triple %d" % i)


def _check_fixture_regressions(exp, expected):
    want = expected.get(tuple(_rat_str(c) for c in exp.curve.p_coeffs))
    if want is None:
        return
    if list(exp.gaps_O) != want["gaps_O"]:
        raise CheckFailure("function gaps %r, expected %r"
                           % (list(exp.gaps_O), want["gaps_O"]))
    if list(exp.gaps_Theta) != want["gaps_Theta"]:
        raise CheckFailure("field gaps %r, expected %r"
                           % (list(exp.gaps_Theta), want["gaps_Theta"]))
    got_det = _rat_str(duality_det(exp))
    if got_det != want["duality_det"]:
        raise CheckFailure("duality determinant %s, expected %s"
                           % (got_det, want["duality_det"]))
    z1 = WittElement.monomial(-1)
    got = hom_to_json(nu1(z1, exp))["entries"]
    if got != want["nu1_z^-1"]:
        raise CheckFailure("nu1(z^-1 d/dz) drifted from %r" % want["nu1_z^-1"])
    got = hom_to_json(ell2(z1, z1, exp))["entries"]
    if got != want["ell2_z^-1"]:
        raise CheckFailure("ell2(z^-1, z^-1) drifted from %r"
                           % want["ell2_z^-1"])


GLOBAL_CHECKS = [
    ("lie-homomorphism", _check_lie_homomorphism),
    ("sp-witness", _check_sp_witness),
    ("pair-action-embedding", _check_pair_action_embedding),
]

CURVE_CHECKS = [
    ("curve-expansion", _check_curve_expansion),
    ("serre-duality", _check_serre_duality),
    ("first-differential-vanishing", _check_first_differential_vanishing),
    ("second-order-route-equivalence", _check_second_order_routes),
    ("commutator-sign", _check_commutator_sign),
    ("second-rep-consistency", _check_second_rep_consistency),
    ("higher-order-routes", _check_higher_order_routes),
]


def run_checks(expansions, expected=EXPECTED_REGRESSIONS):
    """Run every check over the given expansions. Returns (report, exit
    code); the report lists each check with status and timing, and names
    the first failure."""
    rows = []
    failed = None
    code = EXIT_OK

    def execute(name, curve_label, thunk):
        nonlocal failed, code
        t0 = time.perf_counter()
        try:
            thunk()
            status = "pass"
        except CheckFailure as e:
            status = "fail: %s" % e
            if failed is None:
                failed, code = name, EXIT_INVARIANT
        except (PrecisionExhausted, UnreducibleExponent) as e:
            status = "error: %s: %s" % (type(e).__name__, e)
            if failed is None:
                failed, code = name, EXIT_PRECISION
        rows.append({"name": name, "curve": curve_label, "status": status,
                     "seconds": round(time.perf_counter() - t0, 3)})

    for name, fn in GLOBAL_CHECKS:
        execute(name, None, fn)
    for exp in expansions:
        label = poly_label(exp.curve)
        for name, fn in CURVE_CHECKS:
            execute(name, label, lambda fn=fn, exp=exp: fn(exp))
        execute("fixture-regressions", label,
                lambda exp=exp: _check_fixture_regressions(exp, expected))
    return {"command": "check",
            "checks": rows,
            "failed": failed}, code


def cmd_check(config):
    if config.curve is not None:
        curves = [(config.curve, config.precision)]
    else:
        curves = []
        for coeffs in FIXTURE_CURVES:
            c = HyperellipticCurve(coeffs)
            curves.append((c, _resolve_precision(None, None, c.genus)))
    expansions = [_expand(c, p) for c, p in curves]
    return run_checks(expansions)


# --- argument plumbing ------------------------------------------------------

def _resolve_precision(flag_value, file_value, genus):
    if flag_value is not None:
        return flag_value
    if file_value is not None:
        return file_value
    env = os.environ.get("PERIODJET_PRECISION")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(
                "PERIODJET_PRECISION must be an integer, got %r" % env)
    return default_precision(genus)


def _load_job(args, need_curve):
    curve, file_precision = None, None
    if args.curve is not None:
        with open(args.curve) as fh:
            curve, file_precision = curve_from_json(json.load(fh))
    elif need_curve:
        raise ValueError("this command needs --curve")
    precision = None
    if curve is not None:
        precision = _resolve_precision(args.precision, file_precision,
                                       curve.genus)
    fields = None
    if getattr(args, "fields", None) is not None:
        fields = json.loads(args.fields)
    return JobConfig(curve, precision, fields=fields,
                     n=getattr(args, "n", None), k=getattr(args, "k", None),
                     out=args.out)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="periodjet",
        description="exact differentials of the period map of a "
                    "hyperelliptic curve")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, curve_required):
        p.add_argument("--curve", metavar="FILE", required=curve_required,
                       help="curve JSON file {\"p\": [...], \"precision\"?}")
        p.add_argument("--precision", type=int, metavar="N")
        p.add_argument("--out", metavar="FILE",
                       help="write the JSON report here instead of stdout")

    p_info = sub.add_parser("info", help="genus, gaps, basis pole orders")
    common(p_info, True)

    p_compute = sub.add_parser("compute", help="one period-map differential")
    p_compute.add_argument(
        "which",
        choices=["nu1", "ell2", "ell2-lie", "d2phi", "nu2", "ii", "elln"])
    common(p_compute, True)
    p_compute.add_argument("--fields", metavar="JSON",
                           help="series JSON, a list of them, or for nu2 a "
                                "second-order representative object")
    p_compute.add_argument("--n", type=int, metavar="N",
                           help="consistency check: number of fields (elln)")
    p_compute.add_argument("--k", type=int, metavar="K",
                           help="block count for elln (default 1)")

    p_check = sub.add_parser("check", help="run the invariant suite")
    common(p_check, False)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.subcommand == "info":
            config = _load_job(args, need_curve=True)
            payload, code = cmd_info(config), EXIT_OK
        elif args.subcommand == "compute":
            config = _load_job(args, need_curve=True)
            if args.which != "elln" and (args.n is not None
                                         or args.k is not None):
                raise ValueError("--n/--k only apply to elln")
            payload, code = cmd_compute(config, args.which), EXIT_OK
        else:
            config = _load_job(args, need_curve=False)
            payload, code = cmd_check(config)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as e:
        print("periodjet: %s" % e, file=sys.stderr)
        return EXIT_INPUT
    except (PrecisionExhausted, UnreducibleExponent) as e:
        print("periodjet: %s: %s" % (type(e).__name__, e), file=sys.stderr)
        return EXIT_PRECISION
    except UnsupportedOrder as e:
        print("periodjet: %s" % e, file=sys.stderr)
        return EXIT_ORDER
    try:
        _emit(payload, config.out)
    except OSError as e:
        print("periodjet: %s" % e, file=sys.stderr)
        return EXIT_INPUT
    return code


if __name__ == "__main__":
    sys.exit(main())
