"""Driving everything from the command line.

The console entry point is `periodjet`; this script calls the same
main() in-process. Three subcommands: info (expansion summary), compute
(any differential, JSON in, JSON out), check (the embedded invariant
suite). Identical configuration produces byte-identical JSON for info
and compute, so outputs diff cleanly across machines and runs.
"""

import io
import json
import os
import tempfile
from contextlib import redirect_stdout

from periodjet.cli import main

tmp = tempfile.mkdtemp(prefix="periodjet-demo-")
curve_path = os.path.join(tmp, "curve.json")
with open(curve_path, "w") as fh:
    json.dump({"p": ["1", "0", "0", "0", "0", "1"]}, fh)


def run(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


# --- info -----------------------------------------------------------------

code, out = run(["info", "--curve", curve_path])
assert code == 0
info = json.loads(out)
print("info: genus", info["genus"], " gaps", info["gaps_O"],
      info["gaps_Theta"], " precision", info["curve"]["precision"])

# --- compute -----------------------------------------------------------------

field = json.dumps({"trunc": 30, "coeffs": {"-1": "1"}})
code, out = run(["compute", "nu1", "--curve", curve_path,
                 "--fields", field])
assert code == 0
result = json.loads(out)["result"]
print("nu1 entries:", result["matrix"]["entries"],
      " duality-symmetric:", result["symmetry"])

pair = json.dumps([json.loads(field), json.loads(field)])
code, out = run(["compute", "ell2", "--curve", curve_path,
                 "--fields", pair])
result = json.loads(out)["result"]
print("ell2 entries:", result["matrix"]["entries"],
      " duality-symmetric:", result["symmetry"])

# byte determinism: run it again, compare the raw text
_, again = run(["compute", "ell2", "--curve", curve_path, "--fields", pair])
assert again == out
print("identical invocation gives byte-identical JSON")

# exit codes are part of the interface
code, _ = run(["compute", "elln", "--curve", curve_path,
               "--fields", json.dumps([json.loads(field)] * 5)])
print("five fields against the order cap: exit", code)
assert code == 4

code, _ = run(["info", "--curve", curve_path, "--precision", "11"])
print("precision below the floor: exit", code)
assert code == 3

# --- check ----------------------------------------------------------------------

code, out = run(["check", "--curve", curve_path])
report = json.loads(out)
print("check on this curve:", len(report["checks"]), "checks, failed =",
      report["failed"], ", exit", code)
assert code == 0

print("ok")
