"""Smoke test: every demo script runs to completion."""

import pathlib
import subprocess
import sys

DEMO_DIR = pathlib.Path(__file__).resolve().parent.parent / "demos"


def test_all_demos_run_clean():
    scripts = sorted(DEMO_DIR.glob("*.py"))
    assert len(scripts) == 6
    for script in scripts:
        proc = subprocess.run([sys.executable, str(script)],
                              capture_output=True, text=True, timeout=120)
        assert proc.returncode == 0, (script.name, proc.stderr[-800:])
        assert proc.stdout.strip(), script.name
